// kaut: batch front end for the library. Reads one JSON document, writes one
// JSON report. Exit status: 0 success, 1 I/O or parse error, 2 domain error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "kaut/coherent_functor.hpp"
#include "kaut/devissage.hpp"
#include "kaut/equivalence.hpp"
#include "kaut/json_io.hpp"
#include "kaut/k0.hpp"
#include "kaut/selftest.hpp"

namespace {

using kaut::io::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
using kaut::io::need;

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

template <class F>
kaut::TorsionModule<F> module_from(const F& f, const json& j) {
  return kaut::TorsionModule<F>(kaut::io::matrix_from_json(f, need(j, "matrix")));
}

json cmd_classify(const json& in, std::uint64_t seed) {
  return kaut::io::with_field(need(in, "field"), [&](auto f) -> json {
    using F = decltype(f);
    using namespace kaut;
    const auto m = module_from(f, in);
    const auto cm = PolyMatrix<F>::characteristic(m.mat());
    const auto s = smith_normal_form(cm);
    json inv = json::array();
    bool chain = true;
    Poly<F> prod = Poly<F>::one(f);
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < diag.size(); ++i) {
      prod *= diag[i];
      if (i + 1 < diag.size()) chain = chain && divides(diag[i], diag[i + 1]);
      if (!diag[i].is_constant()) inv.push_back(io::poly_to_json(diag[i]));
    }
    const auto ed = elementary_divisors(m, seed);
    json comps = json::array();
    for (const auto& c : endo_classify(m, seed)) comps.push_back({{"m", io::poly_to_json(c.m)}, {"dim", c.module.dim()}});
    return {{"field", io::field_to_json(f)},
            {"dim", m.dim()},
            {"invariant_factors", inv},
            {"characteristic_polynomial", io::poly_to_json(prod)},
            {"elementary_divisors", io::divisor_class_to_json(ed)},
            {"is_automorphism", is_automorphism(m)},
            {"components", comps},
            {"checks",
             {{"snf_residual_zero", s.u * cm * s.v == s.d},
              {"divisibility_chain", chain},
              {"product_is_characteristic_polynomial", prod == det(cm)},
              {"rebuild_similar", similar(build_module(f, ed), m)}}}};
  });
}

json cmd_k0(const json& in, std::uint64_t seed) {
  return kaut::io::with_field(need(in, "field"), [&](auto f) -> json {
    const auto m = module_from(f, in);
    const auto c = kaut::aut_k0_class(m, seed);
    json out = kaut::io::k0_to_json(c);
    out["checks"] = {{"realization_similar", kaut::similar(kaut::realize(c), m)}};
    return out;
  });
}

json cmd_nilclass(const json& in, std::uint64_t) {
  return kaut::io::with_field(need(in, "field"), [&](auto f) -> json {
    const auto m = module_from(f, in);
    const auto c = kaut::nil_k0_class(m);
    json entries = json::array();
    for (const auto& [r, n] : c.entries) entries.push_back({{"r", r}, {"count", n}});
    return {{"field", kaut::io::field_to_json(f)}, {"entries", entries}};
  });
}

json cmd_jordan(const json& in, std::uint64_t) {
  return kaut::io::with_field(need(in, "field"), [&](auto f) -> json {
    using namespace kaut;
    if (in.contains("s") || in.contains("r")) {
      const int s = static_cast<int>(io::need_int(need(in, "s"), "s"));
      const int r = static_cast<int>(io::need_int(need(in, "r"), "r"));
      json basis = json::array();
      for (const auto& h : jordan_hom_basis(s, r, f)) {
        basis.push_back({{"p", io::poly_to_json(h.p)}, {"matrix", io::matrix_rows(hom_to_matrix(h, f))}});
      }
      return {{"s", s}, {"r", r}, {"dimension", basis.size()}, {"basis", basis}};
    }
    const auto m = module_from(f, in);
    const auto filt = devissage_filtration(m);
    const auto jt = jordan_type(m.mat());
    json blocks = json::array();
    for (auto it = jt.rbegin(); it != jt.rend(); ++it) {
      for (std::int64_t i = 0; i < it->second; ++i) blocks.push_back(it->first);
    }
    json steps = json::array();
    for (const auto& st : filt.steps) steps.push_back(io::matrix_rows(st));
    bool zero_quotients = true;
    for (std::size_t k = 0; k < filt.length(); ++k) zero_quotients = zero_quotients && induced_quotient_action(m, filt, k).is_zero();
    return {{"blocks", blocks},
            {"filtration", {{"length", filt.length()}, {"quotient_dims", filt.quotient_dims()}, {"steps", steps}}},
            {"checks", {{"quotients_trivial", zero_quotients && has_trivial_quotients(m, filt)},
                        {"length_is_nilpotency_index", filt.length() == *nilpotency_index(m.mat())}}}};
  });
}

json cmd_primary_split(const json& in, std::uint64_t seed) {
  return kaut::io::with_field(need(in, "field"), [&](auto f) -> json {
    using F = decltype(f);
    using namespace kaut;
    const auto m = module_from(f, in);
    const auto comps = primary_split(m, seed);
    json out = json::array();
    Matrix<F> p(f, m.dim(), 0), blocks(f, 0, 0);
    for (const auto& c : comps) {
      out.push_back({{"m", io::poly_to_json(c.m)},
                     {"dim", c.module.dim()},
                     {"module", io::matrix_rows(c.module.mat())},
                     {"basis", io::matrix_rows(c.basis)},
                     {"elementary_divisors", io::divisor_class_to_json(elementary_divisors(c.module, seed))}});
      p = hconcat(p, c.basis);
      blocks = direct_sum(blocks, c.module.mat());
    }
    const bool decomposes = is_invertible(p) && m.mat() * p == p * blocks;
    return {{"field", io::field_to_json(f)}, {"components", out}, {"checks", {{"block_diagonalizes", decomposes}}}};
  });
}

json cmd_fext(const json& in, std::uint64_t seed) {
  return kaut::io::with_field(need(in, "field"), [&](auto f) -> json {
    using F = decltype(f);
    using namespace kaut;
    const auto m = module_from(f, in);
    PrimaryComponent<F> c = [&] {
      if (in.contains("m")) return PrimaryComponent<F>::of(io::poly_from_json(f, in.at("m")), m);
      auto comps = endo_classify(m, seed);
      if (comps.size() > 1) fail(errc::kNotPrimary, "module has several primary components; pass \"m\"");
      if (comps.empty()) fail(errc::kInvalidArgument, "zero module needs an explicit \"m\"");
      return PrimaryComponent<F>::of(comps.front().m, m);
    }();
    const auto fwd = fext_forward(c, seed);
    const auto w = verify_adjunction(c, seed);
    json out = io::witness_to_json(w, fwd.residue);
    out["m"] = io::poly_to_json(c.m);
    out["transport_check"] = transport_check(c, seed);
    return out;
  });
}

json cmd_functor_eval(const json& in, std::uint64_t) {
  return kaut::io::with_field(need(in, "field"), [&](auto f) -> json {
    using namespace kaut;
    const auto fn = io::presentation_from_json(f, in);
    const auto d = evaluate(fn);
    json out = io::functor_data_to_json(d);
    const auto nu = in_f_prime(d);
    out["dim_functor"] = dim_functor(d);
    out["in_f_prime"] = nu ? io::nu_to_json(*nu) : json(nullptr);
    out["checks"] = {{"relations_hold", relations_hold(d)},
                     {"vanishes_beyond_bound", evaluate_dim(fn, d.s_max + 1) == 0 && evaluate_dim(fn, d.s_max + 2) == 0}};
    return out;
  });
}

json cmd_functor_devissage(const json& in, std::uint64_t seed) {
  return kaut::io::with_field(need(in, "field"), [&](auto f) -> json {
    using namespace kaut;
    const auto fn = io::presentation_from_json(f, in);
    const auto d = evaluate(fn);
    const auto res = devissage_functor(d, seed);
    json out = {{"nu", io::nu_to_json(res.nu)}, {"steps", res.steps}, {"dim_functor", dim_functor(d)}};
    if (const auto mono = find_mono(d, seed)) {
      json v = json::array();
      for (const auto& x : mono->v) v.push_back(io::elem_to_json(f, x));
      out["first_mono"] = {{"r", mono->r}, {"v", v}};
    } else {
      out["first_mono"] = nullptr;
    }
    if (in_f_prime(d)) {
      json ph = json::array();
      for (const auto& [r, n] : phi(d)) ph.push_back({{"r", r}, {"dim", n}});
      out["phi"] = ph;
    }
    return out;
  });
}

json cmd_selftest(std::uint64_t seed, bool& all_passed) {
  json criteria = json::array();
  all_passed = true;
  for (const auto& r : kaut::selftest::run_all(seed)) {
    all_passed = all_passed && r.passed();
    criteria.push_back({{"id", r.id},
                        {"name", r.name},
                        {"passed", r.passed()},
                        {"checks", r.cases},
                        {"failures", r.failures},
                        {"first_failure", r.first_failure}});
  }
  return {{"criteria", criteria}, {"passed", all_passed}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact torsion-module, K0 and coherent-functor computations"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  std::string input, output;
  std::uint64_t seed = 0;
  app.add_option("--input", input, "input JSON file");
  app.add_option("--seed", seed, "seed for all randomized steps")->capture_default_str();
  app.add_option("--output", output, "write the report here instead of stdout");
  const std::vector<std::pair<std::string, std::string>> commands{
      {"classify", "invariant factors, elementary divisors and components of a matrix"},
      {"k0", "class of an automorphism in K0"},
      {"nilclass", "Jordan-type class of a nilpotent matrix"},
      {"jordan", "Hom basis between Jordan blocks ({s, r}) or block structure of a nilpotent matrix"},
      {"primary-split", "primary decomposition of an automorphism"},
      {"fext", "residue-field transport of a primary module with unit/counit certificates"},
      {"functor-eval", "evaluate a coherent functor presentation"},
      {"functor-devissage", "decompose a coherent functor into atoms F_r"},
      {"selftest", "run the acceptance suite"}};
  for (const auto& [name, desc] : commands) app.add_subcommand(name, desc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::string bytes;
  json report = {{"command", command}, {"seed", seed}};
  int status = 0;
  try {
    json result;
    if (command == "selftest") {
      bool ok = false;
      result = cmd_selftest(seed, ok);
      if (!ok) status = 2;
    } else {
      if (input.empty()) throw kaut::io::ParseError("--input is required");
      std::ifstream is(input, std::ios::binary);
      if (!is) throw IoError("cannot read " + input);
      bytes.assign(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
      const json in = json::parse(bytes);
      if (command == "classify") result = cmd_classify(in, seed);
      else if (command == "k0") result = cmd_k0(in, seed);
      else if (command == "nilclass") result = cmd_nilclass(in, seed);
      else if (command == "jordan") result = cmd_jordan(in, seed);
      else if (command == "primary-split") result = cmd_primary_split(in, seed);
      else if (command == "fext") result = cmd_fext(in, seed);
      else if (command == "functor-eval") result = cmd_functor_eval(in, seed);
      else result = cmd_functor_devissage(in, seed);
    }
    report["result"] = std::move(result);
  } catch (const kaut::Error& e) {
    report["error"] = {{"code", e.code()}, {"message", e.what()}};
    status = 2;
  } catch (const IoError& e) {
    report["error"] = {{"code", "IOError"}, {"message", e.what()}};
    status = 1;
  } catch (const kaut::io::ParseError& e) {
    report["error"] = {{"code", "ParseError"}, {"message", e.what()}};
    status = 1;
  } catch (const json::exception& e) {
    report["error"] = {{"code", "ParseError"}, {"message", e.what()}};
    status = 1;
  }
  report["input_hash"] = fnv1a_hex(bytes);

  const std::string text = report.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(output, std::ios::binary);
    if (!os) {
      std::cerr << "cannot write " << output << "\n";
      return 1;
    }
    os << text;
  }
  return status;
}
