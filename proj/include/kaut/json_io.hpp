#pragma once

// JSON encodings of fields, elements, polynomials, matrices and the
// library's result types. Requires nlohmann/json (single header json.hpp).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "kaut/coherent_functor.hpp"
#include "kaut/equivalence.hpp"
#include "kaut/extension_field.hpp"
#include "kaut/k0.hpp"
#include "kaut/prime_field.hpp"
#include "kaut/rational_field.hpp"
#include "kaut/torsion_module.hpp"

namespace kaut::io {

using json = nlohmann::json;

/// Malformed input (as opposed to a mathematical precondition failure).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline std::int64_t need_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

// -- elements ----------------------------------------------------------------

inline json rational_to_json(const mpq_class& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

inline mpq_class rational_from_json(const json& j) {
  if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<std::int64_t>()));
  if (!j.is_string()) throw ParseError("rational must be an integer or an \"a/b\" string");
  mpq_class q;
  if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) throw ParseError("malformed rational \"" + j.get<std::string>() + "\"");
  q.canonicalize();
  return q;
}

template <Field F>
json elem_to_json(const F& f, const typename F::Elem& a) {
  if constexpr (std::same_as<F, PrimeField>) {
    return a;
  } else if constexpr (std::same_as<F, RationalField>) {
    return rational_to_json(a);
  } else {
    json arr = json::array();
    for (const auto& c : a) arr.push_back(elem_to_json(f.base(), c));
    return arr;
  }
}

template <Field F>
typename F::Elem elem_from_json(const F& f, const json& j) {
  if constexpr (std::same_as<F, PrimeField>) {
    return f.from_int(need_int(j, "prime field element"));
  } else if constexpr (std::same_as<F, RationalField>) {
    return rational_from_json(j);
  } else {
    if (!j.is_array()) return f.embed_base(elem_from_json(f.base(), j));
    if (j.size() > static_cast<std::size_t>(f.degree())) throw ParseError("extension element has too many coefficients");
    std::vector<typename F::Elem::value_type> c;
    for (const auto& x : j) c.push_back(elem_from_json(f.base(), x));
    return f.from_poly(Poly<std::decay_t<decltype(f.base())>>(f.base(), std::move(c)));
  }
}

// -- polynomials, matrices, fields -------------------------------------------

template <Field F>
json poly_to_json(const Poly<F>& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(elem_to_json(p.field(), c));
  return arr;
}

template <Field F>
Poly<F> poly_from_json(const F& f, const json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a coefficient array");
  std::vector<typename F::Elem> c;
  for (const auto& x : j) c.push_back(elem_from_json(f, x));
  return Poly<F>(f, std::move(c));
}

inline json descriptor_to_json(const FieldDescriptor& d) {
  switch (d.kind) {
    case FieldDescriptor::Kind::Prime:
      return {{"kind", "prime"}, {"p", d.p}};
    case FieldDescriptor::Kind::Rationals:
      return {{"kind", "rationals"}};
    case FieldDescriptor::Kind::Extension:
      break;
  }
  if (d.over_rationals()) {
    json m = json::array();
    for (const auto& c : d.rational_modulus) m.push_back(rational_to_json(c));
    return {{"kind", "extension"}, {"base", "rationals"}, {"modulus", m}};
  }
  return {{"kind", "extension"}, {"p", d.p}, {"modulus", d.modulus}};
}

template <Field F>
json field_to_json(const F& f) {
  return descriptor_to_json(f.descriptor());
}

/// Calls fn with the field described by `j`: PrimeField, GaloisField or
/// RationalField. Number fields are output-only.
template <class Fn>
decltype(auto) with_field(const json& j, Fn&& fn) {
  const json& kind = need(j, "kind");
  if (!kind.is_string()) throw ParseError("field kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "prime") {
    const auto p = need_int(need(j, "p"), "p");
    if (p < 2) fail(errc::kNotPrime, "p must be a prime >= 2");
    return fn(PrimeField(static_cast<std::uint64_t>(p)));
  }
  if (k == "rationals") return fn(RationalField());
  if (k == "extension") {
    if (j.contains("base")) fail(errc::kUnsupportedField, "number fields are not accepted as input");
    const auto p = need_int(need(j, "p"), "p");
    if (p < 2) fail(errc::kNotPrime, "p must be a prime >= 2");
    const PrimeField fp(static_cast<std::uint64_t>(p));
    return fn(GaloisField(fp, poly_from_json(fp, need(j, "modulus"))));
  }
  throw ParseError("unknown field kind \"" + k + "\"");
}

template <Field F>
json matrix_rows(const Matrix<F>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.field(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Field F>
json matrix_to_json(const Matrix<F>& m) {
  return {{"field", field_to_json(m.field())}, {"matrix", matrix_rows(m)}};
}

template <Field F>
Matrix<F> matrix_from_json(const F& f, const json& rows) {
  if (!rows.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t n = rows.size();
  const std::size_t cols = n == 0 ? 0 : rows[0].size();
  Matrix<F> m(f, n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != cols) throw ParseError("matrix rows must have equal length");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = elem_from_json(f, rows[i][j]);
  }
  return m;
}

// -- result types ------------------------------------------------------------

template <Field F>
json divisor_class_to_json(const DivisorClass<F>& c) {
  json out = json::array();
  for (const auto& [k, mult] : c.entries) out.push_back({{"m", poly_to_json(k.m)}, {"r", k.r}, {"mult", mult}});
  return out;
}

template <Field F>
json k0_to_json(const K0Class<F>& c) {
  json entries = json::array();
  for (const auto& [k, coeff] : c.entries) entries.push_back({{"m", poly_to_json(k.m)}, {"r", k.r}, {"coeff", coeff}});
  return {{"field", field_to_json(c.field)}, {"entries", entries}};
}

template <Field F>
K0Class<F> k0_from_json(const F& f, const json& j) {
  K0Class<F> c(f);
  for (const auto& e : need(j, "entries")) {
    c.add(poly_from_json(f, need(e, "m")), static_cast<int>(need_int(need(e, "r"), "r")), need_int(need(e, "coeff"), "coeff"));
  }
  return c;
}

inline json nu_to_json(const NuVector& nu) {
  json out = json::array();
  for (const auto& [r, n] : nu) out.push_back({{"r", r}, {"count", n}});
  return out;
}

template <Field F>
json witness_to_json(const FExtWitness<F>& w, const ResidueField<F>& res) {
  return {{"source", matrix_to_json(w.source.mat())},
          {"residue_field", field_to_json(res.field())},
          {"alpha", elem_to_json(res.field(), res.alpha())},
          {"target", matrix_to_json(w.target.mat())},
          {"back", matrix_to_json(w.back.mat())},
          {"unit_matrix", matrix_to_json(w.unit)},
          {"counit_matrix", matrix_to_json(w.counit)},
          {"checks",
           {{"unit_invertible", w.unit_invertible},
            {"unit_natural", w.unit_natural},
            {"counit_invertible", w.counit_invertible},
            {"counit_natural", w.counit_natural},
            {"round_trip_similar", w.round_trip_similar},
            {"nil_class_preserved", w.nil_class_preserved},
            {"dimension_identity", w.dimension_identity}}},
          {"valid", w.valid()}};
}

template <Field F>
CoherentFunctor<F> presentation_from_json(const F& f, const json& j) {
  auto sizes = [](const json& a, const char* what) {
    if (!a.is_array()) throw ParseError(std::string(what) + " must be an array of block sizes");
    std::vector<int> out;
    for (const auto& x : a) out.push_back(static_cast<int>(need_int(x, what)));
    return out;
  };
  auto src = sizes(need(j, "source"), "source");
  auto tgt = sizes(need(j, "target"), "target");
  const json& b = need(j, "beta");
  if (!b.is_array()) throw ParseError("beta must be an array of rows");
  std::vector<std::vector<Poly<F>>> beta;
  for (const auto& row : b) {
    if (!row.is_array()) throw ParseError("beta rows must be arrays");
    std::vector<Poly<F>> r;
    for (const auto& e : row) r.push_back(poly_from_json(f, e.is_object() ? need(e, "p") : e));
    beta.push_back(std::move(r));
  }
  return presentation_make(f, std::move(src), std::move(tgt), beta);
}

template <Field F>
json functor_data_to_json(const FunctorData<F>& d) {
  json t = json::array(), u = json::array(), dd = json::array();
  for (int s = 1; s <= d.s_max; ++s) {
    t.push_back(matrix_rows(d.t_map(s)));
    u.push_back(matrix_rows(d.u_map(s)));
    dd.push_back(matrix_rows(d.d_map(s)));
  }
  return {{"s_max", d.s_max}, {"dims", d.dims()}, {"t", t}, {"u", u}, {"d", dd}};
}

}  // namespace kaut::io
