#pragma once

#include <cstddef>
#include <vector>

#include "kaut/error.hpp"
#include "kaut/matrix.hpp"
#include "kaut/quotient.hpp"
#include "kaut/torsion_module.hpp"

namespace kaut {

/// Chain 0 = T_0 < T_1 < ... < T_l = F^d of t-invariant subspaces (basis
/// columns) with t T_{k+1} inside T_k.
template <Field F>
struct Filtration {
  std::vector<Matrix<F>> steps;

  std::size_t length() const { return steps.empty() ? 0 : steps.size() - 1; }
  std::vector<std::size_t> quotient_dims() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k + 1 < steps.size(); ++k) out.push_back(steps[k + 1].cols() - steps[k].cols());
    return out;
  }
};

/// T_k = ker A^k for a nilpotent A; the length is the nilpotency index.
template <Field F>
Filtration<F> devissage_filtration(const TorsionModule<F>& m) {
  const auto& a = m.mat();
  auto l = nilpotency_index(a);
  if (!l) fail(errc::kNotNilpotent, "devissage filtration needs a nilpotent endomorphism");
  Filtration<F> filt;
  Matrix<F> p = Matrix<F>::identity(m.field(), m.dim());
  for (std::size_t k = 0; k <= *l; ++k) {
    filt.steps.push_back(kernel(p));
    p = p * a;
  }
  return filt;
}

/// Matrix of the endomorphism induced by A on T_{k+1}/T_k.
template <Field F>
Matrix<F> induced_quotient_action(const TorsionModule<F>& m, const Filtration<F>& filt, std::size_t k) {
  const auto& lower = filt.steps.at(k);
  const auto& upper = filt.steps.at(k + 1);
  // coordinates relative to the basis of T_{k+1}
  Matrix<F> action = solve(upper, m.mat() * upper);
  Quotient<F> q(solve(upper, lower), upper.cols());
  return induced_map(action, q, q);
}

/// t T_{k+1} lies in T_k for every k.
template <Field F>
bool has_trivial_quotients(const TorsionModule<F>& m, const Filtration<F>& filt) {
  for (std::size_t k = 0; k + 1 < filt.steps.size(); ++k) {
    const auto& lower = filt.steps[k];
    if (rank(hconcat(lower, m.mat() * filt.steps[k + 1])) != lower.cols()) return false;
  }
  return true;
}

}  // namespace kaut
