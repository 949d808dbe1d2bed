#pragma once

#include <gtest/gtest.h>

#include <string>

#include "kaut/coherent_functor.hpp"
#include "kaut/devissage.hpp"
#include "kaut/equivalence.hpp"
#include "kaut/extension_field.hpp"
#include "kaut/factor.hpp"
#include "kaut/k0.hpp"
#include "kaut/oracles.hpp"
#include "kaut/prime_field.hpp"
#include "kaut/random.hpp"
#include "kaut/rational_field.hpp"
#include "kaut/residue_field.hpp"

namespace kt {

using namespace kaut;

using FpPoly = Poly<PrimeField>;
using QPoly = Poly<RationalField>;
using FpMat = Matrix<PrimeField>;
using QMat = Matrix<RationalField>;

inline FpPoly fp(std::uint64_t p, std::vector<std::int64_t> c) { return FpPoly::from_ints(PrimeField(p), c); }
inline QPoly qp(std::vector<std::int64_t> c) { return QPoly::from_ints(RationalField(), c); }
inline FpMat fm(std::uint64_t p, std::vector<std::vector<std::int64_t>> rows) { return FpMat::from_ints(PrimeField(p), rows); }
inline QMat qm(std::vector<std::vector<std::int64_t>> rows) { return QMat::from_ints(RationalField(), rows); }
inline GaloisField f4() { return make_galois_field(2, {1, 1, 1}); }

template <Field F>
TorsionModule<F> mod(const Matrix<F>& a) {
  return TorsionModule<F>(a);
}

}  // namespace kt

/// EXPECT that `stmt` throws kaut::Error with the given code.
#define EXPECT_KAUT_ERROR(stmt, code_str)                                 \
  do {                                                                    \
    try {                                                                 \
      stmt;                                                               \
      ADD_FAILURE() << "expected " << code_str << ", nothing thrown";     \
    } catch (const kaut::Error& e) {                                      \
      EXPECT_EQ(e.code(), std::string(code_str)) << e.what();             \
    }                                                                     \
  } while (0)
