#pragma once

#include <gtest/gtest.h>

#include "isochain/isochain.hpp"

namespace isochain::testutil {

inline Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline void expect_matrix_near(const Matrix& got, const Matrix& want, double tol,
                               const char* what) {
  ASSERT_EQ(got.rows(), want.rows()) << what;
  ASSERT_EQ(got.cols(), want.cols()) << what;
  EXPECT_LE((got - want).norm(), tol) << what << ": got\n" << got << "\nwant\n" << want;
}

// Random complex matrix from the counter-based generator, entries in the
// centered unit box. Deterministic in (seed).
inline Matrix seeded_matrix(std::uint64_t seed, Eigen::Index n) {
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = Complex(uniform_symmetric(seed, std::uint64_t(i * n + j), 1.0),
                        uniform_symmetric(seed + 1, std::uint64_t(i * n + j), 1.0));
  return m;
}

inline int count_real(const Vector& ev, double tol_real) {
  const double thresh = tol_real * (1.0 + spectral_radius_of(ev));
  int n = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (std::abs(ev(i).imag()) <= thresh) ++n;
  return n;
}

inline const CheckResult& find_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  ADD_FAILURE() << "missing check row " << name;
  static CheckResult hole;
  return hole;
}

inline bool has_check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return true;
  return false;
}

}  // namespace isochain::testutil
