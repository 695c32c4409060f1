#include <gtest/gtest.h>

#include "isochain/isochain.hpp"
#include "test_util.hpp"

using namespace isochain;
using testutil::expect_matrix_near;
using testutil::mat2;

TEST(Models, FamilyNames) {
  EXPECT_EQ(family_name(Triangular2x2{}), "triangular2x2");
  EXPECT_EQ(family_name(HnOpen{}), "hn_open");
  EXPECT_EQ(family_name(HnPeriodic{}), "hn_periodic");
  EXPECT_EQ(family_name(HnImpurity{}), "hn_impurity");
  EXPECT_EQ(family_name(HnRandom{}), "hn_random");
  EXPECT_EQ(family_name(PtDimer{}), "pt_dimer");
  EXPECT_EQ(family_name(RlChain{}), "rl_chain");
}

TEST(Models, TriangularEntries) {
  Triangular2x2 spec;
  spec.alpha = 2.0;
  spec.e1 = Complex(1, 0);
  spec.e2 = Complex(3, 0);
  expect_matrix_near(build_model(spec), mat2(1, 4, 0, 3), 0.0, "alpha (e2 - e1) coupling");
}

TEST(Models, OpenChainHoppings) {
  HnOpen spec{4, 1.0, 0.3};
  Matrix h = build_model(spec);
  for (int x = 0; x + 1 < 4; ++x) {
    EXPECT_NEAR(std::abs(h(x, x + 1) - Complex(-std::exp(-0.3), 0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(h(x + 1, x) - Complex(-std::exp(0.3), 0)), 0.0, 1e-15);
  }
  EXPECT_EQ(h(0, 3), Complex(0, 0));
  EXPECT_EQ(h(0, 0), Complex(0, 0));
  EXPECT_THROW(build_model(HnOpen{1, 1.0, 0.1}), InvalidSpec);
  EXPECT_THROW(build_model(HnOpen{4, 0.0, 0.1}), InvalidSpec);
}

TEST(Models, PeriodicCornersAccumulate) {
  HnPeriodic spec{5, 1.0, 0.2};
  Matrix h = build_model(spec);
  EXPECT_NEAR(std::abs(h(0, 4) - Complex(-std::exp(0.2), 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h(4, 0) - Complex(-std::exp(-0.2), 0)), 0.0, 1e-15);
  // L=2: the corner closure shares the bond with the open hopping
  Matrix h2 = build_model(HnPeriodic{2, 1.0, 0.2});
  EXPECT_NEAR(std::abs(h2(0, 1) - Complex(-std::exp(-0.2) - std::exp(0.2), 0)), 0.0, 1e-15);
}

TEST(Models, ImpurityDefaultSite) {
  Matrix h = build_model(HnImpurity{});  // L=11, default x0 = ceil(L/2) = 6
  EXPECT_NEAR(h(5, 5).real(), 1.0, 1e-15);
  for (int x = 0; x < 11; ++x)
    if (x != 5) EXPECT_EQ(h(x, x), Complex(0, 0)) << x;
  HnImpurity at3;
  at3.x0 = 3;
  at3.v = -0.5;
  EXPECT_NEAR(build_model(at3)(2, 2).real(), -0.5, 1e-15);
  HnImpurity bad;
  bad.x0 = 12;
  EXPECT_THROW(build_model(bad), InvalidSpec);
}

TEST(Models, RandomDiagonalIsCounterSeeded) {
  Matrix a = build_model(HnRandom{});
  Matrix b = build_model(HnRandom{});
  EXPECT_EQ((a - b).norm(), 0.0);
  EXPECT_DOUBLE_EQ(a(0, 0).real(), 1.9165540410682129);  // uniform_symmetric(0, 0, 2.5)
  HnRandom other;
  other.seed = 1;
  EXPECT_GT((build_model(other) - a).norm(), 0.1);
  // box = 0 reproduces the clean periodic chain exactly
  HnRandom clean;
  clean.box = 0.0;
  EXPECT_EQ((build_model(clean) - build_model(HnPeriodic{})).norm(), 0.0);
}

TEST(Models, DimerAndValidation) {
  expect_matrix_near(build_model(PtDimer{1.0, 0.5}),
                     mat2(Complex(0, 0.5), -1, -1, Complex(0, -0.5)), 0.0, "dimer");
  EXPECT_THROW(build_model(PtDimer{0.0, 0.5}), InvalidSpec);
}

TEST(Models, TwoBandChainLayout) {
  RlChain spec{3, 1.0, 0.25, 0.4};
  Matrix h = build_model(spec);
  const double u = 1.25, w = 0.75;
  ASSERT_EQ(h.rows(), 6);
  for (int x = 0; x < 6; x += 2) EXPECT_EQ(h(x, x), Complex(0, 0.4)) << x;
  for (int x = 1; x < 6; x += 2) EXPECT_EQ(h(x, x), Complex(0, -0.4)) << x;
  EXPECT_NEAR(h(0, 1).real(), -u, 1e-15);
  EXPECT_NEAR(h(1, 2).real(), -w, 1e-15);
  EXPECT_NEAR(h(2, 3).real(), -u, 1e-15);
  EXPECT_NEAR(h(0, 5).real(), -w, 1e-15);
  EXPECT_NEAR(h(5, 0).real(), -w, 1e-15);
  // real symmetric hoppings, all the non-Hermiticity sits on the diagonal
  EXPECT_EQ((h - h.transpose()).norm(), 0.0);
  EXPECT_THROW(build_model(RlChain{0, 1.0, 0.3, 0.1}), InvalidSpec);
}

TEST(AnalyticReference, EigenEquationsHoldEverywhere) {
  const std::vector<ModelSpec> specs = {
      Triangular2x2{}, HnOpen{}, HnPeriodic{}, PtDimer{1.0, 0.5}, PtDimer{1.0, 2.0},
      RlChain{6, 1.0, 0.3, 0.1}, RlChain{6, 1.0, 0.3, 2.5}};
  for (const auto& spec : specs) {
    Matrix h = build_model(spec);
    AnalyticEigensystem ref = analytic_reference(spec);
    for (Eigen::Index n = 0; n < ref.eigenvalues.size(); ++n) {
      EXPECT_LE((h * ref.phi.col(n) - ref.eigenvalues(n) * ref.phi.col(n)).norm(),
                1e-11 * std::max(1.0, h.norm()) * ref.phi.col(n).norm())
          << family_name(spec) << " phi " << n;
      EXPECT_LE((dagger(h) * ref.psi.col(n) -
                 std::conj(ref.eigenvalues(n)) * ref.psi.col(n)).norm(),
                1e-11 * std::max(1.0, h.norm()) * ref.psi.col(n).norm())
          << family_name(spec) << " psi " << n;
    }
    // closed forms resolve spectra that the numeric gate may refuse
    EXPECT_LE(spectrum_set_distance(ref.eigenvalues, spectrum(h)),
              1e-8 * std::max(1.0, h.norm()))
        << family_name(spec);
  }
}

TEST(AnalyticReference, RefusalsAndExceptionalPoints) {
  EXPECT_THROW(analytic_reference(HnImpurity{}), NoClosedForm);
  EXPECT_THROW(analytic_reference(HnRandom{}), NoClosedForm);
  EXPECT_THROW(analytic_reference(PtDimer{1.0, 1.0}), DegenerateSpectrum);
}

TEST(AnalyticReference, OpenChainGaugeProfile) {
  // phi carries e^{g(x-1)} against the flat sine, psi the inverse profile
  HnOpen spec{5, 1.0, 0.4};
  AnalyticEigensystem ref = analytic_reference(spec);
  Matrix h = build_model(spec);
  for (Eigen::Index n = 0; n < 5; ++n) {
    for (int x = 0; x < 5; ++x) {
      const double envelope = std::abs(ref.phi(x, n)) * std::exp(-0.4 * x);
      const double mirror = std::abs(ref.psi(x, n)) * std::exp(0.4 * x);
      EXPECT_NEAR(envelope, mirror, 1e-12) << n << " " << x;
    }
  }
  // spectrum is g independent: matches the g = 0 Hermitian chain
  AnalyticEigensystem flat_ref = analytic_reference(HnOpen{5, 1.0, 0.0});
  EXPECT_LE(spectrum_set_distance(ref.eigenvalues, flat_ref.eigenvalues), 1e-12);
}

TEST(SymmetryOps, DimerParity) {
  auto ops = symmetry_ops(PtDimer{});
  ASSERT_TRUE(ops.count("parity"));
  Matrix p = ops.at("parity");
  expect_matrix_near(p, mat2(0, 1, 1, 0), 0.0, "parity swap");
  EXPECT_NEAR(pt_check(build_model(PtDimer{}), p), 0.0, 1e-15);
  // broken or not, PT symmetry of the matrix itself always holds
  EXPECT_NEAR(pt_check(build_model(PtDimer{1.0, 2.0}), p), 0.0, 1e-15);
  EXPECT_THROW(symmetry_ops(HnOpen{}), UnsupportedSymmetry);
  EXPECT_THROW(pt_check(build_model(PtDimer{}), Matrix::Identity(3, 3)), InvalidSpec);
}

TEST(SymmetryOps, PeriodicShiftAndFourier) {
  HnPeriodic spec;
  Matrix h = build_model(spec);
  auto ops = symmetry_ops(spec);
  const Matrix& s = ops.at("shift");
  const Matrix& f = ops.at("fourier");
  EXPECT_LE((s * dagger(s) - Matrix::Identity(11, 11)).norm(), 1e-12);
  EXPECT_LE((s * h - h * s).norm(), 1e-12);
  Matrix d = dagger(f) * h * f;
  double offdiag = 0.0;
  for (int i = 0; i < 11; ++i)
    for (int j = 0; j < 11; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(d(i, j)));
  EXPECT_LE(offdiag, 1e-12);
}

TEST(SymmetryOps, TwoBandBlockDiagonalization) {
  RlChain spec{6, 1.0, 0.3, 0.1};
  Matrix h = build_model(spec);
  auto ops = symmetry_ops(spec);
  const Matrix& s = ops.at("shift");  // shift by one unit cell
  EXPECT_LE((s * h - h * s).norm(), 1e-12);
  const Matrix& f = ops.at("fourier");
  Matrix d = dagger(f) * h * f;
  auto blocks = rl_blocks(spec);
  ASSERT_EQ(blocks.size(), 6u);
  // d must be block diagonal with the analytic 2x2 blocks
  double err = 0.0;
  for (int b = 0; b < 6; ++b)
    err = std::max(err, (d.block(2 * b, 2 * b, 2, 2) - blocks[b]).norm());
  EXPECT_LE(err, 1e-12);
  double off = 0.0;
  for (int i = 0; i < 12; ++i)
    for (int j = 0; j < 12; ++j)
      if (i / 2 != j / 2) off = std::max(off, std::abs(d(i, j)));
  EXPECT_LE(off, 1e-12);
  // block union reproduces the full spectrum
  Vector all(12);
  int k = 0;
  for (const auto& blk : blocks) {
    Vector ev = spectrum(blk);
    all(k++) = ev(0);
    all(k++) = ev(1);
  }
  EXPECT_LE(spectrum_set_distance(all, spectrum(h)), 1e-10);
}

TEST(GaugeSymmetrize, HermitianAndIsospectral) {
  HnOpen spec{7, 1.0, 0.35};
  auto [s, sym] = gauge_symmetrize(spec);
  for (int x = 0; x < 7; ++x)
    EXPECT_NEAR(std::abs(s(x, x) - Complex(std::exp(0.35 * x), 0)), 0.0, 1e-12);
  EXPECT_TRUE(is_hermitian(sym, 1e-12));
  EXPECT_LE(spectrum_set_distance(spectrum(sym), spectrum(build_model(spec))), 1e-10);
}

TEST(SantosParams, FirstDerivativeDiscretization) {
  SantosParams p = santos_params(1.0, 0.6);
  EXPECT_NEAR(p.t, 0.8, 1e-12);
  EXPECT_NEAR(p.g, 0.5 * std::log(1.6 / 0.4), 1e-12);
  // round trip: the L=2 open chain at (t, g) equals -g' [[0, 1-k], [1+k, 0]]
  Matrix h = build_model(HnOpen{2, p.t, p.g});
  expect_matrix_near(h, mat2(0, -0.4, -1.6, 0), 1e-12, "discretized first derivative");
  // the sign of g' must survive
  SantosParams neg = santos_params(-2.0, 0.5);
  Matrix hn = build_model(HnOpen{2, neg.t, neg.g});
  expect_matrix_near(hn, mat2(0, 1.0, 3.0, 0), 1e-12, "negative g'");
  EXPECT_THROW(santos_params(0.0, 0.5), InvalidSpec);
  EXPECT_THROW(santos_params(1.0, 1.0), InvalidSpec);
}

TEST(Rng, FrozenValues) {
  EXPECT_EQ(splitmix64(0, 0), 16294208416658607535ull);
  EXPECT_EQ(splitmix64(0, 1), 7960286522194355700ull);
  EXPECT_EQ(splitmix64(42, 0), 13679457532755275413ull);
  EXPECT_DOUBLE_EQ(uniform_symmetric(0, 0, 1.0), 0.76662161642728521);
  EXPECT_DOUBLE_EQ(uniform_symmetric(0, 1, 1.0), -0.13694400590298006);
  EXPECT_DOUBLE_EQ(uniform_symmetric(7, 3, 2.5), 0.41465146514039042);
}

TEST(Rng, UniformSymmetricRange) {
  double lo = 1e9, hi = -1e9;
  for (std::uint64_t n = 0; n < 4096; ++n) {
    const double x = uniform_symmetric(123, n, 2.5);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    EXPECT_GE(x, -2.5);
    EXPECT_LT(x, 2.5);
  }
  // both halves of the box get visited
  EXPECT_LT(lo, -2.0);
  EXPECT_GT(hi, 2.0);
}
