#include <gtest/gtest.h>

#include "isochain/isochain.hpp"
#include "test_util.hpp"

using namespace isochain;
using testutil::find_check;
using testutil::has_check;

namespace {

std::pair<BiorthogonalSystem, MetricPair> seed_and_metrics(const ModelSpec& spec,
                                                           bool analytic) {
  BiorthogonalSystem b =
      analytic ? analytic_biorthogonal(spec) : build_biorthogonal(build_model(spec));
  return {b, build_metrics(b, "0")};
}

}  // namespace

TEST(ClassifySpectrum, ThresholdScalesWithRadius) {
  Vector zeros = Vector::Zero(3);
  EXPECT_EQ(classify_spectrum(zeros, 1e-8), SpectrumClass::all_real);

  Vector mixed(2);
  mixed << Complex(1, 0), Complex(0, 1);
  EXPECT_EQ(classify_spectrum(mixed, 1e-8), SpectrumClass::mixed);

  Vector imag(2);
  imag << Complex(0, -2), Complex(0, 2);
  EXPECT_EQ(classify_spectrum(imag, 1e-8), SpectrumClass::all_imaginary);

  // noise below tol_real * (1 + radius) reads as real
  Vector noisy(2);
  noisy << Complex(100.0, 5e-7), Complex(-100.0, -5e-7);
  EXPECT_EQ(classify_spectrum(noisy, 1e-8), SpectrumClass::all_real);
  EXPECT_EQ(classify_spectrum(noisy, 1e-12), SpectrumClass::mixed);

  EXPECT_STREQ(to_string(SpectrumClass::all_real), "all_real");
  EXPECT_STREQ(to_string(SpectrumClass::mixed), "mixed");
}

TEST(Theorem1Suite, RealSpectrumPassesAllItems) {
  auto [b, m] = seed_and_metrics(HnOpen{}, true);
  VerificationReport rep = theorem1_suite(build_model(HnOpen{}), b, m);
  EXPECT_EQ(rep.spectrum_class, SpectrumClass::all_real);
  EXPECT_TRUE(rep.pseudo_hermitian);
  EXPECT_TRUE(rep.all_passed());
  for (const char* name : {"theorem1.intertwine_s_psi", "theorem1.intertwine_s_phi",
                           "theorem1.sharp_fixed_point", "theorem1.flat_fixed_point_dag"}) {
    const CheckResult& c = find_check(rep, name);
    EXPECT_TRUE(c.passed) << name;
    EXPECT_FALSE(c.asserted) << name;  // informational; the biconditional gates
  }
  EXPECT_TRUE(find_check(rep, "theorem1.biconditional").asserted);
  EXPECT_TRUE(find_check(rep, "theorem1.biconditional").passed);
}

TEST(Theorem1Suite, MixedSpectrumFailsAllItems) {
  auto [b, m] = seed_and_metrics(HnPeriodic{}, true);
  VerificationReport rep = theorem1_suite(build_model(HnPeriodic{}), b, m);
  EXPECT_EQ(rep.spectrum_class, SpectrumClass::mixed);
  EXPECT_FALSE(rep.pseudo_hermitian);
  EXPECT_TRUE(rep.all_passed());  // failing non-asserted rows are consistent here
  for (const char* name : {"theorem1.intertwine_s_psi", "theorem1.sharp_fixed_point"}) {
    EXPECT_FALSE(find_check(rep, name).passed) << name;
  }
}

TEST(Theorem1Suite, FakeMetricsAreInconsistent) {
  // identity metrics neither intertwine the triangular model nor commute with
  // daggering, contradicting its all-real spectrum
  Triangular2x2 spec;
  BiorthogonalSystem b = analytic_biorthogonal(spec);
  MetricPair fake;
  fake.level_label = "0";
  fake.s_phi = Matrix::Identity(2, 2);
  fake.s_psi = Matrix::Identity(2, 2);
  fake.inv_residual = 0.0;
  fake.cond_phi = 1.0;
  EXPECT_THROW(theorem1_suite(build_model(spec), b, fake), InconsistentEquivalence);
}

TEST(Remark1Suite, BrokenDimerAntiIntertwines) {
  PtDimer broken{1.0, 2.0};
  auto [b, m] = seed_and_metrics(broken, true);
  VerificationReport rep = remark1_suite(build_model(broken), b, m);
  EXPECT_EQ(rep.spectrum_class, SpectrumClass::all_imaginary);
  EXPECT_FALSE(rep.pseudo_hermitian);
  EXPECT_TRUE(rep.all_passed());
  for (const char* name :
       {"remark1.anti_intertwine_s_psi", "remark1.anti_intertwine_s_phi",
        "remark1.anti_sharp_fixed_point", "remark1.anti_flat_fixed_point_dag"}) {
    const CheckResult& c = find_check(rep, name);
    EXPECT_TRUE(c.passed) << name;
    EXPECT_TRUE(c.asserted) << name;
  }
  // the rotated matrix -iH re-enters the real-spectrum criterion
  EXPECT_TRUE(has_check(rep, "remark1.rotated.theorem1.sharp_fixed_point"));
  EXPECT_TRUE(find_check(rep, "remark1.rotated.theorem1.sharp_fixed_point").passed);
  EXPECT_TRUE(find_check(rep, "remark1.rotated.theorem1.biconditional").passed);
}

TEST(Remark1Suite, RejectsWrongClass) {
  auto [b, m] = seed_and_metrics(HnOpen{}, true);
  EXPECT_THROW(remark1_suite(build_model(HnOpen{}), b, m), WrongSpectrumClass);
}

TEST(FullSuite, OpenChainAllGreen) {
  HnOpen spec;
  ChainTree t = grow_chain(build_model(spec), analytic_biorthogonal(spec), 3);
  VerificationReport rep = full_suite(t);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.spectrum_class, SpectrumClass::all_real);
  EXPECT_TRUE(rep.pseudo_hermitian);
  // structural rows all present
  for (const char* name :
       {"seed.gram", "seed.resolution", "seed.dual_crosscheck", "metric.0.inverse_pair",
        "metric.2b.positive_s_psi", "basis.1.gram", "node.flat2b.certificate",
        "node.sharp2adag.isospectral", "intertwine.flat0", "involution.level0",
        "involution.level2b", "power.s_phi_1_vs_s_phi_0_pow3", "theorem1.biconditional"}) {
    EXPECT_TRUE(has_check(rep, name)) << name;
  }
  // depth >= 2 carries the informational level-1 sharp drift note
  bool found_drift_note = false;
  for (const auto& n : rep.notes)
    if (n.find("level-1") != std::string::npos) found_drift_note = true;
  EXPECT_TRUE(found_drift_note);
}

TEST(FullSuite, MixedSeedRunsTheoremExpectingFailure) {
  HnPeriodic spec;
  ChainTree t = grow_chain(build_model(spec), analytic_biorthogonal(spec), 3);
  VerificationReport rep = full_suite(t);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.spectrum_class, SpectrumClass::mixed);
  EXPECT_FALSE(rep.pseudo_hermitian);
  EXPECT_FALSE(find_check(rep, "theorem1.sharp_fixed_point").passed);
  EXPECT_TRUE(find_check(rep, "theorem1.biconditional").passed);
}

TEST(FullSuite, BrokenDimerRunsRemark) {
  PtDimer broken{1.0, 2.0};
  ChainTree t = grow_chain(build_model(broken), analytic_biorthogonal(broken), 3);
  VerificationReport rep = full_suite(t);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.spectrum_class, SpectrumClass::all_imaginary);
  EXPECT_TRUE(has_check(rep, "remark1.anti_sharp_fixed_point"));
  EXPECT_TRUE(has_check(rep, "remark1.rotated.theorem1.biconditional"));
}

TEST(FullSuite, DepthZeroSkipsRealityCriteria) {
  HnOpen spec;
  ChainTree t = grow_chain(build_model(spec), analytic_biorthogonal(spec), 0);
  VerificationReport rep = full_suite(t);
  EXPECT_TRUE(rep.all_passed());
  EXPECT_FALSE(has_check(rep, "theorem1.biconditional"));
  bool found = false;
  for (const auto& n : rep.notes)
    if (n.find("depth 0") != std::string::npos) found = true;
  EXPECT_TRUE(found);
}

TEST(FullSuite, DeterministicReports) {
  HnPeriodic spec;
  ChainTree a = grow_chain(build_model(spec), analytic_biorthogonal(spec), 3);
  ChainTree b = grow_chain(build_model(spec), analytic_biorthogonal(spec), 3);
  EXPECT_EQ(report_to_json(full_suite(a)), report_to_json(full_suite(b)));
}

TEST(FamilyNotes, TriangularDiscrepancyReport) {
  Triangular2x2 spec;
  ChainTree t = grow_chain(build_model(spec), analytic_biorthogonal(spec), 2);
  auto notes = family_notes(spec, t);
  ASSERT_EQ(notes.size(), 3u);
  bool authoritative = false, quadratic = false;
  for (const auto& n : notes) {
    if (n.find("triple product is authoritative") != std::string::npos) authoritative = true;
    if (n.find("(1+a^2)^2") != std::string::npos) quadratic = true;
  }
  EXPECT_TRUE(authoritative);
  EXPECT_TRUE(quadratic);
  // other families have nothing to add
  EXPECT_TRUE(family_notes(HnOpen{}, t).empty());
}
