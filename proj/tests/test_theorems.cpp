#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "tgc/error.hpp"
#include "tgc/theorems.hpp"

using namespace tgc;
using namespace tgc::testing;

namespace {

ErrorKind kindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

RadiusGrid standardGrid(int count = 20) { return RadiusGrid::make(2.0, 100.0, count, Spacing::Log); }

SMTConfig flatConfig(ProjectiveCurve f, std::vector<HomogeneousPolynomial> s, int count = 20) {
  int k = f.k();
  return SMTConfig{LinearSystemBasis::fermat(k, 1), std::move(s), std::move(f), standardGrid(count)};
}

bool hasWarning(const SMTReport& r, const std::string& needle) {
  return std::any_of(r.warnings.begin(), r.warnings.end(),
                     [&](const std::string& w) { return w.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Coefficient, Examples) {
  EXPECT_EQ(smtCoefficient(1, 1, 3), 1);
  EXPECT_EQ(smtCoefficient(2, 1, 5), 2);
  EXPECT_EQ(smtCoefficient(2, 2, 5), 2);
  EXPECT_EQ(smtCoefficient(2, 2, 2), -1);
  EXPECT_EQ(smtCoefficient(3, 2, 10), mpq_class(10) - mpq_class(2) - mpq_class(6));
}

TEST(Coefficient, CartanSpecialization) {
  for (int k = 1; k <= 12; ++k) {
    for (int q = 1; q <= 40; ++q) EXPECT_EQ(smtCoefficient(k, 1, q), q - (k + 1));
  }
}

TEST(ErrorTerm, Examples) {
  EXPECT_NEAR(smtErrorTermPrincipal(2, 0.1, 1.0, 10.0, 5.0), 217.8, 1e-9);
  EXPECT_NEAR(smtErrorTermPrincipal(1, 0.5, 0.0, 100.0, 5.0), 150.0, 1e-9);
  EXPECT_LT(smtErrorTermPrincipal(3, 1e-9, 0.0, 1e6, 5.0), 1e-1);
  EXPECT_NEAR(smtErrorTermPrincipal(1, 0.1, 0.0, 0.0, std::exp(2.0), 3.0), 6.0, 1e-12);
  EXPECT_EQ(logPlus(0.5), 0.0);
  EXPECT_NEAR(logPlus(std::exp(1.5)), 1.5, 1e-12);
}

TEST(SMT, CartanThreePoints) {
  SMTReport r = smtVerify(flatConfig(curve({"1", "z"}), sigmas({"X1", "X1 - X0", "X0"}, 2)));
  EXPECT_EQ(r.coefficient, 1);
  EXPECT_TRUE(r.strict);
  EXPECT_TRUE(r.overall);
  for (const auto& row : r.rows) {
    EXPECT_NEAR(row.lhs, std::log(row.r), 1e-8);
    EXPECT_GE(row.margin, std::log(row.r) - 1e-8);
  }
}

TEST(SMT, FlatConic) {
  SMTReport r = smtVerify(flatConfig(curve({"1", "z", "z^2"}), sigmas({"X0", "X1", "X2", "X0 + X1 + X2"}, 3)));
  EXPECT_EQ(r.coefficient, 1);
  EXPECT_TRUE(r.strict);
  EXPECT_TRUE(r.warnings.empty()) << r.warnings.front();
}

TEST(SMT, FermatConics) {
  SMTConfig c{LinearSystemBasis::fermat(1, 2),
              sigmas({"X1^2 - 1/4*X0^2", "X1^2 + 1/4*X0^2", "X1^2 - 1/9*X0^2", "X1^2 + 1/9*X0^2",
                      "X1^2 - 1/16*X0^2", "X1^2 + 1/16*X0^2"},
                     2),
              curve({"1", "z"}), standardGrid()};
  SMTReport r = smtVerify(c);
  EXPECT_EQ(r.coefficient, 5);
  EXPECT_TRUE(r.strict);
  EXPECT_TRUE(hasWarning(r, "not verified"));
  EXPECT_FALSE(hasWarning(r, "normal"));
}

TEST(SMT, Rejections) {
  EXPECT_EQ(kindOf([] { smtVerify(flatConfig(curve({"1", "z", "2*z"}), sigmas({"X0", "X1", "X2"}, 3))); }),
            ErrorKind::DegenerateCurve);
  SMTConfig outside{LinearSystemBasis::fermat(1, 2), sigmas({"X0 X1"}, 2), curve({"1", "z"}), standardGrid()};
  EXPECT_EQ(kindOf([&] { smtVerify(outside); }), ErrorKind::InvalidInput);
  SMTConfig wrongDegree{LinearSystemBasis::fermat(1, 2), sigmas({"X0"}, 2), curve({"1", "z"}), standardGrid()};
  EXPECT_THROW(smtVerify(wrongDegree), Error);
}

TEST(SMT, NonPositiveCoefficientNote) {
  SMTConfig c{LinearSystemBasis::fermat(2, 2), sigmas({"X1^2 - X0^2", "X2^2 - 4*X0^2"}, 3),
              curve({"1", "z", "z^2 + 3"}), standardGrid(8)};
  SMTReport r = smtVerify(c);
  EXPECT_LT(sgn(r.coefficient), 0);
  EXPECT_TRUE(hasWarning(r, "holds trivially"));
  EXPECT_TRUE(r.overall);
}

TEST(SMT, GeneralPositionWarning) {
  SMTReport r = smtVerify(flatConfig(curve({"1", "z"}), sigmas({"X1", "2*X1", "X0"}, 2), 8));
  EXPECT_TRUE(hasWarning(r, "general position"));
}

TEST(SMT, FlatConfigurationsProperty) {
  std::mt19937 rng(50);
  int verified = 0;
  for (int t = 0; t < 60 && verified < 12; ++t) {
    int k = 1 + t % 2;
    ProjectiveCurve f = randomCurve(rng, k);
    std::vector<HomogeneousPolynomial> s;
    int q = k + 2 + t % 3;
    for (int j = 0; j < q; ++j) s.push_back(randomHomogeneous(rng, k + 1, 1, k + 1));
    if (!hyperplanesInGeneralPosition(s)) continue;
    bool zero = std::any_of(s.begin(), s.end(), [&](const auto& h) { return pullback(f, h).isZero(); });
    if (zero) continue;
    SMTReport r = smtVerify(flatConfig(f, s, 12));
    // roots outside the grid leave an O(1) deficit at small r, so only the
    // constant-tolerant verdict is a theorem here
    EXPECT_TRUE(r.overall) << "config " << t;
    EXPECT_GT(r.rows.back().margin, 0.0) << "config " << t;
    ++verified;
  }
  EXPECT_EQ(verified, 12);
}

TEST(GeneralPosition, Hyperplanes) {
  EXPECT_TRUE(hyperplanesInGeneralPosition(sigmas({"X0", "X1", "X2", "X0 + X1 + X2"}, 3)));
  EXPECT_FALSE(hyperplanesInGeneralPosition(sigmas({"X0", "X1", "X0 + X1"}, 3)));
  EXPECT_TRUE(hyperplanesInGeneralPosition(sigmas({"X0", "X1"}, 3)));
}

TEST(NormalCrossing, SpotCheck) {
  EXPECT_TRUE(normalCrossingSpotCheck(sigmas({"X1^2 - X0^2", "X1^2 + X0^2"}, 2)).empty());
  EXPECT_FALSE(normalCrossingSpotCheck(sigmas({"X1^2"}, 2)).empty());
  EXPECT_FALSE(normalCrossingSpotCheck(sigmas({"X1^2 - X0^2", "X1^2 - X0 X1"}, 2)).empty());
  EXPECT_TRUE(normalCrossingSpotCheck(sigmas({"X0", "X1", "X2", "X0 + X1 + X2"}, 3)).empty());
  EXPECT_FALSE(normalCrossingSpotCheck(sigmas({"X0^2 + X1^2 - X2^2", "X0 X2 - X2^2"}, 3)).empty());
}

TEST(Curves, IdentityAndAgreement) {
  EXPECT_TRUE(curvesIdentical(curve({"1", "z"}), curve({"2", "2*z"})));
  EXPECT_TRUE(curvesIdentical(curve({"z", "z^2"}), curve({"1", "z"})));
  EXPECT_FALSE(curvesIdentical(curve({"1", "z"}), curve({"1", "z^2"})));
  auto cp = crossProducts(curve({"1", "z", "z^2"}), curve({"1", "z", "z^3"}));
  ASSERT_EQ(cp.size(), 3u);
  EXPECT_TRUE(cp[0].isZero());
  EXPECT_TRUE(curvesAgreeOn(curve({"1", "z"}), curve({"1", "z^2"}), uni("z")));
  EXPECT_TRUE(curvesAgreeOn(curve({"1", "z"}), curve({"1", "z^2"}), uni("z^2 - z")));
  EXPECT_FALSE(curvesAgreeOn(curve({"1", "z"}), curve({"1", "z^2"}), uni("z + 1")));
}

TEST(SharingBound, Examples) {
  SharingBoundReport r = sharingBoundCheck(curve({"1", "z"}), curve({"1", "z^2"}), sigmas({"X1"}, 2), standardGrid());
  EXPECT_TRUE(r.holds);
  for (const auto& row : r.rows) {
    EXPECT_NEAR(row.NS, std::log(row.r), 1e-12);
    EXPECT_NEAR(row.margin, 2 * std::log(row.r), 1e-8);
  }
  EXPECT_EQ(kindOf([] { sharingBoundCheck(curve({"1", "z"}), curve({"3", "3*z"}), sigmas({"X1"}, 2), standardGrid()); }),
            ErrorKind::CurvesIdentical);
  EXPECT_EQ(kindOf([] { sharingBoundCheck(curve({"1", "z"}), curve({"1", "z + 1"}), sigmas({"X1"}, 2), standardGrid()); }),
            ErrorKind::SharingViolated);
}

TEST(Diagonal, Examples) {
  DiagonalCoefficients a{{{0, 1}, GaussianRational(1)}};
  std::vector<GaussianRational> z{1, 0};
  std::vector<GaussianRational> w{0, 1};
  EXPECT_EQ(diagonalSection(a, z, w), GaussianRational(1));
  EXPECT_EQ(diagonalSection(a, z, z), GaussianRational(0));
  std::vector<GaussianRational> p{1, 2, 3};
  std::vector<GaussianRational> q{1, 2, 7};
  EXPECT_EQ(diagonalSection(a, p, q), GaussianRational(0));
  EXPECT_ANY_THROW(diagonalSection(DiagonalCoefficients{}, z, w));
}

TEST(Diagonal, VanishesOnDiagonal) {
  std::mt19937 rng(51);
  for (int t = 0; t < 100; ++t) {
    int k = 1 + t % 4;
    DiagonalCoefficients a;
    for (int m = 0; m <= k; ++m) {
      for (int l = m + 1; l <= k; ++l) a[{m, l}] = randomNonzero(rng);
    }
    std::vector<GaussianRational> z;
    for (int i = 0; i <= k; ++i) z.push_back(randomScalar(rng));
    GaussianRational s = randomNonzero(rng);
    std::vector<GaussianRational> w;
    for (const auto& v : z) w.push_back(s * v);
    EXPECT_TRUE(diagonalSection(a, z, w).isZero());
  }
}

TEST(Thresholds, Examples) {
  ThresholdTable a = uniquenessThresholds(1, 1, 0.0);
  EXPECT_EQ(a.row("entire (i)").bound, 4);
  EXPECT_EQ(a.row("entire (i)").minQ, 5);
  EXPECT_EQ(a.row("entire (ii)").minQ, 5);
  EXPECT_EQ(a.row("Chen-Yan").minQ, 5);
  EXPECT_EQ(a.row("Dulock-Ru").bound, mpq_class(37, 2));
  EXPECT_EQ(a.row("Dulock-Ru").minQ, 19);
  EXPECT_EQ(a.row("disk (i)").bound, 4);
  ThresholdTable b = uniquenessThresholds(2, 2, 0.0);
  EXPECT_EQ(b.row("entire (i)").bound, 5);
  EXPECT_EQ(b.row("entire (i)").minQ, 6);
  EXPECT_THROW(b.row("nope"), std::out_of_range);
  EXPECT_ANY_THROW(uniquenessThresholds(0, 1, 0.0));
  EXPECT_ANY_THROW(uniquenessThresholds(1, 1, -1.0));
  ThresholdTable c = uniquenessThresholds(1, 1, 0.5);
  EXPECT_EQ(c.row("disk (i)").bound, 4 + mpq_class(1));
  EXPECT_EQ(c.row("disk (ii)").bound, 4 + mpq_class(2));
}

TEST(Thresholds, ClassicalHyperplaneCount) {
  for (int k = 1; k <= 10; ++k) {
    ThresholdTable t = uniquenessThresholds(k, 1, 0.0);
    EXPECT_EQ(t.row("entire (ii)").minQ, 2 * k + 3);
    EXPECT_EQ(t.row("disk (ii)").minQ, 2 * k + 3);
    for (int d = 1; d <= 4; ++d) {
      ThresholdTable h = uniquenessThresholds(k, d, 0.0);
      EXPECT_EQ(h.row("Hilbert bound").bound, binomial(k + d, d));
      EXPECT_EQ(h.row("Quang-An (b)").bound, 2 * binomial(k + d, d));
    }
  }
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(12, 6), 924);
}

TEST(Thresholds, Monotonicity) {
  // Nondecreasing in k and c everywhere. In d, (i) grows iff the geodesic
  // term (k-1)k(k+1)/2 is at least 3k+1, and (ii) iff twice that term is at
  // least 2(k+1) + k^2 (k+1)^2 c.
  for (int k = 1; k <= 6; ++k) {
    for (int d = 1; d <= 6; ++d) {
      for (double c : {0.0, 1.0}) {
        ThresholdTable here = uniquenessThresholds(k, d, c);
        ThresholdTable nextK = uniquenessThresholds(k + 1, d, c);
        ThresholdTable nextD = uniquenessThresholds(k, d + 1, c);
        ThresholdTable moreC = uniquenessThresholds(k, d, c + 1.0);
        for (const char* name : {"disk (i)", "disk (ii)"}) {
          EXPECT_GE(nextK.row(name).bound, here.row(name).bound);
          EXPECT_GE(moreC.row(name).bound, here.row(name).bound);
        }
        long g = static_cast<long>(k - 1) * k * (k + 1) / 2;
        bool growsI = g >= 3 * k + 1;
        mpq_class rhs = 2 * (k + 1) + mpq_class(k * k * (k + 1) * (k + 1)) * exactRational(c);
        bool growsII = 2 * g >= rhs;
        EXPECT_EQ(nextD.row("disk (i)").bound >= here.row("disk (i)").bound, growsI) << k << " " << d;
        EXPECT_EQ(nextD.row("disk (ii)").bound >= here.row("disk (ii)").bound, growsII) << k << " " << d << " " << c;
      }
    }
  }
}

TEST(RatioGroups, Examples) {
  auto s = sigmas({"X0", "X1", "X0 + X1"}, 2);
  GroupPartition same = ratioGroups(curve({"1", "z"}), curve({"1", "z"}), s, 1);
  ASSERT_EQ(same.classes.size(), 1u);
  EXPECT_EQ(same.classes[0].size(), 3u);
  EXPECT_FALSE(same.classesAtMostK);

  GroupPartition p = ratioGroups(curve({"1", "z"}), curve({"1", "z^2"}), s, 1);
  EXPECT_EQ(p.classes.size(), 3u);
  EXPECT_TRUE(p.classesAtMostK);
  EXPECT_TRUE(p.auxiliariesNonzero);

  auto five = sigmas({"X0", "X1", "X2", "X0 + X1 + X2", "X0 - X1 + 2*X2"}, 3);
  GroupPartition q = ratioGroups(curve({"1", "z", "z^2"}), curve({"1", "z^2", "z^3"}), five, 2);
  EXPECT_EQ(q.pairing, (std::vector<int>{2, 3, 4, 0, 1}));
}

TEST(RatioGroups, PartitionProperty) {
  std::mt19937 rng(52);
  for (int t = 0; t < 30; ++t) {
    int k = 1 + t % 2;
    ProjectiveCurve f = randomCurve(rng, k);
    std::vector<UniPolynomial> gp = f.components();
    gp[k] = gp[k] * uni("z + 2");
    ProjectiveCurve g(gp);
    int q = 2 * k + 1 + t % 3;
    std::vector<HomogeneousPolynomial> s;
    for (int j = 0; j < q; ++j) {
      HomogeneousPolynomial h = randomHomogeneous(rng, k + 1, 1, k + 1);
      // roughly half avoid the last coordinate, which makes their ratios coincide
      if (j % 2 == 0) {
        Polynomial trimmed(k + 1);
        for (const auto& [e, c] : h.poly().terms()) {
          if (e[k] == 0) trimmed.addTerm(e, c);
        }
        if (!trimmed.isZero()) h = HomogeneousPolynomial(trimmed, 1);
      }
      s.push_back(h);
    }
    bool zero = std::any_of(s.begin(), s.end(), [&](const auto& h) {
      return pullback(f, h).isZero() || pullback(g, h).isZero();
    });
    if (zero) continue;
    GroupPartition p = ratioGroups(f, g, s, k);
    auto related = [&](int i, int j) {
      return pullback(f, s[i]) * pullback(g, s[j]) == pullback(f, s[j]) * pullback(g, s[i]);
    };
    std::vector<int> classOf(q, -1);
    for (std::size_t c = 0; c < p.classes.size(); ++c) {
      for (int i : p.classes[c]) {
        EXPECT_EQ(classOf[i], -1);
        classOf[i] = static_cast<int>(c);
      }
      if (c > 0) EXPECT_LT(p.classes[c - 1].front(), p.classes[c].front());
    }
    for (int i = 0; i < q; ++i) {
      ASSERT_GE(classOf[i], 0);
      for (int j = 0; j < q; ++j) EXPECT_EQ(related(i, j), classOf[i] == classOf[j]);
    }
    std::set<int> image(p.pairing.begin(), p.pairing.end());
    EXPECT_EQ(static_cast<int>(image.size()), q);
    for (int pos = 0; pos < q; ++pos) {
      EXPECT_NE(p.pairing[pos], pos);
      EXPECT_EQ(p.pairing[pos], (pos + k) % q);
    }
    std::size_t largest = 0;
    for (const auto& c : p.classes) largest = std::max(largest, c.size());
    EXPECT_EQ(p.classesAtMostK, static_cast<int>(largest) <= k);
    if (p.classesAtMostK && q >= 2 * k) {
      EXPECT_TRUE(p.auxiliariesNonzero);
      for (int pos = 0; pos < q; ++pos) EXPECT_NE(classOf[p.order[pos]], classOf[p.order[p.pairing[pos]]]);
    }
  }
}

TEST(Harness, IdenticalCurves) {
  HarnessInput in{LinearSystemBasis::fermat(1, 1), sigmas({"X0", "X1", "X0 + X1", "X0 - X1", "X0 + 2*X1"}, 2),
                  curve({"1", "z"}), curve({"2", "2*z"}), standardGrid(8)};
  HarnessReport r = uniquenessHarness(in);
  EXPECT_TRUE(r.identical);
  EXPECT_TRUE(r.aboveThreshold);
  EXPECT_EQ(r.verdict, "consistent with f ≡ g conclusion");
}

TEST(Harness, BelowThresholdPair) {
  HarnessInput in{LinearSystemBasis::fermat(1, 1), sigmas({"X1"}, 2), curve({"1", "z"}), curve({"1", "z^2"}),
                  standardGrid(10)};
  HarnessReport r = uniquenessHarness(in);
  EXPECT_FALSE(r.identical);
  EXPECT_FALSE(r.aboveThreshold);
  EXPECT_EQ(r.threshold, 4);
  ASSERT_TRUE(r.sharingBound.has_value());
  EXPECT_TRUE(r.sharingBound->holds);
  EXPECT_EQ(r.rows.size(), 10u);
  EXPECT_TRUE(r.failed.empty()) << r.verdict;
  EXPECT_EQ(r.verdict, "inequalities hold, no contradiction");
}

TEST(Harness, SyntheticViolation) {
  HarnessInput in{LinearSystemBasis::fermat(1, 1), sigmas({"X0", "X1", "X0 + X1", "X0 - X1", "X0 + 2*X1"}, 2),
                  curve({"1", "z"}), curve({"1", "z^2"}), standardGrid(10)};
  EXPECT_EQ(kindOf([&] { uniquenessHarness(in); }), ErrorKind::SharingViolated);
  in.synthetic = true;
  HarnessReport r = uniquenessHarness(in);
  EXPECT_TRUE(r.aboveThreshold);
  EXPECT_FALSE(r.failed.empty());
  EXPECT_EQ(r.verdict.rfind("failed: ", 0), 0u) << r.verdict;
}
