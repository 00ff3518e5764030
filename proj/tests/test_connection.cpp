#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "tgc/connection.hpp"
#include "tgc/error.hpp"

using namespace tgc;
using namespace tgc::testing;

namespace {

LinearSystemBasis basisOf(std::initializer_list<const char*> members, int numVars) {
  return LinearSystemBasis(sigmas(members, numVars));
}

ErrorKind kindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST(Basis, Jacobian) {
  auto flat = jacobianMatrix(LinearSystemBasis::fermat(2, 1));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(flat(i, j), Polynomial::constant(3, i == j ? 1 : 0));
  }
  auto fermat = jacobianMatrix(LinearSystemBasis::fermat(1, 3));
  EXPECT_EQ(fermat(0, 0), parsePolynomial("3*X0^2", 2));
  EXPECT_TRUE(fermat(0, 1).isZero());
  EXPECT_EQ(fermat(1, 1), parsePolynomial("3*X1^2", 2));

  auto j = jacobianMatrix(basisOf({"X0^2", "X0 X1"}, 2));
  EXPECT_EQ(j(0, 0), parsePolynomial("2*X0", 2));
  EXPECT_TRUE(j(0, 1).isZero());
  EXPECT_EQ(j(1, 0), parsePolynomial("X1", 2));
  EXPECT_EQ(j(1, 1), parsePolynomial("X0", 2));
}

TEST(Basis, Rejections) {
  EXPECT_EQ(kindOf([] { basisOf({"X0^2 + X1^2", "X0^2 + X1^2"}, 2); }), ErrorKind::SingularSystem);
  EXPECT_EQ(kindOf([] { basisOf({"X0^2", "X1"}, 2); }), ErrorKind::DegreeMismatch);
  EXPECT_EQ(kindOf([] { basisOf({"X0", "X1"}, 3); }), ErrorKind::DegreeMismatch);
}

TEST(Basis, SpanCoefficientsRoundTrip) {
  std::mt19937 rng(20);
  for (int t = 0; t < 20; ++t) {
    LinearSystemBasis b = perturbedBasis(rng, 1 + t % 3, 1 + t % 3);
    std::vector<GaussianRational> c;
    for (int mu = 0; mu <= b.k(); ++mu) c.push_back(randomScalar(rng));
    auto back = b.spanCoefficients(b.combination(c));
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, c);
  }
  EXPECT_FALSE(LinearSystemBasis::fermat(1, 2).spanCoefficients(hom("X0 X1", 2)).has_value());
}

TEST(Christoffel, FlatIsZero) {
  for (int k = 1; k <= 3; ++k) {
    ChristoffelTensor t = solveChristoffel(LinearSystemBasis::fermat(k, 1));
    EXPECT_TRUE(t.isFlat());
  }
}

TEST(Christoffel, FermatClosedForm) {
  for (int k = 1; k <= 3; ++k) {
    for (int d = 2; d <= 3; ++d) {
      ChristoffelTensor t = solveChristoffel(LinearSystemBasis::fermat(k, d));
      for (int l = 0; l <= k; ++l) {
        for (int i = 0; i <= k; ++i) {
          for (int j = 0; j <= k; ++j) {
            if (l == i && i == j) {
              Exponent e(k + 1, 0);
              e[l] = 1;
              HomRationalFunction want(HomogeneousPolynomial(Polynomial::constant(k + 1, d - 1), 0),
                                       HomogeneousPolynomial(Polynomial::monomial(e, 1)));
              EXPECT_EQ(t(l, i, j), want) << k << " " << d << " " << l;
            } else {
              EXPECT_TRUE(t(l, i, j).isZero());
            }
          }
        }
      }
    }
  }
}

TEST(Christoffel, SymmetricAndOverDelta) {
  std::mt19937 rng(21);
  for (int t = 0; t < 12; ++t) {
    LinearSystemBasis b = perturbedBasis(rng, 1 + t % 2, 2 + t % 2);
    ChristoffelTensor g = solveChristoffel(b);
    for (int l = 0; l <= b.k(); ++l) {
      for (int i = 0; i <= b.k(); ++i) {
        for (int j = 0; j <= b.k(); ++j) {
          EXPECT_EQ(g(l, i, j), g(l, j, i));
          EXPECT_NO_THROW(g.numeratorOverDelta(l, i, j));
        }
      }
    }
  }
}

TEST(Geodesic, MembersAndCombinations) {
  LinearSystemBasis b = basisOf({"X0^2 + X1^2", "X1^2 + X2^2", "X2^2 + X0^2"}, 3);
  ChristoffelTensor t = solveChristoffel(b);
  EXPECT_TRUE(verifyGeodesicIdentity(t, b.members()[0]).holds);
  EXPECT_TRUE(verifyGeodesicIdentity(t, 2 * b.members()[0] + 3 * b.members()[1]).holds);
  // the circulant members span the pure squares, so X0^2 is a member and X0 X1 is not
  EXPECT_TRUE(verifyGeodesicIdentity(t, hom("X0^2", 3)).holds);
  GeodesicReport bad = verifyGeodesicIdentity(t, hom("X0 X1", 3));
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.nonzero.empty());
  EXPECT_THROW(verifyGeodesicIdentity(t, hom("X0", 3)), Error);
}

TEST(Geodesic, RandomCombinationsOfPerturbedBases) {
  std::mt19937 rng(22);
  for (int t = 0; t < 10; ++t) {
    LinearSystemBasis b = perturbedBasis(rng, 1 + t % 2, 2);
    ChristoffelTensor g = solveChristoffel(b);
    std::vector<GaussianRational> c;
    for (int mu = 0; mu <= b.k(); ++mu) c.push_back(randomScalar(rng));
    EXPECT_TRUE(verifyGeodesicIdentity(g, b.combination(c)).holds);
  }
}

TEST(Homogeneity, ExamplesAndCorruption) {
  EXPECT_TRUE(checkHomogeneityDegree(solveChristoffel(LinearSystemBasis::fermat(2, 1))));
  ChristoffelTensor t = solveChristoffel(LinearSystemBasis::fermat(1, 3));
  EXPECT_TRUE(checkHomogeneityDegree(t));
  t(0, 1, 1) = HomRationalFunction(hom("X0", 2), hom("X1", 2));
  EXPECT_FALSE(checkHomogeneityDegree(t));
}

TEST(Euler, Examples) {
  EXPECT_TRUE(checkEulerProperty(solveChristoffel(LinearSystemBasis::fermat(2, 1))).holds);
  for (int d = 2; d <= 3; ++d) {
    ChristoffelTensor t = solveChristoffel(LinearSystemBasis::fermat(2, d));
    EulerReport r = checkEulerProperty(t);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.samplesUsed, 100);
    t(1, 1, 1) = HomRationalFunction::zero(3, -1);
    EXPECT_FALSE(checkEulerProperty(t).holds);
  }
  ChristoffelTensor k1 = solveChristoffel(LinearSystemBasis::fermat(1, 2));
  k1(0, 0, 0) = HomRationalFunction::zero(2, -1);
  EXPECT_FALSE(checkEulerProperty(k1).holds);
}

TEST(Euler, RandomBasesProperty) {
  std::mt19937 rng(23);
  int checked = 0;
  for (int t = 0; t < 50; ++t) {
    int k = 1 + t % 3;
    int d = k == 3 ? 2 : 2 + t % 2;
    LinearSystemBasis b = perturbedBasis(rng, k, d);
    ChristoffelTensor g = solveChristoffel(b);
    EXPECT_TRUE(checkHomogeneityDegree(g));
    EulerCheckOptions opts;
    opts.seed = 1000 + t;
    EulerReport r = checkEulerProperty(g, opts);
    EXPECT_TRUE(r.holds) << "basis " << t << " worst " << r.worstResidual;
    ++checked;
  }
  EXPECT_EQ(checked, 50);
}

TEST(PolarDegree, Examples) {
  EXPECT_EQ(polarDegree(solveChristoffel(LinearSystemBasis::fermat(2, 1))).degree, 0);
  PolarLocus f = polarDegree(solveChristoffel(LinearSystemBasis::fermat(2, 3)));
  EXPECT_EQ(f.degree, 6);
  EXPECT_EQ(f.delta.poly(), parsePolynomial("27*X0^2 X1^2 X2^2", 3));
  PolarLocus g = polarDegree(solveChristoffel(basisOf({"X0^2 + X0 X1", "X1^2 - 2*X0 X1"}, 2)));
  EXPECT_EQ(g.degree, 2);
}

TEST(PolarDegree, BoundOnRandomBases) {
  std::mt19937 rng(24);
  for (int t = 0; t < 15; ++t) {
    int k = 1 + t % 3;
    int d = 1 + t % 2 + (k < 3 ? t % 3 == 0 : 0);
    LinearSystemBasis b = perturbedBasis(rng, k, d);
    EXPECT_LE(polarDegree(solveChristoffel(b)).degree, (k + 1) * (d - 1));
  }
}

TEST(Chart, Restriction) {
  for (int j = 0; j <= 2; ++j) EXPECT_TRUE(chartRestrict(solveChristoffel(LinearSystemBasis::fermat(2, 1)), j).isFlat());
  for (int d = 2; d <= 3; ++d) {
    ChartConnection c = chartRestrict(solveChristoffel(LinearSystemBasis::fermat(1, d)), 0);
    EXPECT_EQ(c(0, 0, 0), RationalFunction(Polynomial::constant(1, d - 1), Polynomial::variable(1, 0)));
    for (auto descent : {ChartDescent::EulerProjection, ChartDescent::Substitution}) {
      ChartConnection s = chartRestrict(solveChristoffel(LinearSystemBasis::fermat(1, d)), 0, descent);
      EXPECT_EQ(s(0, 0, 0), c(0, 0, 0));
    }
  }
  ChristoffelTensor t = solveChristoffel(LinearSystemBasis::fermat(1, 2));
  EXPECT_ANY_THROW(chartRestrict(t, 2));
  EXPECT_ANY_THROW(chartRestrict(t, -1));
}

TEST(Chart, MembersTotallyGeodesicInEveryChart) {
  std::mt19937 rng(25);
  for (int t = 0; t < 8; ++t) {
    int k = 1 + t % 2;
    LinearSystemBasis b = perturbedBasis(rng, k, 2);
    ChristoffelTensor g = solveChristoffel(b);
    std::vector<GaussianRational> c;
    for (int mu = 0; mu <= k; ++mu) c.push_back(randomScalar(rng));
    HomogeneousPolynomial sigma = b.combination(c);
    for (int j = 0; j <= k; ++j) EXPECT_TRUE(isTotallyGeodesicInChart(chartRestrict(g, j), sigma));
  }
  LinearSystemBasis b = basisOf({"X0^2 + X1^2", "X1^2 + X2^2", "X2^2 + X0^2"}, 3);
  ChartConnection c = chartRestrict(solveChristoffel(b), 0);
  EXPECT_TRUE(isTotallyGeodesicInChart(c, b.members()[1]));
  EXPECT_FALSE(isTotallyGeodesicInChart(c, hom("X1^2 + X1 X2", 3)));
}
