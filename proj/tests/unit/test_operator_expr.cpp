#include <gtest/gtest.h>

#include <complex>
#include <numbers>
#include <random>

#include "losq/error.hpp"
#include "losq/fock.hpp"
#include "losq/operator_expr.hpp"
#include "test_support.hpp"

namespace losq {
namespace {

using L = Letter;

OperatorExpr w(std::initializer_list<Letter> letters, cplx c = 1.0) { return OperatorExpr::word(Word(letters), c); }

void expect_expr_near(const OperatorExpr& x, const OperatorExpr& y, double tol) {
  const OperatorExpr diff = x - y;
  for (const auto& [word, c] : diff.terms()) EXPECT_LE(std::abs(c), tol) << to_string(diff);
}

// Largest entry difference on the block where no ladder operator reaches the cutoff edge.
double interior_difference(const OperatorExpr& x, const OperatorExpr& y, int cutoff, int degree) {
  const LadderMatrices ladder = build_ladder(cutoff);
  const CMatrix diff = CMatrix(matrix_of(x, ladder)) - CMatrix(matrix_of(y, ladder));
  const int keep = cutoff - degree;
  double worst = 0.0;
  for (int na = 0; na < keep; ++na)
    for (int nb = 0; nb < keep; ++nb)
      for (int ma = 0; ma < keep; ++ma)
        for (int mb = 0; mb < keep; ++mb)
          worst = std::max(worst, std::abs(diff(na * cutoff + nb, ma * cutoff + mb)));
  return worst;
}

TEST(OperatorExpr, CanonicalMerging) {
  OperatorExpr e = w({L::a}, 2.0) + w({L::a}, -2.0);
  EXPECT_TRUE(e.empty());
  e = w({L::ad, L::a}) + w({L::ad, L::a}, {0.0, 1.0});
  EXPECT_EQ(e.size(), 1u);
  EXPECT_EQ(e.coefficient({L::ad, L::a}), cplx(1.0, 1.0));
  EXPECT_EQ(e.coefficient({L::a}), cplx(0.0));
}

TEST(OperatorExpr, ProductConcatenatesWithoutReordering) {
  const OperatorExpr p = OperatorExpr::letter(L::a) * OperatorExpr::letter(L::ad);
  EXPECT_EQ(p, w({L::a, L::ad}));
}

TEST(OperatorExpr, DegreeCap) {
  EXPECT_NO_THROW(OperatorExpr::word(Word(8, L::a)));
  EXPECT_THROW(OperatorExpr::word(Word(9, L::a)), DegreeError);
  const OperatorExpr four = OperatorExpr::word(Word(5, L::b));
  EXPECT_THROW(four * four, DegreeError);
}

TEST(OperatorExpr, ScalarDetection) {
  cplx c;
  EXPECT_TRUE(OperatorExpr::scalar(3.0).is_scalar(c));
  EXPECT_EQ(c, cplx(3.0));
  EXPECT_TRUE(OperatorExpr().is_scalar(c));
  EXPECT_EQ(c, cplx(0.0));
  EXPECT_FALSE(OperatorExpr::letter(L::b).is_scalar(c));
}

TEST(OperatorExpr, ToString) {
  EXPECT_EQ(to_string(OperatorExpr()), "0");
  EXPECT_EQ(to_string(w({L::ad, L::a}, 2.0) + OperatorExpr::scalar({0.0, -1.5})), "(0,-1.5) + (2,0)*ad*a");
}

TEST(NormalPowers, RecognizesNormalWords) {
  NormalPowers p;
  ASSERT_TRUE(normal_powers({L::ad, L::ad, L::a, L::bd, L::b, L::b}, p));
  EXPECT_EQ(p.ad, 2);
  EXPECT_EQ(p.a, 1);
  EXPECT_EQ(p.bd, 1);
  EXPECT_EQ(p.b, 2);
  EXPECT_FALSE(normal_powers({L::a, L::ad}, p));
  EXPECT_FALSE(normal_powers({L::b, L::a}, p));
}

TEST(Reorder, SingleCommutator) {
  EXPECT_EQ(reorder(w({L::a, L::ad})), w({L::ad, L::a}) + OperatorExpr::scalar(1.0));
}

TEST(Reorder, MixedWord) {
  EXPECT_EQ(reorder(w({L::a, L::ad, L::bd, L::b})), w({L::ad, L::a, L::bd, L::b}) + w({L::bd, L::b}));
}

TEST(Reorder, HomodyneSquare) {
  const double theta = 0.7;
  const cplx e = std::polar(1.0, theta);
  const OperatorExpr l = homodyne_observable(theta);
  // Hand expansion: e² a†²b² + ē² a²b†² + 2 a†a b†b + a†a + b†b.
  const OperatorExpr expected = w({L::ad, L::ad, L::b, L::b}, e * e) + w({L::a, L::a, L::bd, L::bd}, std::conj(e * e)) +
                                w({L::ad, L::a, L::bd, L::b}, 2.0) + w({L::ad, L::a}) + w({L::bd, L::b});
  const OperatorExpr got = reorder(l * l);
  ASSERT_EQ(got.size(), expected.size());
  for (const auto& [word, c] : expected.terms()) EXPECT_NEAR(std::abs(got.coefficient(word) - c), 0.0, 1e-15);
}

TEST(Reorder, IdempotentAndMatrixPreserving) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 40; ++t) {
    const OperatorExpr e = testing::random_expr(rng, 4, 3);
    const OperatorExpr r = reorder(e);
    EXPECT_EQ(reorder(r), r);
    EXPECT_LE(interior_difference(e, r, 10, 4), 1e-10) << to_string(e);
    for (const auto& [word, c] : r.terms()) {
      NormalPowers p;
      EXPECT_TRUE(normal_powers(word, p));
    }
  }
}

TEST(FormalNormalOrder, DropsSelectedCommutators) {
  EXPECT_EQ(formal_normal_order(w({L::a, L::ad}), {Mode::A}), w({L::ad, L::a}));
  // b is reordered operator-preservingly when only A is selected.
  EXPECT_EQ(formal_normal_order(w({L::a, L::ad, L::b, L::bd}), {Mode::A}),
            w({L::ad, L::a, L::bd, L::b}) + w({L::ad, L::a}));
  EXPECT_EQ(formal_normal_order(w({L::a, L::ad, L::b, L::bd}), ModeSet::all()), w({L::ad, L::a, L::bd, L::b}));
}

TEST(FormalNormalOrder, HomodyneObservableIsFixed) {
  for (double theta : {0.0, 0.3, 2.0}) {
    const OperatorExpr l = homodyne_observable(theta);
    EXPECT_EQ(formal_normal_order(l, {Mode::A}), l);
    EXPECT_EQ(formal_normal_order(l, ModeSet::all()), l);
  }
}

TEST(FormalNormalOrder, SquareSubtractsShotNoise) {
  const OperatorExpr l = homodyne_observable(1.1);
  const OperatorExpr l2 = reorder(l * l);
  EXPECT_EQ(formal_normal_order(l * l, {Mode::A}), l2 - w({L::bd, L::b}));
  EXPECT_EQ(formal_normal_order(l * l, ModeSet::all()), l2 - w({L::bd, L::b}) - w({L::ad, L::a}));
}

TEST(FormalNormalOrder, IdempotentAndRejectsEmptySet) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 40; ++t) {
    const OperatorExpr e = testing::random_expr(rng, 4, 3);
    const OperatorExpr once = formal_normal_order(e, {Mode::A});
    EXPECT_EQ(formal_normal_order(once, {Mode::A}), once);
  }
  EXPECT_THROW(formal_normal_order(w({L::a}), ModeSet{}), InvalidArgument);
}

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(w({L::ad, L::b}, {1.0, 2.0})), w({L::bd, L::a}, {1.0, -2.0}));
  EXPECT_EQ(adjoint_product(OperatorExpr::letter(L::a)), w({L::ad, L::a}));
  const OperatorExpr f = OperatorExpr::letter(L::a) + OperatorExpr::letter(L::b);
  EXPECT_EQ(adjoint_product(f), w({L::ad, L::a}) + w({L::ad, L::b}) + w({L::bd, L::a}) + w({L::bd, L::b}));
}

TEST(Adjoint, HomodyneObservableIsSelfAdjoint) {
  const OperatorExpr l = homodyne_observable(0.4);
  expect_expr_near(reorder(adjoint(l)), l, 1e-16);
  const double c = 0.8;
  const OperatorExpr f = l - OperatorExpr::scalar(c);
  const OperatorExpr expected = l * l - 2.0 * c * l + OperatorExpr::scalar(c * c);
  expect_expr_near(reorder(adjoint_product(f)), reorder(expected), 1e-15);
}

TEST(Adjoint, MatchesMatrixAdjoint) {
  std::mt19937_64 rng(43);
  const LadderMatrices ladder = build_ladder(6);
  for (int t = 0; t < 20; ++t) {
    const OperatorExpr e = testing::random_expr(rng, 3, 3);
    const CMatrix lhs = CMatrix(matrix_of(adjoint(e), ladder));
    const CMatrix rhs = CMatrix(matrix_of(e, ladder)).adjoint();
    EXPECT_LE((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(adjoint(adjoint(e)), e);
  }
}

}  // namespace
}  // namespace losq
