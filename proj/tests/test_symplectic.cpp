#include <gtest/gtest.h>

#include "ncpoisson/ncpoisson.hpp"
#include "oracles.hpp"

namespace {

using namespace ncpoisson;

PolyMat E(int n, int i, int j) { return PolyMat::from_matrix(elementary(n, i, j)); }
PolyMat rand_mat(Rng& rng, int n) { return PolyMat::from_matrix(random_matrix(rng, n)); }

TEST(FormFromBracket, RoundTrip) {
  Rng rng(1);
  for (int n = 2; n <= 3; ++n) {
    const Bracket b = Bracket::scalar(1.0);
    const TwoForm omega = form_from_bracket(b, n);
    for (int s = 0; s < 100; ++s) {
      const PolyMat a = rand_mat(rng, n);
      const PolyMat c = rand_mat(rng, n);
      EXPECT_LT(distance(omega(b.ham(a), b.ham(c)), b.eval(a, c)), 1e-9);
    }
  }
}

TEST(FormFromBracket, HalfCommutatorForKTwo) {
  Rng rng(2);
  const TwoForm omega = form_from_bracket(Bracket::scalar(2.0), 2);
  for (int s = 0; s < 10; ++s) {
    const PolyMat a = rand_mat(rng, 2);
    const PolyMat c = rand_mat(rng, 2);
    EXPECT_LT(distance(omega(Derivation::inner(a), Derivation::inner(c)), 0.5 * commutator(a, c)), 1e-9);
  }
}

TEST(FormFromBracket, RepresentationIndependent) {
  Rng rng(3);
  const Bracket b = Bracket::scalar(Scalar(0.7, 0.2));
  const PolyMat one = PolyMat::identity(Model::matrix(3));
  for (int s = 0; s < 20; ++s) {
    const PolyMat a = rand_mat(rng, 3);
    const HamRepresentation y{{1.0, rand_mat(rng, 3)}};
    const PolyMat v1 = form_on_representations(b, {{1.0, a}}, y);
    EXPECT_LT(distance(v1, form_on_representations(b, {{1.0, a + one}}, y)), 1e-9);
    EXPECT_LT(distance(v1, form_on_representations(b, {{2.0, 0.5 * a}}, y)), 1e-9);
    const TwoForm omega = form_from_bracket(b, 3);
    EXPECT_LT(distance(omega(b.ham(a), derivation_of(b, y)), omega(b.ham(a + one), derivation_of(b, y))), 1e-9);
  }
}

TEST(FormFromBracket, DegenerateRejected) {
  try {
    (void)form_from_bracket(Bracket::scalar(0.0), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degenerate);
  }
}

TEST(FormFromBracket, AntisymmetricAndCenterLinear) {
  Rng rng(4);
  const TwoForm omega = form_from_bracket(Bracket::scalar(3.0), 2);
  for (int s = 0; s < 20; ++s) {
    const Derivation x = Derivation::inner(rand_mat(rng, 2));
    const Derivation y = Derivation::inner(rand_mat(rng, 2));
    const Scalar z = random_scalar(rng);
    EXPECT_LT(distance(omega(x, y), -omega(y, x)), 1e-9);
    EXPECT_LT(distance(omega(Derivation::scaled(z, x), y), z * omega(x, y)), 1e-9);
  }
}

TEST(Interior, Example) {
  const Bracket b = Bracket::scalar(1.0);
  const TwoForm omega = form_from_bracket(b, 2);
  const Derivation y = Derivation::inner(E(2, 1, 2));
  EXPECT_LT(distance(interior(omega, b.ham(E(2, 1, 1)))(y), E(2, 1, 2)), 1e-12);
  EXPECT_LT(distance(-exact_differential(E(2, 1, 1))(y), E(2, 1, 2)), 1e-12);
  const PolyMat one = PolyMat::identity(Model::matrix(2));
  EXPECT_LT(interior(omega, b.ham(one))(y).max_abs(), 1e-12);
  EXPECT_LT(exact_differential(one)(y).max_abs(), 1e-12);
}

TEST(Interior, HamiltonianContractionIsMinusDifferential) {
  Rng rng(5);
  const Bracket b = Bracket::scalar(Scalar(-1.3, 0.4));
  const TwoForm omega = form_from_bracket(b, 3);
  for (int s = 0; s < 50; ++s) {
    const PolyMat a = rand_mat(rng, 3);
    const Derivation y = Derivation::inner(rand_mat(rng, 3));
    EXPECT_LT((interior(omega, b.ham(a))(y) + y.apply(a)).max_abs(), 1e-9);
  }
}

TEST(ExteriorDerivative, ClosedOnHamiltonianTriples) {
  Rng rng(6);
  for (const Scalar k : {Scalar(1.0), Scalar(2.0, -1.0)}) {
    const Bracket b = Bracket::scalar(k);
    const TwoForm omega = form_from_bracket(b, 2);
    for (int s = 0; s < 20; ++s) {
      const PolyMat a = rand_mat(rng, 2);
      const PolyMat c = rand_mat(rng, 2);
      const PolyMat e = rand_mat(rng, 2);
      const PolyMat dw = exterior_derivative(omega, b.ham(a), b.ham(c), b.ham(e));
      EXPECT_LT(dw.max_abs(), 1e-9);
    }
  }
  EXPECT_TRUE(exterior_derivative(TwoForm::zero(Model::matrix(2)), Derivation::inner(E(2, 1, 2)),
                                  Derivation::inner(E(2, 2, 1)), Derivation::inner(E(2, 1, 1)))
                  .is_zero());
}

TEST(ExteriorDerivative, MatchesJacobiatorForScalarForm) {
  Rng rng(8);
  const Bracket b = Bracket::scalar(1.0);
  const TwoForm omega = form_from_bracket(b, 3);
  const PolyMat a = rand_mat(rng, 3);
  const PolyMat c = rand_mat(rng, 3);
  const PolyMat e = rand_mat(rng, 3);
  EXPECT_LT(distance(exterior_derivative(omega, b.ham(a), b.ham(c), b.ham(e)), jacobiator(b, a, c, e)), 1e-9);
}

TEST(NondegenerateForm, Examples) {
  EXPECT_TRUE(is_nondegenerate_form(form_from_bracket(Bracket::scalar(1.0), 2), 2).nondegenerate);
  EXPECT_FALSE(is_nondegenerate_form(TwoForm::zero(Model::matrix(2)), 2).nondegenerate);
  const auto k5 = is_nondegenerate_form(form_from_bracket(Bracket::scalar(5.0), 3), 3);
  EXPECT_TRUE(k5.nondegenerate);
  EXPECT_EQ(k5.kernel_dim, 0);
}

}  // namespace
