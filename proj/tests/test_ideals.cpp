#include <gtest/gtest.h>

#include "ncpoisson/ncpoisson.hpp"
#include "oracles.hpp"

namespace {

using namespace ncpoisson;

Poly mono(int a, int b, int vars, int cap, Scalar c = 1.0) { return Poly::monomial({a, b}, c, vars, cap); }

const Model kModel = Model::bundle(2, 1, 6);

PolyMat unit(int i, int j, const Poly& p) { return PolyMat::unit_section(kModel, i, j, p); }

TEST(Contains, Examples) {
  const Ideal at0 = Ideal::points({{0.0}});
  EXPECT_TRUE(contains(at0, unit(0, 1, mono(1, 0, 1, 6))));
  EXPECT_FALSE(contains(at0, unit(0, 1, mono(0, 0, 1, 6))));
  Rng rng(1);
  const Ideal two = Ideal::points({{0.0}, {1.0}});
  const Poly f = mono(2, 0, 1, 6) - mono(1, 0, 1, 6);
  for (int s = 0; s < 10; ++s) {
    const PolyMat psi = random_section(rng, kModel, 2);
    EXPECT_TRUE(contains(two, f * psi));
    EXPECT_TRUE(contains(Ideal::unit(), psi));
  }
}

TEST(Contains, SliceMembership) {
  const Model m2 = Model::bundle(2, 2, 4);
  const Ideal s = Ideal::slice(0, 0.0);
  EXPECT_TRUE(contains(s, PolyMat::unit_section(m2, 1, 0, mono(1, 1, 2, 4))));
  EXPECT_FALSE(contains(s, PolyMat::unit_section(m2, 1, 0, mono(0, 1, 2, 4))));
}

TEST(IdealConstruction, Validation) {
  EXPECT_THROW(Ideal::points({}), Error);
  EXPECT_THROW(Ideal::points({{0.0}, {0.0}}), Error);
  EXPECT_THROW(Ideal::points({{0.0}, {0.0, 1.0}}), Error);
  EXPECT_THROW(Ideal::points({{Scalar(std::nan(""), 0.0)}}), Error);
  EXPECT_THROW(Ideal::slice(2, 0.0), Error);
}

TEST(ZeroSetOp, Examples) {
  const auto z = zero_set(Ideal::points({{0.0}}));
  ASSERT_EQ(z.points.size(), 1u);
  EXPECT_EQ(z.points[0][0], Scalar(0.0));
  EXPECT_TRUE(zero_set(Ideal::unit()).empty());
  const auto s = zero_set(Ideal::slice(0, 0.0));
  ASSERT_TRUE(s.slice.has_value());
  EXPECT_LT(zero_set_consistency(Ideal::slice(0, 0.0), Model::bundle(2, 2, 4)), 1e-9);
}

TEST(ZeroSetOp, SampledSliceMembersVanishExactlyThere) {
  Rng rng(2);
  const Model m2 = Model::bundle(2, 2, 4);
  const Poly t1 = Poly::variable(0, 2, 4);
  for (int s = 0; s < 20; ++s) {
    const PolyMat psi = random_section(rng, m2, 2);
    const PolyMat member = t1 * psi;
    const Scalar y = random_scalar(rng);
    const Point on{0.0, y};
    EXPECT_LT(oracle::max_abs(oracle::eval(member, on)), 1e-12);
    const Point off{0.5, y};
    EXPECT_NEAR(oracle::max_abs(oracle::eval(member, off)), 0.5 * oracle::max_abs(oracle::eval(psi, off)), 1e-12);
  }
}

TEST(ZeroSetOp, RootsOfVanishingPolynomial) {
  Rng rng(3);
  for (int s = 0; s < 10; ++s) {
    const Ideal pts = Ideal::points({random_point(rng, 1), random_point(rng, 1), random_point(rng, 1)});
    EXPECT_LT(zero_set_consistency(pts, kModel), 1e-9);
  }
}

TEST(ZeroSetOp, MonotoneMembership) {
  Rng rng(4);
  const Point a{0.25}, b{-0.5};
  const Ideal big = Ideal::points({a});
  const Ideal small = Ideal::points({a, b});
  const Poly fb = vanishing_polynomial(small, kModel, a);
  for (int s = 0; s < 100; ++s) {
    const PolyMat psi = random_section(rng, kModel, 2);
    const PolyMat member = fb * psi;
    if (contains(small, member)) {
      EXPECT_TRUE(contains(big, member));
    }
    const PolyMat other = random_section(rng, kModel, 2);
    if (contains(small, other)) {
      EXPECT_TRUE(contains(big, other));
    }
  }
}

TEST(PoissonIdeal, Examples) {
  const Ideal at0 = Ideal::points({{0.0}});
  Rng rng(5);
  const Bracket lb = Bracket::polynomial(random_poly(rng, 1, 6, 2));
  EXPECT_TRUE(is_poisson_ideal(lb, at0, kModel, 100, 1));
  EXPECT_TRUE(is_poisson_ideal(lb, Ideal::unit(), kModel, 10, 1));
  const Poly lambda = random_poly(rng, 1, 6, 1);
  const PolyMat phi = unit(0, 1, mono(1, 0, 1, 6));
  const PolyMat psi = unit(1, 0, mono(0, 0, 1, 6));
  const PolyMat got = Bracket::polynomial(lambda).eval(phi, psi);
  const PolyMat want = (lambda * Poly::variable(0, 1, 6)) * (unit(0, 0, mono(0, 0, 1, 6)) - unit(1, 1, mono(0, 0, 1, 6)));
  EXPECT_LT(distance(got, want), 1e-12);
  EXPECT_TRUE(contains(at0, got));
}

TEST(PoissonIdeal, NonPoissonBracketDetected) {
  // {a,b} = [d/dt applied to a, b] moves t*E12 out of the ideal at 0.
  const Model model = Model::bundle(2, 1, 4);
  const Bracket b = Bracket::hamiltonian(HamiltonianMap::tabulate(
      model, 2, [](const PolyMat& a) { return traceless_part(a.map_entries([](const Poly& p) { return p.derivative(0); })); }));
  EXPECT_GT(poisson_ideal_max_residual(b, Ideal::points({{0.0}}), model, 50, 3), 1e-3);
}

TEST(LocallyProper, Examples) {
  const auto w = locally_proper_witness(Ideal::points({{0.0}}), Connection::flat(kModel));
  EXPECT_GT(w.escape, 0.5);
  EXPECT_LT(oracle::max_abs(oracle::eval(w.derivation.apply(w.member), w.at) - oracle::unit(2, 0, 1)), 1e-12);
  try {
    (void)locally_proper_witness(Ideal::unit(), Connection::flat(kModel));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoWitness);
  }
  const auto two = locally_proper_witness(Ideal::points({{0.0}, {1.0}}), Connection::flat(kModel));
  EXPECT_EQ(two.at[0], Scalar(0.0));
  EXPECT_NEAR(two.escape, 1.0, 1e-12);
}

TEST(LocallyProper, RandomConnectionsAndPoints) {
  Rng rng(6);
  for (int s = 0; s < 20; ++s) {
    const Ideal ideal = Ideal::points({random_point(rng, 1)});
    const Connection conn({random_section(rng, kModel, 1)});
    const auto w = locally_proper_witness(ideal, conn);
    EXPECT_TRUE(contains(ideal, w.member));
    EXPECT_FALSE(contains(ideal, w.derivation.apply(w.member)));
  }
}

TEST(PointQuotientOp, Examples) {
  const auto q = quotient_at_point({0.0});
  const PolyMat phi = unit(0, 1, mono(1, 0, 1, 6)) + unit(1, 0, mono(0, 0, 1, 6));
  EXPECT_EQ(q(phi), oracle::unit(2, 1, 0));
  Rng rng(7);
  const PolyMat psi = random_section(rng, kModel, 2);
  EXPECT_LT(oracle::max_abs(q(Poly::variable(0, 1, 6) * psi)), 1e-15);
  for (int s = 0; s < 20; ++s) {
    const Point x = random_point(rng, 1);
    const auto qx = quotient_at_point(x);
    const PolyMat a = random_section(rng, kModel, 2);
    const PolyMat b = random_section(rng, kModel, 2);
    EXPECT_LT(oracle::max_abs(qx(a * b) - qx(a) * qx(b)), 1e-12);
    EXPECT_LT(oracle::max_abs(qx(a) - oracle::eval(a, x)), 1e-12);
  }
}

TEST(Lift, Examples) {
  const Point x0{0.3};
  const PolyMat e12 = PolyMat::from_matrix(elementary(2, 1, 2));
  const Derivation lifted = lift_derivation(kModel, x0, Derivation::inner(e12));
  EXPECT_EQ(lifted.kind(), Derivation::Kind::Inner);
  EXPECT_LT(distance(lifted.generator(), unit(0, 1, mono(0, 0, 1, 6))), 1e-12);
  const Derivation zero = lift_derivation(kModel, x0, Derivation::zero(Model::matrix(2)));
  EXPECT_TRUE(zero.generator().is_zero());
}

TEST(Lift, CommutingSquareAndIdealPreserved) {
  Rng rng(8);
  for (int s = 0; s < 50; ++s) {
    const Point x0 = random_point(rng, 1);
    const Ideal ideal = Ideal::points({x0});
    const MatC m0 = random_matrix(rng, 2);
    const Derivation d = Derivation::table(2, Derivation::inner(PolyMat::from_matrix(m0)).to_table());
    const Derivation lifted = lift_derivation(kModel, x0, d);
    const PolyMat phi = random_section(rng, kModel, 2);
    EXPECT_LT(lift_square_defect(lifted, d, x0, phi), 1e-9);
    // independent path: evaluate [m0, phi(x0)] directly
    const MatC p = oracle::eval(phi, x0);
    EXPECT_LT(oracle::max_abs(oracle::eval(lifted.apply(phi), x0) - (m0 * p - p * m0)), 1e-9);
    const PolyMat member = vanishing_polynomial(ideal, kModel, x0) * phi;
    EXPECT_TRUE(contains(ideal, lifted.apply(member)));
  }
}

TEST(Lift, NonDerivationIsNotInner) {
  MatC t = MatC::Identity(4, 4);
  try {
    (void)lift_derivation(kModel, {0.0}, Derivation::raw_table(2, t));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotInner);
  }
}

TEST(Slice, Examples) {
  const Model m2 = Model::bundle(2, 2, 4);
  const PolyMat phi = PolyMat::unit_section(m2, 0, 1, mono(1, 0, 2, 4)) + PolyMat::unit_section(m2, 1, 0, mono(0, 1, 2, 4));
  const PolyMat r = restrict_to_slice(phi, 0, 0.0);
  EXPECT_EQ(r.num_vars(), 1);
  EXPECT_LT(distance(r, PolyMat::unit_section(Model::bundle(2, 1, 4), 1, 0, mono(1, 0, 1, 4))), 1e-15);
  EXPECT_LT(distance(restrict_to_slice(PolyMat::identity(m2), 1, 2.0), PolyMat::identity(Model::bundle(2, 1, 4))), 1e-15);
  EXPECT_THROW((void)restrict_to_slice(PolyMat::identity(kModel), 0, 0.0), Error);
}

TEST(Slice, HomomorphismAndKernel) {
  Rng rng(9);
  const Model m2 = Model::bundle(2, 2, 6);
  for (int s = 0; s < 20; ++s) {
    const PolyMat a = random_section(rng, m2, 2);
    const PolyMat b = random_section(rng, m2, 2);
    const Scalar c = random_scalar(rng);
    EXPECT_LT(distance(restrict_to_slice(a * b, 1, c), restrict_to_slice(a, 1, c) * restrict_to_slice(b, 1, c)), 1e-11);
    const Poly f = Poly::variable(1, 2, 6) - Poly::constant(c, 2, 6);
    EXPECT_LT(restrict_to_slice(f * a, 1, c).max_abs(), 1e-11);
    // substitution oracle at a random point of the slice
    const Scalar x = random_scalar(rng);
    const MatC want = oracle::eval(a, {x, c});
    EXPECT_LT(oracle::max_abs(oracle::eval(restrict_to_slice(a, 1, c), {x}) - want), 1e-11);
  }
}

TEST(Degeneracy, PoissonLocallyProperImpliesDegenerate) {
  Rng rng(10);
  for (int s = 0; s < 5; ++s) {
    const Ideal ideal = Ideal::points({random_point(rng, 1)});
    const Bracket b = Bracket::polynomial(random_poly(rng, 1, 6, 1));
    ASSERT_TRUE(is_poisson_ideal(b, ideal, kModel, 20, rng.next()));
    (void)locally_proper_witness(ideal, Connection::flat(kModel));
    EXPECT_FALSE(is_nondegenerate(b, kModel).nondegenerate);
  }
}

}  // namespace
