#include <gtest/gtest.h>

#include "ncpoisson/ncpoisson.hpp"
#include "oracles.hpp"

namespace {

using namespace ncpoisson;

PolyMat E(int n, int i, int j) { return PolyMat::from_matrix(elementary(n, i, j)); }

TEST(Commutator, UnitRelation) { EXPECT_LT(distance(commutator(E(2, 1, 2), E(2, 2, 2)), E(2, 1, 2)), 1e-15); }

TEST(Commutator, SelfIsZero) {
  Rng rng(1);
  const PolyMat a = random_section(rng, Model::bundle(3, 1, 4), 2);
  EXPECT_TRUE(commutator(a, a).is_zero());
}

TEST(Commutator, ProjectorPairGivesUnit) {
  const PolyMat p12 = E(2, 1, 2) + E(2, 2, 2);
  EXPECT_LT(distance(commutator(p12, E(2, 2, 2)), E(2, 1, 2)), 1e-15);
}

TEST(Commutator, OverflowIsAnError) {
  const Model model = Model::bundle(2, 1, 2);
  const Poly t2 = Poly::monomial({2, 0}, 1.0, 1, 2);
  const PolyMat a = PolyMat::unit_section(model, 0, 1, t2);
  const PolyMat b = PolyMat::unit_section(model, 1, 0, t2);
  EXPECT_THROW((void)commutator(a, b), Error);
}

TEST(Commutator, JacobiAndTracelessOnRandomTriples) {
  Rng rng(5);
  const Model model = Model::bundle(3, 2, 6);
  for (int s = 0; s < 100; ++s) {
    const PolyMat a = random_section(rng, model, 2);
    const PolyMat b = random_section(rng, model, 2);
    const PolyMat c = random_section(rng, model, 2);
    const PolyMat jac = commutator(commutator(a, b), c) + commutator(commutator(b, c), a) +
                        commutator(commutator(c, a), b);
    EXPECT_LT(jac.max_abs(), 1e-9);
    EXPECT_LT(commutator(a, b).trace().max_abs(), 1e-9);
    EXPECT_LT(distance(commutator(a, b), -commutator(b, a)), 1e-12);
  }
}

TEST(Elementary, Definition) {
  MatC want(2, 2);
  want << 0.0, 1.0, 0.0, 0.0;
  EXPECT_EQ(elementary(2, 1, 2), want);
}

TEST(Elementary, UnitRelations) {
  const int n = 3;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        for (int l = 1; l <= n; ++l) {
          const MatC want = j == k ? elementary(n, i, l) : MatC::Zero(n, n);
          EXPECT_EQ(elementary(n, i, j) * elementary(n, k, l), want);
        }
      }
    }
  }
  EXPECT_EQ(elementary(2, 1, 2) * elementary(2, 2, 1), elementary(2, 1, 1));
  EXPECT_EQ(elementary(2, 1, 2) * elementary(2, 1, 2), MatC::Zero(2, 2));
}

TEST(Elementary, OutOfRange) {
  for (auto [i, j] : {std::pair{0, 1}, {1, 0}, {3, 1}, {1, 3}}) {
    try {
      (void)elementary(2, i, j);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
  }
}

TEST(ProjectorBasis, IdempotentAndIndependent) {
  for (int n = 1; n <= 4; ++n) {
    const auto basis = projector_basis(n);
    ASSERT_EQ(static_cast<int>(basis.size()), n * n);
    MatC stacked(n * n, n * n);
    for (int k = 0; k < n * n; ++k) {
      EXPECT_LT(oracle::max_abs(basis[k] * basis[k] - basis[k]), 1e-15);
      stacked.col(k) = vec(basis[k]);
    }
    EXPECT_EQ(oracle::rank(stacked), n * n);
    Eigen::JacobiSVD<MatC> svd(stacked);
    EXPECT_GT(svd.singularValues().minCoeff(), 1e-9);
  }
}

TEST(ProjectorBasis, TwoByTwoMembers) {
  const auto b = projector_basis(2);
  const std::vector<MatC> want{oracle::unit(2, 0, 0), oracle::unit(2, 1, 1),
                               oracle::unit(2, 0, 1) + oracle::unit(2, 1, 1),
                               oracle::unit(2, 1, 0) + oracle::unit(2, 0, 0)};
  for (const auto& w : want) {
    bool found = false;
    for (const auto& m : b) found = found || oracle::max_abs(m - w) == 0.0;
    EXPECT_TRUE(found);
  }
  EXPECT_EQ(projector_basis(1).front(), MatC::Identity(1, 1));
}

TEST(CommutatorWitness, OffDiagonal) {
  const auto w = express_in_commutators(2, 1, 2);
  ASSERT_EQ(w.factors.size(), 1u);
  EXPECT_EQ(w.factors[0].first, elementary(2, 1, 2));
  EXPECT_EQ(w.factors[0].second, elementary(2, 2, 2));
}

TEST(CommutatorWitness, Diagonal) {
  const auto w = express_in_commutators(2, 1, 1);
  ASSERT_EQ(w.factors.size(), 2u);
  EXPECT_EQ(w.factors[0].first, elementary(2, 1, 2));
  EXPECT_EQ(w.factors[0].second, elementary(2, 2, 2));
  EXPECT_EQ(w.factors[1].first, elementary(2, 2, 1));
  EXPECT_EQ(w.factors[1].second, elementary(2, 1, 1));
  EXPECT_EQ(w.multiply_out(), elementary(2, 1, 1));
  // k wraps around for the last index
  EXPECT_EQ(express_in_commutators(3, 3, 3).factors[0].first, elementary(3, 3, 1));
}

TEST(CommutatorWitness, ReproducesEveryUnitExactly) {
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) EXPECT_EQ(express_in_commutators(n, i, j).multiply_out(), elementary(n, i, j));
    }
  }
}

TEST(CommutatorWitness, UnsupportedForScalars) {
  try {
    (void)express_in_commutators(1, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unsupported);
  }
}

TEST(TracelessPart, Examples) {
  EXPECT_TRUE(traceless_part(PolyMat::identity(Model::matrix(2))).is_zero());
  const MatC want = oracle::unit(2, 0, 0) - 0.5 * MatC::Identity(2, 2);
  EXPECT_LT(oracle::max_abs(traceless_part(elementary(2, 1, 1)) - want), 1e-15);
  const PolyMat t1 = PolyMat::scalar_section(Poly::variable(0, 1, 3), 2);
  EXPECT_TRUE(traceless_part(t1).is_zero());
}

TEST(TracelessPart, IdempotentAndTraceless) {
  Rng rng(9);
  const Model model = Model::bundle(3, 1, 4);
  for (int s = 0; s < 20; ++s) {
    const PolyMat a = random_section(rng, model, 3);
    const PolyMat t = traceless_part(a);
    EXPECT_LT(t.trace().max_abs(), 1e-12);
    EXPECT_LT(distance(traceless_part(t), t), 1e-12);
  }
}

TEST(EvalSection, Examples) {
  const Model model = Model::bundle(2, 1, 4);
  const Poly t = Poly::variable(0, 1, 4);
  const PolyMat phi = PolyMat::unit_section(model, 0, 1, t);
  const Point two{2.0};
  EXPECT_EQ(eval_section(phi, two), 2.0 * oracle::unit(2, 0, 1));
  EXPECT_EQ(eval_section(PolyMat::identity(model), two), MatC::Identity(2, 2));
  const PolyMat psi = PolyMat::unit_section(model, 1, 0, Poly::constant(1.0, 1, 4));
  const Point three{3.0};
  EXPECT_EQ(eval_section(phi * psi, three), 3.0 * oracle::unit(2, 0, 0));
  EXPECT_EQ(eval_section(phi, three) * eval_section(psi, three), 3.0 * oracle::unit(2, 0, 0));
}

TEST(EvalSection, MultiplicativeAndUnital) {
  Rng rng(77);
  const Model model = Model::bundle(2, 2, 6);
  for (int s = 0; s < 100; ++s) {
    const PolyMat a = random_section(rng, model, 3);
    const PolyMat b = random_section(rng, model, 3);
    const Point x = random_point(rng, 2);
    EXPECT_LT(oracle::max_abs(eval_section(a * b, x) - eval_section(a, x) * eval_section(b, x)), 1e-11);
    EXPECT_EQ(eval_section(PolyMat::identity(model), x), MatC::Identity(2, 2));
  }
}

TEST(Vec, RowMajor) {
  MatC m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  const Eigen::VectorXcd v = vec(m);
  EXPECT_EQ(v(1), Scalar(2.0));
  EXPECT_EQ(unvec(v, 2), m);
}

TEST(Linalg, RankAgreesWithEigenOracle) {
  Rng rng(13);
  for (int r = 0; r <= 5; ++r) {
    const MatC a = random_matrix(rng, 6).leftCols(std::max(r, 1)) * random_matrix(rng, 6).topRows(std::max(r, 1));
    const MatC m = r == 0 ? MatC::Zero(6, 6) : a;
    EXPECT_EQ(linalg::rank(m, 1e-9), oracle::rank(m));
    const MatC ns = linalg::nullspace(m, 1e-9);
    EXPECT_EQ(ns.cols(), 6 - oracle::rank(m));
    if (ns.cols() > 0) {
      EXPECT_LT(oracle::max_abs(m * ns), 1e-9);
    }
  }
}

TEST(Sampling, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(42);
  const double u = c.unit();
  EXPECT_GE(u, 0.0);
  EXPECT_LT(u, 1.0);
}

}  // namespace
