#include <random>

#include <gtest/gtest.h>

#include "fixture_files.hpp"
#include "knit/fixtures.hpp"
#include "knit/knit_lie.hpp"

using namespace knit;
namespace fx = knit::fixtures;

namespace {

  Rational q(std::int64_t n, std::int64_t d = 1) {
    return Rational(n) / Rational(d);
  }

  std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
    std::vector<std::size_t> v;
    for (std::size_t i = begin; i < end; ++i) {
      v.push_back(i);
    }
    return v;
  }

  std::vector<KnitPairLie> valid_pairs() {
    return {fx::sl2_pair(), fx::gl11_pair(), fx::osp12_pair(), fx::semidirect_pair(),
            fx::zero_pair()};
  }

  //! Random degree-preserving map with entries in -1..1.
  GradedLinearMap random_map(std::mt19937& rng, GradedBasis const& s, GradedBasis const& t) {
    std::uniform_int_distribution<int> coef(-1, 1);
    std::vector<GradedVector>          cols(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < t.size(); ++j) {
        if (s.degree(i) == t.degree(j)) {
          cols[i].add_term(j, Rational(coef(rng)));
        }
      }
    }
    return GradedLinearMap(s, t, 0, std::move(cols));
  }

  //! exp(t ad x) on sl2 with basis (H, E, F).
  GradedLinearMap exp_ad(GradedLieAlgebra const& L, std::size_t x, Rational const& t) {
    auto a = ad(L, x);
    auto m = add_maps(GradedLinearMap::identity(L.basis()), a, t);
    return add_maps(m, compose_graded_maps(a, a), t * t / Rational(2));
  }

  //! The map on the knit basis (E, H, F) of sl2_pair() induced by h on (H, E, F).
  GradedLinearMap on_knit_basis(KnitPairLie const& p, GradedLinearMap const& h) {
    auto const basis = knit_basis(p);
    auto       to    = [&](GradedVector const& v) {
      GradedVector out;
      for (auto const& [i, c] : v.terms()) {
        out.add_term(basis.index_of(h.source().name(i)), c);
      }
      return out;
    };
    std::vector<GradedVector> cols(3);
    for (std::size_t i = 0; i < 3; ++i) {
      cols[basis.index_of(h.source().name(i))] = to(h.column(i));
    }
    return GradedLinearMap(basis, basis, 0, std::move(cols));
  }

  bool equivalence_holds(KnitPairLie const& src, KnitPairLie const& dst,
                         LieHomQuadruple const& quad) {
    bool by_equations = check_lie_quadruple(src, dst, quad).passed();
    bool by_hom = is_graded_lie_hom(knit_product(src), knit_product(dst),
                                    assemble_lie_hom(src, dst, quad))
                      .passed();
    return by_equations == by_hom;
  }

}  // namespace

TEST(KnitPairLie, FixturePairsVerify) {
  for (auto const& p : valid_pairs()) {
    auto r = verify_knit_pair(p);
    EXPECT_TRUE(r.passed()) << to_text(r);
  }
}

TEST(KnitPairLie, ConstructorChecksShapes) {
  auto p = fx::sl2_pair();
  auto alpha = p.alphas();
  alpha.pop_back();
  EXPECT_THROW(KnitPairLie(p.A(), p.B(), alpha, p.betas()), InvalidInput);
  auto wrong = p.alphas();
  wrong[0]   = GradedLinearMap::zero(p.A().basis(), p.A().basis());
  EXPECT_THROW(KnitPairLie(p.A(), p.B(), wrong, p.betas()), BasisMismatch);
  EXPECT_THROW(KnitPairLie::zero(fx::sl2(), fx::super1()), InvalidInput);
}

TEST(KnitProduct, ClosureOnAllFixturePairs) {
  for (auto const& p : valid_pairs()) {
    auto C = knit_product(p);
    auto r = verify_graded_lie(C);
    EXPECT_TRUE(r.passed()) << to_text(r);
    EXPECT_EQ(C.dimension(), p.A().dimension() + p.B().dimension());
  }
}

TEST(KnitProduct, MixedBracketSign) {
  // In gl(1|1): [E12, E21] = E11 + E22 with both odd, so
  // [(E12,0),(0,E21)] = (-(-1) beta(E21)E12, alpha(E12)E21) = (E11, E22).
  auto p = fx::gl11_pair();
  auto C = knit_product(p);
  auto b = C.basis();
  EXPECT_EQ(C.basis_bracket(b.index_of("E12"), b.index_of("E21")),
            GradedVector::unit(b.index_of("E11")) + GradedVector::unit(b.index_of("E22")));
}

TEST(KnitProduct, RefusesBrokenPairUnlessOverridden) {
  auto p = fx::broken_lie_pair();
  auto r = verify_knit_pair(p);
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(knit_product(p), VerificationFailed);
  try {
    knit_product(p);
  } catch (VerificationFailed const& e) {
    EXPECT_FALSE(e.report().passed());
  }
  auto C = knit_product(p, {true});
  EXPECT_FALSE(verify_graded_lie(C).passed());
}

TEST(KnitProduct, PrefixesCollidingNames) {
  auto p = KnitPairLie::zero(fx::sl2(), fx::borel());
  auto b = knit_basis(p);
  EXPECT_TRUE(b.find("A.H"));
  EXPECT_TRUE(b.find("B.E"));
  EXPECT_TRUE(b.find("F"));
  EXPECT_FALSE(b.find("H"));
}

TEST(Decompose, Sl2ProjectionOracle) {
  auto C = fx::sl2();
  auto p = decompose_lie(C, {1, 0}, {2});
  auto const& A = p.A().basis();
  auto const& B = p.B().basis();
  std::size_t E = A.index_of("E"), H = A.index_of("H"), F = B.index_of("F");
  // alpha(H)F = -2F, alpha(E)F = 0, beta(F)E = -H, beta(F)H = 0.
  EXPECT_EQ(p.alpha(H).column(F), GradedVector::unit(F, q(-2)));
  EXPECT_TRUE(p.alpha(E).column(F).is_zero());
  EXPECT_EQ(p.beta(F).column(E), GradedVector::unit(H, q(-1)));
  EXPECT_TRUE(p.beta(F).column(H).is_zero());

  // Independent projection: [a, F] in sl2 split along span{E,H} + span{F}.
  // All even, so [a, F] = alpha(a)F - beta(F)a.
  auto const& CB = C.basis();
  for (auto a : {"E", "H"}) {
    auto br = C.basis_bracket(CB.index_of(a), CB.index_of("F"));
    EXPECT_EQ(p.alpha(A.index_of(a)).column(F), GradedVector::unit(F, br.coefficient(2)));
    GradedVector minus_beta;
    minus_beta.add_term(E, br.coefficient(1));
    minus_beta.add_term(H, br.coefficient(0));
    EXPECT_EQ(p.beta(F).column(A.index_of(a)), -minus_beta);
  }
  EXPECT_TRUE(verify_knit_pair(p).passed());
}

TEST(Decompose, Sl2RecombinationIsABijectiveHom) {
  auto C   = fx::sl2();
  auto p   = decompose_lie(C, {1, 0}, {2});
  auto m   = recombination_map(p, C, {1, 0}, {2});
  auto K   = knit_product(p);
  EXPECT_TRUE(is_graded_lie_hom(K, C, m).passed());
  // Bijective: every column is a distinct basis vector.
  std::set<std::size_t> hit;
  for (auto const& col : m.columns()) {
    ASSERT_EQ(col.terms().size(), 1u);
    EXPECT_EQ(col.terms().begin()->second, q(1));
    hit.insert(col.terms().begin()->first);
  }
  EXPECT_EQ(hit.size(), 3u);
}

TEST(Decompose, Gl11SuperValues) {
  auto p = fx::gl11_pair();
  auto const& A = p.A().basis();
  auto const& B = p.B().basis();
  auto u = [](GradedBasis const& b, char const* n, std::int64_t c = 1) {
    return GradedVector::unit(b.index_of(n), Rational(c));
  };
  EXPECT_EQ(p.alpha(A.index_of("E11")).column(B.index_of("E21")), u(B, "E21", -1));
  EXPECT_EQ(p.alpha(A.index_of("E12")).column(B.index_of("E21")), u(B, "E22"));
  EXPECT_EQ(p.beta(B.index_of("E22")).column(A.index_of("E12")), u(A, "E12", -1));
  EXPECT_EQ(p.beta(B.index_of("E21")).column(A.index_of("E12")), u(A, "E11"));
  EXPECT_EQ(p.alpha(A.index_of("E12")).degree_shift(), 1);
}

TEST(Decompose, RoundTripThroughKnitProduct) {
  for (auto const& p : valid_pairs()) {
    auto C  = knit_product(p);
    auto nA = p.A().dimension();
    auto p2 = decompose_lie(C, range(0, nA), range(nA, C.dimension()));
    EXPECT_EQ(p2.alphas(), p.alphas());
    EXPECT_EQ(p2.betas(), p.betas());
  }
}

TEST(Decompose, RecombinationOnAllSplits) {
  struct Split {
    GradedLieAlgebra         C;
    std::vector<std::size_t> a, b;
  };
  for (auto const& s : {Split{fx::gl11(), {0, 2}, {1, 3}},
                        Split{fx::osp12(), {0, 1, 3}, {2, 4}},
                        Split{fx::osp12(), {2, 4}, {0, 1, 3}},
                        Split{fx::borel(), {0}, {1}}}) {
    auto p = decompose_lie(s.C, s.a, s.b);
    EXPECT_TRUE(verify_knit_pair(p).passed());
    EXPECT_TRUE(
        is_graded_lie_hom(knit_product(p), s.C, recombination_map(p, s.C, s.a, s.b))
            .passed());
  }
}

TEST(Decompose, Preconditions) {
  auto C = fx::sl2();
  EXPECT_THROW(decompose_lie(C, {0}, {1}), InvalidInput);          // not a partition
  EXPECT_THROW(decompose_lie(C, {0, 1}, {1, 2}), InvalidInput);    // overlap
  EXPECT_THROW(decompose_lie(C, {0, 5}, {1, 2}), InvalidInput);    // out of range
  EXPECT_THROW(decompose_lie(C, {1, 2}, {0}), PreconditionFailed); // [E,F] = H
  EXPECT_THROW(decompose_lie(fx::bad_jacobi(), {0}, {1}), PreconditionFailed);
}

TEST(Semidirect, BetaZeroGivesDerivationsAndAnIdealB) {
  auto p = fx::semidirect_pair();
  ASSERT_TRUE(verify_knit_pair(p).passed());
  for (auto const& b : p.betas()) {
    ASSERT_TRUE(b.is_zero());
  }
  for (auto const& a : p.alphas()) {
    EXPECT_TRUE(is_graded_derivation(p.B(), a).passed());
  }
  auto       C  = knit_product(p);
  auto const nA = p.A().dimension();
  // 0 (+) B is an ideal.
  for (std::size_t x = 0; x < C.dimension(); ++x) {
    for (std::size_t b = nA; b < C.dimension(); ++b) {
      for (auto const& [k, c] : C.basis_bracket(x, b).terms()) {
        EXPECT_GE(k, nA);
      }
    }
  }
}

TEST(Semidirect, PrintedAIdealVersionIsFalse) {
  // alpha(H) = ad(H) on span{E} is nonzero, so [H, E] = 2E leaves A (+) 0.
  auto p = fx::semidirect_pair();
  auto C = knit_product(p);
  auto br = C.basis_bracket(0, 1);
  EXPECT_EQ(br, GradedVector::unit(1, q(2)));
  bool a_closed = true;
  for (auto const& [k, c] : br.terms()) {
    a_closed = a_closed && k < p.A().dimension();
  }
  EXPECT_FALSE(a_closed);
}

TEST(Semidirect, DerivationsOnSuperB) {
  // A one-dimensional even A acting on the superalgebra super1.
  GradedBasis a({{"D", 0}}, GradingMode::Z2);
  GradedLieAlgebra A(a, {});
  auto B = fx::super1();
  // D acts by X -> 2X, theta -> theta, a derivation of [theta, theta] = X.
  GradedLinearMap d(B.basis(), B.basis(), 0,
                    {GradedVector::unit(0, q(2)), GradedVector::unit(1)});
  ASSERT_TRUE(is_graded_derivation(B, d).passed());
  KnitPairLie p(A, B, {d}, {GradedLinearMap::zero(a, a, 0), GradedLinearMap::zero(a, a, 1)});
  EXPECT_TRUE(verify_knit_pair(p).passed());
  EXPECT_TRUE(verify_graded_lie(knit_product(p)).passed());
  // A non-derivation action breaks the pair.
  GradedLinearMap bad(B.basis(), B.basis(), 0,
                      {GradedVector::unit(0), GradedVector::unit(1)});
  KnitPairLie p2(A, B, {bad}, p.betas());
  EXPECT_FALSE(verify_knit_pair(p2).passed());
}

TEST(VerifyKnitPair, LabelsBrokenConditions) {
  auto r = verify_knit_pair(fx::broken_lie_pair());
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.has_violation("alpha-knit") || r.has_violation("beta-knit")
              || r.has_violation("alpha-hom"));
}

TEST(Quadruple, FixtureQuadruplesAndEquivalence) {
  auto p = fx::sl2_pair();
  auto flip = fx::sl2_flip(p);
  struct Case {
    LieHomQuadruple q;
    bool            passes;
  };
  std::vector<Case> cases{{fx::lie_identity_quadruple(p), true},
                          {extract_lie_quadruple(p, p, flip), true},
                          {fx::lie_zero_quadruple(p), true},
                          {fx::lie_broken_quadruple(p), false}};
  auto id = fx::lie_identity_quadruple(p);
  auto c1 = id;
  c1.g = add_maps(c1.g, c1.g);
  cases.push_back({c1, false});
  auto c2 = id;
  c2.phi = GradedLinearMap(p.A().basis(), p.B().basis(), 0,
                           {GradedVector(), GradedVector::unit(0)});
  cases.push_back({c2, false});
  auto c3 = extract_lie_quadruple(p, p, flip);
  c3.psi = GradedLinearMap::zero(p.B().basis(), p.A().basis());
  cases.push_back({c3, false});
  for (auto const& c : cases) {
    auto rep = check_lie_quadruple(p, p, c.q);
    EXPECT_EQ(rep.passed(), c.passes) << to_text(rep);
    EXPECT_TRUE(equivalence_holds(p, p, c.q));
  }
}

TEST(Quadruple, ExtractAssembleAreInverse) {
  auto p    = fx::sl2_pair();
  auto flip = fx::sl2_flip(p);
  auto q    = extract_lie_quadruple(p, p, flip);
  EXPECT_EQ(assemble_lie_hom(p, p, q), flip);
  for (auto const& quad : {fx::lie_identity_quadruple(p), fx::lie_zero_quadruple(p),
                           fx::lie_broken_quadruple(p)}) {
    auto back = extract_lie_quadruple(p, p, assemble_lie_hom(p, p, quad));
    EXPECT_EQ(back.f, quad.f);
    EXPECT_EQ(back.g, quad.g);
    EXPECT_EQ(back.phi, quad.phi);
    EXPECT_EQ(back.psi, quad.psi);
  }
}

TEST(Quadruple, RandomInnerAutomorphismsPass) {
  auto         p = fx::sl2_pair();
  auto         L = fx::sl2();
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    auto h   = compose_graded_maps(exp_ad(L, 1, q(num(rng), den(rng))),
                                   exp_ad(L, 2, q(num(rng), den(rng))));
    auto Phi = on_knit_basis(p, h);
    auto quad = extract_lie_quadruple(p, p, Phi);
    auto rep  = check_lie_quadruple(p, p, quad);
    EXPECT_TRUE(rep.passed()) << to_text(rep);
    EXPECT_TRUE(equivalence_holds(p, p, quad));
  }
}

TEST(Quadruple, EquivalenceOnRandomQuadruples) {
  std::mt19937 rng(4321);
  struct Pair2 {
    KnitPairLie src, dst;
  };
  std::vector<Pair2> pairs{{fx::sl2_pair(), fx::sl2_pair()},
                           {fx::gl11_pair(), fx::gl11_pair()},
                           {fx::semidirect_pair(), fx::sl2_pair()},
                           {fx::osp12_pair(), fx::osp12_pair()}};
  int passing = 0;
  for (auto const& pr : pairs) {
    auto const& A  = pr.src.A().basis();
    auto const& B  = pr.src.B().basis();
    auto const& A2 = pr.dst.A().basis();
    auto const& B2 = pr.dst.B().basis();
    for (int trial = 0; trial < 60; ++trial) {
      LieHomQuadruple quad{random_map(rng, A, A2), random_map(rng, B, B2),
                           random_map(rng, A, B2), random_map(rng, B, A2)};
      EXPECT_TRUE(equivalence_holds(pr.src, pr.dst, quad));
      passing += check_lie_quadruple(pr.src, pr.dst, quad).passed();
    }
  }
  // The zero quadruple alone guarantees some passing cases are sampled.
  EXPECT_GT(passing, 0);
}

TEST(Quadruple, PrimedEquationsNotedForHoms) {
  auto p   = fx::sl2_pair();
  auto rep = check_lie_quadruple(p, p, fx::lie_identity_quadruple(p));
  EXPECT_EQ(rep.notes.size(), 2u);
  auto broken = fx::lie_broken_quadruple(p);
  auto r2     = check_lie_quadruple(p, p, broken);
  EXPECT_FALSE(r2.passed());
}

TEST(Quadruple, ShapeMismatchThrows) {
  auto p = fx::sl2_pair();
  auto q = fx::lie_identity_quadruple(p);
  EXPECT_THROW(check_lie_quadruple(p, fx::gl11_pair(), q), BasisMismatch);
}
