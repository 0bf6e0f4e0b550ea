#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "fixture_files.hpp"
#include "knit/enumerate.hpp"
#include "knit/fixtures.hpp"
#include "knit/knit_group.hpp"

using namespace knit;
namespace fx = knit::fixtures;

namespace {

  using Table = KnitPairGroup::table_type;

  std::vector<std::vector<Index>> all_permutations(std::size_t n) {
    std::vector<Index> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<Index>> out;
    do {
      out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }

  //! Every table with `rows` rows, each a permutation of 0..n-1.
  std::vector<Table> all_bijection_tables(std::size_t rows, std::size_t n) {
    auto               perms = all_permutations(n);
    std::vector<Table> out{Table{}};
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<Table> next;
      for (auto const& t : out) {
        for (auto const& p : perms) {
          auto u = t;
          u.push_back(p);
          next.push_back(std::move(u));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  //! Whether the product rule
  //!   (a1,b1)(a2,b2) = (a1 alpha_{b1}(a2), beta^{a2}(b1) b2)
  //! is associative with two-sided unit (e,e), computed directly from the
  //! factor tables.
  bool product_rule_is_group(FiniteGroup const& A,
                             FiniteGroup const& B,
                             Table const&       alpha,
                             Table const&       beta) {
    std::size_t const nA = A.order(), nB = B.order(), n = nA * nB;
    auto              mul = [&](Index x, Index y) {
      Index a1 = x / nB, b1 = x % nB, a2 = y / nB, b2 = y % nB;
      return A.mul(a1, alpha[b1][a2]) * nB + B.mul(beta[b1][a2], b2);
    };
    Index const e = A.identity() * nB + B.identity();
    for (Index x = 0; x < n; ++x) {
      if (mul(e, x) != x || mul(x, e) != x) {
        return false;
      }
    }
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        Index xy = mul(x, y);
        for (Index z = 0; z < n; ++z) {
          if (mul(xy, z) != mul(x, mul(y, z))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<std::pair<Table, Table>> brute_force_pairs(FiniteGroup const& A,
                                                         FiniteGroup const& B) {
    std::vector<std::pair<Table, Table>> out;
    auto const alphas = all_bijection_tables(B.order(), A.order());
    // beta[b] ranges over maps a -> beta^a(b); bijectivity is per column, so
    // enumerate the transposed tables and flip them.
    auto const beta_t = all_bijection_tables(A.order(), B.order());
    for (auto const& al : alphas) {
      for (auto const& bt : beta_t) {
        Table be(B.order(), std::vector<Index>(A.order()));
        for (Index a = 0; a < A.order(); ++a) {
          for (Index b = 0; b < B.order(); ++b) {
            be[b][a] = bt[a][b];
          }
        }
        if (product_rule_is_group(A, B, al, be)) {
          out.emplace_back(al, std::move(be));
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void expect_closure(KnitPairGroup const& p) {
    ASSERT_TRUE(verify_knit_actions(p).passed());
    auto P = knit_group_product(p);
    auto r = verify_group_table(P);
    EXPECT_TRUE(r.passed()) << to_text(r);
    auto EA = embedded_A(p, P);
    auto EB = embedded_B(p, P);
    EXPECT_TRUE(is_subgroup(EA).passed());
    EXPECT_TRUE(is_subgroup(EB).passed());
    EXPECT_TRUE(are_isomorphic(as_group(EA), p.A()));
    EXPECT_TRUE(are_isomorphic(as_group(EB), p.B()));
    // The embeddings themselves are homomorphisms.
    EXPECT_TRUE(is_group_hom(GroupMap(p.A(), P, EA.members)).passed());
    EXPECT_TRUE(is_group_hom(GroupMap(p.B(), P, EB.members)).passed());
    for (Index x = 0; x < P.order(); ++x) {
      EXPECT_EQ(knit_inverse(p, x), P.inverse(x)) << P.name(x);
    }
  }

  //! Unique (i', j') with A[i'] B[j'] = B[j] A[i], found by scanning.
  std::pair<Index, Index> factor_by_search(FiniteGroup const&       G,
                                           SubgroupSelection const& A,
                                           SubgroupSelection const& B,
                                           Index                    j,
                                           Index                    i) {
    Index const             target = G.mul(B.members[j], A.members[i]);
    std::size_t             hits   = 0;
    std::pair<Index, Index> found{no_index, no_index};
    for (Index i2 = 0; i2 < A.members.size(); ++i2) {
      for (Index j2 = 0; j2 < B.members.size(); ++j2) {
        if (G.mul(A.members[i2], B.members[j2]) == target) {
          ++hits;
          found = {i2, j2};
        }
      }
    }
    EXPECT_EQ(hits, 1u);
    return found;
  }

  void expect_factorization_oracle(FiniteGroup const&       G,
                                   SubgroupSelection const& A,
                                   SubgroupSelection const& B) {
    auto p = decompose_group(G, A, B);
    for (Index j = 0; j < B.members.size(); ++j) {
      for (Index i = 0; i < A.members.size(); ++i) {
        auto [i2, j2] = factor_by_search(G, A, B, j, i);
        EXPECT_EQ(p.alpha(j, i), i2);
        EXPECT_EQ(p.beta(j, i), j2);
      }
    }
    EXPECT_TRUE(verify_knit_actions(p).passed());
    auto P = knit_group_product(p);
    auto m = factorization_map(P, G, A, B);
    EXPECT_TRUE(m.is_bijective());
    EXPECT_TRUE(is_group_hom(m).passed());
    EXPECT_TRUE(are_isomorphic(P, G));
  }

  bool all_identity(Table const& t) {
    for (auto const& row : t) {
      for (Index k = 0; k < row.size(); ++k) {
        if (row[k] != k) {
          return false;
        }
      }
    }
    return true;
  }

  //! beta table as the per-a bijections beta^a, for the "beta is trivial"
  //! test: beta[b][a] == b everywhere.
  bool beta_trivial(KnitPairGroup const& p) {
    for (Index b = 0; b < p.B().order(); ++b) {
      for (Index a = 0; a < p.A().order(); ++a) {
        if (p.beta(b, a) != b) {
          return false;
        }
      }
    }
    return true;
  }

  bool hom_equivalence_holds(KnitPairGroup const&     src,
                             KnitPairGroup const&     dst,
                             GroupHomQuadruple const& q) {
    bool check = check_group_quadruple(src, dst, q, false).passed();
    bool hom   = assemble_group_hom(src, dst, q).second.passed();
    return check == hom;
  }

}  // namespace

TEST(KnitActions, TrivialPairPasses) {
  auto p = KnitPairGroup::trivial(fx::cyclic(2), fx::cyclic(3));
  EXPECT_TRUE(verify_knit_actions(p).passed());
  auto P = knit_group_product(p);
  EXPECT_TRUE(are_isomorphic(P, fx::cyclic(6)));
}

TEST(KnitActions, CorruptedAlphaEntryIsReported) {
  // Exchanging c and c^2 in C4 is not an automorphism.
  auto p     = KnitPairGroup::trivial(fx::cyclic(4), fx::cyclic(2));
  auto alpha = p.alpha_table();
  std::swap(alpha[1][1], alpha[1][2]);
  KnitPairGroup bad(p.A(), p.B(), alpha, p.beta_table());
  auto          r = verify_knit_actions(bad);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.has_violation("(1)") || r.has_violation("(3)"));
  EXPECT_THROW(knit_group_product(bad), VerificationFailed);
  EXPECT_NO_THROW(knit_group_product(bad, {true}));
}

TEST(KnitActions, BrokenFixtureViolatesConditionOne) {
  auto r = verify_knit_actions(fx::broken_group_pair());
  EXPECT_TRUE(r.has_violation("(1)"));
}

TEST(KnitActions, ConstructorRequiresShape) {
  auto A = fx::cyclic(2);
  auto B = fx::cyclic(3);
  EXPECT_THROW(KnitPairGroup(A, B, {{0, 1}}, {{0, 0}, {1, 1}, {2, 2}}), InvalidInput);
  EXPECT_THROW(KnitPairGroup(A, B, {{0, 1}, {0, 1}, {0, 2}}, {{0, 0}, {1, 1}, {2, 2}}),
               InvalidInput);
}

TEST(KnitActions, DerivedIdentitiesFixTheUnit) {
  for (auto const& p : {fx::s3_pair(), fx::s4_pair(), fx::c2_c3_inverting_pair()}) {
    for (Index b = 0; b < p.B().order(); ++b) {
      EXPECT_EQ(p.alpha(b, p.A().identity()), p.A().identity());
    }
    for (Index a = 0; a < p.A().order(); ++a) {
      EXPECT_EQ(p.beta(p.B().identity(), a), p.B().identity());
    }
  }
}

TEST(KnitProduct, ClosureOnFixturesAndEnumeratedPairs) {
  expect_closure(KnitPairGroup::trivial(fx::cyclic(2), fx::cyclic(3)));
  expect_closure(KnitPairGroup::trivial(fx::klein(), fx::symmetric(3)));
  expect_closure(fx::s3_pair());
  expect_closure(fx::s4_pair());
  expect_closure(fx::c2_c3_inverting_pair());
  for (auto const& p : enumerate_knit_pairs(fx::cyclic(2), fx::cyclic(3)).pairs) {
    expect_closure(p);
  }
  for (auto const& p : enumerate_knit_pairs(fx::cyclic(4), fx::cyclic(2)).pairs) {
    expect_closure(p);
  }
}

TEST(KnitProduct, PairOrderingAndNames) {
  auto p = KnitPairGroup::trivial(fx::cyclic(2, "a"), fx::cyclic(3, "b"));
  auto P = knit_group_product(p);
  EXPECT_EQ(P.name(0), "e|e");
  EXPECT_EQ(P.name(1), "e|b");
  EXPECT_EQ(P.name(3), "a|e");
  EXPECT_EQ(P.identity(), 0u);
  EXPECT_EQ(p.pair_index(1, 2), 5u);
  EXPECT_EQ(p.split(5), (std::pair<Index, Index>{1, 2}));
}

TEST(KnitProduct, InvertingActionGivesS3WithNormalB) {
  auto p = fx::c2_c3_inverting_pair();
  auto P = knit_group_product(p);
  EXPECT_TRUE(are_isomorphic(P, fx::symmetric(3)));
  // alpha trivial: {e} x B is normal.
  EXPECT_TRUE(is_normal(embedded_B(p, P)));
  EXPECT_FALSE(is_normal(embedded_A(p, P)));
}

TEST(KnitProduct, DegenerationToSemidirectProducts) {
  auto check = [](KnitPairGroup const& p) {
    auto P = knit_group_product(p);
    if (all_identity(p.alpha_table())) {
      EXPECT_TRUE(is_normal(embedded_B(p, P)));
    }
    if (beta_trivial(p)) {
      EXPECT_TRUE(is_normal(embedded_A(p, P)));
    }
  };
  for (auto const& [A, B] : std::vector<std::pair<FiniteGroup, FiniteGroup>>{
           {fx::cyclic(2), fx::cyclic(3)},
           {fx::cyclic(3), fx::cyclic(2)},
           {fx::cyclic(2), fx::cyclic(4)},
           {fx::klein(), fx::cyclic(2)},
           {fx::cyclic(3), fx::cyclic(3)}}) {
    for (auto const& p : enumerate_knit_pairs(A, B).pairs) {
      check(p);
    }
  }
}

TEST(DecomposeGroup, S3HasTrivialAlphaAndReconstructs) {
  auto G = fx::symmetric(3);
  auto A = fx::generated(G, {"(12)"});
  auto B = fx::generated(G, {"(123)"});
  expect_factorization_oracle(G, A, B);
  auto p = decompose_group(G, A, B);
  EXPECT_TRUE(all_identity(p.alpha_table()));
  EXPECT_FALSE(beta_trivial(p));
}

TEST(DecomposeGroup, S4IsAProperKnit) {
  auto G = fx::symmetric(4);
  auto A = fx::generated(G, {"(1234)"});
  auto B = fx::generated(G, {"(12)", "(123)"});
  expect_factorization_oracle(G, A, B);
  auto p = decompose_group(G, A, B);
  EXPECT_FALSE(all_identity(p.alpha_table()));
  EXPECT_FALSE(beta_trivial(p));
  auto P = knit_group_product(p);
  EXPECT_FALSE(is_normal(embedded_A(p, P)));
  EXPECT_FALSE(is_normal(embedded_B(p, P)));
  EXPECT_FALSE(is_normal(A));
  EXPECT_FALSE(is_normal(B));
}

TEST(DecomposeGroup, OtherExactFactorizations) {
  auto S4 = fx::symmetric(4);
  // S4 = V4 . Sym{1,2,3}, a semidirect product with normal V4.
  expect_factorization_oracle(
      S4, fx::generated(S4, {"(12)(34)", "(13)(24)"}), fx::generated(S4, {"(12)", "(123)"}));
  // S4 = Sym{1,2,3} . <(1234)>.
  expect_factorization_oracle(
      S4, fx::generated(S4, {"(12)", "(123)"}), fx::generated(S4, {"(1234)"}));
  auto V = fx::klein();
  expect_factorization_oracle(V, fx::select(V, {"e", "a"}), fx::select(V, {"e", "b"}));
  // Trivial B.
  auto C6 = fx::cyclic(6);
  expect_factorization_oracle(C6, SubgroupSelection(C6, generated_subgroup(C6, {1})),
                              fx::select(C6, {"e"}));
}

TEST(DecomposeGroup, RejectsBadInput) {
  auto S4 = fx::symmetric(4);
  auto A  = fx::generated(S4, {"(1234)"});
  // Intersect in (13)(24).
  EXPECT_THROW(decompose_group(S4, A, fx::generated(S4, {"(13)(24)", "(12)(34)"})),
               PreconditionFailed);
  // Order mismatch.
  EXPECT_THROW(decompose_group(S4, A, fx::generated(S4, {"(123)"})), PreconditionFailed);
  // Not a subgroup.
  EXPECT_THROW(decompose_group(S4, A, fx::select(S4, {"e", "(12)", "(13)"})),
               PreconditionFailed);
  // Selection from a different group.
  auto S3 = fx::symmetric(3);
  EXPECT_THROW(decompose_group(S4, A, fx::generated(S3, {"(12)"})), BasisMismatch);
}

TEST(Enumeration, GoldenCounts) {
  auto count_classes = [](std::vector<KnitPairGroup> const& pairs) {
    std::vector<FiniteGroup> reps;
    for (auto const& p : pairs) {
      auto P = knit_group_product(p);
      bool seen = std::any_of(reps.begin(), reps.end(),
                              [&](auto const& R) { return bool(are_isomorphic(P, R)); });
      if (!seen) {
        reps.push_back(P);
      }
    }
    return reps;
  };
  auto c22 = enumerate_knit_pairs(fx::cyclic(2), fx::cyclic(2));
  ASSERT_EQ(c22.pairs.size(), 1u);
  EXPECT_TRUE(are_isomorphic(knit_group_product(c22.pairs[0]), fx::klein()));

  for (auto const& [A, B] : {std::pair{fx::cyclic(2), fx::cyclic(3)},
                             std::pair{fx::cyclic(3), fx::cyclic(2)}}) {
    auto res  = enumerate_knit_pairs(A, B);
    EXPECT_EQ(res.pairs.size(), 2u);
    EXPECT_FALSE(res.truncated);
    auto reps = count_classes(res.pairs);
    ASSERT_EQ(reps.size(), 2u);
    bool c6 = false, s3 = false;
    for (auto const& R : reps) {
      c6 = c6 || bool(are_isomorphic(R, fx::cyclic(6)));
      s3 = s3 || bool(are_isomorphic(R, fx::symmetric(3)));
    }
    EXPECT_TRUE(c6 && s3);
  }
}

TEST(Enumeration, MatchesBruteForceOverAllBijectionTables) {
  for (auto const& [A, B] : std::vector<std::pair<FiniteGroup, FiniteGroup>>{
           {fx::cyclic(2), fx::cyclic(2)},
           {fx::cyclic(2), fx::cyclic(3)},
           {fx::cyclic(3), fx::cyclic(2)},
           {fx::cyclic(3), fx::cyclic(3)},
           {fx::cyclic(4), fx::cyclic(2)},
           {fx::cyclic(2), fx::cyclic(4)},
           {fx::klein(), fx::cyclic(2)},
           {fx::trivial_group(), fx::cyclic(3)}}) {
    auto want = brute_force_pairs(A, B);
    auto got  = enumerate_knit_pairs(A, B);
    std::vector<std::pair<Table, Table>> have;
    for (auto const& p : got.pairs) {
      have.emplace_back(p.alpha_table(), p.beta_table());
      EXPECT_TRUE(verify_knit_actions(p).passed());
    }
    EXPECT_EQ(have, want) << A.order() << "x" << B.order();
    EXPECT_EQ(got.total, want.size());
  }
}

TEST(Enumeration, LimitTruncatesAfterSorting) {
  auto all = enumerate_knit_pairs(fx::klein(), fx::cyclic(2));
  ASSERT_GT(all.pairs.size(), 2u);
  auto two = enumerate_knit_pairs(fx::klein(), fx::cyclic(2), {2, 32});
  EXPECT_TRUE(two.truncated);
  EXPECT_EQ(two.total, all.pairs.size());
  ASSERT_EQ(two.pairs.size(), 2u);
  EXPECT_EQ(two.pairs[0], all.pairs[0]);
  EXPECT_EQ(two.pairs[1], all.pairs[1]);
  auto big = enumerate_knit_pairs(fx::klein(), fx::cyclic(2), {100, 32});
  EXPECT_FALSE(big.truncated);
}

TEST(Enumeration, OrderBound) {
  EXPECT_THROW(enumerate_knit_pairs(fx::cyclic(6), fx::cyclic(6)), LimitExceeded);
  EXPECT_THROW(enumerate_knit_pairs(fx::cyclic(4), fx::cyclic(2), {0, 7}), LimitExceeded);
  EXPECT_THROW(enumerate_knit_pairs(fx::bad_group(), fx::cyclic(2)), PreconditionFailed);
}

TEST(Enumeration, MirrorPairsStayValid) {
  for (auto const& p : enumerate_knit_pairs(fx::cyclic(2), fx::cyclic(4)).pairs) {
    auto m = mirror_pair(p);
    EXPECT_TRUE(verify_knit_actions(m).passed());
    EXPECT_TRUE(are_isomorphic(knit_group_product(m), knit_group_product(p)));
  }
  auto m = mirror_pair(fx::s4_pair());
  EXPECT_TRUE(verify_knit_actions(m).passed());
}

TEST(GroupQuadruple, IdentityAndConjugationsPass) {
  auto p  = fx::s4_pair();
  auto id = fx::group_identity_quadruple(p);
  EXPECT_TRUE(check_group_quadruple(p, p, id, false).passed());
  auto [Phi, rep] = assemble_group_hom(p, p, id);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(Phi, GroupMap::identity(knit_group_product(p)));
  EXPECT_EQ(extract_group_quadruple(p, p, Phi), id);

  for (Index x = 0; x < 24; ++x) {
    auto C = fx::conjugation(p, x);
    auto q = extract_group_quadruple(p, p, C);
    auto r = check_group_quadruple(p, p, q, false);
    EXPECT_TRUE(r.passed()) << x;
    auto [Phi2, rep2] = assemble_group_hom(p, p, q);
    EXPECT_TRUE(rep2.passed());
    EXPECT_EQ(Phi2, C);
    EXPECT_EQ(extract_group_quadruple(p, p, Phi2), q);
  }
}

TEST(GroupQuadruple, ConstantMapGivesConstantQuadruple) {
  auto p = fx::s3_pair();
  auto P = knit_group_product(p);
  auto q = extract_group_quadruple(p, p, GroupMap::trivial(P, P));
  EXPECT_EQ(q.f, GroupMap::trivial(p.A(), p.A()));
  EXPECT_EQ(q.g, GroupMap::trivial(p.B(), p.B()));
  EXPECT_EQ(q.phi, GroupMap::trivial(p.B(), p.A()));
  EXPECT_EQ(q.psi, GroupMap::trivial(p.A(), p.B()));
  EXPECT_TRUE(check_group_quadruple(p, p, q, false).passed());
}

TEST(GroupQuadruple, CorruptedVariantsFailBothWays) {
  auto p = fx::s4_pair();
  auto q = fx::group_broken_quadruple(p);
  EXPECT_FALSE(check_group_quadruple(p, p, q, false).passed());
  EXPECT_FALSE(assemble_group_hom(p, p, q).second.passed());

  // Identity quadruple with one psi value corrupted.
  auto id = fx::group_identity_quadruple(p);
  id.psi.images[1] = 1;
  auto r = check_group_quadruple(p, p, id, false);
  EXPECT_TRUE(r.has_violation("(f)") || r.has_violation("(h)"));
  auto [Phi, rep] = assemble_group_hom(p, p, id);
  EXPECT_TRUE(rep.has_violation("(3)"));
}

TEST(GroupQuadruple, EquivalenceOnRandomNormalizedCorruptions) {
  std::mt19937 rng(4711);
  std::size_t  failing = 0;
  for (auto const& p : {fx::s4_pair(), fx::s3_pair(), fx::c2_c3_inverting_pair()}) {
    auto const P = knit_group_product(p);
    for (int trial = 0; trial < 60; ++trial) {
      Index x = std::uniform_int_distribution<Index>(0, P.order() - 1)(rng);
      auto  q = extract_group_quadruple(p, p, fx::conjugation(p, x));
      ASSERT_TRUE(hom_equivalence_holds(p, p, q));
      // Change one value at a non-identity element, keeping e -> e.
      GroupMap* maps[] = {&q.f, &q.g, &q.phi, &q.psi};
      GroupMap& m      = *maps[trial % 4];
      if (m.source.order() < 2 || m.target.order() < 2) {
        continue;
      }
      Index at;
      do {
        at = std::uniform_int_distribution<Index>(0, m.source.order() - 1)(rng);
      } while (at == m.source.identity());
      Index to;
      do {
        to = std::uniform_int_distribution<Index>(0, m.target.order() - 1)(rng);
      } while (to == m.images[at]);
      m.images[at] = to;
      bool check = check_group_quadruple(p, p, q, false).passed();
      EXPECT_EQ(check, assemble_group_hom(p, p, q).second.passed());
      failing += check ? 0 : 1;
    }
  }
  // A corruption can land on another valid quadruple, but most do not.
  EXPECT_GT(failing, 100u);
}

TEST(GroupQuadruple, EquivalenceNeedsIdentityPreservingMaps) {
  // With trivial actions on C2 x C2, f = id, phi = e, psi = const c and
  // g(b) = c b assemble to the identity map, which is a homomorphism, yet
  // (g) fails at (e, e) because g(e) != e.
  auto C = fx::cyclic(2);
  auto p = KnitPairGroup::trivial(C, C);
  GroupHomQuadruple q{GroupMap::identity(C), GroupMap(C, C, {1, 0}),
                      GroupMap::trivial(C, C), GroupMap(C, C, {1, 1})};
  auto [Phi, rep] = assemble_group_hom(p, p, q);
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(Phi, GroupMap::identity(knit_group_product(p)));
  EXPECT_FALSE(check_group_quadruple(p, p, q, false).passed());
  // Extracting from the assembled map restores the normalized quadruple.
  auto n = extract_group_quadruple(p, p, Phi);
  EXPECT_TRUE(check_group_quadruple(p, p, n, false).passed());
}

TEST(GroupQuadruple, PrimedVariant) {
  auto p  = fx::s4_pair();
  auto id = fx::group_identity_quadruple(p);
  auto r  = check_group_quadruple(p, p, id, true);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.notes.empty());
  auto bad = fx::group_broken_quadruple(p);
  EXPECT_THROW(check_group_quadruple(p, p, bad, true), PreconditionFailed);
}

TEST(GroupQuadruple, ShapeMismatchIsRejected) {
  auto p  = fx::s4_pair();
  auto s3 = fx::s3_pair();
  auto id = fx::group_identity_quadruple(s3);
  EXPECT_THROW(check_group_quadruple(p, p, id, false), InvalidInput);
  EXPECT_THROW(assemble_group_hom(p, p, id), InvalidInput);
  EXPECT_THROW(extract_group_quadruple(p, p, GroupMap::identity(fx::symmetric(3))),
               InvalidInput);
}

TEST(GroupQuadruple, HomsBetweenDifferentProducts) {
  // C6 = C2 x C3 direct onto S3 = C2 . C3 with inversion: the sign-like
  // projection (a, b) -> (a, e) is a homomorphism.
  auto src = KnitPairGroup::trivial(fx::cyclic(2, "a"), fx::cyclic(3, "b"));
  auto dst = fx::c2_c3_inverting_pair();
  GroupHomQuadruple q{GroupMap::identity(src.A()), GroupMap::trivial(src.B(), dst.B()),
                      GroupMap::trivial(src.B(), dst.A()),
                      GroupMap::trivial(src.A(), dst.B())};
  EXPECT_TRUE(check_group_quadruple(src, dst, q, false).passed());
  EXPECT_TRUE(assemble_group_hom(src, dst, q).second.passed());
  // The identity on pairs is not a homomorphism C6 -> S3.
  GroupHomQuadruple bad{GroupMap::identity(src.A()), GroupMap::identity(src.B()),
                        GroupMap::trivial(src.B(), dst.A()),
                        GroupMap::trivial(src.A(), dst.B())};
  EXPECT_FALSE(check_group_quadruple(src, dst, bad, false).passed());
  EXPECT_FALSE(assemble_group_hom(src, dst, bad).second.passed());
}
