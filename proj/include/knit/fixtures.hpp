#ifndef KNIT_FIXTURES_HPP_
#define KNIT_FIXTURES_HPP_

// Bundled algebras and groups used by the tests, the acceptance suite and
// the fixture files under fixtures/.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knit/finite_group.hpp"
#include "knit/graded.hpp"
#include "knit/graded_lie.hpp"
#include "knit/knit_group.hpp"
#include "knit/knit_lie.hpp"

namespace knit::fixtures {

  ////////////////////////////////////////////////////////////////////////
  // Lie algebras
  ////////////////////////////////////////////////////////////////////////

  //! Structure constant given by names: [left, right] = sum c_k * name_k.
  struct NamedBracket {
    std::string                                  left;
    std::string                                  right;
    std::vector<std::pair<std::string, Rational>> value;
  };

  inline GradedLieAlgebra lie_from_names(GradedBasis                       basis,
                                         std::vector<NamedBracket> const& brackets) {
    std::vector<StructureConstant> consts;
    for (auto const& nb : brackets) {
      GradedVector v;
      for (auto const& [name, c] : nb.value) {
        v.add_term(basis.index_of(name), c);
      }
      std::size_t i = basis.index_of(nb.left);
      std::size_t j = basis.index_of(nb.right);
      if (i > j) {
        std::swap(i, j);
        v *= Rational(-basis.sign(i, j));
      }
      consts.push_back({i, j, std::move(v)});
    }
    return GradedLieAlgebra(std::move(basis), std::move(consts));
  }

  //! sl2 with basis (H, E, F), all even: [H,E] = 2E, [H,F] = -2F, [E,F] = H.
  inline GradedLieAlgebra sl2() {
    GradedBasis b({{"H", 0}, {"E", 0}, {"F", 0}}, GradingMode::Z);
    return lie_from_names(b,
                          {{"H", "E", {{"E", 2}}},
                           {"H", "F", {{"F", -2}}},
                           {"E", "F", {{"H", 1}}}});
  }

  //! Z2-graded: X even, theta odd, [theta, theta] = X, X central.
  inline GradedLieAlgebra super1() {
    GradedBasis b({{"X", 0}, {"theta", 1}}, GradingMode::Z2);
    return lie_from_names(b, {{"theta", "theta", {{"X", 1}}}});
  }

  //! gl(1|1) with supercommutator brackets; E11, E22 even and E12, E21 odd.
  inline GradedLieAlgebra gl11() {
    GradedBasis b({{"E11", 0}, {"E22", 0}, {"E12", 1}, {"E21", 1}},
                  GradingMode::Z2);
    return lie_from_names(b,
                          {{"E11", "E12", {{"E12", 1}}},
                           {"E11", "E21", {{"E21", -1}}},
                           {"E22", "E12", {{"E12", -1}}},
                           {"E22", "E21", {{"E21", 1}}},
                           {"E12", "E21", {{"E11", 1}, {"E22", 1}}}});
  }

  //! osp(1|2) with its Z-grading: H:0, E:2, F:-2, xp:1, xm:-1.
  inline GradedLieAlgebra osp12() {
    GradedBasis b(
        {{"H", 0}, {"E", 2}, {"F", -2}, {"xp", 1}, {"xm", -1}}, GradingMode::Z);
    return lie_from_names(b,
                          {{"H", "E", {{"E", 2}}},
                           {"H", "F", {{"F", -2}}},
                           {"E", "F", {{"H", 1}}},
                           {"H", "xp", {{"xp", 1}}},
                           {"H", "xm", {{"xm", -1}}},
                           {"E", "xm", {{"xp", -1}}},
                           {"F", "xp", {{"xm", -1}}},
                           {"xp", "xp", {{"E", 2}}},
                           {"xm", "xm", {{"F", -2}}},
                           {"xp", "xm", {{"H", 1}}}});
  }

  //! The Borel subalgebra span{H, E} of sl2.
  inline GradedLieAlgebra borel() {
    GradedBasis b({{"H", 0}, {"E", 0}}, GradingMode::Z);
    return lie_from_names(b, {{"H", "E", {{"E", 2}}}});
  }

  //! Abelian algebra on x1..xn, all of degree 0.
  inline GradedLieAlgebra abelian(std::size_t n, GradingMode mode = GradingMode::Z) {
    std::vector<BasisElement> e;
    for (std::size_t i = 1; i <= n; ++i) {
      e.push_back({"x" + std::to_string(i), 0});
    }
    return GradedLieAlgebra(GradedBasis(std::move(e), mode), {});
  }

  //! sl2 split as span{E, H} + span{F}.
  inline KnitPairLie sl2_pair() {
    auto C = sl2();
    return decompose_lie(C, {1, 0}, {2});
  }

  //! gl(1|1) split as span{E11, E12} + span{E22, E21}.
  inline KnitPairLie gl11_pair() {
    return decompose_lie(gl11(), {0, 2}, {1, 3});
  }

  //! osp(1|2) split as span{H, E, xp} + span{F, xm}.
  inline KnitPairLie osp12_pair() {
    return decompose_lie(osp12(), {0, 1, 3}, {2, 4});
  }

  //! span{H} acting on span{E} by ad(H); beta = 0.
  inline KnitPairLie semidirect_pair() {
    return decompose_lie(borel(), {0}, {1});
  }

  inline KnitPairLie zero_pair() {
    return KnitPairLie::zero(sl2(), abelian(2));
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups
  ////////////////////////////////////////////////////////////////////////

  inline FiniteGroup trivial_group() {
    return FiniteGroup({"e"}, {{0}}, 0);
  }

  //! Cyclic group with elements e, c, c^2, ... and c^i c^j = c^{i+j}.
  inline FiniteGroup cyclic(std::size_t n, std::string const& gen = "c") {
    std::vector<std::string>        names;
    std::vector<std::vector<Index>> table(n, std::vector<Index>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(i == 0   ? std::string("e")
                      : i == 1 ? gen
                               : gen + "^" + std::to_string(i));
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = (i + j) % n;
      }
    }
    return FiniteGroup(std::move(names), std::move(table), 0);
  }

  //! Klein four-group {e, a, b, ab}.
  inline FiniteGroup klein() {
    std::vector<std::vector<Index>> t(4, std::vector<Index>(4));
    for (Index i = 0; i < 4; ++i) {
      for (Index j = 0; j < 4; ++j) {
        t[i][j] = i ^ j;
      }
    }
    return FiniteGroup({"e", "a", "b", "ab"}, std::move(t), 0);
  }

  using Permutation = std::vector<std::size_t>;  // 0-based images

  //! Cycle notation on points 1..n without separators, "e" for the identity.
  inline std::string cycle_name(Permutation const& p) {
    std::string       out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i] || p[i] == i) {
        continue;
      }
      out += '(';
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        out += std::to_string(j + 1);
      }
      out += ')';
    }
    return out.empty() ? "e" : out;
  }

  //! Parses 1-based cycle notation like "(1234)" or "(12)(34)" on n points.
  inline Permutation perm(std::size_t n, std::string const& cycles) {
    Permutation p(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = i;
    }
    std::vector<std::size_t> cur;
    for (char ch : cycles) {
      if (ch == '(') {
        cur.clear();
      } else if (ch == ')') {
        for (std::size_t k = 0; k < cur.size(); ++k) {
          p[cur[k]] = cur[(k + 1) % cur.size()];
        }
      } else if (ch >= '1' && ch <= '9') {
        cur.push_back(static_cast<std::size_t>(ch - '1'));
      }
    }
    return p;
  }

  //! The permutation group generated by gens on n points (n <= 9), with
  //! product (x.y)(i) = x(y(i)). Elements are sorted by their image lists,
  //! so the identity comes first.
  inline FiniteGroup permutation_group(std::size_t                     n,
                                       std::vector<Permutation> const& gens) {
    auto compose = [n](Permutation const& x, Permutation const& y) {
      Permutation z(n);
      for (std::size_t i = 0; i < n; ++i) {
        z[i] = x[y[i]];
      }
      return z;
    };
    Permutation id(n);
    for (std::size_t i = 0; i < n; ++i) {
      id[i] = i;
    }
    std::vector<Permutation> elems{id};
    std::map<Permutation, Index> seen{{id, 0}};
    for (std::size_t k = 0; k < elems.size(); ++k) {
      for (auto const& g : gens) {
        auto z = compose(elems[k], g);
        if (seen.emplace(z, elems.size()).second) {
          elems.push_back(std::move(z));
        }
      }
    }
    std::sort(elems.begin(), elems.end());
    std::map<Permutation, Index> pos;
    std::vector<std::string>     names;
    for (Index i = 0; i < elems.size(); ++i) {
      pos[elems[i]] = i;
      names.push_back(cycle_name(elems[i]));
    }
    std::vector<std::vector<Index>> table(elems.size());
    for (Index i = 0; i < elems.size(); ++i) {
      for (Index j = 0; j < elems.size(); ++j) {
        table[i].push_back(pos.at(compose(elems[i], elems[j])));
      }
    }
    return FiniteGroup(std::move(names), std::move(table), 0);
  }

  inline FiniteGroup symmetric(std::size_t n) {
    if (n < 2) {
      return permutation_group(1, {});
    }
    std::string cyc = "(";
    for (std::size_t i = 1; i <= n; ++i) {
      cyc += std::to_string(i);
    }
    cyc += ")";
    return permutation_group(n, {perm(n, "(12)"), perm(n, cyc)});
  }

  //! Symmetries of a square with vertices 1..4.
  inline FiniteGroup dihedral4() {
    return permutation_group(4, {perm(4, "(1234)"), perm(4, "(13)")});
  }

  //! Selection of the named elements of G.
  inline SubgroupSelection select(FiniteGroup const&              G,
                                  std::vector<std::string> const& names) {
    std::vector<Index> m;
    for (auto const& nm : names) {
      m.push_back(G.index_of(nm));
    }
    return SubgroupSelection(G, std::move(m));
  }

  //! Selection of the subgroup generated by the named elements.
  inline SubgroupSelection generated(FiniteGroup const&              G,
                                     std::vector<std::string> const& gens) {
    std::vector<Index> g;
    for (auto const& nm : gens) {
      g.push_back(G.index_of(nm));
    }
    return SubgroupSelection(G, generated_subgroup(G, g));
  }

  //! S3 = <(12)> . <(123)>; the 3-cycles form a normal subgroup.
  inline KnitPairGroup s3_pair() {
    auto G = symmetric(3);
    return decompose_group(G, generated(G, {"(12)"}), generated(G, {"(123)"}));
  }

  //! S4 = <(1234)> . Sym{1,2,3}; neither factor is normal.
  inline KnitPairGroup s4_pair() {
    auto G = symmetric(4);
    return decompose_group(
        G, generated(G, {"(1234)"}), generated(G, {"(12)", "(123)"}));
  }

  //! A = C2, B = C3, alpha trivial and beta^a inversion for a != e.
  inline KnitPairGroup c2_c3_inverting_pair() {
    auto                      A = cyclic(2, "a");
    auto                      B = cyclic(3, "b");
    KnitPairGroup::table_type alpha{{0, 1}, {0, 1}, {0, 1}};
    KnitPairGroup::table_type beta{{0, 0}, {1, 2}, {2, 1}};
    return KnitPairGroup(A, B, std::move(alpha), std::move(beta));
  }

}  // namespace knit::fixtures

#endif  // KNIT_FIXTURES_HPP_
