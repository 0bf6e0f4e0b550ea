#ifndef KNIT_KNIT_GROUP_HPP_
#define KNIT_KNIT_GROUP_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "knit/errors.hpp"
#include "knit/finite_group.hpp"
#include "knit/report.hpp"

namespace knit {

  //! A pair of actions alpha : B x A -> A and beta : B x A -> B stored as
  //! full tables, alpha[b][a] = alpha_b(a) and beta[b][a] = beta^a(b).
  //! Bijectivity and the knitting laws are checked by verify_knit_actions.
  class KnitPairGroup {
   public:
    using table_type = std::vector<std::vector<Index>>;

    KnitPairGroup() = default;

    KnitPairGroup(FiniteGroup A, FiniteGroup B, table_type alpha, table_type beta)
        : A_(std::move(A)),
          B_(std::move(B)),
          alpha_(std::move(alpha)),
          beta_(std::move(beta)) {
      auto check = [&](table_type const& t, std::size_t range, char const* what) {
        if (t.size() != B_.order()) {
          throw InvalidInput(std::string(what) + " needs one row per element of B");
        }
        for (auto const& row : t) {
          if (row.size() != A_.order()) {
            throw InvalidInput(std::string(what)
                               + " rows need one entry per element of A");
          }
          for (Index x : row) {
            if (x >= range) {
              throw InvalidInput(std::string(what) + " entry out of range");
            }
          }
        }
      };
      check(alpha_, A_.order(), "alpha");
      check(beta_, B_.order(), "beta");
    }

    //! alpha_b = id and beta^a = id: the direct product.
    static KnitPairGroup trivial(FiniteGroup A, FiniteGroup B) {
      table_type alpha(B.order(), std::vector<Index>(A.order()));
      table_type beta(B.order(), std::vector<Index>(A.order()));
      for (Index b = 0; b < B.order(); ++b) {
        for (Index a = 0; a < A.order(); ++a) {
          alpha[b][a] = a;
          beta[b][a]  = b;
        }
      }
      return KnitPairGroup(
          std::move(A), std::move(B), std::move(alpha), std::move(beta));
    }

    FiniteGroup const& A() const noexcept {
      return A_;
    }
    FiniteGroup const& B() const noexcept {
      return B_;
    }
    //! alpha_b(a)
    Index alpha(Index b, Index a) const {
      return alpha_[b][a];
    }
    //! beta^a(b)
    Index beta(Index b, Index a) const {
      return beta_[b][a];
    }
    table_type const& alpha_table() const noexcept {
      return alpha_;
    }
    table_type const& beta_table() const noexcept {
      return beta_;
    }

    //! Index of the pair (a, b) in the knit product.
    Index pair_index(Index a, Index b) const noexcept {
      return a * B_.order() + b;
    }
    std::pair<Index, Index> split(Index x) const noexcept {
      return {x / B_.order(), x % B_.order()};
    }

    friend bool operator==(KnitPairGroup const&, KnitPairGroup const&) = default;

   private:
    FiniteGroup A_;
    FiniteGroup B_;
    table_type  alpha_;
    table_type  beta_;
  };

  //! The four maps f(a) = Phi_1(a,e), g(b) = Phi_2(e,b), phi(b) = Phi_1(e,b),
  //! psi(a) = Phi_2(a,e) of a map between knit products.
  struct GroupHomQuadruple {
    GroupMap f;    // A -> A'
    GroupMap g;    // B -> B'
    GroupMap phi;  // B -> A'
    GroupMap psi;  // A -> B'

    friend bool operator==(GroupHomQuadruple const&,
                           GroupHomQuadruple const&) = default;
  };

  //! Checks conditions (1)-(4) for an automorphically knitted pair:
  //!   (1) b -> alpha_b is a homomorphism into the bijections of A,
  //!   (2) a -> beta^a is an anti-homomorphism into the bijections of B,
  //!   (3) alpha_b(a1 a2) = alpha_b(a1) alpha_{beta^{a1}(b)}(a2),
  //!   (4) beta^a(b1 b2) = beta^{alpha_{b2}(a)}(b1) beta^a(b2).
  inline VerificationReport verify_knit_actions(KnitPairGroup const& p) {
    VerificationReport r("automorphically knitted pair");
    auto const&        A  = p.A();
    auto const&        B  = p.B();
    std::size_t const  nA = A.order();
    std::size_t const  nB = B.order();
    auto const         an = [&](Index a) { return A.name(a); };
    auto const         bn = [&](Index b) { return B.name(b); };

    // (1)
    for (Index b = 0; b < nB; ++b) {
      std::vector<bool> hit(nA, false);
      std::size_t       distinct = 0;
      for (Index a = 0; a < nA; ++a) {
        distinct += hit[p.alpha(b, a)] ? 0 : 1;
        hit[p.alpha(b, a)] = true;
      }
      r.expect(distinct == nA,
               {"(1)",
                "alpha_b is a bijection",
                {b},
                {bn(b)},
                std::to_string(distinct) + " distinct images",
                std::to_string(nA)});
    }
    for (Index a = 0; a < nA; ++a) {
      Index e = B.identity();
      r.expect(p.alpha(e, a) == a,
               {"(1)",
                "alpha_e = id",
                {e, a},
                {bn(e), an(a)},
                an(p.alpha(e, a)),
                an(a)});
    }
    for (Index b1 = 0; b1 < nB; ++b1) {
      for (Index b2 = 0; b2 < nB; ++b2) {
        Index b12 = B.mul(b1, b2);
        for (Index a = 0; a < nA; ++a) {
          Index lhs = p.alpha(b1, p.alpha(b2, a));
          Index rhs = p.alpha(b12, a);
          r.expect(lhs == rhs,
                   {"(1)",
                    "alpha_b1 o alpha_b2 = alpha_{b1 b2}",
                    {b1, b2, a},
                    {bn(b1), bn(b2), an(a)},
                    an(lhs),
                    an(rhs)});
        }
      }
    }
    // (2)
    for (Index a = 0; a < nA; ++a) {
      std::vector<bool> hit(nB, false);
      std::size_t       distinct = 0;
      for (Index b = 0; b < nB; ++b) {
        distinct += hit[p.beta(b, a)] ? 0 : 1;
        hit[p.beta(b, a)] = true;
      }
      r.expect(distinct == nB,
               {"(2)",
                "beta^a is a bijection",
                {a},
                {an(a)},
                std::to_string(distinct) + " distinct images",
                std::to_string(nB)});
    }
    for (Index b = 0; b < nB; ++b) {
      Index e = A.identity();
      r.expect(p.beta(b, e) == b,
               {"(2)",
                "beta^e = id",
                {b, e},
                {bn(b), an(e)},
                bn(p.beta(b, e)),
                bn(b)});
    }
    for (Index a1 = 0; a1 < nA; ++a1) {
      for (Index a2 = 0; a2 < nA; ++a2) {
        Index a21 = A.mul(a2, a1);
        for (Index b = 0; b < nB; ++b) {
          Index lhs = p.beta(p.beta(b, a2), a1);
          Index rhs = p.beta(b, a21);
          r.expect(lhs == rhs,
                   {"(2)",
                    "beta^a1 o beta^a2 = beta^{a2 a1}",
                    {a1, a2, b},
                    {an(a1), an(a2), bn(b)},
                    bn(lhs),
                    bn(rhs)});
        }
      }
    }
    // (3)
    for (Index b = 0; b < nB; ++b) {
      for (Index a1 = 0; a1 < nA; ++a1) {
        Index b_moved = p.beta(b, a1);
        for (Index a2 = 0; a2 < nA; ++a2) {
          Index lhs = p.alpha(b, A.mul(a1, a2));
          Index rhs = A.mul(p.alpha(b, a1), p.alpha(b_moved, a2));
          r.expect(lhs == rhs,
                   {"(3)",
                    "alpha_b(a1 a2) = alpha_b(a1) alpha_{beta^a1(b)}(a2)",
                    {b, a1, a2},
                    {bn(b), an(a1), an(a2)},
                    an(lhs),
                    an(rhs)});
        }
      }
    }
    // (4)
    for (Index a = 0; a < nA; ++a) {
      for (Index b1 = 0; b1 < nB; ++b1) {
        for (Index b2 = 0; b2 < nB; ++b2) {
          Index lhs = p.beta(B.mul(b1, b2), a);
          Index rhs = B.mul(p.beta(b1, p.alpha(b2, a)), p.beta(b2, a));
          r.expect(lhs == rhs,
                   {"(4)",
                    "beta^a(b1 b2) = beta^{alpha_b2(a)}(b1) beta^a(b2)",
                    {a, b1, b2},
                    {an(a), bn(b1), bn(b2)},
                    bn(lhs),
                    bn(rhs)});
        }
      }
    }
    return r;
  }

  struct KnitGroupOptions {
    //! Build the table even if the pair fails verification; the result then
    //! need not be a group.
    bool allow_invalid = false;
  };

  //! The knit (Zappa-Szep) product on A x B with
  //! (a1,b1)(a2,b2) = (a1 alpha_{b1}(a2), beta^{a2}(b1) b2).
  //! Pairs are ordered lexicographically by (A-index, B-index) and named
  //! "a|b".
  inline FiniteGroup knit_group_product(KnitPairGroup const& p,
                                        KnitGroupOptions     opts = {}) {
    if (!opts.allow_invalid) {
      auto rep = verify_knit_actions(p);
      if (!rep.passed()) {
        throw VerificationFailed(std::move(rep));
      }
    }
    auto const&       A  = p.A();
    auto const&       B  = p.B();
    std::size_t const nA = A.order();
    std::size_t const nB = B.order();
    std::vector<std::string> names;
    names.reserve(nA * nB);
    for (Index a = 0; a < nA; ++a) {
      for (Index b = 0; b < nB; ++b) {
        names.push_back(A.name(a) + "|" + B.name(b));
      }
    }
    std::vector<std::vector<Index>> table(nA * nB, std::vector<Index>(nA * nB));
    for (Index a1 = 0; a1 < nA; ++a1) {
      for (Index b1 = 0; b1 < nB; ++b1) {
        auto& row = table[p.pair_index(a1, b1)];
        for (Index a2 = 0; a2 < nA; ++a2) {
          Index a = A.mul(a1, p.alpha(b1, a2));
          Index bb = p.beta(b1, a2);
          for (Index b2 = 0; b2 < nB; ++b2) {
            row[p.pair_index(a2, b2)] = p.pair_index(a, B.mul(bb, b2));
          }
        }
      }
    }
    return FiniteGroup(std::move(names),
                       std::move(table),
                       p.pair_index(A.identity(), B.identity()));
  }

  //! (a,b)^{-1} = (alpha_{b^-1}(a^-1), beta^{a^-1}(b^-1)) as a pair index.
  inline Index knit_inverse(KnitPairGroup const& p, Index x) {
    auto [a, b] = p.split(x);
    Index ai    = p.A().inverse(a);
    Index bi    = p.B().inverse(b);
    return p.pair_index(p.alpha(bi, ai), p.beta(bi, ai));
  }

  //! Embeddings a -> (a, e) and b -> (e, b) as selections of the product.
  inline SubgroupSelection embedded_A(KnitPairGroup const& p,
                                      FiniteGroup const&   product) {
    std::vector<Index> m;
    for (Index a = 0; a < p.A().order(); ++a) {
      m.push_back(p.pair_index(a, p.B().identity()));
    }
    return SubgroupSelection(product, std::move(m));
  }

  inline SubgroupSelection embedded_B(KnitPairGroup const& p,
                                      FiniteGroup const&   product) {
    std::vector<Index> m;
    for (Index b = 0; b < p.B().order(); ++b) {
      m.push_back(p.pair_index(p.A().identity(), b));
    }
    return SubgroupSelection(product, std::move(m));
  }

  namespace detail {
    // Lookup g -> (position in A, position in B) with g = a.b.
    inline std::vector<std::pair<Index, Index>>
    factorization_table(FiniteGroup const&       G,
                        SubgroupSelection const& A,
                        SubgroupSelection const& B) {
      std::vector<std::pair<Index, Index>> fac(G.order(), {no_index, no_index});
      for (Index i = 0; i < A.members.size(); ++i) {
        for (Index j = 0; j < B.members.size(); ++j) {
          Index g = G.mul(A.members[i], B.members[j]);
          if (fac[g].first != no_index) {
            throw PreconditionFailed("factorization failure: " + G.name(g)
                                     + " factors twice as a.b");
          }
          fac[g] = {i, j};
        }
      }
      for (Index g = 0; g < G.order(); ++g) {
        if (fac[g].first == no_index) {
          throw PreconditionFailed("factorization failure: " + G.name(g)
                                   + " is not a product a.b");
        }
      }
      return fac;
    }
  }  // namespace detail

  //! For an exact factorization G = A.B with A and B intersecting trivially,
  //! factors each b.a uniquely as alpha(b,a).beta(b,a). Factor groups are
  //! the selections as groups, elements in parent index order.
  inline KnitPairGroup decompose_group(FiniteGroup const&       G,
                                       SubgroupSelection const& A,
                                       SubgroupSelection const& B) {
    if (!(A.parent == G) || !(B.parent == G)) {
      throw BasisMismatch("subgroup selections belong to a different group");
    }
    if (!verify_group_table(G).passed()) {
      throw PreconditionFailed("decompose_group: input is not a group");
    }
    if (!is_subgroup(A).passed() || !is_subgroup(B).passed()) {
      throw PreconditionFailed("decompose_group: selections must be subgroups");
    }
    for (Index x : A.members) {
      if (x != G.identity() && B.contains(x)) {
        throw PreconditionFailed("subgroups intersect nontrivially in "
                                 + G.name(x));
      }
    }
    if (A.members.size() * B.members.size() != G.order()) {
      throw PreconditionFailed("order mismatch: |A|.|B| = "
                               + std::to_string(A.members.size()
                                                * B.members.size())
                               + " but |G| = " + std::to_string(G.order()));
    }
    auto const fac = detail::factorization_table(G, A, B);
    std::size_t const nA = A.members.size();
    std::size_t const nB = B.members.size();
    KnitPairGroup::table_type alpha(nB, std::vector<Index>(nA));
    KnitPairGroup::table_type beta(nB, std::vector<Index>(nA));
    for (Index j = 0; j < nB; ++j) {
      for (Index i = 0; i < nA; ++i) {
        auto [ai, bj] = fac[G.mul(B.members[j], A.members[i])];
        alpha[j][i]   = ai;
        beta[j][i]    = bj;
      }
    }
    return KnitPairGroup(
        as_group(A), as_group(B), std::move(alpha), std::move(beta));
  }

  //! The map (a, b) -> a.b from the knit product of decompose_group(G, A, B)
  //! to G.
  inline GroupMap factorization_map(FiniteGroup const&       product,
                                    FiniteGroup const&       G,
                                    SubgroupSelection const& A,
                                    SubgroupSelection const& B) {
    std::vector<Index> im;
    for (Index a : A.members) {
      for (Index b : B.members) {
        im.push_back(G.mul(a, b));
      }
    }
    return GroupMap(product, G, std::move(im));
  }

  namespace detail {
    inline void require_pair_map(GroupMap const&      m,
                                 KnitPairGroup const& src,
                                 KnitPairGroup const& dst) {
      if (m.source.order() != src.A().order() * src.B().order()
          || m.target.order() != dst.A().order() * dst.B().order()) {
        throw InvalidInput("map does not act between the knit products");
      }
    }

    inline void require_quadruple(KnitPairGroup const&     src,
                                  KnitPairGroup const&     dst,
                                  GroupHomQuadruple const& q) {
      auto same = [](FiniteGroup const& x, FiniteGroup const& y) {
        return x == y;
      };
      if (!same(q.f.source, src.A()) || !same(q.f.target, dst.A())
          || !same(q.g.source, src.B()) || !same(q.g.target, dst.B())
          || !same(q.phi.source, src.B()) || !same(q.phi.target, dst.A())
          || !same(q.psi.source, src.A()) || !same(q.psi.target, dst.B())) {
        throw InvalidInput("quadruple does not connect the given knit pairs");
      }
    }
  }  // namespace detail

  //! f(a) = Phi_1(a,e), g(b) = Phi_2(e,b), phi(b) = Phi_1(e,b),
  //! psi(a) = Phi_2(a,e), with Phi given on pair indices.
  inline GroupHomQuadruple extract_group_quadruple(KnitPairGroup const& src,
                                                   KnitPairGroup const& dst,
                                                   GroupMap const&      Phi) {
    detail::require_pair_map(Phi, src, dst);
    auto const&        A  = src.A();
    auto const&        B  = src.B();
    std::vector<Index> f, g, phi, psi;
    for (Index a = 0; a < A.order(); ++a) {
      auto [a2, b2] = dst.split(Phi(src.pair_index(a, B.identity())));
      f.push_back(a2);
      psi.push_back(b2);
    }
    for (Index b = 0; b < B.order(); ++b) {
      auto [a2, b2] = dst.split(Phi(src.pair_index(A.identity(), b)));
      phi.push_back(a2);
      g.push_back(b2);
    }
    return {GroupMap(A, dst.A(), std::move(f)),
            GroupMap(B, dst.B(), std::move(g)),
            GroupMap(B, dst.A(), std::move(phi)),
            GroupMap(A, dst.B(), std::move(psi))};
  }

  //! Checks (f), (g) and (h); with assume_f_g_homs set, (g') replaces (g).
  //!   (f) phi(b1 b2) = phi(b1) alpha'_{g(b1)}(phi(b2)),
  //!       psi(a1 a2) = beta'^{f(a2)}(psi(a1)) psi(a2)
  //!   (g) f(a1 a2) = f(a1) alpha'_{psi(a1)}(f(a2)),
  //!       g(b1 b2) = beta'^{phi(b2)}(g(b1)) g(b2)
  //!   (g') f(a2) = alpha'_{psi(a1)}(f(a2)), g(b1) = beta'^{phi(b2)}(g(b1))
  //!   (h) Phi evaluated via (e) on (alpha_{b1}(a2), beta^{a2}(b1)) equals
  //!       (phi(b1) alpha'_{g(b1)}(f(a2)), beta'^{f(a2)}(g(b1)) psi(a2))
  inline VerificationReport check_group_quadruple(KnitPairGroup const&     src,
                                                  KnitPairGroup const&     dst,
                                                  GroupHomQuadruple const& q,
                                                  bool assume_f_g_homs) {
    detail::require_quadruple(src, dst, q);
    if (assume_f_g_homs
        && (!is_group_hom(q.f).passed() || !is_group_hom(q.g).passed())) {
      throw PreconditionFailed("(g') requested but f or g is not a group "
                               "homomorphism");
    }
    VerificationReport r("knit group homomorphism quadruple");
    auto const&        A  = src.A();
    auto const&        B  = src.B();
    auto const&        A2 = dst.A();
    auto const&        B2 = dst.B();
    auto const&        f   = q.f;
    auto const&        g   = q.g;
    auto const&        phi = q.phi;
    auto const&        psi = q.psi;
    auto const         an  = [&](Index a) { return A.name(a); };
    auto const         bn  = [&](Index b) { return B.name(b); };
    if (assume_f_g_homs) {
      r.notes.push_back("f and g are homomorphisms; (g') used for (g)");
    }

    for (Index b1 = 0; b1 < B.order(); ++b1) {
      for (Index b2 = 0; b2 < B.order(); ++b2) {
        Index lhs = phi(B.mul(b1, b2));
        Index rhs = A2.mul(phi(b1), dst.alpha(g(b1), phi(b2)));
        r.expect(lhs == rhs,
                 {"(f)",
                  "phi(b1 b2) = phi(b1) alpha'_{g(b1)}(phi(b2))",
                  {b1, b2},
                  {bn(b1), bn(b2)},
                  A2.name(lhs),
                  A2.name(rhs)});
      }
    }
    for (Index a1 = 0; a1 < A.order(); ++a1) {
      for (Index a2 = 0; a2 < A.order(); ++a2) {
        Index lhs = psi(A.mul(a1, a2));
        Index rhs = B2.mul(dst.beta(psi(a1), f(a2)), psi(a2));
        r.expect(lhs == rhs,
                 {"(f)",
                  "psi(a1 a2) = beta'^{f(a2)}(psi(a1)) psi(a2)",
                  {a1, a2},
                  {an(a1), an(a2)},
                  B2.name(lhs),
                  B2.name(rhs)});
      }
    }
    for (Index a1 = 0; a1 < A.order(); ++a1) {
      for (Index a2 = 0; a2 < A.order(); ++a2) {
        if (assume_f_g_homs) {
          Index lhs = f(a2);
          Index rhs = dst.alpha(psi(a1), f(a2));
          r.expect(lhs == rhs,
                   {"(g')",
                    "f(a2) = alpha'_{psi(a1)}(f(a2))",
                    {a1, a2},
                    {an(a1), an(a2)},
                    A2.name(lhs),
                    A2.name(rhs)});
        } else {
          Index lhs = f(A.mul(a1, a2));
          Index rhs = A2.mul(f(a1), dst.alpha(psi(a1), f(a2)));
          r.expect(lhs == rhs,
                   {"(g)",
                    "f(a1 a2) = f(a1) alpha'_{psi(a1)}(f(a2))",
                    {a1, a2},
                    {an(a1), an(a2)},
                    A2.name(lhs),
                    A2.name(rhs)});
        }
      }
    }
    for (Index b1 = 0; b1 < B.order(); ++b1) {
      for (Index b2 = 0; b2 < B.order(); ++b2) {
        if (assume_f_g_homs) {
          Index lhs = g(b1);
          Index rhs = dst.beta(g(b1), phi(b2));
          r.expect(lhs == rhs,
                   {"(g')",
                    "g(b1) = beta'^{phi(b2)}(g(b1))",
                    {b1, b2},
                    {bn(b1), bn(b2)},
                    B2.name(lhs),
                    B2.name(rhs)});
        } else {
          Index lhs = g(B.mul(b1, b2));
          Index rhs = B2.mul(dst.beta(g(b1), phi(b2)), g(b2));
          r.expect(lhs == rhs,
                   {"(g)",
                    "g(b1 b2) = beta'^{phi(b2)}(g(b1)) g(b2)",
                    {b1, b2},
                    {bn(b1), bn(b2)},
                    B2.name(lhs),
                    B2.name(rhs)});
        }
      }
    }
    for (Index b1 = 0; b1 < B.order(); ++b1) {
      for (Index a2 = 0; a2 < A.order(); ++a2) {
        Index a = src.alpha(b1, a2);
        Index b = src.beta(b1, a2);
        // Left sides decomposed with (e).
        Index l1 = A2.mul(f(a), dst.alpha(psi(a), phi(b)));
        Index l2 = B2.mul(dst.beta(psi(a), phi(b)), g(b));
        Index r1 = A2.mul(phi(b1), dst.alpha(g(b1), f(a2)));
        Index r2 = B2.mul(dst.beta(g(b1), f(a2)), psi(a2));
        r.expect(l1 == r1,
                 {"(h)",
                  "first component",
                  {b1, a2},
                  {bn(b1), an(a2)},
                  A2.name(l1),
                  A2.name(r1)});
        r.expect(l2 == r2,
                 {"(h)",
                  "second component",
                  {b1, a2},
                  {bn(b1), an(a2)},
                  B2.name(l2),
                  B2.name(r2)});
      }
    }
    return r;
  }

  //! Builds Phi pointwise from (e),
  //!   Phi_1(a,b) = f(a) alpha'_{psi(a)}(phi(b)),
  //!   Phi_2(a,b) = beta'^{phi(b)}(psi(a)) g(b),
  //! and checks the homomorphism law (3) over all pairs of pairs.
  inline std::pair<GroupMap, VerificationReport>
  assemble_group_hom(KnitPairGroup const&     src,
                     KnitPairGroup const&     dst,
                     GroupHomQuadruple const& q) {
    detail::require_quadruple(src, dst, q);
    auto const         P  = knit_group_product(src, {true});
    auto const         P2 = knit_group_product(dst, {true});
    std::vector<Index> im(P.order());
    for (Index a = 0; a < src.A().order(); ++a) {
      for (Index b = 0; b < src.B().order(); ++b) {
        Index a2 = dst.A().mul(q.f(a), dst.alpha(q.psi(a), q.phi(b)));
        Index b2 = dst.B().mul(dst.beta(q.psi(a), q.phi(b)), q.g(b));
        im[src.pair_index(a, b)] = dst.pair_index(a2, b2);
      }
    }
    GroupMap           Phi(P, P2, std::move(im));
    VerificationReport r("knit group homomorphism");
    for (Index x = 0; x < P.order(); ++x) {
      for (Index y = 0; y < P.order(); ++y) {
        auto [l1, l2] = dst.split(Phi(P.mul(x, y)));
        auto [r1, r2] = dst.split(P2.mul(Phi(x), Phi(y)));
        r.expect(l1 == r1,
                 {"(3)",
                  "Phi_1(xy) = Phi_1(x) alpha'_{Phi_2(x)}(Phi_1(y))",
                  {x, y},
                  {P.name(x), P.name(y)},
                  dst.A().name(l1),
                  dst.A().name(r1)});
        r.expect(l2 == r2,
                 {"(3)",
                  "Phi_2(xy) = beta'^{Phi_1(y)}(Phi_2(x)) Phi_2(y)",
                  {x, y},
                  {P.name(x), P.name(y)},
                  dst.B().name(l2),
                  dst.B().name(r2)});
      }
    }
    return {std::move(Phi), std::move(r)};
  }

}  // namespace knit

#endif  // KNIT_KNIT_GROUP_HPP_
