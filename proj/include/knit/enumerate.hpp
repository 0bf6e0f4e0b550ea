#ifndef KNIT_ENUMERATE_HPP_
#define KNIT_ENUMERATE_HPP_

// Exhaustive enumeration of automorphically knitted pairs of small groups.
//
// The search first enumerates the homomorphisms b -> alpha_b from B into the
// permutations of A fixing the identity (backtracking over images of a
// generating set of B, pruned by element orders). For each such alpha,
// condition (3) pins every beta^a(b) to the fibre of alpha over the
// permutation a2 -> alpha_b(a)^{-1} alpha_b(a a2); the remaining choices are
// settled by propagating (2), (4) and bijectivity over bitmask domains and
// branching on the smallest domain. Every leaf is re-checked with
// verify_knit_actions.
//
// When B is the larger factor, the search runs on the mirrored problem
// (B^op, A^op) with the roles of alpha and beta exchanged, which keeps the
// permutation enumeration on the smaller group.

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "knit/errors.hpp"
#include "knit/finite_group.hpp"
#include "knit/knit_group.hpp"

namespace knit {

  struct EnumerationOptions {
    //! Maximum number of pairs returned; 0 means no limit.
    std::size_t limit = 0;
    //! Hard cap on |A|.|B|.
    std::size_t max_order = 32;
  };

  struct EnumerationResult {
    std::vector<KnitPairGroup> pairs;
    //! Number of pairs found before truncation.
    std::size_t total = 0;
    bool        truncated = false;
  };

  //! The opposite group: same elements, x * y := y.x.
  inline FiniteGroup opposite_group(FiniteGroup const& G) {
    auto t = G.table();
    for (Index x = 0; x < G.order(); ++x) {
      for (Index y = 0; y < G.order(); ++y) {
        t[x][y] = G.mul(y, x);
      }
    }
    return FiniteGroup(G.names(), std::move(t), G.identity());
  }

  //! A knitted pair for (A, B) read as a pair for (B^op, A^op): the new
  //! alpha is the old beta and vice versa. The map is an involution up to
  //! taking opposites twice.
  inline KnitPairGroup mirror_pair(KnitPairGroup const& p) {
    std::size_t const         nA = p.A().order();
    std::size_t const         nB = p.B().order();
    KnitPairGroup::table_type alpha(nA, std::vector<Index>(nB));
    KnitPairGroup::table_type beta(nA, std::vector<Index>(nB));
    for (Index a = 0; a < nA; ++a) {
      for (Index b = 0; b < nB; ++b) {
        alpha[a][b] = p.beta(b, a);
        beta[a][b]  = p.alpha(b, a);
      }
    }
    return KnitPairGroup(opposite_group(p.B()),
                         opposite_group(p.A()),
                         std::move(alpha),
                         std::move(beta));
  }

  namespace detail {
    using Mask = std::uint64_t;
    using Perm = std::vector<Index>;

    inline bool single(Mask m) noexcept {
      return m != 0 && (m & (m - 1)) == 0;
    }
    inline Index lowest(Mask m) noexcept {
      return static_cast<Index>(std::countr_zero(m));
    }
    inline Mask bit(Index i) noexcept {
      return Mask(1) << i;
    }

    inline std::size_t perm_order(Perm const& p) {
      std::size_t       ord = 1;
      std::vector<bool> seen(p.size(), false);
      for (Index i = 0; i < p.size(); ++i) {
        std::size_t len = 0;
        for (Index j = i; !seen[j]; j = p[j]) {
          seen[j] = true;
          ++len;
        }
        if (len > 0) {
          ord = std::lcm(ord, len);
        }
      }
      return ord;
    }

    // Permutations of A fixing the identity whose order divides n.
    inline std::vector<Perm> fixing_perms(FiniteGroup const& A, std::size_t n) {
      std::vector<Index> others;
      for (Index a = 0; a < A.order(); ++a) {
        if (a != A.identity()) {
          others.push_back(a);
        }
      }
      std::vector<Perm>  out;
      std::vector<Index> img = others;
      do {
        Perm p(A.order());
        p[A.identity()] = A.identity();
        for (std::size_t k = 0; k < others.size(); ++k) {
          p[others[k]] = img[k];
        }
        if (n % perm_order(p) == 0) {
          out.push_back(std::move(p));
        }
      } while (std::next_permutation(img.begin(), img.end()));
      return out;
    }

    class AlphaFirstSearch {
     public:
      AlphaFirstSearch(FiniteGroup const& A, FiniteGroup const& B)
          : A_(A), B_(B), gens_(greedy_generators(B)) {
        for (Index g : gens_) {
          candidates_.push_back(fixing_perms(A_, B_.element_order(g)));
        }
      }

      std::vector<KnitPairGroup> run() {
        images_.assign(gens_.size(), Perm());
        choose(0);
        return std::move(found_);
      }

     private:
      // Extends generator images to b -> alpha_b over <gens[0..k)>;
      // false if the assignment is not a homomorphism.
      bool extend(std::size_t k, std::vector<Perm>& alpha) const {
        std::size_t const nB = B_.order();
        Perm              id(A_.order());
        std::iota(id.begin(), id.end(), Index(0));
        alpha.assign(nB, Perm());
        alpha[B_.identity()] = id;
        std::vector<Index> queue{B_.identity()};
        for (std::size_t q = 0; q < queue.size(); ++q) {
          Index x = queue[q];
          for (std::size_t i = 0; i < k; ++i) {
            Index y = B_.mul(x, gens_[i]);
            Perm  composed(A_.order());
            for (Index a = 0; a < A_.order(); ++a) {
              composed[a] = alpha[x][images_[i][a]];
            }
            if (alpha[y].empty()) {
              alpha[y] = std::move(composed);
              queue.push_back(y);
            } else if (alpha[y] != composed) {
              return false;
            }
          }
        }
        return true;
      }

      void choose(std::size_t k) {
        std::vector<Perm> alpha;
        if (k == gens_.size()) {
          if (extend(k, alpha)) {
            solve_beta(alpha);
          }
          return;
        }
        for (auto const& p : candidates_[k]) {
          images_[k] = p;
          if (extend(k + 1, alpha)) {
            choose(k + 1);
          }
        }
      }

      void solve_beta(std::vector<Perm> const& alpha) {
        std::size_t const nA = A_.order();
        std::size_t const nB = B_.order();
        std::map<Perm, Mask> fibre;
        for (Index b = 0; b < nB; ++b) {
          fibre[alpha[b]] |= bit(b);
        }
        // dom[a][b] holds the possible values of beta^a(b).
        std::vector<std::vector<Mask>> dom(nA, std::vector<Mask>(nB, 0));
        for (Index b = 0; b < nB; ++b) {
          for (Index a = 0; a < nA; ++a) {
            Index inv = A_.inverse(alpha[b][a]);
            Perm  pi(nA);
            for (Index a2 = 0; a2 < nA; ++a2) {
              pi[a2] = A_.mul(inv, alpha[b][A_.mul(a, a2)]);
            }
            auto it = fibre.find(pi);
            if (it == fibre.end()) {
              return;
            }
            dom[a][b] = it->second;
          }
        }
        for (Index b = 0; b < nB; ++b) {
          dom[A_.identity()][b] &= bit(b);
        }
        for (Index a = 0; a < nA; ++a) {
          dom[a][B_.identity()] &= bit(B_.identity());
        }
        search(alpha, dom);
      }

      bool restrict(Mask& m, Mask allowed, bool& changed) const {
        Mask n = m & allowed;
        if (n != m) {
          m       = n;
          changed = true;
        }
        return n != 0;
      }

      bool propagate(std::vector<Perm> const&        alpha,
                     std::vector<std::vector<Mask>>& dom) const {
        std::size_t const nA   = A_.order();
        std::size_t const nB   = B_.order();
        Mask const        full = nB == 64 ? ~Mask(0) : bit(nB) - 1;
        bool              changed = true;
        while (changed) {
          changed = false;
          // Each beta^a is a bijection of B.
          for (Index a = 0; a < nA; ++a) {
            auto& row = dom[a];
            Mask  all = 0;
            for (Index b = 0; b < nB; ++b) {
              if (row[b] == 0) {
                return false;
              }
              all |= row[b];
              if (single(row[b])) {
                for (Index c = 0; c < nB; ++c) {
                  if (c != b && !restrict(row[c], ~row[b], changed)) {
                    return false;
                  }
                }
              }
            }
            if (all != full) {
              return false;
            }
            for (Index v = 0; v < nB; ++v) {
              Index where = no_index;
              int   count = 0;
              for (Index b = 0; b < nB && count < 2; ++b) {
                if (row[b] & bit(v)) {
                  where = b;
                  ++count;
                }
              }
              if (count == 1 && row[where] != bit(v)) {
                row[where] = bit(v);
                changed    = true;
              }
            }
          }
          // (4): beta^a(b1 b2) = beta^{alpha_b2(a)}(b1) beta^a(b2).
          for (Index a = 0; a < nA; ++a) {
            for (Index b1 = 0; b1 < nB; ++b1) {
              for (Index b2 = 0; b2 < nB; ++b2) {
                Mask& x = dom[alpha[b2][a]][b1];
                Mask& y = dom[a][b2];
                Mask& z = dom[a][B_.mul(b1, b2)];
                bool  sx = single(x), sy = single(y), sz = single(z);
                if (sx && sy && !restrict(z, bit(B_.mul(lowest(x), lowest(y))), changed)) {
                  return false;
                }
                if (sz && sy
                    && !restrict(x,
                                 bit(B_.mul(lowest(z), B_.inverse(lowest(y)))),
                                 changed)) {
                  return false;
                }
                if (sz && sx
                    && !restrict(y,
                                 bit(B_.mul(B_.inverse(lowest(x)), lowest(z))),
                                 changed)) {
                  return false;
                }
              }
            }
          }
          // (2): beta^a1(beta^a2(b)) = beta^{a2 a1}(b).
          for (Index a1 = 0; a1 < nA; ++a1) {
            for (Index a2 = 0; a2 < nA; ++a2) {
              Index a21 = A_.mul(a2, a1);
              for (Index b = 0; b < nB; ++b) {
                Mask const c = dom[a2][b];
                if (!single(c)) {
                  continue;
                }
                Mask& d = dom[a1][lowest(c)];
                Mask& t = dom[a21][b];
                if (!restrict(d, t, changed) || !restrict(t, d, changed)) {
                  return false;
                }
              }
            }
          }
        }
        return true;
      }

      void search(std::vector<Perm> const&       alpha,
                  std::vector<std::vector<Mask>> dom) {
        if (!propagate(alpha, dom)) {
          return;
        }
        std::size_t const nA = A_.order();
        std::size_t const nB = B_.order();
        Index             ba = no_index, bb = no_index;
        int               best = 65;
        for (Index a = 0; a < nA; ++a) {
          for (Index b = 0; b < nB; ++b) {
            int c = std::popcount(dom[a][b]);
            if (c > 1 && c < best) {
              best = c;
              ba   = a;
              bb   = b;
            }
          }
        }
        if (ba == no_index) {
          KnitPairGroup::table_type at(nB, std::vector<Index>(nA));
          KnitPairGroup::table_type bt(nB, std::vector<Index>(nA));
          for (Index b = 0; b < nB; ++b) {
            for (Index a = 0; a < nA; ++a) {
              at[b][a] = alpha[b][a];
              bt[b][a] = lowest(dom[a][b]);
            }
          }
          KnitPairGroup pair(A_, B_, std::move(at), std::move(bt));
          if (verify_knit_actions(pair).passed()) {
            found_.push_back(std::move(pair));
          }
          return;
        }
        Mask m = dom[ba][bb];
        while (m != 0) {
          Index v = lowest(m);
          m &= m - 1;
          auto next   = dom;
          next[ba][bb] = bit(v);
          search(alpha, std::move(next));
        }
      }

      FiniteGroup const&             A_;
      FiniteGroup const&             B_;
      std::vector<Index>             gens_;
      std::vector<std::vector<Perm>> candidates_;
      std::vector<Perm>              images_;
      std::vector<KnitPairGroup>     found_;
    };
  }  // namespace detail

  //! All automorphically knitted pairs for (A, B), sorted lexicographically
  //! by (alpha table, beta table). Each result passes verify_knit_actions.
  inline EnumerationResult enumerate_knit_pairs(FiniteGroup const& A,
                                                FiniteGroup const& B,
                                                EnumerationOptions opts = {}) {
    if (A.order() * B.order() > opts.max_order) {
      throw LimitExceeded("enumeration bound exceeded: |A|.|B| = "
                          + std::to_string(A.order() * B.order()) + " > "
                          + std::to_string(opts.max_order));
    }
    if (A.order() > 64 || B.order() > 64) {
      throw LimitExceeded("enumeration supports factors of order at most 64");
    }
    if (!verify_group_table(A).passed() || !verify_group_table(B).passed()) {
      throw PreconditionFailed("enumerate_knit_pairs: factors must be groups");
    }
    std::vector<KnitPairGroup> pairs;
    if (A.order() <= B.order()) {
      pairs = detail::AlphaFirstSearch(A, B).run();
    } else {
      FiniteGroup const Bop = opposite_group(B);
      FiniteGroup const Aop = opposite_group(A);
      for (auto const& m : detail::AlphaFirstSearch(Bop, Aop).run()) {
        auto back = mirror_pair(m);
        // Mirroring twice returns the original groups.
        pairs.emplace_back(
            A, B, back.alpha_table(), back.beta_table());
      }
    }
    std::sort(pairs.begin(), pairs.end(), [](auto const& x, auto const& y) {
      if (x.alpha_table() != y.alpha_table()) {
        return x.alpha_table() < y.alpha_table();
      }
      return x.beta_table() < y.beta_table();
    });
    EnumerationResult result;
    result.total = pairs.size();
    if (opts.limit != 0 && pairs.size() > opts.limit) {
      pairs.resize(opts.limit);
      result.truncated = true;
    }
    result.pairs = std::move(pairs);
    return result;
  }

}  // namespace knit

#endif  // KNIT_ENUMERATE_HPP_
