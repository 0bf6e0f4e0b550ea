#ifndef KNIT_FINITE_GROUP_HPP_
#define KNIT_FINITE_GROUP_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knit/errors.hpp"
#include "knit/report.hpp"

namespace knit {

  using Index = std::size_t;

  inline constexpr Index no_index = static_cast<Index>(-1);

  //! A finite group given by its Cayley table: table[i][j] is the index of
  //! elements[i] * elements[j]. Construction only checks shape and ranges;
  //! the group axioms are checked by verify_group_table.
  class FiniteGroup {
   public:
    FiniteGroup() = default;

    FiniteGroup(std::vector<std::string>        names,
                std::vector<std::vector<Index>> table,
                Index                           identity)
        : names_(std::move(names)), table_(std::move(table)), e_(identity) {
      std::size_t const n = names_.size();
      if (n == 0) {
        throw InvalidInput("a group needs at least one element");
      }
      if (e_ >= n) {
        throw InvalidInput("identity index out of range");
      }
      if (table_.size() != n) {
        throw InvalidInput("multiplication table has the wrong number of rows");
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (names_[i].empty()) {
          throw InvalidInput("element " + std::to_string(i)
                             + " has an empty name");
        }
        if (!index_.emplace(names_[i], i).second) {
          throw InvalidInput("duplicate element name \"" + names_[i] + "\"");
        }
        if (table_[i].size() != n) {
          throw InvalidInput("row " + names_[i] + " has the wrong length");
        }
        for (Index x : table_[i]) {
          if (x >= n) {
            throw InvalidInput("table entry out of range in row " + names_[i]);
          }
        }
      }
      inverse_.assign(n, no_index);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (table_[i][j] == e_ && table_[j][i] == e_) {
            inverse_[i] = j;
            break;
          }
        }
      }
    }

    std::size_t order() const noexcept {
      return names_.size();
    }
    Index identity() const noexcept {
      return e_;
    }
    Index mul(Index x, Index y) const {
      return table_[x][y];
    }
    //! Two-sided inverse, or no_index if there is none.
    Index inverse(Index x) const {
      return inverse_.at(x);
    }
    std::string const& name(Index x) const {
      return names_.at(x);
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::vector<std::vector<Index>> const& table() const noexcept {
      return table_;
    }

    std::optional<Index> find(std::string const& name) const {
      auto it = index_.find(name);
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }
    Index index_of(std::string const& name) const {
      auto i = find(name);
      if (!i) {
        throw InvalidInput("unknown group element \"" + name + "\"");
      }
      return *i;
    }

    //! Order of x, assuming the table is a group.
    std::size_t element_order(Index x) const {
      std::size_t k = 1;
      Index       y = x;
      while (y != e_) {
        y = mul(y, x);
        if (++k > order()) {
          throw PreconditionFailed("element " + name(x)
                                   + " has no finite order in this table");
        }
      }
      return k;
    }

    friend bool operator==(FiniteGroup const& a, FiniteGroup const& b) {
      return a.names_ == b.names_ && a.table_ == b.table_ && a.e_ == b.e_;
    }

   private:
    std::vector<std::string>               names_;
    std::vector<std::vector<Index>>        table_;
    Index                                  e_ = 0;
    std::vector<Index>                     inverse_;
    std::unordered_map<std::string, Index> index_;
  };

  //! A subset of a group, meant to be a subgroup. Members are kept sorted.
  struct SubgroupSelection {
    FiniteGroup        parent;
    std::vector<Index> members;

    SubgroupSelection() = default;
    SubgroupSelection(FiniteGroup g, std::vector<Index> m)
        : parent(std::move(g)), members(std::move(m)) {
      std::sort(members.begin(), members.end());
      if (std::adjacent_find(members.begin(), members.end())
          != members.end()) {
        throw InvalidInput("subgroup selection lists an element twice");
      }
      for (Index x : members) {
        if (x >= parent.order()) {
          throw InvalidInput("subgroup member index out of range");
        }
      }
    }

    bool contains(Index x) const {
      return std::binary_search(members.begin(), members.end(), x);
    }
  };

  //! A total map between the element sets of two groups.
  struct GroupMap {
    FiniteGroup        source;
    FiniteGroup        target;
    std::vector<Index> images;

    GroupMap() = default;
    GroupMap(FiniteGroup s, FiniteGroup t, std::vector<Index> im)
        : source(std::move(s)), target(std::move(t)), images(std::move(im)) {
      if (images.size() != source.order()) {
        throw InvalidInput("group map is not total on its source");
      }
      for (Index y : images) {
        if (y >= target.order()) {
          throw InvalidInput("group map image out of range");
        }
      }
    }

    static GroupMap identity(FiniteGroup const& g) {
      std::vector<Index> im(g.order());
      for (Index i = 0; i < g.order(); ++i) {
        im[i] = i;
      }
      return GroupMap(g, g, std::move(im));
    }

    static GroupMap trivial(FiniteGroup const& s, FiniteGroup const& t) {
      return GroupMap(s, t, std::vector<Index>(s.order(), t.identity()));
    }

    Index operator()(Index x) const {
      return images.at(x);
    }

    bool is_bijective() const {
      if (source.order() != target.order()) {
        return false;
      }
      std::vector<bool> hit(target.order(), false);
      for (Index y : images) {
        if (hit[y]) {
          return false;
        }
        hit[y] = true;
      }
      return true;
    }

    friend bool operator==(GroupMap const&, GroupMap const&) = default;
  };

  //! Identity laws, Latin-square property, two-sided inverses and
  //! associativity over all triples.
  inline VerificationReport verify_group_table(FiniteGroup const& G) {
    VerificationReport r("group table");
    std::size_t const  n = G.order();
    Index const        e = G.identity();
    auto const         nm = [&](Index x) { return G.name(x); };
    for (Index x = 0; x < n; ++x) {
      r.expect(G.mul(e, x) == x,
               {"identity", "e.x = x", {x}, {nm(x)}, nm(G.mul(e, x)), nm(x)});
      r.expect(G.mul(x, e) == x,
               {"identity", "x.e = x", {x}, {nm(x)}, nm(G.mul(x, e)), nm(x)});
    }
    for (Index x = 0; x < n; ++x) {
      std::vector<Index> row_seen(n, no_index), col_seen(n, no_index);
      for (Index y = 0; y < n; ++y) {
        Index rv = G.mul(x, y);
        Index cv = G.mul(y, x);
        if (row_seen[rv] != no_index) {
          r.expect(false,
                   {"latin-square",
                    "row repeats a value",
                    {x, row_seen[rv], y},
                    {nm(x), nm(row_seen[rv]), nm(y)},
                    nm(rv),
                    "distinct"});
        } else {
          row_seen[rv] = y;
        }
        if (col_seen[cv] != no_index) {
          r.expect(false,
                   {"latin-square",
                    "column repeats a value",
                    {x, col_seen[cv], y},
                    {nm(x), nm(col_seen[cv]), nm(y)},
                    nm(cv),
                    "distinct"});
        } else {
          col_seen[cv] = y;
        }
      }
      r.expect(G.inverse(x) != no_index,
               {"inverse",
                "x has a two-sided inverse",
                {x},
                {nm(x)},
                "none",
                "x^-1"});
    }
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        Index xy = G.mul(x, y);
        for (Index z = 0; z < n; ++z) {
          Index lhs = G.mul(xy, z);
          Index rhs = G.mul(x, G.mul(y, z));
          r.expect(lhs == rhs,
                   {"associativity",
                    "(xy)z = x(yz)",
                    {x, y, z},
                    {nm(x), nm(y), nm(z)},
                    nm(lhs),
                    nm(rhs)});
        }
      }
    }
    return r;
  }

  //! Identity membership, closure and inverses.
  inline VerificationReport is_subgroup(SubgroupSelection const& s) {
    VerificationReport r("subgroup");
    auto const&        G  = s.parent;
    auto const         nm = [&](Index x) { return G.name(x); };
    r.expect(s.contains(G.identity()),
             {"identity",
              "contains e",
              {G.identity()},
              {nm(G.identity())},
              "absent",
              "present"});
    for (Index x : s.members) {
      for (Index y : s.members) {
        Index xy = G.mul(x, y);
        r.expect(s.contains(xy),
                 {"closure",
                  "x.y in S",
                  {x, y},
                  {nm(x), nm(y)},
                  nm(xy),
                  "member"});
      }
      Index inv = G.inverse(x);
      r.expect(inv != no_index && s.contains(inv),
               {"inverse",
                "x^-1 in S",
                {x},
                {nm(x)},
                inv == no_index ? "none" : nm(inv),
                "member"});
    }
    return r;
  }

  //! True iff g.S.g^-1 is contained in S for every g.
  inline bool is_normal(SubgroupSelection const& s) {
    auto const& G = s.parent;
    for (Index g = 0; g < G.order(); ++g) {
      Index gi = G.inverse(g);
      for (Index x : s.members) {
        if (!s.contains(G.mul(G.mul(g, x), gi))) {
          return false;
        }
      }
    }
    return true;
  }

  //! Witnesses of m(xy) != m(x)m(y) over all pairs.
  inline VerificationReport is_group_hom(GroupMap const& m) {
    VerificationReport r("group homomorphism");
    auto const&        S = m.source;
    auto const&        T = m.target;
    for (Index x = 0; x < S.order(); ++x) {
      for (Index y = 0; y < S.order(); ++y) {
        Index lhs = m(S.mul(x, y));
        Index rhs = T.mul(m(x), m(y));
        r.expect(lhs == rhs,
                 {"hom",
                  "m(xy) = m(x)m(y)",
                  {x, y},
                  {S.name(x), S.name(y)},
                  T.name(lhs),
                  T.name(rhs)});
      }
    }
    return r;
  }

  //! Members of the subgroup generated by gens, sorted.
  inline std::vector<Index> generated_subgroup(FiniteGroup const&        G,
                                               std::vector<Index> const& gens) {
    std::vector<bool>  in(G.order(), false);
    std::vector<Index> queue{G.identity()};
    in[G.identity()] = true;
    for (std::size_t k = 0; k < queue.size(); ++k) {
      for (Index g : gens) {
        Index y = G.mul(queue[k], g);
        if (!in[y]) {
          in[y] = true;
          queue.push_back(y);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  //! Greedy generating set: scan elements in index order and keep each one
  //! not already in the subgroup generated by the previous picks.
  inline std::vector<Index> greedy_generators(FiniteGroup const& G) {
    std::vector<Index> gens;
    std::vector<Index> span{G.identity()};
    for (Index x = 0; x < G.order(); ++x) {
      if (!std::binary_search(span.begin(), span.end(), x)) {
        gens.push_back(x);
        span = generated_subgroup(G, gens);
      }
    }
    return gens;
  }

  //! The subgroup on the selected members, as a group in its own right.
  //! Element order follows the (sorted) member order.
  inline FiniteGroup as_group(SubgroupSelection const& s) {
    auto const&                     G = s.parent;
    std::map<Index, Index>          pos;
    std::vector<std::string>        names;
    for (Index k = 0; k < s.members.size(); ++k) {
      pos[s.members[k]] = k;
      names.push_back(G.name(s.members[k]));
    }
    std::vector<std::vector<Index>> table(s.members.size());
    for (Index k = 0; k < s.members.size(); ++k) {
      for (Index x : s.members) {
        auto it = pos.find(G.mul(s.members[k], x));
        if (it == pos.end()) {
          throw PreconditionFailed("selection is not closed under the product");
        }
        table[k].push_back(it->second);
      }
    }
    auto e = pos.find(G.identity());
    if (e == pos.end()) {
      throw PreconditionFailed("selection does not contain the identity");
    }
    return FiniteGroup(std::move(names), std::move(table), e->second);
  }

  struct IsomorphismOptions {
    std::size_t max_order = 64;
  };

  //! Searches for an isomorphism G -> H by backtracking over images of a
  //! greedy generating set of G, pruning by element orders. The first map
  //! found in index order is returned.
  inline std::optional<GroupMap> are_isomorphic(FiniteGroup const& G,
                                                FiniteGroup const& H,
                                                IsomorphismOptions opts = {}) {
    if (G.order() > opts.max_order || H.order() > opts.max_order) {
      throw LimitExceeded("isomorphism test limited to order "
                          + std::to_string(opts.max_order));
    }
    std::size_t const n = G.order();
    if (H.order() != n) {
      return std::nullopt;
    }
    std::vector<std::size_t> ordG(n), ordH(n);
    std::map<std::size_t, std::size_t> profileG, profileH;
    for (Index x = 0; x < n; ++x) {
      ordG[x] = G.element_order(x);
      ordH[x] = H.element_order(x);
      ++profileG[ordG[x]];
      ++profileH[ordH[x]];
    }
    if (profileG != profileH) {
      return std::nullopt;
    }
    auto const gens = greedy_generators(G);

    // Extends the partial map over the subgroup generated by the first k
    // generators; returns false on inconsistency or non-injectivity.
    auto extend = [&](std::vector<Index> const& himg,
                      std::size_t               k,
                      std::vector<Index>&       map) {
      map.assign(n, no_index);
      std::vector<bool>  used(n, false);
      std::vector<Index> queue{G.identity()};
      map[G.identity()]  = H.identity();
      used[H.identity()] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Index x = queue[q];
        for (std::size_t i = 0; i < k; ++i) {
          Index y  = G.mul(x, gens[i]);
          Index hy = H.mul(map[x], himg[i]);
          if (map[y] == no_index) {
            if (used[hy]) {
              return false;
            }
            map[y]   = hy;
            used[hy] = true;
            queue.push_back(y);
          } else if (map[y] != hy) {
            return false;
          }
        }
      }
      return true;
    };

    std::vector<Index> himg(gens.size(), 0);
    std::vector<Index> map;
    std::optional<GroupMap> found;
    auto search = [&](auto&& self, std::size_t k) -> bool {
      if (k == gens.size()) {
        if (!extend(himg, k, map)) {
          return false;
        }
        found = GroupMap(G, H, map);
        return true;
      }
      for (Index h = 0; h < n; ++h) {
        if (ordH[h] != ordG[gens[k]]) {
          continue;
        }
        himg[k] = h;
        if (extend(himg, k + 1, map) && self(self, k + 1)) {
          return true;
        }
      }
      return false;
    };
    search(search, 0);
    return found;
  }

}  // namespace knit

#endif  // KNIT_FINITE_GROUP_HPP_
