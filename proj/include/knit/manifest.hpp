#ifndef KNIT_MANIFEST_HPP_
#define KNIT_MANIFEST_HPP_

// JSON manifests for algebras, groups, pairs, maps and quadruples. The
// schemas are documented in docs/formats.md.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "knit/errors.hpp"
#include "knit/finite_group.hpp"
#include "knit/graded.hpp"
#include "knit/graded_lie.hpp"
#include "knit/knit_group.hpp"
#include "knit/knit_lie.hpp"
#include "knit/rational.hpp"

namespace knit::manifest {

  using json = nlohmann::json;

  inline constexpr int format_version = 1;

  enum class Kind {
    graded_lie,
    group,
    knit_pair_lie,
    knit_pair_group,
    map,
    quadruple,
    enumeration
  };

  inline char const* to_string(Kind k) noexcept {
    switch (k) {
      case Kind::graded_lie: return "graded-lie";
      case Kind::group: return "group";
      case Kind::knit_pair_lie: return "knit-pair-lie";
      case Kind::knit_pair_group: return "knit-pair-group";
      case Kind::map: return "map";
      case Kind::quadruple: return "quadruple";
      case Kind::enumeration: return "enumeration";
    }
    return "?";
  }

  struct Manifest {
    Kind kind = Kind::graded_lie;
    json payload;
    //! Set when the content was produced with verification overridden.
    bool unverified = false;
  };

  //! Syntax error (with line and column) or schema violation (with the
  //! JSON pointer of the offending value).
  class ManifestError : public InvalidInput {
   public:
    ManifestError(std::string const& where, std::string const& what)
        : InvalidInput(where + ": " + what), where_(where) {}

    std::string const& where() const noexcept {
      return where_;
    }

   private:
    std::string where_;
  };

  namespace detail {

    //! A JSON value together with its pointer, for error messages.
    class Node {
     public:
      Node(json const& j, std::string path) : j_(&j), path_(std::move(path)) {}

      json const& value() const noexcept {
        return *j_;
      }
      std::string const& path() const noexcept {
        return path_;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ManifestError(path_.empty() ? "/" : path_, what);
      }

      //! Requires an object whose keys are all in `allowed` and include
      //! every key in `required`.
      Node const& object(std::set<std::string> const& allowed,
                         std::set<std::string> const& required) const {
        if (!j_->is_object()) {
          fail("expected an object");
        }
        for (auto const& [k, v] : j_->items()) {
          if (allowed.count(k) == 0) {
            at(k).fail("unknown field");
          }
        }
        for (auto const& k : required) {
          if (!j_->contains(k)) {
            fail("missing field \"" + k + "\"");
          }
        }
        return *this;
      }

      bool has(std::string const& key) const {
        return j_->contains(key);
      }

      Node at(std::string const& key) const {
        return Node(j_->at(key), path_ + "/" + escape(key));
      }
      Node at(std::size_t i) const {
        return Node(j_->at(i), path_ + "/" + std::to_string(i));
      }

      std::size_t array_size() const {
        if (!j_->is_array()) {
          fail("expected an array");
        }
        return j_->size();
      }

      //! Keys of an object of arbitrary keys, in canonical order.
      std::vector<std::string> keys() const {
        if (!j_->is_object()) {
          fail("expected an object");
        }
        std::vector<std::string> out;
        for (auto const& [k, v] : j_->items()) {
          out.push_back(k);
        }
        return out;
      }

      std::string string() const {
        if (!j_->is_string()) {
          fail("expected a string");
        }
        return j_->get<std::string>();
      }

      std::int64_t integer() const {
        if (!j_->is_number_integer()) {
          fail("expected an integer");
        }
        return j_->get<std::int64_t>();
      }

      std::size_t count() const {
        if (!j_->is_number_unsigned()) {
          fail("expected a non-negative integer");
        }
        return j_->get<std::size_t>();
      }

      bool boolean() const {
        if (!j_->is_boolean()) {
          fail("expected true or false");
        }
        return j_->get<bool>();
      }

      Rational rational() const {
        if (!j_->is_string()) {
          fail("rationals are written as strings such as \"3\" or \"-1/2\"");
        }
        try {
          return Rational::parse(j_->get<std::string>());
        } catch (InvalidInput const& e) {
          fail(e.what());
        }
      }

     private:
      static std::string escape(std::string const& key) {
        std::string out;
        for (char c : key) {
          if (c == '~') {
            out += "~0";
          } else if (c == '/') {
            out += "~1";
          } else {
            out += c;
          }
        }
        return out;
      }

      json const* j_;
      std::string path_;
    };

    //! Runs f, rethrowing library input errors as schema errors at n.
    template <typename F>
    auto at_node(Node const& n, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (ManifestError const&) {
        throw;
      } catch (InvalidInput const& e) {
        n.fail(e.what());
      }
    }

    inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                           std::size_t byte) {
      std::size_t line = 1;
      std::size_t col  = 1;
      for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return {line, col};
    }

    inline json vector_json(GradedVector const& v, GradedBasis const& b) {
      json out = json::object();
      for (auto const& [i, c] : v.terms()) {
        out[b.name(i)] = c.str();
      }
      return out;
    }

    inline GradedVector vector_from(Node const& n, GradedBasis const& b) {
      GradedVector v;
      for (auto const& name : n.keys()) {
        auto idx = b.find(name);
        if (!idx) {
          n.fail("unknown basis element \"" + name + "\"");
        }
        v.add_term(*idx, n.at(name).rational());
      }
      return v;
    }

    inline json columns_json(GradedLinearMap const& m) {
      json out = json::object();
      for (std::size_t i = 0; i < m.source().size(); ++i) {
        if (!m.column(i).is_zero()) {
          out[m.source().name(i)] = vector_json(m.column(i), m.target());
        }
      }
      return out;
    }

    inline GradedLinearMap columns_from(Node const&        n,
                                        GradedBasis const& source,
                                        GradedBasis const& target,
                                        Degree             shift) {
      std::vector<GradedVector> cols(source.size());
      for (auto const& name : n.keys()) {
        auto idx = source.find(name);
        if (!idx) {
          n.fail("unknown source basis element \"" + name + "\"");
        }
        cols[*idx] = vector_from(n.at(name), target);
      }
      return at_node(n, [&] {
        return GradedLinearMap(source, target, shift, std::move(cols));
      });
    }

    inline json images_json(GroupMap const& m) {
      json out = json::object();
      for (Index x = 0; x < m.source.order(); ++x) {
        out[m.source.name(x)] = m.target.name(m(x));
      }
      return out;
    }

    inline GroupMap images_from(Node const&        n,
                                FiniteGroup const& source,
                                FiniteGroup const& target) {
      std::vector<Index> im(source.order(), no_index);
      for (auto const& name : n.keys()) {
        auto x = source.find(name);
        if (!x) {
          n.fail("unknown source element \"" + name + "\"");
        }
        auto y = target.find(n.at(name).string());
        if (!y) {
          n.at(name).fail("unknown target element \"" + n.at(name).string()
                          + "\"");
        }
        im[*x] = *y;
      }
      for (Index x = 0; x < source.order(); ++x) {
        if (im[x] == no_index) {
          n.fail("no image given for \"" + source.name(x) + "\"");
        }
      }
      return GroupMap(source, target, std::move(im));
    }

    inline json table_json(KnitPairGroup::table_type const& t,
                           FiniteGroup const&               values) {
      json out = json::array();
      for (auto const& row : t) {
        json r = json::array();
        for (Index x : row) {
          r.push_back(values.name(x));
        }
        out.push_back(std::move(r));
      }
      return out;
    }

    inline KnitPairGroup::table_type table_from(Node const&        n,
                                                std::size_t        rows,
                                                std::size_t        cols,
                                                FiniteGroup const& values) {
      if (n.array_size() != rows) {
        n.fail("expected " + std::to_string(rows) + " rows");
      }
      KnitPairGroup::table_type t(rows);
      for (std::size_t i = 0; i < rows; ++i) {
        auto row = n.at(i);
        if (row.array_size() != cols) {
          row.fail("expected " + std::to_string(cols) + " entries");
        }
        for (std::size_t j = 0; j < cols; ++j) {
          auto cell = row.at(j);
          auto x    = values.find(cell.string());
          if (!x) {
            cell.fail("unknown element \"" + cell.string() + "\"");
          }
          t[i].push_back(*x);
        }
      }
      return t;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Payload encoders
  ////////////////////////////////////////////////////////////////////////

  inline json encode(GradedLieAlgebra const& L) {
    auto const& b     = L.basis();
    json        basis = json::array();
    for (auto const& e : b.entries()) {
      basis.push_back({{"name", e.name}, {"degree", e.degree}});
    }
    json brackets = json::array();
    for (auto const& [ij, v] : L.structure()) {
      if (v.is_zero()) {
        continue;
      }
      brackets.push_back({{"left", b.name(ij.first)},
                          {"right", b.name(ij.second)},
                          {"value", detail::vector_json(v, b)}});
    }
    return {{"mode", to_string(L.mode())},
            {"basis", std::move(basis)},
            {"brackets", std::move(brackets)}};
  }

  inline json encode(FiniteGroup const& G) {
    json table = json::array();
    for (Index x = 0; x < G.order(); ++x) {
      json row = json::array();
      for (Index y = 0; y < G.order(); ++y) {
        row.push_back(G.name(G.mul(x, y)));
      }
      table.push_back(std::move(row));
    }
    return {{"elements", G.names()},
            {"identity", G.name(G.identity())},
            {"table", std::move(table)}};
  }

  inline json encode(KnitPairLie const& p) {
    auto side = [](std::vector<GradedLinearMap> const& rep,
                   GradedBasis const&                  acting) {
      json out = json::object();
      for (std::size_t k = 0; k < rep.size(); ++k) {
        json cols = detail::columns_json(rep[k]);
        if (!cols.empty()) {
          out[acting.name(k)] = std::move(cols);
        }
      }
      return out;
    };
    return {{"A", encode(p.A())},
            {"B", encode(p.B())},
            {"alpha", side(p.alphas(), p.A().basis())},
            {"beta", side(p.betas(), p.B().basis())}};
  }

  inline json encode(KnitPairGroup const& p) {
    return {{"A", encode(p.A())},
            {"B", encode(p.B())},
            {"alpha", detail::table_json(p.alpha_table(), p.A())},
            {"beta", detail::table_json(p.beta_table(), p.B())}};
  }

  inline json encode(GradedLinearMap const& m) {
    return {{"type", "linear"},
            {"shift", m.degree_shift()},
            {"columns", detail::columns_json(m)}};
  }

  inline json encode(GroupMap const& m) {
    return {{"type", "group"}, {"images", detail::images_json(m)}};
  }

  inline json encode(LieHomQuadruple const& q) {
    return {{"type", "lie"},
            {"f", detail::columns_json(q.f)},
            {"g", detail::columns_json(q.g)},
            {"phi", detail::columns_json(q.phi)},
            {"psi", detail::columns_json(q.psi)}};
  }

  inline json encode(GroupHomQuadruple const& q) {
    return {{"type", "group"},
            {"f", detail::images_json(q.f)},
            {"g", detail::images_json(q.g)},
            {"phi", detail::images_json(q.phi)},
            {"psi", detail::images_json(q.psi)}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Payload decoders. `path` is the JSON pointer of the payload.
  ////////////////////////////////////////////////////////////////////////

  inline GradedLieAlgebra decode_graded_lie(json const&        payload,
                                            std::string const& path = "/payload") {
    detail::Node n(payload, path);
    n.object({"mode", "basis", "brackets"}, {"mode", "basis", "brackets"});
    auto        mode_node = n.at("mode");
    auto        mode_name = mode_node.string();
    GradingMode mode;
    if (mode_name == "Z") {
      mode = GradingMode::Z;
    } else if (mode_name == "Z2") {
      mode = GradingMode::Z2;
    } else {
      mode_node.fail("grading mode must be \"Z\" or \"Z2\"");
    }
    auto                      bnode = n.at("basis");
    std::vector<BasisElement> entries;
    for (std::size_t i = 0; i < bnode.array_size(); ++i) {
      auto e = bnode.at(i);
      e.object({"name", "degree"}, {"name", "degree"});
      entries.push_back({e.at("name").string(), e.at("degree").integer()});
      if (!degree_legal(entries.back().degree, mode)) {
        e.at("degree").fail("degree " + std::to_string(entries.back().degree)
                            + " is not 0 or 1 in Z2 mode");
      }
    }
    GradedBasis basis = detail::at_node(
        bnode, [&] { return GradedBasis(std::move(entries), mode); });

    auto                                        brnode = n.at("brackets");
    std::vector<StructureConstant>              consts;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < brnode.array_size(); ++k) {
      auto br = brnode.at(k);
      br.object({"left", "right", "value"}, {"left", "right", "value"});
      auto index = [&](char const* key) {
        auto nm = br.at(key);
        auto i  = basis.find(nm.string());
        if (!i) {
          nm.fail("unknown basis element \"" + nm.string() + "\"");
        }
        return *i;
      };
      std::size_t i = index("left");
      std::size_t j = index("right");
      if (i > j) {
        br.fail("bracket [" + basis.name(i) + ", " + basis.name(j)
                + "] must be listed as [" + basis.name(j) + ", "
                + basis.name(i) + "] (left precedes right in basis order)");
      }
      if (!seen.emplace(i, j).second) {
        br.fail("bracket [" + basis.name(i) + ", " + basis.name(j)
                + "] listed twice");
      }
      auto v = detail::vector_from(br.at("value"), basis);
      detail::at_node(br, [&] {
        return GradedLieAlgebra(basis, {{i, j, v}});
      });
      consts.push_back({i, j, std::move(v)});
    }
    return detail::at_node(
        n, [&] { return GradedLieAlgebra(basis, std::move(consts)); });
  }

  inline FiniteGroup decode_group(json const&        payload,
                                  std::string const& path = "/payload") {
    detail::Node n(payload, path);
    n.object({"elements", "identity", "table"}, {"elements", "identity", "table"});
    auto                     enode = n.at("elements");
    std::vector<std::string> names;
    std::map<std::string, Index> index;
    for (std::size_t i = 0; i < enode.array_size(); ++i) {
      names.push_back(enode.at(i).string());
      if (names.back().empty()) {
        enode.at(i).fail("element names must be non-empty");
      }
      if (!index.emplace(names.back(), i).second) {
        enode.at(i).fail("duplicate element name \"" + names.back() + "\"");
      }
    }
    if (names.empty()) {
      enode.fail("a group needs at least one element");
    }
    auto lookup = [&](detail::Node const& cell) {
      auto s  = cell.string();
      auto it = index.find(s);
      if (it == index.end()) {
        cell.fail("unknown element \"" + s + "\"");
      }
      return it->second;
    };
    Index e     = lookup(n.at("identity"));
    auto  tnode = n.at("table");
    if (tnode.array_size() != names.size()) {
      tnode.fail("expected one row per element");
    }
    std::vector<std::vector<Index>> table(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      auto row = tnode.at(i);
      if (row.array_size() != names.size()) {
        row.fail("expected one entry per element");
      }
      for (std::size_t j = 0; j < names.size(); ++j) {
        table[i].push_back(lookup(row.at(j)));
      }
    }
    return detail::at_node(n, [&] {
      return FiniteGroup(std::move(names), std::move(table), e);
    });
  }

  inline KnitPairLie decode_knit_pair_lie(json const&        payload,
                                          std::string const& path = "/payload") {
    detail::Node n(payload, path);
    n.object({"A", "B", "alpha", "beta"}, {"A", "B", "alpha", "beta"});
    auto A = decode_graded_lie(n.at("A").value(), n.at("A").path());
    auto B = decode_graded_lie(n.at("B").value(), n.at("B").path());
    if (A.mode() != B.mode()) {
      n.fail("A and B use different grading modes");
    }
    auto side = [](detail::Node const&     node,
                   GradedLieAlgebra const& acting,
                   GradedLieAlgebra const& space) {
      std::vector<GradedLinearMap> rep;
      for (std::size_t k = 0; k < acting.dimension(); ++k) {
        rep.push_back(GradedLinearMap::zero(
            space.basis(), space.basis(), acting.basis().degree(k)));
      }
      for (auto const& name : node.keys()) {
        auto k = acting.basis().find(name);
        if (!k) {
          node.fail("unknown basis element \"" + name + "\"");
        }
        rep[*k] = detail::columns_from(node.at(name),
                                       space.basis(),
                                       space.basis(),
                                       acting.basis().degree(*k));
      }
      return rep;
    };
    auto alpha = side(n.at("alpha"), A, B);
    auto beta  = side(n.at("beta"), B, A);
    return detail::at_node(n, [&] {
      return KnitPairLie(
          std::move(A), std::move(B), std::move(alpha), std::move(beta));
    });
  }

  inline KnitPairGroup decode_knit_pair_group(json const&        payload,
                                              std::string const& path = "/payload") {
    detail::Node n(payload, path);
    n.object({"A", "B", "alpha", "beta"}, {"A", "B", "alpha", "beta"});
    auto A     = decode_group(n.at("A").value(), n.at("A").path());
    auto B     = decode_group(n.at("B").value(), n.at("B").path());
    auto alpha = detail::table_from(n.at("alpha"), B.order(), A.order(), A);
    auto beta  = detail::table_from(n.at("beta"), B.order(), A.order(), B);
    return detail::at_node(n, [&] {
      return KnitPairGroup(
          std::move(A), std::move(B), std::move(alpha), std::move(beta));
    });
  }

  inline GradedLinearMap decode_linear_map(json const&        payload,
                                           GradedBasis const& source,
                                           GradedBasis const& target,
                                           std::string const& path = "/payload") {
    detail::Node n(payload, path);
    n.object({"type", "shift", "columns"}, {"type", "shift", "columns"});
    if (n.at("type").string() != "linear") {
      n.at("type").fail("expected a linear map");
    }
    return detail::columns_from(
        n.at("columns"), source, target, n.at("shift").integer());
  }

  inline GroupMap decode_group_map(json const&        payload,
                                   FiniteGroup const& source,
                                   FiniteGroup const& target,
                                   std::string const& path = "/payload") {
    detail::Node n(payload, path);
    n.object({"type", "images"}, {"type", "images"});
    if (n.at("type").string() != "group") {
      n.at("type").fail("expected a group map");
    }
    return detail::images_from(n.at("images"), source, target);
  }

  inline LieHomQuadruple decode_lie_quadruple(json const&        payload,
                                              KnitPairLie const& src,
                                              KnitPairLie const& dst,
                                              std::string const& path = "/payload") {
    detail::Node n(payload, path);
    n.object({"type", "f", "g", "phi", "psi"}, {"type", "f", "g", "phi", "psi"});
    if (n.at("type").string() != "lie") {
      n.at("type").fail("expected a Lie quadruple");
    }
    auto const& A  = src.A().basis();
    auto const& B  = src.B().basis();
    auto const& A2 = dst.A().basis();
    auto const& B2 = dst.B().basis();
    return {detail::columns_from(n.at("f"), A, A2, 0),
            detail::columns_from(n.at("g"), B, B2, 0),
            detail::columns_from(n.at("phi"), A, B2, 0),
            detail::columns_from(n.at("psi"), B, A2, 0)};
  }

  inline GroupHomQuadruple decode_group_quadruple(json const&          payload,
                                                  KnitPairGroup const& src,
                                                  KnitPairGroup const& dst,
                                                  std::string const&   path = "/payload") {
    detail::Node n(payload, path);
    n.object({"type", "f", "g", "phi", "psi"}, {"type", "f", "g", "phi", "psi"});
    if (n.at("type").string() != "group") {
      n.at("type").fail("expected a group quadruple");
    }
    return {detail::images_from(n.at("f"), src.A(), dst.A()),
            detail::images_from(n.at("g"), src.B(), dst.B()),
            detail::images_from(n.at("phi"), src.B(), dst.A()),
            detail::images_from(n.at("psi"), src.A(), dst.B())};
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration results
  ////////////////////////////////////////////////////////////////////////

  struct EnumerationDocument {
    FiniteGroup                       A;
    FiniteGroup                       B;
    std::vector<KnitPairGroup>        pairs;
    std::size_t                       total = 0;
    bool                              truncated = false;
    //! Indices into pairs, grouped by isomorphism type of the product.
    std::vector<std::vector<std::size_t>> product_classes;
  };

  inline json encode(EnumerationDocument const& d) {
    json pairs = json::array();
    for (auto const& p : d.pairs) {
      pairs.push_back({{"alpha", detail::table_json(p.alpha_table(), p.A())},
                       {"beta", detail::table_json(p.beta_table(), p.B())}});
    }
    return {{"A", encode(d.A)},
            {"B", encode(d.B)},
            {"pairs", std::move(pairs)},
            {"total", d.total},
            {"truncated", d.truncated},
            {"product_classes", d.product_classes}};
  }

  inline EnumerationDocument decode_enumeration(json const&        payload,
                                                std::string const& path = "/payload") {
    detail::Node n(payload, path);
    n.object({"A", "B", "pairs", "total", "truncated", "product_classes"},
             {"A", "B", "pairs", "total", "truncated", "product_classes"});
    EnumerationDocument d;
    d.A          = decode_group(n.at("A").value(), n.at("A").path());
    d.B          = decode_group(n.at("B").value(), n.at("B").path());
    auto pnode   = n.at("pairs");
    for (std::size_t k = 0; k < pnode.array_size(); ++k) {
      auto p = pnode.at(k);
      p.object({"alpha", "beta"}, {"alpha", "beta"});
      auto alpha = detail::table_from(p.at("alpha"), d.B.order(), d.A.order(), d.A);
      auto beta  = detail::table_from(p.at("beta"), d.B.order(), d.A.order(), d.B);
      d.pairs.emplace_back(d.A, d.B, std::move(alpha), std::move(beta));
    }
    d.total     = n.at("total").count();
    d.truncated = n.at("truncated").boolean();
    auto cnode  = n.at("product_classes");
    for (std::size_t c = 0; c < cnode.array_size(); ++c) {
      auto                     cls = cnode.at(c);
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < cls.array_size(); ++k) {
        members.push_back(cls.at(k).count());
        if (members.back() >= d.pairs.size()) {
          cls.at(k).fail("pair index out of range");
        }
      }
      d.product_classes.push_back(std::move(members));
    }
    return d;
  }

  ////////////////////////////////////////////////////////////////////////
  // Documents
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    inline Kind kind_from(Node const& n) {
      auto s = n.string();
      for (Kind k : {Kind::graded_lie,
                     Kind::group,
                     Kind::knit_pair_lie,
                     Kind::knit_pair_group,
                     Kind::map,
                     Kind::quadruple,
                     Kind::enumeration}) {
        if (s == to_string(k)) {
          return k;
        }
      }
      n.fail("unknown manifest kind \"" + s + "\"");
    }

    //! Checks the shape of map and quadruple payloads, whose contents can
    //! only be resolved against their source and target.
    inline void check_columns(Node const& n) {
      for (auto const& k : n.keys()) {
        auto col = n.at(k);
        for (auto const& t : col.keys()) {
          col.at(t).rational();
        }
      }
    }

    inline void check_images(Node const& n) {
      for (auto const& k : n.keys()) {
        n.at(k).string();
      }
    }

    inline void validate(Kind k, json const& payload) {
      Node n(payload, "/payload");
      switch (k) {
        case Kind::graded_lie: decode_graded_lie(payload); break;
        case Kind::group: decode_group(payload); break;
        case Kind::knit_pair_lie: decode_knit_pair_lie(payload); break;
        case Kind::knit_pair_group: decode_knit_pair_group(payload); break;
        case Kind::enumeration: decode_enumeration(payload); break;
        case Kind::map: {
          n.object({"type", "shift", "columns", "images"}, {"type"});
          auto type = n.at("type").string();
          if (type == "linear") {
            n.object({"type", "shift", "columns"}, {"type", "shift", "columns"});
            n.at("shift").integer();
            check_columns(n.at("columns"));
          } else if (type == "group") {
            n.object({"type", "images"}, {"type", "images"});
            check_images(n.at("images"));
          } else {
            n.at("type").fail("map type must be \"linear\" or \"group\"");
          }
          break;
        }
        case Kind::quadruple: {
          n.object({"type", "f", "g", "phi", "psi"},
                   {"type", "f", "g", "phi", "psi"});
          auto type = n.at("type").string();
          for (char const* m : {"f", "g", "phi", "psi"}) {
            if (type == "lie") {
              check_columns(n.at(m));
            } else if (type == "group") {
              check_images(n.at(m));
            } else {
              n.at("type").fail("quadruple type must be \"lie\" or \"group\"");
            }
          }
          break;
        }
      }
    }

  }  // namespace detail

  //! Parses and validates a manifest document. Duplicate object keys are
  //! rejected rather than silently merged.
  inline Manifest parse_manifest(std::string_view text) {
    std::vector<std::set<std::string>> open;
    json::parser_callback_t            cb
        = [&](int, json::parse_event_t ev, json& parsed) {
            switch (ev) {
              case json::parse_event_t::object_start:
                open.emplace_back();
                break;
              case json::parse_event_t::object_end:
                open.pop_back();
                break;
              case json::parse_event_t::key:
                if (!open.back().insert(parsed.get<std::string>()).second) {
                  throw ManifestError("document", "duplicate key \""
                                                      + parsed.get<std::string>()
                                                      + "\"");
                }
                break;
              default:
                break;
            }
            return true;
          };
    json doc;
    try {
      doc = json::parse(text.begin(), text.end(), cb);
    } catch (json::parse_error const& e) {
      auto [line, col] = detail::line_column(text, e.byte);
      std::string msg  = e.what();
      auto        pos  = msg.find("error: ");
      throw ManifestError("line " + std::to_string(line) + ", column "
                              + std::to_string(col),
                          "syntax error: "
                              + (pos == std::string::npos ? msg
                                                          : msg.substr(pos + 7)));
    }
    detail::Node root(doc, "");
    root.object({"format_version", "kind", "payload", "unverified"},
                {"format_version", "kind", "payload"});
    if (root.at("format_version").integer() != format_version) {
      root.at("format_version")
          .fail("unsupported format version; expected "
                + std::to_string(format_version));
    }
    Manifest m;
    m.kind       = detail::kind_from(root.at("kind"));
    m.payload    = doc.at("payload");
    m.unverified = root.has("unverified") && root.at("unverified").boolean();
    detail::validate(m.kind, m.payload);
    return m;
  }

  //! Canonical text: sorted keys, two-space indentation, trailing newline.
  inline std::string emit_manifest(Manifest const& m) {
    json doc{{"format_version", format_version},
             {"kind", to_string(m.kind)},
             {"payload", m.payload}};
    if (m.unverified) {
      doc["unverified"] = true;
    }
    return doc.dump(2) + "\n";
  }

  template <typename T>
  Manifest make_manifest(Kind k, T const& value, bool unverified = false) {
    return {k, encode(value), unverified};
  }

  inline Manifest expect_kind(Manifest m, std::set<Kind> const& allowed) {
    if (allowed.count(m.kind) == 0) {
      std::string want;
      for (Kind k : allowed) {
        want += (want.empty() ? "" : " or ") + std::string(to_string(k));
      }
      throw ManifestError("/kind", std::string("expected ") + want + ", got "
                                       + to_string(m.kind));
    }
    return m;
  }

}  // namespace knit::manifest

#endif  // KNIT_MANIFEST_HPP_
