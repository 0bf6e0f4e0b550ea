#ifndef KNIT_GRADED_HPP_
#define KNIT_GRADED_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knit/errors.hpp"
#include "knit/rational.hpp"

namespace knit {

  //! Gradings are either by the integers or by Z/2; never both at once.
  enum class GradingMode { Z, Z2 };

  using Degree = std::int64_t;

  inline char const* to_string(GradingMode m) noexcept {
    return m == GradingMode::Z ? "Z" : "Z2";
  }

  inline bool is_odd(Degree d) noexcept {
    return d % 2 != 0;
  }

  inline bool degree_legal(Degree d, GradingMode mode) noexcept {
    return mode == GradingMode::Z || d == 0 || d == 1;
  }

  //! Sum of two degrees in the given mode (reduced mod 2 for Z2).
  inline Degree add_degrees(Degree d1, Degree d2, GradingMode mode) noexcept {
    Degree s = d1 + d2;
    if (mode == GradingMode::Z2) {
      s = is_odd(s) ? 1 : 0;
    }
    return s;
  }

  namespace detail {
    // (-1)^{d1 d2} as an int.
    inline int sign(Degree d1, Degree d2) noexcept {
      return is_odd(d1) && is_odd(d2) ? -1 : 1;
    }
  }  // namespace detail

  //! The Koszul sign (-1)^{d1 d2}. In Z mode only the parity of the integer
  //! product matters.
  inline Rational parity_sign(Degree d1, Degree d2, GradingMode mode) {
    if (!degree_legal(d1, mode) || !degree_legal(d2, mode)) {
      throw InvalidInput("degree not legal in Z2 mode");
    }
    return Rational(detail::sign(d1, d2));
  }

  struct BasisElement {
    std::string name;
    Degree      degree = 0;

    friend bool operator==(BasisElement const&, BasisElement const&) = default;
  };

  //! Ordered homogeneous basis. Names are unique; in Z2 mode every degree
  //! is 0 or 1.
  class GradedBasis {
   public:
    GradedBasis() = default;

    GradedBasis(std::vector<BasisElement> entries, GradingMode mode)
        : entries_(std::move(entries)), mode_(mode) {
      for (std::size_t i = 0; i < entries_.size(); ++i) {
        auto const& e = entries_[i];
        if (e.name.empty()) {
          throw InvalidInput("basis element " + std::to_string(i)
                             + " has an empty name");
        }
        if (!degree_legal(e.degree, mode_)) {
          throw InvalidInput("basis element \"" + e.name + "\" has degree "
                             + std::to_string(e.degree)
                             + ", illegal in Z2 mode");
        }
        if (!index_.emplace(e.name, i).second) {
          throw InvalidInput("duplicate basis name \"" + e.name + "\"");
        }
      }
    }

    std::size_t size() const noexcept {
      return entries_.size();
    }
    GradingMode mode() const noexcept {
      return mode_;
    }
    std::vector<BasisElement> const& entries() const noexcept {
      return entries_;
    }
    BasisElement const& operator[](std::size_t i) const {
      return entries_.at(i);
    }
    std::string const& name(std::size_t i) const {
      return entries_.at(i).name;
    }
    Degree degree(std::size_t i) const {
      return entries_.at(i).degree;
    }

    std::optional<std::size_t> find(std::string const& name) const {
      auto it = index_.find(name);
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::size_t index_of(std::string const& name) const {
      auto i = find(name);
      if (!i) {
        throw InvalidInput("unknown basis element \"" + name + "\"");
      }
      return *i;
    }

    Degree add(Degree d1, Degree d2) const noexcept {
      return add_degrees(d1, d2, mode_);
    }

    int sign(std::size_t i, std::size_t j) const {
      return detail::sign(degree(i), degree(j));
    }

    friend bool operator==(GradedBasis const& a, GradedBasis const& b) {
      return a.mode_ == b.mode_ && a.entries_ == b.entries_;
    }

   private:
    std::vector<BasisElement>                    entries_;
    GradingMode                                  mode_ = GradingMode::Z;
    std::unordered_map<std::string, std::size_t> index_;
  };

  //! Sparse vector of exact coefficients indexed by basis position.
  //! Absent indices are zero; zero coefficients are never stored.
  class GradedVector {
   public:
    using terms_type = std::map<std::size_t, Rational>;

    GradedVector() = default;

    static GradedVector unit(std::size_t i, Rational c = Rational(1)) {
      GradedVector v;
      v.add_term(i, std::move(c));
      return v;
    }

    GradedVector& add_term(std::size_t i, Rational const& c) {
      if (c.is_zero()) {
        return *this;
      }
      auto [it, inserted] = terms_.try_emplace(i, c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
          terms_.erase(it);
        }
      }
      return *this;
    }

    GradedVector& add_scaled(GradedVector const& v, Rational const& c) {
      if (c.is_zero()) {
        return *this;
      }
      for (auto const& [i, x] : v.terms_) {
        add_term(i, x * c);
      }
      return *this;
    }

    Rational coefficient(std::size_t i) const {
      auto it = terms_.find(i);
      return it == terms_.end() ? Rational(0) : it->second;
    }

    terms_type const& terms() const noexcept {
      return terms_;
    }
    bool is_zero() const noexcept {
      return terms_.empty();
    }

    GradedVector& operator+=(GradedVector const& o) {
      return add_scaled(o, Rational(1));
    }
    GradedVector& operator-=(GradedVector const& o) {
      return add_scaled(o, Rational(-1));
    }
    GradedVector& operator*=(Rational const& c) {
      if (c.is_zero()) {
        terms_.clear();
        return *this;
      }
      for (auto& [i, x] : terms_) {
        x *= c;
      }
      return *this;
    }

    friend GradedVector operator+(GradedVector a, GradedVector const& b) {
      return a += b;
    }
    friend GradedVector operator-(GradedVector a, GradedVector const& b) {
      return a -= b;
    }
    friend GradedVector operator*(Rational const& c, GradedVector v) {
      return v *= c;
    }
    friend GradedVector operator-(GradedVector v) {
      return v *= Rational(-1);
    }
    friend bool operator==(GradedVector const&, GradedVector const&) = default;

   private:
    terms_type terms_;
  };

  //! Throws if a vector has indices outside the basis.
  inline void require_in(GradedVector const& v,
                         GradedBasis const&  basis,
                         char const*         what = "vector") {
    if (!v.is_zero() && v.terms().rbegin()->first >= basis.size()) {
      throw BasisMismatch(std::string(what) + " has index "
                          + std::to_string(v.terms().rbegin()->first)
                          + " outside a basis of size "
                          + std::to_string(basis.size()));
    }
  }

  //! Common degree of all terms, or nullopt for mixed (or zero) vectors.
  inline std::optional<Degree> homogeneous_degree(GradedVector const& v,
                                                  GradedBasis const&  basis) {
    std::optional<Degree> d;
    for (auto const& [i, c] : v.terms()) {
      Degree di = basis.degree(i);
      if (d && *d != di) {
        return std::nullopt;
      }
      d = di;
    }
    return d;
  }

  inline std::string to_string(GradedVector const& v,
                               GradedBasis const&  basis) {
    if (v.is_zero()) {
      return "0";
    }
    std::ostringstream os;
    bool               first = true;
    for (auto const& [i, c] : v.terms()) {
      Rational mag = c < Rational(0) ? -c : c;
      if (first) {
        os << (c < Rational(0) ? "-" : "");
      } else {
        os << (c < Rational(0) ? " - " : " + ");
      }
      if (mag != Rational(1)) {
        os << mag << '*';
      }
      os << basis.name(i);
      first = false;
    }
    return os.str();
  }

  //! Linear map between graded spaces shifting degrees by a fixed amount.
  //! Column i is the image of source basis element i.
  class GradedLinearMap {
   public:
    GradedLinearMap() = default;

    GradedLinearMap(GradedBasis               source,
                    GradedBasis               target,
                    Degree                    degree_shift,
                    std::vector<GradedVector> columns)
        : source_(std::move(source)),
          target_(std::move(target)),
          shift_(degree_shift),
          columns_(std::move(columns)) {
      if (source_.mode() != target_.mode()) {
        throw InvalidInput("linear map between different grading modes");
      }
      if (source_.mode() == GradingMode::Z2) {
        shift_ = is_odd(shift_) ? 1 : 0;
      }
      if (columns_.size() != source_.size()) {
        throw InvalidInput("linear map has " + std::to_string(columns_.size())
                           + " columns for a source of dimension "
                           + std::to_string(source_.size()));
      }
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        require_in(columns_[i], target_, "column");
        Degree want = source_.add(source_.degree(i), shift_);
        for (auto const& [j, c] : columns_[i].terms()) {
          if (target_.degree(j) != want) {
            throw InvalidInput("map of degree " + std::to_string(shift_)
                               + " sends " + source_.name(i) + " (degree "
                               + std::to_string(source_.degree(i)) + ") onto "
                               + target_.name(j) + " (degree "
                               + std::to_string(target_.degree(j)) + ")");
          }
        }
      }
    }

    static GradedLinearMap zero(GradedBasis source,
                                GradedBasis target,
                                Degree      shift = 0) {
      std::vector<GradedVector> cols(source.size());
      return GradedLinearMap(
          std::move(source), std::move(target), shift, std::move(cols));
    }

    static GradedLinearMap identity(GradedBasis const& basis) {
      std::vector<GradedVector> cols;
      cols.reserve(basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) {
        cols.push_back(GradedVector::unit(i));
      }
      return GradedLinearMap(basis, basis, 0, std::move(cols));
    }

    GradedBasis const& source() const noexcept {
      return source_;
    }
    GradedBasis const& target() const noexcept {
      return target_;
    }
    Degree degree_shift() const noexcept {
      return shift_;
    }
    std::vector<GradedVector> const& columns() const noexcept {
      return columns_;
    }
    GradedVector const& column(std::size_t i) const {
      return columns_.at(i);
    }
    bool is_endomorphism() const {
      return source_ == target_;
    }
    bool is_zero() const {
      for (auto const& c : columns_) {
        if (!c.is_zero()) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(GradedLinearMap const&,
                           GradedLinearMap const&) = default;

   private:
    GradedBasis               source_;
    GradedBasis               target_;
    Degree                    shift_ = 0;
    std::vector<GradedVector> columns_;
  };

  //! Applies a map to a vector of its source space without basis checks.
  inline GradedVector apply_unchecked(GradedLinearMap const& m,
                                      GradedVector const&    v) {
    GradedVector out;
    for (auto const& [i, c] : v.terms()) {
      out.add_scaled(m.column(i), c);
    }
    return out;
  }

  inline GradedVector apply_graded_map(GradedLinearMap const& m,
                                       GradedVector const&    v) {
    require_in(v, m.source(), "argument");
    return apply_unchecked(m, v);
  }

  //! m2 after m1.
  inline GradedLinearMap compose_graded_maps(GradedLinearMap const& m2,
                                             GradedLinearMap const& m1) {
    if (!(m1.target() == m2.source())) {
      throw BasisMismatch("composition: target of the inner map is not the "
                          "source of the outer map");
    }
    std::vector<GradedVector> cols;
    cols.reserve(m1.source().size());
    for (auto const& c : m1.columns()) {
      cols.push_back(apply_unchecked(m2, c));
    }
    return GradedLinearMap(m1.source(),
                           m2.target(),
                           m1.degree_shift() + m2.degree_shift(),
                           std::move(cols));
  }

  //! Sum of two maps with identical shapes.
  inline GradedLinearMap add_maps(GradedLinearMap const& p,
                                  GradedLinearMap const& q,
                                  Rational const&        q_scale = Rational(1)) {
    if (!(p.source() == q.source()) || !(p.target() == q.target())
        || p.degree_shift() != q.degree_shift()) {
      throw BasisMismatch("adding maps of different shapes");
    }
    std::vector<GradedVector> cols = p.columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      cols[i].add_scaled(q.column(i), q_scale);
    }
    return GradedLinearMap(
        p.source(), p.target(), p.degree_shift(), std::move(cols));
  }

  //! The map sending each source basis element to the equally named target
  //! basis element.
  inline GradedLinearMap map_by_names(GradedBasis const& source,
                                      GradedBasis const& target) {
    std::vector<GradedVector> cols;
    for (std::size_t i = 0; i < source.size(); ++i) {
      cols.push_back(GradedVector::unit(target.index_of(source.name(i))));
    }
    return GradedLinearMap(source, target, 0, std::move(cols));
  }

}  // namespace knit

#endif  // KNIT_GRADED_HPP_
