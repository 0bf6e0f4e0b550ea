#ifndef KNIT_GRADED_LIE_HPP_
#define KNIT_GRADED_LIE_HPP_

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knit/errors.hpp"
#include "knit/graded.hpp"
#include "knit/rational.hpp"
#include "knit/report.hpp"

namespace knit {

  //! Endomorphisms carry a degree shift; source and target coincide.
  using ShiftedEndomorphism = GradedLinearMap;

  //! One stored structure constant [b_i, b_j] with i <= j.
  struct StructureConstant {
    std::size_t  i;
    std::size_t  j;
    GradedVector value;
  };

  //! A finite-dimensional graded Lie algebra given by structure constants.
  //!
  //! Only brackets [b_i, b_j] with i <= j are stored; the other half of the
  //! table follows from graded antisymmetry [y, x] = -(-1)^{|x||y|} [x, y].
  //! The constructor enforces degree compatibility and that [b_i, b_i] is
  //! zero unless b_i is odd. The Jacobi identity is only checked by
  //! verify_graded_lie, so candidate tables can be built freely.
  class GradedLieAlgebra {
   public:
    GradedLieAlgebra() = default;

    GradedLieAlgebra(GradedBasis basis, std::vector<StructureConstant> consts)
        : basis_(std::move(basis)) {
      std::size_t const n = basis_.size();
      for (auto& sc : consts) {
        if (sc.i >= n || sc.j >= n) {
          throw InvalidInput("structure constant index out of range");
        }
        if (sc.i > sc.j) {
          throw InvalidInput("structure constant [" + basis_.name(sc.i) + ", "
                             + basis_.name(sc.j)
                             + "] must be given as the (i <= j) entry");
        }
        require_in(sc.value, basis_, "structure constant");
        if (sc.value.is_zero()) {
          continue;
        }
        Degree want = basis_.add(basis_.degree(sc.i), basis_.degree(sc.j));
        for (auto const& [k, c] : sc.value.terms()) {
          if (basis_.degree(k) != want) {
            throw InvalidInput("[" + basis_.name(sc.i) + ", "
                               + basis_.name(sc.j) + "] has a component on "
                               + basis_.name(k) + " of degree "
                               + std::to_string(basis_.degree(k))
                               + ", expected degree " + std::to_string(want));
          }
        }
        if (sc.i == sc.j && basis_.sign(sc.i, sc.i) == 1) {
          throw InvalidInput("[" + basis_.name(sc.i) + ", "
                             + basis_.name(sc.i)
                             + "] must vanish for an even element");
        }
        if (!structure_.emplace(std::pair(sc.i, sc.j), std::move(sc.value))
                 .second) {
          throw InvalidInput("structure constant [" + basis_.name(sc.i) + ", "
                             + basis_.name(sc.j) + "] given twice");
        }
      }
      table_.assign(n * n, GradedVector());
      for (auto const& [ij, v] : structure_) {
        auto [i, j] = ij;
        table_[i * n + j] = v;
        if (i != j) {
          table_[j * n + i] = Rational(-basis_.sign(i, j)) * v;
        }
      }
    }

    GradedBasis const& basis() const noexcept {
      return basis_;
    }
    std::size_t dimension() const noexcept {
      return basis_.size();
    }
    GradingMode mode() const noexcept {
      return basis_.mode();
    }

    //! Nonzero stored entries keyed by (i, j), i <= j.
    std::map<std::pair<std::size_t, std::size_t>, GradedVector> const&
    structure() const noexcept {
      return structure_;
    }

    //! [b_i, b_j] from the completed table.
    GradedVector const& basis_bracket(std::size_t i, std::size_t j) const {
      return table_.at(i * basis_.size() + j);
    }

   private:
    GradedBasis                                                 basis_;
    std::map<std::pair<std::size_t, std::size_t>, GradedVector> structure_;
    std::vector<GradedVector>                                   table_;
  };

  namespace detail {
    inline GradedVector bracket_unchecked(GradedLieAlgebra const& L,
                                          GradedVector const&     x,
                                          GradedVector const&     y) {
      GradedVector out;
      for (auto const& [i, a] : x.terms()) {
        for (auto const& [j, b] : y.terms()) {
          out.add_scaled(L.basis_bracket(i, j), a * b);
        }
      }
      return out;
    }

    inline std::vector<std::string> names(GradedBasis const&              b,
                                          std::vector<std::size_t> const& ix) {
      std::vector<std::string> out;
      out.reserve(ix.size());
      for (auto i : ix) {
        out.push_back(b.name(i));
      }
      return out;
    }
  }  // namespace detail

  //! Bilinear extension of the structure table.
  inline GradedVector bracket(GradedLieAlgebra const& L,
                              GradedVector const&     x,
                              GradedVector const&     y) {
    require_in(x, L.basis(), "left argument");
    require_in(y, L.basis(), "right argument");
    return detail::bracket_unchecked(L, x, y);
  }

  //! Checks degree compatibility, graded antisymmetry and the graded Jacobi
  //! identity [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]] over all
  //! ordered basis triples.
  inline VerificationReport verify_graded_lie(GradedLieAlgebra const& L) {
    VerificationReport r("graded Lie algebra");
    auto const&        B = L.basis();
    std::size_t const  n = L.dimension();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto const& v    = L.basis_bracket(i, j);
        auto        want = B.add(B.degree(i), B.degree(j));
        bool        ok   = true;
        for (auto const& [k, c] : v.terms()) {
          ok = ok && B.degree(k) == want;
        }
        r.expect(ok,
                 {"degree",
                  "",
                  {i, j},
                  detail::names(B, {i, j}),
                  to_string(v, B),
                  "homogeneous of degree " + std::to_string(want)});
        auto swapped = Rational(-B.sign(i, j)) * L.basis_bracket(j, i);
        r.expect(v == swapped,
                 {"antisymmetry",
                  "[x,y] = -(-1)^{|x||y|}[y,x]",
                  {i, j},
                  detail::names(B, {i, j}),
                  to_string(v, B),
                  to_string(swapped, B)});
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto const& ab = L.basis_bracket(a, b);
        for (std::size_t c = 0; c < n; ++c) {
          auto lhs = detail::bracket_unchecked(
              L, GradedVector::unit(a), L.basis_bracket(b, c));
          auto rhs = detail::bracket_unchecked(L, ab, GradedVector::unit(c));
          rhs.add_scaled(
              detail::bracket_unchecked(
                  L, GradedVector::unit(b), L.basis_bracket(a, c)),
              Rational(B.sign(a, b)));
          r.expect(lhs == rhs,
                   {"jacobi",
                    "[a,[b,c]] = [[a,b],c] + (-1)^{|a||b|}[b,[a,c]]",
                    {a, b, c},
                    detail::names(B, {a, b, c}),
                    to_string(lhs, B),
                    to_string(rhs, B)});
        }
      }
    }
    return r;
  }

  //! The graded commutator p.q - (-1)^{|p||q|} q.p of shifted endomorphisms.
  inline ShiftedEndomorphism end_bracket(ShiftedEndomorphism const& p,
                                         ShiftedEndomorphism const& q) {
    if (!p.is_endomorphism() || !q.is_endomorphism()
        || !(p.source() == q.source())) {
      throw BasisMismatch("end_bracket needs endomorphisms of one space");
    }
    int s = detail::sign(p.degree_shift(), q.degree_shift());
    return add_maps(
        compose_graded_maps(p, q), compose_graded_maps(q, p), Rational(-s));
  }

  //! The endomorphism y -> [b_i, y], of degree |b_i|.
  inline ShiftedEndomorphism ad(GradedLieAlgebra const& L, std::size_t i) {
    std::vector<GradedVector> cols;
    cols.reserve(L.dimension());
    for (std::size_t j = 0; j < L.dimension(); ++j) {
      cols.push_back(L.basis_bracket(i, j));
    }
    return GradedLinearMap(
        L.basis(), L.basis(), L.basis().degree(i), std::move(cols));
  }

  //! Checks h([x,y]) = [h(x), h(y)] on all ordered basis pairs.
  inline VerificationReport is_graded_lie_hom(GradedLieAlgebra const& L,
                                              GradedLieAlgebra const& L2,
                                              GradedLinearMap const&  h) {
    if (!(h.source() == L.basis()) || !(h.target() == L2.basis())) {
      throw BasisMismatch("homomorphism candidate does not map between the "
                          "given algebras");
    }
    VerificationReport r("graded Lie homomorphism");
    r.expect(h.degree_shift() == 0,
             {"degree-preserving",
              "",
              {},
              {},
              std::to_string(h.degree_shift()),
              "0"});
    auto const&       B = L.basis();
    std::size_t const n = L.dimension();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto lhs = apply_unchecked(h, L.basis_bracket(i, j));
        auto rhs = detail::bracket_unchecked(L2, h.column(i), h.column(j));
        r.expect(lhs == rhs,
                 {"hom",
                  "h[x,y] = [hx,hy]",
                  {i, j},
                  detail::names(B, {i, j}),
                  to_string(lhs, L2.basis()),
                  to_string(rhs, L2.basis())});
      }
    }
    return r;
  }

  //! Checks d[x,y] = [dx,y] + (-1)^{|d||x|}[x,dy] on all ordered basis pairs.
  inline VerificationReport is_graded_derivation(GradedLieAlgebra const&    L,
                                                 ShiftedEndomorphism const& d) {
    if (!(d.source() == L.basis()) || !(d.target() == L.basis())) {
      throw BasisMismatch("derivation candidate does not act on the algebra");
    }
    VerificationReport r("graded derivation");
    auto const&        B = L.basis();
    std::size_t const  n = L.dimension();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        auto lhs = apply_unchecked(d, L.basis_bracket(i, j));
        auto rhs = detail::bracket_unchecked(
            L, d.column(i), GradedVector::unit(j));
        rhs.add_scaled(
            detail::bracket_unchecked(L, GradedVector::unit(i), d.column(j)),
            Rational(detail::sign(d.degree_shift(), B.degree(i))));
        r.expect(lhs == rhs,
                 {"derivation",
                  "d[x,y] = [dx,y] + (-1)^{|d||x|}[x,dy]",
                  {i, j},
                  detail::names(B, {i, j}),
                  to_string(lhs, B),
                  to_string(rhs, B)});
      }
    }
    return r;
  }

}  // namespace knit

#endif  // KNIT_GRADED_LIE_HPP_
