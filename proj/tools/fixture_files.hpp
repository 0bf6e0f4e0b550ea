#ifndef KNIT_TOOLS_FIXTURE_FILES_HPP_
#define KNIT_TOOLS_FIXTURE_FILES_HPP_

// Contents of every file under fixtures/, keyed by file name.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "knit/fixtures.hpp"
#include "knit/manifest.hpp"

namespace knit::fixtures {

  //! Automorphism E -> -F, F -> -E, H -> -H of sl2, on the knit basis
  //! (E, H, F) of sl2_pair().
  inline GradedLinearMap sl2_flip(KnitPairLie const& p) {
    auto const basis = knit_basis(p);
    auto       v     = [&](char const* n) {
      return GradedVector::unit(basis.index_of(n), Rational(-1));
    };
    return GradedLinearMap(basis, basis, 0, {v("F"), v("H"), v("E")});
  }

  inline LieHomQuadruple lie_identity_quadruple(KnitPairLie const& p) {
    auto const& A = p.A().basis();
    auto const& B = p.B().basis();
    return {GradedLinearMap::identity(A),
            GradedLinearMap::identity(B),
            GradedLinearMap::zero(A, B),
            GradedLinearMap::zero(B, A)};
  }

  inline LieHomQuadruple lie_zero_quadruple(KnitPairLie const& p) {
    auto const& A = p.A().basis();
    auto const& B = p.B().basis();
    return {GradedLinearMap::zero(A, A),
            GradedLinearMap::zero(B, B),
            GradedLinearMap::zero(A, B),
            GradedLinearMap::zero(B, A)};
  }

  //! The flip quadruple with f doubled.
  inline LieHomQuadruple lie_broken_quadruple(KnitPairLie const& p) {
    auto q = extract_lie_quadruple(p, p, sl2_flip(p));
    q.f    = add_maps(q.f, q.f);
    return q;
  }

  //! Conjugation y -> x y x^-1 on the knit product of p.
  inline GroupMap conjugation(KnitPairGroup const& p, Index x) {
    auto const         P = knit_group_product(p);
    std::vector<Index> im;
    for (Index y = 0; y < P.order(); ++y) {
      im.push_back(P.mul(P.mul(x, y), P.inverse(x)));
    }
    return GroupMap(P, P, std::move(im));
  }

  //! Conjugating element used for the S4 quadruple fixture.
  inline Index s4_conjugator(KnitPairGroup const& p) {
    auto const& A = p.A();
    auto const& B = p.B();
    return p.pair_index(A.index_of("(1234)"), B.index_of("(12)"));
  }

  inline GroupHomQuadruple group_identity_quadruple(KnitPairGroup const& p) {
    return {GroupMap::identity(p.A()),
            GroupMap::identity(p.B()),
            GroupMap::trivial(p.B(), p.A()),
            GroupMap::trivial(p.A(), p.B())};
  }

  //! The S4 conjugation quadruple with g's values at two non-identity
  //! elements exchanged.
  inline GroupHomQuadruple group_broken_quadruple(KnitPairGroup const& p) {
    auto  q  = extract_group_quadruple(p, p, conjugation(p, s4_conjugator(p)));
    auto& im = q.g.images;
    Index e  = p.B().identity();
    Index b1 = e == 0 ? 1 : 0;
    Index b2 = b1 + 1 == e ? b1 + 2 : b1 + 1;
    std::swap(im[b1], im[b2]);
    return q;
  }

  //! A = B = C3 with alpha_b inversion for b != e: b -> alpha_b is not a
  //! homomorphism.
  inline KnitPairGroup broken_group_pair() {
    auto A = cyclic(3, "a");
    auto B = cyclic(3, "b");
    return KnitPairGroup(A,
                         B,
                         {{0, 1, 2}, {0, 2, 1}, {0, 2, 1}},
                         {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}});
  }

  //! sl2_pair() with alpha(H) doubled.
  inline KnitPairLie broken_lie_pair() {
    auto p     = sl2_pair();
    auto alpha = p.alphas();
    auto h     = p.A().basis().index_of("H");
    alpha[h]   = add_maps(alpha[h], alpha[h]);
    return KnitPairLie(p.A(), p.B(), std::move(alpha), p.betas());
  }

  //! X even, theta odd, [theta, theta] = X, [X, theta] = theta: fails Jacobi.
  inline GradedLieAlgebra bad_jacobi() {
    GradedBasis b({{"X", 0}, {"theta", 1}}, GradingMode::Z2);
    return lie_from_names(
        b, {{"theta", "theta", {{"X", 1}}}, {"X", "theta", {{"theta", 1}}}});
  }

  //! A Latin square of order 5 with identity e and x^2 = e, hence not
  //! associative.
  inline FiniteGroup bad_group() {
    return FiniteGroup({"e", "x", "y", "z", "w"},
                       {{0, 1, 2, 3, 4},
                        {1, 0, 3, 4, 2},
                        {2, 4, 0, 1, 3},
                        {3, 2, 4, 0, 1},
                        {4, 3, 1, 2, 0}},
                       0);
  }

  inline std::map<std::string, std::string> fixture_files() {
    namespace mf = knit::manifest;
    using mf::Kind;
    std::map<std::string, std::string> files;
    auto put = [&](std::string const& name, mf::Manifest const& m) {
      files[name] = mf::emit_manifest(m);
    };

    put("sl2.alg", mf::make_manifest(Kind::graded_lie, sl2()));
    put("super1.alg", mf::make_manifest(Kind::graded_lie, super1()));
    put("gl11.alg", mf::make_manifest(Kind::graded_lie, gl11()));
    put("osp12.alg", mf::make_manifest(Kind::graded_lie, osp12()));
    put("borel.alg", mf::make_manifest(Kind::graded_lie, borel()));
    put("bad-jacobi.alg", mf::make_manifest(Kind::graded_lie, bad_jacobi()));

    auto const sl2p = sl2_pair();
    put("sl2.knit", mf::make_manifest(Kind::knit_pair_lie, sl2p));
    put("gl11.knit", mf::make_manifest(Kind::knit_pair_lie, gl11_pair()));
    put("osp12.knit", mf::make_manifest(Kind::knit_pair_lie, osp12_pair()));
    put("semidirect.knit",
        mf::make_manifest(Kind::knit_pair_lie, semidirect_pair()));
    put("zero.knit", mf::make_manifest(Kind::knit_pair_lie, zero_pair()));
    put("broken-lie.knit",
        mf::make_manifest(Kind::knit_pair_lie, broken_lie_pair()));

    put("sl2-identity.quad",
        mf::make_manifest(Kind::quadruple, lie_identity_quadruple(sl2p)));
    put("sl2-flip.quad",
        mf::make_manifest(Kind::quadruple,
                          extract_lie_quadruple(sl2p, sl2p, sl2_flip(sl2p))));
    put("sl2-zero.quad",
        mf::make_manifest(Kind::quadruple, lie_zero_quadruple(sl2p)));
    put("sl2-broken.quad",
        mf::make_manifest(Kind::quadruple, lie_broken_quadruple(sl2p)));
    put("sl2-flip.map", mf::make_manifest(Kind::map, sl2_flip(sl2p)));

    put("trivial.grp", mf::make_manifest(Kind::group, trivial_group()));
    put("c2.grp", mf::make_manifest(Kind::group, cyclic(2)));
    put("c3.grp", mf::make_manifest(Kind::group, cyclic(3)));
    put("c4.grp", mf::make_manifest(Kind::group, cyclic(4)));
    put("c6.grp", mf::make_manifest(Kind::group, cyclic(6)));
    put("v4.grp", mf::make_manifest(Kind::group, klein()));
    put("s3.grp", mf::make_manifest(Kind::group, symmetric(3)));
    put("d4.grp", mf::make_manifest(Kind::group, dihedral4()));
    put("s4.grp", mf::make_manifest(Kind::group, symmetric(4)));
    put("bad.grp", mf::make_manifest(Kind::group, bad_group()));

    auto const s4p = s4_pair();
    put("s3.knit", mf::make_manifest(Kind::knit_pair_group, s3_pair()));
    put("s4.knit", mf::make_manifest(Kind::knit_pair_group, s4p));
    put("c2c3.knit",
        mf::make_manifest(Kind::knit_pair_group, c2_c3_inverting_pair()));
    put("direct-c2c3.knit",
        mf::make_manifest(Kind::knit_pair_group,
                          KnitPairGroup::trivial(cyclic(2, "a"), cyclic(3, "b"))));
    put("broken-pair.knit",
        mf::make_manifest(Kind::knit_pair_group, broken_group_pair()));

    auto const conj = conjugation(s4p, s4_conjugator(s4p));
    put("s4-identity.quad",
        mf::make_manifest(Kind::quadruple, group_identity_quadruple(s4p)));
    put("s4-conj.quad",
        mf::make_manifest(Kind::quadruple, extract_group_quadruple(s4p, s4p, conj)));
    put("s4-broken.quad",
        mf::make_manifest(Kind::quadruple, group_broken_quadruple(s4p)));
    put("s4-conj.map", mf::make_manifest(Kind::map, conj));
    return files;
  }

}  // namespace knit::fixtures

#endif  // KNIT_TOOLS_FIXTURE_FILES_HPP_
