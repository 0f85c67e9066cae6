#pragma once

#include <utility>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/errors.hpp"
#include "weyl/morphisms.hpp"

namespace weyl {

/// Same fields and invariants as the Weyl-side family: a^2 - b^2 = 1,
/// trailing zeros of c trimmed.
using JacFamilyParams = FamilyParams;

inline PolyElement d_dX(const PolyElement& p) {
    PolyElement r;
    for (const auto& [e, c] : p.terms())
        if (e.i > 0)
            r += PolyElement::monomial(e.i - 1, e.j, Scalar(c * e.i));
    return r;
}

inline PolyElement d_dY(const PolyElement& p) {
    PolyElement r;
    for (const auto& [e, c] : p.terms())
        if (e.j > 0)
            r += PolyElement::monomial(e.i, e.j - 1, Scalar(c * e.j));
    return r;
}

/// Jacobian bracket [p, q] = p_X q_Y - p_Y q_X.
inline PolyElement jac_bracket(const PolyElement& p, const PolyElement& q) {
    return d_dX(p) * d_dY(q) - d_dY(p) * d_dX(q);
}

/// Exchange involution X <-> Y (a homomorphism in the commutative case).
inline PolyElement apply_poly_alpha(const PolyElement& p) {
    PolyElement r;
    for (const auto& [e, c] : p.terms())
        r += PolyElement::monomial(e.j, e.i, c);
    return r;
}

/// beta(X) = X, beta(Y) = -Y.
inline PolyElement apply_poly_beta(const PolyElement& p) {
    PolyElement r;
    for (const auto& [e, c] : p.terms())
        r += PolyElement::monomial(e.i, e.j,
                                   e.j % 2 == 0 ? c : Scalar(-c));
    return r;
}

inline bool is_alpha_morphism(const PolyElement& fX, const PolyElement& fY) {
    return fY == apply_poly_alpha(fX) && fX == apply_poly_alpha(fY);
}

/// Image of p under the substitution X -> fX, Y -> fY.
inline PolyElement apply_poly_map(const PolyElement& fX, const PolyElement& fY,
                                  const PolyElement& p) {
    return detail::substitute(fX, fY, p);
}

/// fX = a X + b Y + sum_j c_j (X-Y)^(2j), fY with X and Y swapped in the
/// linear part.
inline std::pair<PolyElement, PolyElement> jc2_build_family(
    const JacFamilyParams& p) {
    return detail::family_images<PolyElement>(p.a(), p.b(), p.c(), Scalar(1),
                                              Scalar(1), false);
}

/// Same closed form as the Weyl-side inverse, with X, Y in place of x, y.
inline std::pair<PolyElement, PolyElement> jc2_family_inverse(
    const JacFamilyParams& p) {
    const Scalar d = p.a() - p.b();
    return detail::family_images<PolyElement>(p.a(), p.b(), p.c(), d,
                                              Scalar(-d), true);
}

/// Validates the alpha-morphism and unit-Jacobian properties, then matches
/// the canonical shape directly: fX - fY = (a-b)(X-Y) pins a-b, a+b is
/// forced to 1/(a-b), and the even remainder S = (fX + fY - (a+b)(X+Y))/2
/// must be a polynomial in (X-Y)^2 whose coefficients are the c_j.
inline JacFamilyParams jc2_classify(const PolyElement& fX,
                                    const PolyElement& fY) {
    if (!is_alpha_morphism(fX, fY))
        throw DomainError(
            "NotAlphaMorphism",
            "alpha(fX) - fY = " + render(apply_poly_alpha(fX) - fY));
    const PolyElement jac = jac_bracket(fX, fY);
    if (jac != PolyElement::one())
        throw DomainError("JacobianNotOne", "Jac(fX,fY) = " + render(jac));

    using E = PolyElement;
    const E xy = E::x() - E::y();
    const E diff = fX - fY;
    const Scalar d = diff.coeff(1, 0);
    if (d == 0 || diff != d * xy)
        throw InternalError("NotInFamily",
                            "fX - fY = " + render(diff) +
                                " is not a nonzero multiple of X - Y");
    const Scalar sum = Scalar(1) / d;
    const Scalar a = (d + sum) / 2;
    const Scalar b = (sum - d) / 2;

    const E s =
        make_scalar(1, 2) * (fX + fY - sum * (E::x() + E::y()));
    std::vector<Scalar> c;
    for (const auto& [e, coef] : s.terms()) {
        if (e.j != 0)
            continue;
        if (e.i % 2 != 0)
            throw InternalError("NotInFamily",
                                "odd X-power in S = " + render(s));
        const size_t idx = static_cast<size_t>(e.i) / 2;
        if (c.size() <= idx)
            c.resize(idx + 1, Scalar(0));
        c[idx] = coef;
    }
    E rebuilt;
    E power = E::one();
    const E xy2 = xy * xy;
    for (size_t j = 0; j < c.size(); ++j) {
        if (j > 0)
            power = power * xy2;
        rebuilt += c[j] * power;
    }
    if (rebuilt != s)
        throw InternalError("NotInFamily",
                            "S residual = " + render(s - rebuilt));
    return JacFamilyParams(a, b, c);
}

/// Classifies first; the returned images compose with (fX, fY) to the
/// identity in both orders.
inline std::pair<PolyElement, PolyElement> jc2_invert(const PolyElement& fX,
                                                      const PolyElement& fY) {
    return jc2_family_inverse(jc2_classify(fX, fY));
}

/// Debug view of the proof's intermediate: the images (P, Q) of the
/// conjugate phi^{-1} o f o phi, which commutes with beta. For family maps
/// Q = (a-b) Y and P = (a+b) X + sum_j c_j Y^(2j).
inline std::pair<PolyElement, PolyElement> jc2_conjugate(
    const PolyElement& fX, const PolyElement& fY) {
    using E = PolyElement;
    const Scalar half = make_scalar(1, 2);
    const E phi_x = half * (E::x() + E::y());
    const E phi_y = E::y() - E::x();
    const E phi_inv_x = E::x() - half * E::y();
    const E phi_inv_y = E::x() + half * E::y();
    const E fpx = detail::substitute(fX, fY, phi_x);
    const E fpy = detail::substitute(fX, fY, phi_y);
    return {detail::substitute(phi_inv_x, phi_inv_y, fpx),
            detail::substitute(phi_inv_x, phi_inv_y, fpy)};
}

} // namespace weyl
