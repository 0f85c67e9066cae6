#pragma once

#include <utility>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/errors.hpp"

namespace weyl {

/// Candidate generator images (f(x), f(y)). No invariants at construction;
/// is_endomorphism / is_alpha_equivariant are explicit checks.
struct GenImages {
    WeylElement fx;
    WeylElement fy;

    friend bool operator==(const GenImages&, const GenImages&) = default;
};

/// Family parameters (a, b, c0..cn) with a^2 - b^2 = 1. The c list is kept
/// free of trailing zeros so equal families compare equal.
class FamilyParams {
public:
    FamilyParams(Scalar a, Scalar b, std::vector<Scalar> c = {})
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        if (a_ * a_ - b_ * b_ != 1)
            throw DomainError("InvalidParams", "a^2 - b^2 must equal 1");
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const std::vector<Scalar>& c() const { return c_; }

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

private:
    Scalar a_;
    Scalar b_;
    std::vector<Scalar> c_;
};

namespace detail {

/// sum of a_ij fx^i fy^j over the terms of w, evaluated by Horner in fx
/// (left factor first, so the noncommutative order is fx^i then fy^j);
/// fy powers are shared across rows.
template <class Mul>
Element<Mul> substitute(const Element<Mul>& fx, const Element<Mul>& fy,
                        const Element<Mul>& w) {
    using E = Element<Mul>;
    if (w.is_zero())
        return E();
    int max_i = 0;
    int max_j = 0;
    for (const auto& [e, c] : w.terms()) {
        max_i = std::max(max_i, e.i);
        max_j = std::max(max_j, e.j);
    }
    std::vector<E> fy_pow(static_cast<size_t>(max_j) + 1);
    fy_pow[0] = E::one();
    for (int j = 1; j <= max_j; ++j)
        fy_pow[j] = fy_pow[j - 1] * fy;
    std::vector<E> rows(static_cast<size_t>(max_i) + 1);
    for (const auto& [e, c] : w.terms())
        rows[e.i] += c * fy_pow[e.j];
    E r = rows[max_i];
    for (int i = max_i - 1; i >= 0; --i)
        r = fx * r + rows[i];
    return r;
}

} // namespace detail

/// Image of w under the algebra endomorphism with the given generator
/// images.
inline WeylElement apply_endo(const GenImages& g, const WeylElement& w) {
    return detail::substitute(g.fx, g.fy, w);
}

/// Exchange involution, an antihomomorphism: alpha(x^i y^j) = x^j y^i.
inline WeylElement apply_alpha(const WeylElement& w) {
    WeylElement r;
    for (const auto& [e, c] : w.terms())
        r += WeylElement::monomial(e.j, e.i, c);
    return r;
}

/// beta(x) = x, beta(y) = -y, extended as an antihomomorphism:
/// beta(x^i y^j) = (-1)^j y^j x^i reordered to normal form.
inline WeylElement apply_beta(const WeylElement& w) {
    WeylElement r;
    for (const auto& [e, c] : w.terms()) {
        const Scalar cc = (e.j % 2 == 0) ? c : Scalar(-c);
        r += WeylElement::monomial(0, e.j, cc) * WeylElement::monomial(e.i, 0);
    }
    return r;
}

inline GenImages phi_images() {
    using E = WeylElement;
    return {make_scalar(1, 2) * (E::x() + E::y()), E::y() - E::x()};
}

inline GenImages phi_inv_images() {
    using E = WeylElement;
    return {E::x() - make_scalar(1, 2) * E::y(),
            E::x() + make_scalar(1, 2) * E::y()};
}

inline WeylElement apply_phi(const WeylElement& w) {
    return apply_endo(phi_images(), w);
}

inline WeylElement apply_phi_inv(const WeylElement& w) {
    return apply_endo(phi_inv_images(), w);
}

inline bool is_endomorphism(const GenImages& g) {
    return commutator(g.fy, g.fx) == WeylElement::one();
}

inline bool is_alpha_equivariant(const GenImages& g) {
    return g.fy == apply_alpha(g.fx) && g.fx == apply_alpha(g.fy);
}

/// Exact residuals behind the two boolean checks; both are zero iff the
/// images define an alpha-endomorphism.
struct Diagnosis {
    WeylElement endo_residual;         // [fy, fx] - 1
    WeylElement equivariance_residual; // alpha(fx) - fy
};

inline Diagnosis diagnose(const GenImages& g) {
    return {commutator(g.fy, g.fx) - WeylElement::one(),
            apply_alpha(g.fx) - g.fy};
}

namespace detail {

/// (a x + b y + s, a y + b x + s) with s = sum_j c_j ((x-y)/u)^(2j) scaled
/// by v; the family uses (u, v) = (1, 1), its inverse (a-b, b-a).
template <class E>
std::pair<E, E> family_images(const Scalar& a, const Scalar& b,
                              const std::vector<Scalar>& c, const Scalar& u,
                              const Scalar& v, bool inverse_signs) {
    const E xy = E::x() - E::y();
    const E xy2 = Scalar(1 / (u * u)) * (xy * xy);
    E s;
    E power = E::one();
    for (size_t j = 0; j < c.size(); ++j) {
        if (j > 0)
            power = power * xy2;
        s += c[j] * power;
    }
    s *= v;
    const Scalar bb = inverse_signs ? Scalar(-b) : b;
    return {a * E::x() + bb * E::y() + s, a * E::y() + bb * E::x() + s};
}

} // namespace detail

/// fx = a x + b y + sum_j c_j (x-y)^(2j), fy the same with x and y swapped
/// in the linear part.
inline GenImages build_family(const FamilyParams& p) {
    auto [fx, fy] = detail::family_images<WeylElement>(p.a(), p.b(), p.c(),
                                                       Scalar(1), Scalar(1),
                                                       false);
    return {std::move(fx), std::move(fy)};
}

/// Closed-form inverse images:
///   f^{-1}(x) = a x - b y + (b-a) sum_j c_j ((x-y)/(a-b))^(2j)
/// and symmetrically for y.
inline GenImages family_inverse(const FamilyParams& p) {
    const Scalar d = p.a() - p.b();
    auto [fx, fy] = detail::family_images<WeylElement>(p.a(), p.b(), p.c(), d,
                                                       Scalar(-d), true);
    return {std::move(fx), std::move(fy)};
}

/// Parameter conversions: a = (-4 lambda^2 - 1)/(4 lambda),
/// b = (4 lambda^2 - 1)/(4 lambda), inverted by lambda = (b - a)/2.
inline std::pair<Scalar, Scalar> lambda_to_ab(const Scalar& lambda) {
    const Scalar four_l = 4 * lambda;
    const Scalar l2_4 = 4 * lambda * lambda;
    return {Scalar((-l2_4 - 1) / four_l), Scalar((l2_4 - 1) / four_l)};
}

inline Scalar ab_to_lambda(const Scalar& a, const Scalar& b) {
    return (b - a) / 2;
}

} // namespace weyl
