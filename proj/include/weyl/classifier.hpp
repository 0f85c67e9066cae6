#pragma once

#include <utility>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/errors.hpp"
#include "weyl/morphisms.hpp"

namespace weyl {

/// beta-symmetric / beta-antisymmetric parts of P = phi^{-1}(fx).
/// Invariants (validated by classify_sym_pair): beta(p0) = p0,
/// beta(p1) = -p1, [p0, p1] = 1/2.
struct SymPair {
    WeylElement p0;
    WeylElement p1;
};

/// Canonical parameters of a classified map: nonzero lambda and the even
/// coefficients alpha_j, plus the equivalent (a, b, c) presentation with
///   a = (-4 lambda^2 - 1)/(4 lambda),  b = (4 lambda^2 - 1)/(4 lambda),
///   c = alphas.
class CanonicalForm {
public:
    CanonicalForm(Scalar lambda, std::vector<Scalar> alphas)
        : lambda_(std::move(lambda)), alphas_(std::move(alphas)) {
        if (lambda_ == 0)
            throw DomainError("InvalidParams", "lambda must be nonzero");
        while (!alphas_.empty() && alphas_.back() == 0)
            alphas_.pop_back();
        auto [a, b] = lambda_to_ab(lambda_);
        a_ = std::move(a);
        b_ = std::move(b);
    }

    const Scalar& lambda() const { return lambda_; }
    const std::vector<Scalar>& alphas() const { return alphas_; }
    const Scalar& a() const { return a_; }
    const Scalar& b() const { return b_; }
    const std::vector<Scalar>& c() const { return alphas_; }

    FamilyParams params() const { return FamilyParams(a_, b_, alphas_); }

    friend bool operator==(const CanonicalForm& l, const CanonicalForm& r) {
        return l.lambda_ == r.lambda_ && l.alphas_ == r.alphas_;
    }

private:
    Scalar lambda_;
    std::vector<Scalar> alphas_;
    Scalar a_;
    Scalar b_;
};

/// Splits by parity of the y-exponent; for t in K[y] the parts lie in
/// K[y^2] and y K[y^2] and sum back to t.
inline std::pair<WeylElement, WeylElement> even_odd_split(
    const WeylElement& t) {
    WeylElement even;
    WeylElement odd;
    for (const auto& [e, c] : t.terms())
        (e.j % 2 == 0 ? even : odd) += WeylElement::monomial(e.i, e.j, c);
    return {even, odd};
}

/// Checks the alpha-endomorphism property, then splits P = phi^{-1}(fx)
/// into (P + beta(P))/2 and (P - beta(P))/2. For such maps
/// Q = phi^{-1}(fy) equals p0 - p1 and [p0, p1] = 1/2.
inline SymPair decompose(const GenImages& g) {
    const Diagnosis d = diagnose(g);
    if (!d.endo_residual.is_zero())
        throw DomainError("NotEndomorphism",
                          "[fy,fx] - 1 = " + render(d.endo_residual));
    if (!d.equivariance_residual.is_zero())
        throw DomainError(
            "NotAlphaEquivariant",
            "alpha(fx) - fy = " + render(d.equivariance_residual));
    const WeylElement p = apply_phi_inv(g.fx);
    const WeylElement bp = apply_beta(p);
    const Scalar half = make_scalar(1, 2);
    return {half * (p + bp), half * (p - bp)};
}

/// Extracts lambda from p1 = lambda y and alpha_0..alpha_n from
/// p0 = -x/(2 lambda) + sum_j alpha_j y^(2j). The invariants are validated
/// first (HypothesisViolation); once they hold the canonical shape is
/// guaranteed, so a shape mismatch aborts as an internal error.
inline std::pair<Scalar, std::vector<Scalar>> classify_sym_pair(
    const SymPair& s) {
    if (apply_beta(s.p0) != s.p0)
        throw DomainError("HypothesisViolation",
                          "beta(p0) != p0 for p0 = " + render(s.p0));
    if (apply_beta(s.p1) != -s.p1)
        throw DomainError("HypothesisViolation",
                          "beta(p1) != -p1 for p1 = " + render(s.p1));
    const WeylElement bracket = commutator(s.p0, s.p1);
    if (bracket != WeylElement(make_scalar(1, 2)))
        throw DomainError("HypothesisViolation",
                          "[p0,p1] = " + render(bracket) + ", expected 1/2");

    const TermMap& t1 = s.p1.terms();
    if (t1.size() != 1 || t1.begin()->first != ExpPair{0, 1})
        throw InternalError("NotInCanonicalShape",
                            "p1 = " + render(s.p1) + " is not lambda*y");
    const Scalar lambda = t1.begin()->second;

    const Scalar x_coef = Scalar(-1) / (2 * lambda);
    bool saw_x = false;
    std::vector<Scalar> alphas;
    for (const auto& [e, c] : s.p0.terms()) {
        if (e == ExpPair{1, 0}) {
            if (c != x_coef)
                throw InternalError("NotInCanonicalShape",
                                    "x-coefficient of p0 is not -1/(2*lambda)");
            saw_x = true;
            continue;
        }
        if (e.i != 0 || e.j % 2 != 0)
            throw InternalError("NotInCanonicalShape",
                                "unexpected term in p0 = " + render(s.p0));
        const size_t idx = static_cast<size_t>(e.j) / 2;
        if (alphas.size() <= idx)
            alphas.resize(idx + 1, Scalar(0));
        alphas[idx] = c;
    }
    if (!saw_x)
        throw InternalError("NotInCanonicalShape",
                            "p0 = " + render(s.p0) + " has no x term");
    return {lambda, alphas};
}

/// Full pipeline: decompose, extract (lambda, alphas), convert parameters.
/// build_family(classify(g).params()) rebuilds g exactly.
inline CanonicalForm classify(const GenImages& g) {
    auto [lambda, alphas] = classify_sym_pair(decompose(g));
    return CanonicalForm(std::move(lambda), std::move(alphas));
}

/// Inverse images of a classified map; composition with g in either order
/// fixes both generators.
inline GenImages invert(const GenImages& g) {
    return family_inverse(classify(g).params());
}

} // namespace weyl
