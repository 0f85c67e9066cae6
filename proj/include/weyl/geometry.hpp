#pragma once

#include <numeric>
#include <vector>

#include "weyl/element.hpp"
#include "weyl/errors.hpp"

namespace weyl {

/// Weight direction (rho, sigma) with gcd(rho, sigma) = 1 and rho+sigma >= 0.
class Direction {
public:
    Direction(int rho, int sigma) : rho_(rho), sigma_(sigma) {
        if (std::gcd(rho, sigma) != 1)
            throw DomainError("InvalidDirection",
                              "gcd(rho, sigma) must be 1");
        if (rho + sigma < 0)
            throw DomainError("InvalidDirection", "rho + sigma must be >= 0");
    }

    int rho() const { return rho_; }
    int sigma() const { return sigma_; }

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    int rho_;
    int sigma_;
};

struct LatticePoint {
    int i = 0;
    int j = 0;

    friend constexpr auto operator<=>(const LatticePoint&,
                                      const LatticePoint&) = default;
};

inline long weight(const Direction& d, ExpPair e) {
    return static_cast<long>(d.rho()) * e.i +
           static_cast<long>(d.sigma()) * e.j;
}

namespace detail {

template <class Mul>
const TermMap& nonzero_terms(const Element<Mul>& p, const char* op) {
    if (p.is_zero())
        throw DomainError("ZeroElement", op);
    return p.terms();
}

} // namespace detail

/// Symbol map x^i y^j -> X^i Y^j (coefficient-preserving relabeling).
inline PolyElement psi(const WeylElement& a) {
    PolyElement r;
    for (const auto& [e, c] : a.terms())
        r += PolyElement::monomial(e.i, e.j, c);
    return r;
}

inline WeylElement psi_inv(const PolyElement& a) {
    WeylElement r;
    for (const auto& [e, c] : a.terms())
        r += WeylElement::monomial(e.i, e.j, c);
    return r;
}

/// Exponent pairs with nonzero coefficient, in canonical term order.
template <class Mul>
std::vector<LatticePoint> support(const Element<Mul>& p) {
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : detail::nonzero_terms(p, "support"))
        pts.push_back(LatticePoint{e.i, e.j});
    return pts;
}

/// Max of rho*i + sigma*j over the support.
template <class Mul>
long degree(const Direction& d, const Element<Mul>& p) {
    const TermMap& terms = detail::nonzero_terms(p, "degree");
    long best = weight(d, terms.begin()->first);
    for (const auto& [e, c] : terms)
        best = std::max(best, weight(d, e));
    return best;
}

/// Min of rho*i + sigma*j over the support.
template <class Mul>
long lower_degree(const Direction& d, const Element<Mul>& p) {
    const TermMap& terms = detail::nonzero_terms(p, "lower_degree");
    long best = weight(d, terms.begin()->first);
    for (const auto& [e, c] : terms)
        best = std::min(best, weight(d, e));
    return best;
}

/// Sum of the terms attaining the (rho, sigma)-degree.
template <class Mul>
Element<Mul> leading_term(const Direction& d, const Element<Mul>& p) {
    const long deg = degree(d, p);
    Element<Mul> r;
    for (const auto& [e, c] : p.terms())
        if (weight(d, e) == deg)
            r += Element<Mul>::monomial(e.i, e.j, c);
    return r;
}

/// Sum of the terms attaining the minimal (rho, sigma)-value.
template <class Mul>
Element<Mul> lower_leading_term(const Direction& d, const Element<Mul>& p) {
    const long deg = lower_degree(d, p);
    Element<Mul> r;
    for (const auto& [e, c] : p.terms())
        if (weight(d, e) == deg)
            r += Element<Mul>::monomial(e.i, e.j, c);
    return r;
}

/// w(P) = (i0, i0 - v_{1,-1}(P)) with i0 the maximal first exponent on the
/// (1,-1)-leading face.
template <class Mul>
LatticePoint w_point(const Element<Mul>& p) {
    const TermMap& terms = detail::nonzero_terms(p, "w_point");
    const Direction d(1, -1);
    long v = weight(d, terms.begin()->first);
    long i0 = terms.begin()->first.i;
    for (const auto& [e, c] : terms) {
        const long ve = weight(d, e);
        if (ve > v || (ve == v && e.i > i0)) {
            v = ve;
            i0 = e.i;
        }
    }
    return LatticePoint{static_cast<int>(i0), static_cast<int>(i0 - v)};
}

/// w_bar(P) = (i0 - v_{-1,1}(P), i0) with i0 the maximal second exponent on
/// the (-1,1)-leading face.
template <class Mul>
LatticePoint w_bar_point(const Element<Mul>& p) {
    const TermMap& terms = detail::nonzero_terms(p, "w_bar_point");
    const Direction d(-1, 1);
    long v = weight(d, terms.begin()->first);
    long j0 = terms.begin()->first.j;
    for (const auto& [e, c] : terms) {
        const long ve = weight(d, e);
        if (ve > v || (ve == v && e.j > j0)) {
            v = ve;
            j0 = e.j;
        }
    }
    return LatticePoint{static_cast<int>(j0 - v), static_cast<int>(j0)};
}

/// st_{rho,sigma} = w of the (rho, sigma)-leading term; undefined at (1,-1).
template <class Mul>
LatticePoint start_point(const Direction& d, const Element<Mul>& p) {
    if (d == Direction(1, -1))
        throw DomainError("InvalidDirection",
                          "start_point is undefined for (1,-1)");
    return w_point(leading_term(d, p));
}

/// en_{rho,sigma} = w_bar of the (rho, sigma)-leading term; undefined at
/// (-1,1).
template <class Mul>
LatticePoint end_point(const Direction& d, const Element<Mul>& p) {
    if (d == Direction(-1, 1))
        throw DomainError("InvalidDirection",
                          "end_point is undefined for (-1,1)");
    return w_bar_point(leading_term(d, p));
}

/// True iff a = gamma * b for some rational gamma > 0.
inline bool aligned(LatticePoint a, LatticePoint b) {
    if (a == LatticePoint{0, 0} || b == LatticePoint{0, 0})
        throw DomainError("ZeroPoint", "aligned requires nonzero points");
    const long cross = static_cast<long>(a.i) * b.j -
                       static_cast<long>(a.j) * b.i;
    const long dot = static_cast<long>(a.i) * b.i +
                     static_cast<long>(a.j) * b.j;
    return cross == 0 && dot > 0;
}

} // namespace weyl
