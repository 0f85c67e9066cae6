#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <map>
#include <string>
#include <utility>

#include "weyl/scalar.hpp"

namespace weyl {

/// Exponent pair (i, j) of a basis monomial x^i y^j (or X^i Y^j).
struct ExpPair {
    int i = 0;
    int j = 0;

    friend constexpr auto operator<=>(const ExpPair&, const ExpPair&) = default;
    constexpr int total() const { return i + j; }
};

/// Canonical term order: descending total degree, then descending first
/// exponent. Map iteration in this order is the printing order.
struct TermOrder {
    constexpr bool operator()(const ExpPair& a, const ExpPair& b) const {
        if (a.total() != b.total())
            return a.total() > b.total();
        return a.i > b.i;
    }
};

using TermMap = std::map<ExpPair, Scalar, TermOrder>;
using IntTermMap = std::map<ExpPair, Integer, TermOrder>;

namespace detail {

template <class Map>
void add_term(Map& out, ExpPair e, const typename Map::mapped_type& c) {
    auto [it, inserted] = out.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            out.erase(it);
    }
}

/// Least common multiple of the coefficient denominators.
inline Integer denominator_lcm(const TermMap& m) {
    Integer l = 1;
    for (const auto& [e, c] : m)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    return l;
}

/// Coefficients scaled by l (exact): the integer image l * m.
inline IntTermMap scale_to_integers(const TermMap& m, const Integer& l) {
    IntTermMap out;
    for (const auto& [e, c] : m) {
        Integer z;
        mpz_divexact(z.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        mpz_mul(z.get_mpz_t(), z.get_mpz_t(), c.get_num_mpz_t());
        out.emplace_hint(out.end(), e, std::move(z));
    }
    return out;
}

} // namespace detail

/// Normal ordering for the relation yx = xy + 1:
///   y^m x^n = sum_{t=0}^{min(m,n)} t! C(m,t) C(n,t) x^{n-t} y^{m-t}
struct WeylMul {
    template <class Map, class Coef>
    static void accumulate_product(Map& out, ExpPair a, const Coef& ca,
                                   ExpPair b, const Coef& cb) {
        Coef c0 = ca * cb;
        detail::add_term(out, {a.i + b.i, a.j + b.j}, c0);
        const int tmax = std::min(a.j, b.i);
        Integer big = 1;
        Coef tmp;
        for (int t = 1; t <= tmax; ++t) {
            // big = t! C(m,t) C(n,t), updated by (m-t+1)(n-t+1)/t
            big *= a.j - t + 1;
            big *= b.i - t + 1;
            mpz_divexact_ui(big.get_mpz_t(), big.get_mpz_t(),
                            static_cast<unsigned long>(t));
            tmp = c0 * big;
            detail::add_term(out, {a.i + b.i - t, a.j + b.j - t}, tmp);
        }
    }
};

/// Plain commutative bivariate product.
struct PolyMul {
    template <class Map, class Coef>
    static void accumulate_product(Map& out, ExpPair a, const Coef& ca,
                                   ExpPair b, const Coef& cb) {
        detail::add_term(out, {a.i + b.i, a.j + b.j},
                         typename Map::mapped_type(ca * cb));
    }
};

/// Sparse bivariate element over Scalar, in the unique normal form of its
/// product policy. Invariant: no stored coefficient is zero; zero has an
/// empty term map. Pure value semantics throughout.
template <class Mul>
class Element {
public:
    Element() = default;
    explicit Element(const Scalar& c) {
        if (c != 0)
            terms_.emplace(ExpPair{0, 0}, c);
    }
    explicit Element(long c) : Element(Scalar(c)) {}

    static Element monomial(int i, int j, Scalar c = Scalar(1)) {
        assert(i >= 0 && j >= 0);
        Element e;
        if (c != 0)
            e.terms_.emplace(ExpPair{i, j}, std::move(c));
        return e;
    }
    static Element one() { return Element(1); }
    static Element x() { return monomial(1, 0); }
    static Element y() { return monomial(0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of x^i y^j (zero when absent).
    Scalar coeff(int i, int j) const {
        auto it = terms_.find(ExpPair{i, j});
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    /// Max of i+j over the support; -1 for the zero element.
    int total_degree() const {
        return terms_.empty() ? -1 : terms_.begin()->first.total();
    }

    friend bool operator==(const Element& a, const Element& b) {
        return a.terms_ == b.terms_;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [e, c] : o.terms_)
            detail::add_term(terms_, e, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [e, c] : o.terms_)
            detail::add_term(terms_, e, -c);
        return *this;
    }
    Element& operator*=(const Scalar& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator-(const Element& a) {
        Element r = a;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    friend Element operator*(Element a, const Scalar& s) { return a *= s; }

    friend Element operator*(const Element& a, const Element& b) {
        // Accumulate over integer coefficients (one denominator per factor)
        // so the inner loop never canonicalizes rationals.
        const Integer da = detail::denominator_lcm(a.terms_);
        const Integer db = detail::denominator_lcm(b.terms_);
        const IntTermMap za = detail::scale_to_integers(a.terms_, da);
        const IntTermMap zb = detail::scale_to_integers(b.terms_, db);
        IntTermMap acc;
        for (const auto& [ea, ca] : za)
            for (const auto& [eb, cb] : zb)
                Mul::accumulate_product(acc, ea, ca, eb, cb);
        Element out;
        const Integer den = da * db;
        for (const auto& [e, z] : acc) {
            Scalar c(z, den);
            c.canonicalize();
            out.terms_.emplace_hint(out.terms_.end(), e, std::move(c));
        }
        return out;
    }

private:
    TermMap terms_;
};

using WeylElement = Element<WeylMul>;
using PolyElement = Element<PolyMul>;

template <class Mul>
Element<Mul> add(const Element<Mul>& a, const Element<Mul>& b) {
    return a + b;
}

template <class Mul>
Element<Mul> mul(const Element<Mul>& a, const Element<Mul>& b) {
    return a * b;
}

/// a^n by repeated squaring; pow(a, 0) = 1 for every a.
template <class Mul>
Element<Mul> pow(const Element<Mul>& a, unsigned n) {
    Element<Mul> result = Element<Mul>::one();
    Element<Mul> base = a;
    while (n > 0) {
        if (n & 1u)
            result = result * base;
        base = base * base;
        n >>= 1u;
    }
    return result;
}

inline WeylElement commutator(const WeylElement& q, const WeylElement& p) {
    return q * p - p * q;
}

namespace detail {

inline void append_monomial(std::string& out, ExpPair e, char gx, char gy) {
    bool first = true;
    if (e.i > 0) {
        out += gx;
        if (e.i > 1) {
            out += '^';
            out += std::to_string(e.i);
        }
        first = false;
    }
    if (e.j > 0) {
        if (!first)
            out += '*';
        out += gy;
        if (e.j > 1) {
            out += '^';
            out += std::to_string(e.j);
        }
    }
}

template <class Mul>
std::string render_with(const Element<Mul>& e, char gx, char gy) {
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, c] : e.terms()) {
        const bool neg = c < 0;
        Scalar mag = neg ? Scalar(-c) : c;
        std::string body;
        if (exp.i == 0 && exp.j == 0) {
            body = scalar_to_string(mag);
        } else if (mag == 1) {
            append_monomial(body, exp, gx, gy);
        } else {
            body = scalar_to_string(mag);
            body += '*';
            append_monomial(body, exp, gx, gy);
        }
        if (first) {
            if (neg) {
                // "-x^2" does not reparse (negated atoms cannot take an
                // exponent), so spell the coefficient out in that case
                const bool leading_power =
                    mag == 1 && (exp.i >= 2 || (exp.i == 0 && exp.j >= 2));
                out += leading_power ? "-1*" : "-";
            }
            out += body;
            first = false;
        } else {
            out += neg ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

} // namespace detail

/// Canonical text form; parses back to the same element.
inline std::string render(const WeylElement& e) {
    return detail::render_with(e, 'x', 'y');
}
inline std::string render(const PolyElement& e) {
    return detail::render_with(e, 'X', 'Y');
}

} // namespace weyl
