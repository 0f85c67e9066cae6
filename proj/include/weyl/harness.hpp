#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "weyl/classifier.hpp"
#include "weyl/element.hpp"
#include "weyl/errors.hpp"
#include "weyl/expr.hpp"
#include "weyl/geometry.hpp"
#include "weyl/jacobian.hpp"
#include "weyl/morphisms.hpp"

namespace weyl {

/// Independent oracle for the closed-form product: represents elements as
/// words over {x, y} and applies only the single swap yx -> xy + 1 until
/// every word is normal. Exponential in swaps, hence the degree bound.
inline WeylElement rewrite_oracle_mul(const WeylElement& a,
                                      const WeylElement& b,
                                      int bound = 8) {
    if (a.total_degree() > bound || b.total_degree() > bound)
        throw DomainError("BoundExceeded",
                          "rewrite oracle accepts total degree <= " +
                              std::to_string(bound));

    const auto to_word = [](ExpPair e) {
        return std::string(static_cast<size_t>(e.i), 'x') +
               std::string(static_cast<size_t>(e.j), 'y');
    };
    std::map<std::string, Scalar> work;
    const auto add = [](std::map<std::string, Scalar>& m,
                        const std::string& w, const Scalar& c) {
        auto [it, inserted] = m.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                m.erase(it);
        }
    };
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            add(work, to_word(ea) + to_word(eb), Scalar(ca * cb));

    WeylElement result;
    while (!work.empty()) {
        auto it = work.begin();
        const std::string w = it->first;
        const Scalar c = it->second;
        work.erase(it);
        const size_t swap = w.find("yx");
        if (swap == std::string::npos) {
            const size_t i = w.find('y');
            const int xs = static_cast<int>(i == std::string::npos ? w.size()
                                                                   : i);
            const int ys = static_cast<int>(w.size()) - xs;
            result += WeylElement::monomial(xs, ys, c);
            continue;
        }
        std::string swapped = w;
        swapped[swap] = 'x';
        swapped[swap + 1] = 'y';
        add(work, swapped, c);
        add(work, w.substr(0, swap) + w.substr(swap + 2), c);
    }
    return result;
}

inline Scalar random_scalar(std::mt19937_64& rng, long max_num = 9,
                            long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    const long p = num(rng);
    const long q = den(rng);
    return make_scalar(p, q);
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, long max_num = 9,
                                    long max_den = 4) {
    for (;;) {
        Scalar s = random_scalar(rng, max_num, max_den);
        if (s != 0)
            return s;
    }
}

/// Random sparse element: up to max_terms monomials, exponents <= max_exp,
/// coefficients p/q with |p| <= 9, q <= 4. May come out zero through
/// cancellation.
template <class Mul>
Element<Mul> random_element(std::mt19937_64& rng, int max_terms = 8,
                            int max_exp = 5) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    Element<Mul> e;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k) {
        const int i = exp(rng);
        const int j = exp(rng);
        e += Element<Mul>::monomial(i, j, random_nonzero_scalar(rng));
    }
    return e;
}

template <class Mul>
Element<Mul> random_nonzero_element(std::mt19937_64& rng, int max_terms = 8,
                                    int max_exp = 5) {
    for (;;) {
        Element<Mul> e = random_element<Mul>(rng, max_terms, max_exp);
        if (!e.is_zero())
            return e;
    }
}

/// a = (t^2+1)/(2t), b = (t^2-1)/(2t): a^2 - b^2 = 1 holds identically, so
/// every nonzero t yields valid parameters (t = 1 gives the identity).
inline FamilyParams family_params_from_t(const Scalar& t,
                                         std::vector<Scalar> c = {}) {
    const Scalar a = (t * t + 1) / (2 * t);
    const Scalar b = (t * t - 1) / (2 * t);
    return FamilyParams(a, b, std::move(c));
}

/// Valid family parameters from a random nonzero t (numerator and
/// denominator bounded by coeff_bound and 9). c has up to max_n + 1
/// entries with coefficients bounded as in random_scalar.
inline FamilyParams random_family_params(std::mt19937_64& rng, int max_n = 4,
                                         long coeff_bound = 9) {
    const Scalar t = random_nonzero_scalar(rng, coeff_bound, 9);
    std::uniform_int_distribution<int> len(0, max_n + 1);
    std::vector<Scalar> c(static_cast<size_t>(len(rng)));
    for (Scalar& cj : c)
        cj = random_scalar(rng, coeff_bound, 4);
    return family_params_from_t(t, std::move(c));
}

inline FamilyParams random_family_params(unsigned long seed, int max_n = 4,
                                         long coeff_bound = 9) {
    std::mt19937_64 rng(seed);
    return random_family_params(rng, max_n, coeff_bound);
}

inline bool composes_to_identity(const GenImages& f, const GenImages& g) {
    return apply_endo(f, g.fx) == WeylElement::x() &&
           apply_endo(f, g.fy) == WeylElement::y() &&
           apply_endo(g, f.fx) == WeylElement::x() &&
           apply_endo(g, f.fy) == WeylElement::y();
}

struct ProbeReport {
    unsigned long total = 0;
    unsigned long accepted = 0;
    unsigned long mismatches = 0;
    std::vector<std::string> problems;
};

/// Enumerates every degree-1 candidate f(x) = a x + b y + e with entries
/// from the grid and f(y) = alpha(f(x)). Accepted maps must be exactly
/// those with a^2 - b^2 = 1, and each must classify, rebuild and invert
/// exactly.
inline ProbeReport exhaustive_degree1_probe(const std::vector<Scalar>& grid) {
    using E = WeylElement;
    ProbeReport report;
    const auto note = [&report](const std::string& msg) {
        ++report.mismatches;
        if (report.problems.size() < 10)
            report.problems.push_back(msg);
    };
    for (const Scalar& a : grid)
        for (const Scalar& b : grid)
            for (const Scalar& e : grid) {
                ++report.total;
                const E fx = a * E::x() + b * E::y() + E(e);
                const GenImages g{fx, apply_alpha(fx)};
                const bool predicted = a * a - b * b == 1;
                const bool actual =
                    is_endomorphism(g) && is_alpha_equivariant(g);
                const std::string tag = "(a,b,e) = (" + scalar_to_string(a) +
                                        "," + scalar_to_string(b) + "," +
                                        scalar_to_string(e) + ")";
                if (predicted != actual) {
                    note(tag + ": acceptance disagrees with a^2 - b^2 = 1");
                    continue;
                }
                if (!actual)
                    continue;
                ++report.accepted;
                try {
                    const CanonicalForm cf = classify(g);
                    if (build_family(cf.params()) != g) {
                        note(tag + ": rebuild differs");
                        continue;
                    }
                    if (!composes_to_identity(g, invert(g)))
                        note(tag + ": inverse does not compose to identity");
                } catch (const std::exception& ex) {
                    note(tag + ": " + ex.what());
                }
            }
    return report;
}

struct VerifyFailure {
    std::string campaign;
    unsigned long trial = 0;
    std::string detail;
};

struct VerifyReport {
    unsigned long trials = 0;
    unsigned long seed = 0;
    std::vector<VerifyFailure> failures;
};

namespace detail {

/// splitmix64 step; decorrelates per-trial seeds so trials stay
/// independent and order-free.
inline unsigned long long mix_seed(unsigned long long a,
                                   unsigned long long b,
                                   unsigned long long c) {
    unsigned long long z = a + 0x9e3779b97f4a7c15ull * (b + 1) +
                           0xbf58476d1ce4e5b9ull * (c + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

using CampaignFn = std::optional<std::string> (*)(std::mt19937_64&);

inline std::optional<std::string> campaign_mul_oracle(std::mt19937_64& rng) {
    const WeylElement a = random_element<WeylMul>(rng, 4, 3);
    const WeylElement b = random_element<WeylMul>(rng, 4, 3);
    if (a * b != rewrite_oracle_mul(a, b))
        return "mul disagrees with rewrite oracle on (" + render(a) + ") * (" +
               render(b) + ")";
    return std::nullopt;
}

inline std::optional<std::string> campaign_involutions(std::mt19937_64& rng) {
    const WeylElement w1 = random_element<WeylMul>(rng, 5, 4);
    const WeylElement w2 = random_element<WeylMul>(rng, 5, 4);
    if (apply_alpha(apply_alpha(w1)) != w1)
        return "alpha^2 != id on " + render(w1);
    if (apply_beta(apply_beta(w1)) != w1)
        return "beta^2 != id on " + render(w1);
    if (apply_alpha(w1 * w2) != apply_alpha(w2) * apply_alpha(w1))
        return "alpha does not reverse products";
    if (apply_beta(w1 * w2) != apply_beta(w2) * apply_beta(w1))
        return "beta does not reverse products";
    if (apply_beta(w1) != apply_phi_inv(apply_alpha(apply_phi(w1))))
        return "beta != phi^-1 o alpha o phi on " + render(w1);
    if (apply_phi(apply_phi_inv(w1)) != w1 ||
        apply_phi_inv(apply_phi(w1)) != w1)
        return "phi and phi^-1 are not inverse on " + render(w1);
    return std::nullopt;
}

inline std::optional<std::string> campaign_family_roundtrip(
    std::mt19937_64& rng) {
    const FamilyParams p = random_family_params(rng);
    const GenImages g = build_family(p);
    if (!is_endomorphism(g))
        return "family images fail [fy,fx] = 1";
    if (!is_alpha_equivariant(g))
        return "family images fail alpha-equivariance";
    const CanonicalForm cf = classify(g);
    if (FamilyParams(cf.a(), cf.b(), cf.c()) != p)
        return "classify(build_family(p)) != p";
    if (build_family(cf.params()) != g)
        return "build_family(classify(g)) != g";
    return std::nullopt;
}

inline std::optional<std::string> campaign_family_inverse(
    std::mt19937_64& rng) {
    const FamilyParams p = random_family_params(rng, 2);
    if (!composes_to_identity(build_family(p), family_inverse(p)))
        return "family_inverse is not a two-sided inverse";
    return std::nullopt;
}

inline std::optional<std::string> campaign_jac_roundtrip(
    std::mt19937_64& rng) {
    const JacFamilyParams p = random_family_params(rng);
    const auto [fX, fY] = jc2_build_family(p);
    if (jac_bracket(fX, fY) != PolyElement::one())
        return "family Jacobian != 1";
    if (!is_alpha_morphism(fX, fY))
        return "family images fail the alpha-morphism check";
    if (jc2_classify(fX, fY) != p)
        return "jc2_classify does not recover the parameters";
    const auto [gX, gY] = jc2_invert(fX, fY);
    if (apply_poly_map(fX, fY, gX) != PolyElement::x() ||
        apply_poly_map(fX, fY, gY) != PolyElement::y() ||
        apply_poly_map(gX, gY, fX) != PolyElement::x() ||
        apply_poly_map(gX, gY, fY) != PolyElement::y())
        return "jc2_invert is not a two-sided inverse";
    const auto [cp, cq] = jc2_conjugate(fX, fY);
    const Scalar lambda = p.a() - p.b();
    PolyElement expected_p = (p.a() + p.b()) * PolyElement::x();
    for (size_t j = 0; j < p.c().size(); ++j)
        expected_p += PolyElement::monomial(0, 2 * static_cast<int>(j),
                                            p.c()[j]);
    if (cq != lambda * PolyElement::y() || cp != expected_p)
        return "conjugate images differ from (a+b)X + g(Y), (a-b)Y";
    return std::nullopt;
}

inline std::optional<std::string> campaign_parse_render(
    std::mt19937_64& rng) {
    const WeylElement w = random_element<WeylMul>(rng);
    if (parse_weyl(render(w)) != w)
        return "parse(render(.)) != id for " + render(w);
    const PolyElement p = random_element<PolyMul>(rng);
    if (parse_poly(render(p)) != p)
        return "parse(render(.)) != id for " + render(p);
    return std::nullopt;
}

inline std::optional<std::string> campaign_geometry(std::mt19937_64& rng) {
    const PolyElement p = random_nonzero_element<PolyMul>(rng, 5, 4);
    const PolyElement q = random_nonzero_element<PolyMul>(rng, 5, 4);
    const WeylElement wp = random_nonzero_element<WeylMul>(rng, 5, 4);
    const WeylElement wq = random_nonzero_element<WeylMul>(rng, 5, 4);
    for (const Direction& d :
         {Direction(1, 0), Direction(0, 1), Direction(1, 1)}) {
        if (degree(d, p * q) != degree(d, p) + degree(d, q))
            return "polynomial degree is not additive";
        if (degree(d, wp * wq) > degree(d, wp) + degree(d, wq))
            return "Weyl degree exceeds the sum of degrees";
        if (leading_term(d, leading_term(d, p)) != leading_term(d, p))
            return "leading_term is not idempotent";
        if (lower_leading_term(d, lower_leading_term(d, p)) !=
            lower_leading_term(d, p))
            return "lower_leading_term is not idempotent";
        if (lower_degree(d, p) > degree(d, p))
            return "lower_degree exceeds degree";
    }
    const Direction d10(1, 0);
    const WeylElement cbr = commutator(wq, wp);
    if (!cbr.is_zero() &&
        degree(d10, cbr) > degree(d10, wq) + degree(d10, wp) - 1)
        return "commutator violates the (1,0)-degree drop";
    const Direction d01(0, 1);
    const PolyElement jbr = jac_bracket(p, q);
    if (!jbr.is_zero() &&
        lower_degree(d01, jbr) <
            lower_degree(d01, p) + lower_degree(d01, q) - 1)
        return "Jacobian bracket violates the (0,1)-lower-order bound";
    return std::nullopt;
}

struct Campaign {
    const char* name;
    CampaignFn fn;
};

inline const std::vector<Campaign>& all_campaigns() {
    static const std::vector<Campaign> campaigns = {
        {"mul-oracle", &campaign_mul_oracle},
        {"involutions", &campaign_involutions},
        {"family-roundtrip", &campaign_family_roundtrip},
        {"family-inverse", &campaign_family_inverse},
        {"jac-roundtrip", &campaign_jac_roundtrip},
        {"parse-render", &campaign_parse_render},
        {"geometry", &campaign_geometry},
    };
    return campaigns;
}

} // namespace detail

/// Runs every campaign `trials` times. Each trial draws from its own
/// seed mixed from (seed, campaign, trial), so results do not depend on
/// execution order.
inline VerifyReport run_verify(unsigned long trials, unsigned long seed) {
    VerifyReport report;
    report.trials = trials;
    report.seed = seed;
    const auto& campaigns = detail::all_campaigns();
    for (size_t ci = 0; ci < campaigns.size(); ++ci) {
        for (unsigned long t = 0; t < trials; ++t) {
            std::mt19937_64 rng(detail::mix_seed(seed, ci, t));
            std::optional<std::string> failure;
            try {
                failure = campaigns[ci].fn(rng);
            } catch (const std::exception& ex) {
                failure = std::string("exception: ") + ex.what();
            }
            if (failure)
                report.failures.push_back(
                    VerifyFailure{campaigns[ci].name, t, *failure});
        }
    }
    return report;
}

} // namespace weyl
