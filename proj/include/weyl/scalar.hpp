#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace weyl {

/// Exact rational coefficient field. Values are kept canonical
/// (reduced fraction, positive denominator); zero is 0/1.
using Scalar = mpq_class;
using Integer = mpz_class;

inline Scalar make_scalar(long num, long den = 1) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

/// Parses "p" or "p/q". Returns nullopt on malformed input or q = 0.
inline std::optional<Scalar> scalar_from_string(std::string_view text) {
    if (text.empty())
        return std::nullopt;
    std::string buf(text);
    // mpq_set_str accepts whitespace and bases we do not want; validate shape first
    std::size_t i = 0;
    if (buf[i] == '+' || buf[i] == '-')
        ++i;
    bool digits = false;
    while (i < buf.size() && buf[i] >= '0' && buf[i] <= '9') {
        ++i;
        digits = true;
    }
    if (!digits)
        return std::nullopt;
    if (i != buf.size()) {
        if (buf[i] != '/')
            return std::nullopt;
        ++i;
        bool den_digits = false;
        while (i < buf.size() && buf[i] >= '0' && buf[i] <= '9') {
            ++i;
            den_digits = true;
        }
        if (!den_digits || i != buf.size())
            return std::nullopt;
    }
    Scalar s;
    if (mpq_set_str(s.get_mpq_t(), buf.c_str(), 10) != 0)
        return std::nullopt;
    if (mpq_denref(s.get_mpq_t())->_mp_size == 0)
        return std::nullopt; // q = 0
    s.canonicalize();
    return s;
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string scalar_to_string(const Scalar& s) {
    return s.get_str();
}

inline bool is_integer(const Scalar& s) {
    return s.get_den() == 1;
}

} // namespace weyl
