#pragma once

#include <random>
#include <string>
#include <utility>

#include "weyl/weyl.hpp"

namespace wt {

using namespace weyl;

inline WeylElement W(const std::string& s) { return parse_weyl(s); }
inline PolyElement P(const std::string& s) { return parse_poly(s); }
inline Scalar Q(const std::string& s) { return *scalar_from_string(s); }

template <class Fn>
std::string domain_case(Fn&& fn) {
    try {
        std::forward<Fn>(fn)();
    } catch (const DomainError& e) {
        return e.case_name();
    }
    return "(no DomainError)";
}

} // namespace wt
