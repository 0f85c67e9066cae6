#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace weyl {

/// Invalid-input failures (CLI exit code 1). case_name is one of:
/// ZeroElement, InvalidDirection, ZeroPoint, InvalidParams,
/// NotEndomorphism, NotAlphaEquivariant, HypothesisViolation,
/// NotAlphaMorphism, JacobianNotOne, BoundExceeded.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? name : name + ": " + detail),
          case_name_(std::move(name)) {}

    const std::string& case_name() const { return case_name_; }

private:
    std::string case_name_;
};

/// Expression-language failures (CLI exit code 2). case_name is one of:
/// SyntaxError, InvalidExponent, WrongGenerator. position is a 0-based
/// byte offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string name, std::size_t position,
               const std::string& detail)
        : std::runtime_error(name + " at position " +
                             std::to_string(position) + ": " + detail),
          case_name_(std::move(name)), position_(position) {}

    const std::string& case_name() const { return case_name_; }
    std::size_t position() const { return position_; }

private:
    std::string case_name_;
    std::size_t position_;
};

/// States the theory rules out (NotInCanonicalShape, NotInFamily).
/// Reaching one means an arithmetic bug, not bad input; these derive from
/// logic_error and are not caught by the CLI.
class InternalError : public std::logic_error {
public:
    InternalError(std::string name, const std::string& detail)
        : std::logic_error(name + ": " + detail), case_name_(std::move(name)) {}

    const std::string& case_name() const { return case_name_; }

private:
    std::string case_name_;
};

} // namespace weyl
