#pragma once

#include <stdexcept>
#include <string>

namespace latval {

/// Failure categories surfaced by the library. Verdict-style results
/// (a check that evaluates to "false") are returned as values, never
/// as errors; these codes cover contract violations and resource caps.
enum class errc {
    duplicate_element,
    unknown_element,
    cycle_detected,
    not_a_permutation,
    not_a_linear_extension,
    invalid_realizer,
    size_limit_exceeded,
    unknown_downset,
    not_an_antichain,
    domain_mismatch,
    empty_input,
    not_bijective,
    not_complete,
    not_a_valuation,
    duplicate_cone_value,
    at_top,
    no_unique_successor,
    arithmetic_overflow,
    parse_error,
};

inline const char* errc_name(errc code) {
    switch (code) {
        case errc::duplicate_element:     return "DuplicateElement";
        case errc::unknown_element:       return "UnknownElement";
        case errc::cycle_detected:        return "CycleDetected";
        case errc::not_a_permutation:     return "NotAPermutation";
        case errc::not_a_linear_extension: return "NotALinearExtension";
        case errc::invalid_realizer:      return "InvalidRealizer";
        case errc::size_limit_exceeded:   return "SizeLimitExceeded";
        case errc::unknown_downset:       return "UnknownDownset";
        case errc::not_an_antichain:      return "NotAnAntichain";
        case errc::domain_mismatch:       return "DomainMismatch";
        case errc::empty_input:           return "EmptyInput";
        case errc::not_bijective:         return "NotBijective";
        case errc::not_complete:          return "NotComplete";
        case errc::not_a_valuation:       return "NotAValuation";
        case errc::duplicate_cone_value:  return "DuplicateConeValue";
        case errc::at_top:                return "AtTop";
        case errc::no_unique_successor:   return "NoUniqueSuccessor";
        case errc::arithmetic_overflow:   return "ArithmeticOverflow";
        case errc::parse_error:           return "ParseError";
    }
    return "UnknownError";
}

/// Exception carrying an errc; what() is "<Name>: <detail>".
class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& detail) {
    throw Error(code, detail);
}

} // namespace latval
