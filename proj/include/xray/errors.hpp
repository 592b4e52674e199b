#pragma once

#include <stdexcept>
#include <string>

namespace xray {

// Every failure mode the library reports deliberately. Parse-time codes
// (parse_error .. space_mismatch) indicate malformed input; the rest are
// domain errors raised on well-formed but invalid requests.
enum class Errc {
    parse_error,
    duplicate_line,
    label_out_of_range,
    degenerate_line,
    space_mismatch,
    not_admissible,
    inconsistent_data,
    no_admissible_types,
    not_a_cycle_length,
    invalid_roots,
    type_too_large,
    zero_has_no_factorization,
    too_many_lines,
    budget_exceeded,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::parse_error: return "ParseError";
        case Errc::duplicate_line: return "DuplicateLine";
        case Errc::label_out_of_range: return "LabelOutOfRange";
        case Errc::degenerate_line: return "DegenerateLine";
        case Errc::space_mismatch: return "SpaceMismatch";
        case Errc::not_admissible: return "NotAdmissible";
        case Errc::inconsistent_data: return "InconsistentData";
        case Errc::no_admissible_types: return "NoAdmissibleTypes";
        case Errc::not_a_cycle_length: return "NotACycleLength";
        case Errc::invalid_roots: return "InvalidRoots";
        case Errc::type_too_large: return "TypeTooLarge";
        case Errc::zero_has_no_factorization: return "ZeroHasNoFactorization";
        case Errc::too_many_lines: return "TooManyLines";
        case Errc::budget_exceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}
    Errc code() const { return code_; }

  private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

// True for codes caused by malformed input text (files, headers, tokens),
// as opposed to well-formed requests that hit a domain error.
inline bool is_parse_errc(Errc c) {
    switch (c) {
        case Errc::parse_error:
        case Errc::duplicate_line:
        case Errc::label_out_of_range:
        case Errc::degenerate_line:
        case Errc::space_mismatch: return true;
        default: return false;
    }
}

}  // namespace xray
