#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectree {

// Invalid family/operation parameters (e.g. p > q for T4).
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input exceeds a configured size limit.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// An operation required an edge that is not present.
struct missing_edge_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A stated hypothesis of a lemma-style check does not hold for the input.
struct hypothesis_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Exact data admits no consistent solution (e.g. no nonnegative integral
// degree census exists for the given moments).
struct inconsistency_error : std::domain_error {
    using std::domain_error::domain_error;
};

// The structural hypothesis behind a constructed family failed validation.
struct structural_hypothesis_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct parse_error : std::runtime_error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

} // namespace spectree
