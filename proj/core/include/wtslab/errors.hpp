#pragma once

#include <stdexcept>
#include <string>

namespace wtslab
{

/// Malformed input: unknown identifiers, mismatched endpoints, non-commuting squares.
class input_error : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// An exhaustive search would exceed its configured limits.
class budget_exceeded : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Bounds for exhaustive searches. `max_results` caps the number of
/// morphisms an enumeration may return, `max_steps` caps backtracking nodes.
struct search_limits
{
    std::size_t max_results = 1'000'000;
    std::size_t max_steps = 500'000'000;
};

} // namespace wtslab
