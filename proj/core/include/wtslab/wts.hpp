#pragma once

#include "wtslab/errors.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wtslab
{

/// An n-transition in index form. The body is kept sorted, so a transition
/// stands for every permutation of its actions at once.
struct transition
{
    std::size_t source = 0;
    std::vector<std::size_t> body;
    std::size_t target = 0;

    [[nodiscard]] std::size_t dimension() const { return body.size(); }

    auto operator<=>( const transition& ) const = default;
    bool operator==( const transition& ) const = default;
};

/// Name-based transition as it appears in interchange documents; the body may
/// be in any order.
struct raw_transition
{
    std::string source;
    std::vector<std::string> body;
    std::string target;

    bool operator==( const raw_transition& ) const = default;
};

/// Unchecked candidate system.
struct raw_system
{
    std::vector<std::string> sigma;
    std::vector<std::string> states;
    std::map<std::string, std::string> actions; // action id -> label
    std::vector<raw_transition> transitions;
};

/// Instantiation of the patching rule that failed: the five premises hold for
/// the ordered body A.B.C (p = |A|, q = |B|) but (nu1, B, nu2) is missing.
struct patching_witness
{
    std::string alpha;
    std::vector<std::string> body;
    std::string beta;
    std::string nu1;
    std::string nu2;
    std::size_t p = 0;
    std::size_t q = 0;
};

struct violation
{
    std::string rule;
    std::string detail;
    std::optional<patching_witness> patching;
    std::vector<raw_transition> transitions;
};

struct validation_report
{
    std::vector<violation> violations;

    [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Finite weak transition system. Identifiers are kept in lexicographic order
/// and all internal indices refer to that order, which makes every traversal
/// of the structure deterministic.
///
/// Referential integrity is enforced on construction. Closure under the
/// patching rule is not: use make_system() or patching_closure() to obtain a
/// genuine object, and validate() to check an arbitrary candidate.
class wts
{
public:
    wts() = default;

    /// Throws input_error on any referential violation.
    static wts from_raw( const raw_system& raw );

    [[nodiscard]] const std::vector<std::string>& states() const { return _states; }
    [[nodiscard]] const std::vector<std::string>& actions() const { return _actions; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return _labels; }
    [[nodiscard]] const std::string& label( std::size_t action ) const { return _labels.at( action ); }
    [[nodiscard]] const std::vector<std::string>& sigma() const { return _sigma; }
    [[nodiscard]] const std::set<transition>& transitions() const { return _transitions; }

    [[nodiscard]] std::size_t state_count() const { return _states.size(); }
    [[nodiscard]] std::size_t action_count() const { return _actions.size(); }

    [[nodiscard]] std::optional<std::size_t> find_state( std::string_view id ) const;
    [[nodiscard]] std::optional<std::size_t> find_action( std::string_view id ) const;
    /// Like find_*, but unknown ids raise input_error.
    [[nodiscard]] std::size_t state( std::string_view id ) const;
    [[nodiscard]] std::size_t action( std::string_view id ) const;

    [[nodiscard]] bool contains( const transition& t ) const { return _transitions.contains( t ); }
    [[nodiscard]] std::size_t max_dimension() const;

    /// Canonical index form of a name-based transition; throws on unknown ids.
    [[nodiscard]] transition canonical( const raw_transition& t ) const;
    [[nodiscard]] raw_transition named( const transition& t ) const;
    [[nodiscard]] raw_system to_raw() const;

    /// Same carriers, different transition set.
    [[nodiscard]] wts with_transitions( std::set<transition> transitions ) const;

    bool operator==( const wts& other ) const;

private:
    std::vector<std::string> _states;
    std::vector<std::string> _actions;
    std::vector<std::string> _labels;
    std::vector<std::string> _sigma;
    std::set<transition> _transitions;
};

using system_ptr = std::shared_ptr<const wts>;

inline system_ptr share( wts x ) { return std::make_shared<const wts>( std::move( x ) ); }

/// Referential integrity plus patching closure of the canonicalized
/// transition set. Never throws on malformed input.
validation_report validate( const raw_system& raw );
validation_report validate( const wts& x );

/// Least superset of the transitions closed under the patching rule.
wts patching_closure( const wts& x );
wts patching_closure( const raw_system& raw );

/// from_raw() followed by validate(); throws input_error when the candidate
/// is not a weak transition system.
wts make_system( const raw_system& raw );

/// Membership test insensitive to the order of `body`. Unknown ids throw.
bool has_transition( const wts& x, std::string_view source, std::span<const std::string> body,
                     std::string_view target );

/// Every instance (premise transition, A, B, C, nu1, nu2) of the patching
/// rule whose four side premises are present in `transitions`; the callback
/// receives the derived transition (nu1, B, nu2) and the witness data.
struct patching_instance
{
    transition whole;
    std::vector<std::size_t> first; // A
    std::vector<std::size_t> middle; // B
    std::vector<std::size_t> last; // C
    std::size_t nu1 = 0;
    std::size_t nu2 = 0;

    [[nodiscard]] transition derived() const { return { nu1, middle, nu2 }; }
};

std::vector<patching_instance> patching_instances( const std::set<transition>& transitions );

std::string to_string( const wts& x, const transition& t );

} // namespace wtslab
