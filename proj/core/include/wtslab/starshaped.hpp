#pragma once

#include "wtslab/comma.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace wtslab
{

struct reachability
{
    std::vector<bool> reachable; // indexed by state
    /// For each reachable state, a shortest chain of transitions from the
    /// point (empty for the point itself).
    std::vector<std::optional<std::vector<transition>>> witness;

    [[nodiscard]] std::vector<std::size_t> states() const;
    [[nodiscard]] bool all() const;
};

/// Breadth-first closure from the point over transitions of any dimension.
reachability reachable_states( const pointed_wts& p );
bool is_star_shaped( const pointed_wts& p );

struct coreflection
{
    pointed_wts object;
    pointed_morphism inclusion;
};

/// Reachable states, all actions, and the transitions with reachable source.
/// Throws input_error if the result fails validation.
coreflection coreflect( const pointed_wts& p );

struct factorization_report
{
    std::size_t maps = 0; // |Hom_pt(Q, P)|
    bool unique = true; // each factors through the coreflection exactly once
};

factorization_report check_coreflection_universal( const pointed_wts& q, const pointed_wts& p,
                                                   const search_limits& limits = {} );

/// One leg of the cone out of D = {iota, alpha}, the system with two states
/// and nothing else. The collapse leg sends both states to iota; a path leg
/// includes D as the two ends of a chain of transitions.
struct cone_leg
{
    morphism map;
    bool collapse = false;
    /// Label multisets of the steps, in order along the chain.
    std::vector<std::vector<std::string>> word;
};

inline constexpr const char* cone_start = "iota";
inline constexpr const char* cone_end = "alpha";

/// The collapse leg plus one path leg for every length 1 ... max_length and
/// every sequence of steps, a step being a label multiset of size
/// 1 ... max_dimension.
std::vector<cone_leg> cone_maps( const std::vector<std::string>& sigma, std::size_t max_length,
                                 std::size_t max_dimension = 1 );

struct cone_report
{
    bool holds = true;
    /// True when the failing state is reachable, so only the bounds on the
    /// cone were too small.
    bool depth_limited = false;
    /// A state such that the map iota -> point, alpha -> state extends along
    /// no leg.
    std::optional<std::size_t> witness;
    std::size_t legs = 0;
};

/// Every pointed map D -> P extends along some leg of
/// cone_maps(sigma, max_length, d) with d = max_dimension or, when absent,
/// the largest transition dimension of P (at least 1).
cone_report cone_injectivity( const pointed_wts& p, const std::vector<std::string>& sigma, std::size_t max_length,
                              std::optional<std::size_t> max_dimension = std::nullopt,
                              const search_limits& limits = {} );

/// is_star_shaped(P) implies is_star_shaped(cyl_pt(P)). Also checks that
/// sigma maps the reachable states of cyl_pt(P) bijectively onto those of P.
bool check_cyl_preserves_star( const pointed_wts& p );

struct random_bounds
{
    std::size_t max_states = 6;
    std::size_t max_actions = 6;
    std::size_t max_body = 4;
    std::size_t extra_transitions = 3;
    std::vector<std::string> sigma{ "l", "m" };
};

/// A random star-shaped system within the bounds: a random spanning tree of
/// transitions from the point, a few extra transitions, then the patching
/// closure.
pointed_wts random_star_shaped( std::mt19937_64& rng, const random_bounds& bounds = {} );

/// All pointed systems over the single label "l" with at most `max_states`
/// states, at most `max_actions` actions and transitions of dimension at
/// most `max_dimension` (at most 2, so no closure is needed), one per
/// isomorphism class. Throws budget_exceeded
/// when a carrier size admits more than 2^24 transition sets.
std::vector<pointed_wts> small_pointed_family( std::size_t max_states, std::size_t max_actions,
                                               std::size_t max_dimension );

} // namespace wtslab
