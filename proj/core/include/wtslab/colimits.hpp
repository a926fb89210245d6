#pragma once

#include "wtslab/homs.hpp"
#include "wtslab/morphism.hpp"

#include <vector>

namespace wtslab
{

/// Pushout square of a span X <-f- A -g-> Y.
struct pushout_result
{
    system_ptr object;
    morphism span_left; // f: A -> X
    morphism span_right; // g: A -> Y
    morphism leg1; // X -> object
    morphism leg2; // Y -> object
    morphism from_apex; // leg1 f = leg2 g
};

struct coproduct_result
{
    system_ptr object;
    morphism in1;
    morphism in2;
};

/// States and actions are the set-level pushouts, each class represented by
/// its least member (elements of X before elements of Y). Representatives
/// coming from X keep their identifiers; those from Y keep theirs unless the
/// name is taken, in which case primes are appended. Transitions are the
/// patching closure of the images of both sides.
pushout_result pushout( const morphism& f, const morphism& g );

/// Same carriers and naming as pushout(), without the closure step. Not a
/// colimit in general; exists to exercise verify_pushout_universal().
pushout_result pushout_without_closure( const morphism& f, const morphism& g );

/// Disjoint union, computed as the pushout over the empty system.
coproduct_result coproduct( const system_ptr& x, const system_ptr& y );

/// Unique map out of the pushout agreeing with h1 on X and h2 on Y.
/// Throws input_error when (h1, h2) is not a cocone on the span.
morphism induced_map( const pushout_result& p, const morphism& h1, const morphism& h2 );

/// f + g : X + X' -> Y + Y'.
morphism coproduct_map( const morphism& f, const morphism& g );

/// Copairing [h1, h2] : X + Y -> Z.
morphism copair( const coproduct_result& c, const morphism& h1, const morphism& h2 );

/// Checks the universal property against every object of `tests`: the object
/// must be a weak transition system, the square must commute, and each
/// cocone must admit exactly one mediating morphism.
bool verify_pushout_universal( const pushout_result& p, const std::vector<system_ptr>& tests,
                               const search_limits& limits = {} );

/// Default family: every fixture plus X, Y and the pushout object itself.
std::vector<system_ptr> default_test_family( const pushout_result& p );

} // namespace wtslab
