#pragma once

#include "wtslab/morphism.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace wtslab
{

/// Backtracking enumeration of morphisms source -> target subject to
/// per-element candidate restrictions. Candidates are visited in index
/// order, so results come out lexicographically ordered by
/// (action map, state map) in the variable order the search picks; the order
/// only depends on the two systems and the constraints.
class hom_search
{
public:
    hom_search( system_ptr source, system_ptr target );

    /// Restrict the image of a source state (resp. action) to `candidates`.
    /// Repeated restrictions intersect.
    hom_search& restrict_state( std::size_t s, const std::vector<std::size_t>& candidates );
    hom_search& restrict_action( std::size_t a, const std::vector<std::size_t>& candidates );
    hom_search& fix_state( std::size_t s, std::size_t image );
    hom_search& fix_action( std::size_t a, std::size_t image );
    /// Only maps injective on both carriers.
    hom_search& injective( bool on = true );

    /// Calls `visit` for each morphism until it returns false.
    void for_each( const std::function<bool( const morphism& )>& visit, const search_limits& limits = {} ) const;

    /// All morphisms; throws budget_exceeded above limits.max_results.
    [[nodiscard]] std::vector<morphism> all( const search_limits& limits = {} ) const;
    [[nodiscard]] std::optional<morphism> first( const search_limits& limits = {} ) const;
    /// Stops counting at `cap`.
    [[nodiscard]] std::size_t count( std::size_t cap, const search_limits& limits = {} ) const;

private:
    system_ptr _source;
    system_ptr _target;
    std::vector<std::vector<std::size_t>> _state_domain;
    std::vector<std::vector<std::size_t>> _action_domain;
    bool _injective = false;
};

/// Every morphism X -> Y, deduplicated, in a deterministic order.
std::vector<morphism> enum_homs( const system_ptr& x, const system_ptr& y, const search_limits& limits = {} );

/// An isomorphism X -> Y if one exists.
std::optional<morphism> find_isomorphism( const system_ptr& x, const system_ptr& y, const search_limits& limits = {} );

bool is_isomorphism( const morphism& f );

/// Isomorphism of arrows f: A -> B and g: C -> D, i.e. isomorphisms
/// a: A -> C and b: B -> D with b f = g a. Returns (a, b).
std::optional<std::pair<morphism, morphism>> find_arrow_isomorphism( const morphism& f, const morphism& g,
                                                                    const search_limits& limits = {} );

} // namespace wtslab
