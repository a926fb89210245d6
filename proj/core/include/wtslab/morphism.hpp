#pragma once

#include "wtslab/wts.hpp"

#include <map>
#include <string>
#include <vector>

namespace wtslab
{

/// Candidate map of weak transition systems: a state map and an action map,
/// both total. Construction only checks totality and ranges; use
/// is_morphism() for label and transition preservation.
class morphism
{
public:
    morphism( system_ptr source, system_ptr target, std::vector<std::size_t> state_map,
              std::vector<std::size_t> action_map );

    [[nodiscard]] const wts& source() const { return *_source; }
    [[nodiscard]] const wts& target() const { return *_target; }
    [[nodiscard]] const system_ptr& source_ptr() const { return _source; }
    [[nodiscard]] const system_ptr& target_ptr() const { return _target; }

    [[nodiscard]] const std::vector<std::size_t>& state_map() const { return _state_map; }
    [[nodiscard]] const std::vector<std::size_t>& action_map() const { return _action_map; }
    [[nodiscard]] std::size_t state( std::size_t s ) const { return _state_map.at( s ); }
    [[nodiscard]] std::size_t action( std::size_t a ) const { return _action_map.at( a ); }

    /// Canonical image of a source transition.
    [[nodiscard]] transition apply( const transition& t ) const;

    bool operator==( const morphism& other ) const;

private:
    system_ptr _source;
    system_ptr _target;
    std::vector<std::size_t> _state_map;
    std::vector<std::size_t> _action_map;
};

/// Name-based constructor; unknown ids and partial maps raise input_error.
morphism make_morphism( system_ptr source, system_ptr target, const std::map<std::string, std::string>& states,
                        const std::map<std::string, std::string>& actions );

/// Label preservation ("label" violations) and transition preservation
/// ("transition" violations, each carrying the offending source transition).
validation_report is_morphism( const morphism& f );

/// g after f. Throws input_error when target(f) != source(g).
morphism compose( const morphism& g, const morphism& f );
morphism identity( const system_ptr& x );

bool same_system( const system_ptr& a, const system_ptr& b );

bool injective_on_actions( const morphism& f );
bool injective_on_states( const morphism& f );

} // namespace wtslab
