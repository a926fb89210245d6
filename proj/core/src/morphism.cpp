#include "wtslab/morphism.hpp"

#include <algorithm>

namespace wtslab
{

morphism::morphism( system_ptr source, system_ptr target, std::vector<std::size_t> state_map,
                    std::vector<std::size_t> action_map )
    : _source{ std::move( source ) }, _target{ std::move( target ) }, _state_map{ std::move( state_map ) },
      _action_map{ std::move( action_map ) }
{
    if ( !_source || !_target )
        throw input_error( "morphism endpoints must be set" );
    if ( _state_map.size() != _source->state_count() || _action_map.size() != _source->action_count() )
        throw input_error( "morphism maps must be total on the source" );
    for ( auto s : _state_map )
        if ( s >= _target->state_count() )
            throw input_error( "state image out of range" );
    for ( auto a : _action_map )
        if ( a >= _target->action_count() )
            throw input_error( "action image out of range" );
}

transition morphism::apply( const transition& t ) const
{
    transition out{ _state_map.at( t.source ), {}, _state_map.at( t.target ) };
    out.body.reserve( t.body.size() );
    for ( auto u : t.body )
        out.body.push_back( _action_map.at( u ) );
    std::sort( out.body.begin(), out.body.end() );
    return out;
}

bool same_system( const system_ptr& a, const system_ptr& b ) { return a == b || *a == *b; }

bool morphism::operator==( const morphism& other ) const
{
    return _state_map == other._state_map && _action_map == other._action_map &&
           same_system( _source, other._source ) && same_system( _target, other._target );
}

morphism make_morphism( system_ptr source, system_ptr target, const std::map<std::string, std::string>& states,
                        const std::map<std::string, std::string>& actions )
{
    std::vector<std::size_t> sm( source->state_count() );
    std::vector<std::size_t> am( source->action_count() );
    std::vector<bool> seen_s( sm.size() ), seen_a( am.size() );
    for ( const auto& [ from, to ] : states )
    {
        auto i = source->state( from );
        sm[ i ] = target->state( to );
        seen_s[ i ] = true;
    }
    for ( const auto& [ from, to ] : actions )
    {
        auto i = source->action( from );
        am[ i ] = target->action( to );
        seen_a[ i ] = true;
    }
    for ( std::size_t i = 0; i < sm.size(); ++i )
        if ( !seen_s[ i ] )
            throw input_error( "state map is undefined on '" + source->states()[ i ] + "'" );
    for ( std::size_t i = 0; i < am.size(); ++i )
        if ( !seen_a[ i ] )
            throw input_error( "action map is undefined on '" + source->actions()[ i ] + "'" );
    return morphism( std::move( source ), std::move( target ), std::move( sm ), std::move( am ) );
}

validation_report is_morphism( const morphism& f )
{
    validation_report report;
    const auto& x = f.source();
    const auto& y = f.target();
    for ( std::size_t a = 0; a < x.action_count(); ++a )
        if ( x.label( a ) != y.label( f.action( a ) ) )
            report.violations.push_back( { "label",
                                           "action '" + x.actions()[ a ] + "' (" + x.label( a ) + ") is sent to '" +
                                               y.actions()[ f.action( a ) ] + "' (" + y.label( f.action( a ) ) + ")",
                                           std::nullopt,
                                           {} } );
    for ( const auto& t : x.transitions() )
    {
        auto image = f.apply( t );
        if ( !y.contains( image ) )
            report.violations.push_back( { "transition",
                                           "image of " + to_string( x, t ) + " is not a transition",
                                           std::nullopt,
                                           { x.named( t ) } } );
    }
    return report;
}

morphism compose( const morphism& g, const morphism& f )
{
    if ( !same_system( f.target_ptr(), g.source_ptr() ) )
        throw input_error( "cannot compose: endpoints do not match" );
    std::vector<std::size_t> sm( f.source().state_count() );
    std::vector<std::size_t> am( f.source().action_count() );
    for ( std::size_t s = 0; s < sm.size(); ++s )
        sm[ s ] = g.state( f.state( s ) );
    for ( std::size_t a = 0; a < am.size(); ++a )
        am[ a ] = g.action( f.action( a ) );
    return morphism( f.source_ptr(), g.target_ptr(), std::move( sm ), std::move( am ) );
}

morphism identity( const system_ptr& x )
{
    std::vector<std::size_t> sm( x->state_count() );
    std::vector<std::size_t> am( x->action_count() );
    for ( std::size_t i = 0; i < sm.size(); ++i )
        sm[ i ] = i;
    for ( std::size_t i = 0; i < am.size(); ++i )
        am[ i ] = i;
    return morphism( x, x, std::move( sm ), std::move( am ) );
}

bool injective_on_actions( const morphism& f )
{
    std::set<std::size_t> seen( f.action_map().begin(), f.action_map().end() );
    return seen.size() == f.action_map().size();
}

bool injective_on_states( const morphism& f )
{
    std::set<std::size_t> seen( f.state_map().begin(), f.state_map().end() );
    return seen.size() == f.state_map().size();
}

} // namespace wtslab
