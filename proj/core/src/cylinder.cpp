#include "wtslab/cylinder.hpp"

#include <algorithm>
#include <cstdint>

namespace wtslab
{

std::string decorated_action( const std::string& u, int eps ) { return "(" + u + "," + std::to_string( eps ) + ")"; }

std::string paired_action( const std::string& u, const std::string& v ) { return "(" + u + "," + v + ")"; }

namespace
{

// Index of (u, eps) in Cyl X for every action u of X.
std::vector<std::size_t> decoration_index( const wts& x, const wts& cylinder, int eps )
{
    std::vector<std::size_t> out( x.action_count() );
    for ( std::size_t u = 0; u < x.action_count(); ++u )
        out[ u ] = cylinder.action( decorated_action( x.actions()[ u ], eps ) );
    return out;
}

system_ptr cyl_object( const wts& x )
{
    raw_system raw;
    raw.sigma = x.sigma();
    raw.states = x.states();
    for ( std::size_t u = 0; u < x.action_count(); ++u )
        for ( int eps : { 0, 1 } )
            raw.actions.emplace( decorated_action( x.actions()[ u ], eps ), x.label( u ) );
    for ( const auto& t : x.transitions() )
    {
        const auto n = t.dimension();
        for ( std::size_t mask = 0; mask < ( std::size_t{ 1 } << n ); ++mask )
        {
            raw_transition r{ x.states()[ t.source ], {}, x.states()[ t.target ] };
            for ( std::size_t i = 0; i < n; ++i )
                r.body.push_back( decorated_action( x.actions()[ t.body[ i ] ], ( mask >> i ) & 1 ) );
            raw.transitions.push_back( std::move( r ) );
        }
    }
    return share( wts::from_raw( raw ) );
}

std::vector<std::size_t> identity_states( const wts& x )
{
    std::vector<std::size_t> out( x.state_count() );
    for ( std::size_t s = 0; s < out.size(); ++s )
        out[ s ] = s;
    return out;
}

} // namespace

cylinder_pack cyl( const system_ptr& x )
{
    auto c = cyl_object( *x );
    auto gamma0 = morphism( x, c, identity_states( *x ), decoration_index( *x, *c, 0 ) );
    auto gamma1 = morphism( x, c, identity_states( *x ), decoration_index( *x, *c, 1 ) );

    std::vector<std::size_t> back( c->action_count() );
    for ( int eps : { 0, 1 } )
    {
        auto idx = decoration_index( *x, *c, eps );
        for ( std::size_t u = 0; u < idx.size(); ++u )
            back[ idx[ u ] ] = u;
    }
    auto sigma = morphism( c, x, identity_states( *x ), std::move( back ) );

    auto doubled = coproduct( x, x );
    auto gamma = copair( doubled, gamma0, gamma1 );
    return { c, std::move( gamma0 ), std::move( gamma1 ), std::move( doubled ), std::move( gamma ),
             std::move( sigma ) };
}

morphism cyl_map( const morphism& f )
{
    auto from = cyl_object( f.source() );
    auto to = cyl_object( f.target() );
    std::vector<std::size_t> am( from->action_count() );
    for ( int eps : { 0, 1 } )
    {
        auto src = decoration_index( f.source(), *from, eps );
        auto dst = decoration_index( f.target(), *to, eps );
        for ( std::size_t u = 0; u < src.size(); ++u )
            am[ src[ u ] ] = dst[ f.action( u ) ];
    }
    return morphism( from, to, f.state_map(), std::move( am ) );
}

namespace
{

struct pair_table
{
    system_ptr object;
    // index[u][v] of the pair (u,v), or SIZE_MAX when labels differ
    std::vector<std::vector<std::size_t>> index;
};

pair_table cocyl_object( const wts& y )
{
    const auto n = y.action_count();
    raw_system raw;
    raw.sigma = y.sigma();
    raw.states = y.states();
    for ( std::size_t u = 0; u < n; ++u )
        for ( std::size_t v = 0; v < n; ++v )
            if ( y.label( u ) == y.label( v ) )
                raw.actions.emplace( paired_action( y.actions()[ u ], y.actions()[ v ] ), y.label( u ) );

    std::vector<std::vector<std::size_t>> partners( n );
    for ( std::size_t u = 0; u < n; ++u )
        for ( std::size_t v = 0; v < n; ++v )
            if ( y.label( u ) == y.label( v ) )
                partners[ u ].push_back( v );

    // Every transition of Cocyl Y projects to a transition of Y along the
    // all-zero choice, so it suffices to decorate the transitions of Y with
    // partners and keep those whose every mixed choice is a transition.
    std::set<std::pair<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>>> found;
    for ( const auto& t : y.transitions() )
    {
        const auto dim = t.dimension();
        std::vector<std::size_t> choice( dim, 0 );
        while ( true )
        {
            std::vector<std::pair<std::size_t, std::size_t>> body( dim );
            for ( std::size_t i = 0; i < dim; ++i )
                body[ i ] = { t.body[ i ], partners[ t.body[ i ] ][ choice[ i ] ] };
            bool all = true;
            transition probe{ t.source, {}, t.target };
            for ( std::size_t mask = 1; all && mask < ( std::size_t{ 1 } << dim ); ++mask )
            {
                probe.body.clear();
                for ( std::size_t i = 0; i < dim; ++i )
                    probe.body.push_back( ( mask >> i ) & 1 ? body[ i ].second : body[ i ].first );
                std::sort( probe.body.begin(), probe.body.end() );
                all = y.contains( probe );
            }
            if ( all )
            {
                std::sort( body.begin(), body.end() );
                found.insert( { { t.source, t.target }, std::move( body ) } );
            }

            std::size_t k = 0;
            while ( k < dim && choice[ k ] + 1 == partners[ t.body[ k ] ].size() )
                choice[ k++ ] = 0;
            if ( k == dim )
                break;
            ++choice[ k ];
        }
    }
    for ( const auto& [ ends, body ] : found )
    {
        raw_transition r{ y.states()[ ends.first ], {}, y.states()[ ends.second ] };
        for ( auto [ u, v ] : body )
            r.body.push_back( paired_action( y.actions()[ u ], y.actions()[ v ] ) );
        raw.transitions.push_back( std::move( r ) );
    }

    pair_table out{ share( wts::from_raw( raw ) ), std::vector<std::vector<std::size_t>>( n, std::vector<std::size_t>( n, SIZE_MAX ) ) };
    for ( std::size_t u = 0; u < n; ++u )
        for ( auto v : partners[ u ] )
            out.index[ u ][ v ] = out.object->action( paired_action( y.actions()[ u ], y.actions()[ v ] ) );
    return out;
}

} // namespace

path_pack cocyl( const system_ptr& y )
{
    auto table = cocyl_object( *y );
    std::vector<std::size_t> p0( table.object->action_count() ), p1( table.object->action_count() );
    for ( std::size_t u = 0; u < table.index.size(); ++u )
        for ( std::size_t v = 0; v < table.index.size(); ++v )
            if ( table.index[ u ][ v ] != SIZE_MAX )
            {
                p0[ table.index[ u ][ v ] ] = u;
                p1[ table.index[ u ][ v ] ] = v;
            }
    auto states = identity_states( *y );
    return { table.object, morphism( table.object, y, states, std::move( p0 ) ),
             morphism( table.object, y, states, std::move( p1 ) ) };
}

morphism cocyl_map( const morphism& h )
{
    auto from = cocyl_object( h.source() );
    auto to = cocyl_object( h.target() );
    std::vector<std::size_t> am( from.object->action_count() );
    for ( std::size_t u = 0; u < from.index.size(); ++u )
        for ( std::size_t v = 0; v < from.index.size(); ++v )
            if ( from.index[ u ][ v ] != SIZE_MAX )
                am[ from.index[ u ][ v ] ] = to.index[ h.action( u ) ][ h.action( v ) ];
    return morphism( from.object, to.object, h.state_map(), std::move( am ) );
}

morphism transpose( const system_ptr& x, const morphism& f )
{
    auto c = cyl_object( *x );
    if ( !same_system( c, f.source_ptr() ) )
        throw input_error( "transpose: the source of the map is not Cyl of the given system" );
    auto table = cocyl_object( f.target() );
    auto d0 = decoration_index( *x, *c, 0 );
    auto d1 = decoration_index( *x, *c, 1 );
    std::vector<std::size_t> am( x->action_count() );
    for ( std::size_t u = 0; u < am.size(); ++u )
    {
        auto k = table.index[ f.action( d0[ u ] ) ][ f.action( d1[ u ] ) ];
        if ( k == SIZE_MAX )
            throw input_error( "transpose: the map does not preserve labels" );
        am[ u ] = k;
    }
    return morphism( x, table.object, f.state_map(), std::move( am ) );
}

morphism untranspose( const system_ptr& y, const morphism& g )
{
    auto path = cocyl( y );
    if ( !same_system( path.path_object, g.target_ptr() ) )
        throw input_error( "untranspose: the target of the map is not Cocyl of the given system" );
    auto c = cyl_object( g.source() );
    std::vector<std::size_t> am( c->action_count() );
    for ( int eps : { 0, 1 } )
    {
        auto idx = decoration_index( g.source(), *c, eps );
        const auto& pi = eps == 0 ? path.pi0 : path.pi1;
        for ( std::size_t u = 0; u < idx.size(); ++u )
            am[ idx[ u ] ] = pi.action( g.action( u ) );
    }
    return morphism( c, y, g.state_map(), std::move( am ) );
}

bool check_good( const system_ptr& x ) { return injective_on_actions( cyl( x ).gamma ); }

} // namespace wtslab
