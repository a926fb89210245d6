#pragma once

// Brute-force reference implementations. They work on names and plain
// containers and share no algorithm with the library: no backtracking, no
// indexing, no union-find. Only suitable for tiny systems.

#include "wtslab/morphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle
{

using named = std::tuple<std::string, std::vector<std::string>, std::string>;

inline std::set<named> transitions_of( const wtslab::raw_system& raw )
{
    std::set<named> out;
    for ( const auto& t : raw.transitions )
    {
        auto body = t.body;
        std::sort( body.begin(), body.end() );
        out.insert( { t.source, body, t.target } );
    }
    return out;
}

inline std::set<named> transitions_of( const wtslab::wts& x ) { return transitions_of( x.to_raw() ); }

/// Patching closure by iterating, until nothing changes, over every
/// transition of dimension >= 3 and every assignment of its body positions
/// to the three parts A, B, C.
inline std::set<named> naive_closure( std::set<named> ts )
{
    bool changed = true;
    while ( changed )
    {
        changed = false;
        std::vector<named> fresh;
        std::set<std::string> states;
        for ( const auto& [ a, m, b ] : ts )
        {
            states.insert( a );
            states.insert( b );
        }
        for ( const auto& [ alpha, body, beta ] : ts )
        {
            const auto n = body.size();
            if ( n < 3 )
                continue;
            std::size_t total = 1;
            for ( std::size_t i = 0; i < n; ++i )
                total *= 3;
            for ( std::size_t code = 0; code < total; ++code )
            {
                std::vector<std::string> part[ 3 ];
                auto c = code;
                for ( std::size_t i = 0; i < n; ++i, c /= 3 )
                    part[ c % 3 ].push_back( body[ i ] );
                if ( part[ 0 ].empty() || part[ 1 ].empty() || part[ 2 ].empty() )
                    continue;
                auto join = []( std::vector<std::string> x, const std::vector<std::string>& y ) {
                    x.insert( x.end(), y.begin(), y.end() );
                    std::sort( x.begin(), x.end() );
                    return x;
                };
                auto A = join( part[ 0 ], {} ), B = join( part[ 1 ], {} ), C = join( part[ 2 ], {} );
                auto BC = join( B, C ), AB = join( A, B );
                for ( const auto& nu1 : states )
                    for ( const auto& nu2 : states )
                        if ( ts.contains( { alpha, A, nu1 } ) && ts.contains( { nu1, BC, beta } ) &&
                             ts.contains( { alpha, AB, nu2 } ) && ts.contains( { nu2, C, beta } ) &&
                             !ts.contains( { nu1, B, nu2 } ) )
                            fresh.push_back( { nu1, B, nu2 } );
            }
        }
        for ( auto& t : fresh )
            changed = ts.insert( std::move( t ) ).second || changed;
    }
    return ts;
}

/// Every total pair of maps (states, actions) preserving labels and
/// transitions, found by trying all of them. `visit` gets the maps by name.
inline void brute_homs( const wtslab::wts& x, const wtslab::wts& y,
                        const std::function<void( const std::map<std::string, std::string>&,
                                                  const std::map<std::string, std::string>& )>& visit )
{
    const auto xs = x.states(), xa = x.actions(), ys = y.states(), ya = y.actions();
    if ( ( ys.empty() && !xs.empty() ) || ( ya.empty() && !xa.empty() ) )
        return;
    const auto target = transitions_of( y );
    const auto source = transitions_of( x );
    std::vector<std::size_t> sm( xs.size(), 0 ), am( xa.size(), 0 );
    auto bump = []( std::vector<std::size_t>& v, std::size_t base ) {
        for ( auto& d : v )
        {
            if ( ++d < base )
                return true;
            d = 0;
        }
        return false;
    };
    do
    {
        bool labels = true;
        for ( std::size_t i = 0; i < xa.size() && labels; ++i )
            labels = x.label( i ) == y.label( am[ i ] );
        if ( !labels )
            continue;
        std::map<std::string, std::string> states, actions;
        for ( std::size_t i = 0; i < xa.size(); ++i )
            actions[ xa[ i ] ] = ya[ am[ i ] ];
        do
        {
            for ( std::size_t i = 0; i < xs.size(); ++i )
                states[ xs[ i ] ] = ys[ sm[ i ] ];
            bool ok = true;
            for ( const auto& [ a, body, b ] : source )
            {
                std::vector<std::string> image;
                for ( const auto& u : body )
                    image.push_back( actions[ u ] );
                std::sort( image.begin(), image.end() );
                if ( !target.contains( { states[ a ], image, states[ b ] } ) )
                {
                    ok = false;
                    break;
                }
            }
            if ( ok )
                visit( states, actions );
        } while ( bump( sm, ys.size() ) );
    } while ( bump( am, ya.size() ) );
}

inline std::size_t brute_hom_count( const wtslab::wts& x, const wtslab::wts& y )
{
    std::size_t n = 0;
    brute_homs( x, y, [ & ]( const auto&, const auto& ) { ++n; } );
    return n;
}

/// Size of the brute-force search space, to skip oversized cases.
inline double brute_cost( const wtslab::wts& x, const wtslab::wts& y )
{
    double c = 1;
    for ( std::size_t i = 0; i < x.state_count(); ++i )
        c *= static_cast<double>( std::max<std::size_t>( 1, y.state_count() ) );
    for ( std::size_t i = 0; i < x.action_count(); ++i )
        c *= static_cast<double>( std::max<std::size_t>( 1, y.action_count() ) );
    return c;
}

/// States reachable from `start`, by repeated sweeps over the transition list.
inline std::set<std::string> naive_reachable( const wtslab::wts& x, const std::string& start )
{
    std::set<std::string> seen{ start };
    bool changed = true;
    while ( changed )
    {
        changed = false;
        for ( const auto& [ a, body, b ] : transitions_of( x ) )
            if ( seen.contains( a ) && !seen.contains( b ) )
                changed = seen.insert( b ).second;
    }
    return seen;
}

/// f and g are linked by an elementary homotopy iff they agree on states
/// and the map (u,0) -> f(u), (u,1) -> g(u) sends every decorated transition
/// to a transition, i.e. every mixture of f and g along each transition body
/// is a transition of the target.
inline bool elementary_homotopy( const wtslab::morphism& f, const wtslab::morphism& g )
{
    if ( f.state_map() != g.state_map() )
        return false;
    const auto& x = f.source();
    const auto target = transitions_of( f.target() );
    for ( const auto& [ a, body, b ] : transitions_of( x ) )
        for ( std::size_t mask = 0; mask < ( std::size_t{ 1 } << body.size() ); ++mask )
        {
            std::vector<std::string> image;
            for ( std::size_t i = 0; i < body.size(); ++i )
            {
                auto u = x.action( body[ i ] );
                image.push_back( f.target().actions()[ ( mask >> i ) & 1 ? g.action( u ) : f.action( u ) ] );
            }
            std::sort( image.begin(), image.end() );
            if ( !target.contains( { f.target().states()[ f.state( x.state( a ) ) ], image,
                                     f.target().states()[ f.state( x.state( b ) ) ] } ) )
                return false;
        }
    return true;
}

/// Number of classes of the equivalence relation generated by `related` on
/// `n` elements, by repeated relabelling to the smallest connected index.
inline std::size_t count_classes( std::size_t n, const std::function<bool( std::size_t, std::size_t )>& related )
{
    std::vector<std::size_t> label( n );
    for ( std::size_t i = 0; i < n; ++i )
        label[ i ] = i;
    bool changed = true;
    while ( changed )
    {
        changed = false;
        for ( std::size_t i = 0; i < n; ++i )
            for ( std::size_t j = 0; j < n; ++j )
                if ( label[ j ] < label[ i ] && ( related( i, j ) || related( j, i ) ) )
                {
                    label[ i ] = label[ j ];
                    changed = true;
                }
    }
    std::set<std::size_t> distinct( label.begin(), label.end() );
    return distinct.size();
}

} // namespace oracle
