#include "wtslab/homotopy.hpp"

#include <deque>
#include <map>
#include <numeric>

namespace wtslab
{

namespace
{

std::optional<morphism> elementary( const cylinder_pack& pack, const morphism& f, const morphism& g,
                                    const search_limits& limits )
{
    if ( f.state_map() != g.state_map() )
        return std::nullopt; // Cyl X has the states of X and gamma^e is the identity on them
    hom_search search( pack.cyl_object, f.target_ptr() );
    for ( std::size_t s = 0; s < f.source().state_count(); ++s )
        search.fix_state( s, f.state( s ) );
    for ( std::size_t u = 0; u < f.source().action_count(); ++u )
    {
        search.fix_action( pack.gamma0.action( u ), f.action( u ) );
        search.fix_action( pack.gamma1.action( u ), g.action( u ) );
    }
    return search.first( limits );
}

void require_parallel( const morphism& f, const morphism& g )
{
    if ( !same_system( f.source_ptr(), g.source_ptr() ) || !same_system( f.target_ptr(), g.target_ptr() ) )
        throw input_error( "homotopy: maps must be parallel" );
}

} // namespace

std::optional<morphism> find_elementary_homotopy( const morphism& f, const morphism& g, const search_limits& limits )
{
    require_parallel( f, g );
    return elementary( cyl( f.source_ptr() ), f, g, limits );
}

std::optional<homotopy_witness> homotopic( const morphism& f, const morphism& g, const search_limits& limits )
{
    require_parallel( f, g );
    if ( f == g )
    {
        auto pack = cyl( f.source_ptr() );
        return homotopy_witness{ { f }, {}, {} };
    }
    if ( f.state_map() != g.state_map() )
        return std::nullopt;

    auto pack = cyl( f.source_ptr() );
    // Only maps with the state map of f can be reached.
    hom_search search( f.source_ptr(), f.target_ptr() );
    for ( std::size_t s = 0; s < f.source().state_count(); ++s )
        search.fix_state( s, f.state( s ) );
    auto nodes = search.all( limits );

    auto index_of = [ & ]( const morphism& m ) -> std::size_t {
        for ( std::size_t i = 0; i < nodes.size(); ++i )
            if ( nodes[ i ] == m )
                return i;
        throw input_error( "homotopy: map is not a morphism" );
    };
    const auto start = index_of( f );
    const auto goal = index_of( g );

    struct edge
    {
        std::size_t from;
        morphism step;
        bool reversed;
    };
    std::vector<std::optional<edge>> parent( nodes.size() );
    std::vector<bool> seen( nodes.size(), false );
    std::deque<std::size_t> queue{ start };
    seen[ start ] = true;
    while ( !queue.empty() && !seen[ goal ] )
    {
        auto p = queue.front();
        queue.pop_front();
        for ( std::size_t q = 0; q < nodes.size(); ++q )
        {
            if ( seen[ q ] )
                continue;
            auto h = elementary( pack, nodes[ p ], nodes[ q ], limits );
            bool reversed = false;
            if ( !h )
            {
                h = elementary( pack, nodes[ q ], nodes[ p ], limits );
                reversed = true;
            }
            if ( !h )
                continue;
            seen[ q ] = true;
            parent[ q ] = edge{ p, *h, reversed };
            queue.push_back( q );
        }
    }
    if ( !seen[ goal ] )
        return std::nullopt;

    homotopy_witness w;
    std::vector<std::size_t> trail{ goal };
    std::vector<const edge*> edges;
    for ( auto cur = goal; cur != start; cur = parent[ cur ]->from )
    {
        edges.push_back( &*parent[ cur ] );
        trail.push_back( parent[ cur ]->from );
    }
    for ( auto it = trail.rbegin(); it != trail.rend(); ++it )
        w.path.push_back( nodes[ *it ] );
    for ( auto it = edges.rbegin(); it != edges.rend(); ++it )
    {
        w.steps.push_back( ( *it )->step );
        w.reversed.push_back( ( *it )->reversed );
    }
    return w;
}

homotopy_partition homotopy_classes( const system_ptr& x, const system_ptr& t, const search_limits& limits )
{
    homotopy_partition out;
    out.maps = enum_homs( x, t, limits );
    const auto n = out.maps.size();

    std::vector<std::size_t> parent( n );
    std::iota( parent.begin(), parent.end(), 0 );
    auto find = [ & ]( std::size_t i ) {
        while ( parent[ i ] != i )
            i = parent[ i ] = parent[ parent[ i ] ];
        return i;
    };

    auto pack = cyl( x );
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> by_states;
    for ( std::size_t i = 0; i < n; ++i )
        by_states[ out.maps[ i ].state_map() ].push_back( i );
    for ( const auto& [ states, members ] : by_states )
        for ( std::size_t a = 0; a < members.size(); ++a )
            for ( std::size_t b = a + 1; b < members.size(); ++b )
            {
                auto i = members[ a ], j = members[ b ];
                if ( find( i ) == find( j ) )
                    continue;
                if ( elementary( pack, out.maps[ i ], out.maps[ j ], limits ) ||
                     elementary( pack, out.maps[ j ], out.maps[ i ], limits ) )
                {
                    auto ri = find( i ), rj = find( j );
                    parent[ std::max( ri, rj ) ] = std::min( ri, rj );
                }
            }

    std::map<std::size_t, std::size_t> class_index;
    out.class_of.resize( n );
    for ( std::size_t i = 0; i < n; ++i )
    {
        auto r = find( i );
        auto [ it, inserted ] = class_index.emplace( r, out.representatives.size() );
        if ( inserted )
            out.representatives.push_back( i );
        out.class_of[ i ] = it->second;
    }
    return out;
}

weq_report is_weak_equiv_against( const morphism& f, const std::vector<system_ptr>& tests,
                                  const search_limits& limits, const fibrancy_context* context )
{
    weq_report report;
    for ( const auto& t : tests )
    {
        if ( context )
        {
            auto fib = is_fibrant_up_to( t, context->generating, context->seeds, context->depth, limits );
            if ( !fib.holds )
                report.warnings.push_back( "test object with states {" + std::to_string( t->state_count() ) +
                                           "} is not fibrant up to depth " + std::to_string( context->depth ) );
        }

        auto over_target = homotopy_classes( f.target_ptr(), t, limits );
        auto over_source = homotopy_classes( f.source_ptr(), t, limits );

        weq_test_result r;
        r.test = t;
        r.target_classes = over_target.class_count();
        r.source_classes = over_source.class_count();

        auto class_in_source = [ & ]( const morphism& h ) {
            for ( std::size_t i = 0; i < over_source.maps.size(); ++i )
                if ( over_source.maps[ i ] == h )
                    return over_source.class_of[ i ];
            throw input_error( "weq: precomposite is not a morphism" );
        };

        std::vector<std::optional<std::size_t>> image( r.target_classes );
        for ( std::size_t i = 0; i < over_target.maps.size(); ++i )
        {
            auto c = over_target.class_of[ i ];
            auto d = class_in_source( compose( over_target.maps[ i ], f ) );
            if ( image[ c ] && *image[ c ] != d )
                r.well_defined = false;
            image[ c ] = d;
        }
        std::vector<bool> hit( r.source_classes, false );
        for ( const auto& d : image )
        {
            if ( hit[ *d ] )
                r.injective = false;
            hit[ *d ] = true;
        }
        for ( bool h : hit )
            if ( !h )
                r.surjective = false;

        report.holds = report.holds && r.bijective();
        report.tests.push_back( std::move( r ) );
    }
    return report;
}

} // namespace wtslab
