#include "oracles.hpp"

#include "wtslab/fixtures.hpp"
#include "wtslab/lifting.hpp"

#include <doctest.h>

using namespace wtslab;
namespace fx = wtslab::fixtures;

namespace
{

// Cocyl Y by trying every multiset of label-compatible pairs of every
// dimension occurring in Y.
std::set<oracle::named> brute_cocyl_transitions( const wts& y )
{
    std::vector<std::pair<std::string, std::string>> pairs;
    for ( std::size_t u = 0; u < y.action_count(); ++u )
        for ( std::size_t v = 0; v < y.action_count(); ++v )
            if ( y.label( u ) == y.label( v ) )
                pairs.emplace_back( y.actions()[ u ], y.actions()[ v ] );
    std::set<std::size_t> dims;
    for ( const auto& t : y.transitions() )
        dims.insert( t.dimension() );
    const auto ts = oracle::transitions_of( y );

    std::set<oracle::named> out;
    for ( auto d : dims )
    {
        std::vector<std::size_t> pick( d, 0 );
        while ( true )
        {
            if ( std::is_sorted( pick.begin(), pick.end() ) )
                for ( const auto& a : y.states() )
                    for ( const auto& b : y.states() )
                    {
                        bool all = true;
                        for ( std::size_t mask = 0; all && mask < ( std::size_t{ 1 } << d ); ++mask )
                        {
                            std::vector<std::string> body;
                            for ( std::size_t i = 0; i < d; ++i )
                                body.push_back( ( mask >> i ) & 1 ? pairs[ pick[ i ] ].second
                                                                  : pairs[ pick[ i ] ].first );
                            std::sort( body.begin(), body.end() );
                            all = ts.contains( { a, body, b } );
                        }
                        if ( all )
                        {
                            std::vector<std::string> body;
                            for ( auto k : pick )
                                body.push_back( paired_action( pairs[ k ].first, pairs[ k ].second ) );
                            std::sort( body.begin(), body.end() );
                            out.insert( { a, body, b } );
                        }
                    }
            std::size_t k = 0;
            while ( k < d && pick[ k ] + 1 == pairs.size() )
                pick[ k++ ] = 0;
            if ( k == d || pairs.empty() )
                break;
            ++pick[ k ];
        }
    }
    return out;
}

} // namespace

TEST_CASE( "cylinder structure maps" )
{
    for ( const auto& n : fx::all() )
    {
        CAPTURE( n.name );
        auto c = cyl( n.system );
        CHECK( validate( *c.cyl_object ).ok() );
        CHECK( is_morphism( c.gamma0 ).ok() );
        CHECK( is_morphism( c.gamma1 ).ok() );
        CHECK( is_morphism( c.gamma ).ok() );
        CHECK( is_morphism( c.sigma ).ok() );
        CHECK( compose( c.sigma, c.gamma0 ) == identity( n.system ) );
        CHECK( compose( c.sigma, c.gamma1 ) == identity( n.system ) );
        CHECK( injective_on_actions( c.gamma ) );
        CHECK( check_good( n.system ) );

        std::size_t expected = 0;
        for ( const auto& t : n.system->transitions() )
            expected += std::size_t{ 1 } << t.dimension();
        CHECK( c.cyl_object->transitions().size() == expected );
        CHECK( c.cyl_object->action_count() == 2 * n.system->action_count() );
    }
}

TEST_CASE( "path object matches the brute-force construction" )
{
    for ( const auto& n : fx::all() )
    {
        CAPTURE( n.name );
        auto p = cocyl( n.system );
        CHECK( validate( *p.path_object ).ok() );
        CHECK( oracle::transitions_of( *p.path_object ) == brute_cocyl_transitions( *n.system ) );
        CHECK( is_morphism( p.pi0 ).ok() );
        CHECK( is_morphism( p.pi1 ).ok() );
    }
}

TEST_CASE( "naturality of gamma and sigma" )
{
    for ( const auto& x : fx::all() )
        for ( const auto& y : fx::all() )
            for ( const auto& f : enum_homs( x.system, y.system ) )
            {
                auto cx = cyl( x.system );
                auto cy = cyl( y.system );
                auto cf = cyl_map( f );
                CHECK( is_morphism( cf ).ok() );
                CHECK( compose( cf, cx.gamma0 ) == compose( cy.gamma0, f ) );
                CHECK( compose( cf, cx.gamma1 ) == compose( cy.gamma1, f ) );
                CHECK( compose( cy.sigma, cf ) == compose( f, cx.sigma ) );
            }
}

TEST_CASE( "cylinder and path object are adjoint through transpose" )
{
    for ( const auto& x : fx::all() )
        for ( const auto& y : fx::all() )
        {
            CAPTURE( x.name );
            CAPTURE( y.name );
            auto cx = cyl( x.system );
            auto path = cocyl( y.system );
            auto left = enum_homs( cx.cyl_object, y.system );
            auto right = enum_homs( x.system, path.path_object );
            CHECK( left.size() == right.size() );
            if ( oracle::brute_cost( *cx.cyl_object, *y.system ) < 2e5 )
                CHECK( left.size() == oracle::brute_hom_count( *cx.cyl_object, *y.system ) );

            std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> images;
            for ( const auto& h : left )
            {
                auto g = transpose( x.system, h );
                CHECK( is_morphism( g ).ok() );
                images.insert( { g.state_map(), g.action_map() } );
                CHECK( untranspose( y.system, g ) == h );
            }
            CHECK( images.size() == left.size() );
            for ( const auto& g : right )
                CHECK( transpose( x.system, untranspose( y.system, g ) ) == g );
        }
}

TEST_CASE( "sigma of the segment lifts against the sampled cofibrations" )
{
    auto r = check_very_good( fx::seg(), fx::sample_generating_cofibrations() );
    CHECK( r.holds );
    CHECK( r.squares > 0 );
    CHECK( check_very_good( fx::par(), fx::sample_generating_cofibrations() ).holds );
}
