#include "oracles.hpp"

#include "wtslab/fixtures.hpp"
#include "wtslab/starshaped.hpp"

#include <doctest.h>

using namespace wtslab;
namespace fx = wtslab::fixtures;

namespace
{

std::vector<pointed_wts> pointed_fixtures()
{
    return { make_pointed( fx::pt(), "iota" ),   make_pointed( fx::seg(), "0" ),      make_pointed( fx::seg(), "1" ),
             make_pointed( fx::par(), "0" ),     make_pointed( fx::tri(), "alpha" ), make_pointed( fx::unr(), "iota" ),
             make_pointed( fx::square(), "0" ),  make_pointed( fx::two(), "0" ) };
}

std::set<std::string> names( const pointed_wts& p, const std::vector<std::size_t>& states )
{
    std::set<std::string> out;
    for ( auto s : states )
        out.insert( p.system().states()[ s ] );
    return out;
}

} // namespace

TEST_CASE( "reachability on fixtures" )
{
    auto unr = make_pointed( fx::unr(), "iota" );
    CHECK( names( unr, reachable_states( unr ).states() ) == std::set<std::string>{ "iota", "s" } );
    auto tri = make_pointed( fx::tri(), "alpha" );
    CHECK( reachable_states( tri ).states().size() == 4 );
    CHECK( is_star_shaped( make_pointed( fx::seg(), "0" ) ) );
    CHECK_FALSE( is_star_shaped( make_pointed( fx::seg(), "1" ) ) );
    CHECK_FALSE( is_star_shaped( unr ) );

    for ( const auto& p : pointed_fixtures() )
    {
        auto r = reachable_states( p );
        CHECK( names( p, r.states() ) == oracle::naive_reachable( p.system(), p.point_id() ) );
        for ( auto s : r.states() )
        {
            // Each witness is a chain of transitions from the point to s.
            auto at = p.point;
            for ( const auto& t : *r.witness[ s ] )
            {
                CHECK( p.system().contains( t ) );
                CHECK( t.source == at );
                at = t.target;
            }
            CHECK( at == s );
        }
    }
}

TEST_CASE( "coreflection" )
{
    auto unr = make_pointed( fx::unr(), "iota" );
    auto c = coreflect( unr );
    CHECK( c.object.system().states() == std::vector<std::string>{ "iota", "s" } );
    CHECK( c.object.system().action_count() == 1 );
    CHECK( c.object.system().transitions().size() == 1 );
    CHECK( is_morphism( c.inclusion.underlying ).ok() );

    for ( const auto& p : pointed_fixtures() )
    {
        auto once = coreflect( p );
        auto twice = coreflect( once.object );
        CHECK( is_star_shaped( once.object ) );
        CHECK( validate( once.object.system() ).ok() );
        CHECK( twice.object.system() == once.object.system() );
        if ( is_star_shaped( p ) )
            CHECK( once.object.system() == p.system() );
        for ( const auto& q : pointed_fixtures() )
            if ( is_star_shaped( q ) )
                CHECK( check_coreflection_universal( q, p ).unique );
    }
}

TEST_CASE( "cone legs" )
{
    auto zero = cone_maps( { "l" }, 0 );
    CHECK( zero.size() == 1 );
    CHECK( zero.front().collapse );
    auto two = cone_maps( { "l" }, 2 );
    CHECK( two.size() == 3 );
    for ( const auto& leg : two )
    {
        CHECK( is_cofibration( leg.map ) );
        CHECK( validate( leg.map.target() ).ok() );
    }
    // Steps of dimension 1 or 2 over one label: 2 words of length 1, 4 of length 2.
    CHECK( cone_maps( { "l" }, 2, 2 ).size() == 1 + 2 + 4 );
    CHECK( cone_maps( { "l", "m" }, 1, 2 ).size() == 1 + 5 );
}

TEST_CASE( "cone injectivity on fixtures" )
{
    auto unr = make_pointed( fx::unr(), "iota" );
    auto r = cone_injectivity( unr, { "l" }, 3 );
    CHECK_FALSE( r.holds );
    REQUIRE( r.witness );
    CHECK( unr.system().states()[ *r.witness ] == "t" );
    CHECK_FALSE( r.depth_limited );

    CHECK( cone_injectivity( make_pointed( fx::seg(), "0" ), { "l" }, 1 ).holds );

    // A chain of two steps is out of reach of length-1 legs.
    auto chain = share( make_system( { { "l" }, { "0", "1", "2" }, { { "a", "l" } }, { { "0", { "a" }, "1" }, { "1", { "a" }, "2" } } } ) );
    auto limited = cone_injectivity( make_pointed( chain, "0" ), { "l" }, 1 );
    CHECK_FALSE( limited.holds );
    CHECK( limited.depth_limited );

    for ( const auto& p : pointed_fixtures() )
        CHECK( cone_injectivity( p, p.system().sigma(), p.system().state_count() ).holds == is_star_shaped( p ) );
}

TEST_CASE( "cone injectivity matches star-shapedness on the small family" )
{
    auto family = small_pointed_family( 3, 2, 1 );
    CHECK( family.size() > 1000 );
    std::size_t star = 0;
    for ( const auto& p : family )
    {
        auto r = cone_injectivity( p, { "l" }, p.system().state_count() );
        REQUIRE( r.holds == is_star_shaped( p ) );
        star += r.holds;
    }
    CHECK( star > 0 );
    CHECK( star < family.size() );
}

TEST_CASE( "small family is deduplicated up to pointed isomorphism" )
{
    auto family = small_pointed_family( 2, 1, 1 );
    for ( std::size_t i = 0; i < family.size(); ++i )
        for ( std::size_t j = i + 1; j < family.size(); ++j )
            CHECK_FALSE( find_pointed_isomorphism( family[ i ], family[ j ] ) );
    // 1 state: 0 or 1 action, the loop present or not; 2 states: 1 + 16.
    CHECK( family.size() == 1 + 2 + 1 + 16 );
}

TEST_CASE( "the cylinder keeps systems star-shaped" )
{
    for ( const auto& p : pointed_fixtures() )
        CHECK( check_cyl_preserves_star( p ) );
    std::mt19937_64 rng( 20240917 );
    for ( int i = 0; i < 50; ++i )
    {
        auto p = random_star_shaped( rng );
        CHECK( is_star_shaped( p ) );
        CHECK( validate( p.system() ).ok() );
        CHECK( p.system().state_count() <= 6 );
        CHECK( p.system().action_count() <= 6 );
        CHECK( check_cyl_preserves_star( p ) );
    }
}
