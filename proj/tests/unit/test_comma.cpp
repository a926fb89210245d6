#include "oracles.hpp"

#include "wtslab/comma.hpp"
#include "wtslab/fixtures.hpp"

#include <doctest.h>

using namespace wtslab;
namespace fx = wtslab::fixtures;

namespace
{

std::vector<pointed_wts> pointed_fixtures()
{
    return { make_pointed( fx::pt(), "iota" ),      make_pointed( fx::seg(), "0" ),   make_pointed( fx::seg(), "1" ),
             make_pointed( fx::par(), "0" ),        make_pointed( fx::tri(), "alpha" ), make_pointed( fx::unr(), "iota" ),
             make_pointed( fx::square(), "0" ),     make_pointed( fx::two(), "0" ) };
}

} // namespace

TEST_CASE( "free pointing" )
{
    CHECK( *rho( fx::empty() ).base == *fx::pt() );
    auto r = rho( fx::seg() );
    CHECK( omega( r )->state_count() == 3 );
    CHECK( r.point_id() == "iota" );

    // A clash with an existing state named iota is renamed.
    auto clash = rho( fx::pt() );
    CHECK( clash.system().state_count() == 2 );

    for ( const auto& x : fx::all() )
        for ( const auto& p : pointed_fixtures() )
        {
            auto a = check_rho_adjunction( x.system, p );
            CHECK( a.holds() );
            if ( oracle::brute_cost( *x.system, p.system() ) < 2e5 )
                CHECK( a.right == oracle::brute_hom_count( *x.system, p.system() ) );
        }
}

TEST_CASE( "pointed coproduct" )
{
    auto pt = make_pointed( fx::pt(), "iota" );
    CHECK( pointed_coproduct( pt, pt ).object.system() == *fx::pt() );

    auto seg = make_pointed( fx::seg(), "0" );
    auto c = pointed_coproduct( seg, seg );
    CHECK( c.object.system().state_count() == 3 );
    CHECK( c.object.system().action_count() == 2 );
    CHECK( c.object.system().transitions().size() == 2 );
    for ( const auto& t : c.object.system().transitions() )
        CHECK( t.source == c.object.point );
    CHECK( verify_pushout_universal( c.square, default_test_family( c.square ) ) );
}

TEST_CASE( "pointed cylinder over a one-state base is the plain cylinder" )
{
    CHECK( cyl_pt( make_pointed( fx::pt(), "iota" ) ).object.system() == *fx::pt() );
    for ( const auto& p : pointed_fixtures() )
    {
        CAPTURE( p.system().states().size() );
        auto c = cyl_pt( p );
        auto plain = cyl( p.base );
        CHECK( c.object.system() == *plain.cyl_object );
        CHECK( c.object.point_id() == p.point_id() );
        CHECK( c.gamma0.state( p.point ) == c.object.point );
        CHECK( c.sigma.state( c.object.point ) == p.point );
        CHECK( compose( c.sigma, c.gamma0 ) == identity( p.base ) );
        CHECK( compose( c.sigma, c.gamma1 ) == identity( p.base ) );
        CHECK( injective_on_actions( c.gamma ) );
    }
}

TEST_CASE( "pointed path object and the pointed adjunction" )
{
    CHECK( cocyl_pt( make_pointed( fx::pt(), "iota" ) ).system() == *fx::pt() );
    auto par = cocyl_pt( make_pointed( fx::par(), "0" ) );
    CHECK( par.system() == *cocyl( fx::par() ).path_object );
    CHECK( par.point_id() == "0" );

    for ( const auto& p : pointed_fixtures() )
        for ( const auto& q : pointed_fixtures() )
            CHECK( check_l0( p, q ).holds() );
}

TEST_CASE( "injectivity reflects along free pointing" )
{
    auto two_seg = fx::inclusion( fx::two(), fx::seg() );
    CHECK( check_l1( two_seg, make_pointed( fx::par(), "0" ) ).holds() );
    auto point = fx::sample_generating_cofibrations().front();
    for ( const auto& p : pointed_fixtures() )
    {
        auto r = check_l1( point, p );
        CHECK( r.holds() );
        CHECK( r.pointed_side );
        for ( const auto& s : fx::sample_generating_cofibrations() )
            CHECK( check_l1( s, p ).holds() );
        auto stages = lambda_up_to( fx::sample_generating_cofibrations(), {}, 1 );
        for ( const auto& stage : stages )
            CHECK( check_l2( stage.arrows, p ).holds() );
    }
}

TEST_CASE( "pointed cylinder of a freely pointed system" )
{
    for ( auto a : { fx::empty(), fx::seg(), fx::par(), fx::two() } )
    {
        auto iso = check_l3( a );
        REQUIRE( iso );
        CHECK( is_isomorphism( *iso ) );
    }
    CHECK( cyl_pt( rho( fx::empty() ) ).object.system() == *fx::pt() );
}

TEST_CASE( "amalgamation pushouts" )
{
    for ( const auto& p : pointed_fixtures() )
    {
        auto r = check_l4( p );
        CHECK( r.amalgamated );
        CHECK( r.trivial );
    }
}

TEST_CASE( "epimorphism criterion and the comparison pushout" )
{
    CHECK( check_gamma_point_epic() );
    auto fold = copair( coproduct( fx::pt(), fx::pt() ), identity( fx::pt() ), identity( fx::pt() ) );
    CHECK( is_epi_on_carriers( morphism( fx::two(), fx::pt(), { 0, 0 }, {} ) ) );
    CHECK( is_epi_on_carriers( fold ) );
    CHECK_FALSE( is_epi_on_carriers( fx::inclusion( fx::two(), fx::seg() ) ) );
    for ( const auto& p : pointed_fixtures() )
        CHECK( check_l0bis( p ) );
}

TEST_CASE( "split sections" )
{
    CHECK( split_section( identity( fx::seg() ) ) == identity( fx::seg() ) );
    CHECK_FALSE( split_section( fx::inclusion( fx::two(), fx::seg() ) ) );
    for ( const auto& p : pointed_fixtures() )
    {
        auto c = cyl_pt( p );
        auto s = split_section( c.p );
        REQUIRE( s );
        CHECK( s->state_map() == identity( s->source_ptr() ).state_map() );
        CHECK( s->action_map() == identity( s->source_ptr() ).action_map() );
    }
}

TEST_CASE( "free pointing commutes with the star operations" )
{
    for ( const auto& f : fx::sample_generating_cofibrations() )
    {
        auto rf = rho_map( f );
        for ( int eps : { 0, 1 } )
        {
            auto lhs = pointed_star_eps( rf, eps );
            auto rhs = rho_map( star_eps( f, eps ) );
            CHECK( find_arrow_isomorphism( lhs.underlying, rhs.underlying ) );
        }
        CHECK( find_arrow_isomorphism( pointed_star( rf ).underlying, rho_map( star( f ) ).underlying ) );
    }
}

TEST_CASE( "the underlying system of a pointed pushout is the pushout underneath" )
{
    auto seg = make_pointed( fx::seg(), "0" );
    auto par = make_pointed( fx::par(), "0" );
    for ( const auto& f : enum_pointed_homs( seg, par ) )
        for ( const auto& g : enum_pointed_homs( seg, seg ) )
        {
            auto p = pushout( f, g );
            CHECK( verify_pushout_universal( p, default_test_family( p ) ) );
            CHECK( p.leg1.state( par.point ) == p.leg2.state( seg.point ) );
        }
}
