#include "cli.hpp"

#include "wtslab/io.hpp"

#include <doctest.h>

#include <sstream>

namespace
{

const std::string data = WTSLAB_TEST_DATA;

struct invocation
{
    int status;
    wtslab::io::json doc;
    std::string text;
};

invocation call( std::vector<std::string> args )
{
    std::ostringstream out, err;
    int status = wtslab::cli::run( args, out, err );
    wtslab::io::json doc;
    if ( !out.str().empty() )
        doc = wtslab::io::json::parse( out.str() );
    return { status, doc, out.str() };
}

} // namespace

TEST_CASE( "exit statuses" )
{
    CHECK( call( { "validate", data + "/systems/seg.json" } ).status == 0 );
    auto bad = call( { "validate", data + "/systems/tri_premises.json" } );
    CHECK( bad.status == 1 );
    CHECK( bad.doc[ "result" ][ "violations" ][ 0 ][ "rule" ] == "patching" );
    CHECK( call( { "validate", data + "/missing.json" } ).status == 2 );
    CHECK( call( { "no-such-verb" } ).status == 2 );
    CHECK( call( { "pushout", data + "/systems/seg.json" } ).status == 2 );
    CHECK( call( { "fibrant", data + "/systems/sq.json", "--depth", "2", "--budget", "5" } ).status == 3 );
}

TEST_CASE( "cone check on the unreachable fixture names the unreachable state" )
{
    auto r = call( { "cone-check", data + "/pointed/unr.json" } );
    CHECK( r.status == 1 );
    CHECK( r.doc[ "result" ][ "witness" ] == "t" );
    CHECK( r.doc[ "verdict" ] == false );
}

TEST_CASE( "lemma verifiers" )
{
    CHECK( call( { "verify-lemma", "l4", data + "/pointed/seg_at_0.json" } ).status == 0 );
    CHECK( call( { "verify-lemma", "l3", data + "/systems/par.json" } ).status == 0 );
    CHECK( call( { "verify-lemma", "l1", data + "/morphisms/two_to_seg.json", data + "/pointed/par_at_0.json" } )
               .status == 0 );
    CHECK( call( { "verify-lemma", "l0bis", data + "/pointed/tri_at_alpha.json" } ).status == 0 );
    auto ff = call( { "verify-lemma", "far-fetched", data + "/pointed/seg_at_0.json" } );
    CHECK( ff.status == 0 );
    CHECK( ff.doc[ "result" ][ "identity" ] == true );
    CHECK( call( { "verify-lemma", "l9", data + "/pointed/seg_at_0.json" } ).status == 2 );
}

TEST_CASE( "certificates replay through the library" )
{
    auto r = call( { "homotopic", data + "/morphisms/seg_to_par_0.json", data + "/morphisms/seg_to_par_1.json" } );
    REQUIRE( r.status == 0 );
    auto h = wtslab::io::morphism_from_json( r.doc[ "result" ][ "witness" ][ "steps" ][ 0 ][ "homotopy" ] );
    CHECK( is_morphism( h ).ok() );

    auto lift = call( { "lift", data + "/morphisms/empty_to_pt.json", data + "/morphisms/par_collapse_to_seg.json",
                        data + "/morphisms/empty_to_par.json", data + "/morphisms/pt_to_seg_0.json" } );
    CHECK( lift.status == 0 );
    CHECK( lift.doc[ "result" ][ "lift" ][ "stateMap" ][ "iota" ] == "0" );

    auto classes = call( { "classes", data + "/systems/pt.json", data + "/systems/two.json" } );
    CHECK( classes.doc[ "result" ][ "count" ] == 2 );
}

TEST_CASE( "pointed verbs" )
{
    auto c = call( { "point-coproduct", data + "/pointed/seg_at_0.json", data + "/pointed/seg_at_0.json" } );
    REQUIRE( c.status == 0 );
    CHECK( c.doc[ "result" ][ "object" ][ "states" ].size() == 3 );
    auto cyl = call( { "point-cyl", data + "/pointed/seg_at_0.json" } );
    auto plain = call( { "cyl", data + "/systems/seg.json" } );
    auto pointed_object = cyl.doc[ "result" ][ "object" ];
    pointed_object.erase( "point" );
    CHECK( pointed_object == plain.doc[ "result" ][ "object" ] );
    CHECK( call( { "point-validate", data + "/systems/seg.json" } ).status == 1 );
    CHECK( call( { "point-validate", data + "/pointed/seg_at_0.json" } ).status == 0 );
}

TEST_CASE( "repeated runs print identical text" )
{
    for ( const auto& v : std::vector<std::vector<std::string>>{
              { "lambda", "--depth", "1" },
              { "cocyl", data + "/systems/sq.json" },
              { "weq", data + "/morphisms/cyl_seg_sigma.json" } } )
        CHECK( call( v ).text == call( v ).text );
}
