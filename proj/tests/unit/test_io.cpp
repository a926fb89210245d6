#include "wtslab/fixtures.hpp"
#include "wtslab/io.hpp"

#include <doctest.h>

using namespace wtslab;
namespace fx = wtslab::fixtures;

TEST_CASE( "system documents round-trip" )
{
    for ( const auto& n : fx::all() )
    {
        auto doc = io::to_json( *n.system );
        auto back = io::system_from_json( doc );
        CHECK( *back == *n.system );
        CHECK( io::dump( io::to_json( *back ) ) == io::dump( doc ) );
    }
}

TEST_CASE( "serialization is canonical" )
{
    io::json shuffled = io::json::parse( R"({
        "transitions": [["0", ["b", "a"], "1"], ["0", ["a"], "1"]],
        "states": ["1", "0"],
        "actions": {"b": "l", "a": "l"},
        "sigma": ["l"]
    })" );
    auto x = io::system_from_json( shuffled );
    auto text = io::dump( io::to_json( *x ) );
    CHECK( text ==
           "{\n  \"actions\": {\n    \"a\": \"l\",\n    \"b\": \"l\"\n  },\n  \"sigma\": [\n    \"l\"\n  ],\n"
           "  \"states\": [\n    \"0\",\n    \"1\"\n  ],\n  \"transitions\": [\n    [\n      \"0\",\n      [\n"
           "        \"a\"\n      ],\n      \"1\"\n    ],\n    [\n      \"0\",\n      [\n        \"a\",\n"
           "        \"b\"\n      ],\n      \"1\"\n    ]\n  ]\n}\n" );
}

TEST_CASE( "malformed documents are input errors" )
{
    CHECK_THROWS_AS( io::system_from_json( io::json::parse( R"({"sigma": ["l"]})" ) ), input_error );
    CHECK_THROWS_AS( io::system_from_json( io::json::parse(
                         R"({"sigma": ["l"], "states": ["0"], "actions": {}, "transitions": [["0", "a", "0"]]})" ) ),
                     input_error );
    CHECK_THROWS_AS( io::system_from_json( io::json::parse(
                         R"({"sigma": ["l"], "states": [0], "actions": {}, "transitions": []})" ) ),
                     input_error );
    CHECK_THROWS_AS( io::pointed_from_json( io::to_json( *fx::seg() ) ), input_error );
    CHECK_THROWS_AS( io::load( "/nonexistent/file.json" ), input_error );
}

TEST_CASE( "morphism and pointed documents round-trip" )
{
    auto f = enum_homs( fx::seg(), fx::par() ).front();
    auto doc = io::to_json( f );
    CHECK( io::morphism_from_json( doc ) == f );
    CHECK( doc[ "stateMap" ][ "1" ] == "1" );

    auto p = make_pointed( fx::seg(), "0" );
    CHECK( io::pointed_from_json( io::to_json( p ) ) == p );

    auto pf = make_pointed_morphism( p, make_pointed( fx::par(), "0" ), f );
    auto back = io::pointed_morphism_from_json( io::to_json( pf ) );
    CHECK( back.underlying == f );
    CHECK( back.source.point_id() == "0" );

    auto bad = doc;
    bad[ "stateMap" ][ "0" ] = "1";
    CHECK_THROWS_AS( io::morphism_from_json( bad ), input_error );

    auto arrows = io::arrows_from_json( io::to_json( fx::sample_generating_cofibrations() ) );
    CHECK( arrows == fx::sample_generating_cofibrations() );
}
