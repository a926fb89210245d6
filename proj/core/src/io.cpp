#include "wtslab/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace wtslab::io
{

namespace
{

const json& field( const json& doc, const char* key )
{
    if ( !doc.is_object() || !doc.contains( key ) )
        throw input_error( std::string( "document lacks field '" ) + key + "'" );
    return doc.at( key );
}

std::string text( const json& v, const char* what )
{
    if ( !v.is_string() )
        throw input_error( std::string( what ) + " must be a string" );
    return v.get<std::string>();
}

std::vector<std::string> texts( const json& v, const char* what )
{
    if ( !v.is_array() )
        throw input_error( std::string( what ) + " must be a list" );
    std::vector<std::string> out;
    for ( const auto& e : v )
        out.push_back( text( e, what ) );
    return out;
}

std::map<std::string, std::string> table( const json& v, const char* what )
{
    if ( !v.is_object() )
        throw input_error( std::string( what ) + " must be an object" );
    std::map<std::string, std::string> out;
    for ( const auto& [ k, e ] : v.items() )
        out.emplace( k, text( e, what ) );
    return out;
}

json sorted( std::vector<std::string> v )
{
    std::sort( v.begin(), v.end() );
    return v;
}

json transition_doc( const raw_transition& t )
{
    return json::array( { t.source, sorted( t.body ), t.target } );
}

json transitions_doc( const std::vector<raw_transition>& ts )
{
    std::vector<json> out;
    for ( const auto& t : ts )
        out.push_back( transition_doc( t ) );
    std::sort( out.begin(), out.end() );
    out.erase( std::unique( out.begin(), out.end() ), out.end() );
    return out;
}

std::map<std::string, std::string> named_map( const std::vector<std::string>& from, const std::vector<std::string>& to,
                                              const std::vector<std::size_t>& map )
{
    std::map<std::string, std::string> out;
    for ( std::size_t i = 0; i < map.size(); ++i )
        out.emplace( from[ i ], to[ map[ i ] ] );
    return out;
}

} // namespace

raw_system raw_from_json( const json& doc )
{
    raw_system raw;
    raw.sigma = texts( field( doc, "sigma" ), "sigma" );
    raw.states = texts( field( doc, "states" ), "states" );
    raw.actions = table( field( doc, "actions" ), "actions" );
    const auto& ts = field( doc, "transitions" );
    if ( !ts.is_array() )
        throw input_error( "transitions must be a list" );
    for ( const auto& t : ts )
    {
        if ( !t.is_array() || t.size() != 3 )
            throw input_error( "a transition must be [source, [actions], target]" );
        raw.transitions.push_back( { text( t[ 0 ], "transition source" ), texts( t[ 1 ], "transition body" ),
                                     text( t[ 2 ], "transition target" ) } );
    }
    return raw;
}

system_ptr system_from_json( const json& doc ) { return share( make_system( raw_from_json( doc ) ) ); }

json to_json( const raw_system& raw )
{
    json doc;
    doc[ "sigma" ] = sorted( raw.sigma );
    doc[ "states" ] = sorted( raw.states );
    doc[ "actions" ] = raw.actions;
    doc[ "transitions" ] = transitions_doc( raw.transitions );
    return doc;
}

json to_json( const wts& x ) { return to_json( x.to_raw() ); }

pointed_wts pointed_from_json( const json& doc )
{
    return make_pointed( system_from_json( doc ), text( field( doc, "point" ), "point" ) );
}

json to_json( const pointed_wts& p )
{
    auto doc = to_json( p.system() );
    doc[ "point" ] = p.point_id();
    return doc;
}

morphism morphism_from_json( const json& doc )
{
    auto f = make_morphism( system_from_json( field( doc, "source" ) ), system_from_json( field( doc, "target" ) ),
                            table( field( doc, "stateMap" ), "stateMap" ),
                            table( field( doc, "actionMap" ), "actionMap" ) );
    auto report = is_morphism( f );
    if ( !report.ok() )
        throw input_error( "not a morphism: " + report.violations.front().detail );
    return f;
}

json to_json( const morphism& f )
{
    json doc;
    doc[ "source" ] = to_json( f.source() );
    doc[ "target" ] = to_json( f.target() );
    doc[ "stateMap" ] = named_map( f.source().states(), f.target().states(), f.state_map() );
    doc[ "actionMap" ] = named_map( f.source().actions(), f.target().actions(), f.action_map() );
    return doc;
}

pointed_morphism pointed_morphism_from_json( const json& doc )
{
    auto f = morphism_from_json( doc );
    auto p = make_pointed( f.source_ptr(), text( field( field( doc, "source" ), "point" ), "point" ) );
    auto q = make_pointed( f.target_ptr(), text( field( field( doc, "target" ), "point" ), "point" ) );
    return make_pointed_morphism( p, q, f );
}

json to_json( const pointed_morphism& f )
{
    auto doc = to_json( f.underlying );
    doc[ "source" ][ "point" ] = f.source.point_id();
    doc[ "target" ][ "point" ] = f.target.point_id();
    return doc;
}

std::vector<morphism> arrows_from_json( const json& doc )
{
    const auto& list = doc.is_object() ? field( doc, "arrows" ) : doc;
    if ( !list.is_array() )
        throw input_error( "an arrow family must be a list of morphisms" );
    std::vector<morphism> out;
    for ( const auto& a : list )
        out.push_back( morphism_from_json( a ) );
    return out;
}

json to_json( const std::vector<morphism>& arrows )
{
    json out = json::array();
    for ( const auto& a : arrows )
        out.push_back( to_json( a ) );
    return out;
}

json to_json( const transition& t, const wts& x ) { return transition_doc( x.named( t ) ); }

json to_json( const validation_report& report )
{
    json out = json::array();
    for ( const auto& v : report.violations )
    {
        json entry{ { "rule", v.rule }, { "detail", v.detail } };
        if ( v.patching )
        {
            const auto& w = *v.patching;
            entry[ "patching" ] = { { "alpha", w.alpha }, { "beta", w.beta }, { "nu1", w.nu1 }, { "nu2", w.nu2 },
                                    { "body", w.body }, { "p", w.p }, { "q", w.q } };
        }
        if ( !v.transitions.empty() )
            entry[ "transitions" ] = transitions_doc( v.transitions );
        out.push_back( std::move( entry ) );
    }
    return out;
}

json load( const std::filesystem::path& path )
{
    std::ifstream in( path );
    if ( !in )
        throw input_error( "cannot read " + path.string() );
    try
    {
        return json::parse( in );
    }
    catch ( const json::parse_error& e )
    {
        throw input_error( path.string() + ": " + e.what() );
    }
}

std::string dump( const json& doc ) { return doc.dump( 2 ) + "\n"; }

} // namespace wtslab::io
