#include "cli.hpp"

#include "wtslab/fixtures.hpp"
#include "wtslab/homotopy.hpp"
#include "wtslab/io.hpp"
#include "wtslab/starshaped.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

namespace wtslab::cli
{

namespace
{

using io::json;

struct options
{
    std::vector<std::string> inputs;
    std::size_t depth = 1;
    std::optional<std::size_t> budget;
    std::optional<std::size_t> cone_dim;
    std::optional<std::size_t> max_length;
    std::vector<std::string> tests;
    std::string generating;
    std::string seeds;
    std::optional<int> eps;
    std::string dedup = "exact";
    bool inverse = false;
};

struct outcome
{
    json result;
    bool verdict = true;
};

struct context
{
    const options& opt;
    search_limits limits;

    const std::string& input( std::size_t i ) const
    {
        if ( i >= opt.inputs.size() )
            throw input_error( "missing input document #" + std::to_string( i + 1 ) );
        return opt.inputs[ i ];
    }
    void expect_inputs( std::size_t n ) const
    {
        if ( opt.inputs.size() != n )
            throw input_error( "expected " + std::to_string( n ) + " input document(s), got " +
                               std::to_string( opt.inputs.size() ) );
    }

    system_ptr system( std::size_t i ) const { return io::system_from_json( io::load( input( i ) ) ); }
    pointed_wts pointed( std::size_t i ) const { return io::pointed_from_json( io::load( input( i ) ) ); }
    morphism map( std::size_t i ) const { return io::morphism_from_json( io::load( input( i ) ) ); }
    pointed_morphism pointed_map( std::size_t i ) const
    {
        return io::pointed_morphism_from_json( io::load( input( i ) ) );
    }

    std::vector<morphism> generating() const
    {
        if ( opt.generating.empty() )
            return fixtures::sample_generating_cofibrations();
        return io::arrows_from_json( io::load( opt.generating ) );
    }
    std::vector<morphism> seeds() const
    {
        if ( opt.seeds.empty() )
            return {};
        return io::arrows_from_json( io::load( opt.seeds ) );
    }
    std::vector<system_ptr> tests() const
    {
        std::vector<system_ptr> out;
        if ( opt.tests.empty() )
            for ( const auto& n : fixtures::all() )
                out.push_back( n.system );
        for ( const auto& path : opt.tests )
            out.push_back( io::system_from_json( io::load( path ) ) );
        return out;
    }
};

// Maps whose source and target are known from the surrounding document.
json map_only( const morphism& f )
{
    auto doc = io::to_json( f );
    doc.erase( "source" );
    doc.erase( "target" );
    return doc;
}

json id_list( const wts& x, const std::vector<std::size_t>& states )
{
    json out = json::array();
    for ( auto s : states )
        out.push_back( x.states()[ s ] );
    return out;
}

json pushout_doc( const pushout_result& p )
{
    return { { "object", io::to_json( *p.object ) }, { "leg1", map_only( p.leg1 ) }, { "leg2", map_only( p.leg2 ) } };
}

json witness_doc( const homotopy_witness& w )
{
    json path = json::array(), steps = json::array();
    for ( const auto& m : w.path )
        path.push_back( map_only( m ) );
    for ( std::size_t k = 0; k < w.steps.size(); ++k )
        steps.push_back( { { "homotopy", io::to_json( w.steps[ k ] ) }, { "reversed", bool( w.reversed[ k ] ) } } );
    return { { "length", w.length() }, { "path", path }, { "steps", steps } };
}

json pointed_cylinder_doc( const pointed_cylinder& c )
{
    return { { "object", io::to_json( c.object ) },      { "p", map_only( c.p ) },
             { "gamma0", map_only( c.gamma0 ) },         { "gamma1", map_only( c.gamma1 ) },
             { "gamma", io::to_json( c.gamma ) },        { "sigma", map_only( c.sigma ) } };
}

using handler = std::function<outcome( const context& )>;

struct verb
{
    std::string name;
    std::string help;
    handler run;
};

outcome verify_lemma( const context& c )
{
    const auto& lemma = c.input( 0 );
    if ( lemma == "l1" )
    {
        auto r = check_l1( c.map( 1 ), c.pointed( 2 ), c.limits );
        return { { { "pointedSide", r.pointed_side }, { "underlyingSide", r.underlying_side } }, r.holds() };
    }
    if ( lemma == "l0" )
    {
        auto r = check_l0( c.pointed( 1 ), c.pointed( 2 ), c.limits );
        return { { { "left", r.left }, { "right", r.right }, { "bijective", r.bijective } }, r.holds() };
    }
    if ( lemma == "l2" )
    {
        auto arrows = io::arrows_from_json( io::load( c.input( 1 ) ) );
        auto r = check_l2( arrows, c.pointed( 2 ), c.limits );
        return { { { "pointedSide", r.pointed_side }, { "underlyingSide", r.underlying_side } }, r.holds() };
    }
    if ( lemma == "l3" )
    {
        auto iso = check_l3( c.system( 1 ), c.limits );
        return { { { "isomorphism", iso ? io::to_json( *iso ) : json( nullptr ) } }, iso.has_value() };
    }
    if ( lemma == "l4" )
    {
        auto r = check_l4( c.pointed( 1 ) );
        return { { { "amalgamated", r.amalgamated }, { "trivial", r.trivial } }, r.holds() };
    }
    if ( lemma == "l0bis" )
    {
        bool epic = check_gamma_point_epic();
        bool square = check_l0bis( c.pointed( 1 ) );
        return { { { "gammaPointEpic", epic }, { "pushout", square } }, epic && square };
    }
    if ( lemma == "far-fetched" )
    {
        auto cp = cyl_pt( c.pointed( 1 ) );
        auto s = split_section( cp.p, c.limits );
        bool id = s && s->state_map() == identity( s->source_ptr() ).state_map() &&
                  s->action_map() == identity( s->source_ptr() ).action_map();
        return { { { "section", s ? io::to_json( *s ) : json( nullptr ) }, { "identity", id } }, s.has_value() };
    }
    throw input_error( "unknown lemma '" + lemma + "' (l0, l1, l2, l3, l4, l0bis, far-fetched)" );
}

std::vector<verb> table()
{
    std::vector<verb> v;
    v.push_back( { "validate", "check a system document against the axioms", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto report = validate( io::raw_from_json( io::load( c.input( 0 ) ) ) );
                      return outcome{ { { "violations", io::to_json( report ) } }, report.ok() };
                  } } );
    v.push_back( { "close", "patching closure of a system document", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto closed = patching_closure( io::raw_from_json( io::load( c.input( 0 ) ) ) );
                      return outcome{ { { "object", io::to_json( closed ) } } };
                  } } );
    v.push_back( { "pushout", "pushout of two maps with a common source", []( const context& c ) {
                      c.expect_inputs( 2 );
                      return outcome{ pushout_doc( pushout( c.map( 0 ), c.map( 1 ) ) ) };
                  } } );
    v.push_back( { "coproduct", "disjoint union of two systems", []( const context& c ) {
                      c.expect_inputs( 2 );
                      auto r = coproduct( c.system( 0 ), c.system( 1 ) );
                      return outcome{ { { "object", io::to_json( *r.object ) },
                                        { "in1", map_only( r.in1 ) },
                                        { "in2", map_only( r.in2 ) } } };
                  } } );
    v.push_back( { "cyl", "cylinder with its structure maps", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto p = cyl( c.system( 0 ) );
                      return outcome{ { { "object", io::to_json( *p.cyl_object ) },
                                        { "gamma0", map_only( p.gamma0 ) },
                                        { "gamma1", map_only( p.gamma1 ) },
                                        { "gamma", io::to_json( p.gamma ) },
                                        { "sigma", map_only( p.sigma ) } } };
                  } } );
    v.push_back( { "cocyl", "path object with its projections", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto p = cocyl( c.system( 0 ) );
                      return outcome{ { { "object", io::to_json( *p.path_object ) },
                                        { "pi0", map_only( p.pi0 ) },
                                        { "pi1", map_only( p.pi1 ) } } };
                  } } );
    v.push_back( { "transpose", "X and H : Cyl X -> Y give X -> Cocyl Y (--inverse: Y and g give Cyl X -> Y)",
                   []( const context& c ) {
                       c.expect_inputs( 2 );
                       auto m = c.opt.inverse ? untranspose( c.system( 0 ), c.map( 1 ) )
                                              : transpose( c.system( 0 ), c.map( 1 ) );
                       return outcome{ { { "map", io::to_json( m ) } } };
                   } } );
    v.push_back( { "star", "corner map f * gamma (or f * gamma^eps with --eps)", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto f = c.map( 0 );
                      auto m = c.opt.eps ? star_eps( f, *c.opt.eps ) : star( f );
                      return outcome{ { { "map", io::to_json( m ) }, { "cofibration", is_cofibration( m ) } } };
                  } } );
    v.push_back( { "lambda", "stages 0..depth of the anodyne family", []( const context& c ) {
                      c.expect_inputs( 0 );
                      auto mode = c.opt.dedup == "iso" ? dedup_mode::isomorphism : dedup_mode::exact;
                      json stages = json::array();
                      for ( const auto& s : lambda_up_to( c.generating(), c.seeds(), c.opt.depth, mode, c.limits ) )
                          stages.push_back( { { "stage", s.stage }, { "arrows", io::to_json( s.arrows ) } } );
                      return outcome{ { { "stages", stages } } };
                  } } );
    v.push_back( { "lift", "lift in the square F G TOP BOTTOM", []( const context& c ) {
                      c.expect_inputs( 4 );
                      auto r = has_lift( c.map( 0 ), c.map( 1 ), c.map( 2 ), c.map( 3 ), c.limits );
                      return outcome{ { { "lift", r.lift ? map_only( *r.lift ) : json( nullptr ) } },
                                      r.lift.has_value() };
                  } } );
    v.push_back( { "injective", "T is injective for every arrow of a family", []( const context& c ) {
                      c.expect_inputs( 2 );
                      auto arrows = io::arrows_from_json( io::load( c.input( 1 ) ) );
                      auto r = is_injective( c.system( 0 ), arrows, c.limits );
                      json doc{ { "holds", r.holds } };
                      if ( !r.holds )
                          doc[ "counterexample" ] = { { "arrow", *r.arrow_index },
                                                      { "map", map_only( *r.unextended ) } };
                      return outcome{ doc, r.holds };
                  } } );
    v.push_back( { "fibrant", "injectivity against stages 0..depth", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto r = is_fibrant_up_to( c.system( 0 ), c.generating(), c.seeds(), c.opt.depth, c.limits );
                      json doc{ { "holds", r.holds }, { "depth", c.opt.depth } };
                      if ( !r.holds )
                          doc[ "counterexample" ] = { { "arrow", *r.arrow_index },
                                                      { "map", map_only( *r.unextended ) } };
                      return outcome{ doc, r.holds };
                  } } );
    v.push_back( { "homotopic", "homotopy chain between two parallel maps", []( const context& c ) {
                      c.expect_inputs( 2 );
                      auto w = homotopic( c.map( 0 ), c.map( 1 ), c.limits );
                      return outcome{ { { "witness", w ? witness_doc( *w ) : json( nullptr ) } }, w.has_value() };
                  } } );
    v.push_back( { "classes", "homotopy classes of maps X -> T", []( const context& c ) {
                      c.expect_inputs( 2 );
                      auto p = homotopy_classes( c.system( 0 ), c.system( 1 ), c.limits );
                      json classes = json::array();
                      for ( std::size_t k = 0; k < p.class_count(); ++k )
                      {
                          json members = json::array();
                          for ( std::size_t i = 0; i < p.maps.size(); ++i )
                              if ( p.class_of[ i ] == k )
                                  members.push_back( map_only( p.maps[ i ] ) );
                          classes.push_back( members );
                      }
                      return outcome{ { { "count", p.class_count() }, { "classes", classes } } };
                  } } );
    v.push_back( { "weq", "weak equivalence relative to test objects", []( const context& c ) {
                      c.expect_inputs( 1 );
                      fibrancy_context fib{ c.generating(), c.seeds(), c.opt.depth };
                      auto r = is_weak_equiv_against( c.map( 0 ), c.tests(), c.limits, &fib );
                      json tests = json::array();
                      for ( const auto& t : r.tests )
                          tests.push_back( { { "test", io::to_json( *t.test ) },
                                             { "targetClasses", t.target_classes },
                                             { "sourceClasses", t.source_classes },
                                             { "wellDefined", t.well_defined },
                                             { "injective", t.injective },
                                             { "surjective", t.surjective } } );
                      return outcome{ { { "tests", tests }, { "warnings", r.warnings } }, r.holds };
                  } } );
    v.push_back( { "point-validate", "check a pointed system document", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto doc = io::load( c.input( 0 ) );
                      auto report = validate( io::raw_from_json( doc ) );
                      bool point_ok = false;
                      if ( report.ok() )
                          point_ok = doc.contains( "point" ) && doc[ "point" ].is_string() &&
                                     std::ranges::count( io::raw_from_json( doc ).states,
                                                         doc[ "point" ].get<std::string>() ) == 1;
                      return outcome{ { { "violations", io::to_json( report ) }, { "pointIsState", point_ok } },
                                      report.ok() && point_ok };
                  } } );
    v.push_back( { "point-rho", "free pointing PT + X", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto x = c.system( 0 );
                      return outcome{ { { "object", io::to_json( rho( x ) ) }, { "unit", map_only( rho_unit( x ) ) } } };
                  } } );
    v.push_back( { "point-omega", "underlying system", []( const context& c ) {
                      c.expect_inputs( 1 );
                      return outcome{ { { "object", io::to_json( *omega( c.pointed( 0 ) ) ) } } };
                  } } );
    v.push_back( { "point-coproduct", "coproduct in the pointed category", []( const context& c ) {
                      c.expect_inputs( 2 );
                      auto r = pointed_coproduct( c.pointed( 0 ), c.pointed( 1 ) );
                      return outcome{ { { "object", io::to_json( r.object ) },
                                        { "leg1", map_only( r.square.leg1 ) },
                                        { "leg2", map_only( r.square.leg2 ) } } };
                  } } );
    v.push_back( { "point-cyl", "pointed cylinder with its structure maps", []( const context& c ) {
                      c.expect_inputs( 1 );
                      return outcome{ pointed_cylinder_doc( cyl_pt( c.pointed( 0 ) ) ) };
                  } } );
    v.push_back( { "point-cocyl", "pointed path object", []( const context& c ) {
                      c.expect_inputs( 1 );
                      return outcome{ { { "object", io::to_json( cocyl_pt( c.pointed( 0 ) ) ) } } };
                  } } );
    v.push_back( { "point-star", "pointed corner map f * gamma (or f * gamma^eps)", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto f = c.pointed_map( 0 );
                      auto m = c.opt.eps ? pointed_star_eps( f, *c.opt.eps ) : pointed_star( f );
                      return outcome{ { { "map", io::to_json( m ) },
                                        { "cofibration", is_cofibration( m.underlying ) } } };
                  } } );
    v.push_back( { "point-injective", "P against rho of every arrow of a family", []( const context& c ) {
                      c.expect_inputs( 2 );
                      auto arrows = io::arrows_from_json( io::load( c.input( 1 ) ) );
                      auto r = check_l2( arrows, c.pointed( 0 ), c.limits );
                      return outcome{ { { "pointedSide", r.pointed_side }, { "underlyingSide", r.underlying_side } },
                                      r.pointed_side };
                  } } );
    v.push_back( { "reach", "states reachable from the point, with witness paths", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto p = c.pointed( 0 );
                      auto r = reachable_states( p );
                      json witness = json::object();
                      for ( auto s : r.states() )
                      {
                          json path = json::array();
                          for ( const auto& t : *r.witness[ s ] )
                              path.push_back( io::to_json( t, p.system() ) );
                          witness[ p.system().states()[ s ] ] = path;
                      }
                      return outcome{ { { "reachable", id_list( p.system(), r.states() ) }, { "witness", witness } } };
                  } } );
    v.push_back( { "star-check", "every state is reachable from the point", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto p = c.pointed( 0 );
                      auto r = reachable_states( p );
                      std::vector<std::size_t> missing;
                      for ( std::size_t s = 0; s < r.reachable.size(); ++s )
                          if ( !r.reachable[ s ] )
                              missing.push_back( s );
                      return outcome{ { { "unreachable", id_list( p.system(), missing ) } }, missing.empty() };
                  } } );
    v.push_back( { "coreflect", "largest star-shaped subsystem at the point", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto r = coreflect( c.pointed( 0 ) );
                      return outcome{ { { "object", io::to_json( r.object ) },
                                        { "inclusion", map_only( r.inclusion.underlying ) } } };
                  } } );
    v.push_back( { "cone-check", "injectivity for the reachability cone", []( const context& c ) {
                      c.expect_inputs( 1 );
                      auto p = c.pointed( 0 );
                      auto length = c.opt.max_length.value_or( p.system().state_count() );
                      auto r = cone_injectivity( p, p.system().sigma(), length, c.opt.cone_dim, c.limits );
                      json doc{ { "holds", r.holds },
                                { "legs", r.legs },
                                { "maxLength", length },
                                { "depthLimited", r.depth_limited },
                                { "starShaped", is_star_shaped( p ) } };
                      doc[ "witness" ] = r.witness ? json( p.system().states()[ *r.witness ] ) : json( nullptr );
                      return outcome{ doc, r.holds };
                  } } );
    v.push_back( { "verify-lemma", "LEMMA INPUTS...: l0 P Q | l1 S P | l2 ARROWS P | l3 A | l4 P | l0bis P | "
                                   "far-fetched P",
                   verify_lemma } );
    return v;
}

std::optional<std::size_t> budget_from_env()
{
    if ( const char* v = std::getenv( "WTSLAB_BUDGET" ) )
    {
        try
        {
            return std::stoull( v );
        }
        catch ( const std::exception& )
        {
            throw input_error( "WTSLAB_BUDGET must be a number" );
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<std::string> verbs()
{
    std::vector<std::string> out;
    for ( const auto& v : table() )
        out.push_back( v.name );
    return out;
}

int run( const std::vector<std::string>& args, std::ostream& out, std::ostream& err )
{
    options opt;
    CLI::App app{ "Finite computations with weak transition systems", "wtslab" };
    app.require_subcommand( 1 );
    auto verbs = table();
    std::vector<std::pair<CLI::App*, const verb*>> subs;
    for ( const auto& v : verbs )
    {
        auto* sub = app.add_subcommand( v.name, v.help );
        sub->add_option( "inputs", opt.inputs, "input documents" );
        sub->add_option( "--depth", opt.depth, "anodyne stage depth" );
        sub->add_option( "--budget", opt.budget, "search step budget (default: $WTSLAB_BUDGET)" );
        sub->add_option( "--cone-dim", opt.cone_dim, "largest step dimension of cone legs" );
        sub->add_option( "--max-length", opt.max_length, "longest cone leg (default: number of states)" );
        sub->add_option( "--tests", opt.tests, "test object documents" );
        sub->add_option( "--generating", opt.generating, "generating cofibrations (default: shipped sample)" );
        sub->add_option( "--seeds", opt.seeds, "anodyne seed arrows" );
        sub->add_option( "--eps", opt.eps, "end of the cylinder, 0 or 1" )->check( CLI::IsMember( { 0, 1 } ) );
        sub->add_option( "--dedup", opt.dedup, "arrow deduplication" )->check( CLI::IsMember( { "exact", "iso" } ) );
        sub->add_flag( "--inverse", opt.inverse, "inverse transpose" );
        subs.emplace_back( sub, &v );
    }

    std::vector<const char*> argv{ "wtslab" };
    for ( const auto& a : args )
        argv.push_back( a.c_str() );
    try
    {
        app.parse( static_cast<int>( argv.size() ), argv.data() );
    }
    catch ( const CLI::CallForHelp& )
    {
        out << app.help();
        return success;
    }
    catch ( const CLI::ParseError& e )
    {
        err << e.what() << "\n";
        return bad_input;
    }

    const verb* chosen = nullptr;
    for ( auto [ sub, v ] : subs )
        if ( sub->parsed() )
            chosen = v;

    try
    {
        context ctx{ opt, {} };
        if ( auto b = opt.budget ? opt.budget : budget_from_env() )
            ctx.limits.max_steps = *b;
        auto r = chosen->run( ctx );
        json doc{ { "verb", chosen->name }, { "verdict", r.verdict }, { "result", r.result } };
        out << io::dump( doc );
        return r.verdict ? success : negative;
    }
    catch ( const input_error& e )
    {
        err << "input error: " << e.what() << "\n";
        return bad_input;
    }
    catch ( const budget_exceeded& e )
    {
        err << "budget exhausted: " << e.what() << "\n";
        return out_of_budget;
    }
}

} // namespace wtslab::cli
