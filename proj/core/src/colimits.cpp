#include "wtslab/colimits.hpp"

#include "wtslab/fixtures.hpp"

#include <cstdint>
#include <numeric>

namespace wtslab
{

namespace
{

class union_find
{
public:
    explicit union_find( std::size_t n ) : _parent( n ) { std::iota( _parent.begin(), _parent.end(), 0 ); }

    std::size_t find( std::size_t i )
    {
        while ( _parent[ i ] != i )
            i = _parent[ i ] = _parent[ _parent[ i ] ];
        return i;
    }

    // The smaller index always becomes the root, so roots are least members.
    void unite( std::size_t a, std::size_t b )
    {
        a = find( a );
        b = find( b );
        if ( a == b )
            return;
        if ( b < a )
            std::swap( a, b );
        _parent[ b ] = a;
    }

private:
    std::vector<std::size_t> _parent;
};

// Quotient of left + right by the span relation; returns, for every element
// of the disjoint union, the identifier of its class in the result.
std::vector<std::string> glue( const std::vector<std::string>& left, const std::vector<std::string>& right,
                               const std::vector<std::pair<std::size_t, std::size_t>>& pairs )
{
    const auto nl = left.size();
    union_find uf( nl + right.size() );
    for ( auto [ l, r ] : pairs )
        uf.unite( l, nl + r );

    std::vector<std::string> rep_name( nl + right.size() );
    std::set<std::string> used;
    for ( std::size_t i = 0; i < nl; ++i )
        if ( uf.find( i ) == i )
        {
            rep_name[ i ] = left[ i ];
            used.insert( left[ i ] );
        }
    for ( std::size_t j = 0; j < right.size(); ++j )
        if ( uf.find( nl + j ) == nl + j )
        {
            auto name = right[ j ];
            while ( used.contains( name ) )
                name += "'";
            used.insert( name );
            rep_name[ nl + j ] = name;
        }

    std::vector<std::string> out( nl + right.size() );
    for ( std::size_t i = 0; i < out.size(); ++i )
        out[ i ] = rep_name[ uf.find( i ) ];
    return out;
}

pushout_result compute_pushout( const morphism& f, const morphism& g, bool close )
{
    if ( !same_system( f.source_ptr(), g.source_ptr() ) )
        throw input_error( "pushout: the two maps must share their source" );
    for ( const auto* m : { &f, &g } )
    {
        auto report = is_morphism( *m );
        if ( !report.ok() )
            throw input_error( "pushout: " + report.violations.front().detail );
    }

    const auto& a = f.source();
    const auto& x = f.target();
    const auto& y = g.target();

    std::vector<std::pair<std::size_t, std::size_t>> state_pairs, action_pairs;
    for ( std::size_t s = 0; s < a.state_count(); ++s )
        state_pairs.emplace_back( f.state( s ), g.state( s ) );
    for ( std::size_t u = 0; u < a.action_count(); ++u )
        action_pairs.emplace_back( f.action( u ), g.action( u ) );

    auto state_names = glue( x.states(), y.states(), state_pairs );
    auto action_names = glue( x.actions(), y.actions(), action_pairs );

    raw_system raw;
    std::set<std::string> sigma( x.sigma().begin(), x.sigma().end() );
    sigma.insert( y.sigma().begin(), y.sigma().end() );
    raw.sigma.assign( sigma.begin(), sigma.end() );
    std::set<std::string> states( state_names.begin(), state_names.end() );
    raw.states.assign( states.begin(), states.end() );
    for ( std::size_t i = 0; i < x.action_count(); ++i )
        raw.actions.emplace( action_names[ i ], x.label( i ) );
    for ( std::size_t j = 0; j < y.action_count(); ++j )
        raw.actions.emplace( action_names[ x.action_count() + j ], y.label( j ) );

    auto image = [ & ]( const transition& t, std::size_t state_offset, std::size_t action_offset ) {
        raw_transition r{ state_names[ state_offset + t.source ], {}, state_names[ state_offset + t.target ] };
        for ( auto u : t.body )
            r.body.push_back( action_names[ action_offset + u ] );
        return r;
    };
    for ( const auto& t : x.transitions() )
        raw.transitions.push_back( image( t, 0, 0 ) );
    for ( const auto& t : y.transitions() )
        raw.transitions.push_back( image( t, x.state_count(), x.action_count() ) );

    auto object = wts::from_raw( raw );
    if ( close )
        object = patching_closure( object );
    auto p = share( std::move( object ) );

    auto leg = [ & ]( const system_ptr& side, std::size_t state_offset, std::size_t action_offset ) {
        std::vector<std::size_t> sm( side->state_count() ), am( side->action_count() );
        for ( std::size_t s = 0; s < sm.size(); ++s )
            sm[ s ] = p->state( state_names[ state_offset + s ] );
        for ( std::size_t u = 0; u < am.size(); ++u )
            am[ u ] = p->action( action_names[ action_offset + u ] );
        return morphism( side, p, std::move( sm ), std::move( am ) );
    };
    auto leg1 = leg( f.target_ptr(), 0, 0 );
    auto leg2 = leg( g.target_ptr(), x.state_count(), x.action_count() );
    auto apex = compose( leg1, f );
    return { p, f, g, std::move( leg1 ), std::move( leg2 ), std::move( apex ) };
}

// Preimage representatives of every element of `object` under two jointly
// surjective maps; returns (from_first, index) pairs.
struct preimages
{
    std::vector<std::pair<bool, std::size_t>> states;
    std::vector<std::pair<bool, std::size_t>> actions;
};

preimages jointly_surjective_preimages( const morphism& m1, const morphism& m2 )
{
    const auto& object = m1.target();
    preimages out;
    out.states.assign( object.state_count(), { false, SIZE_MAX } );
    out.actions.assign( object.action_count(), { false, SIZE_MAX } );
    for ( std::size_t s = m2.source().state_count(); s-- > 0; )
        out.states[ m2.state( s ) ] = { false, s };
    for ( std::size_t s = m1.source().state_count(); s-- > 0; )
        out.states[ m1.state( s ) ] = { true, s };
    for ( std::size_t u = m2.source().action_count(); u-- > 0; )
        out.actions[ m2.action( u ) ] = { false, u };
    for ( std::size_t u = m1.source().action_count(); u-- > 0; )
        out.actions[ m1.action( u ) ] = { true, u };
    for ( const auto& [ first, i ] : out.states )
        if ( i == SIZE_MAX )
            throw input_error( "legs are not jointly surjective on states" );
    for ( const auto& [ first, i ] : out.actions )
        if ( i == SIZE_MAX )
            throw input_error( "legs are not jointly surjective on actions" );
    return out;
}

morphism mediate( const morphism& leg1, const morphism& leg2, const morphism& h1, const morphism& h2 )
{
    if ( !same_system( h1.source_ptr(), leg1.source_ptr() ) || !same_system( h2.source_ptr(), leg2.source_ptr() ) ||
         !same_system( h1.target_ptr(), h2.target_ptr() ) )
        throw input_error( "cocone maps do not match the colimit legs" );
    auto pre = jointly_surjective_preimages( leg1, leg2 );
    std::vector<std::size_t> sm( pre.states.size() ), am( pre.actions.size() );
    for ( std::size_t s = 0; s < sm.size(); ++s )
    {
        auto [ first, i ] = pre.states[ s ];
        sm[ s ] = first ? h1.state( i ) : h2.state( i );
    }
    for ( std::size_t u = 0; u < am.size(); ++u )
    {
        auto [ first, i ] = pre.actions[ u ];
        am[ u ] = first ? h1.action( i ) : h2.action( i );
    }
    morphism m( leg1.target_ptr(), h1.target_ptr(), std::move( sm ), std::move( am ) );
    if ( !( compose( m, leg1 ) == h1 ) || !( compose( m, leg2 ) == h2 ) )
        throw input_error( "maps do not form a cocone" );
    return m;
}

} // namespace

pushout_result pushout( const morphism& f, const morphism& g ) { return compute_pushout( f, g, true ); }

pushout_result pushout_without_closure( const morphism& f, const morphism& g )
{
    return compute_pushout( f, g, false );
}

coproduct_result coproduct( const system_ptr& x, const system_ptr& y )
{
    const auto& e = fixtures::empty();
    auto p = pushout( morphism( e, x, {}, {} ), morphism( e, y, {}, {} ) );
    return { p.object, p.leg1, p.leg2 };
}

morphism induced_map( const pushout_result& p, const morphism& h1, const morphism& h2 )
{
    if ( !( compose( h1, p.span_left ) == compose( h2, p.span_right ) ) )
        throw input_error( "maps do not form a cocone on the span" );
    return mediate( p.leg1, p.leg2, h1, h2 );
}

morphism copair( const coproduct_result& c, const morphism& h1, const morphism& h2 )
{
    return mediate( c.in1, c.in2, h1, h2 );
}

morphism coproduct_map( const morphism& f, const morphism& g )
{
    auto from = coproduct( f.source_ptr(), g.source_ptr() );
    auto to = coproduct( f.target_ptr(), g.target_ptr() );
    return copair( from, compose( to.in1, f ), compose( to.in2, g ) );
}

bool verify_pushout_universal( const pushout_result& p, const std::vector<system_ptr>& tests,
                               const search_limits& limits )
{
    if ( !validate( *p.object ).ok() )
        return false;
    if ( !is_morphism( p.leg1 ).ok() || !is_morphism( p.leg2 ).ok() )
        return false;
    if ( !( compose( p.leg1, p.span_left ) == compose( p.leg2, p.span_right ) ) )
        return false;

    const auto& f = p.span_left;
    const auto& g = p.span_right;
    const auto& a = f.source();
    bool ok = true;
    for ( const auto& z : tests )
    {
        for ( const auto& h1 : enum_homs( f.target_ptr(), z, limits ) )
        {
            hom_search cocone( g.target_ptr(), z );
            for ( std::size_t s = 0; s < a.state_count(); ++s )
                cocone.fix_state( g.state( s ), h1.state( f.state( s ) ) );
            for ( std::size_t u = 0; u < a.action_count(); ++u )
                cocone.fix_action( g.action( u ), h1.action( f.action( u ) ) );
            cocone.for_each(
                [ & ]( const morphism& h2 ) {
                    hom_search mediating( p.object, z );
                    for ( std::size_t s = 0; s < p.leg1.source().state_count(); ++s )
                        mediating.fix_state( p.leg1.state( s ), h1.state( s ) );
                    for ( std::size_t u = 0; u < p.leg1.source().action_count(); ++u )
                        mediating.fix_action( p.leg1.action( u ), h1.action( u ) );
                    for ( std::size_t s = 0; s < p.leg2.source().state_count(); ++s )
                        mediating.fix_state( p.leg2.state( s ), h2.state( s ) );
                    for ( std::size_t u = 0; u < p.leg2.source().action_count(); ++u )
                        mediating.fix_action( p.leg2.action( u ), h2.action( u ) );
                    ok = mediating.count( 2, limits ) == 1;
                    return ok;
                },
                limits );
            if ( !ok )
                return false;
        }
    }
    return true;
}

std::vector<system_ptr> default_test_family( const pushout_result& p )
{
    std::vector<system_ptr> out;
    for ( const auto& [ name, x ] : fixtures::all() )
        out.push_back( x );
    out.push_back( p.span_left.target_ptr() );
    out.push_back( p.span_right.target_ptr() );
    out.push_back( p.object );
    return out;
}

} // namespace wtslab
