#include "wtslab/starshaped.hpp"

#include "wtslab/fixtures.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace wtslab
{

std::vector<std::size_t> reachability::states() const
{
    std::vector<std::size_t> out;
    for ( std::size_t s = 0; s < reachable.size(); ++s )
        if ( reachable[ s ] )
            out.push_back( s );
    return out;
}

bool reachability::all() const
{
    return std::ranges::all_of( reachable, []( bool b ) { return b; } );
}

reachability reachable_states( const pointed_wts& p )
{
    const auto& x = p.system();
    std::vector<std::vector<const transition*>> outgoing( x.state_count() );
    for ( const auto& t : x.transitions() )
        outgoing[ t.source ].push_back( &t );

    reachability r{ std::vector<bool>( x.state_count(), false ),
                    std::vector<std::optional<std::vector<transition>>>( x.state_count() ) };
    r.reachable[ p.point ] = true;
    r.witness[ p.point ] = std::vector<transition>{};
    std::deque<std::size_t> queue{ p.point };
    while ( !queue.empty() )
    {
        auto s = queue.front();
        queue.pop_front();
        for ( const auto* t : outgoing[ s ] )
        {
            if ( r.reachable[ t->target ] )
                continue;
            r.reachable[ t->target ] = true;
            auto path = *r.witness[ s ];
            path.push_back( *t );
            r.witness[ t->target ] = std::move( path );
            queue.push_back( t->target );
        }
    }
    return r;
}

bool is_star_shaped( const pointed_wts& p ) { return reachable_states( p ).all(); }

coreflection coreflect( const pointed_wts& p )
{
    const auto& x = p.system();
    auto r = reachable_states( p );
    raw_system raw;
    raw.sigma = x.sigma();
    for ( auto s : r.states() )
        raw.states.push_back( x.states()[ s ] );
    for ( std::size_t u = 0; u < x.action_count(); ++u )
        raw.actions.emplace( x.actions()[ u ], x.label( u ) );
    for ( const auto& t : x.transitions() )
        if ( r.reachable[ t.source ] )
            raw.transitions.push_back( x.named( t ) );

    auto object = make_pointed( share( make_system( raw ) ), p.point_id() );
    std::vector<std::size_t> states;
    for ( const auto& id : object.system().states() )
        states.push_back( x.state( id ) );
    std::vector<std::size_t> actions( x.action_count() );
    for ( std::size_t u = 0; u < actions.size(); ++u )
        actions[ u ] = u;
    auto inclusion = make_pointed_morphism( object, p, morphism( object.base, p.base, states, actions ) );
    return { std::move( object ), std::move( inclusion ) };
}

factorization_report check_coreflection_universal( const pointed_wts& q, const pointed_wts& p,
                                                   const search_limits& limits )
{
    auto c = coreflect( p );
    const auto& inc = c.inclusion.underlying;
    factorization_report report;
    for ( const auto& h : enum_pointed_homs( q, p, limits ) )
    {
        ++report.maps;
        // k with inc k = h: the images are forced, so count the candidates.
        hom_search k( q.base, c.object.base );
        for ( std::size_t s = 0; s < q.system().state_count(); ++s )
        {
            std::vector<std::size_t> pre;
            for ( std::size_t t = 0; t < c.object.system().state_count(); ++t )
                if ( inc.state( t ) == h.state( s ) )
                    pre.push_back( t );
            k.restrict_state( s, pre );
        }
        for ( std::size_t u = 0; u < q.system().action_count(); ++u )
            k.fix_action( u, inc.action( h.action( u ) ) );
        if ( k.count( 2, limits ) != 1 )
            report.unique = false;
    }
    return report;
}

namespace
{

system_ptr cone_domain()
{
    static const system_ptr d = share( wts::from_raw( { { fixtures::label }, { cone_start, cone_end }, {}, {} } ) );
    return d;
}

// Label multisets of size 1 ... d, in lexicographic order.
std::vector<std::vector<std::string>> steps( const std::vector<std::string>& sigma, std::size_t d )
{
    std::vector<std::vector<std::string>> out;
    std::vector<std::string> current;
    std::function<void( std::size_t )> grow = [ & ]( std::size_t from ) {
        if ( !current.empty() )
            out.push_back( current );
        if ( current.size() == d )
            return;
        for ( std::size_t i = from; i < sigma.size(); ++i )
        {
            current.push_back( sigma[ i ] );
            grow( i );
            current.pop_back();
        }
    };
    grow( 0 );
    return out;
}

cone_leg path_leg( const std::vector<std::string>& sigma, const std::vector<std::vector<std::string>>& word )
{
    raw_system raw;
    raw.sigma = sigma;
    const auto k = word.size();
    auto node = [ & ]( std::size_t j ) -> std::string {
        if ( j == 0 )
            return cone_start;
        if ( j == k )
            return cone_end;
        return "p" + std::to_string( j );
    };
    for ( std::size_t j = 0; j <= k; ++j )
        raw.states.push_back( node( j ) );
    for ( std::size_t j = 0; j < k; ++j )
    {
        raw_transition t{ node( j ), {}, node( j + 1 ) };
        for ( std::size_t i = 0; i < word[ j ].size(); ++i )
        {
            auto id = "t" + std::to_string( j + 1 ) + "." + std::to_string( i + 1 );
            raw.actions.emplace( id, word[ j ][ i ] );
            t.body.push_back( id );
        }
        raw.transitions.push_back( std::move( t ) );
    }
    auto path = share( make_system( raw ) );
    auto map = make_morphism( cone_domain(), path, { { cone_start, cone_start }, { cone_end, cone_end } }, {} );
    return { std::move( map ), false, word };
}

} // namespace

std::vector<cone_leg> cone_maps( const std::vector<std::string>& sigma, std::size_t max_length,
                                 std::size_t max_dimension )
{
    std::vector<cone_leg> out;
    out.push_back( { make_morphism( cone_domain(), fixtures::pt(),
                                    { { cone_start, fixtures::basepoint }, { cone_end, fixtures::basepoint } }, {} ),
                     true,
                     {} } );
    auto choices = steps( sigma, max_dimension );
    std::vector<std::vector<std::string>> word;
    std::function<void( std::size_t )> extend = [ & ]( std::size_t remaining ) {
        if ( !word.empty() )
            out.push_back( path_leg( sigma, word ) );
        if ( remaining == 0 )
            return;
        for ( const auto& c : choices )
        {
            word.push_back( c );
            extend( remaining - 1 );
            word.pop_back();
        }
    };
    extend( max_length );
    // Shorter words first, then lexicographic.
    std::stable_sort( out.begin() + 1, out.end(),
                      []( const cone_leg& a, const cone_leg& b ) { return a.word.size() < b.word.size(); } );
    return out;
}

cone_report cone_injectivity( const pointed_wts& p, const std::vector<std::string>& sigma, std::size_t max_length,
                              std::optional<std::size_t> max_dimension, const search_limits& limits )
{
    auto d = max_dimension.value_or( std::max<std::size_t>( 1, p.system().max_dimension() ) );
    auto legs = cone_maps( sigma, max_length, d );
    cone_report report;
    report.legs = legs.size();

    const auto dom = cone_domain();
    const auto start = dom->state( cone_start );
    const auto end = dom->state( cone_end );
    for ( std::size_t a = 0; a < p.system().state_count(); ++a )
    {
        bool extended = false;
        for ( const auto& leg : legs )
        {
            hom_search ext( leg.map.target_ptr(), p.base );
            ext.fix_state( leg.map.state( start ), p.point );
            ext.fix_state( leg.map.state( end ), a );
            if ( ext.first( limits ) )
            {
                extended = true;
                break;
            }
        }
        if ( !extended )
        {
            report.holds = false;
            report.witness = a;
            report.depth_limited = reachable_states( p ).reachable[ a ];
            return report;
        }
    }
    return report;
}

bool check_cyl_preserves_star( const pointed_wts& p )
{
    if ( !is_star_shaped( p ) )
        return true;
    auto c = cyl_pt( p );
    auto over = reachable_states( c.object );
    if ( !over.all() )
        return false;
    auto under = reachable_states( p );
    std::vector<bool> hit( p.system().state_count(), false );
    for ( auto s : over.states() )
    {
        auto image = c.sigma.state( s );
        if ( !under.reachable[ image ] || hit[ image ] )
            return false;
        hit[ image ] = true;
    }
    return std::ranges::all_of( hit, []( bool b ) { return b; } );
}

pointed_wts random_star_shaped( std::mt19937_64& rng, const random_bounds& bounds )
{
    auto pick = [ & ]( std::size_t lo, std::size_t hi ) {
        return std::uniform_int_distribution<std::size_t>( lo, hi )( rng );
    };
    const auto n = pick( 1, bounds.max_states );
    const auto m = pick( n > 1 ? 1 : 0, bounds.max_actions );

    raw_system raw;
    raw.sigma = bounds.sigma;
    for ( std::size_t i = 0; i < n; ++i )
        raw.states.push_back( "s" + std::to_string( i ) );
    std::vector<std::string> actions;
    for ( std::size_t u = 0; u < m; ++u )
    {
        actions.push_back( "u" + std::to_string( u ) );
        raw.actions.emplace( actions.back(), bounds.sigma[ pick( 0, bounds.sigma.size() - 1 ) ] );
    }
    auto body = [ & ] {
        std::vector<std::string> out( pick( 1, bounds.max_body ) );
        for ( auto& a : out )
            a = actions[ pick( 0, m - 1 ) ];
        return out;
    };
    for ( std::size_t i = 1; i < n; ++i )
        raw.transitions.push_back( { raw.states[ pick( 0, i - 1 ) ], body(), raw.states[ i ] } );
    if ( m > 0 )
        for ( std::size_t k = pick( 0, bounds.extra_transitions ); k > 0; --k )
            raw.transitions.push_back( { raw.states[ pick( 0, n - 1 ) ], body(), raw.states[ pick( 0, n - 1 ) ] } );

    return make_pointed( share( patching_closure( raw ) ), "s0" );
}

std::vector<pointed_wts> small_pointed_family( std::size_t max_states, std::size_t max_actions,
                                               std::size_t max_dimension )
{
    std::vector<pointed_wts> out;
    for ( std::size_t n = 1; n <= max_states; ++n )
        for ( std::size_t m = 0; m <= max_actions; ++m )
        {
            // Candidate bodies: multisets of actions of size 1 ... max_dimension.
            std::vector<std::vector<std::size_t>> bodies;
            std::vector<std::size_t> current;
            std::function<void( std::size_t )> grow = [ & ]( std::size_t from ) {
                if ( !current.empty() )
                    bodies.push_back( current );
                if ( current.size() == max_dimension )
                    return;
                for ( std::size_t u = from; u < m; ++u )
                {
                    current.push_back( u );
                    grow( u );
                    current.pop_back();
                }
            };
            grow( 0 );

            std::vector<transition> candidates;
            for ( std::size_t a = 0; a < n; ++a )
                for ( const auto& b : bodies )
                    for ( std::size_t c = 0; c < n; ++c )
                        candidates.push_back( { a, b, c } );
            if ( candidates.size() > 24 )
                throw budget_exceeded( "small_pointed_family: too many candidate transitions" );

            // Relabelings fixing the point (state 0).
            std::vector<std::vector<std::size_t>> state_perms, action_perms;
            std::vector<std::size_t> sp( n ), ap( m );
            std::iota( sp.begin(), sp.end(), 0 );
            std::iota( ap.begin(), ap.end(), 0 );
            do
                state_perms.push_back( sp );
            while ( std::next_permutation( sp.begin() + 1, sp.end() ) );
            do
                action_perms.push_back( ap );
            while ( std::next_permutation( ap.begin(), ap.end() ) );

            std::set<std::vector<transition>> classes;
            for ( std::size_t mask = 0; mask < ( std::size_t{ 1 } << candidates.size() ); ++mask )
            {
                std::vector<transition> chosen;
                for ( std::size_t i = 0; i < candidates.size(); ++i )
                    if ( ( mask >> i ) & 1 )
                        chosen.push_back( candidates[ i ] );
                std::optional<std::vector<transition>> best;
                for ( const auto& s : state_perms )
                    for ( const auto& a : action_perms )
                    {
                        std::vector<transition> image;
                        for ( const auto& t : chosen )
                        {
                            transition r{ s[ t.source ], {}, s[ t.target ] };
                            for ( auto u : t.body )
                                r.body.push_back( a[ u ] );
                            std::sort( r.body.begin(), r.body.end() );
                            image.push_back( std::move( r ) );
                        }
                        std::sort( image.begin(), image.end() );
                        if ( !best || image < *best )
                            best = std::move( image );
                    }
                if ( !classes.insert( *best ).second )
                    continue;

                raw_system raw;
                raw.sigma = { fixtures::label };
                for ( std::size_t s = 0; s < n; ++s )
                    raw.states.push_back( std::to_string( s ) );
                for ( std::size_t u = 0; u < m; ++u )
                    raw.actions.emplace( std::string( 1, static_cast<char>( 'a' + u ) ), fixtures::label );
                for ( const auto& t : *best )
                {
                    raw_transition r{ std::to_string( t.source ), {}, std::to_string( t.target ) };
                    for ( auto u : t.body )
                        r.body.push_back( std::string( 1, static_cast<char>( 'a' + u ) ) );
                    raw.transitions.push_back( std::move( r ) );
                }
                out.push_back( make_pointed( share( make_system( raw ) ), "0" ) );
            }
        }
    return out;
}

} // namespace wtslab
