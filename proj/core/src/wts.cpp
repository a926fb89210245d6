#include "wtslab/wts.hpp"

#include <algorithm>
#include <sstream>

namespace wtslab
{

namespace
{

std::optional<std::size_t> index_of( const std::vector<std::string>& sorted, std::string_view id )
{
    auto it = std::lower_bound( sorted.begin(), sorted.end(), id );
    if ( it == sorted.end() || *it != id )
        return std::nullopt;
    return static_cast<std::size_t>( it - sorted.begin() );
}

std::string join( const std::vector<std::string>& items )
{
    std::string out;
    for ( std::size_t i = 0; i < items.size(); ++i )
    {
        if ( i )
            out += ",";
        out += items[ i ];
    }
    return out;
}

std::string describe( const raw_transition& t )
{
    return "(" + t.source + ",[" + join( t.body ) + "]," + t.target + ")";
}

void add_violation( validation_report& report, std::string rule, std::string detail,
                    std::vector<raw_transition> ts = {} )
{
    report.violations.push_back( { std::move( rule ), std::move( detail ), std::nullopt, std::move( ts ) } );
}

validation_report referential_report( const raw_system& raw )
{
    validation_report report;

    if ( raw.sigma.empty() )
        add_violation( report, "empty-label-set", "the label set must be nonempty" );

    std::set<std::string> sigma( raw.sigma.begin(), raw.sigma.end() );
    if ( sigma.size() != raw.sigma.size() )
        add_violation( report, "duplicate-label", "sigma lists a label twice" );

    std::set<std::string> states;
    for ( const auto& s : raw.states )
        if ( !states.insert( s ).second )
            add_violation( report, "duplicate-state", "state '" + s + "' is listed twice" );

    for ( const auto& [ a, l ] : raw.actions )
        if ( !sigma.contains( l ) )
            add_violation( report, "unknown-label", "action '" + a + "' carries label '" + l + "' not in sigma" );

    for ( const auto& t : raw.transitions )
    {
        if ( !states.contains( t.source ) )
            add_violation( report, "unknown-state", "source '" + t.source + "' of " + describe( t ), { t } );
        if ( !states.contains( t.target ) )
            add_violation( report, "unknown-state", "target '" + t.target + "' of " + describe( t ), { t } );
        if ( t.body.empty() )
            add_violation( report, "empty-body", "transition " + describe( t ) + " has no action", { t } );
        for ( const auto& u : t.body )
            if ( !raw.actions.contains( u ) )
                add_violation( report, "unknown-action", "action '" + u + "' of " + describe( t ), { t } );
    }
    return report;
}

// Enumerates the count vectors of all submultisets of a sorted multiset.
template <typename F>
void for_each_submultiset( const std::vector<std::size_t>& sorted, F&& f )
{
    std::vector<std::size_t> distinct;
    std::vector<std::size_t> counts;
    for ( auto x : sorted )
    {
        if ( distinct.empty() || distinct.back() != x )
        {
            distinct.push_back( x );
            counts.push_back( 0 );
        }
        ++counts.back();
    }
    std::vector<std::size_t> pick( distinct.size(), 0 );
    std::vector<std::size_t> sub;
    while ( true )
    {
        sub.clear();
        for ( std::size_t k = 0; k < distinct.size(); ++k )
            sub.insert( sub.end(), pick[ k ], distinct[ k ] );
        f( sub );

        std::size_t k = 0;
        while ( k < pick.size() && pick[ k ] == counts[ k ] )
            pick[ k++ ] = 0;
        if ( k == pick.size() )
            return;
        ++pick[ k ];
    }
}

std::vector<std::size_t> multiset_difference( const std::vector<std::size_t>& whole,
                                              const std::vector<std::size_t>& part )
{
    std::vector<std::size_t> out;
    std::set_difference( whole.begin(), whole.end(), part.begin(), part.end(), std::back_inserter( out ) );
    return out;
}

std::vector<std::size_t> multiset_sum( const std::vector<std::size_t>& a, const std::vector<std::size_t>& b )
{
    std::vector<std::size_t> out;
    std::merge( a.begin(), a.end(), b.begin(), b.end(), std::back_inserter( out ) );
    return out;
}

} // namespace

wts wts::from_raw( const raw_system& raw )
{
    auto report = referential_report( raw );
    if ( !report.ok() )
        throw input_error( "invalid system: " + report.violations.front().detail );

    wts x;
    x._sigma = raw.sigma;
    std::sort( x._sigma.begin(), x._sigma.end() );
    x._states = raw.states;
    std::sort( x._states.begin(), x._states.end() );
    for ( const auto& [ a, l ] : raw.actions )
    {
        x._actions.push_back( a );
        x._labels.push_back( l );
    }
    for ( const auto& t : raw.transitions )
        x._transitions.insert( x.canonical( t ) );
    return x;
}

std::optional<std::size_t> wts::find_state( std::string_view id ) const { return index_of( _states, id ); }

std::optional<std::size_t> wts::find_action( std::string_view id ) const { return index_of( _actions, id ); }

std::size_t wts::state( std::string_view id ) const
{
    if ( auto i = find_state( id ) )
        return *i;
    throw input_error( "unknown state '" + std::string( id ) + "'" );
}

std::size_t wts::action( std::string_view id ) const
{
    if ( auto i = find_action( id ) )
        return *i;
    throw input_error( "unknown action '" + std::string( id ) + "'" );
}

std::size_t wts::max_dimension() const
{
    std::size_t d = 0;
    for ( const auto& t : _transitions )
        d = std::max( d, t.dimension() );
    return d;
}

transition wts::canonical( const raw_transition& t ) const
{
    transition out{ state( t.source ), {}, state( t.target ) };
    out.body.reserve( t.body.size() );
    for ( const auto& u : t.body )
        out.body.push_back( action( u ) );
    std::sort( out.body.begin(), out.body.end() );
    return out;
}

raw_transition wts::named( const transition& t ) const
{
    raw_transition out{ _states.at( t.source ), {}, _states.at( t.target ) };
    for ( auto u : t.body )
        out.body.push_back( _actions.at( u ) );
    return out;
}

raw_system wts::to_raw() const
{
    raw_system raw;
    raw.sigma = _sigma;
    raw.states = _states;
    for ( std::size_t i = 0; i < _actions.size(); ++i )
        raw.actions.emplace( _actions[ i ], _labels[ i ] );
    for ( const auto& t : _transitions )
        raw.transitions.push_back( named( t ) );
    return raw;
}

wts wts::with_transitions( std::set<transition> transitions ) const
{
    wts x = *this;
    for ( const auto& t : transitions )
    {
        if ( t.source >= _states.size() || t.target >= _states.size() || t.body.empty() )
            throw input_error( "transition out of range" );
        for ( auto u : t.body )
            if ( u >= _actions.size() )
                throw input_error( "transition action out of range" );
        if ( !std::is_sorted( t.body.begin(), t.body.end() ) )
            throw input_error( "transition body is not canonical" );
    }
    x._transitions = std::move( transitions );
    return x;
}

bool wts::operator==( const wts& other ) const
{
    return _states == other._states && _actions == other._actions && _labels == other._labels &&
           _sigma == other._sigma && _transitions == other._transitions;
}

std::vector<patching_instance> patching_instances( const std::set<transition>& transitions )
{
    // (source, body) -> targets
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::vector<std::size_t>> targets;
    for ( const auto& t : transitions )
        targets[ { t.source, t.body } ].push_back( t.target );

    auto lookup = [ & ]( std::size_t src, const std::vector<std::size_t>& body ) -> const std::vector<std::size_t>* {
        auto it = targets.find( { src, body } );
        return it == targets.end() ? nullptr : &it->second;
    };

    std::vector<patching_instance> out;
    for ( const auto& whole : transitions )
    {
        if ( whole.dimension() < 3 )
            continue;
        for_each_submultiset( whole.body, [ & ]( const std::vector<std::size_t>& first ) {
            if ( first.empty() || first.size() + 2 > whole.dimension() )
                return;
            const auto* nu1s = lookup( whole.source, first );
            if ( !nu1s )
                return;
            auto rest = multiset_difference( whole.body, first );
            for_each_submultiset( rest, [ & ]( const std::vector<std::size_t>& middle ) {
                if ( middle.empty() || middle.size() == rest.size() )
                    return;
                auto last = multiset_difference( rest, middle );
                auto first_middle = multiset_sum( first, middle );
                const auto* nu2s = lookup( whole.source, first_middle );
                if ( !nu2s )
                    return;
                for ( auto nu1 : *nu1s )
                {
                    if ( !transitions.contains( { nu1, rest, whole.target } ) )
                        continue;
                    for ( auto nu2 : *nu2s )
                    {
                        if ( !transitions.contains( { nu2, last, whole.target } ) )
                            continue;
                        out.push_back( { whole, first, middle, last, nu1, nu2 } );
                    }
                }
            } );
        } );
    }
    return out;
}

validation_report validate( const wts& x )
{
    validation_report report;
    for ( const auto& inst : patching_instances( x.transitions() ) )
    {
        auto derived = inst.derived();
        if ( x.contains( derived ) )
            continue;
        patching_witness w;
        w.alpha = x.states()[ inst.whole.source ];
        w.beta = x.states()[ inst.whole.target ];
        w.nu1 = x.states()[ inst.nu1 ];
        w.nu2 = x.states()[ inst.nu2 ];
        for ( const auto* part : { &inst.first, &inst.middle, &inst.last } )
            for ( auto u : *part )
                w.body.push_back( x.actions()[ u ] );
        w.p = inst.first.size();
        w.q = inst.middle.size();
        violation v{ "patching", "missing " + to_string( x, derived ), w, { x.named( derived ) } };
        report.violations.push_back( std::move( v ) );
    }
    return report;
}

validation_report validate( const raw_system& raw )
{
    auto report = referential_report( raw );
    if ( !report.ok() )
        return report;
    return validate( wts::from_raw( raw ) );
}

wts patching_closure( const wts& x )
{
    auto transitions = x.transitions();
    while ( true )
    {
        std::set<transition> fresh;
        for ( const auto& inst : patching_instances( transitions ) )
        {
            auto derived = inst.derived();
            if ( !transitions.contains( derived ) )
                fresh.insert( std::move( derived ) );
        }
        if ( fresh.empty() )
            break;
        transitions.merge( fresh );
    }
    return x.with_transitions( std::move( transitions ) );
}

wts patching_closure( const raw_system& raw ) { return patching_closure( wts::from_raw( raw ) ); }

wts make_system( const raw_system& raw )
{
    auto x = wts::from_raw( raw );
    auto report = validate( x );
    if ( !report.ok() )
        throw input_error( "not a weak transition system: " + report.violations.front().detail );
    return x;
}

bool has_transition( const wts& x, std::string_view source, std::span<const std::string> body,
                     std::string_view target )
{
    raw_transition t{ std::string( source ), { body.begin(), body.end() }, std::string( target ) };
    if ( t.body.empty() )
        throw input_error( "a transition has at least one action" );
    return x.contains( x.canonical( t ) );
}

std::string to_string( const wts& x, const transition& t ) { return describe( x.named( t ) ); }

} // namespace wtslab
