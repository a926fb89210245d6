#include "wtslab/homs.hpp"

#include <algorithm>
#include <numeric>

namespace wtslab
{

namespace
{

struct variable
{
    bool is_action;
    std::size_t index;
};

class backtracker
{
public:
    backtracker( const wts& x, const wts& y, const std::vector<std::vector<std::size_t>>& state_domain,
                 const std::vector<std::vector<std::size_t>>& action_domain, bool injective,
                 const search_limits& limits )
        : _x{ x }, _y{ y }, _state_domain{ state_domain }, _action_domain{ action_domain }, _injective{ injective },
          _limits{ limits }
    {
        std::vector<bool> placed_s( x.state_count() ), placed_a( x.action_count() );
        std::vector<std::size_t> pos_s( x.state_count() ), pos_a( x.action_count() );
        auto place = [ & ]( bool is_action, std::size_t i ) {
            auto& placed = is_action ? placed_a : placed_s;
            if ( placed[ i ] )
                return;
            placed[ i ] = true;
            ( is_action ? pos_a : pos_s )[ i ] = _order.size();
            _order.push_back( { is_action, i } );
        };

        std::vector<const transition*> ts;
        for ( const auto& t : x.transitions() )
            ts.push_back( &t );
        std::stable_sort( ts.begin(), ts.end(),
                          []( const transition* a, const transition* b ) { return a->dimension() < b->dimension(); } );
        for ( const auto* t : ts )
        {
            place( false, t->source );
            for ( auto u : t->body )
                place( true, u );
            place( false, t->target );
        }
        for ( std::size_t a = 0; a < x.action_count(); ++a )
            place( true, a );
        for ( std::size_t s = 0; s < x.state_count(); ++s )
            place( false, s );

        _checks.resize( _order.size() );
        for ( const auto* t : ts )
        {
            std::size_t last = std::max( pos_s[ t->source ], pos_s[ t->target ] );
            for ( auto u : t->body )
                last = std::max( last, pos_a[ u ] );
            _checks[ last ].push_back( t );
        }

        _state_map.assign( x.state_count(), 0 );
        _action_map.assign( x.action_count(), 0 );
        _used_s.assign( y.state_count(), false );
        _used_a.assign( y.action_count(), false );
    }

    template <typename F>
    void run( F&& emit )
    {
        _stop = false;
        descend( 0, emit );
    }

private:
    template <typename F>
    void descend( std::size_t depth, F& emit )
    {
        if ( depth == _order.size() )
        {
            if ( !emit( _state_map, _action_map ) )
                _stop = true;
            return;
        }
        const auto& var = _order[ depth ];
        const auto& domain = var.is_action ? _action_domain[ var.index ] : _state_domain[ var.index ];
        auto& slot = var.is_action ? _action_map[ var.index ] : _state_map[ var.index ];
        auto& used = var.is_action ? _used_a : _used_s;
        for ( auto candidate : domain )
        {
            if ( _stop )
                return;
            if ( ++_steps > _limits.max_steps )
                throw budget_exceeded( "hom search exceeded " + std::to_string( _limits.max_steps ) + " steps" );
            if ( _injective && used[ candidate ] )
                continue;
            slot = candidate;
            if ( !consistent( depth ) )
                continue;
            if ( _injective )
                used[ candidate ] = true;
            descend( depth + 1, emit );
            if ( _injective )
                used[ candidate ] = false;
        }
    }

    bool consistent( std::size_t depth )
    {
        for ( const auto* t : _checks[ depth ] )
        {
            _probe.source = _state_map[ t->source ];
            _probe.target = _state_map[ t->target ];
            _probe.body.clear();
            for ( auto u : t->body )
                _probe.body.push_back( _action_map[ u ] );
            std::sort( _probe.body.begin(), _probe.body.end() );
            if ( !_y.contains( _probe ) )
                return false;
        }
        return true;
    }

    const wts& _x;
    const wts& _y;
    const std::vector<std::vector<std::size_t>>& _state_domain;
    const std::vector<std::vector<std::size_t>>& _action_domain;
    bool _injective;
    search_limits _limits;

    std::vector<variable> _order;
    std::vector<std::vector<const transition*>> _checks;
    std::vector<std::size_t> _state_map;
    std::vector<std::size_t> _action_map;
    std::vector<bool> _used_s;
    std::vector<bool> _used_a;
    transition _probe;
    std::size_t _steps = 0;
    bool _stop = false;
};

std::vector<std::size_t> intersect( const std::vector<std::size_t>& sorted, std::vector<std::size_t> candidates )
{
    std::sort( candidates.begin(), candidates.end() );
    candidates.erase( std::unique( candidates.begin(), candidates.end() ), candidates.end() );
    std::vector<std::size_t> out;
    std::set_intersection( sorted.begin(), sorted.end(), candidates.begin(), candidates.end(),
                           std::back_inserter( out ) );
    return out;
}

} // namespace

hom_search::hom_search( system_ptr source, system_ptr target )
    : _source{ std::move( source ) }, _target{ std::move( target ) }
{
    std::vector<std::size_t> all_states( _target->state_count() );
    std::iota( all_states.begin(), all_states.end(), 0 );
    _state_domain.assign( _source->state_count(), all_states );
    _action_domain.resize( _source->action_count() );
    for ( std::size_t a = 0; a < _source->action_count(); ++a )
        for ( std::size_t b = 0; b < _target->action_count(); ++b )
            if ( _source->label( a ) == _target->label( b ) )
                _action_domain[ a ].push_back( b );
}

hom_search& hom_search::restrict_state( std::size_t s, const std::vector<std::size_t>& candidates )
{
    _state_domain.at( s ) = intersect( _state_domain.at( s ), candidates );
    return *this;
}

hom_search& hom_search::restrict_action( std::size_t a, const std::vector<std::size_t>& candidates )
{
    _action_domain.at( a ) = intersect( _action_domain.at( a ), candidates );
    return *this;
}

hom_search& hom_search::fix_state( std::size_t s, std::size_t image ) { return restrict_state( s, { image } ); }

hom_search& hom_search::fix_action( std::size_t a, std::size_t image ) { return restrict_action( a, { image } ); }

hom_search& hom_search::injective( bool on )
{
    _injective = on;
    return *this;
}

void hom_search::for_each( const std::function<bool( const morphism& )>& visit, const search_limits& limits ) const
{
    backtracker bt( *_source, *_target, _state_domain, _action_domain, _injective, limits );
    bt.run( [ & ]( const std::vector<std::size_t>& sm, const std::vector<std::size_t>& am ) {
        return visit( morphism( _source, _target, sm, am ) );
    } );
}

std::vector<morphism> hom_search::all( const search_limits& limits ) const
{
    std::vector<morphism> out;
    for_each(
        [ & ]( const morphism& f ) {
            if ( out.size() == limits.max_results )
                throw budget_exceeded( "more than " + std::to_string( limits.max_results ) + " morphisms" );
            out.push_back( f );
            return true;
        },
        limits );
    return out;
}

std::optional<morphism> hom_search::first( const search_limits& limits ) const
{
    std::optional<morphism> out;
    for_each(
        [ & ]( const morphism& f ) {
            out = f;
            return false;
        },
        limits );
    return out;
}

std::size_t hom_search::count( std::size_t cap, const search_limits& limits ) const
{
    std::size_t n = 0;
    if ( cap == 0 )
        return 0;
    for_each(
        [ & ]( const morphism& ) {
            ++n;
            return n < cap;
        },
        limits );
    return n;
}

std::vector<morphism> enum_homs( const system_ptr& x, const system_ptr& y, const search_limits& limits )
{
    return hom_search( x, y ).all( limits );
}

namespace
{

std::vector<std::string> sorted_labels( const wts& x )
{
    auto labels = x.labels();
    std::sort( labels.begin(), labels.end() );
    return labels;
}

bool same_shape( const wts& x, const wts& y )
{
    return x.state_count() == y.state_count() && x.action_count() == y.action_count() &&
           x.transitions().size() == y.transitions().size() && sorted_labels( x ) == sorted_labels( y );
}

} // namespace

std::optional<morphism> find_isomorphism( const system_ptr& x, const system_ptr& y, const search_limits& limits )
{
    if ( !same_shape( *x, *y ) )
        return std::nullopt;
    // An injective morphism between equal-sized carriers is bijective; it maps
    // transitions injectively, so equal transition counts make it onto as well.
    return hom_search( x, y ).injective().first( limits );
}

bool is_isomorphism( const morphism& f )
{
    return same_shape( f.source(), f.target() ) && injective_on_states( f ) && injective_on_actions( f ) &&
           is_morphism( f ).ok();
}

std::optional<std::pair<morphism, morphism>> find_arrow_isomorphism( const morphism& f, const morphism& g,
                                                                    const search_limits& limits )
{
    if ( !same_shape( f.source(), g.source() ) || !same_shape( f.target(), g.target() ) )
        return std::nullopt;
    std::optional<std::pair<morphism, morphism>> out;
    hom_search( f.source_ptr(), g.source_ptr() )
        .injective()
        .for_each(
            [ & ]( const morphism& a ) {
                hom_search bs( f.target_ptr(), g.target_ptr() );
                bs.injective();
                for ( std::size_t s = 0; s < f.source().state_count(); ++s )
                    bs.fix_state( f.state( s ), g.state( a.state( s ) ) );
                for ( std::size_t u = 0; u < f.source().action_count(); ++u )
                    bs.fix_action( f.action( u ), g.action( a.action( u ) ) );
                if ( auto b = bs.first( limits ) )
                {
                    out.emplace( a, *b );
                    return false;
                }
                return true;
            },
            limits );
    return out;
}

} // namespace wtslab
