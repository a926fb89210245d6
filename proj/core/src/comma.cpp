#include "wtslab/comma.hpp"

#include "wtslab/fixtures.hpp"

#include <algorithm>

namespace wtslab
{

namespace
{

bool same_shape( const wts& x, const wts& y )
{
    return x.state_count() == y.state_count() && x.action_count() == y.action_count() &&
           x.transitions().size() == y.transitions().size();
}

// PT + PT
const coproduct_result& doubled_point()
{
    static const coproduct_result c = coproduct( fixtures::pt(), fixtures::pt() );
    return c;
}

// PT + PT -> PT
morphism fold_point()
{
    const auto& c = doubled_point();
    return copair( c, identity( fixtures::pt() ), identity( fixtures::pt() ) );
}

bool extends_all( const morphism& a, const system_ptr& t, std::optional<std::size_t> fixed_source,
                  std::optional<std::size_t> fixed_target, const search_limits& limits )
{
    // Every map A -> T (moving fixed_source to fixed_target when given)
    // extends along a.
    bool ok = true;
    hom_search maps( a.source_ptr(), t );
    if ( fixed_source )
        maps.fix_state( *fixed_source, *fixed_target );
    maps.for_each(
        [ & ]( const morphism& h ) {
            hom_search ext( a.target_ptr(), t );
            for ( std::size_t s = 0; s < a.source().state_count(); ++s )
                ext.fix_state( a.state( s ), h.state( s ) );
            for ( std::size_t u = 0; u < a.source().action_count(); ++u )
                ext.fix_action( a.action( u ), h.action( u ) );
            ok = ext.first( limits ).has_value();
            return ok;
        },
        limits );
    return ok;
}

} // namespace

morphism pointed_wts::structure() const { return morphism( fixtures::pt(), base, { point }, {} ); }

bool pointed_wts::operator==( const pointed_wts& other ) const
{
    return point == other.point && same_system( base, other.base );
}

pointed_wts make_pointed( system_ptr base, std::string_view point )
{
    auto s = base->find_state( point );
    if ( !s )
        throw input_error( "point '" + std::string( point ) + "' is not a state" );
    return { std::move( base ), *s };
}

pointed_morphism make_pointed_morphism( const pointed_wts& p, const pointed_wts& q, morphism underlying )
{
    if ( !same_system( p.base, underlying.source_ptr() ) || !same_system( q.base, underlying.target_ptr() ) )
        throw input_error( "pointed map: source or target mismatch" );
    if ( underlying.state( p.point ) != q.point )
        throw input_error( "pointed map: the point is not preserved" );
    return { p, q, std::move( underlying ) };
}

pointed_morphism compose( const pointed_morphism& g, const pointed_morphism& f )
{
    return make_pointed_morphism( f.source, g.target, compose( g.underlying, f.underlying ) );
}

pointed_morphism identity( const pointed_wts& p ) { return { p, p, identity( p.base ) }; }

std::vector<morphism> enum_pointed_homs( const pointed_wts& p, const pointed_wts& q, const search_limits& limits )
{
    return hom_search( p.base, q.base ).fix_state( p.point, q.point ).all( limits );
}

std::optional<morphism> find_pointed_isomorphism( const pointed_wts& p, const pointed_wts& q,
                                                  const search_limits& limits )
{
    if ( !same_shape( p.system(), q.system() ) )
        return std::nullopt;
    return hom_search( p.base, q.base ).fix_state( p.point, q.point ).injective().first( limits );
}

pointed_wts rho( const system_ptr& x )
{
    auto c = coproduct( fixtures::pt(), x );
    return { c.object, c.in1.state( 0 ) };
}

morphism rho_unit( const system_ptr& x ) { return coproduct( fixtures::pt(), x ).in2; }

pointed_morphism rho_map( const morphism& f )
{
    return make_pointed_morphism( rho( f.source_ptr() ), rho( f.target_ptr() ),
                                  coproduct_map( identity( fixtures::pt() ), f ) );
}

pointed_coproduct_result pointed_coproduct( const pointed_wts& p, const pointed_wts& q )
{
    auto square = pushout( p.structure(), q.structure() );
    pointed_wts object{ square.object, square.leg1.state( p.point ) };
    return { std::move( object ), std::move( square ) };
}

pointed_cylinder cyl_pt( const pointed_wts& p )
{
    auto cx = cyl( p.base );
    auto ci = cyl( fixtures::pt() );
    auto e = p.structure();
    auto square = pushout( cyl_map( e ), ci.sigma );
    pointed_wts object{ square.object, square.leg2.state( 0 ) };
    auto proj = square.leg1;

    auto gamma0 = compose( proj, cx.gamma0 );
    auto gamma1 = compose( proj, cx.gamma1 );
    auto doubled = pointed_coproduct( p, p );
    auto gamma = induced_map( doubled.square, gamma0, gamma1 );
    // sigma_X Cyl(e) = e sigma_PT by naturality.
    auto sigma = induced_map( square, cx.sigma, e );
    return { std::move( object ), std::move( square ), std::move( proj ), std::move( gamma0 ),
             std::move( gamma1 ), std::move( doubled ), std::move( gamma ), std::move( sigma ) };
}

pointed_morphism cyl_pt_map( const pointed_morphism& f )
{
    auto from = cyl_pt( f.source );
    auto to = cyl_pt( f.target );
    auto h1 = compose( to.p, cyl_map( f.underlying ) );
    auto h2 = to.object.structure();
    return make_pointed_morphism( from.object, to.object, induced_map( from.square, h1, h2 ) );
}

pointed_wts cocyl_pt( const pointed_wts& q )
{
    auto ci = cyl( fixtures::pt() );
    auto to_path = transpose( fixtures::pt(), ci.sigma ); // PT -> Cocyl(PT)
    auto e = q.structure();
    auto lifted = compose( cocyl_map( e ), to_path );
    return { lifted.target_ptr(), lifted.state( 0 ) };
}

adjunction_report check_rho_adjunction( const system_ptr& x, const pointed_wts& p, const search_limits& limits )
{
    auto rx = rho( x );
    auto unit = rho_unit( x );
    auto left = enum_pointed_homs( rx, p, limits );
    auto right = enum_homs( x, p.base, limits );

    adjunction_report r{ left.size(), right.size(), true };
    std::set<std::vector<std::size_t>> seen;
    for ( const auto& h : left )
    {
        auto restricted = compose( h, unit );
        auto key = restricted.state_map();
        key.insert( key.end(), restricted.action_map().begin(), restricted.action_map().end() );
        if ( !seen.insert( key ).second || !is_morphism( restricted ).ok() )
            r.bijective = false;
    }
    r.bijective = r.bijective && seen.size() == right.size();
    return r;
}

adjunction_report check_l0( const pointed_wts& p, const pointed_wts& q, const search_limits& limits )
{
    auto c = cyl_pt( p );
    auto path = cocyl_pt( q );
    auto left = enum_pointed_homs( c.object, q, limits );
    auto right = enum_pointed_homs( p, path, limits );

    adjunction_report r{ left.size(), right.size(), true };
    std::set<std::vector<std::size_t>> seen;
    for ( const auto& h : left )
    {
        auto t = transpose( p.base, compose( h, c.p ) );
        morphism g( p.base, path.base, t.state_map(), t.action_map() );
        auto key = g.state_map();
        key.insert( key.end(), g.action_map().begin(), g.action_map().end() );
        if ( !seen.insert( key ).second || !is_morphism( g ).ok() || g.state( p.point ) != path.point )
            r.bijective = false;
    }
    r.bijective = r.bijective && seen.size() == right.size();
    return r;
}

reflection_report check_l1( const morphism& s, const pointed_wts& p, const search_limits& limits )
{
    return check_l2( { s }, p, limits );
}

reflection_report check_l2( const std::vector<morphism>& arrows, const pointed_wts& p, const search_limits& limits )
{
    reflection_report r{ true, true };
    for ( const auto& s : arrows )
    {
        auto rs = rho_map( s );
        r.pointed_side =
            r.pointed_side && extends_all( rs.underlying, p.base, rs.source.point, p.point, limits );
        r.underlying_side = r.underlying_side && extends_all( s, p.base, std::nullopt, std::nullopt, limits );
    }
    return r;
}

std::optional<morphism> check_l3( const system_ptr& a, const search_limits& limits )
{
    auto left = cyl_pt( rho( a ) ).object;
    auto right = rho( cyl( a ).cyl_object );
    return find_pointed_isomorphism( left, right, limits );
}

l4_report check_l4( const pointed_wts& p )
{
    auto e = p.structure();
    auto fold = fold_point();
    auto amalgam = pointed_coproduct( p, p );

    l4_report r;
    auto z = pushout( coproduct_map( e, e ), fold );
    auto to_amalgam = induced_map( z, copair( coproduct( p.base, p.base ), amalgam.square.leg1, amalgam.square.leg2 ),
                                   amalgam.object.structure() );
    r.amalgamated = is_isomorphism( to_amalgam );

    auto t = pushout( copair( doubled_point(), e, e ), fold );
    auto to_x = induced_map( t, identity( p.base ), e );
    r.trivial = is_isomorphism( to_x );
    return r;
}

bool is_epi_on_carriers( const morphism& f )
{
    std::vector<bool> states( f.target().state_count(), false ), actions( f.target().action_count(), false );
    for ( auto s : f.state_map() )
        states[ s ] = true;
    for ( auto u : f.action_map() )
        actions[ u ] = true;
    return std::ranges::all_of( states, []( bool b ) { return b; } ) &&
           std::ranges::all_of( actions, []( bool b ) { return b; } );
}

bool check_gamma_point_epic() { return is_epi_on_carriers( cyl( fixtures::pt() ).gamma ); }

bool check_l0bis( const pointed_wts& p )
{
    auto e = p.structure();
    auto cx = cyl( p.base );
    auto c = cyl_pt( p );
    auto square = pushout( compose( cx.gamma, coproduct_map( e, e ) ), fold_point() );
    auto comparison = induced_map( square, c.p, c.object.structure() );
    return is_isomorphism( comparison );
}

std::optional<morphism> split_section( const morphism& p, const search_limits& limits )
{
    hom_search search( p.target_ptr(), p.source_ptr() );
    std::vector<std::vector<std::size_t>> sf( p.target().state_count() ), af( p.target().action_count() );
    for ( std::size_t s = 0; s < p.source().state_count(); ++s )
        sf[ p.state( s ) ].push_back( s );
    for ( std::size_t u = 0; u < p.source().action_count(); ++u )
        af[ p.action( u ) ].push_back( u );
    for ( std::size_t s = 0; s < sf.size(); ++s )
        search.restrict_state( s, sf[ s ] );
    for ( std::size_t u = 0; u < af.size(); ++u )
        search.restrict_action( u, af[ u ] );
    return search.first( limits );
}

namespace
{

pointed_morphism pointed_corner( const pointed_morphism& f_image, const morphism& alpha_x, const morphism& alpha_y,
                                 const pointed_morphism& f_prime_image )
{
    // Pushouts of pointed systems along connected spans are computed
    // underneath; the point travels along either leg.
    auto corner = pushout_corner( f_image.underlying, alpha_x, alpha_y, f_prime_image.underlying );
    pointed_wts apex{ corner.square.object, corner.square.leg1.state( f_image.target.point ) };
    return make_pointed_morphism( apex, f_prime_image.target, corner.map );
}

} // namespace

pointed_morphism pointed_star_eps( const pointed_morphism& f, int eps )
{
    auto cx = cyl_pt( f.source );
    auto cy = cyl_pt( f.target );
    return pointed_corner( f, eps == 0 ? cx.gamma0 : cx.gamma1, eps == 0 ? cy.gamma0 : cy.gamma1, cyl_pt_map( f ) );
}

pointed_morphism pointed_star( const pointed_morphism& f )
{
    auto cx = cyl_pt( f.source );
    auto cy = cyl_pt( f.target );
    auto from = cx.doubled;
    auto to = cy.doubled;
    auto ff = induced_map( from.square, compose( to.square.leg1, f.underlying ),
                           compose( to.square.leg2, f.underlying ) );
    pointed_morphism doubled_f = make_pointed_morphism( from.object, to.object, ff );
    return pointed_corner( doubled_f, cx.gamma, cy.gamma, cyl_pt_map( f ) );
}

} // namespace wtslab
