#include "wtslab/lifting.hpp"

namespace wtslab
{

bool is_cofibration( const morphism& f ) { return injective_on_actions( f ); }

namespace
{

std::vector<std::vector<std::size_t>> state_fibres( const morphism& g )
{
    std::vector<std::vector<std::size_t>> out( g.target().state_count() );
    for ( std::size_t s = 0; s < g.source().state_count(); ++s )
        out[ g.state( s ) ].push_back( s );
    return out;
}

std::vector<std::vector<std::size_t>> action_fibres( const morphism& g )
{
    std::vector<std::vector<std::size_t>> out( g.target().action_count() );
    for ( std::size_t u = 0; u < g.source().action_count(); ++u )
        out[ g.action( u ) ].push_back( u );
    return out;
}

// Maps B -> X with l f = top and g l = bottom.
hom_search lift_search( const morphism& f, const morphism& g, const morphism& top, const morphism& bottom )
{
    hom_search search( f.target_ptr(), g.source_ptr() );
    for ( std::size_t s = 0; s < f.source().state_count(); ++s )
        search.fix_state( f.state( s ), top.state( s ) );
    for ( std::size_t u = 0; u < f.source().action_count(); ++u )
        search.fix_action( f.action( u ), top.action( u ) );
    auto sf = state_fibres( g );
    auto af = action_fibres( g );
    for ( std::size_t b = 0; b < f.target().state_count(); ++b )
        search.restrict_state( b, sf[ bottom.state( b ) ] );
    for ( std::size_t u = 0; u < f.target().action_count(); ++u )
        search.restrict_action( u, af[ bottom.action( u ) ] );
    return search;
}

// Maps e : B -> T with e a = h.
hom_search extension_search( const morphism& a, const morphism& h )
{
    hom_search search( a.target_ptr(), h.target_ptr() );
    for ( std::size_t s = 0; s < a.source().state_count(); ++s )
        search.fix_state( a.state( s ), h.state( s ) );
    for ( std::size_t u = 0; u < a.source().action_count(); ++u )
        search.fix_action( a.action( u ), h.action( u ) );
    return search;
}

} // namespace

lift_certificate has_lift( const morphism& f, const morphism& g, const morphism& top, const morphism& bottom,
                           const search_limits& limits )
{
    if ( !same_system( f.source_ptr(), top.source_ptr() ) || !same_system( f.target_ptr(), bottom.source_ptr() ) ||
         !same_system( g.source_ptr(), top.target_ptr() ) || !same_system( g.target_ptr(), bottom.target_ptr() ) )
        throw input_error( "lift: the four maps do not form a square" );
    if ( !( compose( g, top ) == compose( bottom, f ) ) )
        throw input_error( "lift: the square does not commute" );
    return { { f, g, top, bottom }, lift_search( f, g, top, bottom ).first( limits ) };
}

corner_map pushout_corner( const morphism& f_image, const morphism& alpha_x, const morphism& alpha_y,
                           const morphism& f_prime_image )
{
    auto square = pushout( f_image, alpha_x );
    auto map = induced_map( square, alpha_y, f_prime_image );
    return { std::move( square ), std::move( map ) };
}

morphism star_eps( const morphism& f, int eps )
{
    auto cx = cyl( f.source_ptr() );
    auto cy = cyl( f.target_ptr() );
    const auto& ax = eps == 0 ? cx.gamma0 : cx.gamma1;
    const auto& ay = eps == 0 ? cy.gamma0 : cy.gamma1;
    return pushout_corner( f, ax, ay, cyl_map( f ) ).map;
}

morphism star( const morphism& f )
{
    auto cx = cyl( f.source_ptr() );
    auto cy = cyl( f.target_ptr() );
    return pushout_corner( coproduct_map( f, f ), cx.gamma, cy.gamma, cyl_map( f ) ).map;
}

namespace
{

void push_unique( std::vector<morphism>& out, morphism a, dedup_mode dedup, const search_limits& limits )
{
    for ( const auto& b : out )
    {
        if ( a == b )
            return;
        if ( dedup == dedup_mode::isomorphism )
        {
            try
            {
                if ( find_arrow_isomorphism( a, b, limits ) )
                    return;
            }
            catch ( const budget_exceeded& )
            {
                // undecided within budget: keep the arrow
            }
        }
    }
    out.push_back( std::move( a ) );
}

} // namespace

std::vector<arrow_family> lambda_up_to( const std::vector<morphism>& generating, const std::vector<morphism>& seeds,
                                        std::size_t depth, dedup_mode dedup, const search_limits& limits )
{
    std::vector<arrow_family> stages;
    arrow_family first{ family_role::lambda_stage, 0, {} };
    for ( const auto& s : seeds )
        push_unique( first.arrows, s, dedup, limits );
    for ( int eps : { 0, 1 } )
        for ( const auto& i : generating )
            push_unique( first.arrows, star_eps( i, eps ), dedup, limits );
    stages.push_back( std::move( first ) );

    for ( std::size_t k = 1; k <= depth; ++k )
    {
        arrow_family next{ family_role::lambda_stage, k, {} };
        for ( const auto& a : stages.back().arrows )
            push_unique( next.arrows, star( a ), dedup, limits );
        stages.push_back( std::move( next ) );
    }
    return stages;
}

injectivity_report is_injective( const system_ptr& t, const std::vector<morphism>& arrows,
                                 const search_limits& limits )
{
    injectivity_report report;
    for ( std::size_t i = 0; i < arrows.size() && report.holds; ++i )
    {
        const auto& a = arrows[ i ];
        hom_search( a.source_ptr(), t )
            .for_each(
                [ & ]( const morphism& h ) {
                    if ( extension_search( a, h ).first( limits ) )
                        return true;
                    report = { false, i, h };
                    return false;
                },
                limits );
    }
    return report;
}

injectivity_report is_fibrant_up_to( const system_ptr& t, const std::vector<morphism>& generating,
                                     const std::vector<morphism>& seeds, std::size_t depth,
                                     const search_limits& limits )
{
    std::vector<morphism> all;
    for ( auto& stage : lambda_up_to( generating, seeds, depth, dedup_mode::exact, limits ) )
        for ( auto& a : stage.arrows )
            all.push_back( std::move( a ) );
    return is_injective( t, all, limits );
}

very_good_report check_very_good( const system_ptr& x, const std::vector<morphism>& cofibrations,
                                  const search_limits& limits )
{
    auto pack = cyl( x );
    const auto& sigma = pack.sigma;
    auto sf = state_fibres( sigma );
    auto af = action_fibres( sigma );

    very_good_report report;
    for ( const auto& c : cofibrations )
    {
        for ( const auto& bottom : enum_homs( c.target_ptr(), x, limits ) )
        {
            hom_search tops( c.source_ptr(), pack.cyl_object );
            for ( std::size_t s = 0; s < c.source().state_count(); ++s )
                tops.restrict_state( s, sf[ bottom.state( c.state( s ) ) ] );
            for ( std::size_t u = 0; u < c.source().action_count(); ++u )
                tops.restrict_action( u, af[ bottom.action( c.action( u ) ) ] );
            tops.for_each(
                [ & ]( const morphism& top ) {
                    ++report.squares;
                    if ( lift_search( c, sigma, top, bottom ).first( limits ) )
                        return true;
                    report.holds = false;
                    report.counterexample = commuting_square{ c, sigma, top, bottom };
                    return false;
                },
                limits );
            if ( !report.holds )
                return report;
        }
    }
    return report;
}

cartesian_report check_cartesian( const morphism& f )
{
    cartesian_report report;
    report.input_is_cofibration = is_cofibration( f );
    report.star_gamma0 = is_cofibration( star_eps( f, 0 ) );
    report.star_gamma1 = is_cofibration( star_eps( f, 1 ) );
    report.star_gamma = is_cofibration( star( f ) );
    return report;
}

} // namespace wtslab
