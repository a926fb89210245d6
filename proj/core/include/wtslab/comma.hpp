#pragma once

#include "wtslab/lifting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wtslab
{

/// Object of the comma category {iota} | WTS: a system with a distinguished
/// state, i.e. a map from the one-state system PT.
struct pointed_wts
{
    system_ptr base;
    std::size_t point = 0;

    [[nodiscard]] const wts& system() const { return *base; }
    [[nodiscard]] const std::string& point_id() const { return base->states().at( point ); }
    /// PT -> base, picking the point.
    [[nodiscard]] morphism structure() const;

    bool operator==( const pointed_wts& other ) const;
};

/// Throws input_error when `point` is not a state of `base`.
pointed_wts make_pointed( system_ptr base, std::string_view point );

struct pointed_morphism
{
    pointed_wts source;
    pointed_wts target;
    morphism underlying;
};

/// Throws input_error when `underlying` does not go from P to Q or moves the point.
pointed_morphism make_pointed_morphism( const pointed_wts& p, const pointed_wts& q, morphism underlying );

pointed_morphism compose( const pointed_morphism& g, const pointed_morphism& f );
pointed_morphism identity( const pointed_wts& p );

std::vector<morphism> enum_pointed_homs( const pointed_wts& p, const pointed_wts& q, const search_limits& limits = {} );

/// Pointed isomorphism P -> Q, if any.
std::optional<morphism> find_pointed_isomorphism( const pointed_wts& p, const pointed_wts& q,
                                                  const search_limits& limits = {} );

/// rho(X) = PT + X pointed at the new state; a clash with an existing "iota"
/// is resolved by the coproduct's renaming.
pointed_wts rho( const system_ptr& x );
inline const system_ptr& omega( const pointed_wts& p ) { return p.base; }
pointed_morphism rho_map( const morphism& f );
/// X -> omega(rho(X)).
morphism rho_unit( const system_ptr& x );

struct pointed_coproduct_result
{
    pointed_wts object;
    pushout_result square; // over PT
};

/// Pushout of the two structure maps over PT.
pointed_coproduct_result pointed_coproduct( const pointed_wts& p, const pointed_wts& q );

/// cyl_pt(P) with its structure maps. The object is the pushout of
/// Cyl(e): Cyl(PT) -> Cyl X along sigma_PT : Cyl(PT) -> PT; `p` is the leg
/// Cyl X -> omega(cyl_pt P).
struct pointed_cylinder
{
    pointed_wts object;
    pushout_result square;
    morphism p;
    morphism gamma0; // P -> cyl_pt P
    morphism gamma1;
    pointed_coproduct_result doubled; // P +_PT P
    morphism gamma; // P +_PT P -> cyl_pt P
    morphism sigma; // cyl_pt P -> P
};

pointed_cylinder cyl_pt( const pointed_wts& p );
pointed_morphism cyl_pt_map( const pointed_morphism& f );

/// Cocyl of the underlying system, pointed through Cocyl(e) after the
/// transpose of sigma_PT.
pointed_wts cocyl_pt( const pointed_wts& q );

struct adjunction_report
{
    std::size_t left = 0; // |Hom(F A, B)|
    std::size_t right = 0; // |Hom(A, G B)|
    bool bijective = false; // the canonical comparison is a bijection

    [[nodiscard]] bool holds() const { return bijective && left == right; }
};

/// Hom_pt(rho X, P) -> Hom(X, omega P), h -> h . unit.
adjunction_report check_rho_adjunction( const system_ptr& x, const pointed_wts& p, const search_limits& limits = {} );

/// Hom_pt(cyl_pt P, Q) -> Hom_pt(P, cocyl_pt Q) through the transpose.
adjunction_report check_l0( const pointed_wts& p, const pointed_wts& q, const search_limits& limits = {} );

struct reflection_report
{
    bool pointed_side = false; // P injective for rho(s)
    bool underlying_side = false; // omega P injective for s

    [[nodiscard]] bool holds() const { return pointed_side == underlying_side; }
};

/// Injectivity for rho(s) in the comma category against injectivity for s
/// underneath, both decided exhaustively.
reflection_report check_l1( const morphism& s, const pointed_wts& p, const search_limits& limits = {} );
/// The same comparison for a whole family of arrows.
reflection_report check_l2( const std::vector<morphism>& arrows, const pointed_wts& p,
                            const search_limits& limits = {} );

/// Pointed isomorphism cyl_pt(rho A) -> rho(Cyl A), if found.
std::optional<morphism> check_l3( const system_ptr& a, const search_limits& limits = {} );

struct l4_report
{
    bool amalgamated = false; // pushout of (e + e, fold) is P +_PT P
    bool trivial = false; // pushout of ([e, e], fold) is X

    [[nodiscard]] bool holds() const { return amalgamated && trivial; }
};

/// Both pushouts, compared to their expected values by the canonical maps.
l4_report check_l4( const pointed_wts& p );

/// Surjective on states and on actions: the implemented sufficient criterion
/// for an epimorphism.
bool is_epi_on_carriers( const morphism& f );
/// gamma_PT : PT + PT -> Cyl(PT) passes is_epi_on_carriers.
bool check_gamma_point_epic();
/// The pushout of gamma_X (e + e) along the fold PT + PT -> PT is
/// omega(cyl_pt P), compared by the canonical map.
bool check_l0bis( const pointed_wts& p );

/// s with p s = id, by exhaustive search.
std::optional<morphism> split_section( const morphism& p, const search_limits& limits = {} );

/// The star operations of the comma category, with cyl_pt and pointed
/// pushouts.
pointed_morphism pointed_star_eps( const pointed_morphism& f, int eps );
pointed_morphism pointed_star( const pointed_morphism& f );

} // namespace wtslab
