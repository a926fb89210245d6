#pragma once

#include "wtslab/cylinder.hpp"

#include <optional>
#include <vector>

namespace wtslab
{

/// Cofibrations of weak transition systems are the maps one-to-one on actions.
bool is_cofibration( const morphism& f );

/// A --top--> X
/// |f         |g
/// B -bottom-> Y
struct commuting_square
{
    morphism f;
    morphism g;
    morphism top;
    morphism bottom;
};

/// When present, lift f = top and g lift = bottom.
struct lift_certificate
{
    commuting_square square;
    std::optional<morphism> lift;
};

/// Exhaustive search over Hom(B, X). Throws input_error when the square does
/// not have the right shape or does not commute.
lift_certificate has_lift( const morphism& f, const morphism& g, const morphism& top, const morphism& bottom,
                           const search_limits& limits = {} );

/// The corner map of the pushout of (F f, alpha_X), induced by alpha_Y and
/// F' f. Returns the map together with the pushout it starts from.
struct corner_map
{
    pushout_result square;
    morphism map;
};

corner_map pushout_corner( const morphism& f_image, const morphism& alpha_x, const morphism& alpha_y,
                           const morphism& f_prime_image );

/// f * gamma^eps : Y +_X Cyl X -> Cyl Y.
morphism star_eps( const morphism& f, int eps );
/// f * gamma : (Y + Y) +_(X + X) Cyl X -> Cyl Y.
morphism star( const morphism& f );

enum class family_role
{
    generating_cofibrations,
    anodyne_seeds,
    lambda_stage
};

struct arrow_family
{
    family_role role = family_role::lambda_stage;
    std::size_t stage = 0;
    std::vector<morphism> arrows;
};

enum class dedup_mode
{
    exact, // drop arrows structurally equal to an earlier one
    isomorphism // also drop arrows isomorphic (as arrows) to an earlier one
};

/// Stages 0 ... depth of the anodyne family: stage 0 is S, then I * gamma^0,
/// then I * gamma^1; stage k+1 is stage k * gamma.
std::vector<arrow_family> lambda_up_to( const std::vector<morphism>& generating, const std::vector<morphism>& seeds,
                                        std::size_t depth, dedup_mode dedup = dedup_mode::exact,
                                        const search_limits& limits = {} );

struct injectivity_report
{
    bool holds = true;
    /// First arrow a : A -> B and map A -> T without an extension along a.
    std::optional<std::size_t> arrow_index;
    std::optional<morphism> unextended;
};

/// T is injective for every a : A -> B in `arrows`: each map A -> T extends
/// along a.
injectivity_report is_injective( const system_ptr& t, const std::vector<morphism>& arrows,
                                 const search_limits& limits = {} );

/// Injectivity against the union of stages 0 ... depth. A necessary
/// condition for fibrancy; full fibrancy quantifies over every stage.
injectivity_report is_fibrant_up_to( const system_ptr& t, const std::vector<morphism>& generating,
                                     const std::vector<morphism>& seeds, std::size_t depth,
                                     const search_limits& limits = {} );

struct very_good_report
{
    bool holds = true;
    std::size_t squares = 0;
    std::optional<commuting_square> counterexample;
};

/// sigma_X : Cyl X -> X has the right lifting property against every map of
/// `cofibrations`, checked square by square.
very_good_report check_very_good( const system_ptr& x, const std::vector<morphism>& cofibrations,
                                  const search_limits& limits = {} );

struct cartesian_report
{
    bool input_is_cofibration = false;
    bool star_gamma0 = false;
    bool star_gamma1 = false;
    bool star_gamma = false;

    [[nodiscard]] bool holds() const
    {
        return !input_is_cofibration || ( star_gamma0 && star_gamma1 && star_gamma );
    }
};

/// For a cofibration f, f * gamma^0, f * gamma^1 and f * gamma are cofibrations.
cartesian_report check_cartesian( const morphism& f );

} // namespace wtslab
