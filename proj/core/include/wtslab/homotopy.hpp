#pragma once

#include "wtslab/lifting.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wtslab
{

/// f = path[0] ~ path[1] ~ ... ~ path[n] = g where consecutive maps are
/// linked by the elementary homotopy steps[k] : Cyl X -> Y. When
/// reversed[k] is false, steps[k] gamma^0 = path[k] and steps[k] gamma^1 =
/// path[k+1]; otherwise the roles are swapped.
struct homotopy_witness
{
    std::vector<morphism> path;
    std::vector<morphism> steps;
    std::vector<bool> reversed;

    [[nodiscard]] std::size_t length() const { return steps.size(); }
};

/// H : Cyl X -> Y with H gamma^0 = f and H gamma^1 = g.
std::optional<morphism> find_elementary_homotopy( const morphism& f, const morphism& g,
                                                  const search_limits& limits = {} );

/// Membership in the equivalence relation generated by elementary
/// homotopies, with a shortest witness chain.
std::optional<homotopy_witness> homotopic( const morphism& f, const morphism& g, const search_limits& limits = {} );

struct homotopy_partition
{
    std::vector<morphism> maps; // Hom(X, T) in enumeration order
    std::vector<std::size_t> class_of; // class index of maps[i]
    std::vector<std::size_t> representatives; // first map of each class

    [[nodiscard]] std::size_t class_count() const { return representatives.size(); }
};

homotopy_partition homotopy_classes( const system_ptr& x, const system_ptr& t, const search_limits& limits = {} );

struct weq_test_result
{
    system_ptr test;
    std::size_t target_classes = 0; // |Hom(Y,T)/~|
    std::size_t source_classes = 0; // |Hom(X,T)/~|
    bool well_defined = true;
    bool injective = true;
    bool surjective = true;

    [[nodiscard]] bool bijective() const { return well_defined && injective && surjective; }
};

struct weq_report
{
    bool holds = true;
    std::vector<weq_test_result> tests;
    std::vector<std::string> warnings;
};

/// Optional fibrancy check of the test objects (warnings only).
struct fibrancy_context
{
    std::vector<morphism> generating;
    std::vector<morphism> seeds;
    std::size_t depth = 0;
};

/// For f : X -> Y and every test object T, precomposition with f induces a
/// bijection Hom(Y,T)/~ -> Hom(X,T)/~. This is membership in the weak
/// equivalences relative to the supplied tests only.
weq_report is_weak_equiv_against( const morphism& f, const std::vector<system_ptr>& tests,
                                  const search_limits& limits = {}, const fibrancy_context* context = nullptr );

} // namespace wtslab
