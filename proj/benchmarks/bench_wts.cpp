#include "wtslab/fixtures.hpp"
#include "wtslab/homotopy.hpp"
#include "wtslab/starshaped.hpp"

#include <benchmark/benchmark.h>

using namespace wtslab;
namespace fx = wtslab::fixtures;

namespace
{

void closure_of_tri_premises( benchmark::State& state )
{
    auto raw = fx::tri_premises();
    for ( auto _ : state )
        benchmark::DoNotOptimize( patching_closure( raw ) );
}
BENCHMARK( closure_of_tri_premises );

void closure_of_random_systems( benchmark::State& state )
{
    std::mt19937_64 rng( 7 );
    random_bounds bounds;
    bounds.max_states = static_cast<std::size_t>( state.range( 0 ) );
    bounds.max_actions = static_cast<std::size_t>( state.range( 0 ) );
    for ( auto _ : state )
        benchmark::DoNotOptimize( random_star_shaped( rng, bounds ) );
}
BENCHMARK( closure_of_random_systems )->Arg( 4 )->Arg( 6 )->Arg( 8 );

void pushout_of_segments( benchmark::State& state )
{
    auto f = fx::inclusion( fx::two(), fx::seg() );
    for ( auto _ : state )
        benchmark::DoNotOptimize( pushout( f, f ) );
}
BENCHMARK( pushout_of_segments );

void cylinder_of_square( benchmark::State& state )
{
    auto sq = fx::square();
    for ( auto _ : state )
        benchmark::DoNotOptimize( cyl( sq ) );
}
BENCHMARK( cylinder_of_square );

void path_object_of_square( benchmark::State& state )
{
    auto sq = fx::square();
    for ( auto _ : state )
        benchmark::DoNotOptimize( cocyl( sq ) );
}
BENCHMARK( path_object_of_square );

void hom_enumeration_cyl_seg_to_par( benchmark::State& state )
{
    auto source = cyl( fx::seg() ).cyl_object;
    auto target = fx::par();
    for ( auto _ : state )
        benchmark::DoNotOptimize( enum_homs( source, target ) );
}
BENCHMARK( hom_enumeration_cyl_seg_to_par );

void homotopy_classes_seg_to_par( benchmark::State& state )
{
    for ( auto _ : state )
        benchmark::DoNotOptimize( homotopy_classes( fx::seg(), fx::par() ) );
}
BENCHMARK( homotopy_classes_seg_to_par );

void cone_check_unreachable( benchmark::State& state )
{
    auto unr = make_pointed( fx::unr(), "iota" );
    for ( auto _ : state )
        benchmark::DoNotOptimize( cone_injectivity( unr, { fx::label }, static_cast<std::size_t>( state.range( 0 ) ) ) );
}
BENCHMARK( cone_check_unreachable )->DenseRange( 1, 3 );

} // namespace

BENCHMARK_MAIN();
