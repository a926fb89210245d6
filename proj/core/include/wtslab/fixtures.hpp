#pragma once

#include "wtslab/morphism.hpp"

#include <string>
#include <vector>

// Small named systems used by the tests, the benchmarks and the CLI. All of
// them use the single label "l".
namespace wtslab::fixtures
{

inline constexpr const char* label = "l";
inline constexpr const char* basepoint = "iota";

system_ptr empty(); // no states, no actions: the initial object
system_ptr pt(); // {iota}
system_ptr two(); // {0,1}
system_ptr seg(); // 0 -a-> 1
system_ptr par(); // 0 -a0-> 1, 0 -a1-> 1
/// The five premise transitions of one patching instance; not closed.
raw_system tri_premises();
/// tri_premises() closed: adds (nu1,[u2],nu2).
system_ptr tri();
/// 0 -a-> 1 -b-> 3, 0 -b-> 2 -a-> 3 without the 2-transition.
system_ptr square_boundary();
/// square_boundary() plus (0,[a,b],3).
system_ptr square();
/// iota -a-> s, plus an isolated state t (pointed at iota).
system_ptr unr();

struct named_system
{
    std::string name;
    system_ptr system;
};

/// PT, TWO, SEG, PAR, TRI, EMPTY, SQB, SQ, UNR in that order.
std::vector<named_system> all();
system_ptr by_name( const std::string& name );

/// Inclusion of a sub-system into a super-system sharing its identifiers.
morphism inclusion( const system_ptr& sub, const system_ptr& super );

/// Shipped sample of generating cofibrations: empty -> PT, TWO -> SEG and
/// SQB -> SQ (boundary inclusions).
std::vector<morphism> sample_generating_cofibrations();

} // namespace wtslab::fixtures
