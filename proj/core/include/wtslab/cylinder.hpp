#pragma once

#include "wtslab/colimits.hpp"

#include <string>

namespace wtslab
{

/// Cyl X with its structure maps. Cyl X has the states of X, the actions
/// L x {0,1} (named "(u,0)" and "(u,1)", labelled like u), and a transition
/// (a, (u1,e1) ... (un,en), b) for every transition (a, u1 ... un, b) of X
/// and every choice of decorations e1 ... en.
struct cylinder_pack
{
    system_ptr cyl_object;
    morphism gamma0; // u -> (u,0)
    morphism gamma1; // u -> (u,1)
    coproduct_result doubled; // X + X
    morphism gamma; // [gamma0, gamma1] : X + X -> Cyl X
    morphism sigma; // (u,e) -> u
};

/// Cocyl Y: the states of Y, the label-compatible ordered pairs "(u,v)" as
/// actions, and (a, (u1,v1) ... (un,vn), b) is a transition iff every
/// choice of one component per position gives a transition of Y.
struct path_pack
{
    system_ptr path_object;
    morphism pi0;
    morphism pi1;
};

std::string decorated_action( const std::string& u, int eps );
std::string paired_action( const std::string& u, const std::string& v );

cylinder_pack cyl( const system_ptr& x );
/// Cyl(f) : (u,e) -> (f(u),e).
morphism cyl_map( const morphism& f );

path_pack cocyl( const system_ptr& y );
/// Cocyl(h) : (u,v) -> (h(u),h(v)).
morphism cocyl_map( const morphism& h );

/// f : Cyl X -> Y  |->  X -> Cocyl Y, u -> (f(u,0), f(u,1)). Throws
/// input_error when the source of f is not Cyl X.
morphism transpose( const system_ptr& x, const morphism& f );
/// g : X -> Cocyl Y  |->  Cyl X -> Y, (u,e) -> pi_e(g(u)).
morphism untranspose( const system_ptr& y, const morphism& g );

/// gamma_X : X + X -> Cyl X is one-to-one on actions.
bool check_good( const system_ptr& x );

} // namespace wtslab
