#include "wtslab/fixtures.hpp"

namespace wtslab::fixtures
{

namespace
{

system_ptr build( std::vector<std::string> states, std::map<std::string, std::string> actions,
                  std::vector<raw_transition> transitions )
{
    return share( make_system( { { label }, std::move( states ), std::move( actions ), std::move( transitions ) } ) );
}

} // namespace

system_ptr empty()
{
    static const auto x = build( {}, {}, {} );
    return x;
}

system_ptr pt()
{
    static const auto x = build( { basepoint }, {}, {} );
    return x;
}

system_ptr two()
{
    static const auto x = build( { "0", "1" }, {}, {} );
    return x;
}

system_ptr seg()
{
    static const auto x = build( { "0", "1" }, { { "a", label } }, { { "0", { "a" }, "1" } } );
    return x;
}

system_ptr par()
{
    static const auto x = build( { "0", "1" }, { { "a0", label }, { "a1", label } },
                                 { { "0", { "a0" }, "1" }, { "0", { "a1" }, "1" } } );
    return x;
}

raw_system tri_premises()
{
    return { { label },
             { "alpha", "nu1", "nu2", "beta" },
             { { "u1", label }, { "u2", label }, { "u3", label } },
             { { "alpha", { "u1", "u2", "u3" }, "beta" },
               { "alpha", { "u1" }, "nu1" },
               { "nu1", { "u2", "u3" }, "beta" },
               { "alpha", { "u1", "u2" }, "nu2" },
               { "nu2", { "u3" }, "beta" } } };
}

system_ptr tri()
{
    static const auto x = share( patching_closure( tri_premises() ) );
    return x;
}

system_ptr square_boundary()
{
    static const auto x = build( { "0", "1", "2", "3" }, { { "a", label }, { "b", label } },
                                 { { "0", { "a" }, "1" }, { "1", { "b" }, "3" }, { "0", { "b" }, "2" },
                                   { "2", { "a" }, "3" } } );
    return x;
}

system_ptr square()
{
    static const auto x = build( { "0", "1", "2", "3" }, { { "a", label }, { "b", label } },
                                 { { "0", { "a" }, "1" }, { "1", { "b" }, "3" }, { "0", { "b" }, "2" },
                                   { "2", { "a" }, "3" }, { "0", { "a", "b" }, "3" } } );
    return x;
}

system_ptr unr()
{
    static const auto x = build( { basepoint, "s", "t" }, { { "a", label } }, { { basepoint, { "a" }, "s" } } );
    return x;
}

std::vector<named_system> all()
{
    return { { "PT", pt() },   { "TWO", two() },   { "SEG", seg() },           { "PAR", par() }, { "TRI", tri() },
             { "EMPTY", empty() }, { "SQB", square_boundary() }, { "SQ", square() }, { "UNR", unr() } };
}

system_ptr by_name( const std::string& name )
{
    for ( auto& [ n, x ] : all() )
        if ( n == name )
            return x;
    throw input_error( "unknown fixture '" + name + "'" );
}

morphism inclusion( const system_ptr& sub, const system_ptr& super )
{
    std::map<std::string, std::string> states, actions;
    for ( const auto& s : sub->states() )
        states.emplace( s, s );
    for ( const auto& a : sub->actions() )
        actions.emplace( a, a );
    return make_morphism( sub, super, states, actions );
}

std::vector<morphism> sample_generating_cofibrations()
{
    return { make_morphism( empty(), pt(), {}, {} ), inclusion( two(), seg() ),
             inclusion( square_boundary(), square() ) };
}

} // namespace wtslab::fixtures
