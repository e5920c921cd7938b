#pragma once

// Text rendering and parsing shared by the CLI, the verification reports and
// the tests.
//
// Element syntax: "e" for the identity, a letter string such as "rtsrt" for
// subgroup elements (read left to right, not required to be reduced when
// parsing), and a "w." prefix for the other coset of the length-zero
// generator, as in "w.rsr"; "w." alone denotes that generator itself.
// Printing always emits the lexicographically smallest reduced word, so
// printed strings reparse to the same element.
//
// Coefficients are rendered in the q-convention of Laurent::str, with powers
// of the quantum integer [2] = q^(1/2) + q^(-1/2) factored out when the
// coefficient is a monomial times such a power: "C[rt] - [2]·C[rtsrt]".

#include <map>
#include <string>

#include "b2hecke/coxeter.hpp"
#include "b2hecke/hecke.hpp"
#include "b2hecke/laurent.hpp"
#include "b2hecke/repring.hpp"

namespace b2hecke {

std::string element_str(const GroupElt& w);

// Inverse of element_str; accepts any letter string in the syntax above.
// Throws ParseError on anything else.
GroupElt parse_element(const std::string& text);

// A coefficient split into a sign and a multiplier to place in front of a
// basis symbol: factor is empty for +-1, "[2]", "3·[2]^2", "q^(1/2)·[2]",
// or a fully parenthesized Laurent polynomial when no such form exists.
struct CoeffFormat {
    bool negative = false;
    std::string factor;
};

CoeffFormat format_coeff(const Laurent& c);

// Linear combination rendered with terms in ascending (length, word, coset)
// order: "C[e] + [2]·T[w.rs] - q·C[rtsrt]" style.
std::string hecke_str(const HeckeElt& h);

// Same rendering for bare quotient coordinates, always in the C basis.
std::string quotient_str(const std::map<GroupElt, Laurent>& coords);

// Representation ring elements: "-[2]·V(1) + 1", "V(1)·eps - [2]·eps".
// Terms are grouped by the sign character and listed by descending k.
std::string rep_str(const RepElt& u);

}  // namespace b2hecke
