// Text rendering and parsing: element syntax, the quantum-integer factored
// coefficient format, term ordering in combinations, and the representation
// ring renderer.

#include "b2hecke/textio.hpp"
#include "doctest.h"

using namespace b2hecke;

TEST_SUITE("textio") {

TEST_CASE("element round trips") {
    CHECK(element_str(GroupElt::identity()) == "e");
    CHECK(element_str(GroupElt::omega()) == "w.");
    CHECK(element_str(word_to_element("tr")) == "rt");
    CHECK(element_str(GroupElt::omega() * word_to_element("rsr")) == "w.rsr");
    CHECK(parse_element("e") == GroupElt::identity());
    CHECK(parse_element("w.") == GroupElt::omega());
    CHECK(parse_element("w.rsr") == GroupElt::omega() * word_to_element("rsr"));
    // parsing accepts non-reduced words
    CHECK(parse_element("rr") == GroupElt::identity());
    CHECK(parse_element("tsts") == parse_element("stst"));
    for (const GroupElt& w : enumerate_elements(6, true))
        CHECK(parse_element(element_str(w)) == w);
}

TEST_CASE("parse failures") {
    CHECK_THROWS_AS(parse_element(""), ParseError);
    CHECK_THROWS_AS(parse_element("xyz"), ParseError);
    CHECK_THROWS_AS(parse_element("w.x"), ParseError);
    CHECK_THROWS_AS(parse_element("R"), ParseError);
    CHECK_THROWS_AS(parse_element("r t"), ParseError);
}

TEST_CASE("coefficient formatting") {
    auto fmt = [](const Laurent& c) {
        CoeffFormat f = format_coeff(c);
        return std::string(f.negative ? "-" : "+") + "|" + f.factor;
    };
    CHECK(fmt(Laurent(1)) == "+|");
    CHECK(fmt(Laurent(-1)) == "-|");
    CHECK(fmt(Laurent(3)) == "+|3");
    CHECK(fmt(quantum_two()) == "+|[2]");
    CHECK(fmt(-quantum_two()) == "-|[2]");
    CHECK(fmt(quantum_two() * quantum_two()) == "+|[2]^2");
    CHECK(fmt(Laurent(-3) * quantum_two() * quantum_two()) == "-|3·[2]^2");
    CHECK(fmt(Laurent::v(1) * quantum_two()) == "+|q^(1/2)·[2]");
    // q + 1 factors as q^(1/2)·[2]
    CHECK(fmt(Laurent::v(2) + Laurent(1)) == "+|q^(1/2)·[2]");
    // q + 1 + q^-1 does not factor and is parenthesized verbatim
    CHECK(fmt(Laurent::v(2) + Laurent(1) + Laurent::v(-2)) == "+|(q + 1 + q^-1)");
    CHECK(fmt(-(Laurent::v(2) + Laurent(1) + Laurent::v(-2))) == "-|(q + 1 + q^-1)");
}

TEST_CASE("combination rendering") {
    HeckeElt h(Basis::T);
    h.add_term(parse_element("e"), Laurent(1));
    h.add_term(parse_element("r"), -quantum_two());
    h.add_term(parse_element("w.r"), Laurent::v(2));
    h.add_term(parse_element("rtsrt"), Laurent(1));
    CHECK(hecke_str(h) == "T[e] - [2]·T[r] + q·T[w.r] + T[rtsrt]");
    CHECK(hecke_str(HeckeElt(Basis::C)) == "0");
    HeckeElt lead(Basis::C);
    lead.add_term(parse_element("rt"), -quantum_two());
    CHECK(hecke_str(lead) == "-[2]·C[rt]");
    std::map<GroupElt, Laurent> coords{{parse_element("rt"), Laurent(1)},
                                       {parse_element("rtsrt"), -quantum_two()}};
    CHECK(quotient_str(coords) == "C[rt] - [2]·C[rtsrt]");
}

TEST_CASE("representation ring rendering") {
    RepElt u{{{1, 0}, Laurent(1)},
             {{0, 0}, Laurent(-1)},
             {{1, 1}, quantum_two()},
             {{0, 1}, Laurent(1)}};
    CHECK(rep_str(u) == "V(1) - 1 + [2]·V(1)·eps + eps");
    RepElt plain{{{0, 0}, Laurent(1)}};
    CHECK(rep_str(plain) == "1");
    RepElt eps{{{0, 1}, Laurent(-1)}};
    CHECK(rep_str(eps) == "-eps");
}

}  // TEST_SUITE
