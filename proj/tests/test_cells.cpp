// The sixteen-cell classification: frozen assignments, the partition
// property against the literal set equations, descent constancy, a-values,
// the two ideals, and the distinguished chain elements.

#include <map>
#include <string>

#include "b2hecke/cells.hpp"
#include "b2hecke/klbasis.hpp"
#include "b2hecke/textio.hpp"
#include "doctest.h"

using namespace b2hecke;

namespace {

GroupElt E(const std::string& s) { return parse_element(s); }

const LeftCell kAllCells[] = {
    LeftCell::A_rs, LeftCell::A_rt, LeftCell::A_s, LeftCell::A_r,
    LeftCell::A_st, LeftCell::A_rtp, LeftCell::A_sp, LeftCell::A_t,
    LeftCell::B_rt, LeftCell::B_s, LeftCell::B_r, LeftCell::B_t,
    LeftCell::C_r, LeftCell::C_s, LeftCell::C_t, LeftCell::D_empty,
};

}  // namespace

TEST_SUITE("cells") {

TEST_CASE("frozen classifications") {
    CellClassifier cells;
    auto name = [&](const std::string& w) {
        return std::string(cell_name(cells.classify(E(w))));
    };
    CHECK(name("e") == "D_empty");
    CHECK(name("w.") == "D_empty");
    CHECK(name("rt") == "B_rt");
    CHECK(name("rtsrt") == "B_rt");
    CHECK(name("rsr") == "C_r");
    CHECK(name("sr") == "C_r");
    CHECK(name("rs") == "C_s");
    CHECK(name("srs") == "C_s");
    CHECK(name("stsr") == "C_r");  // the translation by (1,0)
    CHECK(name("w.tsr") == "C_r");
    CHECK(name("rsrtsr") == "B_r");
    CHECK(name("rsrtsrstsr") == "A_r");
    CHECK(cells.a_value(E("rsrtsrstsr")) == 4);
    CHECK(cells.a_value(E("rt")) == 2);
    CHECK(cells.a_value(E("rsr")) == 1);
    CHECK(cells.a_value(E("e")) == 0);
}

TEST_CASE("frozen census up to length 10") {
    CellClassifier cells;
    std::map<std::string, int> census;
    for (const GroupElt& w : enumerate_elements(10))
        census[cell_name(cells.classify(w))]++;
    std::map<std::string, int> expected{
        {"A_r", 5},  {"A_rs", 12}, {"A_rt", 9},  {"A_rt'", 9},
        {"A_s", 7},  {"A_s'", 7},  {"A_st", 12}, {"A_t", 5},
        {"B_r", 9},  {"B_rt", 12}, {"B_s", 10},  {"B_t", 9},
        {"C_r", 11}, {"C_s", 19},  {"C_t", 11},  {"D_empty", 1},
    };
    CHECK(census == expected);
}

TEST_CASE("the sixteen predicates partition the group") {
    CellClassifier cells;
    for (const GroupElt& w : enumerate_elements(10, true)) {
        int hits = 0;
        LeftCell found = LeftCell::D_empty;
        for (LeftCell c : kAllCells) {
            if (cells.in_left_cell(w, c)) {
                ++hits;
                found = c;
            }
        }
        CHECK(hits == 1);
        CHECK(found == cells.classify(w));
    }
}

TEST_CASE("right descent sets are constant on cells") {
    CellClassifier cells;
    std::map<LeftCell, uint8_t> seen;
    for (const GroupElt& w : enumerate_elements(10, true)) {
        LeftCell c = cells.classify(w);
        auto [it, fresh] = seen.emplace(c, w.right_descents());
        if (!fresh) CHECK(it->second == w.right_descents());
    }
    CHECK(seen.size() == 16);  // every cell is populated by length 10
}

TEST_CASE("a-values and the identity cell") {
    CellClassifier cells;
    for (const GroupElt& w : enumerate_elements(10, true)) {
        int a = cells.a_value(w);
        CHECK((a == 0 || a == 1 || a == 2 || a == 4));
        if (a == 0) CHECK(w.wprime_part().is_identity());
        // the omega coset inherits the classification of the omega-free part
        CHECK(cells.classify(GroupElt::omega() * w) == cells.classify(w));
    }
}

TEST_CASE("reduction modulo the a=4 ideal") {
    CellClassifier cells;
    HeckeElt h(Basis::C);
    h.add_term(E("rt"), Laurent(1));
    h.add_term(E("rsrtsrstsr"), quantum_two());  // a = 4, dies
    h.add_term(E("rsr"), Laurent::v(3));         // a = 1, survives
    HeckeElt red = reduce_mod_c0(h, cells);
    CHECK(red.size() == 2);
    CHECK(red.coeff(E("rt")) == Laurent(1));
    CHECK(red.coeff(E("rsr")) == Laurent::v(3));
    CHECK(red.coeff(E("rsrtsrstsr")).is_zero());
    CHECK_THROWS_AS(reduce_mod_c0(HeckeElt::unit(Basis::T), cells), BasisMismatch);
}

TEST_CASE("projection to the a=2 layer") {
    CellClassifier cells;
    HeckeElt h(Basis::C);
    h.add_term(E("rtsrt"), quantum_two());
    h.add_term(E("rsrtsrstsr"), Laurent(1));  // a = 4 coordinates vanish
    auto coords = project_to_quotient(h, cells);
    CHECK(coords.size() == 1);
    CHECK(coords.at(E("rtsrt")) == quantum_two());
    // terms below the ideal are rejected
    HeckeElt bad(Basis::C);
    bad.add_term(E("rsr"), Laurent(1));
    CHECK_THROWS_AS(project_to_quotient(bad, cells), NotInIdeal);
    CHECK_THROWS_AS(project_to_quotient(HeckeElt::unit(Basis::T), cells), BasisMismatch);
}

TEST_CASE("chain elements") {
    CellClassifier cells;
    for (int m = 0; m <= 4; ++m) {
        for (int p = 0; p <= 1; ++p) {
            GroupElt w = chain_element(m, p);
            CHECK(w.length() == 2 + 3 * m);
            CHECK(w.omega_exp() == p);
            CHECK(cells.classify(w) == LeftCell::B_rt);
            auto idx = parse_chain_index(w);
            REQUIRE(idx.has_value());
            CHECK(idx->first == m);
            CHECK(idx->second == p);
        }
    }
    CHECK(element_str(chain_element(0, 0)) == "rt");
    CHECK(element_str(chain_element(1, 0)) == "rtsrt");
    CHECK(element_str(chain_element(2, 1)) == "w.rtsrtsrt");
    // the length-zero generator commutes with every chain element
    CHECK(chain_element(2, 0) * GroupElt::omega() ==
          GroupElt::omega() * chain_element(2, 0));
    // a non-chain element of chain length is rejected
    CHECK(!parse_chain_index(E("rstsr")).has_value());
    CHECK(!parse_chain_index(E("s")).has_value());
    CHECK_THROWS_AS(chain_element(-1, 0), Error);
    CHECK_THROWS_AS(chain_element(0, 2), Error);
}

}  // TEST_SUITE
