#pragma once

// The partition of the group into 16 left cells and 4 two-sided cells, the
// a-function, and the quotient structure used by the verification engine.
//
// Writing W^J for the set of elements with right descent set exactly J, the
// left cells are given by right-multiplication chains:
//   A_rs = W^{rs}              A_st = W^{st}
//   A_rt = A_rs.t              A_rt' = A_st.r
//   A_s  = A_rt.s              A_s'  = A_rt'.s
//   A_r  = A_s.r               A_t   = A_s'.t
//   B_rt = W^{rt} - (A_rt u A_rt')
//   B_s  = B_rt.s              B_r = B_s.r            B_t = B_s.t
//   C_r  = W^r - (A_r u B_r)   C_t = W^t - (A_t u B_t)
//   C_s  = W^s - (A_s u A_s' u B_s)
//   D_empty = {e}
// where X.g is read as: w lies in X.g iff R(w) forces g and wg (shorter)
// lies in X.  The a-function is 4 on A-cells, 2 on B-cells, 1 on C-cells and
// 0 on the identity; elements of the omega coset inherit the classification
// of their omega-free part.

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "b2hecke/coxeter.hpp"
#include "b2hecke/errors.hpp"
#include "b2hecke/hecke.hpp"

namespace b2hecke {

enum class LeftCell : uint8_t {
    A_rs, A_rt, A_s, A_r,
    A_st, A_rtp, A_sp, A_t,
    B_rt, B_s, B_r, B_t,
    C_r, C_s, C_t,
    D_empty,
};

const char* cell_name(LeftCell c);
int cell_a_value(LeftCell c);

class CellClassifier {
public:
    LeftCell classify(const GroupElt& w);
    int a_value(const GroupElt& w) { return cell_a_value(classify(w)); }

    // The set equation for one cell, evaluated literally; used to confirm
    // that the sixteen predicates partition the group.
    bool in_left_cell(const GroupElt& w, LeftCell c);

private:
    LeftCell classify_wprime(const GroupElt& w);
    std::map<GroupElt, LeftCell> memo_;
};

// Drops every C-basis term whose element has a-value 4 (the span of those
// terms is a two-sided ideal, so this is reduction modulo that ideal).
HeckeElt reduce_mod_c0(const HeckeElt& h, CellClassifier& cells);

// Coordinates of a C-basis element in the quotient of the a>=2 ideal by the
// a=4 ideal: the a=4 terms vanish and the a=2 terms index the basis.
// Throws NotInIdeal if a term with a-value < 2 is present.
std::map<GroupElt, Laurent> project_to_quotient(const HeckeElt& h, CellClassifier& cells);

// The distinguished elements rt(srt)^m omega^p spanning the quotient
// subalgebra of interest.
GroupElt chain_element(int m, int p);

// Inverse of chain_element on its image: (m, p) if the omega-free part
// equals rt(srt)^m, otherwise nullopt.
std::optional<std::pair<int, int>> parse_chain_index(const GroupElt& w);

}  // namespace b2hecke
