#include "b2hecke/cells.hpp"

namespace b2hecke {

namespace {

constexpr uint8_t kMaskR = 1u << 0;
constexpr uint8_t kMaskS = 1u << 1;
constexpr uint8_t kMaskT = 1u << 2;

GroupElt times(const GroupElt& w, Gen g) { return w * GroupElt::generator(g); }

}  // namespace

const char* cell_name(LeftCell c) {
    switch (c) {
        case LeftCell::A_rs: return "A_rs";
        case LeftCell::A_rt: return "A_rt";
        case LeftCell::A_s: return "A_s";
        case LeftCell::A_r: return "A_r";
        case LeftCell::A_st: return "A_st";
        case LeftCell::A_rtp: return "A_rt'";
        case LeftCell::A_sp: return "A_s'";
        case LeftCell::A_t: return "A_t";
        case LeftCell::B_rt: return "B_rt";
        case LeftCell::B_s: return "B_s";
        case LeftCell::B_r: return "B_r";
        case LeftCell::B_t: return "B_t";
        case LeftCell::C_r: return "C_r";
        case LeftCell::C_s: return "C_s";
        case LeftCell::C_t: return "C_t";
        case LeftCell::D_empty: return "D_empty";
    }
    throw Error("unknown cell");
}

int cell_a_value(LeftCell c) {
    switch (c) {
        case LeftCell::D_empty: return 0;
        case LeftCell::C_r:
        case LeftCell::C_s:
        case LeftCell::C_t: return 1;
        case LeftCell::B_rt:
        case LeftCell::B_s:
        case LeftCell::B_r:
        case LeftCell::B_t: return 2;
        default: return 4;
    }
}

LeftCell CellClassifier::classify(const GroupElt& w) { return classify_wprime(w.wprime_part()); }

LeftCell CellClassifier::classify_wprime(const GroupElt& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    LeftCell out;
    switch (w.right_descents()) {
        case 0:
            if (!w.is_identity()) throw Error("descent-free nonidentity element");
            out = LeftCell::D_empty;
            break;
        case kMaskR | kMaskS:
            out = LeftCell::A_rs;
            break;
        case kMaskS | kMaskT:
            out = LeftCell::A_st;
            break;
        case kMaskR | kMaskT:
            if (classify_wprime(times(w, Gen::t)) == LeftCell::A_rs)
                out = LeftCell::A_rt;
            else if (classify_wprime(times(w, Gen::r)) == LeftCell::A_st)
                out = LeftCell::A_rtp;
            else
                out = LeftCell::B_rt;
            break;
        case kMaskS:
            switch (classify_wprime(times(w, Gen::s))) {
                case LeftCell::A_rt: out = LeftCell::A_s; break;
                case LeftCell::A_rtp: out = LeftCell::A_sp; break;
                case LeftCell::B_rt: out = LeftCell::B_s; break;
                default: out = LeftCell::C_s; break;
            }
            break;
        case kMaskR:
            switch (classify_wprime(times(w, Gen::r))) {
                case LeftCell::A_s: out = LeftCell::A_r; break;
                case LeftCell::B_s: out = LeftCell::B_r; break;
                default: out = LeftCell::C_r; break;
            }
            break;
        case kMaskT:
            switch (classify_wprime(times(w, Gen::t))) {
                case LeftCell::A_sp: out = LeftCell::A_t; break;
                case LeftCell::B_s: out = LeftCell::B_t; break;
                default: out = LeftCell::C_t; break;
            }
            break;
        default:
            throw Error("impossible right descent set");
    }
    memo_.emplace(w, out);
    return out;
}

bool CellClassifier::in_left_cell(const GroupElt& w0, LeftCell c) {
    GroupElt w = w0.wprime_part();
    uint8_t rd = w.right_descents();
    switch (c) {
        case LeftCell::D_empty: return w.is_identity();
        case LeftCell::A_rs: return rd == (kMaskR | kMaskS);
        case LeftCell::A_st: return rd == (kMaskS | kMaskT);
        case LeftCell::A_rt:
            return rd == (kMaskR | kMaskT) && in_left_cell(times(w, Gen::t), LeftCell::A_rs);
        case LeftCell::A_rtp:
            return rd == (kMaskR | kMaskT) && in_left_cell(times(w, Gen::r), LeftCell::A_st);
        case LeftCell::B_rt:
            return rd == (kMaskR | kMaskT) && !in_left_cell(w, LeftCell::A_rt) &&
                   !in_left_cell(w, LeftCell::A_rtp);
        case LeftCell::A_s:
            return rd == kMaskS && in_left_cell(times(w, Gen::s), LeftCell::A_rt);
        case LeftCell::A_sp:
            return rd == kMaskS && in_left_cell(times(w, Gen::s), LeftCell::A_rtp);
        case LeftCell::B_s:
            return rd == kMaskS && in_left_cell(times(w, Gen::s), LeftCell::B_rt);
        case LeftCell::C_s:
            return rd == kMaskS && !in_left_cell(w, LeftCell::A_s) &&
                   !in_left_cell(w, LeftCell::A_sp) && !in_left_cell(w, LeftCell::B_s);
        case LeftCell::A_r:
            return rd == kMaskR && in_left_cell(times(w, Gen::r), LeftCell::A_s);
        case LeftCell::B_r:
            return rd == kMaskR && in_left_cell(times(w, Gen::r), LeftCell::B_s);
        case LeftCell::C_r:
            return rd == kMaskR && !in_left_cell(w, LeftCell::A_r) &&
                   !in_left_cell(w, LeftCell::B_r);
        case LeftCell::A_t:
            return rd == kMaskT && in_left_cell(times(w, Gen::t), LeftCell::A_sp);
        case LeftCell::B_t:
            return rd == kMaskT && in_left_cell(times(w, Gen::t), LeftCell::B_s);
        case LeftCell::C_t:
            return rd == kMaskT && !in_left_cell(w, LeftCell::A_t) &&
                   !in_left_cell(w, LeftCell::B_t);
    }
    throw Error("unknown cell");
}

HeckeElt reduce_mod_c0(const HeckeElt& h, CellClassifier& cells) {
    if (h.basis() != Basis::C) throw BasisMismatch("reduce_mod_c0 expects a C-basis element");
    HeckeElt out(Basis::C);
    for (const auto& [w, c] : h.terms())
        if (cells.a_value(w) != 4) out.add_term(w, c);
    return out;
}

std::map<GroupElt, Laurent> project_to_quotient(const HeckeElt& h, CellClassifier& cells) {
    if (h.basis() != Basis::C) throw BasisMismatch("project_to_quotient expects a C-basis element");
    std::map<GroupElt, Laurent> out;
    for (const auto& [w, c] : h.terms()) {
        int a = cells.a_value(w);
        if (a < 2) throw NotInIdeal("term with a-value " + std::to_string(a) +
                                    " is outside the a>=2 ideal");
        if (a == 2) out.emplace(w, c);
    }
    return out;
}

GroupElt chain_element(int m, int p) {
    if (m < 0 || p < 0 || p > 1) throw Error("chain_element index out of range");
    GroupElt w = word_to_element("rt");
    GroupElt srt = word_to_element("srt");
    for (int i = 0; i < m; ++i) w = w * srt;
    if (p) w = w * GroupElt::omega();
    return w;
}

std::optional<std::pair<int, int>> parse_chain_index(const GroupElt& w) {
    int p = w.omega_exp();
    GroupElt wp = w.wprime_part();
    int len = wp.length();
    if (len < 2 || (len - 2) % 3 != 0) return std::nullopt;
    int m = (len - 2) / 3;
    if (wp != chain_element(m, 0)) return std::nullopt;
    return std::make_pair(m, p);
}

}  // namespace b2hecke
