#include "b2hecke/textio.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

#include "b2hecke/errors.hpp"

namespace b2hecke {

std::string element_str(const GroupElt& w) {
    std::string word = w.word();
    if (w.omega_exp()) return "w." + word;
    return word.empty() ? std::string("e") : word;
}

GroupElt parse_element(const std::string& text) {
    if (text == "e") return GroupElt::identity();
    if (text.empty()) throw ParseError("empty element string");
    bool coset = text.size() >= 2 && text[0] == 'w' && text[1] == '.';
    std::string letters = coset ? text.substr(2) : text;
    GroupElt w = word_to_element(letters);  // throws ParseError on bad letters
    return coset ? GroupElt::omega() * w : w;
}

CoeffFormat format_coeff(const Laurent& c) {
    const Laurent two = quantum_two();
    for (int sign = 0; sign < 2; ++sign) {
        Laurent x = (sign == 1) ? -c : c;
        int k = 0;
        while (!x.is_zero()) {
            if (x.min_exp() == x.max_exp() && x.coeff(x.min_exp()) > 0) {
                long long n = x.coeff(x.min_exp());
                int e = x.min_exp();
                std::string f;
                if (n != 1 || e != 0) f = Laurent::term(n, e).str();
                if (k >= 1) {
                    if (!f.empty()) f += "·";
                    f += "[2]";
                    if (k > 1) f += "^" + std::to_string(k);
                }
                return {sign == 1, f};
            }
            try {
                x = x.divide_exact(two);
                ++k;
            } catch (const NotDivisible&) {
                break;
            }
        }
    }
    // general polynomial: take the sign of the leading coefficient outside
    bool neg = !c.is_zero() && c.coeff(c.max_exp()) < 0;
    Laurent body = neg ? -c : c;
    return {neg, "(" + body.str() + ")"};
}

namespace {

void append_term(std::string& out, bool& first, const CoeffFormat& f,
                 const std::string& symbol) {
    if (first) {
        if (f.negative) out += "-";
        first = false;
    } else {
        out += f.negative ? " - " : " + ";
    }
    if (!f.factor.empty()) {
        out += f.factor;
        if (!symbol.empty()) out += "·";
    }
    if (!symbol.empty())
        out += symbol;
    else if (f.factor.empty())
        out += "1";
}

std::string basis_combination_str(const std::map<GroupElt, Laurent>& terms, char b) {
    if (terms.empty()) return "0";
    std::vector<std::tuple<int, std::string, int, const GroupElt*, const Laurent*>> keyed;
    keyed.reserve(terms.size());
    for (const auto& [w, c] : terms)
        keyed.emplace_back(w.length(), w.word(), w.omega_exp(), &w, &c);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x)) <
               std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y));
    });
    std::string out;
    bool first = true;
    for (const auto& [len, word, coset, w, c] : keyed) {
        (void)len;
        (void)word;
        (void)coset;
        std::string symbol;
        symbol += b;
        symbol += '[';
        symbol += element_str(*w);
        symbol += ']';
        append_term(out, first, format_coeff(*c), symbol);
    }
    return out;
}

}  // namespace

std::string hecke_str(const HeckeElt& h) {
    return basis_combination_str(h.terms(), basis_char(h.basis()));
}

std::string quotient_str(const std::map<GroupElt, Laurent>& coords) {
    return basis_combination_str(coords, 'C');
}

std::string rep_str(const RepElt& u) {
    if (u.empty()) return "0";
    // order: plain terms before eps terms, each group by descending k
    std::vector<std::pair<std::pair<int, int>, const Laurent*>> keyed;
    keyed.reserve(u.size());
    for (const auto& [kp, c] : u) keyed.emplace_back(kp, &c);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
        return std::make_pair(x.first.second, -x.first.first) <
               std::make_pair(y.first.second, -y.first.first);
    });
    std::string out;
    bool first = true;
    for (const auto& [kp, c] : keyed) {
        auto [k, p] = kp;
        std::string symbol;
        if (k > 0) symbol = "V(" + std::to_string(k) + ")";
        if (p == 1) {
            if (!symbol.empty()) symbol += "·";
            symbol += "eps";
        }
        append_term(out, first, format_coeff(*c), symbol);
    }
    return out;
}

}  // namespace b2hecke
