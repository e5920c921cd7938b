#include "b2hecke/cli.hpp"

#include <ostream>
#include <set>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"

#include "b2hecke/bernstein.hpp"
#include "b2hecke/cells.hpp"
#include "b2hecke/coxeter.hpp"
#include "b2hecke/errors.hpp"
#include "b2hecke/hecke.hpp"
#include "b2hecke/klbasis.hpp"
#include "b2hecke/laurent.hpp"
#include "b2hecke/phimaps.hpp"
#include "b2hecke/repring.hpp"
#include "b2hecke/textio.hpp"
#include "b2hecke/weights.hpp"

namespace b2hecke {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json laurent_json(const Laurent& c) {
    ordered_json terms = ordered_json::array();
    if (!c.is_zero())
        for (int e = c.min_exp(); e <= c.max_exp(); ++e)
            if (c.coeff(e) != 0) terms.push_back({{"v", e}, {"coeff", c.coeff(e)}});
    return {{"terms", terms}, {"str", c.str()}};
}

ordered_json hecke_json(const HeckeElt& h) {
    ordered_json terms = ordered_json::array();
    for (const auto& [w, c] : h.terms())
        terms.push_back({{"element", element_str(w)}, {"coeff", laurent_json(c)}});
    return {{"basis", std::string(1, basis_char(h.basis()))},
            {"terms", terms},
            {"str", hecke_str(h)}};
}

ordered_json rep_json(const RepElt& u) {
    ordered_json table = ordered_json::array();
    for (const auto& [kp, c] : u)
        table.push_back({{"k", kp.first}, {"p", kp.second}, {"coeff", laurent_json(c)}});
    return {{"table", table}, {"str", rep_str(u)}};
}

ordered_json report_json(const VerifyReport& r) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"label", c.label}, {"ok", c.ok}, {"lhs", c.lhs}, {"rhs", c.rhs}});
    ordered_json j{{"name", r.name}, {"ok", r.ok}, {"checks", checks}};
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ordered_json mu_row_json(const MuScanRow& row) {
    return {{"y", element_str(row.y)},
            {"w", element_str(row.w)},
            {"gap", row.w.length() - row.y.length()},
            {"mu", row.mu},
            {"even_gap", row.even_gap}};
}

void print_report(const VerifyReport& r, std::ostream& out) {
    out << "== " << r.name << " ==\n";
    for (const auto& c : r.checks) {
        out << (c.ok ? "  ok   " : "  FAIL ") << c.label << "\n";
        out << "         lhs: " << c.lhs << "\n";
        out << "         rhs: " << c.rhs << "\n";
    }
    if (!r.note.empty()) out << "  note: " << r.note << "\n";
}

// Dominant weights of total degree <= n, ordered by (degree, a).
std::vector<Weight> dominant_range(int n) {
    std::vector<Weight> out;
    for (int d = 0; d <= n; ++d)
        for (int a = 0; a <= d; ++a) out.push_back(Weight{a, d - a});
    return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact canonical basis computations in the extended affine Hecke algebra of type B2",
                 "b2hecke"};
    app.require_subcommand(1);

    int budget = 24;
    bool json = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--budget", budget, "length budget for canonical basis recursions")
            ->capture_default_str();
        sub->add_flag("--json", json, "machine readable output");
    };

    std::string arg_y, arg_w, arg_x;
    int wa = 0, wb = 0, wa2 = 0, wb2 = 0;
    bool mod_c0 = false;
    std::string cprod_basis = "C", sel_basis = "T", crts_basis = "C";
    int range = -1;
    std::string what;

    CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P[y,w]");
    kl->add_option("y", arg_y, "lower element")->required();
    kl->add_option("w", arg_w, "upper element")->required();
    add_common(kl);

    CLI::App* mu_cmd = app.add_subcommand("mu", "leading coefficient mu(y,w)");
    mu_cmd->add_option("y", arg_y, "lower element")->required();
    mu_cmd->add_option("w", arg_w, "upper element")->required();
    add_common(mu_cmd);

    CLI::App* cprod = app.add_subcommand("cprod", "product C[x]·C[y]");
    cprod->add_option("x", arg_x, "left element")->required();
    cprod->add_option("y", arg_y, "right element")->required();
    cprod->add_flag("--mod-c0", mod_c0, "reduce modulo the a=4 ideal");
    cprod->add_option("--basis", cprod_basis, "output basis: T or C")
        ->check(CLI::IsMember({"T", "C"}))
        ->capture_default_str();
    add_common(cprod);

    CLI::App* cell = app.add_subcommand("cell", "left cell of an element");
    cell->add_option("w", arg_w, "element")->required();
    add_common(cell);

    CLI::App* avalue = app.add_subcommand("avalue", "a-function value of an element");
    avalue->add_option("w", arg_w, "element")->required();
    add_common(avalue);

    CLI::App* selement = app.add_subcommand("selement", "central element S(a,b)");
    selement->add_option("a", wa, "first coordinate")->required();
    selement->add_option("b", wb, "second coordinate")->required();
    selement->add_option("--basis", sel_basis, "output basis: T or C")
        ->check(CLI::IsMember({"T", "C"}))
        ->capture_default_str();
    add_common(selement);

    CLI::App* crts = app.add_subcommand("crt-s", "product C[rt]·S(a,b) in the C basis");
    crts->add_option("a", wa, "first coordinate")->required();
    crts->add_option("b", wb, "second coordinate")->required();
    crts->add_flag("--mod-c0", mod_c0, "reduce modulo the a=4 ideal");
    crts->add_option("--basis", crts_basis, "output basis: T or C")
        ->check(CLI::IsMember({"T", "C"}))
        ->capture_default_str();
    add_common(crts);

    CLI::App* phi = app.add_subcommand("phi", "coefficient table of S(a,b) in the quotient algebra");
    phi->add_option("a", wa, "first coordinate")->required();
    phi->add_option("b", wb, "second coordinate")->required();
    add_common(phi);

    CLI::App* tensor = app.add_subcommand("tensor", "tensor product decomposition V(a,b) x V(c,d)");
    tensor->add_option("a", wa, "first coordinate")->required();
    tensor->add_option("b", wb, "second coordinate")->required();
    tensor->add_option("c", wa2, "first coordinate of the second factor")->required();
    tensor->add_option("d", wb2, "second coordinate of the second factor")->required();
    add_common(tensor);

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("what", what, "lemma31, lemma32, lemma35, thm36 or mu-scan")
        ->required()
        ->check(CLI::IsMember({"lemma31", "lemma32", "lemma35", "thm36", "mu-scan"}));
    verify->add_option("--range", range,
                       "size parameter: chain index, weight degree or scan length");
    add_common(verify);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("b2hecke");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (*kl || *mu_cmd) {
            KLTable tab(budget);
            GroupElt y = parse_element(arg_y);
            GroupElt w = parse_element(arg_w);
            if (*kl) {
                Laurent p = tab.kl_polynomial(y, w);
                if (json)
                    out << ordered_json{{"command", "kl"},
                                        {"y", element_str(y)},
                                        {"w", element_str(w)},
                                        {"polynomial", laurent_json(p)}}
                               .dump(2)
                        << "\n";
                else
                    out << p.str() << "\n";
            } else {
                long long m = tab.mu(y, w);
                if (json)
                    out << ordered_json{{"command", "mu"},
                                        {"y", element_str(y)},
                                        {"w", element_str(w)},
                                        {"mu", m}}
                               .dump(2)
                        << "\n";
                else
                    out << m << "\n";
            }
            return 0;
        }

        if (*cprod) {
            KLTable tab(budget);
            CellClassifier cells;
            HeckeElt prod = tab.c_multiply(parse_element(arg_x), parse_element(arg_y));
            if (mod_c0) prod = reduce_mod_c0(prod, cells);
            if (cprod_basis == "T") prod = tab.c_to_t(prod);
            if (json)
                out << ordered_json{{"command", "cprod"}, {"product", hecke_json(prod)}}.dump(2)
                    << "\n";
            else
                out << hecke_str(prod) << "\n";
            return 0;
        }

        if (*cell || *avalue) {
            CellClassifier cells;
            GroupElt w = parse_element(arg_w);
            LeftCell c = cells.classify(w);
            if (*cell) {
                if (json)
                    out << ordered_json{{"command", "cell"},
                                        {"element", element_str(w)},
                                        {"cell", cell_name(c)},
                                        {"a", cell_a_value(c)}}
                               .dump(2)
                        << "\n";
                else
                    out << cell_name(c) << "\n";
            } else {
                if (json)
                    out << ordered_json{{"command", "avalue"},
                                        {"element", element_str(w)},
                                        {"a", cell_a_value(c)}}
                               .dump(2)
                        << "\n";
                else
                    out << cell_a_value(c) << "\n";
            }
            return 0;
        }

        if (*selement) {
            HeckeElt s = s_element(Weight{wa, wb}).expansion;
            if (sel_basis == "C") {
                KLTable tab(budget);
                s = tab.t_to_c(s);
            }
            if (json)
                out << ordered_json{{"command", "selement"},
                                    {"lambda", {wa, wb}},
                                    {"expansion", hecke_json(s)}}
                           .dump(2)
                    << "\n";
            else
                out << hecke_str(s) << "\n";
            return 0;
        }

        if (*crts) {
            KLTable tab(budget);
            CellClassifier cells;
            HeckeElt prod = crt_s_product(Weight{wa, wb}, mod_c0, tab, cells);
            if (crts_basis == "T") prod = tab.c_to_t(prod);
            if (json)
                out << ordered_json{{"command", "crt-s"},
                                    {"lambda", {wa, wb}},
                                    {"mod_c0", mod_c0},
                                    {"product", hecke_json(prod)}}
                           .dump(2)
                    << "\n";
            else
                out << hecke_str(prod) << "\n";
            return 0;
        }

        if (*phi) {
            RepElt table = phi_s(Weight{wa, wb});
            if (json)
                out << ordered_json{{"command", "phi"},
                                    {"lambda", {wa, wb}},
                                    {"image", rep_json(table)}}
                           .dump(2)
                    << "\n";
            else
                out << rep_str(table) << "\n";
            return 0;
        }

        if (*tensor) {
            auto decomp = tensor_decompose(Weight{wa, wb}, Weight{wa2, wb2});
            if (json) {
                ordered_json parts = ordered_json::array();
                for (const auto& [mu, m] : decomp)
                    parts.push_back({{"lambda", {mu.a, mu.b}}, {"mult", m}});
                out << ordered_json{{"command", "tensor"},
                                    {"factors", {{wa, wb}, {wa2, wb2}}},
                                    {"summands", parts}}
                           .dump(2)
                    << "\n";
            } else {
                bool first = true;
                for (const auto& [mu, m] : decomp) {
                    if (!first) out << " + ";
                    first = false;
                    if (m != 1) out << m << "·";
                    out << "V(" << mu.a << "," << mu.b << ")";
                }
                out << "\n";
            }
            return 0;
        }

        if (*verify) {
            KLTable tab(budget);
            CellClassifier cells;

            if (what == "mu-scan") {
                int n = range < 0 ? 14 : range;
                MuScanReport rep = mu_scan(n, tab, cells);
                if (json) {
                    ordered_json rows = ordered_json::array();
                    for (const auto& row : rep.rows) rows.push_back(mu_row_json(row));
                    ordered_json ce = ordered_json::array();
                    for (const auto& row : rep.counterexamples) ce.push_back(mu_row_json(row));
                    out << ordered_json{{"command", "verify"},
                                        {"what", "mu-scan"},
                                        {"max_len", rep.max_len},
                                        {"pairs_scanned", rep.pairs_scanned},
                                        {"rows", rows},
                                        {"counterexamples", ce}}
                               .dump(2)
                        << "\n";
                } else {
                    out << "mu scan over lengths <= " << rep.max_len << ": "
                        << rep.pairs_scanned << " pairs\n";
                    for (const auto& row : rep.rows)
                        out << "  y=" << element_str(row.y) << "  w=" << element_str(row.w)
                            << "  gap=" << row.w.length() - row.y.length()
                            << "  mu=" << row.mu << (row.even_gap ? "  (even gap)" : "")
                            << "\n";
                    if (rep.counterexamples.empty())
                        out << "counterexamples: none\n";
                    else
                        out << "counterexamples: " << rep.counterexamples.size() << "\n";
                }
                return 0;  // exploratory: reporting only
            }

            std::vector<VerifyReport> reports;
            if (what == "lemma31") {
                int n = range < 0 ? 4 : range;
                std::set<std::pair<int, int>> pairs;
                for (int m = 1; m <= n; ++m) pairs.insert({1, m});
                for (int m = 1; m <= std::max(1, n - 1); ++m)
                    for (int k = m; k <= std::max(1, n - 1); ++k) pairs.insert({m, k});
                for (const auto& [m, k] : pairs)
                    reports.push_back(verify_chain_product(m, k, tab, cells));
            } else if (what == "lemma32") {
                reports.push_back(verify_fundamental_products(tab, cells));
            } else if (what == "thm36") {
                int n = range < 0 ? 3 : range;
                for (Weight lambda : dominant_range(n))
                    reports.push_back(verify_crt_s_expansion(lambda, tab, cells));
            } else if (what == "lemma35") {
                int n = range < 0 ? 3 : range;
                for (Weight lambda : dominant_range(n))
                    reports.push_back(verify_quotient_support(lambda, tab, cells));
            }

            bool all_ok = true;
            for (const auto& r : reports) all_ok = all_ok && r.ok;
            if (json) {
                ordered_json list = ordered_json::array();
                for (const auto& r : reports) list.push_back(report_json(r));
                out << ordered_json{{"command", "verify"},
                                    {"what", what},
                                    {"ok", all_ok},
                                    {"reports", list}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& r : reports) print_report(r, out);
                out << "verify " << what << ": " << (all_ok ? "PASS" : "FAIL") << " ("
                    << reports.size() << (reports.size() == 1 ? " report)" : " reports)")
                    << "\n";
            }
            return all_ok ? 0 : 1;
        }
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const VerificationFailure& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace b2hecke
