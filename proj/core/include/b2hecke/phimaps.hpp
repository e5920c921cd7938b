#pragma once

// The verification engine tying the Hecke algebra side to the representation
// ring side.
//
// The a=2 quotient has basis {C_{rt(srt)^m omega^p}}; rescaling by 1/[2]^2
// turns it into an algebra isomorphic to the representation ring of
// SL2 x Z/2, with (1/[2]^2) C_{rt(srt)^m omega^p} corresponding to V(m)eps^p
// (phi1 below).  Independently, each central element S_lambda has an image
// phi(S_lambda) = sum a_{k,p} V(k) eps^p computed through the monomial route
// (phi_s below).  The headline identity checked here is
//
//     C_{rt} S_lambda  =  sum_{k,p} a_{k,p} C_{rt(srt)^k omega^p}
//
// modulo the a=4 ideal, with the same a_{k,p} on both sides, plus the
// product identities for the chain elements themselves and the structural
// facts (support shape, homomorphism property) that make the dictionary
// work.  Every verifier returns a report carrying both sides of every
// comparison; nothing is asserted silently.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "b2hecke/cells.hpp"
#include "b2hecke/coxeter.hpp"
#include "b2hecke/hecke.hpp"
#include "b2hecke/klbasis.hpp"
#include "b2hecke/laurent.hpp"
#include "b2hecke/repring.hpp"
#include "b2hecke/weights.hpp"

namespace b2hecke {

// One checked equation, with printable renderings of both sides.
struct CheckResult {
    std::string label;
    bool ok = false;
    std::string lhs;
    std::string rhs;
};

struct VerifyReport {
    std::string name;
    bool ok = true;
    std::vector<CheckResult> checks;
    std::string note;  // e.g. the discarded a=4 remainder, for inspection

    void add(CheckResult c) {
        ok = ok && c.ok;
        checks.push_back(std::move(c));
    }
};

// Image of quotient coordinates (C-basis coefficients on the chain elements)
// under the rescaled isomorphism: divides every coefficient by [2]^2 and
// reads the index (m, p) as V(m)eps^p.  Throws NotInChain when an index is
// not a chain element and NotDivisible when a coefficient is not an exact
// multiple of [2]^2.
RepElt phi1(const std::map<GroupElt, Laurent>& coords);

// phi(S_lambda): the a_{k,p} table, computed from the weight-space
// decomposition of V(lambda) through the monomial ring.
RepElt phi_s(Weight lambda);

// The same table computed a second, independent way: write the character of
// lambda as a polynomial f in the two fundamental characters and evaluate f
// at the images of S_{x1} and S_{x2} extracted from actual Hecke products.
RepElt phi_s_via_generators(Weight lambda, KLTable& tab, CellClassifier& cells);

// Exact C-basis expansion of C_{rt} S_lambda, optionally reduced modulo the
// a=4 ideal.  cells is only consulted when mod_c0 is set.
HeckeElt crt_s_product(Weight lambda, bool mod_c0, KLTable& tab, CellClassifier& cells);

// C_{rt} S_{x1} and C_{rt} S_{x2} against their closed-form expansions, as
// exact identities (no quotient).  CLI verb: verify lemma32.
VerifyReport verify_fundamental_products(KLTable& tab, CellClassifier& cells);

// C_{rt(srt)^m} C_{rt(srt)^n} = [2]^2 sum_{i=0}^{min(m,n)} C_{rt(srt)^{m+n-2i}}
// modulo the a=4 ideal, for m, n >= 1.  CLI verb: verify lemma31.
VerifyReport verify_chain_product(int m, int n, KLTable& tab, CellClassifier& cells);

// The headline identity for one dominant weight: C_{rt} S_lambda reduced
// modulo the a=4 ideal against the phi_s(lambda) coefficient table.
// CLI verb: verify thm36.
VerifyReport verify_crt_s_expansion(Weight lambda, KLTable& tab, CellClassifier& cells);

// Support shape: every term of C_{rt} S_lambda surviving reduction has left
// and right descent sets exactly {r, t} and is a chain element.
// CLI verb: verify lemma35.
VerifyReport verify_quotient_support(Weight lambda, KLTable& tab, CellClassifier& cells);

// phi1 is multiplicative: the image of C_{rt(srt)^m omega^p} *
// C_{rt(srt)^n omega^p'} equals V(m)eps^p * V(n)eps^p' for all
// 0 <= m, n <= max_mn and p, p' in {0, 1}.
VerifyReport verify_phi1_homomorphism(int max_mn, KLTable& tab, CellClassifier& cells);

// One scanned pair of the mu-vanishing experiment.
struct MuScanRow {
    GroupElt y;
    GroupElt w;
    long long mu = 0;
    bool even_gap = false;  // l(w) - l(y) even forces mu = 0 for trivial reasons
};

struct MuScanReport {
    int max_len = 0;
    long long pairs_scanned = 0;
    std::vector<MuScanRow> rows;
    std::vector<MuScanRow> counterexamples;  // rows with mu != 0
};

// Tabulates mu(y, w) over pairs y < w where y has a-value 4 and is of
// minimal length in its double coset under the finite Weyl group (no s or t
// descent on either side), w likewise minimal with a-value 1 or 2, and
// 1 <= l(w) - l(y) <= 3 with l(w) <= max_len.  Exploratory: records
// counterexamples, never asserts.  CLI verb: verify mu-scan.
MuScanReport mu_scan(int max_len, KLTable& tab, CellClassifier& cells);

}  // namespace b2hecke
