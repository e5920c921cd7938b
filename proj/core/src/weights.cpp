#include "b2hecke/weights.hpp"

#include <algorithm>
#include <array>

namespace b2hecke {

namespace {

struct Mat {
    // (a,b) -> (m00*a + m01*b, m10*a + m11*b)
    int m00, m01, m10, m11;
    bool operator==(const Mat& o) const {
        return m00 == o.m00 && m01 == o.m01 && m10 == o.m10 && m11 == o.m11;
    }
};

constexpr Mat kMatE{1, 0, 0, 1};
constexpr Mat kMatS{-1, 0, 2, 1};   // s(a,b) = (-a, 2a+b)
constexpr Mat kMatT{1, 1, 0, -1};   // t(a,b) = (a+b, -b)

Mat mat_mul(const Mat& x, const Mat& y) {
    return {x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
            x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

Weight mat_act(const Mat& m, Weight v) {
    return {m.m00 * v.a + m.m01 * v.b, m.m10 * v.a + m.m11 * v.b};
}

struct W0Tables {
    std::array<Mat, 8> mat;
    std::array<std::array<uint8_t, 8>, 8> mul;
    std::array<uint8_t, 8> inv;
    std::array<int8_t, 8> len;
    std::array<const char*, 8> name;

    W0Tables() {
        const char* words[8] = {"e", "s", "t", "st", "ts", "sts", "tst", "stst"};
        for (int i = 0; i < 8; ++i) {
            Mat m = kMatE;
            if (words[i][0] != 'e') {
                for (const char* p = words[i]; *p; ++p) m = mat_mul(m, *p == 's' ? kMatS : kMatT);
            }
            mat[i] = m;
            name[i] = words[i];
            len[i] = (words[i][0] == 'e') ? 0 : (int8_t)std::string(words[i]).size();
        }
        auto find = [&](const Mat& m) {
            for (int i = 0; i < 8; ++i)
                if (mat[i] == m) return i;
            throw Error("W0 closure failure");
        };
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) mul[i][j] = (uint8_t)find(mat_mul(mat[i], mat[j]));
            inv[i] = 0;
        }
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (mul[i][j] == 0) inv[i] = (uint8_t)j;
        self_check();
    }

    void self_check() const {
        auto expect = [](bool cond, const char* what) {
            if (!cond) throw Error(std::string("root datum self-check failed: ") + what);
        };
        // all eight matrices distinct
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j) expect(!(mat[i] == mat[j]), "order 8");
        // Coxeter relations
        expect(mul[1][1] == 0 && mul[2][2] == 0, "involutions");
        int stp = mul[1][2];
        int p2 = mul[stp][stp];
        expect(mul[p2][p2] == 0 && p2 != 0, "(st)^4 = e, order 4");
        // fundamental weight pairings: <x_i, alpha_j^vee> = delta_ij
        expect(kX1.a == 1 && kX1.b == 0 && kX2.a == 0 && kX2.b == 1, "pairings");
        // Cartan matrix of the long/short simple pair
        expect(kAlpha1.a == 2 && kAlpha1.b == -2, "row alpha1");
        expect(kAlpha2.a == -1 && kAlpha2.b == 2, "row alpha2");
        // alpha-expansions invert the x-definitions: x1 = alpha1 + alpha2, 2*x2 = alpha1 + 2*alpha2
        expect(kAlpha1 + kAlpha2 == kX1, "x1 expansion");
        expect(kAlpha1 + 2 * kAlpha2 == Weight{0, 2}, "x2 expansion");
        // reflections match their root-data formulas
        expect(mat_act(kMatS, {5, 3}) == Weight{5, 3} - 5 * kAlpha1, "s formula");
        expect(mat_act(kMatT, {5, 3}) == Weight{5, 3} - 3 * kAlpha2, "t formula");
        // invariance of the pairing
        for (int u = 0; u < 8; ++u) {
            Weight x = mat_act(mat[u], {2, -1}), y = mat_act(mat[u], {1, 3});
            expect(ip(x, y) == ip({2, -1}, {1, 3}), "invariant form");
        }
    }
};

const W0Tables& tables() {
    static const W0Tables t;
    return t;
}

// positive roots, in x-coordinates
constexpr std::array<Weight, 4> kPositive{Weight{2, -2}, Weight{-1, 2}, Weight{1, 0}, Weight{0, 2}};

}  // namespace

int W0::mul(int u, int v) { return tables().mul[u][v]; }
int W0::inverse(int u) { return tables().inv[u]; }
int W0::det(int u) { return tables().len[u] % 2 == 0 ? 1 : -1; }
int W0::length(int u) { return tables().len[u]; }
Weight W0::act(int u, Weight mu) { return mat_act(tables().mat[u], mu); }
const char* W0::name(int u) { return tables().name[u]; }

std::vector<Weight> orbit(Weight mu) {
    std::vector<Weight> out;
    for (int u = 0; u < W0::kOrder; ++u) {
        Weight v = W0::act(u, mu);
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Weight dominant_rep(Weight mu) {
    for (int u = 0; u < W0::kOrder; ++u) {
        Weight v = W0::act(u, mu);
        if (v.dominant()) return v;
    }
    throw Error("orbit without dominant representative");
}

namespace {

// lambda - mu in N*alpha1 + N*alpha2? (expansion m = da + db/2, n = da + db)
bool root_cone_leq(Weight mu, Weight lambda) {
    Weight d = lambda - mu;
    if ((d.b & 1) != 0) return false;
    return d.a + d.b / 2 >= 0 && d.a + d.b >= 0;
}

long long freudenthal(Weight lambda, Weight mu, std::map<Weight, long long>& memo) {
    mu = dominant_rep(mu);
    if (auto it = memo.find(mu); it != memo.end()) return it->second;
    if (mu == lambda) return memo[mu] = 1;
    if (!root_cone_leq(mu, lambda)) return memo[mu] = 0;

    Weight d = lambda - mu;
    int jmax = (d.a + d.b / 2) + (d.a + d.b);  // total root-cone height of d
    long long num = 0;
    for (Weight alpha : kPositive) {
        for (int j = 1; j <= jmax; ++j) {
            Weight nu = mu + j * alpha;
            long long m = freudenthal(lambda, nu, memo);
            if (m != 0) num = chk_add(num, chk_mul(m, ip(nu, alpha)));
        }
    }
    Weight lr = lambda + kRho, mr = mu + kRho;
    long long den = ip(lr, lr) - ip(mr, mr);
    if (den <= 0) throw Error("freudenthal denominator not positive");
    long long twice = chk_mul(2, num);
    if (twice % den != 0) throw Error("freudenthal division not exact");
    return memo[mu] = twice / den;
}

}  // namespace

long long weight_multiplicity(Weight lambda, Weight mu) {
    if (!lambda.dominant()) throw NotDominant("weight_multiplicity needs dominant lambda");
    thread_local std::map<Weight, std::map<Weight, long long>> memo;
    return freudenthal(lambda, mu, memo[lambda]);
}

long long irrep_dim(Weight lambda) {
    if (!lambda.dominant()) throw NotDominant("irrep_dim needs dominant lambda");
    long long a = lambda.a, b = lambda.b;
    return (a + 1) * (b + 1) * (2 * a + b + 3) * (a + b + 2) / 6;
}

std::map<Weight, long long> character(Weight lambda) {
    if (!lambda.dominant()) throw NotDominant("character needs dominant lambda");
    std::map<Weight, long long> out;
    // lowest weight is -lambda = lambda - (2a+b)*alpha1 - (2a+2b)*alpha2
    int mmax = 2 * lambda.a + lambda.b, nmax = 2 * lambda.a + 2 * lambda.b;
    for (int m = 0; m <= mmax; ++m) {
        for (int n = 0; n <= nmax; ++n) {
            Weight mu = lambda - m * kAlpha1 - n * kAlpha2;
            long long d = weight_multiplicity(lambda, mu);
            if (d > 0) out[mu] = d;
        }
    }
    return out;
}

namespace {

// strictly dominant linear functional used for peeling: 3a+2b
long long peel_height(Weight mu) { return 3LL * mu.a + 2LL * mu.b; }

Weight peel_top(const std::map<Weight, long long>& ch) {
    bool have = false;
    Weight best{};
    for (const auto& [mu, c] : ch) {
        if (c == 0) continue;
        if (!have || peel_height(mu) > peel_height(best) ||
            (peel_height(mu) == peel_height(best) && best < mu)) {
            best = mu;
            have = true;
        }
    }
    if (!have) throw Error("peel_top of zero");
    return best;
}

}  // namespace

std::vector<std::pair<Weight, long long>> peel_character(std::map<Weight, long long> ch) {
    std::vector<std::pair<Weight, long long>> out;
    for (auto it = ch.begin(); it != ch.end();) {
        it = (it->second == 0) ? ch.erase(it) : std::next(it);
    }
    while (!ch.empty()) {
        Weight top = peel_top(ch);
        if (!top.dominant()) throw Error("peel found non-dominant leading weight");
        long long mult = ch[top];
        out.emplace_back(top, mult);
        for (const auto& [mu, d] : character(top)) {
            long long& c = ch[mu];
            c = chk_sub(c, chk_mul(mult, d));
            if (c == 0) ch.erase(mu);
        }
    }
    return out;
}

std::vector<std::pair<Weight, long long>> tensor_decompose(Weight lambda, Weight mu) {
    auto cl = character(lambda);
    auto cm = character(mu);
    std::map<Weight, long long> prod;
    for (const auto& [x, c] : cl)
        for (const auto& [y, d] : cm) {
            long long& p = prod[x + y];
            p = chk_add(p, chk_mul(c, d));
        }
    auto out = peel_character(std::move(prod));
    for (const auto& [w, m] : out)
        if (m <= 0) throw Error("tensor decomposition produced nonpositive multiplicity");
    return out;
}

std::string weight_str(Weight mu) {
    std::string out = std::to_string(mu.a) + "*x1";
    out += (mu.b < 0) ? "-" : "+";
    out += std::to_string(mu.b < 0 ? -mu.b : mu.b) + "*x2";
    return out;
}

}  // namespace b2hecke
