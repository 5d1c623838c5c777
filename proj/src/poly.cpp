#include "blockeq/poly.hpp"

#include <algorithm>
#include <map>

namespace blockeq {
namespace poly {

P trim(P a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    if (a.empty()) a = {0};
    return a;
}

bool is_zero(const P& a) { return a.size() == 1 && a[0] == 0; }

int deg(const P& a) { return is_zero(a) ? -1 : int(a.size()) - 1; }

P add(const Field& F, const P& a, const P& b) {
    P r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        gfe x = i < a.size() ? a[i] : gfe(0);
        gfe y = i < b.size() ? b[i] : gfe(0);
        r[i] = F.add(x, y);
    }
    return trim(std::move(r));
}

P sub(const Field& F, const P& a, const P& b) {
    P r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        gfe x = i < a.size() ? a[i] : gfe(0);
        gfe y = i < b.size() ? b[i] : gfe(0);
        r[i] = F.sub(x, y);
    }
    return trim(std::move(r));
}

P mul(const Field& F, const P& a, const P& b) {
    if (is_zero(a) || is_zero(b)) return {0};
    P r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j]) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return r;
}

P monic(const Field& F, const P& a) {
    P r = trim(a);
    if (is_zero(r)) return r;
    gfe inv = F.inv(r.back());
    for (auto& c : r) c = F.mul(c, inv);
    return r;
}

std::pair<P, P> divmod(const Field& F, const P& a, const P& b) {
    BQ_REQUIRE(!is_zero(b), "division by zero polynomial");
    P rem = trim(a);
    if (deg(rem) < deg(b)) return {P{0}, rem};
    P quo(deg(rem) - deg(b) + 1, 0);
    gfe lead_inv = F.inv(b.back());
    for (int i = deg(rem) - deg(b); i >= 0; --i) {
        if (int(rem.size()) - 1 < i + deg(b)) continue;
        gfe c = F.mul(rem[i + deg(b)], lead_inv);
        if (!c) continue;
        quo[i] = c;
        for (int j = 0; j <= deg(b); ++j) rem[i + j] = F.sub(rem[i + j], F.mul(c, b[j]));
    }
    return {trim(std::move(quo)), trim(std::move(rem))};
}

P gcd(const Field& F, P a, P b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!is_zero(b)) {
        P r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(F, a);
}

P powmod(const Field& F, P base, long long e, const P& mod) {
    P r{F.from_int(1)};
    base = divmod(F, base, mod).second;
    while (e > 0) {
        if (e & 1) r = divmod(F, mul(F, r, base), mod).second;
        base = divmod(F, mul(F, base, base), mod).second;
        e >>= 1;
    }
    return r;
}

P derivative(const Field& F, const P& a) {
    if (deg(a) <= 0) return {0};
    P r(a.size() - 1, 0);
    for (size_t i = 1; i < a.size(); ++i) {
        gfe c = 0;
        for (long long k = 0; k < (long long)(i % F.p()); ++k) c = F.add(c, a[i]);
        r[i - 1] = c;
    }
    return trim(std::move(r));
}

gfe eval(const Field& F, const P& a, gfe x) {
    gfe r = 0;
    for (int i = int(a.size()) - 1; i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
    return r;
}

namespace {

// strip p-th roots: f(x) = g(x^p) -> g, using c -> c^(p^(m-1))
P pth_root(const Field& F, const P& a) {
    const int p = F.p();
    P r(deg(a) / p + 1, 0);
    for (int i = 0; i <= deg(a) / p; ++i) r[i] = F.frob(a[size_t(i) * p], F.m() - 1);
    return trim(std::move(r));
}

// squarefree decomposition (Yun, char p variant): returns (g_i, i)
void squarefree(const Field& F, const P& f, int mult, std::vector<std::pair<P, int>>& out) {
    if (deg(f) <= 0) return;
    P d = derivative(F, f);
    if (is_zero(d)) {
        // perfect p-th power
        squarefree(F, pth_root(F, f), mult * F.p(), out);
        return;
    }
    P c = gcd(F, f, d);
    P w = divmod(F, f, c).first;  // product of squarefree part factors
    int i = 1;
    while (deg(w) > 0) {
        P y = gcd(F, w, c);
        P fac = divmod(F, w, y).first;
        if (deg(fac) > 0) out.push_back({monic(F, fac), mult * i});
        w = y;
        c = divmod(F, c, y).first;
        ++i;
    }
    if (deg(c) > 0) squarefree(F, c, mult, out);  // leftover p-th powers
}

// equal-degree splitting (Cantor–Zassenhaus) of a squarefree product of
// irreducibles of degree d
void equal_degree(const Field& F, const P& f, int d, Rng& rng, std::vector<P>& out) {
    if (deg(f) == d) {
        out.push_back(monic(F, f));
        return;
    }
    const long long q = F.q();
    P g;
    while (true) {
        // random polynomial of degree < deg(f)
        P r(deg(f), 0);
        for (auto& c : r) c = rng.elt(F);
        r = trim(std::move(r));
        if (deg(r) <= 0) continue;
        if (F.p() == 2) {
            // trace map T(r) = r + r^2 + r^4 + ... (d*m terms)
            P t = divmod(F, r, f).second, acc{0};
            for (int i = 0; i < d * F.m(); ++i) {
                acc = add(F, acc, t);
                t = divmod(F, mul(F, t, t), f).second;
            }
            g = gcd(F, acc, f);
        } else {
            long long e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            e = (e - 1) / 2;
            P t = powmod(F, r, e, f);
            t = sub(F, t, P{F.from_int(1)});
            g = gcd(F, t, f);
        }
        if (deg(g) > 0 && deg(g) < deg(f)) break;
    }
    equal_degree(F, g, d, rng, out);
    equal_degree(F, divmod(F, f, g).first, d, rng, out);
}

}  // namespace

std::vector<std::pair<P, int>> factor(const Field& F, const P& a, Rng& rng) {
    std::vector<std::pair<P, int>> sf;
    squarefree(F, monic(F, a), 1, sf);
    std::map<std::vector<gfe>, int> factors;
    for (auto& [g, mult] : sf) {
        // distinct degree on g
        P rem = g;
        P h{0, F.from_int(1)};  // x
        int d = 0;
        while (deg(rem) > 0) {
            ++d;
            if (2 * d > deg(rem)) {
                factors[monic(F, rem)] += mult;
                break;
            }
            h = powmod(F, h, F.q(), rem);
            P diff = sub(F, h, P{0, F.from_int(1)});
            P gd = gcd(F, diff, rem);
            if (deg(gd) > 0) {
                std::vector<P> irr;
                equal_degree(F, gd, d, rng, irr);
                for (auto& f : irr) factors[f] += mult;
                rem = divmod(F, rem, gd).first;
                h = divmod(F, h, rem).second;
            }
        }
    }
    std::vector<std::pair<P, int>> out(factors.begin(), factors.end());
    return out;
}

bool irreducible(const Field& F, const P& a) {
    if (deg(a) <= 0) return false;
    if (deg(a) == 1) return true;
    Rng rng(0xb10cce01ull ^ (std::uint64_t(deg(a)) << 32));
    auto fs = factor(F, a, rng);
    return fs.size() == 1 && fs[0].second == 1;
}

std::vector<gfe> roots(const Field& F, const P& a) {
    std::vector<gfe> out;
    for (int x = 0; x < F.q(); ++x)
        if (eval(F, a, gfe(x)) == 0) out.push_back(gfe(x));
    return out;
}

}  // namespace poly
}  // namespace blockeq
