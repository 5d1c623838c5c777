#include "blockeq/gf.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

namespace blockeq {

namespace {

// Conway polynomials C_{p,m}, coefficients c_0..c_m, computed offline from
// the definition (lexicographically least primitive polynomial, in the
// standard ordering, compatible with all proper subfields).
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> t = {
        {{2, 1}, {1, 1}},
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
    };
    return t;
}

std::map<std::pair<int, int>, std::vector<int>>& override_table() {
    static std::map<std::pair<int, int>, std::vector<int>> t;
    return t;
}

std::mutex& registry_mutex() {
    static std::mutex mu;
    return mu;
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// dense F_p polynomial helpers on int vectors (c_0..c_deg), used only at
// field construction time
std::vector<int> pmul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

void ptrim(std::vector<int>& a) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
}

std::vector<int> pmod(std::vector<int> a, const std::vector<int>& m, int p) {
    ptrim(a);
    int dm = int(m.size()) - 1;
    int lead_inv = 1;
    for (int i = 1; i < p; ++i)
        if (m.back() * i % p == 1) lead_inv = i;
    while (int(a.size()) - 1 >= dm && !(a.size() == 1 && a[0] == 0)) {
        int c = a.back() * lead_inv % p;
        int sh = int(a.size()) - 1 - dm;
        for (int i = 0; i <= dm; ++i) a[sh + i] = ((a[sh + i] - c * m[i]) % p + p) % p;
        ptrim(a);
    }
    return a;
}

std::vector<int> ppowmod(std::vector<int> b, long long e, const std::vector<int>& m, int p) {
    std::vector<int> r{1};
    b = pmod(std::move(b), m, p);
    while (e > 0) {
        if (e & 1) r = pmod(pmul(r, b, p), m, p);
        b = pmod(pmul(b, b, p), m, p);
        e >>= 1;
    }
    return r;
}

std::vector<int> pgcd(std::vector<int> a, std::vector<int> b, int p) {
    ptrim(a);
    ptrim(b);
    while (!(b.size() == 1 && b[0] == 0)) {
        auto r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    // normalize monic
    if (!(a.size() == 1 && a[0] == 0)) {
        int lead = a.back(), inv = 1;
        for (int i = 1; i < p; ++i)
            if (lead * i % p == 1) inv = i;
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

}  // namespace

bool Field::poly_irreducible(int p, const std::vector<int>& f) {
    int n = int(f.size()) - 1;
    if (n <= 0) return false;
    if (n == 1) return true;
    // x^(p^n) == x mod f
    std::vector<int> x{0, 1}, t = x;
    for (int i = 0; i < n; ++i) t = ppowmod(t, p, f, p);
    {
        std::vector<int> diff = t;
        diff.resize(std::max<size_t>(diff.size(), 2), 0);
        diff[1] = ((diff[1] - 1) % p + p) % p;
        if (!(pmod(diff, f, p) == std::vector<int>{0})) return false;
    }
    // gcd(x^(p^(n/r)) - x, f) == 1 for every prime r | n
    int nn = n;
    std::vector<int> primes;
    for (int d = 2; d * d <= nn; ++d)
        while (nn % d == 0) {
            if (primes.empty() || primes.back() != d) primes.push_back(d);
            nn /= d;
        }
    if (nn > 1) primes.push_back(nn);
    for (int r : primes) {
        std::vector<int> u{0, 1};
        for (int i = 0; i < n / r; ++i) u = ppowmod(u, p, f, p);
        u.resize(std::max<size_t>(u.size(), 2), 0);
        u[1] = ((u[1] - 1) % p + p) % p;
        ptrim(u);
        auto g = pgcd(f, u, p);
        if (g.size() > 1) return false;
    }
    return true;
}

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < m_; ++i) q_ *= p_;
    BQ_REQUIRE(q_ <= 256, "element codes are bytes: need p^m <= 256");
    BQ_REQUIRE(int(modulus_.size()) == m_ + 1 && modulus_.back() == 1, "modulus must be monic of degree m");
    BQ_REQUIRE(poly_irreducible(p_, modulus_), "modulus is reducible");
    build_tables();
}

void Field::build_tables() {
    const int q = q_, p = p_, m = m_;
    add_.assign(size_t(q) * q, 0);
    mul_.assign(size_t(q) * q, 0);
    neg_.assign(q, 0);
    inv_.assign(q, 0);

    auto decode = [&](gfe a) {
        std::vector<int> c(m, 0);
        int v = a;
        for (int i = 0; i < m; ++i) {
            c[i] = v % p;
            v /= p;
        }
        return c;
    };
    auto encode = [&](const std::vector<int>& c) {
        int v = 0;
        for (int i = m - 1; i >= 0; --i) v = v * p + (i < int(c.size()) ? c[i] : 0);
        return gfe(v);
    };

    for (int a = 0; a < q; ++a) {
        auto ca = decode(gfe(a));
        std::vector<int> cn(m);
        for (int i = 0; i < m; ++i) cn[i] = (p - ca[i]) % p;
        neg_[a] = encode(cn);
        for (int b = 0; b < q; ++b) {
            auto cb = decode(gfe(b));
            std::vector<int> cs(m);
            for (int i = 0; i < m; ++i) cs[i] = (ca[i] + cb[i]) % p;
            add_[size_t(a) * q + b] = encode(cs);
            auto prod = pmod(pmul(ca, cb, p), modulus_, p);
            mul_[size_t(a) * q + b] = encode(prod);
        }
    }

    // multiplicative generator: prefer x (true for Conway moduli), else scan
    auto order_of = [&](gfe a) {
        if (a == 0) return 0;
        int o = 1;
        gfe t = a;
        while (t != from_int(1)) {
            t = mul_[size_t(t) * q + a];
            ++o;
            if (o > q) return 0;  // defensive
        }
        return o;
    };
    gen_ = 0;
    if (m >= 2 && order_of(gfe(p)) == q - 1) {
        gen_ = gfe(p);  // the class of x
    } else {
        for (int a = 1; a < q; ++a)
            if (order_of(gfe(a)) == q - 1) {
                gen_ = gfe(a);
                break;
            }
    }
    BQ_REQUIRE(gen_ != 0, "no multiplicative generator found");

    log_.assign(q, -1);
    exp_.assign(q - 1, 0);
    gfe t = from_int(1);
    for (int e = 0; e < q - 1; ++e) {
        exp_[e] = t;
        log_[t] = e;
        t = mul_[size_t(t) * q + gen_];
    }
    for (int a = 1; a < q; ++a) {
        BQ_REQUIRE(log_[a] >= 0, "generator order defect");
        inv_[a] = exp_[(q - 1 - log_[a]) % (q - 1)];
    }

    frob_.assign(size_t(m) * q, 0);
    for (int a = 0; a < q; ++a) {
        gfe v = gfe(a);
        for (int i = 0; i < m; ++i) {
            frob_[size_t(i) * q + a] = v;
            gfe w = pow(v, p);
            v = w;
        }
    }
}

gfe Field::inv(gfe a) const {
    BQ_REQUIRE(a != 0, "division by zero");
    return inv_[a];
}

gfe Field::pow(gfe a, long long e) const {
    if (a == 0) {
        BQ_REQUIRE(e > 0, "0^e needs e > 0");
        return 0;
    }
    if (!exp_.empty() && log_[a] >= 0) {
        long long n = q_ - 1;
        long long x = ((long long)(log_[a]) * (e % n)) % n;
        if (x < 0) x += n;
        return exp_[x];
    }
    // fallback during table construction
    gfe r = from_int(1), b = a;
    long long ee = e;
    BQ_REQUIRE(ee >= 0, "negative exponent before tables ready");
    while (ee > 0) {
        if (ee & 1) r = mul_[size_t(r) * q_ + b];
        b = mul_[size_t(b) * q_ + b];
        ee >>= 1;
    }
    return r;
}

gfe Field::frob(gfe a, long long i) const {
    int ii = int(((i % m_) + m_) % m_);
    return frob_[size_t(ii) * q_ + a];
}

int Field::dlog(gfe a) const {
    BQ_REQUIRE(a != 0, "dlog of zero");
    return log_[a];
}

gfe Field::gen_pow(long long e) const {
    long long n = q_ - 1;
    long long x = e % n;
    if (x < 0) x += n;
    return exp_[x];
}

gfe Field::from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return gfe(r);
}

int Field::element_degree(gfe a) const {
    for (int d = 1; d <= m_; ++d) {
        if (m_ % d != 0) continue;
        if (frob(a, d) == a) return d;
    }
    return m_;
}

bool Field::in_subfield(gfe a, int d) const {
    BQ_REQUIRE(m_ % d == 0, "not a subfield degree");
    return frob(a, d) == a;
}

gfe Field::embed(const Field& sub, const Field& sup, gfe x) {
    BQ_REQUIRE(sub.p() == sup.p(), "characteristic mismatch");
    BQ_REQUIRE(sup.m() % sub.m() == 0, "degree does not divide");
    if (sub.m() == sup.m() && sub.modulus() == sup.modulus()) return x;
    // image of the class of the sub-variable: smallest-code root of the
    // sub-modulus inside sup
    gfe root = 0;
    bool found = false;
    for (int a = 0; a < sup.q() && !found; ++a) {
        gfe acc = 0, pw = sup.from_int(1);
        for (int i = 0; i <= sub.m(); ++i) {
            acc = sup.add(acc, sup.mul(sup.from_int(sub.modulus()[i]), pw));
            pw = sup.mul(pw, gfe(a));
        }
        if (acc == 0) {
            root = gfe(a);
            found = true;
        }
    }
    BQ_REQUIRE(found, "no root of sub-modulus (degree bookkeeping bug)");
    // evaluate the coefficient vector of x at the root
    std::vector<int> c(sub.m(), 0);
    int v = x;
    for (int i = 0; i < sub.m(); ++i) {
        c[i] = v % sub.p();
        v /= sub.p();
    }
    gfe acc = 0, pw = sup.from_int(1);
    for (int i = 0; i < sub.m(); ++i) {
        acc = sup.add(acc, sup.mul(sup.from_int(c[i]), pw));
        pw = sup.mul(pw, root);
    }
    return acc;
}

void Field::load_modulus_overrides(const std::string& path) {
    std::ifstream in(path);
    BQ_REQUIRE(in.good(), "cannot open modulus override file: " + path);
    std::lock_guard<std::mutex> lock(registry_mutex());
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ss(line);
        int p, m;
        if (!(ss >> p >> m)) continue;
        std::vector<int> cs;
        int c;
        while (ss >> c) cs.push_back(((c % p) + p) % p);
        BQ_REQUIRE(int(cs.size()) == m + 1, "override line needs m+1 coefficients");
        BQ_REQUIRE(cs.back() % p == 1, "override modulus must be monic");
        override_table()[{p, m}] = cs;
    }
}

void Field::clear_modulus_overrides() {
    std::lock_guard<std::mutex> lock(registry_mutex());
    override_table().clear();
}

std::shared_ptr<const Field> Field::get(int p, int m) {
    BQ_REQUIRE(is_prime(p), "p must be prime");
    BQ_REQUIRE(m >= 1 && m <= 8, "extension degree out of range [1,8]");
    long long q = 1;
    for (int i = 0; i < m; ++i) q *= p;
    BQ_REQUIRE(q <= 256, "p^m too large for byte codes");

    std::lock_guard<std::mutex> lock(registry_mutex());
    static std::map<std::pair<int, int>, std::shared_ptr<const Field>> registry;
    auto key = std::make_pair(p, m);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;

    std::vector<int> modulus;
    if (auto ov = override_table().find(key); ov != override_table().end()) {
        modulus = ov->second;
    } else if (auto cw = conway_table().find(key); cw != conway_table().end()) {
        modulus = cw->second;
    } else {
        // lexicographically smallest monic irreducible (coefficient vector
        // c_0..c_{m-1} read as a base-p number)
        for (long long code = 0; code < q; ++code) {
            std::vector<int> f(m + 1, 0);
            long long v = code;
            for (int i = 0; i < m; ++i) {
                f[i] = int(v % p);
                v /= p;
            }
            f[m] = 1;
            if (m >= 2 && f[0] == 0) continue;
            if (poly_irreducible(p, f)) {
                modulus = f;
                break;
            }
        }
        BQ_REQUIRE(!modulus.empty(), "no irreducible found (impossible)");
    }
    auto F = std::shared_ptr<const Field>(new Field(p, m, std::move(modulus)));
    registry[key] = F;
    return F;
}

}  // namespace blockeq
