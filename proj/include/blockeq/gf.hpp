#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blockeq {

struct error : std::exception {
    std::string msg;
    explicit error(std::string m) : msg(std::move(m)) {}
    const char* what() const noexcept override { return msg.c_str(); }
};

#define BQ_REQUIRE(cond, msg)                                               \
    do {                                                                    \
        if (!(cond)) throw ::blockeq::error(std::string("[") + __func__ +   \
                                            "] " + (msg));                  \
    } while (0)

/// Field element code: the coefficient vector (c_0,...,c_{m-1}) of the
/// residue class packed as sum c_i p^i. Code 0 is the zero element.
using gfe = std::uint8_t;

/// GF(p^m) with an explicit modulus polynomial. Immutable after
/// construction; all arithmetic is table-driven and exact. Instances are
/// interned, so Field identity can be compared by pointer.
class Field {
public:
    /// Deterministic field: Conway polynomial when the built-in table
    /// (p <= 7, m <= 4) covers it, otherwise the lexicographically smallest
    /// monic irreducible. Repeated calls return the same instance.
    static std::shared_ptr<const Field> get(int p, int m);

    /// Parse override lines "p m c_0 c_1 ... c_m" (decimal, '#' comments)
    /// and use them in preference to the built-in table.
    static void load_modulus_overrides(const std::string& path);
    static void clear_modulus_overrides();

    int p() const { return p_; }
    int m() const { return m_; }
    int q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }

    gfe add(gfe a, gfe b) const { return add_[size_t(a) * q_ + b]; }
    gfe sub(gfe a, gfe b) const { return add_[size_t(a) * q_ + neg_[b]]; }
    gfe mul(gfe a, gfe b) const { return mul_[size_t(a) * q_ + b]; }
    gfe neg(gfe a) const { return neg_[a]; }
    gfe inv(gfe a) const;
    gfe div(gfe a, gfe b) const { return mul(a, inv(b)); }
    gfe pow(gfe a, long long e) const;

    /// x^(p^i); i may be any integer (reduced mod m).
    gfe frob(gfe a, long long i) const;

    /// Fixed multiplicative generator (the class of x for Conway moduli).
    gfe gen() const { return gen_; }
    /// Discrete log base gen(); requires a != 0.
    int dlog(gfe a) const;
    gfe gen_pow(long long e) const;

    /// Canonical image of an integer (lands in the prime subfield).
    gfe from_int(long long v) const;

    /// Degree of the smallest subfield containing a (min d | m, a^(p^d)=a).
    int element_degree(gfe a) const;
    bool in_subfield(gfe a, int d) const;

    /// Deterministic embedding GF(p^d) -> GF(p^m) for d | m: x is sent to
    /// the smallest-code root of the sub-modulus.
    static gfe embed(const Field& sub, const Field& sup, gfe x);

    const gfe* add_table() const { return add_.data(); }
    const gfe* mul_row(gfe s) const { return mul_.data() + size_t(s) * q_; }

    // polynomial arithmetic on coefficient vectors over F_p (used during
    // construction and by the modulus search); exposed for tests
    static bool poly_irreducible(int p, const std::vector<int>& f);

private:
    Field(int p, int m, std::vector<int> modulus);
    void build_tables();

    int p_, m_, q_;
    std::vector<int> modulus_;  // c_0..c_m, monic
    gfe gen_ = 0;
    std::vector<gfe> add_, mul_, neg_, inv_;
    std::vector<int> log_;       // code -> exponent (log_[0] = -1)
    std::vector<gfe> exp_;       // exponent -> code, length q-1
    std::vector<gfe> frob_;      // m tables of size q: frob_[i*q+a] = a^(p^i)
};

using FieldPtr = std::shared_ptr<const Field>;

/// Deterministic splittable RNG (splitmix64); every randomized routine in
/// the pipeline draws from one of these so runs are reproducible.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// uniform in [0, n)
    std::uint64_t uniform(std::uint64_t n) { return next() % n; }
    gfe elt(const Field& F) { return gfe(uniform(F.q())); }
    gfe nonzero(const Field& F) { return gfe(1 + uniform(F.q() - 1)); }
    Rng split() { return Rng(next() ^ 0xd1342543de82ef95ull); }
};

}  // namespace blockeq
