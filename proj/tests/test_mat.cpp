#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blockeq/mat.hpp"
#include "blockeq/poly.hpp"

using namespace blockeq;

static Mat random_mat(const FieldPtr& F, int r, int c, Rng& rng) {
    Mat m(F, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = rng.elt(*F);
    return m;
}

TEST_CASE("serial and parallel kernels agree exactly") {
    Rng rng(42);
    for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}}) {
        auto F = Field::get(p, m);
        for (int n : {1, 7, 33, 64}) {
            Mat a = random_mat(F, n, n + 3, rng);
            Mat b = random_mat(F, n + 3, n, rng);
            CHECK(Mat::mul_serial(a, b) == Mat::mul_parallel(a, b));
        }
    }
}

TEST_CASE("rref, kernel, solve, inverse") {
    Rng rng(7);
    auto F = Field::get(5, 1);
    Mat a = random_mat(F, 20, 30, rng);
    Mat K = kernel(a);
    CHECK(rank_of(a) + K.cols() == 30);
    CHECK(Mat::mul(a, K).is_zero());

    Mat sq = random_mat(F, 15, 15, rng);
    auto inv = inverse(sq);
    if (inv) {
        CHECK(Mat::mul(sq, *inv).is_identity());
        Mat b = random_mat(F, 15, 4, rng);
        auto x = solve(sq, b);
        REQUIRE(x.has_value());
        CHECK(Mat::mul(sq, *x) == b);
    }
}

TEST_CASE("charpoly matches direct computation on small matrices") {
    auto F = Field::get(3, 1);
    // companion matrix of x^3 + 2x + 1
    Mat c(F, 3, 3);
    c.at(0, 2) = F->neg(F->from_int(1));
    c.at(1, 0) = F->from_int(1);
    c.at(1, 2) = F->neg(F->from_int(2));
    c.at(2, 1) = F->from_int(1);
    auto cp = charpoly(c);
    std::vector<gfe> expect = {F->from_int(1), F->from_int(2), 0, F->from_int(1)};
    CHECK(cp == expect);
    // Cayley-Hamilton on random matrices
    Rng rng(3);
    for (auto [p, m] : {std::pair{2, 2}, {5, 1}, {3, 2}}) {
        auto FF = Field::get(p, m);
        for (int n : {2, 5, 9}) {
            Mat a = random_mat(FF, n, n, rng);
            auto pa = charpoly(a);
            CHECK(poly_eval(pa, a).is_zero());
            auto mp = minpoly(a);
            CHECK(poly_eval(mp, a).is_zero());
            // minpoly divides charpoly
            auto [q, r] = poly::divmod(*FF, pa, mp);
            CHECK(poly::is_zero(r));
        }
    }
}

TEST_CASE("polynomial factorization") {
    Rng rng(11);
    for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {3, 1}, {5, 1}, {3, 2}, {2, 3}}) {
        auto F = Field::get(p, m);
        for (int trial = 0; trial < 20; ++trial) {
            int d = 1 + int(rng.uniform(8));
            poly::P f(d + 1, 0);
            for (auto& c : f) c = rng.elt(*F);
            f.back() = F->from_int(1);
            auto fs = poly::factor(*F, f, rng);
            poly::P prod{F->from_int(1)};
            for (auto& [g, e] : fs) {
                CHECK(poly::irreducible(*F, g));
                for (int i = 0; i < e; ++i) prod = poly::mul(*F, prod, g);
            }
            CHECK(poly::monic(*F, prod) == poly::monic(*F, f));
        }
    }
}

TEST_CASE("kronecker and echelon") {
    auto F = Field::get(2, 2);
    Rng rng(5);
    Mat a = random_mat(F, 3, 4, rng), b = random_mat(F, 2, 5, rng);
    Mat k = a.kronecker(b);
    CHECK(k.rows() == 6);
    CHECK(k.cols() == 20);
    Mat x = random_mat(F, 4, 3, rng), y = random_mat(F, 5, 2, rng);
    CHECK(a.kronecker(b) * x.kronecker(y) == (a * x).kronecker(b * y));

    Echelon e(F.get(), 10);
    Mat rows = random_mat(F, 20, 10, rng);
    int cnt = 0;
    for (int i = 0; i < 20; ++i) cnt += e.add_row(rows.row(i)) ? 1 : 0;
    CHECK(cnt == rank_of(rows));
    for (int i = 0; i < 20; ++i) CHECK(e.contains(rows.row(i)));
}

TEST_CASE("echelon with transform gives coordinates") {
    auto F = Field::get(3, 1);
    Rng rng(9);
    Mat rows = random_mat(F, 8, 6, rng);
    EchelonT e(F.get(), 6);
    for (int i = 0; i < 8; ++i) e.add_row(std::vector<gfe>(rows.row(i), rows.row(i) + 6));
    // any combination must be expressible
    std::vector<gfe> v(6, 0);
    std::vector<gfe> chosen(8);
    for (int i = 0; i < 8; ++i) chosen[i] = rng.elt(*F);
    for (int j = 0; j < 6; ++j) {
        gfe acc = 0;
        for (int i = 0; i < 8; ++i) acc = F->add(acc, F->mul(chosen[i], rows.at(i, j)));
        v[j] = acc;
    }
    auto co = e.coordinates(v.data());
    REQUIRE(co.has_value());
    for (int j = 0; j < 6; ++j) {
        gfe acc = 0;
        for (int i = 0; i < 8; ++i) acc = F->add(acc, F->mul((*co)[i], rows.at(i, j)));
        CHECK(acc == v[j]);
    }
}
