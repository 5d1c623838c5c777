#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>

#include "blockeq/gf.hpp"

using namespace blockeq;

TEST_CASE("prime field and GF(4) construction") {
    auto F2 = Field::get(2, 1);
    CHECK(F2->q() == 2);
    CHECK(F2->add(1, 1) == 0);
    CHECK(F2->mul(1, 1) == 1);

    auto F4 = Field::get(2, 2);
    CHECK(F4->q() == 4);
    // the unique irreducible quadratic over F_2 is x^2+x+1
    CHECK(F4->modulus() == std::vector<int>{1, 1, 1});
    // g^2 = g + 1 for g the class of x
    gfe g = F4->gen();
    CHECK(F4->mul(g, g) == F4->add(g, F4->from_int(1)));
}

TEST_CASE("GF(9) deterministic and has 9 elements") {
    auto F9a = Field::get(3, 2);
    auto F9b = Field::get(3, 2);
    CHECK(F9a.get() == F9b.get());
    CHECK(F9a->q() == 9);
    // exhaustive irreducibility cross-check of the chosen modulus
    CHECK(Field::poly_irreducible(3, F9a->modulus()));
    std::set<gfe> elems;
    for (int a = 0; a < 9; ++a) elems.insert(gfe(a));
    CHECK(elems.size() == 9);
}

TEST_CASE("field axioms exhaustively for p^m <= 81") {
    for (auto [p, m] : {std::pair{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3},
                        {5, 1}, {5, 2}, {7, 1}, {7, 2}, {3, 4}}) {
        auto F = Field::get(p, m);
        const int q = F->q();
        if (q > 81) continue;
        for (int a = 0; a < q; ++a) {
            for (int b = 0; b < q; ++b) {
                CHECK(F->add(gfe(a), gfe(b)) == F->add(gfe(b), gfe(a)));
                CHECK(F->mul(gfe(a), gfe(b)) == F->mul(gfe(b), gfe(a)));
                for (int c = 0; c < q; ++c) {
                    CHECK(F->mul(F->mul(gfe(a), gfe(b)), gfe(c)) ==
                          F->mul(gfe(a), F->mul(gfe(b), gfe(c))));
                    CHECK(F->add(F->add(gfe(a), gfe(b)), gfe(c)) ==
                          F->add(gfe(a), F->add(gfe(b), gfe(c))));
                    CHECK(F->mul(gfe(a), F->add(gfe(b), gfe(c))) ==
                          F->add(F->mul(gfe(a), gfe(b)), F->mul(gfe(a), gfe(c))));
                }
            }
            if (a != 0) CHECK(F->mul(gfe(a), F->inv(gfe(a))) == F->from_int(1));
        }
    }
}

TEST_CASE("frobenius is a ring hom fixing exactly the prime subfield") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
        auto F = Field::get(p, m);
        int fixed = 0;
        for (int a = 0; a < F->q(); ++a) {
            for (int b = 0; b < F->q(); ++b) {
                CHECK(F->frob(F->add(gfe(a), gfe(b)), 1) ==
                      F->add(F->frob(gfe(a), 1), F->frob(gfe(b), 1)));
                CHECK(F->frob(F->mul(gfe(a), gfe(b)), 1) ==
                      F->mul(F->frob(gfe(a), 1), F->frob(gfe(b), 1)));
            }
            if (F->frob(gfe(a), 1) == gfe(a)) ++fixed;
        }
        CHECK(fixed == p);
    }
}

TEST_CASE("frobenius by m is the identity") {
    auto F = Field::get(2, 2);
    CHECK(F->frob(F->from_int(1), 1) == F->from_int(1));
    // g^2 = g+1 where g is the class of x
    gfe g = F->gen();
    CHECK(F->frob(g, 1) == F->add(g, F->from_int(1)));
    Rng rng(7);
    for (auto [p, m] : {std::pair{3, 2}, {2, 3}, {5, 2}}) {
        auto FF = Field::get(p, m);
        for (int t = 0; t < 20; ++t) {
            gfe x = rng.elt(*FF);
            CHECK(FF->frob(x, m) == x);
        }
    }
}

TEST_CASE("discrete log round trip") {
    for (auto [p, m] : {std::pair{2, 4}, {3, 2}, {7, 1}}) {
        auto F = Field::get(p, m);
        for (int a = 1; a < F->q(); ++a) {
            CHECK(F->gen_pow(F->dlog(gfe(a))) == gfe(a));
        }
    }
}

TEST_CASE("embeddings") {
    auto F2 = Field::get(2, 1);
    auto F4 = Field::get(2, 2);
    auto F16 = Field::get(2, 4);
    CHECK(Field::embed(*F2, *F4, 1) == F4->from_int(1));
    // homomorphism + frobenius compatibility on the prime subfield
    for (int a = 0; a < 2; ++a)
        CHECK(Field::embed(*F2, *F16, F2->frob(gfe(a), 1)) ==
              F16->frob(Field::embed(*F2, *F16, gfe(a)), 1));
    // image of GF(4) in GF(16): 4 elements closed under arithmetic
    std::set<gfe> img;
    for (int a = 0; a < 4; ++a) img.insert(Field::embed(*F4, *F16, gfe(a)));
    CHECK(img.size() == 4);
    for (gfe a : img)
        for (gfe b : img) {
            CHECK(img.count(F16->add(a, b)) == 1);
            CHECK(img.count(F16->mul(a, b)) == 1);
        }
    // ring homomorphism
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            CHECK(Field::embed(*F4, *F16, F4->mul(gfe(a), gfe(b))) ==
                  F16->mul(Field::embed(*F4, *F16, gfe(a)), Field::embed(*F4, *F16, gfe(b))));
            CHECK(Field::embed(*F4, *F16, F4->add(gfe(a), gfe(b))) ==
                  F16->add(Field::embed(*F4, *F16, gfe(a)), Field::embed(*F4, *F16, gfe(b))));
        }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS((void)Field::get(4, 1), error);
    CHECK_THROWS_AS((void)Field::get(2, 0), error);
    CHECK_THROWS_AS((void)Field::get(2, 9), error);
}

TEST_CASE("modulus override file") {
    std::string path = "test_modulus_override.txt";
    {
        std::ofstream out(path);
        out << "# alternative GF(125) modulus\n";
        out << "5 3 1 1 0 1\n";  // x^3 + x + 1, irreducible over F_5
    }
    Field::load_modulus_overrides(path);
    auto F = Field::get(5, 3);  // first construction of GF(5^3) in this process
    CHECK(F->modulus() == std::vector<int>{1, 1, 0, 1});
    // still a perfectly good field
    CHECK(F->mul(F->gen(), F->inv(F->gen())) == F->from_int(1));
    Field::clear_modulus_overrides();
    std::remove(path.c_str());
}
