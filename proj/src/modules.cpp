#include "blockeq/modules.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace blockeq {

namespace {

Mat cols_from_vecs(const FieldPtr& F, int dim, const std::vector<Vec>& vs) {
    Mat m(F, dim, int(vs.size()));
    for (size_t c = 0; c < vs.size(); ++c)
        for (int i = 0; i < dim; ++i) m.at(i, int(c)) = vs[c][i];
    return m;
}

Vec matvec(const Mat& a, const Vec& v) {
    const Field* F = a.field();
    Vec r(a.rows(), 0);
    for (int i = 0; i < a.rows(); ++i) {
        gfe acc = 0;
        const gfe* row = a.row(i);
        for (int j = 0; j < a.cols(); ++j)
            if (v[j]) acc = F->add(acc, F->mul(row[j], v[j]));
        r[i] = acc;
    }
    return r;
}

}  // namespace

// ----------------------------------------------------------------- spin

Mat spin(const Module& M, const Mat& seeds) {
    Echelon ech(M.field(), M.dim);
    std::vector<Vec> basis;
    for (int c = 0; c < seeds.cols(); ++c) {
        Vec v(M.dim);
        for (int i = 0; i < M.dim; ++i) v[i] = seeds.at(i, c);
        if (ech.add_row(v.data())) basis.push_back(v);
    }
    for (size_t head = 0; head < basis.size(); ++head)
        for (const Mat& g : M.act) {
            Vec w = matvec(g, basis[head]);
            if (ech.add_row(w.data())) basis.push_back(w);
        }
    return cols_from_vecs(M.A->field(), M.dim, basis);
}

Module submodule(const Module& M, const Mat& basis_cols, Mat* incl_out) {
    Module S;
    S.A = M.A;
    S.dim = basis_cols.cols();
    for (const Mat& g : M.act) {
        auto sol = solve(basis_cols, Mat::mul(g, basis_cols));
        BQ_REQUIRE(sol.has_value(), "subspace not invariant");
        S.act.push_back(*sol);
    }
    S.label = M.label + ".sub";
    if (incl_out) *incl_out = basis_cols;
    return S;
}

Module quotient(const Module& M, const Mat& sub_basis_cols, Mat* proj_out) {
    const Field* F = M.field();
    // complement coordinates
    Echelon ech(F, M.dim);
    Mat t = sub_basis_cols.transpose();
    for (int i = 0; i < t.rows(); ++i) ech.add_row(t.row(i));
    std::vector<int> comp;
    for (int b = 0; b < M.dim; ++b) {
        Vec v(M.dim, 0);
        v[b] = F->from_int(1);
        if (ech.add_row(v.data())) comp.push_back(b);
    }
    const int sd = sub_basis_cols.cols(), qd = int(comp.size());
    BQ_REQUIRE(sd + qd == M.dim, "complement bookkeeping");
    Mat C(M.A->field(), M.dim, qd);
    for (int k = 0; k < qd; ++k) C.at(comp[k], k) = F->from_int(1);
    Mat full = sd > 0 ? sub_basis_cols.hstack(C) : C;
    auto inv = inverse(full);
    BQ_REQUIRE(inv.has_value(), "basis completion failed");
    Mat proj(M.A->field(), qd, M.dim);
    for (int i = 0; i < qd; ++i)
        for (int j = 0; j < M.dim; ++j) proj.at(i, j) = inv->at(sd + i, j);
    Module Q;
    Q.A = M.A;
    Q.dim = qd;
    for (const Mat& g : M.act) Q.act.push_back(Mat::mul(proj, Mat::mul(g, C)));
    Q.label = M.label + ".quo";
    if (proj_out) *proj_out = proj;
    return Q;
}

Module direct_sum(const Module& a, const Module& b) {
    BQ_REQUIRE(a.A == b.A, "direct sum over different algebras");
    Module r;
    r.A = a.A;
    r.dim = a.dim + b.dim;
    for (size_t g = 0; g < a.act.size(); ++g) {
        Mat m(a.A->field(), r.dim, r.dim);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) m.at(i, j) = a.act[g].at(i, j);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = b.act[g].at(i, j);
        r.act.push_back(std::move(m));
    }
    r.label = a.label + "+" + b.label;
    return r;
}

Module dual_module(const Module& M) {
    Module D;
    D.dim = M.dim;
    switch (M.A->kind()) {
        case Algebra::Kind::Group: {
            D.A = M.A;
            const auto& G = *M.A->group();
            for (size_t gi = 0; gi < M.act.size(); ++gi) {
                auto inv = inverse(M.act[gi]);
                BQ_REQUIRE(inv.has_value(), "group action not invertible");
                D.act.push_back(inv->transpose());
            }
            (void)G;
            break;
        }
        case Algebra::Kind::Structure: {
            D.A = M.A->opposite();
            for (auto& m : M.act) D.act.push_back(m.transpose());
            break;
        }
        case Algebra::Kind::Tensor: {
            // (A,B)-bimodule -> (B,A)-bimodule
            auto A = M.A->left(), B = M.A->right();
            D.A = Algebra::tensor(B, A);
            int ga = A->num_gens(), gb = B->num_gens();
            for (int i = 0; i < gb; ++i) D.act.push_back(M.act[ga + i].transpose());
            for (int i = 0; i < ga; ++i) D.act.push_back(M.act[i].transpose());
            break;
        }
    }
    D.label = M.label + "*";
    return D;
}

// ------------------------------------------------------- element actions

// word-walk helper shared by the three element_action variants
static Mat word_walk_action(Algebra& SC, const std::vector<Mat>& acts, int mdim, const Vec& elt,
                            bool right_side) {
    const auto& wb = SC.word_basis();
    const Field* F = SC.field().get();
    Vec gamma = matvec(wb.to_words, elt);
    Mat result(SC.field(), mdim, mdim);
    // node operators, computed along the tree (only ancestors of nonzero
    // coefficients are required, but the tree walk is linear anyway)
    std::vector<Mat> ops(wb.gen.size());
    std::vector<bool> need(wb.gen.size(), false);
    for (size_t j = 0; j < wb.gen.size(); ++j)
        if (gamma[j]) {
            int cur = int(j);
            while (cur >= 0 && !need[cur]) {
                need[cur] = true;
                cur = wb.parent[cur];
            }
        }
    for (size_t j = 0; j < wb.gen.size(); ++j) {
        if (!need[j]) continue;
        if (wb.parent[j] < 0)
            ops[j] = Mat::identity(F, mdim);
        else {
            const Mat& g = acts[wb.gen[j]];
            const Mat& par = ops[wb.parent[j]];
            ops[j] = right_side ? Mat::mul(par, g) : Mat::mul(g, par);
        }
        if (gamma[j]) result.axpy(gamma[j], ops[j]);
    }
    return result;
}

Mat element_action(const Module& M, const Vec& elt) {
    switch (M.A->kind()) {
        case Algebra::Kind::Structure:
            return word_walk_action(*M.A, M.act, M.dim, elt, false);
        case Algebra::Kind::Group: {
            // elt indexed by group elements
            const auto& G = *M.A->group();
            const Field* F = M.field();
            Mat r(M.A->field(), M.dim, M.dim);
            std::map<int, Mat> memo;
            for (int g = 0; g < G.order(); ++g) {
                if (!elt[g]) continue;
                r.axpy(elt[g], group_element_action(M, g));
            }
            (void)F;
            return r;
        }
        default: BQ_REQUIRE(false, "element_action on tensor algebra: use sided variants");
    }
    return Mat();
}

Mat left_element_action(const Module& M, const Vec& elt) {
    BQ_REQUIRE(M.A->kind() == Algebra::Kind::Tensor, "needs bimodule");
    auto L = M.A->left();
    std::vector<Mat> acts(M.act.begin(), M.act.begin() + L->num_gens());
    if (L->kind() == Algebra::Kind::Structure) return word_walk_action(*L, acts, M.dim, elt, false);
    BQ_REQUIRE(false, "left algebra must be structure kind for element action");
    return Mat();
}

Mat right_element_action(const Module& M, const Vec& elt) {
    BQ_REQUIRE(M.A->kind() == Algebra::Kind::Tensor, "needs bimodule");
    auto L = M.A->left();
    auto R = M.A->right();
    std::vector<Mat> acts(M.act.begin() + L->num_gens(), M.act.end());
    if (R->kind() == Algebra::Kind::Structure) return word_walk_action(*R, acts, M.dim, elt, true);
    BQ_REQUIRE(false, "right algebra must be structure kind for element action");
    return Mat();
}

Mat group_element_action(const Module& M, int g) {
    BQ_REQUIRE(M.A->kind() == Algebra::Kind::Group, "needs group algebra module");
    const auto& G = *M.A->group();
    // walk the BFS word chain
    std::vector<int> chain;
    int x = g;
    while (x != G.identity()) {
        chain.push_back(G.word_gen(x));
        x = G.word_parent(x);
    }
    Mat r = Mat::identity(M.field(), M.dim);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) r = Mat::mul(M.act[*it], r);
    return r;
}

// ------------------------------------------------------------------ hom

namespace {

struct SpinTree {
    std::vector<int> seed_of;      // node -> seed index
    std::vector<int> gen, parent;  // -1 for roots
    Mat basis;                     // dim x dim columns
    Mat basis_inv;
    struct Dep {
        int gen, node;
        Vec coeffs;  // over spin nodes
    };
    std::vector<Dep> deps;
    int num_seeds = 0;
};

SpinTree build_spin_tree(const Module& M) {
    SpinTree T;
    const Field* F = M.field();
    EchelonT ech(F, M.dim);
    std::vector<Vec> nodes;
    auto reduce_coords = [&](const Vec& v) { return ech.coordinates(v.data()); };
    for (int seed = 0; seed < M.dim && int(nodes.size()) < M.dim; ++seed) {
        Vec v(M.dim, 0);
        v[seed] = F->from_int(1);
        {
            auto co = reduce_coords(v);
            if (co.has_value()) continue;  // already in span
        }
        ech.add_row(v);
        T.seed_of.push_back(T.num_seeds);
        T.gen.push_back(-1);
        T.parent.push_back(-1);
        nodes.push_back(v);
        ++T.num_seeds;
        // BFS closure of the whole current span under all generators
        for (size_t head = 0; head < nodes.size(); ++head) {
            for (size_t gi = 0; gi < M.act.size(); ++gi) {
                Vec w = matvec(M.act[gi], nodes[head]);
                auto co = reduce_coords(w);
                if (co.has_value()) {
                    T.deps.push_back({int(gi), int(head), std::move(*co)});
                } else {
                    ech.add_row(w);
                    T.seed_of.push_back(T.seed_of[head]);
                    T.gen.push_back(int(gi));
                    T.parent.push_back(int(head));
                    nodes.push_back(w);
                }
            }
        }
    }
    BQ_REQUIRE(int(nodes.size()) == M.dim, "spin tree bookkeeping");
    T.basis = cols_from_vecs(M.A->field(), M.dim, nodes);
    auto inv = inverse(T.basis);
    BQ_REQUIRE(inv.has_value(), "spin basis not invertible");
    T.basis_inv = *inv;
    return T;
}

}  // namespace

std::vector<Mat> hom_space(const Module& M, const Module& N) {
    BQ_REQUIRE(M.A == N.A, "hom between modules over different algebras");
    const Field* F = M.field();
    const FieldPtr& Fp = M.A->field();
    if (M.dim == 0 || N.dim == 0) return {};
    SpinTree T = build_spin_tree(M);
    const int r = T.num_seeds;
    const int U = r * N.dim;

    // current solution space K (U x s), initialized to the full space
    Mat K = Mat::identity(F, U);
    // V_j = U_j * K_rows(seed_j), maintained lazily with epochs
    std::vector<Mat> V(T.gen.size());
    std::vector<long> epoch(T.gen.size(), -1);
    long cur_epoch = 0;

    auto k_rows_for_seed = [&](int s) {
        Mat m(Fp, N.dim, K.cols());
        for (int i = 0; i < N.dim; ++i)
            for (int j = 0; j < K.cols(); ++j) m.at(i, j) = K.at(s * N.dim + i, j);
        return m;
    };
    std::function<const Mat&(int)> getV = [&](int j) -> const Mat& {
        if (epoch[j] == cur_epoch) return V[j];
        if (T.parent[j] < 0)
            V[j] = k_rows_for_seed(T.seed_of[j]);
        else
            V[j] = Mat::mul(N.act[T.gen[j]], getV(T.parent[j]));
        epoch[j] = cur_epoch;
        return V[j];
    };

    for (const auto& dep : T.deps) {
        if (K.cols() == 0) break;
        // constraint: actN[g] * V_node - sum coeffs_i * V_i = 0
        Mat C = Mat::mul(N.act[dep.gen], getV(dep.node));
        for (size_t i = 0; i < dep.coeffs.size(); ++i)
            if (dep.coeffs[i]) C.axpy(F->neg(dep.coeffs[i]), getV(int(i)));
        if (C.is_zero()) continue;
        Mat ker = kernel(C);
        K = Mat::mul(K, ker);
        ++cur_epoch;
    }

    // assemble the maps: f(spin_j) = V_j column c
    std::vector<Mat> out;
    if (K.cols() == 0) return out;
    ++cur_epoch;  // force refresh with final K
    std::vector<const Mat*> Vs(T.gen.size());
    for (size_t j = 0; j < T.gen.size(); ++j) Vs[j] = &getV(int(j));
    for (int c = 0; c < K.cols(); ++c) {
        Mat Fspin(Fp, N.dim, M.dim);
        for (size_t j = 0; j < T.gen.size(); ++j)
            for (int i = 0; i < N.dim; ++i) Fspin.at(i, int(j)) = Vs[j]->at(i, c);
        out.push_back(Mat::mul(Fspin, T.basis_inv));
    }
    return out;
}

std::optional<Mat> find_isomorphism(const Module& M, const Module& N) {
    if (M.dim != N.dim) return std::nullopt;
    if (M.dim == 0) return Mat(M.A->field(), 0, 0);
    auto homs = hom_space(M, N);
    if (homs.empty()) return std::nullopt;
    // quick pass: individual basis elements
    for (auto& h : homs)
        if (inverse(h)) return h;
    // seeded random combinations
    Rng rng(0x15a4c3b9u ^ (std::uint64_t(M.dim) << 8) ^ homs.size());
    const Field* F = M.field();
    for (int trial = 0; trial < 200; ++trial) {
        Mat h(M.A->field(), N.dim, M.dim);
        for (auto& b : homs) h.axpy(rng.elt(*F), b);
        if (inverse(h)) return h;
    }
    return std::nullopt;
}

bool modules_isomorphic(const Module& M, const Module& N) {
    return find_isomorphism(M, N).has_value();
}

Mat EndRing::matrix_of(const Vec& coords) const {
    Mat r = basis[0].scaled(0);
    for (size_t i = 0; i < basis.size(); ++i)
        if (coords[i]) r.axpy(coords[i], basis[i]);
    return r;
}

EndRing end_ring(const Module& M) {
    EndRing E;
    E.basis = hom_space(M, M);
    const int d = int(E.basis.size());
    BQ_REQUIRE(d > 0, "End ring empty (zero module?)");
    const FieldPtr& F = M.A->field();
    // coordinates: echelon over vectorized matrices
    EchelonT ech(F.get(), M.dim * M.dim);
    for (auto& b : E.basis) {
        Vec v(M.dim * M.dim);
        for (int i = 0; i < M.dim; ++i)
            for (int j = 0; j < M.dim; ++j) v[i * M.dim + j] = b.at(i, j);
        bool indep = ech.add_row(v);
        BQ_REQUIRE(indep, "hom basis dependent");
    }
    auto coords_of = [&](const Mat& m) {
        Vec v(M.dim * M.dim);
        for (int i = 0; i < M.dim; ++i)
            for (int j = 0; j < M.dim; ++j) v[i * M.dim + j] = m.at(i, j);
        auto co = ech.coordinates(v.data());
        BQ_REQUIRE(co.has_value(), "End ring not closed");
        return *co;
    };
    std::vector<Mat> lmul(d, Mat(F, d, d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec co = coords_of(Mat::mul(E.basis[i], E.basis[j]));
            for (int k = 0; k < d; ++k) lmul[i].at(k, j) = co[k];
        }
    Vec unit = coords_of(Mat::identity(F.get(), M.dim));
    E.sc = Algebra::structure(F, std::move(lmul), unit, {}, "End(" + M.label + ")");
    return E;
}

// ----------------------------------------------------------------- chop

namespace {

void chop_rec(const Module& M, std::vector<Module>& out, Rng& rng, int depth) {
    BQ_REQUIRE(depth < 64, "chop recursion too deep");
    if (M.dim == 0) return;
    if (M.dim == 1) {
        out.push_back(M);
        return;
    }
    const Field* F = M.field();
    const int g = int(M.act.size());

    auto split_at = [&](const Mat& subbasis) {
        Mat incl;
        Module sub = submodule(M, subbasis, &incl);
        Mat proj;
        Module quo = quotient(M, subbasis, &proj);
        chop_rec(sub, out, rng, depth + 1);
        chop_rec(quo, out, rng, depth + 1);
    };

    // random words in the acting algebra image
    std::vector<Mat> pool = M.act;
    for (int attempt = 0; attempt < 120; ++attempt) {
        // build a random word: product/sum of a few pool elements
        Mat W(M.A->field(), M.dim, M.dim);
        int terms = 1 + int(rng.uniform(3));
        for (int t = 0; t < terms; ++t) {
            Mat prod = pool[rng.uniform(pool.size())];
            int len = int(rng.uniform(3));
            for (int l = 0; l < len; ++l) prod = Mat::mul(prod, pool[rng.uniform(pool.size())]);
            W.axpy(rng.nonzero(*F), prod);
        }
        if (attempt % 7 == 3 && pool.size() < 24) pool.push_back(W);

        auto cp = charpoly(W);
        auto fs = poly::factor(*F, cp, rng);
        // sort: multiplicity-one factors first, small nullity first
        std::vector<std::pair<poly::P, int>> facs(fs.begin(), fs.end());
        std::sort(facs.begin(), facs.end(), [](const auto& a, const auto& b) {
            if ((a.second == 1) != (b.second == 1)) return a.second == 1;
            return poly::deg(a.first) < poly::deg(b.first);
        });
        for (auto& [f, mult] : facs) {
            Mat fW = poly_eval(f, W);
            Mat K = kernel(fW);
            if (K.cols() == 0) continue;
            // spin kernel vectors
            for (int c = 0; c < K.cols(); ++c) {
                Mat seed(M.A->field(), M.dim, 1);
                for (int i = 0; i < M.dim; ++i) seed.at(i, 0) = K.at(i, c);
                Mat S = spin(M, seed);
                if (S.cols() < M.dim) {
                    split_at(S);
                    return;
                }
            }
            if (K.cols() == poly::deg(f)) {
                // multiplicity one: Norton's criterion. One vector of the
                // kernel on the transpose side decides.
                Module Mt;  // transpose module (module over the opposite)
                Mt.A = M.A;  // actions only; algebra tag irrelevant for spin
                Mt.dim = M.dim;
                for (auto& a : M.act) Mt.act.push_back(a.transpose());
                Mat fWt = fW.transpose();
                Mat Kt = kernel(fWt);
                BQ_REQUIRE(Kt.cols() > 0, "transpose nullity mismatch");
                Mat seed(M.A->field(), M.dim, 1);
                for (int i = 0; i < M.dim; ++i) seed.at(i, 0) = Kt.at(i, 0);
                Mat St = spin(Mt, seed);
                if (St.cols() < M.dim) {
                    // perp of the dual submodule is a proper submodule
                    Mat perp = kernel(St.transpose());
                    BQ_REQUIRE(perp.cols() > 0 && perp.cols() < M.dim, "perp bookkeeping");
                    split_at(perp);
                    return;
                }
                out.push_back(M);  // certified irreducible
                return;
            }
        }
    }
    // last resort: exhaustive vectors of a small kernel over a small field
    for (const Mat& W : pool) {
        auto cp = charpoly(W);
        auto fs = poly::factor(*F, cp, rng);
        for (auto& [f, mult] : fs) {
            Mat fW = poly_eval(f, W);
            Mat K = kernel(fW);
            if (K.cols() == 0) continue;
            long long count = 1;
            for (int c = 0; c < K.cols(); ++c) {
                count *= F->q();
                if (count > 4096) break;
            }
            if (count > 4096) continue;
            // enumerate all nonzero combinations on both sides
            bool all_full = true;
            for (long long code = 1; code < count; ++code) {
                Vec v(M.dim, 0);
                long long cc = code;
                for (int c = 0; c < K.cols(); ++c) {
                    gfe coef = gfe(cc % F->q());
                    cc /= F->q();
                    if (coef)
                        for (int i = 0; i < M.dim; ++i)
                            v[i] = F->add(v[i], F->mul(coef, K.at(i, c)));
                }
                Mat seed = cols_from_vecs(M.A->field(), M.dim, {v});
                Mat S = spin(M, seed);
                if (S.cols() < M.dim) {
                    split_at(S);
                    return;
                }
            }
            Module Mt;
            Mt.A = M.A;
            Mt.dim = M.dim;
            for (auto& a : M.act) Mt.act.push_back(a.transpose());
            Mat Kt = kernel(fW.transpose());
            long long countt = 1;
            for (int c = 0; c < Kt.cols(); ++c) {
                countt *= F->q();
                if (countt > 4096) break;
            }
            if (countt > 4096) continue;
            for (long long code = 1; code < countt; ++code) {
                Vec v(M.dim, 0);
                long long cc = code;
                for (int c = 0; c < Kt.cols(); ++c) {
                    gfe coef = gfe(cc % F->q());
                    cc /= F->q();
                    if (coef)
                        for (int i = 0; i < M.dim; ++i)
                            v[i] = F->add(v[i], F->mul(coef, Kt.at(i, c)));
                }
                Mat seed = cols_from_vecs(M.A->field(), M.dim, {v});
                Mat St = spin(Mt, seed);
                if (St.cols() < M.dim) {
                    Mat perp = kernel(St.transpose());
                    split_at(perp);
                    return;
                }
            }
            if (all_full) {
                out.push_back(M);  // Norton certificate by exhaustion
                return;
            }
        }
    }
    BQ_REQUIRE(false, "chop failed to certify module of dim " + std::to_string(M.dim));
}

}  // namespace

std::vector<Module> composition_factors(const Module& M) {
    Rng rng(0xc40bdeadull ^ (std::uint64_t(M.dim) << 20) ^ M.act.size());
    std::vector<Module> out;
    chop_rec(M, out, rng, 0);
    return out;
}

bool is_irreducible(const Module& M) {
    auto f = composition_factors(M);
    return f.size() == 1;
}

// ------------------------------------------------------------ decompose

std::vector<Summand> decompose(const Module& M) {
    std::vector<Summand> out;
    if (M.dim == 0) return out;
    EndRing E = end_ring(M);
    const auto& fam = E.sc->primitive_idempotents();
    const FieldPtr& F = M.A->field();
    for (size_t i = 0; i < fam.idems.size(); ++i) {
        Mat idem = E.matrix_of(fam.idems[i]);
        Mat img = column_space(idem);
        Summand s;
        s.incl = img;
        s.part = submodule(M, img);
        s.part.label = M.label + "#" + std::to_string(i);
        // projection: img coords of idem applied
        auto sol = solve(img, idem);
        BQ_REQUIRE(sol.has_value(), "projection bookkeeping");
        s.proj = *sol;
        s.iso_class = fam.iso_class[i];
        out.push_back(std::move(s));
    }
    return out;
}

bool is_indecomposable(const Module& M) {
    EndRing E = end_ring(M);
    return E.sc->primitive_idempotents().idems.size() == 1;
}

// --------------------------------------------------------- socle/radical

namespace {

// operators of the radical ideal generators on M (left and right sides)
std::vector<Mat> radical_operators(const Module& M) {
    std::vector<Mat> ops;
    switch (M.A->kind()) {
        case Algebra::Kind::Structure: {
            for (auto& j : M.A->radical().ideal_gens)
                ops.push_back(element_action(M, j));
            break;
        }
        case Algebra::Kind::Tensor: {
            auto L = M.A->left(), R = M.A->right();
            BQ_REQUIRE(L->kind() == Algebra::Kind::Structure &&
                           R->kind() == Algebra::Kind::Structure,
                       "bimodule radical needs structure factors");
            for (auto& j : L->radical().ideal_gens) ops.push_back(left_element_action(M, j));
            for (auto& j : R->radical().ideal_gens) ops.push_back(right_element_action(M, j));
            break;
        }
        default: BQ_REQUIRE(false, "radical over plain group algebra: use structure form");
    }
    return ops;
}

}  // namespace

Mat radical_submodule(const Module& M) {
    auto ops = radical_operators(M);
    // span of all images, then spin (the ideal generators only generate J
    // as an ideal)
    Echelon ech(M.field(), M.dim);
    std::vector<Vec> vecs;
    for (auto& op : ops)
        for (int c = 0; c < M.dim; ++c) {
            Vec v(M.dim);
            for (int i = 0; i < M.dim; ++i) v[i] = op.at(i, c);
            if (ech.add_row(v.data())) vecs.push_back(v);
        }
    Mat seeds = cols_from_vecs(M.A->field(), M.dim, vecs);
    return spin(M, seeds);
}

Mat socle_submodule(const Module& M) {
    auto ops = radical_operators(M);
    // K = common kernel of the ideal generators
    Mat stacked(M.A->field(), 0, M.dim);
    for (auto& op : ops) stacked = stacked.rows() ? stacked.vstack(op) : op;
    Mat K = ops.empty() ? Mat::identity(M.field(), M.dim) : kernel(stacked);
    // largest submodule inside K: iterate K <- {v in K : g v in K for all g}
    while (K.cols() > 0) {
        // membership test matrix for K: rows spanning K-perp
        Mat Kperp = kernel(K.transpose());  // dim x c, columns = functionals
        bool changed = false;
        Mat constraints(M.A->field(), 0, K.cols());
        for (auto& g : M.act) {
            // require Kperp^T * g * K = 0
            Mat c = Mat::mul(Kperp.transpose(), Mat::mul(g, K));
            if (!c.is_zero()) changed = true;
            constraints = constraints.rows() ? constraints.vstack(c) : c;
        }
        if (!changed) break;
        Mat Y = kernel(constraints);
        K = Mat::mul(K, Y);
    }
    return K;
}

Module head_module(const Module& M, Mat* proj_out) {
    Mat r = radical_submodule(M);
    return quotient(M, r, proj_out);
}

Module socle_module(const Module& M, Mat* incl_out) {
    Mat s = socle_submodule(M);
    return submodule(M, s, incl_out);
}

std::vector<int> loewy_layers(const Module& M) {
    std::vector<int> layers;
    Module cur = M;
    while (cur.dim > 0) {
        Mat r = radical_submodule(cur);
        layers.push_back(cur.dim - r.cols());
        if (r.cols() == 0) break;
        cur = submodule(cur, r);
    }
    return layers;
}

// ----------------------------------------------------- projective theory

namespace {

// PIMs of a tensor algebra with a given simple top, cached on the algebra
struct BimPimCacheEntry {
    std::vector<std::pair<Module, Module>> pim_top;  // (PIM, its top)
};
std::map<const Algebra*, std::map<std::pair<int, int>, BimPimCacheEntry>>& bim_pim_cache() {
    static std::map<const Algebra*, std::map<std::pair<int, int>, BimPimCacheEntry>> c;
    return c;
}

int match_simple(Algebra& A, const Module& S) {
    const auto& simp = A.simples();
    for (size_t i = 0; i < simp.size(); ++i)
        if (simp[i].dim == S.dim && modules_isomorphic(simp[i], S)) return int(i);
    BQ_REQUIRE(false, "simple not matched in " + A.name());
    return -1;
}

// find the PIM (over any structure/tensor algebra) whose top is S
Module pim_with_top(const AlgebraPtr& A, const Module& S);

Module pim_with_top_tensor(const AlgebraPtr& T, const Module& S) {
    auto L = T->left();
    auto Rop_base = T->right();
    // restrictions: S as left L-module and as left (right-factor)^op-module
    Module SL;
    SL.A = L;
    SL.dim = S.dim;
    SL.act.assign(S.act.begin(), S.act.begin() + L->num_gens());
    Module SR;
    SR.A = Rop_base->opposite();
    SR.dim = S.dim;
    SR.act.assign(S.act.begin() + L->num_gens(), S.act.end());
    // identify the isotypic types
    auto facL = composition_factors(SL);
    auto facR = composition_factors(SR);
    int li = match_simple(*L, facL.front());
    int ri = match_simple(*SR.A, facR.front());
    auto& entry = bim_pim_cache()[T.get()][{li, ri}];
    if (entry.pim_top.empty()) {
        // candidate P_L (x) P_R (right factor PIM as a right module)
        auto find_pim = [](Algebra& alg, int top) -> const Module& {
            for (auto& [P, t] : alg.pims())
                if (t == top) return P;
            BQ_REQUIRE(false, "PIM for top missing");
            return alg.pims().front().first;
        };
        const Module& PL = find_pim(*L, li);
        auto Rop = Rop_base->opposite();
        const Module& PR = find_pim(*Rop, ri);
        Module cand = outer_tensor(T, PL, PR);
        auto parts = decompose(cand);
        for (auto& p : parts) {
            Module top = head_module(p.part);
            entry.pim_top.push_back({p.part, std::move(top)});
        }
    }
    for (auto& [P, top] : entry.pim_top)
        if (top.dim == S.dim && modules_isomorphic(top, S)) return P;
    BQ_REQUIRE(false, "no PIM with the requested top (tensor)");
    return Module();
}

Module pim_with_top(const AlgebraPtr& A, const Module& S) {
    if (A->kind() == Algebra::Kind::Tensor) return pim_with_top_tensor(A, S);
    BQ_REQUIRE(A->kind() == Algebra::Kind::Structure, "pim_with_top needs SC algebra");
    int si = match_simple(*A, S);
    for (auto& [P, top] : A->pims())
        if (top == si) return P;
    BQ_REQUIRE(false, "no PIM with the requested top");
    return Module();
}

}  // namespace

CoverData projective_cover(const Module& M) {
    const FieldPtr& F = M.A->field();
    Mat hd_proj;
    Module H = head_module(M, &hd_proj);
    if (H.dim == 0) {
        CoverData cd;
        cd.cover = Module{M.A, 0, std::vector<Mat>(M.act.size(), Mat(F, 0, 0)), "0"};
        cd.pi = Mat(F, M.dim, 0);
        return cd;
    }
    auto parts = decompose(H);  // simple summands
    // cover = sum of PIMs; build pi by lifting each head component
    CoverData cd;
    cd.cover = Module{M.A, 0, std::vector<Mat>(M.act.size(), Mat(F, 0, 0)), "P(" + M.label + ")"};
    std::vector<Module> pims;
    std::vector<Mat> pis;
    Echelon covered(F.get(), H.dim);
    Rng rng(0xc0ffee11ull ^ M.dim);
    for (auto& s : parts) {
        Module P = pim_with_top(M.A, s.part);
        auto homs = hom_space(P, M);
        // want hd_proj * phi to add s.part.dim to the covered head space
        auto try_phi = [&](const Mat& phi) {
            Mat himg = Mat::mul(hd_proj, phi);
            Echelon trial = covered;
            int added = 0;
            for (int c = 0; c < himg.cols(); ++c) {
                Vec v(H.dim);
                for (int i = 0; i < H.dim; ++i) v[i] = himg.at(i, c);
                if (trial.add_row(v.data())) ++added;
            }
            if (added == s.part.dim) {
                covered = trial;
                return true;
            }
            return false;
        };
        bool found = false;
        for (auto& phi : homs)
            if (try_phi(phi)) {
                pims.push_back(P);
                pis.push_back(phi);
                found = true;
                break;
            }
        for (int trial = 0; trial < 400 && !found; ++trial) {
            Mat phi(F, M.dim, P.dim);
            for (auto& h : homs) phi.axpy(rng.elt(*F.get()), h);
            if (try_phi(phi)) {
                pims.push_back(P);
                pis.push_back(phi);
                found = true;
            }
        }
        BQ_REQUIRE(found, "projective cover: no lift covering the head");
    }
    // assemble
    Module total = pims[0];
    for (size_t i = 1; i < pims.size(); ++i) total = direct_sum(total, pims[i]);
    Mat pi(F, M.dim, total.dim);
    int off = 0;
    for (size_t i = 0; i < pims.size(); ++i) {
        for (int c = 0; c < pims[i].dim; ++c)
            for (int r = 0; r < M.dim; ++r) pi.at(r, off + c) = pis[i].at(r, c);
        off += pims[i].dim;
    }
    BQ_REQUIRE(rank_of(pi) == M.dim, "cover map not surjective");
    cd.cover = std::move(total);
    cd.cover.label = "P(" + M.label + ")";
    cd.pi = std::move(pi);
    return cd;
}

HullData injective_hull(const Module& M) {
    // dual, cover, dual back (all pipeline algebras are symmetric)
    Module D = dual_module(M);
    CoverData cd = projective_cover(D);
    HullData h;
    h.hull = dual_module(cd.cover);
    h.hull.label = "E(" + M.label + ")";
    h.eta = cd.pi.transpose();
    return h;
}

bool is_projective(const Module& M) {
    if (M.dim == 0) return true;
    CoverData cd = projective_cover(M);
    return cd.cover.dim == M.dim;
}

bool is_injective_bimodule(const Module& M) {
    // symmetric algebras: injective == projective
    return is_projective(M);
}

// ------------------------------------------------------ tensor machinery

Module outer_tensor(const AlgebraPtr& tensor_alg, const Module& U, const Module& W_right) {
    BQ_REQUIRE(tensor_alg->kind() == Algebra::Kind::Tensor, "need tensor algebra");
    auto L = tensor_alg->left();
    auto R = tensor_alg->right();
    BQ_REQUIRE(U.A == L, "left factor algebra mismatch");
    // W_right: left module over R->opposite() (i.e. a right R-module)
    Module T;
    T.A = tensor_alg;
    T.dim = U.dim * W_right.dim;
    Mat idU = Mat::identity(U.field(), U.dim);
    Mat idW = Mat::identity(W_right.field(), W_right.dim);
    for (int i = 0; i < L->num_gens(); ++i) T.act.push_back(U.act[i].kronecker(idW));
    for (int i = 0; i < R->num_gens(); ++i) T.act.push_back(idU.kronecker(W_right.act[i]));
    T.label = U.label + "(x)" + W_right.label;
    return T;
}

std::optional<RightPresentation> right_presentation(const Module& M) {
    BQ_REQUIRE(M.A->kind() == Algebra::Kind::Tensor, "presentation needs bimodule");
    auto L = M.A->left();
    auto B = M.A->right();
    BQ_REQUIRE(B->kind() == Algebra::Kind::Structure, "right algebra must be SC");
    auto Bop = B->opposite();
    const FieldPtr& F = M.A->field();

    // M as left B^op module
    Module Mop;
    Mop.A = Bop;
    Mop.dim = M.dim;
    Mop.act.assign(M.act.begin() + L->num_gens(), M.act.end());

    // greedy right-module generators
    std::vector<Vec> gens;
    {
        Echelon ech(F.get(), M.dim);
        std::vector<Vec> basis;
        for (int s = 0; s < M.dim; ++s) {
            Vec v(M.dim, 0);
            v[s] = F->from_int(1);
            if (ech.contains(v.data())) continue;
            gens.push_back(v);
            basis.push_back(v);
            ech.add_row(v.data());
            for (size_t head = basis.size() - 1; head < basis.size(); ++head)
                for (auto& g : Mop.act) {
                    Vec w = matvec(g, basis[head]);
                    if (ech.add_row(w.data())) basis.push_back(w);
                }
        }
    }
    const int r = int(gens.size());
    const int bd = B->dim();

    // free right module F_B = B^r as left B^op-module: r copies of the
    // regular module of B^op
    Module Fop;
    Fop.A = Bop;
    Fop.dim = r * bd;
    {
        Module regop = Bop->regular_module();
        Fop = regop;
        for (int i = 1; i < r; ++i) Fop = direct_sum(Fop, regop);
        Fop.label = "B^" + std::to_string(r);
    }
    // pi: F -> M, (b_i) -> sum m_i . b_i ; column (i, e_j) = m_i * e_j
    Mat pi(F, M.dim, r * bd);
    {
        for (int i = 0; i < r; ++i) {
            // right action of basis element e_j on gens[i]
            for (int j = 0; j < bd; ++j) {
                Vec ej(bd, 0);
                ej[j] = F->from_int(1);
                Mat op = right_element_action(M, ej);
                Vec img = matvec(op, gens[i]);
                for (int row = 0; row < M.dim; ++row) pi.at(row, i * bd + j) = img[row];
            }
        }
    }
    // splitting sigma: M -> F with pi sigma = id, right-B-linear
    auto homs = hom_space(Mop, Fop);
    if (homs.empty()) return std::nullopt;
    // solve sum x_k (pi * H_k) = id in M.dim x M.dim entries
    const int n2 = M.dim * M.dim;
    Mat sys(F, n2, int(homs.size()));
    for (size_t k = 0; k < homs.size(); ++k) {
        Mat piH = Mat::mul(pi, homs[k]);
        for (int i = 0; i < M.dim; ++i)
            for (int j = 0; j < M.dim; ++j) sys.at(i * M.dim + j, int(k)) = piH.at(i, j);
    }
    Mat rhs(F, n2, 1);
    for (int i = 0; i < M.dim; ++i) rhs.at(i * M.dim + i, 0) = F->from_int(1);
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Mat sigma(F, r * bd, M.dim);
    for (size_t k = 0; k < homs.size(); ++k)
        if (sol->at(int(k), 0)) sigma.axpy(sol->at(int(k), 0), homs[k]);

    RightPresentation P;
    P.r = r;
    P.gen_images = gens;
    P.sigma = sigma;
    P.pi = pi;
    return P;
}

bool is_right_projective(const Module& M) { return right_presentation(M).has_value(); }

bool is_left_projective(const Module& M) {
    // mirror through the dual: M left-projective iff M* right-projective
    return is_right_projective(dual_module(M));
}

TensorResult tensor_over(const Module& M, const Module& N) {
    // M over Tensor(A,B), N over Tensor(B,C) or left B-module over B (SC)
    BQ_REQUIRE(M.A->kind() == Algebra::Kind::Tensor, "M must be a bimodule");
    auto A = M.A->left();
    auto B = M.A->right();
    const FieldPtr& F = M.A->field();

    bool n_bimodule = N.A->kind() == Algebra::Kind::Tensor;
    AlgebraPtr NB = n_bimodule ? N.A->left() : N.A;
    BQ_REQUIRE(NB == B, "middle algebra mismatch");
    AlgebraPtr C = n_bimodule ? N.A->right() : nullptr;

    auto presOpt = right_presentation(M);
    BQ_REQUIRE(presOpt.has_value(), "tensor_over: left factor not right-projective");
    auto& pres = *presOpt;
    const int r = pres.r;
    const int bd = B->dim();
    const int nd = N.dim;

    // left-action operators of all B basis elements on N
    std::vector<Mat> bops(bd);
    for (int j = 0; j < bd; ++j) {
        Vec ej(bd, 0);
        ej[j] = F->from_int(1);
        bops[j] = n_bimodule ? left_element_action(N, ej) : element_action(N, ej);
    }

    // E = sigma * pi as an r x r matrix over B; entry (i,j) = block applied
    // to the unit of B
    Mat Ebig = Mat::mul(pres.sigma, pres.pi);  // (r bd) x (r bd)
    auto block_elt = [&](const Mat& big, int i, int j, const Vec& unit) {
        // big block (i,j) applied to unit coordinates
        Vec out(bd, 0);
        for (int row = 0; row < bd; ++row) {
            gfe acc = 0;
            for (int col = 0; col < bd; ++col)
                if (unit[col]) acc = F->add(acc, F->mul(big.at(i * bd + row, j * bd + col), unit[col]));
            out[row] = acc;
        }
        return out;
    };
    const Vec& bunit = B->unit();
    // Ehat: r nd x r nd
    Mat Ehat(F, r * nd, r * nd);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Vec e_ij = block_elt(Ebig, i, j, bunit);
            // left action of e_ij on N
            Mat op(F, nd, nd);
            for (int t = 0; t < bd; ++t)
                if (e_ij[t]) op.axpy(e_ij[t], bops[t]);
            for (int a2 = 0; a2 < nd; ++a2)
                for (int b2 = 0; b2 < nd; ++b2) Ehat.at(i * nd + a2, j * nd + b2) = op.at(a2, b2);
        }
    Mat img = column_space(Ehat);

    // module structure on the image
    TensorResult TR;
    TR.pres = pres;
    TR.embed_basis = img;
    Module& T = TR.mod;
    if (n_bimodule)
        T.A = Algebra::tensor(A, C);
    else
        T.A = A;
    T.dim = img.cols();
    // left A generators: alpha(a) = sigma * L_M(a) * pi, blocks -> N ops
    const int ga = A->num_gens();
    for (int g = 0; g < ga; ++g) {
        Mat alpha = Mat::mul(pres.sigma, Mat::mul(M.act[g], pres.pi));
        Mat op(F, r * nd, r * nd);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Vec a_ij = block_elt(alpha, i, j, bunit);
                Mat bop(F, nd, nd);
                for (int t = 0; t < bd; ++t)
                    if (a_ij[t]) bop.axpy(a_ij[t], bops[t]);
                for (int a2 = 0; a2 < nd; ++a2)
                    for (int b2 = 0; b2 < nd; ++b2)
                        op.at(i * nd + a2, j * nd + b2) = bop.at(a2, b2);
            }
        auto sol = solve(img, Mat::mul(op, img));
        BQ_REQUIRE(sol.has_value(), "tensor image not invariant (left)");
        T.act.push_back(*sol);
    }
    if (n_bimodule) {
        const int gb = B->num_gens();
        const int gc = C->num_gens();
        for (int g = 0; g < gc; ++g) {
            const Mat& cact = N.act[gb + g];
            Mat op(F, r * nd, r * nd);
            for (int i = 0; i < r; ++i)
                for (int a2 = 0; a2 < nd; ++a2)
                    for (int b2 = 0; b2 < nd; ++b2)
                        op.at(i * nd + a2, i * nd + b2) = cact.at(a2, b2);
            auto sol = solve(img, Mat::mul(op, img));
            BQ_REQUIRE(sol.has_value(), "tensor image not invariant (right)");
            T.act.push_back(*sol);
        }
    }
    T.label = M.label + "(x)_B" + N.label;
    return TR;
}

Vec TensorResult::contract(const Module& M, const Module& N, const Vec& m, const Vec& n) const {
    const FieldPtr& F = M.A->field();
    auto B = M.A->right();
    const int bd = B->dim();
    const int r = pres.r;
    const int nd = N.dim;
    bool n_bimodule = N.A->kind() == Algebra::Kind::Tensor;
    Vec sm = matvec(pres.sigma, m);  // r*bd
    Vec y(r * nd, 0);
    for (int i = 0; i < r; ++i) {
        Vec bi(bd);
        for (int j = 0; j < bd; ++j) bi[j] = sm[i * bd + j];
        Mat op = n_bimodule ? left_element_action(N, bi) : element_action(N, bi);
        Vec img = matvec(op, n);
        for (int t = 0; t < nd; ++t) y[i * nd + t] = img[t];
    }
    auto sol = solve(embed_basis, cols_from_vecs(F, r * nd, {y}));
    BQ_REQUIRE(sol.has_value(), "contract outside image");
    Vec out(embed_basis.cols());
    for (int i = 0; i < embed_basis.cols(); ++i) out[i] = sol->at(i, 0);
    return out;
}

Mat induced_tensor_map(const TensorResult& tmn, const Module& M, const Module& N,
                       const TensorResult& tmn2, const Module& M2, const Module& N2,
                       const Mat& f, const Mat& g) {
    // map e N^r -> e' N'^r' : w |-> (sum_i L_{N'}(sigma'(f(m_i))_j) g w_i)_j
    const FieldPtr& F = M.A->field();
    auto B = M.A->right();
    const int bd = B->dim();
    const int r = tmn.pres.r, r2 = tmn2.pres.r;
    const int nd = N.dim, nd2 = N2.dim;
    bool n_bimodule2 = N2.A->kind() == Algebra::Kind::Tensor;
    Mat T(F, r2 * nd2, r * nd);
    for (int i = 0; i < r; ++i) {
        Vec fmi = matvec(f, tmn.pres.gen_images[i]);
        Vec sf = matvec(tmn2.pres.sigma, fmi);  // r2*bd
        for (int j = 0; j < r2; ++j) {
            Vec bj(bd);
            for (int t = 0; t < bd; ++t) bj[t] = sf[j * bd + t];
            Mat op = n_bimodule2 ? left_element_action(N2, bj) : element_action(N2, bj);
            Mat opg = Mat::mul(op, g);
            for (int a2 = 0; a2 < nd2; ++a2)
                for (int b2 = 0; b2 < nd; ++b2) T.at(j * nd2 + a2, i * nd + b2) = opg.at(a2, b2);
        }
    }
    Mat big = Mat::mul(T, tmn.embed_basis);
    auto sol = solve(tmn2.embed_basis, big);
    BQ_REQUIRE(sol.has_value(), "induced map leaves the image");
    return *sol;
}

// -------------------------------------------------- group algebra functors

Module restrict_module(const Module& M, const GroupPtr& H, const AlgebraPtr& kH) {
    BQ_REQUIRE(M.A->kind() == Algebra::Kind::Group, "restrict needs group module");
    const auto& G = *M.A->group();
    Module R;
    R.A = kH;
    R.dim = M.dim;
    for (int hgen : H->generators()) {
        int gi = G.index_of(H->matrix(hgen));
        BQ_REQUIRE(gi >= 0, "subgroup not embedded");
        R.act.push_back(group_element_action(M, gi));
    }
    BQ_REQUIRE(kH->kind() == Algebra::Kind::Group || kH->kind() == Algebra::Kind::Structure,
               "restriction target");
    R.label = "Res(" + M.label + ")";
    return R;
}

Module induce_module(const Module& M, const GroupPtr& G, const AlgebraPtr& kG,
                     const GroupPtr& H) {
    // Ind_H^G M, H a subgroup-as-group with matrices inside G
    BQ_REQUIRE(kG->kind() == Algebra::Kind::Group, "induction target must be group algebra");
    // embed H into G indices
    std::vector<int> h_in_g(H->order());
    Subgroup S;
    for (int h = 0; h < H->order(); ++h) {
        int gi = G->index_of(H->matrix(h));
        BQ_REQUIRE(gi >= 0, "H not a subgroup of G");
        h_in_g[h] = gi;
        S.elems.push_back(gi);
    }
    std::sort(S.elems.begin(), S.elems.end());
    auto reps = G->left_coset_reps(S);
    const int k = int(reps.size());
    // lookup: for x in G: which coset, and the H-part
    std::vector<int> coset_of(G->order(), -1), hpart_of(G->order(), -1);
    std::map<int, int> g_to_h;
    for (int h = 0; h < H->order(); ++h) g_to_h[h_in_g[h]] = h;
    for (int c = 0; c < k; ++c)
        for (int h = 0; h < H->order(); ++h) {
            int x = G->mul(reps[c], h_in_g[h]);
            coset_of[x] = c;
            hpart_of[x] = h;
        }
    Module I;
    I.A = kG;
    I.dim = k * M.dim;
    for (int ggen : G->generators()) {
        Mat act(kG->field(), I.dim, I.dim);
        std::map<int, Mat> hcache;
        for (int c = 0; c < k; ++c) {
            int x = G->mul(ggen, reps[c]);
            int c2 = coset_of[x], h = hpart_of[x];
            auto it = hcache.find(h);
            if (it == hcache.end()) it = hcache.emplace(h, group_element_action(M, h)).first;
            const Mat& hact = it->second;
            for (int a2 = 0; a2 < M.dim; ++a2)
                for (int b2 = 0; b2 < M.dim; ++b2) act.at(c2 * M.dim + a2, c * M.dim + b2) = hact.at(a2, b2);
        }
        I.act.push_back(std::move(act));
    }
    I.label = "Ind(" + M.label + ")";
    return I;
}

Module coset_permutation_module(const AlgebraPtr& kG, const Subgroup& S) {
    BQ_REQUIRE(kG->kind() == Algebra::Kind::Group, "needs group algebra");
    const auto& G = *kG->group();
    auto reps = G.left_coset_reps(S);
    const int k = int(reps.size());
    std::vector<int> coset_of(G.order(), -1);
    for (int c = 0; c < k; ++c)
        for (int s : S.elems) coset_of[G.mul(reps[c], s)] = c;
    Module P;
    P.A = kG;
    P.dim = k;
    for (int ggen : G.generators()) {
        Mat act(kG->field(), k, k);
        for (int c = 0; c < k; ++c) act.at(coset_of[G.mul(ggen, reps[c])], c) = kG->field()->from_int(1);
        P.act.push_back(std::move(act));
    }
    P.label = "k[G/S]";
    return P;
}

Module frobenius_twist(const Module& M, int i) {
    Module T = M;
    const Field* F = M.field();
    for (auto& a : T.act)
        for (auto& x : a.data()) x = F->frob(x, i);
    T.label = M.label + "^(" + std::to_string(i) + ")";
    return T;
}

}  // namespace blockeq
