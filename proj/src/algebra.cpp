#include "blockeq/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "blockeq/modules.hpp"

namespace blockeq {

namespace {

std::map<std::pair<const void*, const void*>, AlgebraPtr>& tensor_registry() {
    static std::map<std::pair<const void*, const void*>, AlgebraPtr> reg;
    return reg;
}

std::map<std::pair<const void*, const void*>, AlgebraPtr>& group_registry() {
    static std::map<std::pair<const void*, const void*>, AlgebraPtr> reg;
    return reg;
}

bool vec_is_zero(const Vec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

Mat col_of(const FieldPtr& F, const Vec& v) {
    Mat m(F, int(v.size()), 1);
    for (size_t i = 0; i < v.size(); ++i) m.at(int(i), 0) = v[i];
    return m;
}

}  // namespace

struct AlgebraInternal {
    static Algebra* make() { return new Algebra(); }
    template <class F>
    static void init(Algebra& A, F&& f) {
        f(A);
    }
    static Algebra& mut(const AlgebraPtr& p) { return *p; }
};

AlgebraPtr Algebra::group_algebra(const GroupPtr& G, const FieldPtr& F) {
    auto key = std::make_pair((const void*)G.get(), (const void*)F.get());
    auto& reg = group_registry();
    if (auto it = reg.find(key); it != reg.end()) return it->second;
    auto A = AlgebraPtr(AlgebraInternal::make());
    AlgebraInternal::init(*A, [&](Algebra& a) {
        a.kind_ = Kind::Group;
        a.F_ = F;
        a.group_ = G;
        a.dim_ = G->order();
        a.name_ = "k[G" + std::to_string(G->order()) + "]";
    });
    reg[key] = A;
    return A;
}

AlgebraPtr Algebra::group_structure(const GroupPtr& G, const FieldPtr& F) {
    const int n = G->order();
    BQ_REQUIRE(n <= 400, "group too large for structure-constant form");
    std::vector<Mat> lmul(n, Mat(F, n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lmul[i].at(G->mul(i, j), j) = F->from_int(1);
    Vec unit(n, 0);
    unit[G->identity()] = F->from_int(1);
    std::vector<Vec> gens;
    for (int g : G->generators()) {
        Vec v(n, 0);
        v[g] = F->from_int(1);
        gens.push_back(v);
    }
    return structure(F, std::move(lmul), std::move(unit), std::move(gens),
                     "kG" + std::to_string(n));
}

AlgebraPtr Algebra::structure(const FieldPtr& F, std::vector<Mat> lmul, Vec unit,
                              std::vector<Vec> gens, std::string name) {
    auto A = AlgebraPtr(AlgebraInternal::make());
    AlgebraInternal::init(*A, [&](Algebra& a) {
        a.kind_ = Kind::Structure;
        a.F_ = F;
        a.dim_ = int(lmul.size());
        a.lmul_ = std::move(lmul);
        a.unit_ = std::move(unit);
        a.gens_ = std::move(gens);
        a.name_ = std::move(name);
    });
    // ensure the generating set generates; extend greedily if not
    {
        Algebra& a = *A;
        Echelon ech(F.get(), a.dim_);
        std::vector<Vec> closure;
        auto push = [&](const Vec& v) {
            if (ech.add_row(v.data())) {
                closure.push_back(v);
                return true;
            }
            return false;
        };
        push(a.unit_);
        for (auto& g : a.gens_) push(g);
        auto close = [&]() {
            for (size_t head = 0; head < closure.size(); ++head) {
                if (ech.rank() == a.dim_) return;
                for (auto& g : a.gens_) {
                    push(a.mul_elements(g, closure[head]));
                    push(a.mul_elements(closure[head], g));
                }
            }
        };
        close();
        for (int b = 0; b < a.dim_ && ech.rank() < a.dim_; ++b) {
            Vec v(a.dim_, 0);
            v[b] = F->from_int(1);
            if (!ech.contains(v.data())) {
                a.gens_.push_back(v);
                push(v);
                close();
            }
        }
        BQ_REQUIRE(ech.rank() == a.dim_, "generators fail to span algebra");
    }
    return A;
}

AlgebraPtr Algebra::tensor(const AlgebraPtr& left, const AlgebraPtr& right_op) {
    auto key = std::make_pair((const void*)left.get(), (const void*)right_op.get());
    auto& reg = tensor_registry();
    if (auto it = reg.find(key); it != reg.end()) return it->second;
    BQ_REQUIRE(left->field() == right_op->field(), "tensor over mismatched fields");
    auto A = AlgebraPtr(AlgebraInternal::make());
    AlgebraInternal::init(*A, [&](Algebra& a) {
        a.kind_ = Kind::Tensor;
        a.F_ = left->field();
        a.left_ = left;
        a.right_ = right_op;
        a.dim_ = left->dim() * right_op->dim();
        a.name_ = left->name() + "(x)" + right_op->name() + "op";
    });
    reg[key] = A;
    return A;
}

Vec Algebra::mul_elements(const Vec& a, const Vec& b) const {
    BQ_REQUIRE(kind_ == Kind::Structure, "element products need structure constants");
    Vec r(dim_, 0);
    const Field& F = *F_;
    for (int i = 0; i < dim_; ++i) {
        if (!a[i]) continue;
        const Mat& L = lmul_[i];
        const gfe* mr = F.mul_row(a[i]);
        for (int row = 0; row < dim_; ++row) {
            gfe acc = 0;
            const gfe* lr = L.row(row);
            for (int j = 0; j < dim_; ++j)
                if (b[j]) acc = F.add(acc, F.mul(lr[j], b[j]));
            r[row] = F.add(r[row], mr[acc]);
        }
    }
    return r;
}

Mat Algebra::lmul_of(const Vec& a) const {
    BQ_REQUIRE(kind_ == Kind::Structure, "lmul_of needs structure constants");
    Mat r(F_, dim_, dim_);
    for (int i = 0; i < dim_; ++i)
        if (a[i]) r.axpy(a[i], lmul_[i]);
    return r;
}

Mat Algebra::rmul_of(const Vec& a) const {
    BQ_REQUIRE(kind_ == Kind::Structure, "rmul_of needs structure constants");
    Mat r(F_, dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        const Mat& L = lmul_[i];
        for (int row = 0; row < dim_; ++row) {
            gfe acc = 0;
            const gfe* lr = L.row(row);
            for (int j = 0; j < dim_; ++j)
                if (a[j]) acc = F_->add(acc, F_->mul(lr[j], a[j]));
            r.at(row, i) = acc;
        }
    }
    return r;
}

AlgebraPtr Algebra::opposite() {
    BQ_REQUIRE(kind_ == Kind::Structure, "opposite only for structure algebras");
    if (opposite_) return opposite_;
    std::vector<Mat> lmul_op(dim_, Mat(F_, dim_, dim_));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int row = 0; row < dim_; ++row) lmul_op[i].at(row, j) = lmul_[j].at(row, i);
    auto op = structure(F_, std::move(lmul_op), unit_, gens_, name_ + "op");
    opposite_ = op;
    AlgebraInternal::mut(op).opposite_ = shared_from_this();
    return op;
}

int Algebra::num_gens() const {
    switch (kind_) {
        case Kind::Group: return int(group_->generators().size());
        case Kind::Structure: return int(gens_.size());
        case Kind::Tensor: return left_->num_gens() + right_->num_gens();
    }
    return 0;
}

Module Algebra::regular_module() {
    BQ_REQUIRE(kind_ == Kind::Structure, "regular_module needs structure constants");
    Module M;
    M.A = shared_from_this();
    M.dim = dim_;
    for (auto& g : gens_) M.act.push_back(lmul_of(g));
    M.label = name_ + ".reg";
    return M;
}

const Algebra::WordBasis& Algebra::word_basis() {
    BQ_REQUIRE(kind_ == Kind::Structure, "word basis needs structure constants");
    if (words_) return *words_;
    WordBasis wb;
    Echelon ech(F_.get(), dim_);
    std::vector<Vec> node_vec;
    auto add_node = [&](const Vec& v, int g, int p) {
        if (!ech.add_row(v.data())) return false;
        wb.gen.push_back(g);
        wb.parent.push_back(p);
        node_vec.push_back(v);
        return true;
    };
    add_node(unit_, -1, -1);
    for (size_t head = 0; head < node_vec.size() && int(node_vec.size()) < dim_; ++head) {
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            Vec prod = mul_elements(gens_[gi], node_vec[head]);
            add_node(prod, int(gi), int(head));
            if (int(node_vec.size()) == dim_) break;
        }
    }
    BQ_REQUIRE(int(node_vec.size()) == dim_, "generators do not span (word basis)");
    wb.node_vecs = Mat(F_, dim_, dim_);
    for (int j = 0; j < dim_; ++j)
        for (int i = 0; i < dim_; ++i) wb.node_vecs.at(i, j) = node_vec[j][i];
    auto inv = inverse(wb.node_vecs);
    BQ_REQUIRE(inv.has_value(), "word basis not invertible");
    wb.to_words = *inv;
    words_ = std::move(wb);
    return *words_;
}

// ---------------------------------------------------------------- radical

const RadicalData& Algebra::radical() {
    BQ_REQUIRE(kind_ == Kind::Structure, "radical needs structure constants");
    if (radical_) return *radical_;

    Module reg = regular_module();
    std::vector<Module> factors = composition_factors(reg);
    std::vector<Module> distinct;
    for (auto& S : factors) {
        bool dup = false;
        for (auto& T : distinct)
            if (S.dim == T.dim && modules_isomorphic(S, T)) {
                dup = true;
                break;
            }
        if (!dup) distinct.push_back(S);
    }
    for (size_t i = 0; i < distinct.size(); ++i)
        distinct[i].label = name_ + ".S" + std::to_string(i);

    int cols = 0;
    for (auto& S : distinct) cols += S.dim * S.dim;
    Mat phi(F_, cols, dim_);
    for (int b = 0; b < dim_; ++b) {
        Vec e(dim_, 0);
        e[b] = F_->from_int(1);
        int off = 0;
        for (auto& S : distinct) {
            Mat op = element_action(S, e);
            for (int i = 0; i < S.dim; ++i)
                for (int j = 0; j < S.dim; ++j) phi.at(off + i * S.dim + j, b) = op.at(i, j);
            off += S.dim * S.dim;
        }
    }
    RadicalData rd;
    rd.basis = kernel(phi);

    // small two-sided ideal generating set
    {
        std::vector<Mat> ops;
        for (auto& g : gens_) {
            ops.push_back(lmul_of(g));
            ops.push_back(rmul_of(g));
        }
        Echelon covered(F_.get(), dim_);
        for (int c = 0; c < rd.basis.cols(); ++c) {
            Vec v(dim_);
            for (int i = 0; i < dim_; ++i) v[i] = rd.basis.at(i, c);
            if (covered.contains(v.data())) continue;
            rd.ideal_gens.push_back(v);
            std::vector<Vec> queue{v};
            covered.add_row(v.data());
            for (size_t head = 0; head < queue.size(); ++head)
                for (auto& op : ops) {
                    Vec w(dim_, 0);
                    for (int i = 0; i < dim_; ++i) {
                        gfe acc = 0;
                        const gfe* r = op.row(i);
                        for (int j = 0; j < dim_; ++j)
                            if (queue[head][j]) acc = F_->add(acc, F_->mul(r[j], queue[head][j]));
                        w[i] = acc;
                    }
                    if (!covered.contains(w.data())) {
                        covered.add_row(w.data());
                        queue.push_back(w);
                    }
                }
        }
    }
    // nilpotency index: smallest t with J^t = 0
    {
        rd.nil_index = 1;
        std::vector<Vec> jbasis;
        for (int c = 0; c < rd.basis.cols(); ++c) {
            Vec v(dim_);
            for (int i = 0; i < dim_; ++i) v[i] = rd.basis.at(i, c);
            jbasis.push_back(v);
        }
        std::vector<Vec> cur = jbasis;
        while (!cur.empty()) {
            ++rd.nil_index;
            Echelon nxt(F_.get(), dim_);
            std::vector<Vec> nb;
            for (auto& a : cur)
                for (auto& b : jbasis) {
                    Vec p = mul_elements(a, b);
                    if (nxt.add_row(p.data())) nb.push_back(p);
                }
            cur = std::move(nb);
            BQ_REQUIRE(rd.nil_index <= dim_ + 2, "radical not nilpotent?");
        }
    }
    simples_ = std::make_shared<std::vector<Module>>(std::move(distinct));
    radical_ = std::move(rd);
    return *radical_;
}

int Algebra::num_simples() {
    radical();
    return int(simples_->size());
}

const std::vector<Module>& Algebra::simples() {
    radical();
    return *simples_;
}

// ----------------------------------------------------------- idempotents

namespace {

// CRT idempotents of F[a] from the factored minimal polynomial of a:
// one idempotent per distinct irreducible factor, orthogonal, summing to
// the unit of the (corner) algebra. Returned as coefficient polynomials.
std::vector<poly::P> crt_idempotent_polys(const Field& F, const poly::P& mp,
                                          const std::vector<std::pair<poly::P, int>>& fs) {
    std::vector<poly::P> out;
    for (auto& [fac, mult] : fs) {
        poly::P fm{F.from_int(1)};
        for (int t = 0; t < mult; ++t) fm = poly::mul(F, fm, fac);
        poly::P g = poly::divmod(F, mp, fm).first;
        // u with u*g = 1 mod fm: small Gaussian elimination over F
        int dm = poly::deg(fm);
        std::vector<std::vector<gfe>> rows(dm, std::vector<gfe>(dm + 1, 0));
        for (int c = 0; c < dm; ++c) {
            poly::P xc(c + 1, 0);
            xc[c] = F.from_int(1);
            poly::P pr = poly::divmod(F, poly::mul(F, xc, g), fm).second;
            for (int r = 0; r < dm; ++r) rows[r][c] = r <= poly::deg(pr) ? pr[r] : gfe(0);
        }
        rows[0][dm] = F.from_int(1);
        // solve
        std::vector<int> piv(dm, -1);
        int rr = 0;
        for (int c = 0; c < dm && rr < dm; ++c) {
            int sel = -1;
            for (int r = rr; r < dm; ++r)
                if (rows[r][c]) {
                    sel = r;
                    break;
                }
            if (sel < 0) continue;
            std::swap(rows[sel], rows[rr]);
            gfe inv = F.inv(rows[rr][c]);
            for (int j = 0; j <= dm; ++j) rows[rr][j] = F.mul(rows[rr][j], inv);
            for (int r = 0; r < dm; ++r) {
                if (r == rr) continue;
                gfe f2 = rows[r][c];
                if (f2)
                    for (int j = 0; j <= dm; ++j)
                        rows[r][j] = F.sub(rows[r][j], F.mul(f2, rows[rr][j]));
            }
            piv[rr] = c;
            ++rr;
        }
        poly::P u(dm, 0);
        for (int r = 0; r < rr; ++r)
            if (piv[r] >= 0) u[piv[r]] = rows[r][dm];
        out.push_back(poly::divmod(F, poly::mul(F, u, g), mp).second);
    }
    return out;
}

}  // namespace

const Algebra::IdempotentFamily& Algebra::primitive_idempotents() {
    BQ_REQUIRE(kind_ == Kind::Structure, "idempotents need structure constants");
    if (idems_) return *idems_;
    const RadicalData& J = radical();
    const Field& F = *F_;
    Rng rng(0x1de3a417ull ^ (std::uint64_t(dim_) << 17));

    // ---- semisimple quotient S = A/J in complement coordinates ----
    std::vector<int> comp;
    {
        Echelon jech(F_.get(), dim_);
        Mat jt = J.basis.transpose();
        for (int i = 0; i < jt.rows(); ++i) jech.add_row(jt.row(i));
        for (int b = 0; b < dim_; ++b) {
            Vec v(dim_, 0);
            v[b] = F.from_int(1);
            if (jech.add_row(v.data())) comp.push_back(b);
        }
    }
    const int sdim = int(comp.size());
    const int jcols = J.basis.cols();
    Mat JC = J.basis;
    {
        Mat C(F_, dim_, sdim);
        for (int k = 0; k < sdim; ++k) C.at(comp[k], k) = F.from_int(1);
        JC = (jcols > 0) ? J.basis.hstack(C) : C;
    }
    auto jc_inv = inverse(JC);
    BQ_REQUIRE(jc_inv.has_value(), "complement basis not invertible");
    auto to_s = [&](const Vec& x) {
        Vec y(sdim, 0);
        for (int i = 0; i < sdim; ++i) {
            gfe acc = 0;
            const gfe* r = jc_inv->row(jcols + i);
            for (int j = 0; j < dim_; ++j)
                if (x[j]) acc = F.add(acc, F.mul(r[j], x[j]));
            y[i] = acc;
        }
        return y;
    };
    auto from_s = [&](const Vec& y) {
        Vec x(dim_, 0);
        for (int k = 0; k < sdim; ++k) x[comp[k]] = y[k];
        return x;
    };
    auto s_mul = [&](const Vec& a, const Vec& b) {
        return to_s(mul_elements(from_s(a), from_s(b)));
    };
    Vec s_unit = to_s(unit_);

    // S as a structure algebra (for lmul/minpoly work)
    AlgebraPtr S;
    {
        std::vector<Mat> lm(sdim, Mat(F_, sdim, sdim));
        for (int i = 0; i < sdim; ++i) {
            Vec ei(sdim, 0);
            ei[i] = F.from_int(1);
            for (int j = 0; j < sdim; ++j) {
                Vec ej(sdim, 0);
                ej[j] = F.from_int(1);
                Vec pr = s_mul(ei, ej);
                for (int r = 0; r < sdim; ++r) lm[i].at(r, j) = pr[r];
            }
        }
        S = structure(F_, std::move(lm), s_unit, {}, name_ + "/J");
    }
    auto s_pow_q = [&](const Vec& v) {
        Vec acc = s_unit, base = v;
        long long ee = F.q();
        while (ee > 0) {
            if (ee & 1) acc = s_mul(acc, base);
            base = s_mul(base, base);
            ee >>= 1;
        }
        return acc;
    };

    // work stack of idempotents of S to refine; result: primitive ones
    struct Prim {
        Vec e;       // S coords
        int block;   // central block id (assigned later)
    };
    std::vector<Vec> prim;

    std::vector<Vec> stack{s_unit};
    while (!stack.empty()) {
        Vec e = stack.back();
        stack.pop_back();
        if (vec_is_zero(e)) continue;
        // corner eSe
        std::vector<Vec> corner_cols;
        {
            Echelon ech(F_.get(), sdim);
            for (int i = 0; i < sdim; ++i) {
                Vec bi(sdim, 0);
                bi[i] = F.from_int(1);
                Vec v = s_mul(s_mul(e, bi), e);
                if (ech.add_row(v.data())) corner_cols.push_back(v);
            }
        }
        const int cd = int(corner_cols.size());
        Mat corner(F_, sdim, cd);
        for (int c = 0; c < cd; ++c)
            for (int i = 0; i < sdim; ++i) corner.at(i, c) = corner_cols[c][i];
        // center of the corner
        Mat zker;
        {
            Mat sys(F_, sdim * cd, cd);
            for (int j = 0; j < cd; ++j) {
                // commutator columns: [x, c_j] for x = sum y_c corner_c
                for (int c = 0; c < cd; ++c) {
                    Vec comm = s_mul(corner_cols[c], corner_cols[j]);
                    Vec comm2 = s_mul(corner_cols[j], corner_cols[c]);
                    for (int i = 0; i < sdim; ++i)
                        sys.at(j * sdim + i, c) = F.sub(comm[i], comm2[i]);
                }
            }
            zker = kernel(sys);  // cd x zdim, coords over corner_cols
        }
        const int zdim = zker.cols();
        // Berlekamp (q-power fixed points) inside the corner center
        std::vector<Vec> zbasis;  // S coords
        for (int c = 0; c < zdim; ++c) {
            Vec v(sdim, 0);
            for (int k = 0; k < cd; ++k)
                if (zker.at(k, c))
                    for (int i = 0; i < sdim; ++i)
                        v[i] = F.add(v[i], F.mul(zker.at(k, c), corner_cols[k][i]));
            zbasis.push_back(v);
        }
        Mat zmat(F_, sdim, zdim);
        for (int c = 0; c < zdim; ++c)
            for (int i = 0; i < sdim; ++i) zmat.at(i, c) = zbasis[c][i];
        Mat frobm(F_, zdim, zdim);
        for (int c = 0; c < zdim; ++c) {
            Vec w = s_pow_q(zbasis[c]);
            auto sol = solve(zmat, col_of(F_, w));
            BQ_REQUIRE(sol.has_value(), "q-power left the corner center");
            for (int r = 0; r < zdim; ++r) frobm.at(r, c) = sol->at(r, 0);
        }
        Mat B = kernel(frobm - Mat::identity(F_.get(), zdim));
        const int nfactors = B.cols();
        BQ_REQUIRE(nfactors >= 1, "corner with no Berlekamp factor");

        if (nfactors == 1 && cd == zdim) {
            // commutative with a single factor: a field, e is primitive
            prim.push_back(e);
            continue;
        }
        if (nfactors >= 2) {
            // split by a non-scalar central Berlekamp element: its minimal
            // polynomial on the corner splits into distinct linear factors,
            // so the CRT idempotents in F[b] cut the corner into ideals
            bool done = false;
            for (int c = 0; c < nfactors && !done; ++c) {
                Vec b(sdim, 0);
                for (int k = 0; k < zdim; ++k)
                    if (B.at(k, c))
                        for (int i = 0; i < sdim; ++i)
                            b[i] = F.add(b[i], F.mul(B.at(k, c), zbasis[k][i]));
                Mat Lb = S->lmul_of(b) * corner;
                auto co = solve(corner, Lb);
                BQ_REQUIRE(co.has_value(), "corner not closed under center");
                poly::P mp = minpoly(*co);
                auto fs = poly::factor(F, mp, rng);
                if (fs.size() < 2) continue;  // b acts as a scalar; try next
                auto polys = crt_idempotent_polys(F, mp, fs);
                for (auto& ip : polys) {
                    Vec acc(sdim, 0), pw = e;
                    for (size_t t = 0; t < ip.size(); ++t) {
                        if (ip[t])
                            for (int i = 0; i < sdim; ++i)
                                acc[i] = F.add(acc[i], F.mul(ip[t], pw[i]));
                        pw = s_mul(pw, b);
                    }
                    if (!vec_is_zero(acc)) stack.push_back(acc);
                }
                done = true;
            }
            BQ_REQUIRE(done, "no central splitter found (bug)");
            continue;
        }
        // center is one field but corner noncommutative: matrix corner;
        // seeded search for an element with >= 2 distinct minpoly factors
        {
            bool found = false;
            for (int trial = 0; trial < 400 && !found; ++trial) {
                Vec a(sdim, 0);
                for (int c = 0; c < cd; ++c) {
                    gfe coef = rng.elt(F);
                    if (!coef) continue;
                    for (int i = 0; i < sdim; ++i)
                        a[i] = F.add(a[i], F.mul(coef, corner_cols[c][i]));
                }
                Mat La = S->lmul_of(a) * corner;
                auto co = solve(corner, La);
                if (!co) continue;
                poly::P mp = minpoly(*co);
                auto fs = poly::factor(F, mp, rng);
                if (fs.size() < 2) continue;
                auto polys = crt_idempotent_polys(F, mp, fs);
                for (auto& ip : polys) {
                    Vec acc(sdim, 0), pw = e;
                    for (size_t t = 0; t < ip.size(); ++t) {
                        if (ip[t])
                            for (int i = 0; i < sdim; ++i)
                                acc[i] = F.add(acc[i], F.mul(ip[t], pw[i]));
                        pw = s_mul(pw, a);
                    }
                    if (!vec_is_zero(acc)) stack.push_back(acc);
                }
                found = true;
            }
            BQ_REQUIRE(found, "failed to split matrix corner");
        }
    }

    // group primitives into Wedderburn blocks: same block iff e S f != 0
    std::vector<int> block(prim.size(), -1);
    int nblocks = 0;
    for (size_t i = 0; i < prim.size(); ++i) {
        if (block[i] >= 0) continue;
        block[i] = nblocks;
        for (size_t j = i + 1; j < prim.size(); ++j) {
            if (block[j] >= 0) continue;
            bool linked = false;
            for (int b = 0; b < sdim && !linked; ++b) {
                Vec eb(sdim, 0);
                eb[b] = F.from_int(1);
                Vec v = s_mul(s_mul(prim[i], eb), prim[j]);
                if (!vec_is_zero(v)) linked = true;
            }
            if (linked) block[j] = nblocks;
        }
        ++nblocks;
    }

    // lift to A corner by corner (z -> z^(p^r), p^r >= nil index)
    int pr = 0;
    {
        long long pw = 1;
        while (pw < J.nil_index) {
            pw *= F.p();
            ++pr;
        }
    }
    IdempotentFamily fam;
    Vec done_sum(dim_, 0);
    for (size_t i = 0; i < prim.size(); ++i) {
        Vec one_minus(dim_, 0);
        for (int r = 0; r < dim_; ++r) one_minus[r] = F.sub(unit_[r], done_sum[r]);
        if (i + 1 == prim.size()) {
            BQ_REQUIRE(mul_elements(one_minus, one_minus) == one_minus,
                       "final corner complement not idempotent");
            fam.idems.push_back(one_minus);
            break;
        }
        Vec z = from_s(prim[i]);
        z = mul_elements(mul_elements(one_minus, z), one_minus);
        for (int t = 0; t < pr; ++t) {
            Vec zp = z;
            for (int u = 1; u < F.p(); ++u) zp = mul_elements(zp, z);
            z = std::move(zp);
        }
        BQ_REQUIRE(mul_elements(z, z) == z, "idempotent lifting failed");
        fam.idems.push_back(z);
        for (int r = 0; r < dim_; ++r) done_sum[r] = F.add(done_sum[r], z[r]);
    }
    fam.iso_class = block;
    fam.num_classes = nblocks;
    // exactness checks
    {
        Vec total(dim_, 0);
        for (auto& e : fam.idems)
            for (int r = 0; r < dim_; ++r) total[r] = F.add(total[r], e[r]);
        BQ_REQUIRE(total == unit_, "idempotents do not sum to 1");
        for (size_t i = 0; i < fam.idems.size(); ++i)
            for (size_t j = 0; j < fam.idems.size(); ++j) {
                if (i == j) continue;
                BQ_REQUIRE(vec_is_zero(mul_elements(fam.idems[i], fam.idems[j])),
                           "idempotents not orthogonal");
            }
    }
    idems_ = std::move(fam);
    return *idems_;
}

const std::vector<std::pair<Module, int>>& Algebra::pims() {
    BQ_REQUIRE(kind_ == Kind::Structure, "pims need structure constants");
    if (pims_) return *pims_;
    const auto& fam = primitive_idempotents();
    const auto& simp = simples();
    auto out = std::make_shared<std::vector<std::pair<Module, int>>>();
    Module reg = regular_module();
    std::set<int> classes_seen;
    for (size_t i = 0; i < fam.idems.size(); ++i) {
        if (classes_seen.count(fam.iso_class[i])) continue;
        classes_seen.insert(fam.iso_class[i]);
        Mat img = column_space(rmul_of(fam.idems[i]));
        Module P = submodule(reg, img);
        P.label = name_ + ".P" + std::to_string(out->size());
        int top = -1;
        for (size_t s = 0; s < simp.size(); ++s) {
            Mat op = element_action(simp[s], fam.idems[i]);
            if (!op.is_zero()) {
                BQ_REQUIRE(top < 0, "PIM with two tops: " + name_);
                top = int(s);
            }
        }
        BQ_REQUIRE(top >= 0, "PIM top not found");
        out->push_back({std::move(P), top});
    }
    BQ_REQUIRE(out->size() == simp.size(), "PIM/simple count mismatch");
    pims_ = out;
    return *pims_;
}

void Module::check_consistent() const {
    BQ_REQUIRE(int(act.size()) == A->num_gens(), "action count mismatch");
    for (auto& m : act) BQ_REQUIRE(m.rows() == dim && m.cols() == dim, "action shape");
}

Vec sc_unit_vec(const Algebra& A) { return A.unit(); }

}  // namespace blockeq
