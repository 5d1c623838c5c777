#include "blockeq/groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace blockeq {

namespace {

std::uint32_t pack(const Mat2& m) {
    return std::uint32_t(m.a) | (std::uint32_t(m.b) << 8) | (std::uint32_t(m.c) << 16) |
           (std::uint32_t(m.d) << 24);
}

Mat2 m2mul(const Field& F, const Mat2& x, const Mat2& y) {
    return Mat2{F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
                F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

Mat2 m2inv(const Field& F, const Mat2& x) {
    gfe det = F.sub(F.mul(x.a, x.d), F.mul(x.b, x.c));
    gfe di = F.inv(det);
    return Mat2{F.mul(di, x.d), F.mul(di, F.neg(x.b)), F.mul(di, F.neg(x.c)), F.mul(di, x.a)};
}

// canonical order: tuple of entry dlogs with sentinel q-1 for zero
std::array<int, 4> sort_key(const Field& F, const Mat2& m) {
    auto dl = [&](gfe x) { return x == 0 ? F.q() - 1 : F.dlog(x); };
    return {dl(m.a), dl(m.b), dl(m.c), dl(m.d)};
}

constexpr int kTableLimit = 5000;

}  // namespace

bool Subgroup::contains(int idx) const {
    return std::binary_search(elems.begin(), elems.end(), idx);
}

GroupPtr FiniteMatrixGroup::sl2(const FieldPtr& F, bool capacity_flag) {
    const int q = F->q();
    BQ_REQUIRE(q <= 9 || capacity_flag, "q > 9 requires the capacity flag");
    BQ_REQUIRE(q <= 27, "SL(2,q) beyond q=27 unsupported");
    auto G = new FiniteMatrixGroup();
    G->kind_ = Kind::SL2;
    G->F_ = F;
    gfe one = F->from_int(1);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    Mat2 m{gfe(a), gfe(b), gfe(c), gfe(d)};
                    if (F->sub(F->mul(m.a, m.d), F->mul(m.b, m.c)) == one)
                        G->elems_.push_back(m);
                }
    G->finalize();
    long long expected = (long long)q * (q * q - 1);
    BQ_REQUIRE(G->size_ == expected, "SL2 order mismatch");
    return GroupPtr(G);
}

GroupPtr FiniteMatrixGroup::gl2(const FieldPtr& F, bool capacity_flag) {
    const int q = F->q();
    BQ_REQUIRE(q <= 9 || capacity_flag, "q > 9 requires the capacity flag");
    BQ_REQUIRE(q <= 16, "GL(2,q) beyond q=16 unsupported");
    auto G = new FiniteMatrixGroup();
    G->kind_ = Kind::GL2;
    G->F_ = F;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d) {
                    Mat2 m{gfe(a), gfe(b), gfe(c), gfe(d)};
                    if (F->sub(F->mul(m.a, m.d), F->mul(m.b, m.c)) != 0) G->elems_.push_back(m);
                }
    G->finalize();
    long long expected = (long long)(q * q - 1) * (q * q - q);
    BQ_REQUIRE(G->size_ == expected, "GL2 order mismatch");
    return GroupPtr(G);
}

GroupPtr FiniteMatrixGroup::subgroup_as_group(const GroupPtr& G, const Subgroup& S) {
    BQ_REQUIRE(G->kind_ != Kind::Product, "subgroup_as_group needs a Mat2 group");
    BQ_REQUIRE(G->is_subgroup(S), "not a subgroup");
    auto H = new FiniteMatrixGroup();
    H->kind_ = Kind::SubgroupGroup;
    H->F_ = G->F_;
    for (int idx : S.elems) H->elems_.push_back(G->elems_[idx]);
    H->finalize();
    return GroupPtr(H);
}

GroupPtr FiniteMatrixGroup::product_op(const GroupPtr& G, const GroupPtr& H, long capacity) {
    BQ_REQUIRE((long)G->order() * H->order() <= capacity, "product capacity exceeded");
    auto P = new FiniteMatrixGroup();
    P->kind_ = Kind::Product;
    P->F_ = G->F_;
    P->left_ = G;
    P->right_ = H;
    P->size_ = G->order() * H->order();
    P->id_ = P->pair_index(G->identity(), H->identity());
    for (int g : G->generators()) P->gens_.push_back(P->pair_index(g, H->identity()));
    for (int h : H->generators()) P->gens_.push_back(P->pair_index(G->identity(), h));
    // BFS words over the product generators
    P->word_gen_.assign(P->size_, -1);
    P->word_parent_.assign(P->size_, -1);
    P->bfs_order_.clear();
    P->bfs_order_.push_back(P->id_);
    std::vector<bool> seen(P->size_, false);
    seen[P->id_] = true;
    for (size_t head = 0; head < P->bfs_order_.size(); ++head) {
        int x = P->bfs_order_[head];
        for (size_t gi = 0; gi < P->gens_.size(); ++gi) {
            int y = P->mul(P->gens_[gi], x);
            if (!seen[y]) {
                seen[y] = true;
                P->word_gen_[y] = int(gi);
                P->word_parent_[y] = x;
                P->bfs_order_.push_back(y);
            }
        }
    }
    BQ_REQUIRE(int(P->bfs_order_.size()) == P->size_, "product generators do not generate");
    return GroupPtr(P);
}

void FiniteMatrixGroup::finalize() {
    const Field& F = *F_;
    std::sort(elems_.begin(), elems_.end(),
              [&](const Mat2& x, const Mat2& y) { return sort_key(F, x) < sort_key(F, y); });
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    size_ = int(elems_.size());
    index_.reserve(size_ * 2);
    for (int i = 0; i < size_; ++i) index_[pack(elems_[i])] = i;
    Mat2 ident{F.from_int(1), 0, 0, F.from_int(1)};
    id_ = index_of(ident);
    BQ_REQUIRE(id_ >= 0, "identity missing");

    invtable_.resize(size_);
    for (int i = 0; i < size_; ++i) {
        int j = index_of(m2inv(F, elems_[i]));
        BQ_REQUIRE(j >= 0, "not closed under inverse");
        invtable_[i] = j;
    }
    if (size_ <= kTableLimit) {
        multable_.assign(size_t(size_) * size_, 0);
        for (int i = 0; i < size_; ++i)
            for (int j = 0; j < size_; ++j) {
                int k = index_of(m2mul(F, elems_[i], elems_[j]));
                BQ_REQUIRE(k >= 0, "not closed under multiplication");
                multable_[size_t(i) * size_ + j] = std::uint32_t(k);
            }
    } else {
        // closure spot check
        Rng rng(0xc105u ^ size_);
        for (int t = 0; t < 1000; ++t) {
            int i = int(rng.uniform(size_)), j = int(rng.uniform(size_));
            BQ_REQUIRE(index_of(m2mul(F, elems_[i], elems_[j])) >= 0, "closure spot check failed");
        }
    }
    // associativity spot check (1000 random triples)
    {
        Rng rng(0xa550c ^ size_);
        for (int t = 0; t < 1000; ++t) {
            int i = int(rng.uniform(size_)), j = int(rng.uniform(size_)), k = int(rng.uniform(size_));
            BQ_REQUIRE(mul(mul(i, j), k) == mul(i, mul(j, k)), "associativity spot check failed");
        }
    }
    // greedy small generating set in canonical order
    {
        std::vector<bool> seen(size_, false);
        seen[id_] = true;
        int covered = 1;
        std::vector<int> closure{id_};
        for (int cand = 0; cand < size_ && covered < size_; ++cand) {
            if (seen[cand]) continue;
            gens_.push_back(cand);
            seen[cand] = true;
            closure.push_back(cand);
            ++covered;
            for (size_t head = 0; head < closure.size(); ++head) {
                for (int g : gens_) {
                    int y = mul(g, closure[head]);
                    if (!seen[y]) {
                        seen[y] = true;
                        closure.push_back(y);
                        ++covered;
                    }
                }
            }
        }
    }
    // BFS words
    word_gen_.assign(size_, -1);
    word_parent_.assign(size_, -1);
    bfs_order_.clear();
    bfs_order_.push_back(id_);
    std::vector<bool> seen(size_, false);
    seen[id_] = true;
    for (size_t head = 0; head < bfs_order_.size(); ++head) {
        int x = bfs_order_[head];
        for (size_t gi = 0; gi < gens_.size(); ++gi) {
            int y = mul(gens_[gi], x);
            if (!seen[y]) {
                seen[y] = true;
                word_gen_[y] = int(gi);
                word_parent_[y] = x;
                bfs_order_.push_back(y);
            }
        }
    }
    BQ_REQUIRE(int(bfs_order_.size()) == size_, "generating set incomplete");
}

int FiniteMatrixGroup::mul(int i, int j) const {
    if (kind_ == Kind::Product) {
        auto [a, b] = unpair(i);
        auto [c, d] = unpair(j);
        return pair_index(left_->mul(a, c), right_->mul(d, b));
    }
    if (!multable_.empty()) return int(multable_[size_t(i) * size_ + j]);
    return index_of(m2mul(*F_, elems_[i], elems_[j]));
}

int FiniteMatrixGroup::inv(int i) const {
    if (kind_ == Kind::Product) {
        auto [a, b] = unpair(i);
        return pair_index(left_->inv(a), right_->inv(b));
    }
    return invtable_[i];
}

int FiniteMatrixGroup::pow(int g, long long e) const {
    int r = id_;
    long long ee = e % element_order(g);
    if (ee < 0) ee += element_order(g);
    int b = g;
    while (ee > 0) {
        if (ee & 1) r = mul(r, b);
        b = mul(b, b);
        ee >>= 1;
    }
    return r;
}

int FiniteMatrixGroup::element_order(int g) const {
    int o = 1, x = g;
    while (x != id_) {
        x = mul(x, g);
        ++o;
        BQ_REQUIRE(o <= size_, "order overflow");
    }
    return o;
}

const Mat2& FiniteMatrixGroup::matrix(int i) const {
    BQ_REQUIRE(kind_ != Kind::Product, "product has no single matrix form");
    return elems_[i];
}

int FiniteMatrixGroup::index_of(const Mat2& m) const {
    auto it = index_.find(pack(m));
    return it == index_.end() ? -1 : it->second;
}

Subgroup FiniteMatrixGroup::whole() const {
    Subgroup s;
    s.elems.resize(size_);
    for (int i = 0; i < size_; ++i) s.elems[i] = i;
    return s;
}

Subgroup FiniteMatrixGroup::trivial() const { return Subgroup{{id_}}; }

bool FiniteMatrixGroup::is_subgroup(const Subgroup& S) const {
    if (!S.contains(id_)) return false;
    for (int a : S.elems) {
        if (!S.contains(inv(a))) return false;
        for (int b : S.elems)
            if (!S.contains(mul(a, b))) return false;
    }
    return true;
}

Subgroup FiniteMatrixGroup::generated(std::vector<int> seed) const {
    std::set<int> got{id_};
    std::vector<int> queue{id_};
    for (int s : seed)
        if (!got.count(s)) {
            got.insert(s);
            queue.push_back(s);
        }
    for (size_t head = 0; head < queue.size(); ++head)
        for (int s : seed) {
            int y = mul(s, queue[head]);
            if (!got.count(y)) {
                got.insert(y);
                queue.push_back(y);
            }
        }
    Subgroup r;
    r.elems.assign(got.begin(), got.end());
    return r;
}

Subgroup FiniteMatrixGroup::normalizer(const Subgroup& S) const {
    BQ_REQUIRE(is_subgroup(S), "normalizer of a non-subgroup");
    Subgroup r;
    for (int g = 0; g < size_; ++g) {
        bool ok = true;
        for (int s : S.elems)
            if (!S.contains(conj(g, s))) {
                ok = false;
                break;
            }
        if (ok) r.elems.push_back(g);
    }
    return r;
}

Subgroup FiniteMatrixGroup::centralizer(const Subgroup& S) const {
    Subgroup r;
    for (int g = 0; g < size_; ++g) {
        bool ok = true;
        for (int s : S.elems)
            if (mul(g, s) != mul(s, g)) {
                ok = false;
                break;
            }
        if (ok) r.elems.push_back(g);
    }
    return r;
}

Subgroup FiniteMatrixGroup::center() const { return centralizer(whole()); }

Subgroup FiniteMatrixGroup::intersect(const Subgroup& A, const Subgroup& B) const {
    Subgroup r;
    std::set_intersection(A.elems.begin(), A.elems.end(), B.elems.begin(), B.elems.end(),
                          std::back_inserter(r.elems));
    return r;
}

Subgroup FiniteMatrixGroup::conjugate_subgroup(const Subgroup& S, int g) const {
    Subgroup r;
    for (int s : S.elems) r.elems.push_back(conj(g, s));
    std::sort(r.elems.begin(), r.elems.end());
    return r;
}

bool FiniteMatrixGroup::subgroups_conjugate(const Subgroup& A, const Subgroup& B) const {
    if (A.order() != B.order()) return false;
    for (int g = 0; g < size_; ++g)
        if (conjugate_subgroup(A, g).elems == B.elems) return true;
    return false;
}

std::vector<Subgroup> FiniteMatrixGroup::all_subgroups_of(const Subgroup& S) const {
    // brute force over subsets is hopeless; instead close random/entire
    // generation lattice: S is expected tiny (an abelian p-group of order
    // <= 27). Enumerate all subgroups by closing every subset of a
    // generating set hierarchy: collect closures of all subsets of S.
    BQ_REQUIRE(S.order() <= 64, "subgroup lattice enumeration capped");
    std::set<std::vector<int>> seen;
    std::vector<Subgroup> out;
    // closures of singletons, then extend iteratively
    std::vector<Subgroup> layer{trivial()};
    seen.insert(trivial().elems);
    out.push_back(trivial());
    while (!layer.empty()) {
        std::vector<Subgroup> next;
        for (const auto& T : layer)
            for (int s : S.elems) {
                if (T.contains(s)) continue;
                auto seed = T.elems;
                seed.push_back(s);
                Subgroup U = generated(seed);
                if (seen.insert(U.elems).second) {
                    next.push_back(U);
                    out.push_back(U);
                }
            }
        layer = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        return a.order() != b.order() ? a.order() < b.order() : a.elems < b.elems;
    });
    return out;
}

std::vector<int> FiniteMatrixGroup::left_coset_reps(const Subgroup& S) const {
    std::vector<bool> used(size_, false);
    std::vector<int> reps;
    for (int g = 0; g < size_; ++g) {
        if (used[g]) continue;
        reps.push_back(g);
        for (int s : S.elems) used[mul(g, s)] = true;
    }
    return reps;
}

const std::vector<std::vector<int>>& FiniteMatrixGroup::conjugacy_classes() const {
    if (!classes_.empty()) return classes_;
    std::vector<bool> seen(size_, false);
    for (int x = 0; x < size_; ++x) {
        if (seen[x]) continue;
        std::set<int> cls;
        // orbit under generator conjugation
        std::vector<int> queue{x};
        cls.insert(x);
        seen[x] = true;
        for (size_t head = 0; head < queue.size(); ++head)
            for (int g : gens_) {
                int y = conj(g, queue[head]);
                if (cls.insert(y).second) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        classes_.emplace_back(cls.begin(), cls.end());
    }
    std::sort(classes_.begin(), classes_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return classes_;
}

Subgroup FiniteMatrixGroup::sylow_unitriangular() const {
    BQ_REQUIRE(kind_ == Kind::SL2 || kind_ == Kind::GL2, "needs SL2 or GL2");
    Subgroup s;
    gfe one = F_->from_int(1);
    for (int b = 0; b < F_->q(); ++b) {
        int idx = index_of(Mat2{one, gfe(b), 0, one});
        BQ_REQUIRE(idx >= 0, "unitriangular not found");
        s.elems.push_back(idx);
    }
    std::sort(s.elems.begin(), s.elems.end());
    return s;
}

Subgroup diagonal_subgroup(const FiniteMatrixGroup& prod) {
    BQ_REQUIRE(prod.kind() == FiniteMatrixGroup::Kind::Product, "needs product group");
    const auto& H = *prod.right_factor();
    return diagonal_of(prod, H.whole());
}

Subgroup diagonal_of(const FiniteMatrixGroup& prod, const Subgroup& Q_right) {
    const auto& G = *prod.left_factor();
    const auto& H = *prod.right_factor();
    Subgroup s;
    for (int h : Q_right.elems) {
        int gi = G.index_of(H.matrix(h));
        BQ_REQUIRE(gi >= 0, "right factor not embedded in left");
        s.elems.push_back(prod.pair_index(gi, H.inv(h)));
    }
    std::sort(s.elems.begin(), s.elems.end());
    return s;
}

}  // namespace blockeq
