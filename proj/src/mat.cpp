#include "blockeq/mat.hpp"

#include <algorithm>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blockeq {

#ifdef _OPENMP
bool Kernels::parallel = true;
#else
bool Kernels::parallel = false;
#endif
long Kernels::parallel_cutoff = 1 << 22;

namespace {

// dst += s * src over one row
inline void row_axpy(const Field* F, gfe* dst, const gfe* src, gfe s, int n) {
    if (s == 0) return;
    const gfe* add = F->add_table();
    const gfe* mr = F->mul_row(s);
    const int q = F->q();
    for (int j = 0; j < n; ++j) dst[j] = add[size_t(dst[j]) * q + mr[src[j]]];
}

inline void row_scale(const Field* F, gfe* r, gfe s, int n) {
    const gfe* mr = F->mul_row(s);
    for (int j = 0; j < n; ++j) r[j] = mr[r[j]];
}

void mul_rows(const Mat& a, const Mat& b, Mat& out, int i0, int i1) {
    const Field* F = a.field();
    const int n = a.cols(), m = b.cols();
    for (int i = i0; i < i1; ++i) {
        gfe* dst = out.row(i);
        const gfe* ar = a.row(i);
        for (int k = 0; k < n; ++k) {
            gfe s = ar[k];
            if (s) row_axpy(F, dst, b.row(k), s, m);
        }
    }
}

}  // namespace

Mat Mat::identity(const Field* F, int n) {
    Mat r(F, n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = F->from_int(1);
    return r;
}

bool Mat::is_zero() const {
    for (gfe x : a_)
        if (x) return false;
    return true;
}

bool Mat::is_identity() const {
    if (r_ != c_) return false;
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j)
            if (at(i, j) != (i == j ? F_->from_int(1) : gfe(0))) return false;
    return true;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    r.add_in_place(o);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    r.sub_in_place(o);
    return r;
}

void Mat::add_in_place(const Mat& o) {
    BQ_REQUIRE(r_ == o.r_ && c_ == o.c_, "shape mismatch");
    const gfe* add = F_->add_table();
    const int q = F_->q();
    for (size_t i = 0; i < a_.size(); ++i) a_[i] = add[size_t(a_[i]) * q + o.a_[i]];
}

void Mat::sub_in_place(const Mat& o) {
    BQ_REQUIRE(r_ == o.r_ && c_ == o.c_, "shape mismatch");
    const gfe* add = F_->add_table();
    const int q = F_->q();
    for (size_t i = 0; i < a_.size(); ++i) a_[i] = add[size_t(a_[i]) * q + F_->neg(o.a_[i])];
}

void Mat::axpy(gfe s, const Mat& o) {
    BQ_REQUIRE(r_ == o.r_ && c_ == o.c_, "shape mismatch");
    if (s == 0) return;
    row_axpy(F_, a_.data(), o.a_.data(), s, int(a_.size()));
}

Mat Mat::scaled(gfe s) const {
    Mat r = *this;
    row_scale(F_, r.a_.data(), s, int(r.a_.size()));
    return r;
}

Mat Mat::transpose() const {
    Mat r(F_, c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::kronecker(const Mat& o) const {
    Mat r(F_, r_ * o.r_, c_ * o.c_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) {
            gfe s = at(i, j);
            if (!s) continue;
            const gfe* mr = F_->mul_row(s);
            for (int k = 0; k < o.r_; ++k) {
                gfe* dst = r.row(i * o.r_ + k) + size_t(j) * o.c_;
                const gfe* src = o.row(k);
                for (int l = 0; l < o.c_; ++l) dst[l] = mr[src[l]];
            }
        }
    return r;
}

Mat Mat::mul_serial(const Mat& a, const Mat& b) {
    BQ_REQUIRE(a.c_ == b.r_, "inner dimension mismatch");
    BQ_REQUIRE(a.F_ == b.F_, "field mismatch");
    Mat out(a.F_, a.r_, b.c_);
    mul_rows(a, b, out, 0, a.r_);
    return out;
}

Mat Mat::mul_parallel(const Mat& a, const Mat& b) {
    BQ_REQUIRE(a.c_ == b.r_, "inner dimension mismatch");
    BQ_REQUIRE(a.F_ == b.F_, "field mismatch");
    Mat out(a.F_, a.r_, b.c_);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (int i = 0; i < a.r_; ++i) mul_rows(a, b, out, i, i + 1);
#else
    mul_rows(a, b, out, 0, a.r_);
#endif
    return out;
}

Mat Mat::mul(const Mat& a, const Mat& b) {
    long work = long(a.r_) * a.c_ * b.c_;
    if (Kernels::parallel && work >= Kernels::parallel_cutoff) return mul_parallel(a, b);
    return mul_serial(a, b);
}

Mat Mat::cols_slice(const std::vector<int>& idx) const {
    Mat r(F_, r_, int(idx.size()));
    for (int i = 0; i < r_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.at(i, int(j)) = at(i, idx[j]);
    return r;
}

Mat Mat::rows_slice(const std::vector<int>& idx) const {
    Mat r(F_, int(idx.size()), c_);
    for (size_t i = 0; i < idx.size(); ++i) std::memcpy(r.row(int(i)), row(idx[i]), c_);
    return r;
}

Mat Mat::hstack(const Mat& o) const {
    BQ_REQUIRE(r_ == o.r_, "row mismatch");
    Mat r(F_, r_, c_ + o.c_);
    for (int i = 0; i < r_; ++i) {
        std::memcpy(r.row(i), row(i), c_);
        std::memcpy(r.row(i) + c_, o.row(i), o.c_);
    }
    return r;
}

Mat Mat::vstack(const Mat& o) const {
    BQ_REQUIRE(c_ == o.c_, "col mismatch");
    Mat r(F_, r_ + o.r_, c_);
    std::memcpy(r.row(0), a_.data(), a_.size());
    std::memcpy(r.row(r_), o.a_.data(), o.a_.size());
    return r;
}

// ---------------------------------------------------------------- Echelon

bool Echelon::add_row(const gfe* v) { return add_row(std::vector<gfe>(v, v + width_)); }

bool Echelon::add_row(std::vector<gfe> v) {
    const Field* F = F_;
    for (size_t r = 0; r < rows_.size(); ++r) {
        gfe c = v[pivcol_[r]];
        if (c) row_axpy(F, v.data(), rows_[r].data(), F->neg(c), width_);
    }
    int piv = -1;
    for (int j = 0; j < width_; ++j)
        if (v[j]) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    row_scale(F, v.data(), F->inv(v[piv]), width_);
    // back-substitute to keep rows fully reduced
    for (size_t r = 0; r < rows_.size(); ++r) {
        gfe c = rows_[r][piv];
        if (c) row_axpy(F, rows_[r].data(), v.data(), F->neg(c), width_);
    }
    // insert sorted by pivot column
    size_t pos = 0;
    while (pos < rows_.size() && pivcol_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivcol_.insert(pivcol_.begin() + pos, piv);
    return true;
}

std::vector<gfe> Echelon::reduce(const gfe* v) const {
    std::vector<gfe> w(v, v + width_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        gfe c = w[pivcol_[r]];
        if (c) row_axpy(F_, w.data(), rows_[r].data(), F_->neg(c), width_);
    }
    return w;
}

bool Echelon::contains(const gfe* v) const {
    auto w = reduce(v);
    for (gfe x : w)
        if (x) return false;
    return true;
}

Mat Echelon::basis() const {
    Mat b(F_, int(rows_.size()), width_);
    for (size_t i = 0; i < rows_.size(); ++i) std::memcpy(b.row(int(i)), rows_[i].data(), width_);
    return b;
}

bool EchelonT::add_row(std::vector<gfe> v) {
    BQ_REQUIRE(int(v.size()) == width_, "width mismatch");
    int tail = n_inserted_ + 1;
    v.resize(width_ + tail, 0);
    v[width_ + n_inserted_] = F_->from_int(1);
    for (auto& row : rows_) row.resize(width_ + tail, 0);
    ++n_inserted_;
    for (size_t r = 0; r < rows_.size(); ++r) {
        gfe c = v[pivcol_[r]];
        if (c) row_axpy(F_, v.data(), rows_[r].data(), F_->neg(c), width_ + tail);
    }
    int piv = -1;
    for (int j = 0; j < width_; ++j)
        if (v[j]) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    row_scale(F_, v.data(), F_->inv(v[piv]), width_ + tail);
    for (size_t r = 0; r < rows_.size(); ++r) {
        gfe c = rows_[r][piv];
        if (c) row_axpy(F_, rows_[r].data(), v.data(), F_->neg(c), width_ + tail);
    }
    size_t pos = 0;
    while (pos < rows_.size() && pivcol_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivcol_.insert(pivcol_.begin() + pos, piv);
    return true;
}

std::optional<std::vector<gfe>> EchelonT::coordinates(const gfe* v) const {
    std::vector<gfe> w(v, v + width_);
    w.resize(width_ + n_inserted_, 0);
    for (size_t r = 0; r < rows_.size(); ++r) {
        gfe c = w[pivcol_[r]];
        if (c) {
            std::vector<gfe> rr = rows_[r];
            rr.resize(width_ + n_inserted_, 0);
            row_axpy(F_, w.data(), rr.data(), F_->neg(c), width_ + n_inserted_);
        }
    }
    for (int j = 0; j < width_; ++j)
        if (w[j]) return std::nullopt;
    // v = sum(-tail) * originals
    std::vector<gfe> coeff(n_inserted_);
    for (int j = 0; j < n_inserted_; ++j) coeff[j] = F_->neg(w[width_ + j]);
    return coeff;
}

// ------------------------------------------------------------ free funcs

std::vector<int> rref(Mat& a) {
    const Field* F = a.field();
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < a.cols() && r < a.rows(); ++col) {
        int sel = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a.at(i, col)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
        row_scale(F, a.row(r), F->inv(a.at(r, col)), a.cols());
        const gfe* src = a.row(r);
        long work = long(a.rows()) * a.cols();
#ifdef _OPENMP
        bool par = Kernels::parallel && work >= Kernels::parallel_cutoff;
#pragma omp parallel for schedule(static) if (par)
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            gfe c = a.at(i, col);
            if (c) row_axpy(F, a.row(i), src, F->neg(c), a.cols());
        }
#else
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            gfe c = a.at(i, col);
            if (c) row_axpy(F, a.row(i), src, F->neg(c), a.cols());
        }
#endif
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

int rank_of(const Mat& a) {
    Mat b = a;
    return int(rref(b).size());
}

Mat kernel(const Mat& a) {
    Mat b = a;
    auto piv = rref(b);
    const Field* F = a.field();
    std::vector<bool> is_piv(a.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < a.cols(); ++j)
        if (!is_piv[j]) free_cols.push_back(j);
    Mat K(F, a.cols(), int(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        K.at(fc, int(k)) = F->from_int(1);
        for (size_t r = 0; r < piv.size(); ++r) K.at(piv[r], int(k)) = F->neg(b.at(int(r), fc));
    }
    return K;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    BQ_REQUIRE(a.rows() == b.rows(), "rhs row mismatch");
    Mat aug = a.hstack(b);
    auto piv = rref(aug);
    const Field* F = a.field();
    // inconsistent if any pivot falls in the b-part
    for (int c : piv)
        if (c >= a.cols()) return std::nullopt;
    Mat x(F, a.cols(), b.cols());
    for (size_t r = 0; r < piv.size(); ++r)
        for (int j = 0; j < b.cols(); ++j) x.at(piv[r], j) = aug.at(int(r), a.cols() + j);
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    BQ_REQUIRE(a.rows() == a.cols(), "not square");
    Mat aug = a.hstack(Mat::identity(a.field(), a.rows()));
    auto piv = rref(aug);
    if (int(piv.size()) != a.rows() || (piv.size() && piv.back() >= a.cols())) return std::nullopt;
    for (size_t r = 0; r < piv.size(); ++r)
        if (piv[r] != int(r)) return std::nullopt;
    Mat inv(a.field(), a.rows(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j) inv.at(i, j) = aug.at(i, a.cols() + j);
    return inv;
}

Mat column_space(const Mat& a) {
    Mat t = a.transpose();
    Echelon e(a.field(), a.rows());
    for (int i = 0; i < t.rows(); ++i) e.add_row(t.row(i));
    return e.basis().transpose();
}

std::vector<gfe> charpoly(const Mat& a) {
    BQ_REQUIRE(a.rows() == a.cols(), "not square");
    const Field* F = a.field();
    const int n = a.rows();
    if (n == 0) return {F->from_int(1)};
    // Hessenberg reduction, then the standard determinant recurrence
    Mat h = a;
    for (int col = 0; col < n - 1; ++col) {
        int piv = -1;
        for (int i = col + 1; i < n; ++i)
            if (h.at(i, col)) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != col + 1) {
            for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(col + 1, j));
            for (int i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, col + 1));
        }
        gfe d = h.at(col + 1, col);
        for (int i = col + 2; i < n; ++i) {
            gfe c = h.at(i, col);
            if (!c) continue;
            gfe f = F->div(c, d);
            row_axpy(F, h.row(i), h.row(col + 1), F->neg(f), n);
            for (int r = 0; r < n; ++r) h.at(r, col + 1) = F->add(h.at(r, col + 1), F->mul(f, h.at(r, i)));
        }
    }
    // p_0 = 1; p_k(x) = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} (prod b_j) p_{i-1}
    std::vector<std::vector<gfe>> p(n + 1);
    p[0] = {F->from_int(1)};
    for (int k = 1; k <= n; ++k) {
        p[k].assign(k + 1, 0);
        // (x - h[k-1][k-1]) * p[k-1]
        for (int i = 0; i <= k - 1; ++i) {
            p[k][i + 1] = F->add(p[k][i + 1], p[k - 1][i]);
            p[k][i] = F->sub(p[k][i], F->mul(h.at(k - 1, k - 1), p[k - 1][i]));
        }
        gfe prod = F->from_int(1);
        for (int i = k - 1; i >= 1; --i) {
            prod = F->mul(prod, h.at(i, i - 1));
            gfe coef = F->mul(h.at(i - 1, k - 1), prod);
            if (coef)
                for (int j = 0; j <= i - 1; ++j) p[k][j] = F->sub(p[k][j], F->mul(coef, p[i - 1][j]));
        }
    }
    return p[n];
}

Mat poly_eval(const std::vector<gfe>& p, const Mat& a) {
    const Field* F = a.field();
    const int n = a.rows();
    Mat r(F, n, n);
    // Horner
    for (int i = int(p.size()) - 1; i >= 0; --i) {
        r = Mat::mul(r, a);
        if (p[i])
            for (int d = 0; d < n; ++d) r.at(d, d) = F->add(r.at(d, d), p[i]);
    }
    return r;
}

std::vector<gfe> minpoly(const Mat& a) {
    // lcm over seed vectors of the minimal polynomial of a on the Krylov
    // space of the seed; stop once the degree bound is reached
    const Field* F = a.field();
    const int n = a.rows();
    std::vector<gfe> mp{F->from_int(1)};  // constant 1 (degree 0)

    auto polmul = [&](const std::vector<gfe>& x, const std::vector<gfe>& y) {
        std::vector<gfe> r(x.size() + y.size() - 1, 0);
        for (size_t i = 0; i < x.size(); ++i)
            if (x[i])
                for (size_t j = 0; j < y.size(); ++j)
                    r[i + j] = F->add(r[i + j], F->mul(x[i], y[j]));
        return r;
    };

    Echelon seen(F, n);
    for (int seed = 0; seed < n; ++seed) {
        std::vector<gfe> v(n, 0);
        v[seed] = F->from_int(1);
        if (seen.contains(v.data())) continue;
        // spin Krylov space of v, recording the first dependency
        EchelonT kry(F, n);
        std::vector<gfe> cur = v;
        std::vector<std::vector<gfe>> iterates;
        while (true) {
            iterates.push_back(cur);
            if (!kry.add_row(cur)) break;
            // cur = a * cur
            std::vector<gfe> nxt(n, 0);
            for (int i = 0; i < n; ++i) {
                gfe acc = 0;
                const gfe* ar = a.row(i);
                for (int j = 0; j < n; ++j)
                    if (cur[j]) acc = F->add(acc, F->mul(ar[j], cur[j]));
                nxt[i] = acc;
            }
            cur = std::move(nxt);
        }
        // last iterate = combination of previous ones: local min poly
        auto co = kry.coordinates(iterates.back().data());
        BQ_REQUIRE(co.has_value(), "Krylov bookkeeping");
        int d = int(iterates.size()) - 1;
        std::vector<gfe> local(d + 1, 0);
        local[d] = F->from_int(1);
        for (int i = 0; i < d; ++i) local[i] = F->neg((*co)[i]);
        // mp = lcm(mp, local) = mp * local / gcd
        // compute gcd via Euclid
        auto pdiv = [&](std::vector<gfe> num, const std::vector<gfe>& den) {
            // returns remainder; den monic-normalized
            std::vector<gfe> d2 = den;
            gfe lead = d2.back();
            for (auto& c : d2) c = F->div(c, lead);
            while (num.size() >= d2.size() && !(num.size() == 1 && num[0] == 0)) {
                gfe c = num.back();
                if (c) {
                    size_t sh = num.size() - d2.size();
                    for (size_t i = 0; i < d2.size(); ++i)
                        num[sh + i] = F->sub(num[sh + i], F->mul(c, d2[i]));
                }
                while (num.size() > 1 && num.back() == 0) num.pop_back();
                if (num.size() < d2.size()) break;
            }
            return num;
        };
        std::vector<gfe> x = mp, y = local;
        while (!(y.size() == 1 && y[0] == 0)) {
            auto r = pdiv(x, y);
            x = y;
            y = r;
        }
        // x = gcd (monic-ize)
        gfe lead = x.back();
        for (auto& c : x) c = F->div(c, lead);
        // mp = mp * local / gcd: divide local by gcd first (exact)
        // long division quotient
        std::vector<gfe> quo(local.size() - x.size() + 1, 0), rem = local;
        for (int i = int(rem.size()) - int(x.size()); i >= 0; --i) {
            gfe c = rem[i + x.size() - 1];
            quo[i] = c;
            if (c)
                for (size_t j = 0; j < x.size(); ++j)
                    rem[i + j] = F->sub(rem[i + j], F->mul(c, x[j]));
        }
        mp = polmul(mp, quo);
        for (auto& it : iterates) seen.add_row(it.data());
        if (int(mp.size()) - 1 >= n) break;
    }
    return mp;
}

Mat intersect_columns(const Mat& a, const Mat& b) {
    if (a.cols() == 0 || b.cols() == 0) return Mat(a.field(), a.rows(), 0);
    // solve [a | -b] (x;y)=0; intersection = a x
    Mat neg_b = b.scaled(a.field()->neg(a.field()->from_int(1)));
    Mat stacked = a.hstack(neg_b);
    Mat K = kernel(stacked);
    if (K.cols() == 0) return Mat(a.field(), a.rows(), 0);
    Mat xs(a.field(), a.cols(), K.cols());
    for (int i = 0; i < a.cols(); ++i)
        for (int j = 0; j < K.cols(); ++j) xs.at(i, j) = K.at(i, j);
    return column_space(Mat::mul(a, xs));
}

bool columns_contained(const Mat& sub, const Mat& sup) {
    Mat t = sup.transpose();
    Echelon e(sup.field(), sup.rows());
    for (int i = 0; i < t.rows(); ++i) e.add_row(t.row(i));
    Mat st = sub.transpose();
    for (int i = 0; i < st.rows(); ++i)
        if (!e.contains(st.row(i))) return false;
    return true;
}

}  // namespace blockeq
