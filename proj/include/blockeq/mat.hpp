#pragma once

#include <optional>
#include <vector>

#include "blockeq/gf.hpp"

namespace blockeq {

/// Global switch for the OpenMP kernel variants. The serial kernels are the
/// reference implementation; results must agree bit for bit. Parallel
/// dispatch only kicks in above a size threshold, so small problems never
/// pay the fork/join cost.
struct Kernels {
    static bool parallel;          // default true (when compiled with OpenMP)
    static long parallel_cutoff;   // min element-ops before going parallel
};

/// Dense matrix over a GF(p^m) with byte element codes. Row-major.
class Mat {
public:
    Mat() : F_(nullptr), r_(0), c_(0) {}
    Mat(const Field* F, int r, int c) : F_(F), r_(r), c_(c), a_(size_t(r) * c, 0) {}
    Mat(const FieldPtr& F, int r, int c) : Mat(F.get(), r, c) {}

    static Mat identity(const Field* F, int n);
    static Mat zero(const Field* F, int r, int c) { return Mat(F, r, c); }

    const Field* field() const { return F_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    gfe& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
    gfe at(int i, int j) const { return a_[size_t(i) * c_ + j]; }
    gfe* row(int i) { return a_.data() + size_t(i) * c_; }
    const gfe* row(int i) const { return a_.data() + size_t(i) * c_; }

    bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const { return mul(*this, o); }
    Mat scaled(gfe s) const;
    void add_in_place(const Mat& o);
    void sub_in_place(const Mat& o);
    void axpy(gfe s, const Mat& o);  // this += s*o

    Mat transpose() const;
    Mat kronecker(const Mat& o) const;

    /// Parallel-dispatching product; exact.
    static Mat mul(const Mat& a, const Mat& b);
    /// Reference kernels, kept for testing and benchmarking.
    static Mat mul_serial(const Mat& a, const Mat& b);
    static Mat mul_parallel(const Mat& a, const Mat& b);

    Mat cols_slice(const std::vector<int>& idx) const;
    Mat rows_slice(const std::vector<int>& idx) const;
    Mat hstack(const Mat& o) const;
    Mat vstack(const Mat& o) const;

    // raw storage (serialization)
    const std::vector<gfe>& data() const { return a_; }
    std::vector<gfe>& data() { return a_; }

private:
    const Field* F_;
    int r_, c_;
    std::vector<gfe> a_;
};

/// Incremental row-echelon container: rows are reduced as they are added,
/// pivot columns tracked. Used for spans, membership tests and kernel
/// accumulation all over the pipeline.
class Echelon {
public:
    explicit Echelon(const Field* F, int width) : F_(F), width_(width) {}

    int rank() const { return int(rows_.size()); }
    int width() const { return width_; }

    /// Reduce v against the current rows; if a nonzero remainder is left,
    /// normalize and insert it and return true.
    bool add_row(std::vector<gfe> v);
    bool add_row(const gfe* v);

    /// Fully reduce a copy of v; zero result means membership in the span.
    std::vector<gfe> reduce(const gfe* v) const;
    bool contains(const gfe* v) const;

    /// Coordinates of v in terms of the ORIGINAL inserted rows are not
    /// tracked here; use EchelonT when the transform is needed.
    Mat basis() const;  // rank x width, reduced rows
    const std::vector<int>& pivots() const { return pivcol_; }

private:
    const Field* F_;
    int width_;
    std::vector<std::vector<gfe>> rows_;
    std::vector<int> pivcol_;
};

/// Echelon with transform tracking: expresses reduced rows and reductions
/// as combinations of the inserted originals.
class EchelonT {
public:
    explicit EchelonT(const Field* F, int width) : F_(F), width_(width) {}
    int rank() const { return int(rows_.size()); }
    /// returns true if independent (row kept)
    bool add_row(std::vector<gfe> v);
    int inserted() const { return n_inserted_; }
    /// express v (width entries) as combination of inserted rows; nullopt if
    /// not in the span. Coefficient vector has length inserted().
    std::optional<std::vector<gfe>> coordinates(const gfe* v) const;

private:
    const Field* F_;
    int width_;
    int n_inserted_ = 0;
    std::vector<std::vector<gfe>> rows_;   // reduced, width + n_inserted tail
    std::vector<int> pivcol_;
};

// free linear algebra routines
int rank_of(const Mat& a);
/// right kernel: columns span {x : a x = 0}
Mat kernel(const Mat& a);
/// solve a * x = b for x (any solution); nullopt if inconsistent
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);
/// basis of the column space, as columns
Mat column_space(const Mat& a);
/// row-reduce in place; returns pivot columns
std::vector<int> rref(Mat& a);
/// characteristic polynomial, coefficients c_0..c_n (monic)
std::vector<gfe> charpoly(const Mat& a);
/// minimal polynomial of a square matrix
std::vector<gfe> minpoly(const Mat& a);
/// evaluate p(a) for polynomial coefficients c_0..c_d
Mat poly_eval(const std::vector<gfe>& p, const Mat& a);

/// intersection of two column spaces (columns)
Mat intersect_columns(const Mat& a, const Mat& b);
/// do the columns of sub lie in the column space of sup?
bool columns_contained(const Mat& sub, const Mat& sup);

}  // namespace blockeq
