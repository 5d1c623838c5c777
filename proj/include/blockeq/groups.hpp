#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "blockeq/gf.hpp"
#include "blockeq/mat.hpp"

namespace blockeq {

/// 2x2 matrix [[a,b],[c,d]] over a small field, entries as codes.
struct Mat2 {
    gfe a = 0, b = 0, c = 0, d = 0;
    bool operator==(const Mat2&) const = default;
};

class FiniteMatrixGroup;
using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

/// Subgroup given by sorted parent element indices.
struct Subgroup {
    std::vector<int> elems;  // sorted, includes identity
    int order() const { return int(elems.size()); }
    bool contains(int idx) const;
};

/// An enumerated finite group. Two flavours:
///  - Mat2 groups: SL(2,q), GL(2,q) and their subgroups re-packaged as
///    standalone groups, elements canonically ordered by entry dlog tuples.
///  - Products G x H^op, elements indexed as i*|H|+j, multiplied through
///    the factors (second component in opposite order).
/// Immutable after construction.
class FiniteMatrixGroup {
public:
    enum class Kind { SL2, GL2, SubgroupGroup, Product };

    static GroupPtr sl2(const FieldPtr& F, bool capacity_flag = false);
    static GroupPtr gl2(const FieldPtr& F, bool capacity_flag = false);
    /// subgroup of a Mat2 group as a standalone group
    static GroupPtr subgroup_as_group(const GroupPtr& G, const Subgroup& S);
    /// G x H^op; capacity bound on |G||H|
    static GroupPtr product_op(const GroupPtr& G, const GroupPtr& H,
                               long capacity = 1000000);

    Kind kind() const { return kind_; }
    const FieldPtr& field() const { return F_; }
    int order() const { return size_; }
    int identity() const { return id_; }
    int mul(int i, int j) const;
    int inv(int i) const;
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    int pow(int g, long long e) const;
    int element_order(int g) const;

    const std::vector<int>& generators() const { return gens_; }

    // Mat2 flavour only
    const Mat2& matrix(int i) const;
    int index_of(const Mat2& m) const;  // -1 if absent

    // product flavour only
    const GroupPtr& left_factor() const { return left_; }
    const GroupPtr& right_factor() const { return right_; }
    int pair_index(int i, int j) const { return i * right_->order() + j; }
    std::pair<int, int> unpair(int e) const {
        return {e / right_->order(), e % right_->order()};
    }

    /// BFS words over generators(): word_parent()[id] = {-1,-1};
    /// element e != id satisfies e = gens[word_gen(e)] * word_parent(e).
    const std::vector<int>& bfs_order() const { return bfs_order_; }
    int word_gen(int e) const { return word_gen_[e]; }
    int word_parent(int e) const { return word_parent_[e]; }

    // ---- subgroup machinery (all brute force, desk scale) ----
    Subgroup whole() const;
    Subgroup trivial() const;
    bool is_subgroup(const Subgroup& S) const;
    Subgroup generated(std::vector<int> seed) const;
    Subgroup normalizer(const Subgroup& S) const;
    Subgroup centralizer(const Subgroup& S) const;
    Subgroup center() const;
    Subgroup intersect(const Subgroup& A, const Subgroup& B) const;
    Subgroup conjugate_subgroup(const Subgroup& S, int g) const;
    bool subgroups_conjugate(const Subgroup& A, const Subgroup& B) const;
    /// all subgroups of an abelian p-group S (used for defect group search)
    std::vector<Subgroup> all_subgroups_of(const Subgroup& S) const;
    /// left coset representatives of S (identity first, deterministic)
    std::vector<int> left_coset_reps(const Subgroup& S) const;
    /// conjugacy classes; each class sorted, classes ordered by min element
    const std::vector<std::vector<int>>& conjugacy_classes() const;

    /// upper unitriangular Sylow p-subgroup of SL2/GL2
    Subgroup sylow_unitriangular() const;

    ~FiniteMatrixGroup() = default;

private:
    FiniteMatrixGroup() = default;
    void finalize();  // tables, generators, BFS, sanity checks

    Kind kind_ = Kind::SL2;
    FieldPtr F_;
    int size_ = 0;
    int id_ = 0;
    std::vector<Mat2> elems_;
    std::unordered_map<std::uint32_t, int> index_;
    GroupPtr left_, right_;
    std::vector<std::uint32_t> multable_;  // built when size_ <= 5000 (non-product)
    std::vector<int> invtable_;
    std::vector<int> gens_;
    std::vector<int> bfs_order_, word_gen_, word_parent_;
    mutable std::vector<std::vector<int>> classes_;  // lazy
};

/// the diagonal subgroup {(h, h^{-1})} of G x H^op, for H's elements
/// mapped into both factors (left factor must contain right's matrices)
Subgroup diagonal_subgroup(const FiniteMatrixGroup& prod);
/// diagonal image of a subgroup Q of the right factor
Subgroup diagonal_of(const FiniteMatrixGroup& prod, const Subgroup& Q_right);

}  // namespace blockeq
