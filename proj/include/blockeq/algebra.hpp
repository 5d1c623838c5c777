#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blockeq/groups.hpp"
#include "blockeq/mat.hpp"
#include "blockeq/poly.hpp"

namespace blockeq {

using Vec = std::vector<gfe>;

class Algebra;
using AlgebraPtr = std::shared_ptr<Algebra>;

struct Module;

/// Radical data of a structure-constant algebra.
struct RadicalData {
    Mat basis;                    // dim x r, columns span J(A)
    std::vector<Vec> ideal_gens;  // small set generating J(A) as a two-sided ideal
    int nil_index = 1;            // smallest t with J^t = 0
};

/// A finite-dimensional algebra in one of three presentations:
///  - Group: a group algebra kG, acting through group generators.
///  - Structure: explicit basis with left-multiplication matrices
///    (block algebras, endomorphism algebras, crossed products).
///  - Tensor: A (x) B^op for bimodules; module actions list the left
///    generators of A first, then the right generators of B.
/// Expensive invariants (radical, projectives, simples) are cached.
class Algebra : public std::enable_shared_from_this<Algebra> {
public:
    enum class Kind { Group, Structure, Tensor };

    static AlgebraPtr group_algebra(const GroupPtr& G, const FieldPtr& F);
    /// group algebra with full structure-constant form (needs |G| modest)
    static AlgebraPtr group_structure(const GroupPtr& G, const FieldPtr& F);
    /// lmul[i] = left multiplication matrix of basis element i
    static AlgebraPtr structure(const FieldPtr& F, std::vector<Mat> lmul, Vec unit,
                                std::vector<Vec> gens, std::string name);
    static AlgebraPtr tensor(const AlgebraPtr& left, const AlgebraPtr& right_op);

    Kind kind() const { return kind_; }
    const FieldPtr& field() const { return F_; }
    int dim() const { return dim_; }
    const std::string& name() const { return name_; }

    // Group kind
    const GroupPtr& group() const { return group_; }

    // Structure kind
    const std::vector<Mat>& lmul() const { return lmul_; }
    const Vec& unit() const { return unit_; }
    const std::vector<Vec>& gen_elements() const { return gens_; }
    Vec mul_elements(const Vec& a, const Vec& b) const;
    Mat lmul_of(const Vec& a) const;  // left multiplication operator of element a
    Mat rmul_of(const Vec& a) const;
    AlgebraPtr opposite();  // cached; Structure only

    // Tensor kind
    const AlgebraPtr& left() const { return left_; }
    const AlgebraPtr& right() const { return right_; }

    /// number of module generator slots (Group: group gens; Structure:
    /// gens.size(); Tensor: left gens + right gens)
    int num_gens() const;

    /// regular left module (Structure kind)
    Module regular_module();

    // ---- cached invariants (Structure kind; Tensor radical derived) ----
    const RadicalData& radical();
    int num_simples();
    /// representatives of the simple left modules
    const std::vector<Module>& simples();
    /// projective indecomposables with their tops: pims()[i].first is the
    /// PIM whose head is isomorphic to simples()[pims()[i].second]
    const std::vector<std::pair<Module, int>>& pims();

    /// primitive orthogonal idempotents of a Structure algebra summing
    /// to 1, grouped: iso_class[i] = iso class of the left PIM A e_i
    struct IdempotentFamily {
        std::vector<Vec> idems;
        std::vector<int> iso_class;
        int num_classes = 0;
    };
    const IdempotentFamily& primitive_idempotents();

    /// word realization of basis elements as generator products
    /// (Structure kind): node 0 is the unit; node j>0 is gens[word_gen[j]]
    /// * node word_parent[j]; to_words * (element coords) gives the
    /// coefficients of the element over the word nodes.
    struct WordBasis {
        std::vector<int> gen, parent;  // per node; node 0: {-1,-1}
        Mat node_vecs;                 // dim x dim, column j = node j coords
        Mat to_words;                  // inverse of node_vecs
    };
    const WordBasis& word_basis();

    Rng fresh_rng() const { return Rng(seed_ ^ 0x517cc1b727220a95ull); }

private:
    Algebra() = default;

    Kind kind_ = Kind::Structure;
    FieldPtr F_;
    int dim_ = 0;
    std::string name_;
    GroupPtr group_;
    std::vector<Mat> lmul_;
    Vec unit_;
    std::vector<Vec> gens_;
    AlgebraPtr left_, right_;
    std::uint64_t seed_ = 0x9d39247e33776d41ull;

    // caches
    std::optional<RadicalData> radical_;
    std::optional<WordBasis> words_;
    std::optional<IdempotentFamily> idems_;
    std::shared_ptr<std::vector<Module>> simples_;
    std::shared_ptr<std::vector<std::pair<Module, int>>> pims_;
    AlgebraPtr opposite_;

    friend struct AlgebraInternal;
};

/// A left module given by the action matrices of the algebra's generator
/// slots. For Tensor algebras this is a bimodule; left actions come first.
struct Module {
    AlgebraPtr A;
    int dim = 0;
    std::vector<Mat> act;
    std::string label;

    const Field* field() const { return A->field().get(); }
    bool valid() const { return A != nullptr; }
    /// sanity: all actions are square of size dim and unit acts as id
    void check_consistent() const;
};

/// structure-constant product helpers
Vec sc_unit_vec(const Algebra& A);

}  // namespace blockeq
