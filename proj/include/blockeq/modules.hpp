#pragma once

#include "blockeq/algebra.hpp"

namespace blockeq {

// ---------------------------------------------------------------- basics

/// columns of `seeds` spun up to the smallest invariant subspace containing
/// them; returns a basis (columns)
Mat spin(const Module& M, const Mat& seeds);

/// submodule on an invariant subspace; basis columns must be invariant.
/// incl (dim x d) embeds the submodule, i.e. action_sub = incl^+ act incl.
Module submodule(const Module& M, const Mat& basis_cols, Mat* incl_out = nullptr);
/// quotient by an invariant subspace; proj (d x dim) is the projection
Module quotient(const Module& M, const Mat& sub_basis_cols, Mat* proj_out = nullptr);

Module direct_sum(const Module& a, const Module& b);
/// dual of a bimodule: (A,B)-bimodule -> (B,A)-bimodule (Tensor kind), or
/// of a one-sided Structure module -> module over A->opposite()
Module dual_module(const Module& M);

/// apply an algebra element (coords) to the module: the operator matrix.
/// For Tensor algebras use left_element_action / right_element_action.
Mat element_action(const Module& M, const Vec& elt);
Mat left_element_action(const Module& M, const Vec& elt);   // Tensor kind
Mat right_element_action(const Module& M, const Vec& elt);  // Tensor kind

// ------------------------------------------------------------------ hom

/// basis of Hom_A(M, N) as dimN x dimM matrices
std::vector<Mat> hom_space(const Module& M, const Module& N);
/// first isomorphism found (seeded search over the hom space), if any
std::optional<Mat> find_isomorphism(const Module& M, const Module& N);
bool modules_isomorphic(const Module& M, const Module& N);

/// End_A(M) as a Structure algebra; basis[i] is the matrix of basis elt i.
struct EndRing {
    AlgebraPtr sc;
    std::vector<Mat> basis;
    Mat matrix_of(const Vec& coords) const;
};
EndRing end_ring(const Module& M);

// ----------------------------------------------------------------- chop

/// composition factors (with repetitions), MeatAxe chop with Norton's
/// irreducibility certificate
std::vector<Module> composition_factors(const Module& M);
bool is_irreducible(const Module& M);

// ------------------------------------------------------------ decompose

struct Summand {
    Module part;
    Mat incl;  // dimM x d
    Mat proj;  // d x dimM, proj * incl = id
    int iso_class = 0;
};
/// Krull–Schmidt decomposition via idempotents of End(M) lifted from its
/// semisimple quotient; deterministic for a fixed module
std::vector<Summand> decompose(const Module& M);
bool is_indecomposable(const Module& M);

// --------------------------------------------------------- socle/radical

/// rad M = J(A) M (basis columns)
Mat radical_submodule(const Module& M);
/// soc M = largest submodule annihilated by J(A)
Mat socle_submodule(const Module& M);
Module head_module(const Module& M, Mat* proj_out = nullptr);
Module socle_module(const Module& M, Mat* incl_out = nullptr);
/// radical series lengths (Loewy layers), descending
std::vector<int> loewy_layers(const Module& M);

// ----------------------------------------------------- projective theory

struct CoverData {
    Module cover;
    Mat pi;  // dimM x dimCover, surjective, kernel in rad(cover)
};
CoverData projective_cover(const Module& M);
struct HullData {
    Module hull;
    Mat eta;  // dimHull x dimM, injective essential embedding
};
HullData injective_hull(const Module& M);
bool is_projective(const Module& M);
bool is_injective_bimodule(const Module& M);

// ------------------------------------------------------- tensor machinery

/// outer tensor U ⊠ W of a left A-module and a left B-module... W is given
/// as a RIGHT B-module (e.g. a dual); result is the (A,B)-bimodule over
/// Algebra::tensor(A, B)
Module outer_tensor(const AlgebraPtr& tensor_alg, const Module& U, const Module& W_right);

/// presentation of a bimodule M (over Tensor(A,B)) as a right-projective
/// e B^r: pi maps the free module onto M, sigma splits it
struct RightPresentation {
    int r = 0;
    std::vector<Vec> gen_images;  // generators m_1..m_r (coords in M)
    Mat sigma;                    // (r*dimB) x dimM : M -> B^r splitting
    Mat pi;                       // dimM x (r*dimB) : B^r -> M
};
/// nullopt if M is not right-B-projective
std::optional<RightPresentation> right_presentation(const Module& M);
bool is_right_projective(const Module& M);
bool is_left_projective(const Module& M);

/// M ⊗_B N for M an (A,B)-bimodule (right projective) and N either a left
/// B-module (result: left A-module) or (B,C)-bimodule (result: (A,C)).
struct TensorResult {
    Module mod;
    /// maps spanning vectors: contract(m, n) = class of m ⊗ n
    Vec contract(const Module& M, const Module& N, const Vec& m, const Vec& n) const;
    Mat embed_basis;  // internal: image basis inside N^r
    RightPresentation pres;
};
TensorResult tensor_over(const Module& M, const Module& N);

/// the map M ⊗_B N -> M' ⊗_B N' induced by f: M -> M' and g: N -> N'
Mat induced_tensor_map(const TensorResult& tmn, const Module& M, const Module& N,
                       const TensorResult& tmn2, const Module& M2, const Module& N2,
                       const Mat& f, const Mat& g);

// ------------------------------------------------- group-algebra functors

/// restriction of a kG-module to a subgroup-as-group H (with embedding into
/// G's matrices)
Module restrict_module(const Module& M, const GroupPtr& H, const AlgebraPtr& kH);
/// induction Ind_H^G M for H a subgroup-as-group of G
Module induce_module(const Module& M, const GroupPtr& G, const AlgebraPtr& kG,
                     const GroupPtr& H);
/// permutation module on the cosets of S <= G (trivial-module induction)
Module coset_permutation_module(const AlgebraPtr& kG, const Subgroup& S);

/// action operator of a single group element on a kG-module
Mat group_element_action(const Module& M, int g);

/// Frobenius/Galois twist: apply x -> x^(p^i) entrywise to all action
/// matrices (the module twisted against the designated rational form)
Module frobenius_twist(const Module& M, int i);

}  // namespace blockeq
