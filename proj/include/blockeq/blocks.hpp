#pragma once

#include "blockeq/modules.hpp"

namespace blockeq {

/// Group algebra kG with its center presented on class sums.
struct GroupAlgebra {
    GroupPtr G;
    FieldPtr F;
    AlgebraPtr alg;  // Group kind handle (for modules)
    std::vector<std::vector<int>> classes;
    AlgebraPtr center;  // Structure algebra on class sums
    int dim() const { return G->order(); }

    /// class-sum coordinates -> full group-algebra vector
    Vec center_to_full(const Vec& z) const;
    /// central full vector -> class-sum coordinates (errors if not central)
    Vec full_to_center(const Vec& a) const;
    /// convolution product of full vectors
    Vec convolve(const Vec& a, const Vec& b) const;
    bool is_central(const Vec& a) const;
};

GroupAlgebra make_group_algebra(const GroupPtr& G, const FieldPtr& F);

struct BlockIdempotent {
    enum class Tag { Principal, DefectZero, FullDefectNonPrincipal, Other };
    Vec idem;  // full group-algebra coordinates
    Subgroup defect;
    int coeff_degree = 1;  // degree of F_p[b] over F_p
    Tag tag = Tag::Other;
    int support_size = 0;
};

/// central primitive idempotents: pairwise orthogonal, sum to 1, primitive;
/// ordered principal first, then by support size (then lexicographically)
std::vector<Vec> central_idempotents(const GroupAlgebra& kG);

/// blocks with defect groups and tags; sylow = a fixed Sylow p-subgroup
std::vector<BlockIdempotent> block_census(const GroupAlgebra& kG, const Subgroup& sylow);

/// Brauer map Br_Q: truncation to C_G(Q) (input must be Q-conjugation-fixed)
Vec brauer_map(const GroupAlgebra& kG, const Subgroup& Q, const Vec& a);
bool is_conjugation_fixed(const GroupAlgebra& kG, const Subgroup& Q, const Vec& a);

/// defect group: maximal subgroup Q of the given Sylow with Br_Q(b) != 0
/// (canonical representative: largest order, then least element list)
Subgroup defect_group(const GroupAlgebra& kG, const Subgroup& sylow, const Vec& b);

/// the Brauer correspondent block of kH, H = N_G(P) packaged as its own
/// group whose matrices live inside G
Vec brauer_correspondent(const GroupAlgebra& kG, const GroupAlgebra& kH, const Subgroup& P_in_H,
                         const Vec& b);

/// degree of F_p[b] over F_p
int coefficient_degree(const FieldPtr& F, const Vec& b);
/// apply a Galois power sigma^i coefficientwise
Vec galois_on_vec(const FieldPtr& F, const Vec& a, int i);

/// blocks of kGt covering b (Gt >= G with G's matrices inside Gt)
std::vector<Vec> covering_blocks(const GroupAlgebra& kGt, const GroupAlgebra& kG, const Vec& b);
/// translate a vector supported on G into kGt coordinates
Vec embed_group_vec(const GroupAlgebra& kGt, const GroupAlgebra& kG, const Vec& a);

/// does the block idempotent act as identity on the module?
bool block_acts_as_identity(const Module& M, const GroupAlgebra& kG, const Vec& b);

// ----------------------------------------------------------- block algebra

/// kGb as a structure algebra, with transport of modules and vectors
struct BlockAlgebra {
    AlgebraPtr sc;
    Mat basis;  // |G| x dim, columns = basis of the ideal kGb
    Vec idem;   // the block idempotent (full coordinates)
    GroupPtr G;
    FieldPtr F;
    Vec to_block(const Vec& full) const;   // coordinates in the ideal basis
    Vec to_full(const Vec& block) const;
    /// convert a kG-module on which b acts as identity
    Module module_over_block(const Module& M_group) const;
    /// the block algebra as a bimodule over Tensor(sc, other.sc)
    Module as_bimodule(const BlockAlgebra& right) const;
};

BlockAlgebra block_algebra(const GroupAlgebra& kG, const Vec& b);

// ----------------------------------------------------------- named simples

/// simple k'SL(2,q)-module S_lambda (Steinberg tensor product)
Module sl2_simple(const AlgebraPtr& kG, int lambda);
/// 1-dimensional k'H-module T_lambda, H the Borel of SL2
Module borel_simple(const AlgebraPtr& kH, int lambda);
/// 1-dimensional k'Ht-module V_{lambda,mu}, Ht the Borel of GL2
Module borel_gl_simple(const AlgebraPtr& kHt, int lambda, int mu);
/// trivial module
Module trivial_module(const AlgebraPtr& kG);

}  // namespace blockeq
