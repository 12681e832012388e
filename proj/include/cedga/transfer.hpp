#pragma once
// Homotopy transfer onto a deformation retract: given a strictly unital
// A-infinity algebra B, a subset of its basis spanning a subcomplex A, and a
// degree -1 homotopy T, build the transferred products on A and the
// inclusion-correcting morphism F by the tree-sum recursion
//
//     p^d = sum over r >= 2 and d_1+...+d_r = d of
//               mu_B^r(F^{d_1} x ... x F^{d_r}),
//     mu_A^d = G o p^d,    F^d = T o p^d,    F^1 = inclusion,
//
// where G projects onto the retained basis.  The recursion is sign-free in
// this form; all signs live in the stored products of B.  Tuples containing
// the unit are excluded from the recursion and the strict unit is installed
// on A afterwards.

#include <string>
#include <unordered_map>
#include <vector>

#include "cedga/ainfty.hpp"

namespace cedga {

struct Contraction {
    std::vector<char> in_a;                  // per B basis index
    std::unordered_map<Idx, SparseVec> t1;   // homotopy, missing = zero
};

struct ContractionReport {
    bool homotopy_ok = false;      // mu^1 T + T mu^1 = F^1 G^1 - id
    bool t_zero_on_a = false;      // T vanishes on the retained part
    bool side_tt = false;          // T T = 0
    bool side_gt = false;          // G T = 0
    bool side_tf = false;          // T F = 0
    std::vector<std::string> defects;
    bool pass = false;
};

ContractionReport verify_contraction(const AInfinityAlgebra& B,
                                     const Contraction& c);

// Arity-indexed components of an A-infinity morphism A -> B: packed tuples of
// A basis indices mapping to vectors over the B basis.  Component [1] is
// total on the A basis; higher components are sparse (missing = zero).
struct MorphismCandidate {
    std::vector<std::unordered_map<uint64_t, SparseVec>> f;

    const SparseVec* component(std::span<const Idx> tuple) const;
};

struct TransferResult {
    AInfinityAlgebra algebra;            // the transferred A
    MorphismCandidate morphism;          // F: A -> B
    std::vector<Idx> a_to_b;             // basis index translation
    std::vector<Idx> b_to_a;             // -1 where not retained
};

TransferResult transfer_products(const AInfinityAlgebra& B,
                                 const Contraction& c, int max_arity);

}  // namespace cedga
