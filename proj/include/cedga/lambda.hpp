#pragma once
// The four-parameter Legendrian knot family: its Chekanov-Eliashberg algebra,
// the canonical augmentation, the normalizing generator change, the standard
// contraction onto the eight-element subspace, and the quasi-isomorphism
// obstruction engine in the surface cohomology target.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cedga/ainfty.hpp"
#include "cedga/dga.hpp"
#include "cedga/transfer.hpp"

namespace cedga {

struct KnotParams {
    int p, q, r, s;

    // p, q, r, s >= 2 and p == q == r+1 == s+1 mod 2.
    void validate() const;
};

struct ClassicalInvariants {
    int rotation;
    int thurston_bennequin;
    int slice_genus;
};

ClassicalInvariants classical_invariants(const KnotParams& params);

// Generators: letters x_0..x_p, y_0..y_q, z_0..z_r, w_0..w_s in degree 0;
// chords ax_0..ax_p, ..., aw_0..aw_s and a0 in degree 1; b1..b6 in the
// degrees determined by (p,q,r,s).  Differential as printed.
FreeDGA build_ce_dga(const KnotParams& params, const Field& field);

// All letter generators map to -1, everything else to 0.
Augmentation canonical_augmentation(const KnotParams& params, const FreeDGA& d);

// The elementary transformation supported on a0 (alternating sum of the
// degree-1 chords), with its explicit inverse.
InvertibleMap a0_transformation(const KnotParams& params, const FreeDGA& d);

// Convenience pipeline: twist by the canonical augmentation, then change
// generators so that the linear part of d(a0) vanishes.
FreeDGA normalized_dga(const KnotParams& params, const Field& field);

// Contraction of B onto the span of {unit, a0, b1..b6} with the standard
// homotopy supported on the chord duals.
Contraction standard_contraction(const KnotParams& params,
                                 const AInfinityAlgebra& B);

// The cohomology ring of the closed genus-3 surface: basis
// {1; x1,y1,x2,y2,x3,y3; nu}, with x_i y_i = nu = -y_i x_i and all other
// degree-1 products zero.
struct SurfaceRing {
    Field field;
    static constexpr int kOne = 0;
    static constexpr int kTop = 7;  // nu
    static int x(int i) { return 2 * i - 1; }  // i = 1..3
    static int y(int i) { return 2 * i; }

    explicit SurfaceRing(const Field& f) : field(f) {}

    int degree(int e) const { return e == kOne ? 0 : e == kTop ? 2 : 1; }
    std::string name(int e) const;

    // product of basis elements as a coefficient on the basis (sparse)
    std::vector<std::pair<int, Scalar>> product(int a, int b) const;
};

// A sampled candidate for the arity-1..3 components of a morphism from the
// minimal model to the surface ring, with degree-correct values.
struct ObstructionCandidate {
    // F1 on {a0, b1..b6} -> H (degree-matching component), F2 on pairs of
    // b's -> H^1, F3 on triples -> degree-matching component.  Vectors over
    // the 8-element H basis.
    std::map<int, std::vector<Scalar>> f1;                    // key: A index
    std::map<uint64_t, std::vector<Scalar>> f2, f3;           // packed keys
};

struct ObstructionReport {
    // coefficient of F1(a0) in the summed left-hand side, read off mu^4_A
    Scalar lhs_coefficient;
    long rhs_samples = 0;
    long rhs_failures = 0;
    // residual terms of the symbolic cancellation engine, as printed strings
    std::vector<std::string> symbolic_residual;
    bool verdict = false;  // true: no quasi-isomorphism can exist

    ObstructionReport(const Field& f) : lhs_coefficient(Scalar::zero(f)) {}
};

// One functor equation: returns (lhs, rhs) evaluated in H for the given
// argument tuple (i,j,k,l) of b-indices.
struct FunctorEquationValue {
    std::vector<Scalar> lhs, rhs;  // coordinates over the H basis
};

FunctorEquationValue functor_equation_eval(const AInfinityAlgebra& A,
                                           const SurfaceRing& H,
                                           const ObstructionCandidate& F,
                                           const std::array<int, 4>& tuple);

ObstructionReport obstruction_check(const KnotParams& params, const Field& field,
                                    long samples, uint64_t seed);

// Exhaustive check that every element of the degree-1 part of the surface
// ring squares to zero; returns the number of counterexamples (char 2: all
// 64 coefficient vectors).
long surface_h1_square_failures(const Field& field);

}  // namespace cedga
