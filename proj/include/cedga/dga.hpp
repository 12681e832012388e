#pragma once
// Free differential graded algebras: verification of the defining identities,
// augmentations, differential twisting, generator changes, and the homology
// of the word-length-one (linearized) part.

#include <map>
#include <string>
#include <vector>

#include "cedga/freealg.hpp"
#include "cedga/linalg.hpp"

namespace cedga {

struct FreeDGA {
    Field field;
    GenSet gens;
    Derivation diff;  // degree -1

    NCPoly d(const NCPoly& x) const { return apply_derivation(gens, diff, x); }
    NCPoly d_of(int id) const;
};

struct DgaReportEntry {
    int gen;
    bool degree_ok;   // every word of d(g) has degree |g| - 1
    bool square_ok;   // d(d(g)) == 0
    std::string detail;
};

struct DgaReport {
    bool pass = true;
    std::vector<DgaReportEntry> entries;  // only failures are recorded
};

DgaReport verify_dga(const FreeDGA& d);

// Degree-0 unital algebra map to the field annihilating the differential;
// stored on generators, missing = 0.
struct Augmentation {
    std::map<int, Scalar> values;

    Scalar value(const Field& f, int id) const;
    // Unital multiplicative extension evaluated on a polynomial.
    Scalar evaluate(const Field& f, const NCPoly& x) const;
};

// eps(g) = 0 unless |g| = 0, and eps(d(g)) = 0 for every generator.
bool verify_augmentation(const FreeDGA& d, const Augmentation& eps,
                         std::string* why = nullptr);

// Conjugate the differential by phi_eps(g) = g + eps(g) 1.  The result has no
// constant terms in any d(g).
FreeDGA twist(const FreeDGA& d, const Augmentation& eps);

struct InvertibleMap {
    AlgebraMap map;
    AlgebraMap inverse;
};

// Differential becomes phi . d . phi_inv; the pair must be verified inverse
// on generators and degree-preserving.
FreeDGA change_generators(const FreeDGA& d, const AlgebraMap& phi,
                          const AlgebraMap& phi_inv);

struct LinearizedComplex {
    Field field;
    // generators by degree, and the matrix of the length-one part of d from
    // degree k to degree k-1 (columns = degree-k generators, in listed order)
    std::map<int, std::vector<int>> basis;
    std::map<int, DenseMatrix> d_from;

    LinearizedComplex(const Field& f) : field(f) {}
};

// Requires every d(g) to be constant-free (twist first).
LinearizedComplex linear_part(const FreeDGA& d);

// dim ker - rank in each degree, by exact elimination.
std::map<int, long> homology_dims(const LinearizedComplex& c);

}  // namespace cedga
