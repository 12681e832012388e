#pragma once
// Finite-dimensional differential graded algebras over the two-element field
// attached to the standard triangulation of a closed orientable genus-g
// surface, and the zig-zag of dg-algebra maps between them: the cochain
// algebra C, the smaller model C', its stabilization Chat, the cohomology
// ring H, and the morphisms Phi: C' -> C, the inclusion C' -> Chat, and
// PhiHat: H -> Chat.
//
// Everything here is characteristic 2: vectors are bitsets, sums are XOR.

#include <cstdint>
#include <string>
#include <vector>

#include "cedga/scalar.hpp"

namespace cedga {

struct F2Vec {
    std::vector<uint64_t> w;

    F2Vec() = default;
    explicit F2Vec(int bits) : w(static_cast<size_t>((bits + 63) / 64), 0) {}

    bool get(int i) const {
        return (w[static_cast<size_t>(i) / 64] >> (static_cast<size_t>(i) % 64)) & 1;
    }
    void flip(int i) {
        w[static_cast<size_t>(i) / 64] ^= uint64_t{1} << (static_cast<size_t>(i) % 64);
    }
    F2Vec& operator^=(const F2Vec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
        return *this;
    }
    bool is_zero() const {
        for (uint64_t x : w)
            if (x) return false;
        return true;
    }
    bool operator==(const F2Vec&) const = default;
};

// rank of a list of vectors by Gaussian elimination (destructive on a copy)
int f2_rank(std::vector<F2Vec> rows);

struct DGAlgebraPresentation {
    std::string label;
    Field field = Field::fp(2);
    std::vector<std::string> names;
    std::vector<int> degrees;
    F2Vec unit;                            // possibly a sum of basis elements
    std::vector<F2Vec> diff;               // per basis index, degree +1
    std::vector<std::vector<F2Vec>> prod;  // [i][j] = product of basis elts

    int dim() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;  // throws if absent

    F2Vec d(const F2Vec& u) const;
    F2Vec mul(const F2Vec& u, const F2Vec& v) const;
    std::string show(const F2Vec& u) const;
};

struct DGMorphism {
    std::string label;
    DGAlgebraPresentation source, target;
    std::vector<F2Vec> image;  // per source basis index

    F2Vec apply(const F2Vec& u) const;
};

struct SurfaceReport {
    bool pass = true;
    std::vector<std::string> defects;  // capped
};

// cochain algebra of the triangulated genus-g surface:
// e1, e2 | alpha_j, beta_j, theta_k | gamma_k, unit e1 + e2
DGAlgebraPresentation build_C(int g);
// the smaller model: e, eps1 | zeta1, phi_j, psi_j, xi_l | nu, nu_l, unit e
DGAlgebraPresentation build_Cprime(int g);
// C' with the contractible pairs eps_k -> zeta_k (k = 2..2g+1) adjoined
DGAlgebraPresentation build_Chat(int g);
// the cohomology ring: e | phibar_j, psibar_j | nu, zero differential
DGAlgebraPresentation build_H(int g);

DGMorphism build_Phi(int g);        // C' -> C
DGMorphism build_inclusion(int g);  // C' -> Chat
DGMorphism build_PhiHat(int g);     // H -> Chat

// d^2 = 0, Leibniz, associativity on all triples, unit law, degree fit
SurfaceReport verify_dg_algebra(const DGAlgebraPresentation& P);
// chain map, multiplicative on all pairs, unital, degree-preserving
SurfaceReport verify_dg_morphism(const DGMorphism& m);

// cohomology dimensions for degrees 0, 1, 2
std::vector<long> cohomology(const DGAlgebraPresentation& P);

bool is_quasi_iso(const DGMorphism& m);

}  // namespace cedga
