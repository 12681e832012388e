#pragma once
// Finite-dimensional strictly unital A-infinity algebras, the dualization of
// a twisted free DGA, and checkers for the defining relations.
//
// Convention (documented in docs/conventions.md): the stored operations are
// the *shifted* products.  Dualizing a differential word g_1...g_d with
// coefficient c contributes c (verbatim, no extra sign) to mu^d(g_1,...,g_d),
// with the leftmost word letter as the first argument; gradings shift
// uniformly, |x|_B = |x|_L + 1.  The defining relation checked here is, for
// every arity n and tuple (u_1,...,u_n),
//
//     sum_{s,t} (-1)^{||u_1|| + ... + ||u_t||}
//         mu^{n-s+1}(u_1,...,u_t, mu^s(u_{t+1},...,u_{t+s}), ...,u_n) = 0
//
// with the reduced degree ||u|| = |u| - 1.  Over F_2 all signs collapse.

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cedga/dga.hpp"
#include "cedga/scalar.hpp"

namespace cedga {

using Idx = int;
// sorted by index, coefficients nonzero
using SparseVec = std::vector<std::pair<Idx, Scalar>>;

void sv_add(SparseVec& acc, Idx i, const Scalar& c);
void sv_add(SparseVec& acc, const SparseVec& v, const Scalar& scale);
bool sv_is_zero(const SparseVec& v);

struct BasisElement {
    std::string name;
    int degree;
};

class AInfinityAlgebra {
public:
    AInfinityAlgebra(const Field& f, std::vector<BasisElement> basis, Idx unit,
                     int max_arity);

    const Field& field() const { return field_; }
    const std::vector<BasisElement>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    Idx unit() const { return unit_; }
    int max_arity() const { return max_arity_; }
    int degree(Idx i) const { return basis_[static_cast<size_t>(i)].degree; }
    const std::string& name(Idx i) const {
        return basis_[static_cast<size_t>(i)].name;
    }
    Idx index_of(const std::string& name) const;  // throws if absent

    static uint64_t key(std::span<const Idx> tuple);

    // nullptr = zero (absent entry)
    const SparseVec* product(std::span<const Idx> tuple) const;
    // mu^d applied with one vector-valued slot, linear in that slot
    SparseVec product_linear(std::span<const Idx> prefix, const SparseVec& slot,
                             std::span<const Idx> suffix) const;

    // Accumulate c * target into mu^d(tuple); asserts degree-(2-d) homogeneity.
    void add_to_product(std::span<const Idx> tuple, Idx target, const Scalar& c);

    const std::unordered_map<uint64_t, SparseVec>& entries(int arity) const;

    // Installs mu^2 unit products and checks nothing else touches the unit.
    void install_strict_unit();

private:
    Field field_;
    std::vector<BasisElement> basis_;
    Idx unit_;
    int max_arity_;
    std::vector<std::unordered_map<uint64_t, SparseVec>> mu_;  // [arity]
};

// Basis = {unit} + generator duals, products read off the differential.
// Requires a twisted (constant-free) differential.
AInfinityAlgebra dualize(const FreeDGA& twisted);

struct AinftyReport {
    long tuples_checked = 0;
    long violations = 0;
    std::vector<std::string> examples;  // at most a handful
    bool pass = true;
};

// Exhaustive over basis^n for n in [min_arity, max_arity] when samples == 0;
// otherwise `samples` uniform tuples per arity from the seeded generator.
AinftyReport check_ainfty_relations(const AInfinityAlgebra& A, int min_arity,
                                    int max_arity, long samples = 0,
                                    uint64_t seed = 0);

AinftyReport check_strict_unitality(const AInfinityAlgebra& A);

}  // namespace cedga
