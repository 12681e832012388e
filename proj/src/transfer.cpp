#include "cedga/transfer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace cedga {

namespace {

SparseVec apply_t1(const Contraction& c, const SparseVec& v) {
    SparseVec out;
    for (const auto& [b, coeff] : v) {
        auto it = c.t1.find(b);
        if (it != c.t1.end()) sv_add(out, it->second, coeff);
    }
    return out;
}

SparseVec project_a(const Contraction& c, const SparseVec& v) {
    SparseVec out;
    for (const auto& [b, coeff] : v)
        if (c.in_a[static_cast<size_t>(b)]) out.push_back({b, coeff});
    return out;
}

std::string describe(const AInfinityAlgebra& B, const SparseVec& v) {
    if (v.empty()) return "0";
    std::string s;
    for (const auto& [b, coeff] : v) {
        if (!s.empty()) s += " + ";
        s += coeff.str() + "*" + B.name(b);
    }
    return s;
}

}  // namespace

ContractionReport verify_contraction(const AInfinityAlgebra& B,
                                     const Contraction& c) {
    ContractionReport rep;
    if (c.in_a.size() != static_cast<size_t>(B.dim()))
        throw std::invalid_argument("retained-basis flags sized wrong");
    if (!c.in_a[static_cast<size_t>(B.unit())])
        throw std::invalid_argument("retained part must contain the unit");
    const Scalar one = Scalar::one(B.field());

    rep.homotopy_ok = rep.t_zero_on_a = rep.side_tt = rep.side_gt =
        rep.side_tf = true;
    auto defect = [&](bool& flag, const std::string& msg) {
        flag = false;
        if (rep.defects.size() < 8) rep.defects.push_back(msg);
    };

    for (Idx b = 0; b < B.dim(); ++b) {
        const bool retained = c.in_a[static_cast<size_t>(b)];
        SparseVec vb{{b, one}};

        // mu^1 T(b) + T mu^1(b) - (F G(b) - b); F G(b) is b when retained,
        // zero otherwise, so the residual is lhs when retained and lhs + b
        // when not.
        const Idx single[1] = {b};
        SparseVec lhs = B.product_linear({}, apply_t1(c, vb), {});
        if (const SparseVec* d1 = B.product(single))
            sv_add(lhs, apply_t1(c, *d1), one);
        if (!retained) sv_add(lhs, vb, one);
        if (!sv_is_zero(lhs))
            defect(rep.homotopy_ok, "homotopy identity fails at " + B.name(b) +
                                        ": " + describe(B, lhs));

        SparseVec tb = apply_t1(c, vb);
        if (retained && !sv_is_zero(tb))
            defect(rep.t_zero_on_a,
                   "homotopy nonzero on retained " + B.name(b));
        if (!sv_is_zero(apply_t1(c, tb)))
            defect(rep.side_tt, "T T nonzero at " + B.name(b));
        if (!sv_is_zero(project_a(c, tb)))
            defect(rep.side_gt, "G T nonzero at " + B.name(b));
    }
    // T F = 0 coincides with T vanishing on the retained part
    rep.side_tf = rep.t_zero_on_a;
    rep.pass = rep.homotopy_ok && rep.t_zero_on_a && rep.side_tt &&
               rep.side_gt && rep.side_tf;
    return rep;
}

const SparseVec* MorphismCandidate::component(
    std::span<const Idx> tuple) const {
    const size_t d = tuple.size();
    if (d == 0 || d >= f.size()) return nullptr;
    auto it = f[d].find(AInfinityAlgebra::key(tuple));
    return it == f[d].end() ? nullptr : &it->second;
}

namespace {

// all ordered compositions of d into r parts, 2 <= r <= max_parts
void compositions(int d, int max_parts, std::vector<int>& parts,
                  const std::function<void(const std::vector<int>&)>& emit) {
    if (d == 0) {
        if (parts.size() >= 2) emit(parts);
        return;
    }
    if (static_cast<int>(parts.size()) >= max_parts) return;
    for (int first = 1; first <= d; ++first) {
        parts.push_back(first);
        compositions(d - first, max_parts, parts, emit);
        parts.pop_back();
    }
}

}  // namespace

TransferResult transfer_products(const AInfinityAlgebra& B,
                                 const Contraction& c, int max_arity) {
    std::vector<Idx> b_to_a, a_to_b;
    b_to_a.assign(static_cast<size_t>(B.dim()), -1);
    std::vector<BasisElement> abasis;
    for (Idx b = 0; b < B.dim(); ++b)
        if (c.in_a[static_cast<size_t>(b)]) {
            b_to_a[static_cast<size_t>(b)] = static_cast<Idx>(abasis.size());
            a_to_b.push_back(b);
            abasis.push_back(B.basis()[static_cast<size_t>(b)]);
        }
    const Idx a_unit = b_to_a[static_cast<size_t>(B.unit())];

    AInfinityAlgebra A(B.field(), std::move(abasis), a_unit, max_arity);
    std::vector<std::unordered_map<uint64_t, SparseVec>> f(
        static_cast<size_t>(max_arity) + 1);

    // F^1 = inclusion (total, including the unit)
    for (Idx a = 0; a < A.dim(); ++a) {
        const Idx t[1] = {a};
        f[1][AInfinityAlgebra::key(t)] = {
            {a_to_b[static_cast<size_t>(a)], Scalar::one(B.field())}};
    }

    // scratch for the multilinear expansion of one tree term
    std::vector<const SparseVec*> block_vals;
    std::vector<Idx> bargs;

    for (int d = 2; d <= max_arity; ++d) {
        std::unordered_map<uint64_t, SparseVec> p_d;

        std::vector<int> parts;
        compositions(d, std::min(d, B.max_arity()), parts,
                     [&](const std::vector<int>& comp) {
            const int r = static_cast<int>(comp.size());
            // skip compositions with an identically-zero F component
            for (int di : comp)
                if (di > 1 && f[static_cast<size_t>(di)].empty()) return;

            // iterate the cartesian product of F^{d_i} entries
            std::vector<Idx> tuple;
            block_vals.assign(static_cast<size_t>(r), nullptr);
            std::function<void(int)> pick_blocks = [&](int slot) {
                if (slot == r) {
                    // expand mu_B^r over the supports of the block values
                    bargs.assign(static_cast<size_t>(r), 0);
                    std::function<void(int, Scalar)> expand =
                        [&](int j, Scalar coeff) {
                        if (j == r) {
                            if (const SparseVec* v = B.product(bargs))
                                sv_add(p_d[AInfinityAlgebra::key(tuple)], *v,
                                       coeff);
                            return;
                        }
                        for (const auto& [b, cb] : *block_vals[
                                 static_cast<size_t>(j)]) {
                            bargs[static_cast<size_t>(j)] = b;
                            expand(j + 1, coeff * cb);
                        }
                    };
                    expand(0, Scalar::one(B.field()));
                    return;
                }
                const int di = comp[static_cast<size_t>(slot)];
                for (const auto& [key, val] : f[static_cast<size_t>(di)]) {
                    // unpack the A-tuple encoded in the key
                    uint64_t kk = key;
                    Idx unpacked[8];
                    for (int i = di - 1; i >= 0; --i) {
                        unpacked[i] = static_cast<Idx>((kk & 0xff) - 1);
                        kk >>= 8;
                    }
                    bool has_unit = false;
                    for (int i = 0; i < di; ++i)
                        has_unit = has_unit || unpacked[i] == a_unit;
                    if (has_unit) continue;  // unit handled by strictness
                    const size_t base = tuple.size();
                    for (int i = 0; i < di; ++i) tuple.push_back(unpacked[i]);
                    block_vals[static_cast<size_t>(slot)] = &val;
                    pick_blocks(slot + 1);
                    tuple.resize(base);
                }
            };
            pick_blocks(0);
        });

        // split p^d into the transferred product and the next F component
        std::vector<Idx> atuple(static_cast<size_t>(d));
        for (auto& [key, val] : p_d) {
            if (val.empty()) continue;
            uint64_t kk = key;
            for (int i = d - 1; i >= 0; --i) {
                atuple[static_cast<size_t>(i)] = static_cast<Idx>((kk & 0xff) - 1);
                kk >>= 8;
            }
            for (const auto& [b, coeff] : project_a(c, val))
                A.add_to_product(atuple, b_to_a[static_cast<size_t>(b)], coeff);
            SparseVec fd = apply_t1(c, val);
            if (!fd.empty()) f[static_cast<size_t>(d)][key] = std::move(fd);
        }
    }

    A.install_strict_unit();
    return TransferResult{std::move(A), MorphismCandidate{std::move(f)},
                          std::move(a_to_b), std::move(b_to_a)};
}

}  // namespace cedga
