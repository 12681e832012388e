#include "cedga/ainfty.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cedga {

void sv_add(SparseVec& acc, Idx i, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(
        acc.begin(), acc.end(), i,
        [](const std::pair<Idx, Scalar>& e, Idx j) { return e.first < j; });
    if (it != acc.end() && it->first == i) {
        it->second = it->second + c;
        if (it->second.is_zero()) acc.erase(it);
    } else {
        acc.insert(it, {i, c});
    }
}

void sv_add(SparseVec& acc, const SparseVec& v, const Scalar& scale) {
    if (scale.is_zero()) return;
    for (const auto& [i, c] : v) sv_add(acc, i, c * scale);
}

bool sv_is_zero(const SparseVec& v) { return v.empty(); }

AInfinityAlgebra::AInfinityAlgebra(const Field& f,
                                   std::vector<BasisElement> basis, Idx unit,
                                   int max_arity)
    : field_(f),
      basis_(std::move(basis)),
      unit_(unit),
      max_arity_(max_arity),
      mu_(static_cast<size_t>(max_arity) + 1) {
    if (basis_.size() >= 255)
        throw std::invalid_argument("basis too large for packed tuple keys");
    if (max_arity_ < 2 || max_arity_ > 8)
        throw std::invalid_argument("max arity out of range");
    if (unit_ < 0 || unit_ >= dim())
        throw std::invalid_argument("unit index out of range");
}

Idx AInfinityAlgebra::index_of(const std::string& name) const {
    for (Idx i = 0; i < dim(); ++i)
        if (basis_[static_cast<size_t>(i)].name == name) return i;
    throw std::out_of_range("no basis element named " + name);
}

uint64_t AInfinityAlgebra::key(std::span<const Idx> tuple) {
    uint64_t k = 0;
    for (Idx i : tuple) k = (k << 8) | static_cast<uint64_t>(i + 1);
    return k;
}

const SparseVec* AInfinityAlgebra::product(std::span<const Idx> tuple) const {
    const int d = static_cast<int>(tuple.size());
    if (d < 1 || d > max_arity_) return nullptr;
    const auto& table = mu_[static_cast<size_t>(d)];
    auto it = table.find(key(tuple));
    return it == table.end() ? nullptr : &it->second;
}

SparseVec AInfinityAlgebra::product_linear(std::span<const Idx> prefix,
                                           const SparseVec& slot,
                                           std::span<const Idx> suffix) const {
    SparseVec out;
    std::vector<Idx> args(prefix.size() + 1 + suffix.size());
    std::copy(prefix.begin(), prefix.end(), args.begin());
    std::copy(suffix.begin(), suffix.end(), args.begin() + prefix.size() + 1);
    for (const auto& [i, c] : slot) {
        args[prefix.size()] = i;
        if (const SparseVec* v = product(args)) sv_add(out, *v, c);
    }
    return out;
}

void AInfinityAlgebra::add_to_product(std::span<const Idx> tuple, Idx target,
                                      const Scalar& c) {
    const int d = static_cast<int>(tuple.size());
    if (d < 1 || d > max_arity_)
        throw std::invalid_argument("product arity out of range");
    int deg_sum = 0;
    for (Idx i : tuple) deg_sum += degree(i);
    if (degree(target) != deg_sum + 2 - d)
        throw std::logic_error("product entry breaks the grading: mu^" +
                               std::to_string(d) + " target " + name(target));
    if (c.is_zero()) return;
    SparseVec& entry = mu_[static_cast<size_t>(d)][key(tuple)];
    sv_add(entry, target, c);
    if (entry.empty()) mu_[static_cast<size_t>(d)].erase(key(tuple));
}

const std::unordered_map<uint64_t, SparseVec>& AInfinityAlgebra::entries(
    int arity) const {
    static const std::unordered_map<uint64_t, SparseVec> kEmpty;
    if (arity < 1 || arity > max_arity_) return kEmpty;
    return mu_[static_cast<size_t>(arity)];
}

void AInfinityAlgebra::install_strict_unit() {
    const Scalar one = Scalar::one(field_);
    for (Idx x = 0; x < dim(); ++x) {
        const Idx left[2] = {unit_, x};
        const Idx right[2] = {x, unit_};
        if (product(left) || product(right))
            throw std::logic_error("unit products already present");
        add_to_product(left, x, one);
        const Scalar sgn(field_, degree(x) % 2 ? -1 : 1);
        // (x, e) and (e, x) coincide at x = e; accumulate, do not overwrite
        add_to_product(right, x, x == unit_ ? Scalar::zero(field_) : sgn);
    }
}

AInfinityAlgebra dualize(const FreeDGA& twisted) {
    const auto& gens = twisted.gens.all();
    std::vector<BasisElement> basis;
    basis.push_back({"1", 0});
    std::vector<Idx> dual_of;  // generator id -> basis index
    for (const auto& g : gens) {
        if (static_cast<size_t>(g.id) >= dual_of.size())
            dual_of.resize(static_cast<size_t>(g.id) + 1, -1);
        dual_of[static_cast<size_t>(g.id)] = static_cast<Idx>(basis.size());
        basis.push_back({g.name, g.degree + 1});
    }

    int max_arity = 2;
    for (const auto& g : gens) {
        const NCPoly dg = twisted.d_of(g.id);
        for (const auto& [word, coeff] : dg.terms())
            max_arity = std::max(max_arity, static_cast<int>(word.size()));
    }

    AInfinityAlgebra B(twisted.field, std::move(basis), 0, max_arity);
    std::vector<Idx> tuple;
    for (const auto& g : gens) {
        const Idx target = dual_of[static_cast<size_t>(g.id)];
        const NCPoly dg = twisted.d_of(g.id);
        for (const auto& [word, coeff] : dg.terms()) {
            if (word.empty())
                throw std::invalid_argument(
                    "differential has a constant term at " + g.name +
                    "; twist by an augmentation first");
            tuple.clear();
            for (int id : word) tuple.push_back(dual_of[static_cast<size_t>(id)]);
            B.add_to_product(tuple, target, coeff);
        }
    }
    B.install_strict_unit();
    return B;
}

namespace {

std::string tuple_str(const AInfinityAlgebra& A, std::span<const Idx> t) {
    std::string s = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += A.name(t[i]);
    }
    return s + ")";
}

std::string vec_str(const AInfinityAlgebra& A, const SparseVec& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v) {
        if (!first) os << " + ";
        os << c.str() << "*" << A.name(i);
        first = false;
    }
    return os.str();
}

void record(AinftyReport& rep, std::string msg) {
    rep.violations++;
    rep.pass = false;
    if (rep.examples.size() < 5) rep.examples.push_back(std::move(msg));
}

// residual of the defining relation on one tuple
SparseVec relation_value(const AInfinityAlgebra& A, std::span<const Idx> u) {
    const int n = static_cast<int>(u.size());
    const bool f2 = A.field().characteristic() == 2;
    SparseVec total;
    int reduced_prefix = 0;  // ||u_1|| + ... + ||u_t|| mod 2
    for (int t = 0; t <= n - 1; ++t) {
        if (t > 0) reduced_prefix += A.degree(u[t - 1]) - 1;
        for (int s = 1; s + t <= n; ++s) {
            const SparseVec* inner = A.product(u.subspan(t, s));
            if (!inner) continue;
            SparseVec term = A.product_linear(u.subspan(0, t), *inner,
                                              u.subspan(t + s));
            if (term.empty()) continue;
            const bool negate = !f2 && (reduced_prefix % 2 != 0);
            sv_add(total, term, Scalar(A.field(), negate ? -1 : 1));
        }
    }
    return total;
}

}  // namespace

AinftyReport check_ainfty_relations(const AInfinityAlgebra& A, int min_arity,
                                    int max_arity, long samples,
                                    uint64_t seed) {
    AinftyReport rep;
    const int dim = A.dim();
    std::vector<Idx> u;
    auto check_one = [&](std::span<const Idx> tuple, int n) {
        rep.tuples_checked++;
        SparseVec r = relation_value(A, tuple);
        if (!sv_is_zero(r))
            record(rep, "relation fails at arity " + std::to_string(n) +
                            " on " + tuple_str(A, tuple) + ": " +
                            vec_str(A, r));
    };
    for (int n = std::max(1, min_arity); n <= max_arity; ++n) {
        u.assign(static_cast<size_t>(n), 0);
        if (samples == 0) {
            // odometer over basis^n
            while (true) {
                check_one(u, n);
                int pos = n - 1;
                while (pos >= 0 && ++u[static_cast<size_t>(pos)] == dim)
                    u[static_cast<size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
        } else {
            std::mt19937_64 rng(seed + static_cast<uint64_t>(n));
            std::uniform_int_distribution<Idx> pick(0, dim - 1);
            for (long k = 0; k < samples; ++k) {
                for (auto& x : u) x = pick(rng);
                check_one(u, n);
            }
        }
    }
    return rep;
}

AinftyReport check_strict_unitality(const AInfinityAlgebra& A) {
    AinftyReport rep;
    const Idx e = A.unit();
    const Scalar one = Scalar::one(A.field());
    if (A.degree(e) != 0) record(rep, "unit is not in degree 0");
    {
        const Idx t[1] = {e};
        rep.tuples_checked++;
        if (const SparseVec* v = A.product(t); v && !v->empty())
            record(rep, "mu^1(1) = " + vec_str(A, *v));
    }
    for (Idx x = 0; x < A.dim(); ++x) {
        const Idx left[2] = {e, x};
        const Idx right[2] = {x, e};
        rep.tuples_checked += 2;
        SparseVec want_left{{x, one}};
        SparseVec want_right;
        if (x != e)
            want_right.push_back({x, Scalar(A.field(), A.degree(x) % 2 ? -1 : 1)});
        else
            want_right = want_left;  // same key as (e, x)
        const SparseVec* l = A.product(left);
        const SparseVec* r = A.product(right);
        if (!l || *l != want_left)
            record(rep, "mu^2(1," + A.name(x) + ") = " +
                            (l ? vec_str(A, *l) : "0"));
        if (!r || *r != want_right)
            record(rep, "mu^2(" + A.name(x) + ",1) = " +
                            (r ? vec_str(A, *r) : "0"));
    }
    // no stored product of arity != 2 may involve the unit
    std::vector<Idx> t;
    for (int d = 1; d <= A.max_arity(); ++d) {
        if (d == 2) continue;
        for (const auto& [k, v] : A.entries(d)) {
            bool has_unit = false;
            uint64_t kk = k;
            t.assign(static_cast<size_t>(d), 0);
            for (int i = d - 1; i >= 0; --i) {
                t[static_cast<size_t>(i)] = static_cast<Idx>((kk & 0xff) - 1);
                kk >>= 8;
            }
            for (Idx x : t) has_unit = has_unit || x == e;
            rep.tuples_checked++;
            if (has_unit && !v.empty())
                record(rep, "mu^" + std::to_string(d) + tuple_str(A, t) +
                                " = " + vec_str(A, v) + " involves the unit");
        }
    }
    return rep;
}

}  // namespace cedga
