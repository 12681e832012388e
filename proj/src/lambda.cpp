#include "cedga/lambda.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cedga {

void KnotParams::validate() const {
    if (p < 2 || q < 2 || r < 2 || s < 2)
        throw std::invalid_argument("knot parameters must all be at least 2");
    const int par = ((p % 2) + 2) % 2;
    if (q % 2 != par || r % 2 == par || s % 2 == par)
        throw std::invalid_argument(
            "knot parameters must satisfy p = q = r+1 = s+1 mod 2");
}

ClassicalInvariants classical_invariants(const KnotParams& params) {
    params.validate();
    return {0, 5, 3};
}

namespace {

constexpr const char* kLetters = "xyzw";

std::string letter_name(int fam, int i) {
    return std::string(1, kLetters[fam]) + std::to_string(i);
}

std::string chord_name(int fam, int i) {
    return "a" + std::string(1, kLetters[fam]) + std::to_string(i);
}

std::array<int, 4> tops_of(const KnotParams& kp) {
    return {kp.p, kp.q, kp.r, kp.s};
}

}  // namespace

FreeDGA build_ce_dga(const KnotParams& kp, const Field& field) {
    kp.validate();
    FreeDGA L{field, GenSet{}, Derivation{}};
    const auto tops = tops_of(kp);

    std::array<std::vector<int>, 4> let, chord;
    for (int fam = 0; fam < 4; ++fam)
        for (int i = 0; i <= tops[static_cast<size_t>(fam)]; ++i)
            let[static_cast<size_t>(fam)].push_back(
                L.gens.add(letter_name(fam, i), 0));
    for (int fam = 0; fam < 4; ++fam)
        for (int i = 0; i <= tops[static_cast<size_t>(fam)]; ++i)
            chord[static_cast<size_t>(fam)].push_back(
                L.gens.add(chord_name(fam, i), 1));
    const int a0 = L.gens.add("a0", 1);
    const int bdeg[6] = {kp.p - kp.r + 1, kp.q - kp.r + 1, kp.r - kp.s,
                         -(kp.p - kp.r + 1), -(kp.q - kp.r + 1), -(kp.r - kp.s)};
    int b[6];
    for (int j = 0; j < 6; ++j)
        b[j] = L.gens.add("b" + std::to_string(j + 1), bdeg[j]);

    const Scalar one = Scalar::one(field);
    const Scalar minus = Scalar(field, -1);

    {
        // d a0 = 1 - w_s z_r y_q x_p
        NCPoly img = NCPoly::unit(field);
        img.add_term({let[3][static_cast<size_t>(kp.s)],
                      let[2][static_cast<size_t>(kp.r)],
                      let[1][static_cast<size_t>(kp.q)],
                      let[0][static_cast<size_t>(kp.p)]},
                     minus);
        L.diff.images.insert_or_assign(a0, std::move(img));
    }
    // d a*_0 = 1 + *_0 + (b-quadratic part); extra terms for the z family
    const std::array<std::pair<int, int>, 4> pair_for = {{
        {b[0], b[3]},  // x: b1 b4
        {b[1], b[4]},  // y: b2 b5
        {b[3], b[0]},  // z: b4 b1 (plus more below)
        {b[2], b[5]},  // w: b3 b6
    }};
    for (int fam = 0; fam < 4; ++fam) {
        NCPoly img = NCPoly::unit(field);
        img.add_term({let[static_cast<size_t>(fam)][0]}, one);
        const auto [u, v] = pair_for[static_cast<size_t>(fam)];
        img.add_term({u, v}, one);
        if (fam == 2) {
            img.add_term({b[4], b[1]}, one);                       // b5 b2
            img.add_term({let[2][0], b[5], b[2]}, one);            // z0 b6 b3
            img.add_term({b[3], b[0], b[4], b[1]}, one);           // b4 b1 b5 b2
        }
        L.diff.images.insert_or_assign(chord[static_cast<size_t>(fam)][0],
                                       std::move(img));
    }
    // d a*_i = 1 - *_{i-1} *_i for i >= 1
    for (int fam = 0; fam < 4; ++fam)
        for (int i = 1; i <= tops[static_cast<size_t>(fam)]; ++i) {
            NCPoly img = NCPoly::unit(field);
            img.add_term({let[static_cast<size_t>(fam)][static_cast<size_t>(i - 1)],
                          let[static_cast<size_t>(fam)][static_cast<size_t>(i)]},
                         minus);
            L.diff.images.insert_or_assign(
                chord[static_cast<size_t>(fam)][static_cast<size_t>(i)],
                std::move(img));
        }
    // letters and b's have zero differential (absent images)
    return L;
}

Augmentation canonical_augmentation(const KnotParams& kp, const FreeDGA& d) {
    Augmentation eps;
    const auto tops = tops_of(kp);
    for (int fam = 0; fam < 4; ++fam)
        for (int i = 0; i <= tops[static_cast<size_t>(fam)]; ++i)
            eps.values.insert_or_assign(d.gens.require(letter_name(fam, i)),
                                        Scalar(d.field, -1));
    return eps;
}

InvertibleMap a0_transformation(const KnotParams& kp, const FreeDGA& d) {
    const Field& f = d.field;
    const auto tops = tops_of(kp);
    NCPoly S = NCPoly::zero(f);
    for (int fam = 0; fam < 4; ++fam) {
        const long outer = fam < 2 ? 1 : -1;
        for (int i = 0; i <= tops[static_cast<size_t>(fam)]; ++i)
            S.add_term({d.gens.require(chord_name(fam, i))},
                       Scalar(f, outer * (i % 2 ? -1 : 1)));
    }
    const int a0 = d.gens.require("a0");
    const Scalar sgn_p(f, kp.p % 2 ? -1 : 1);
    InvertibleMap t;
    t.map.images.insert_or_assign(a0, NCPoly::generator(f, a0) - S.scaled(sgn_p));
    t.inverse.images.insert_or_assign(a0,
                                      NCPoly::generator(f, a0) + S.scaled(sgn_p));
    return t;
}

FreeDGA normalized_dga(const KnotParams& kp, const Field& field) {
    FreeDGA L = build_ce_dga(kp, field);
    Augmentation eps = canonical_augmentation(kp, L);
    FreeDGA twisted = twist(L, eps);
    InvertibleMap t = a0_transformation(kp, twisted);
    return change_generators(twisted, t.inverse, t.map);
}

Contraction standard_contraction(const KnotParams& kp,
                                 const AInfinityAlgebra& B) {
    Contraction c;
    c.in_a.assign(static_cast<size_t>(B.dim()), 0);
    c.in_a[static_cast<size_t>(B.unit())] = 1;
    c.in_a[static_cast<size_t>(B.index_of("a0"))] = 1;
    for (int j = 1; j <= 6; ++j)
        c.in_a[static_cast<size_t>(B.index_of("b" + std::to_string(j)))] = 1;
    const auto tops = tops_of(kp);
    for (int fam = 0; fam < 4; ++fam) {
        const int top = tops[static_cast<size_t>(fam)];
        for (int i = 0; i <= top; ++i) {
            SparseVec img;
            for (int k = i; k <= top; ++k)
                sv_add(img, B.index_of(letter_name(fam, k)),
                       Scalar(B.field(), (k - i) % 2 ? 1 : -1));
            c.t1[B.index_of(chord_name(fam, i))] = std::move(img);
        }
    }
    return c;
}

std::string SurfaceRing::name(int e) const {
    if (e == kOne) return "1";
    if (e == kTop) return "nu";
    return (e % 2 ? "x" : "y") + std::to_string((e + 1) / 2);
}

std::vector<std::pair<int, Scalar>> SurfaceRing::product(int a, int b) const {
    const Scalar one = Scalar::one(field);
    if (a == kOne) return {{b, one}};
    if (b == kOne) return {{a, one}};
    if (degree(a) == 1 && degree(b) == 1) {
        if (a % 2 == 1 && b == a + 1) return {{kTop, one}};
        if (a % 2 == 0 && b == a - 1) return {{kTop, Scalar(field, -1)}};
    }
    return {};
}

namespace {

using HVec = std::vector<Scalar>;

HVec h_zero(const Field& f) { return HVec(8, Scalar::zero(f)); }

void h_axpy(HVec& acc, const Scalar& c, const HVec& v) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + c * v[i];
}

bool h_is_zero(const HVec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

HVec h_cup(const SurfaceRing& H, const HVec& u, const HVec& v) {
    HVec out = h_zero(H.field);
    for (int a = 0; a < 8; ++a) {
        if (u[static_cast<size_t>(a)].is_zero()) continue;
        for (int b = 0; b < 8; ++b) {
            if (v[static_cast<size_t>(b)].is_zero()) continue;
            for (const auto& [e, c] : H.product(a, b))
                out[static_cast<size_t>(e)] =
                    out[static_cast<size_t>(e)] +
                    u[static_cast<size_t>(a)] * v[static_cast<size_t>(b)] * c;
        }
    }
    return out;
}

const std::array<std::array<int, 4>, 10> kTenTuples = {{{1, 2, 5, 4},
                                                        {2, 5, 4, 1},
                                                        {5, 4, 1, 2},
                                                        {4, 1, 2, 5},
                                                        {1, 5, 2, 4},
                                                        {5, 2, 4, 1},
                                                        {2, 4, 1, 5},
                                                        {4, 1, 5, 2},
                                                        {2, 5, 2, 5},
                                                        {5, 2, 5, 2}}};

// --- the symbolic side -------------------------------------------------
// A symbol is one multilinear component F^arity applied to a concrete
// argument tuple; its target degree in H is determined by the grading.
struct Sym {
    int arity;
    std::array<Idx, 3> args;  // unused slots = -1

    bool operator<(const Sym& o) const {
        if (arity != o.arity) return arity < o.arity;
        return args < o.args;
    }
    bool operator==(const Sym& o) const {
        return arity == o.arity && args == o.args;
    }
};

int sym_hdeg(const AInfinityAlgebra& A, const Sym& s) {
    int d = 1 - s.arity;
    for (int i = 0; i < s.arity; ++i)
        d += A.degree(s.args[static_cast<size_t>(i)]);
    return d;
}

std::string sym_str(const AInfinityAlgebra& A, const Sym& s) {
    std::string out = "F" + std::to_string(s.arity) + "(";
    for (int i = 0; i < s.arity; ++i) {
        if (i) out += ",";
        out += A.name(s.args[static_cast<size_t>(i)]);
    }
    return out + ")";
}

struct SymbolicSum {
    const AInfinityAlgebra& A;
    std::map<std::pair<Sym, Sym>, Scalar> cup_terms;
    std::map<Sym, Scalar> bare_terms;

    explicit SymbolicSum(const AInfinityAlgebra& a) : A(a) {}

    void add_cup(Sym u, Sym v, Scalar c) {
        const int du = sym_hdeg(A, u), dv = sym_hdeg(A, v);
        if (du < 0 || du > 2 || dv < 0 || dv > 2 || du + dv > 2) return;
        // graded-commutative rewriting toward canonical factor order
        if (v < u) {
            std::swap(u, v);
            if (du % 2 && dv % 2) c = -c;
        }
        // squares of odd-degree classes vanish (antisymmetry away from
        // char 2; the exhaustively verified H^1 property in char 2)
        if (u == v && du % 2) return;
        auto [it, fresh] = cup_terms.try_emplace({u, v}, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) cup_terms.erase(it);
        }
    }

    void add_bare(Sym u, Scalar c) {
        const int du = sym_hdeg(A, u);
        if (du < 0 || du > 2) return;
        auto [it, fresh] = bare_terms.try_emplace(u, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) bare_terms.erase(it);
        }
    }

    std::vector<std::string> residual() const {
        std::vector<std::string> out;
        for (const auto& [sym, c] : bare_terms)
            out.push_back(c.str() + "*" + sym_str(A, sym));
        for (const auto& [pr, c] : cup_terms)
            out.push_back(c.str() + "*" + sym_str(A, pr.first) + " u " +
                          sym_str(A, pr.second));
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

FunctorEquationValue functor_equation_eval(const AInfinityAlgebra& A,
                                           const SurfaceRing& H,
                                           const ObstructionCandidate& F,
                                           const std::array<int, 4>& tuple) {
    const Field& fld = H.field;
    Idx t[4];
    for (int m = 0; m < 4; ++m)
        t[m] = A.index_of("b" + std::to_string(tuple[static_cast<size_t>(m)]));

    auto get1 = [&](Idx g) {
        auto it = F.f1.find(g);
        return it == F.f1.end() ? h_zero(fld) : it->second;
    };
    auto get2 = [&](Idx u, Idx v) {
        const Idx k[2] = {u, v};
        auto it = F.f2.find(AInfinityAlgebra::key(k));
        return it == F.f2.end() ? h_zero(fld) : it->second;
    };
    auto get3 = [&](Idx u, Idx v, Idx w) {
        const Idx k[3] = {u, v, w};
        auto it = F.f3.find(AInfinityAlgebra::key(k));
        return it == F.f3.end() ? h_zero(fld) : it->second;
    };

    FunctorEquationValue out{h_zero(fld), h_zero(fld)};
    if (const SparseVec* m4 = A.product(t))
        for (const auto& [g, c] : *m4) h_axpy(out.lhs, c, get1(g));

    h_axpy(out.rhs, Scalar::one(fld), h_cup(H, get3(t[0], t[1], t[2]), get1(t[3])));
    h_axpy(out.rhs, Scalar::one(fld), h_cup(H, get1(t[0]), get3(t[1], t[2], t[3])));
    h_axpy(out.rhs, Scalar::one(fld), h_cup(H, get2(t[0], t[1]), get2(t[2], t[3])));
    for (int slot = 0; slot < 3; ++slot) {
        const Idx pair[2] = {t[slot], t[slot + 1]};
        const SparseVec* m2 = A.product(pair);
        if (!m2) continue;
        for (const auto& [g, c] : *m2) {
            Idx tri[3];
            int w = 0;
            for (int m = 0; m < 4; ++m) {
                if (m == slot) {
                    tri[w++] = g;
                    ++m;  // the inserted product consumes two arguments
                } else {
                    tri[w++] = t[m];
                }
            }
            h_axpy(out.rhs, c, get3(tri[0], tri[1], tri[2]));
        }
    }
    return out;
}

ObstructionReport obstruction_check(const KnotParams& kp, const Field& field,
                                    long samples, uint64_t seed) {
    if (samples <= 0)
        throw std::invalid_argument("sample count must be positive");
    kp.validate();

    AInfinityAlgebra B = dualize(normalized_dga(kp, field));
    Contraction con = standard_contraction(kp, B);
    TransferResult tr = transfer_products(B, con, 4);
    const AInfinityAlgebra& A = tr.algebra;
    const SurfaceRing H(field);
    ObstructionReport rep(field);

    const Idx a0 = A.index_of("a0");
    Idx b[7];
    for (int j = 1; j <= 6; ++j) b[j] = A.index_of("b" + std::to_string(j));

    // (a) formal left-hand side: coefficient of a0 in the summed mu^4
    SparseVec lhs_sum;
    for (const auto& tp : kTenTuples) {
        const Idx t[4] = {b[tp[0]], b[tp[1]], b[tp[2]], b[tp[3]]};
        if (const SparseVec* v = A.product(t))
            sv_add(lhs_sum, *v, Scalar::one(field));
    }
    for (const auto& [g, c] : lhs_sum)
        if (g == a0) rep.lhs_coefficient = c;

    // (c) symbolic cancellation engine over the summed right-hand sides
    SymbolicSum sum(A);
    for (const auto& tp : kTenTuples) {
        const Idx t[4] = {b[tp[0]], b[tp[1]], b[tp[2]], b[tp[3]]};
        const Scalar one = Scalar::one(field);
        sum.add_cup(Sym{3, {t[0], t[1], t[2]}}, Sym{1, {t[3], -1, -1}}, one);
        sum.add_cup(Sym{1, {t[0], -1, -1}}, Sym{3, {t[1], t[2], t[3]}}, one);
        sum.add_cup(Sym{2, {t[0], t[1], -1}}, Sym{2, {t[2], t[3], -1}}, one);
        for (int slot = 0; slot < 3; ++slot) {
            const Idx pair[2] = {t[slot], t[slot + 1]};
            const SparseVec* m2 = A.product(pair);
            if (!m2) continue;
            for (const auto& [g, c] : *m2) {
                std::array<Idx, 3> tri{};
                int w = 0;
                for (int m = 0; m < 4; ++m) {
                    if (m == slot) {
                        tri[static_cast<size_t>(w++)] = g;
                        ++m;
                    } else {
                        tri[static_cast<size_t>(w++)] = t[m];
                    }
                }
                sum.add_bare(Sym{3, tri}, c);
            }
        }
    }
    rep.symbolic_residual = sum.residual();

    // (b) random degree-correct candidates; the numeric sum of the ten
    // right-hand sides must equal the residual evaluated at the sample
    std::mt19937_64 rng(seed);
    auto rand_scalar = [&]() {
        if (field.is_rational())
            return Scalar(field, static_cast<long>(rng() % 19) - 9);
        return Scalar(field,
                      static_cast<long>(rng() % static_cast<uint64_t>(
                                                    field.characteristic())));
    };
    auto rand_h = [&](int deg) {
        HVec v = h_zero(field);
        if (deg == 0) v[0] = rand_scalar();
        if (deg == 1)
            for (int i = 1; i <= 6; ++i) v[static_cast<size_t>(i)] = rand_scalar();
        if (deg == 2) v[7] = rand_scalar();
        return v;
    };
    std::vector<Idx> apart{a0};
    for (int j = 1; j <= 6; ++j) apart.push_back(b[j]);

    rep.rhs_samples = samples;
    for (long n = 0; n < samples; ++n) {
        ObstructionCandidate F;
        for (Idx g : apart) F.f1[g] = rand_h(A.degree(g));
        for (int j = 1; j <= 6; ++j)
            for (int k = 1; k <= 6; ++k) {
                const Idx key[2] = {b[j], b[k]};
                F.f2[AInfinityAlgebra::key(key)] =
                    rand_h(A.degree(b[j]) + A.degree(b[k]) - 1);
            }
        for (Idx u : apart)
            for (Idx v : apart)
                for (Idx w : apart) {
                    const int deg =
                        A.degree(u) + A.degree(v) + A.degree(w) - 2;
                    if (deg < 0 || deg > 2) continue;
                    const Idx key[3] = {u, v, w};
                    F.f3[AInfinityAlgebra::key(key)] = rand_h(deg);
                }

        HVec total = h_zero(field);
        for (const auto& tp : kTenTuples)
            h_axpy(total, Scalar::one(field),
                   functor_equation_eval(A, H, F, tp).rhs);
        // evaluate the symbolic residual at this sample
        HVec expect = h_zero(field);
        for (const auto& [sym, c] : sum.bare_terms) {
            const Idx key[3] = {sym.args[0], sym.args[1], sym.args[2]};
            auto it = F.f3.find(AInfinityAlgebra::key(key));
            if (it != F.f3.end()) h_axpy(expect, c, it->second);
        }
        for (size_t i = 0; i < total.size(); ++i)
            if (total[i] != expect[i]) {
                rep.rhs_failures++;
                break;
            }
    }

    rep.verdict = field.characteristic() == 2 && !rep.lhs_coefficient.is_zero() &&
                  rep.rhs_failures == 0 && rep.symbolic_residual.empty();
    return rep;
}

long surface_h1_square_failures(const Field& field) {
    if (field.characteristic() != 2)
        throw std::invalid_argument(
            "the exhaustive square check runs over the two-element field");
    const SurfaceRing H(field);
    long failures = 0;
    for (int mask = 0; mask < 64; ++mask) {
        HVec u = h_zero(field);
        for (int i = 0; i < 6; ++i)
            if (mask & (1 << i))
                u[static_cast<size_t>(i + 1)] = Scalar::one(field);
        if (!h_is_zero(h_cup(H, u, u))) failures++;
    }
    return failures;
}

}  // namespace cedga
