#include "cedga/surface.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace cedga {

namespace {

F2Vec basis_vec(int dim, int i) {
    F2Vec v(dim);
    v.flip(i);
    return v;
}

template <class F>
void for_bits(const F2Vec& u, F&& fn) {
    for (size_t k = 0; k < u.w.size(); ++k) {
        uint64_t x = u.w[k];
        while (x) {
            fn(static_cast<int>(k * 64) + std::countr_zero(x));
            x &= x - 1;
        }
    }
}

int first_bit(const F2Vec& u) {
    for (size_t k = 0; k < u.w.size(); ++k)
        if (u.w[k]) return static_cast<int>(k * 64) + std::countr_zero(u.w[k]);
    return -1;
}

void cap_defect(SurfaceReport& rep, std::string msg) {
    rep.pass = false;
    if (rep.defects.size() < 8) rep.defects.push_back(std::move(msg));
}

// Basis index bookkeeping for the four presentations.  The stabilized
// algebra Chat reuses the C' layout as a prefix, so the inclusion
// C' -> Chat is the identity on indices.

struct CIx {
    int g;
    static constexpr int e1 = 0, e2 = 1;
    int wrap(int k) const {
        int n = 4 * g;
        return ((k - 1) % n + n) % n;
    }
    int alpha(int j) const { return 2 + j - 1; }
    int beta(int j) const { return 2 + g + j - 1; }
    int theta(int k) const { return 2 + 2 * g + wrap(k); }
    int gamma(int k) const { return 2 + 6 * g + wrap(k); }
    int dim() const { return 2 + 10 * g; }
};

struct PIx {
    int g;
    static constexpr int e = 0, eps1 = 1, zeta1 = 2;
    int phi(int j) const { return 3 + j - 1; }
    int psi(int j) const { return 3 + g + j - 1; }
    int xi(int l) const { return 3 + 2 * g + l - 1; }  // 1 <= l <= 4g-1
    int nu() const { return 2 + 6 * g; }
    int nul(int l) const { return 3 + 6 * g + l - 1; }
    int dim() const { return 10 * g + 2; }
    // stabilization extras, k = 2..2g+1
    int epsk(int k) const { return dim() + k - 2; }
    int zetak(int k) const { return dim() + 2 * g + k - 2; }
    int dim_hat() const { return dim() + 4 * g; }
};

struct HIx {
    int g;
    static constexpr int e = 0;
    int phibar(int j) const { return 1 + j - 1; }
    int psibar(int j) const { return 1 + g + j - 1; }
    int nu() const { return 1 + 2 * g; }
    int dim() const { return 2 + 2 * g; }
};

void check_genus(int g) {
    if (g < 1) throw std::invalid_argument("surface genus must be >= 1");
}

void alloc_tables(DGAlgebraPresentation& P) {
    int n = P.dim();
    P.unit = F2Vec(n);
    P.diff.assign(n, F2Vec(n));
    P.prod.assign(n, std::vector<F2Vec>(n, F2Vec(n)));
}

// two-sided identity rows for a single basis element acting as the unit
void install_unit_rows(DGAlgebraPresentation& P, int e) {
    for (int i = 0; i < P.dim(); ++i) {
        if (i == e) continue;
        P.prod[e][i].flip(i);
        P.prod[i][e].flip(i);
    }
    P.prod[e][e].flip(e);
}

void push_names(DGAlgebraPresentation& P, const std::string& stem, int lo,
                int hi, int degree) {
    for (int k = lo; k <= hi; ++k) {
        P.names.push_back(stem + std::to_string(k));
        P.degrees.push_back(degree);
    }
}

// names and degrees for the C' core, in PIx order
void cprime_names(DGAlgebraPresentation& P, int g) {
    P.names = {"e", "eps1", "zeta1"};
    P.degrees = {0, 0, 1};
    push_names(P, "phi", 1, g, 1);
    push_names(P, "psi", 1, g, 1);
    push_names(P, "xi", 1, 4 * g - 1, 1);
    P.names.push_back("nu");
    P.degrees.push_back(2);
    push_names(P, "nu", 1, 4 * g - 1, 2);
}

// differential and product table of C', touching core indices only (P may
// be the larger Chat); assumes alloc_tables and the e-unit rows are done
void cprime_core(DGAlgebraPresentation& P, int g) {
    PIx ix{g};
    int n = P.dim();

    P.diff[ix.eps1].flip(ix.zeta1);
    for (int l = 1; l <= 4 * g - 1; ++l) P.diff[ix.xi(l)].flip(ix.nul(l));

    auto nu_run = [&](bool with_nu, int hi) {
        F2Vec v(n);
        if (with_nu) v.flip(ix.nu());
        for (int l = 1; l <= hi; ++l) v.flip(ix.nul(l));
        return v;
    };

    P.prod[ix.eps1][ix.eps1].flip(ix.eps1);
    P.prod[ix.eps1][ix.zeta1].flip(ix.zeta1);
    P.prod[ix.eps1][ix.nu()].flip(ix.nu());
    for (int l = 1; l <= 4 * g - 1; ++l) {
        P.prod[ix.eps1][ix.xi(l)].flip(ix.xi(l));
        P.prod[ix.eps1][ix.nul(l)].flip(ix.nul(l));
    }
    for (int j = 1; j <= g; ++j) {
        P.prod[ix.eps1][ix.phi(j)].flip(ix.xi(4 * j - 2));
        P.prod[ix.eps1][ix.phi(j)].flip(ix.xi(4 * j - 1));
        if (j < g) {
            P.prod[ix.eps1][ix.psi(j)].flip(ix.xi(4 * j - 1));
            P.prod[ix.eps1][ix.psi(j)].flip(ix.xi(4 * j));
        }
    }
    P.prod[ix.eps1][ix.psi(g)].flip(ix.zeta1);
    for (int l = 1; l <= 4 * g - 2; ++l)
        P.prod[ix.eps1][ix.psi(g)].flip(ix.xi(l));

    for (int j = 1; j <= g; ++j) {
        P.prod[ix.phi(j)][ix.psi(j)] = nu_run(true, 4 * j - 2);
        P.prod[ix.psi(j)][ix.phi(j)] = nu_run(true, 4 * j - 1);
        P.prod[ix.xi(4 * j - 3)][ix.phi(j)] = nu_run(true, 4 * j - 3);
        P.prod[ix.xi(4 * j - 2)][ix.psi(j)] = nu_run(true, 4 * j - 2);
        if (j < g) {
            P.prod[ix.xi(4 * j)][ix.phi(j)] = nu_run(true, 4 * j - 1);
            P.prod[ix.xi(4 * j + 1)][ix.psi(j)] = nu_run(true, 4 * j);
        }
        P.prod[ix.zeta1][ix.phi(j)].flip(ix.nul(4 * j - 2));
        P.prod[ix.zeta1][ix.phi(j)].flip(ix.nul(4 * j - 1));
        if (j < g) {
            P.prod[ix.zeta1][ix.psi(j)].flip(ix.nul(4 * j - 1));
            P.prod[ix.zeta1][ix.psi(j)].flip(ix.nul(4 * j));
        }
    }
    P.prod[ix.xi(1)][ix.psi(g)].flip(ix.nu());
    P.prod[ix.zeta1][ix.psi(g)] = nu_run(false, 4 * g - 2);
}

}  // namespace

int f2_rank(std::vector<F2Vec> rows) {
    std::vector<F2Vec> pivots;
    std::vector<int> pivot_bit;
    for (auto& r : rows) {
        for (size_t t = 0; t < pivots.size(); ++t)
            if (r.get(pivot_bit[t])) r ^= pivots[t];
        int b = first_bit(r);
        if (b >= 0) {
            pivots.push_back(r);
            pivot_bit.push_back(b);
        }
    }
    return static_cast<int>(pivots.size());
}

int DGAlgebraPresentation::index_of(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (names[static_cast<size_t>(i)] == name) return i;
    throw std::out_of_range(label + ": no basis element named '" + name + "'");
}

F2Vec DGAlgebraPresentation::d(const F2Vec& u) const {
    F2Vec out(dim());
    for_bits(u, [&](int i) { out ^= diff[static_cast<size_t>(i)]; });
    return out;
}

F2Vec DGAlgebraPresentation::mul(const F2Vec& u, const F2Vec& v) const {
    F2Vec out(dim());
    for_bits(u, [&](int i) {
        for_bits(v, [&](int j) {
            out ^= prod[static_cast<size_t>(i)][static_cast<size_t>(j)];
        });
    });
    return out;
}

std::string DGAlgebraPresentation::show(const F2Vec& u) const {
    std::string s;
    for_bits(u, [&](int i) {
        if (!s.empty()) s += " + ";
        s += names[static_cast<size_t>(i)];
    });
    return s.empty() ? "0" : s;
}

F2Vec DGMorphism::apply(const F2Vec& u) const {
    F2Vec out(target.dim());
    for_bits(u, [&](int i) { out ^= image[static_cast<size_t>(i)]; });
    return out;
}

DGAlgebraPresentation build_C(int g) {
    check_genus(g);
    CIx ix{g};
    DGAlgebraPresentation P;
    P.label = "C";
    P.names = {"e1", "e2"};
    P.degrees = {0, 0};
    push_names(P, "alpha", 1, g, 1);
    push_names(P, "beta", 1, g, 1);
    push_names(P, "theta", 1, 4 * g, 1);
    push_names(P, "gamma", 1, 4 * g, 2);
    alloc_tables(P);

    P.unit.flip(ix.e1);
    P.unit.flip(ix.e2);

    for (int k = 1; k <= 4 * g; ++k) {
        P.diff[ix.e1].flip(ix.theta(k));
        P.diff[ix.e2].flip(ix.theta(k));
        P.diff[ix.theta(k)].flip(ix.gamma(k - 1));
        P.diff[ix.theta(k)].flip(ix.gamma(k));
    }
    for (int j = 1; j <= g; ++j) {
        P.diff[ix.alpha(j)].flip(ix.gamma(4 * j - 3));
        P.diff[ix.alpha(j)].flip(ix.gamma(4 * j - 1));
        P.diff[ix.beta(j)].flip(ix.gamma(4 * j - 2));
        P.diff[ix.beta(j)].flip(ix.gamma(4 * j));
    }

    P.prod[ix.e1][ix.e1].flip(ix.e1);
    P.prod[ix.e2][ix.e2].flip(ix.e2);
    for (int k = 1; k <= 4 * g; ++k) {
        P.prod[ix.e1][ix.theta(k)].flip(ix.theta(k));
        P.prod[ix.e1][ix.gamma(k)].flip(ix.gamma(k));
        P.prod[ix.theta(k)][ix.e2].flip(ix.theta(k));
        P.prod[ix.gamma(k)][ix.e2].flip(ix.gamma(k));
    }
    for (int j = 1; j <= g; ++j) {
        P.prod[ix.e2][ix.alpha(j)].flip(ix.alpha(j));
        P.prod[ix.alpha(j)][ix.e2].flip(ix.alpha(j));
        P.prod[ix.e2][ix.beta(j)].flip(ix.beta(j));
        P.prod[ix.beta(j)][ix.e2].flip(ix.beta(j));
        P.prod[ix.theta(4 * j - 3)][ix.alpha(j)].flip(ix.gamma(4 * j - 3));
        P.prod[ix.theta(4 * j - 2)][ix.beta(j)].flip(ix.gamma(4 * j - 2));
        P.prod[ix.theta(4 * j)][ix.alpha(j)].flip(ix.gamma(4 * j - 1));
        P.prod[ix.theta(4 * j + 1)][ix.beta(j)].flip(ix.gamma(4 * j));
    }
    return P;
}

DGAlgebraPresentation build_Cprime(int g) {
    check_genus(g);
    DGAlgebraPresentation P;
    P.label = "C'";
    cprime_names(P, g);
    alloc_tables(P);
    P.unit.flip(PIx::e);
    install_unit_rows(P, PIx::e);
    cprime_core(P, g);
    return P;
}

DGAlgebraPresentation build_Chat(int g) {
    check_genus(g);
    PIx ix{g};
    DGAlgebraPresentation P;
    P.label = "Chat";
    cprime_names(P, g);
    push_names(P, "eps", 2, 2 * g + 1, 0);
    push_names(P, "zeta", 2, 2 * g + 1, 1);
    alloc_tables(P);
    P.unit.flip(PIx::e);
    install_unit_rows(P, PIx::e);
    cprime_core(P, g);

    for (int k = 2; k <= 2 * g + 1; ++k) P.diff[ix.epsk(k)].flip(ix.zetak(k));
    for (int j = 1; j <= g; ++j) {
        for (int l = 1; l <= 4 * j - 2; ++l) {
            P.prod[ix.epsk(2 * j)][ix.psi(j)].flip(ix.xi(l));
            P.prod[ix.zetak(2 * j)][ix.psi(j)].flip(ix.nul(l));
        }
        for (int l = 1; l <= 4 * j - 1; ++l) {
            P.prod[ix.epsk(2 * j + 1)][ix.phi(j)].flip(ix.xi(l));
            P.prod[ix.zetak(2 * j + 1)][ix.phi(j)].flip(ix.nul(l));
        }
    }
    return P;
}

DGAlgebraPresentation build_H(int g) {
    check_genus(g);
    HIx ix{g};
    DGAlgebraPresentation P;
    P.label = "H";
    P.names = {"e"};
    P.degrees = {0};
    push_names(P, "phibar", 1, g, 1);
    push_names(P, "psibar", 1, g, 1);
    P.names.push_back("nu");
    P.degrees.push_back(2);
    alloc_tables(P);
    P.unit.flip(HIx::e);
    install_unit_rows(P, HIx::e);
    for (int j = 1; j <= g; ++j) {
        P.prod[ix.phibar(j)][ix.psibar(j)].flip(ix.nu());
        P.prod[ix.psibar(j)][ix.phibar(j)].flip(ix.nu());
    }
    return P;
}

DGMorphism build_Phi(int g) {
    check_genus(g);
    PIx s{g};
    CIx t{g};
    DGMorphism m;
    m.label = "Phi";
    m.source = build_Cprime(g);
    m.target = build_C(g);
    int n = m.target.dim();
    m.image.assign(static_cast<size_t>(m.source.dim()), F2Vec(n));

    m.image[PIx::e].flip(CIx::e1);
    m.image[PIx::e].flip(CIx::e2);
    m.image[PIx::eps1].flip(CIx::e1);
    for (int k = 1; k <= 4 * g; ++k) m.image[PIx::zeta1].flip(t.theta(k));
    for (int j = 1; j <= g; ++j) {
        m.image[static_cast<size_t>(s.phi(j))].flip(t.alpha(j));
        m.image[static_cast<size_t>(s.phi(j))].flip(t.theta(4 * j - 2));
        m.image[static_cast<size_t>(s.phi(j))].flip(t.theta(4 * j - 1));
        m.image[static_cast<size_t>(s.psi(j))].flip(t.beta(j));
        m.image[static_cast<size_t>(s.psi(j))].flip(t.theta(4 * j - 1));
        m.image[static_cast<size_t>(s.psi(j))].flip(t.theta(4 * j));
    }
    for (int l = 1; l <= 4 * g - 1; ++l) {
        m.image[static_cast<size_t>(s.xi(l))].flip(t.theta(l));
        m.image[static_cast<size_t>(s.nul(l))].flip(t.gamma(l - 1));
        m.image[static_cast<size_t>(s.nul(l))].flip(t.gamma(l));
    }
    m.image[static_cast<size_t>(s.nu())].flip(t.gamma(4 * g));
    return m;
}

DGMorphism build_inclusion(int g) {
    check_genus(g);
    DGMorphism m;
    m.label = "inclusion";
    m.source = build_Cprime(g);
    m.target = build_Chat(g);
    int n = m.target.dim();
    m.image.reserve(static_cast<size_t>(m.source.dim()));
    for (int i = 0; i < m.source.dim(); ++i) m.image.push_back(basis_vec(n, i));
    return m;
}

DGMorphism build_PhiHat(int g) {
    check_genus(g);
    HIx s{g};
    PIx t{g};
    DGMorphism m;
    m.label = "PhiHat";
    m.source = build_H(g);
    m.target = build_Chat(g);
    int n = m.target.dim();
    m.image.assign(static_cast<size_t>(m.source.dim()), F2Vec(n));

    m.image[HIx::e].flip(PIx::e);
    for (int j = 1; j <= g; ++j) {
        m.image[static_cast<size_t>(s.phibar(j))].flip(t.phi(j));
        m.image[static_cast<size_t>(s.phibar(j))].flip(t.zetak(2 * j));
        m.image[static_cast<size_t>(s.psibar(j))].flip(t.psi(j));
        m.image[static_cast<size_t>(s.psibar(j))].flip(t.zetak(2 * j + 1));
    }
    m.image[static_cast<size_t>(s.nu())].flip(t.nu());
    return m;
}

SurfaceReport verify_dg_algebra(const DGAlgebraPresentation& P) {
    SurfaceReport rep;
    const int n = P.dim();
    const size_t words = F2Vec(n).w.size();

    if (P.field.characteristic() != 2)
        cap_defect(rep, P.label + ": coefficient field is not of characteristic 2");
    if (P.degrees.size() != P.names.size() || P.diff.size() != P.names.size() ||
        P.prod.size() != P.names.size() || P.unit.w.size() != words) {
        cap_defect(rep, P.label + ": table sizes do not match the basis");
        return rep;
    }
    for (const auto& row : P.prod)
        if (row.size() != P.names.size()) {
            cap_defect(rep, P.label + ": ragged product table");
            return rep;
        }

    std::vector<F2Vec> bas;
    bas.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) bas.push_back(basis_vec(n, i));

    auto homogeneous_in = [&](const F2Vec& v, int deg) {
        bool ok = true;
        for_bits(v, [&](int i) {
            if (P.degrees[static_cast<size_t>(i)] != deg) ok = false;
        });
        return ok;
    };

    if (!homogeneous_in(P.unit, 0))
        cap_defect(rep, P.label + ": unit " + P.show(P.unit) +
                            " is not concentrated in degree 0");

    for (int i = 0; i < n; ++i) {
        if (!homogeneous_in(P.diff[static_cast<size_t>(i)],
                            P.degrees[static_cast<size_t>(i)] + 1))
            cap_defect(rep, P.label + ": d(" + P.names[static_cast<size_t>(i)] +
                                ") leaves degree " +
                                std::to_string(P.degrees[static_cast<size_t>(i)] + 1));
        F2Vec dd = P.d(P.diff[static_cast<size_t>(i)]);
        if (!dd.is_zero())
            cap_defect(rep, P.label + ": d^2(" + P.names[static_cast<size_t>(i)] +
                                ") = " + P.show(dd));
    }

    for (int i = 0; i < n; ++i) {
        F2Vec lu = P.mul(P.unit, bas[static_cast<size_t>(i)]);
        F2Vec ru = P.mul(bas[static_cast<size_t>(i)], P.unit);
        if (lu != bas[static_cast<size_t>(i)] || ru != bas[static_cast<size_t>(i)])
            cap_defect(rep, P.label + ": unit law fails at " +
                                P.names[static_cast<size_t>(i)]);
    }

    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const F2Vec& pij = P.prod[static_cast<size_t>(i)][static_cast<size_t>(j)];
            int dij = P.degrees[static_cast<size_t>(i)] + P.degrees[static_cast<size_t>(j)];
            if (!homogeneous_in(pij, dij))
                cap_defect(rep, P.label + ": " + P.names[static_cast<size_t>(i)] +
                                    "*" + P.names[static_cast<size_t>(j)] +
                                    " leaves degree " + std::to_string(dij));
            F2Vec lhs = P.d(pij);
            F2Vec rhs = P.mul(P.diff[static_cast<size_t>(i)], bas[static_cast<size_t>(j)]);
            rhs ^= P.mul(bas[static_cast<size_t>(i)], P.diff[static_cast<size_t>(j)]);
            if (lhs != rhs)
                cap_defect(rep, P.label + ": Leibniz fails at (" +
                                    P.names[static_cast<size_t>(i)] + ", " +
                                    P.names[static_cast<size_t>(j)] + "): d(xy) = " +
                                    P.show(lhs) + ", dx*y + x*dy = " + P.show(rhs));
        }
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                F2Vec lhs = P.mul(
                    P.prod[static_cast<size_t>(i)][static_cast<size_t>(j)],
                    bas[static_cast<size_t>(k)]);
                F2Vec rhs = P.mul(
                    bas[static_cast<size_t>(i)],
                    P.prod[static_cast<size_t>(j)][static_cast<size_t>(k)]);
                if (lhs != rhs)
                    cap_defect(rep, P.label + ": associativity fails at (" +
                                        P.names[static_cast<size_t>(i)] + ", " +
                                        P.names[static_cast<size_t>(j)] + ", " +
                                        P.names[static_cast<size_t>(k)] +
                                        "): (xy)z = " + P.show(lhs) +
                                        ", x(yz) = " + P.show(rhs));
            }

    return rep;
}

SurfaceReport verify_dg_morphism(const DGMorphism& m) {
    SurfaceReport rep;
    const auto& S = m.source;
    const auto& T = m.target;

    if (S.field != T.field)
        cap_defect(rep, m.label + ": source and target fields differ");
    if (m.image.size() != S.names.size()) {
        cap_defect(rep, m.label + ": image table does not match the source basis");
        return rep;
    }

    std::vector<F2Vec> bas;
    for (int i = 0; i < S.dim(); ++i) bas.push_back(basis_vec(S.dim(), i));

    for (int i = 0; i < S.dim(); ++i) {
        bool ok = true;
        for_bits(m.image[static_cast<size_t>(i)], [&](int t) {
            if (T.degrees[static_cast<size_t>(t)] != S.degrees[static_cast<size_t>(i)])
                ok = false;
        });
        if (!ok)
            cap_defect(rep, m.label + ": image of " + S.names[static_cast<size_t>(i)] +
                                " is not homogeneous of the same degree");
    }

    if (m.apply(S.unit) != T.unit)
        cap_defect(rep, m.label + ": unit maps to " + T.show(m.apply(S.unit)) +
                            " instead of " + T.show(T.unit));

    for (int i = 0; i < S.dim(); ++i) {
        F2Vec lhs = m.apply(S.diff[static_cast<size_t>(i)]);
        F2Vec rhs = T.d(m.image[static_cast<size_t>(i)]);
        if (lhs != rhs)
            cap_defect(rep, m.label + ": chain map fails at " +
                                S.names[static_cast<size_t>(i)] + ": f(dx) = " +
                                T.show(lhs) + ", d(fx) = " + T.show(rhs));
    }

    for (int i = 0; i < S.dim(); ++i)
        for (int j = 0; j < S.dim(); ++j) {
            F2Vec lhs = m.apply(S.prod[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            F2Vec rhs = T.mul(m.image[static_cast<size_t>(i)],
                              m.image[static_cast<size_t>(j)]);
            if (lhs != rhs)
                cap_defect(rep, m.label + ": multiplicativity fails at (" +
                                    S.names[static_cast<size_t>(i)] + ", " +
                                    S.names[static_cast<size_t>(j)] + "): f(xy) = " +
                                    T.show(lhs) + ", f(x)f(y) = " + T.show(rhs));
        }

    return rep;
}

namespace {

std::vector<int> degree_indices(const DGAlgebraPresentation& P, int k) {
    std::vector<int> out;
    for (int i = 0; i < P.dim(); ++i)
        if (P.degrees[static_cast<size_t>(i)] == k) out.push_back(i);
    return out;
}

int boundary_rank(const DGAlgebraPresentation& P, int k) {
    if (k < 0) return 0;
    std::vector<F2Vec> rows;
    for (int i : degree_indices(P, k)) rows.push_back(P.diff[static_cast<size_t>(i)]);
    return f2_rank(rows);
}

// combination vectors (over the positions of `vecs`) spanning the kernel of
// the linear map position -> vecs[position]
std::vector<F2Vec> f2_kernel(const std::vector<F2Vec>& vecs) {
    int mrows = static_cast<int>(vecs.size());
    std::vector<std::pair<F2Vec, F2Vec>> pivots;  // (reduced value, combo)
    std::vector<int> pivot_bit;
    std::vector<F2Vec> kernel;
    for (int i = 0; i < mrows; ++i) {
        F2Vec val = vecs[static_cast<size_t>(i)];
        F2Vec combo(mrows);
        combo.flip(i);
        for (size_t t = 0; t < pivots.size(); ++t)
            if (val.get(pivot_bit[t])) {
                val ^= pivots[t].first;
                combo ^= pivots[t].second;
            }
        int b = first_bit(val);
        if (b < 0) {
            kernel.push_back(combo);
        } else {
            pivots.emplace_back(std::move(val), std::move(combo));
            pivot_bit.push_back(b);
        }
    }
    return kernel;
}

}  // namespace

std::vector<long> cohomology(const DGAlgebraPresentation& P) {
    std::vector<long> dims;
    for (int k = 0; k <= 2; ++k) {
        long basis_count = static_cast<long>(degree_indices(P, k).size());
        dims.push_back(basis_count - boundary_rank(P, k) - boundary_rank(P, k - 1));
    }
    return dims;
}

bool is_quasi_iso(const DGMorphism& m) {
    const auto& S = m.source;
    const auto& T = m.target;
    if (m.image.size() != S.names.size()) return false;

    for (int k = 0; k <= 2; ++k) {
        std::vector<int> sk = degree_indices(S, k);
        std::vector<F2Vec> d_rows;
        for (int i : sk) d_rows.push_back(S.diff[static_cast<size_t>(i)]);
        std::vector<F2Vec> combos = f2_kernel(d_rows);

        long hs = static_cast<long>(combos.size()) - boundary_rank(S, k - 1);
        long zt = static_cast<long>(degree_indices(T, k).size()) - boundary_rank(T, k);
        long ht = zt - boundary_rank(T, k - 1);
        if (hs != ht) return false;

        // target boundaries plus images of source cocycles must span the
        // target cocycles: surjectivity on cohomology, hence (equal finite
        // dimensions) bijectivity
        std::vector<F2Vec> span_rows;
        for (int i : degree_indices(T, k - 1))
            span_rows.push_back(T.diff[static_cast<size_t>(i)]);
        for (const F2Vec& c : combos) {
            F2Vec u(S.dim());
            for_bits(c, [&](int t) { u.flip(sk[static_cast<size_t>(t)]); });
            span_rows.push_back(m.apply(u));
        }
        if (f2_rank(span_rows) != static_cast<int>(zt)) return false;
    }
    return true;
}

}  // namespace cedga
