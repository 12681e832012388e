#include "cedga/dga.hpp"

#include <sstream>

namespace cedga {

NCPoly FreeDGA::d_of(int id) const {
    const NCPoly* img = diff.image(id);
    return img ? *img : NCPoly::zero(field);
}

DgaReport verify_dga(const FreeDGA& d) {
    DgaReport report;
    for (const Generator& g : d.gens.all()) {
        NCPoly dg = d.d_of(g.id);
        bool degree_ok = true;
        for (int deg : dg.degrees(d.gens)) {
            if (deg != g.degree - 1) {
                degree_ok = false;
                break;
            }
        }
        NCPoly ddg = d.d(dg);
        bool square_ok = ddg.is_zero();
        if (!degree_ok || !square_ok) {
            std::ostringstream os;
            if (!degree_ok)
                os << "d(" << g.name << ") inhomogeneous or not of degree "
                   << g.degree - 1;
            if (!square_ok) {
                if (!degree_ok) os << "; ";
                os << "d^2(" << g.name << ") = " << ddg.str(d.gens);
            }
            report.entries.push_back({g.id, degree_ok, square_ok, os.str()});
            report.pass = false;
        }
    }
    return report;
}

Scalar Augmentation::value(const Field& f, int id) const {
    auto it = values.find(id);
    return it == values.end() ? Scalar::zero(f) : it->second;
}

Scalar Augmentation::evaluate(const Field& f, const NCPoly& x) const {
    Scalar out = Scalar::zero(f);
    for (const auto& [w, c] : x.terms()) {
        Scalar prod = c;
        for (int id : w) prod = prod * value(f, id);
        out = out + prod;
    }
    return out;
}

bool verify_augmentation(const FreeDGA& d, const Augmentation& eps,
                         std::string* why) {
    for (const Generator& g : d.gens.all()) {
        if (g.degree != 0 && !eps.value(d.field, g.id).is_zero()) {
            if (why)
                *why = "eps(" + g.name + ") nonzero on a degree-" +
                       std::to_string(g.degree) + " generator";
            return false;
        }
        Scalar s = eps.evaluate(d.field, d.d_of(g.id));
        if (!s.is_zero()) {
            if (why) *why = "eps(d(" + g.name + ")) = " + s.str() + " != 0";
            return false;
        }
    }
    return true;
}

FreeDGA twist(const FreeDGA& d, const Augmentation& eps) {
    std::string why;
    if (!verify_augmentation(d, eps, &why))
        throw std::invalid_argument("not an augmentation: " + why);
    AlgebraMap phi, phi_inv;
    for (const Generator& g : d.gens.all()) {
        Scalar e = eps.value(d.field, g.id);
        if (e.is_zero()) continue;
        NCPoly fwd = NCPoly::generator(d.field, g.id) + NCPoly::constant(e);
        NCPoly bwd = NCPoly::generator(d.field, g.id) - NCPoly::constant(e);
        phi.images.emplace(g.id, fwd);
        phi_inv.images.emplace(g.id, bwd);
    }
    FreeDGA out{d.field, d.gens, {}};
    for (const Generator& g : d.gens.all()) {
        NCPoly img = apply_algebra_map(
            d.gens, d.field, phi,
            d.d(apply_algebra_map(d.gens, d.field, phi_inv,
                                  NCPoly::generator(d.field, g.id))));
        if (!img.is_zero()) out.diff.images.emplace(g.id, img);
    }
    return out;
}

FreeDGA change_generators(const FreeDGA& d, const AlgebraMap& phi,
                          const AlgebraMap& phi_inv) {
    // inverse check on generators, and degree preservation
    for (const Generator& g : d.gens.all()) {
        NCPoly gp = NCPoly::generator(d.field, g.id);
        NCPoly round1 = apply_algebra_map(
            d.gens, d.field, phi,
            apply_algebra_map(d.gens, d.field, phi_inv, gp));
        NCPoly round2 = apply_algebra_map(
            d.gens, d.field, phi_inv,
            apply_algebra_map(d.gens, d.field, phi, gp));
        if (round1 != gp || round2 != gp)
            throw std::invalid_argument("generator change is not invertible at " +
                                        g.name);
        const NCPoly* img = phi.image(g.id);
        if (img) {
            for (int deg : img->degrees(d.gens))
                if (deg != g.degree)
                    throw std::invalid_argument(
                        "generator change not degree-preserving at " + g.name);
        }
    }
    FreeDGA out{d.field, d.gens, {}};
    for (const Generator& g : d.gens.all()) {
        NCPoly img = apply_algebra_map(
            d.gens, d.field, phi,
            d.d(apply_algebra_map(d.gens, d.field, phi_inv,
                                  NCPoly::generator(d.field, g.id))));
        if (!img.is_zero()) out.diff.images.emplace(g.id, img);
    }
    return out;
}

LinearizedComplex linear_part(const FreeDGA& d) {
    LinearizedComplex out(d.field);
    for (const Generator& g : d.gens.all()) {
        if (!d.d_of(g.id).coeff({}).is_zero())
            throw std::invalid_argument("constant term present in d(" + g.name +
                                        "); twist by an augmentation first");
        out.basis[g.degree].push_back(g.id);
    }
    std::map<int, std::map<int, size_t>> position;  // degree -> id -> row
    for (const auto& [deg, ids] : out.basis)
        for (size_t i = 0; i < ids.size(); ++i) position[deg][ids[i]] = i;

    for (const auto& [deg, ids] : out.basis) {
        size_t target_rows =
            out.basis.count(deg - 1) ? out.basis.at(deg - 1).size() : 0;
        DenseMatrix m(d.field, target_rows, ids.size());
        for (size_t col = 0; col < ids.size(); ++col) {
            const NCPoly dc = d.d_of(ids[col]);
            for (const auto& [w, c] : dc.terms()) {
                if (w.size() != 1) continue;
                // degree-(-1) homogeneity puts length-1 words in degree deg-1
                m.at(position[deg - 1].at(w[0]), col) = c;
            }
        }
        out.d_from.emplace(deg, std::move(m));
    }
    return out;
}

std::map<int, long> homology_dims(const LinearizedComplex& c) {
    std::map<int, size_t> rank_from;  // degree k -> rank of d: k -> k-1
    for (const auto& [deg, m] : c.d_from) rank_from[deg] = rank(m);
    std::map<int, long> out;
    for (const auto& [deg, ids] : c.basis) {
        long dim = static_cast<long>(ids.size());
        long r_out = static_cast<long>(rank_from.count(deg) ? rank_from[deg] : 0);
        long r_in =
            static_cast<long>(rank_from.count(deg + 1) ? rank_from[deg + 1] : 0);
        long h = dim - r_out - r_in;
        if (h != 0) out[deg] = h;
    }
    return out;
}

}  // namespace cedga
