// cedga: command-line front end for the library.  Every subcommand runs a
// set of named checks and prints them as a human-readable report or as JSON;
// the exit status is 0 when every check passes, 1 when any check fails, and
// 2 for unusable flags or inputs.
//
// JSON reports are deterministic: checks are sorted by name, map keys are
// emitted in a fixed order, and rational scalars are rendered as exact
// strings, so identical configurations produce byte-identical output.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cedga/ainfty.hpp"
#include "cedga/dga.hpp"
#include "cedga/dgaparse.hpp"
#include "cedga/lambda.hpp"
#include "cedga/surface.hpp"
#include "cedga/transfer.hpp"

namespace {

using cedga::AInfinityAlgebra;
using cedga::Field;
using cedga::FreeDGA;
using cedga::Idx;
using cedga::KnotParams;
using cedga::NCPoly;
using cedga::Scalar;
using ordered_json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

// ---------------------------------------------------------------------------
// report accumulation and rendering

struct CheckEntry {
    std::string status;  // "pass" | "fail" | "skip"
    ordered_json details;
};

struct Report {
    std::string command;
    ordered_json params = ordered_json::object();
    std::map<std::string, CheckEntry> checks;

    void add(const std::string& name, bool ok, ordered_json details = "") {
        checks.insert_or_assign(name,
                                CheckEntry{ok ? "pass" : "fail", std::move(details)});
    }
    void skip(const std::string& name, ordered_json details = "") {
        checks.insert_or_assign(name, CheckEntry{"skip", std::move(details)});
    }
    bool all_pass() const {
        for (const auto& [name, c] : checks)
            if (c.status == "fail") return false;
        return true;
    }
};

std::string scalar_of(const ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_detail_lines(const ordered_json& d, std::ostream& os) {
    const std::string pad = "        ";
    if (d.is_string()) {
        if (!d.get<std::string>().empty()) os << pad << d.get<std::string>() << "\n";
    } else if (d.is_array()) {
        for (const auto& item : d) os << pad << scalar_of(item) << "\n";
    } else if (d.is_object()) {
        for (const auto& [k, v] : d.items()) os << pad << k << " = " << scalar_of(v) << "\n";
    } else if (!d.is_null()) {
        os << pad << d.dump() << "\n";
    }
}

void render_text(const Report& rep, std::ostream& os) {
    os << "cedga " << rep.command;
    if (!rep.params.empty()) {
        os << " (";
        bool first = true;
        for (const auto& [k, v] : rep.params.items()) {
            if (!first) os << " ";
            os << k << "=" << scalar_of(v);
            first = false;
        }
        os << ")";
    }
    os << "\n";
    int failed = 0;
    for (const auto& [name, c] : rep.checks) {
        std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP";
        if (c.status == "fail") failed++;
        os << "  " << tag << "  " << name << "\n";
        render_detail_lines(c.details, os);
    }
    if (failed == 0)
        os << "result: PASS (" << rep.checks.size() << " checks)\n";
    else
        os << "result: FAIL (" << failed << " of " << rep.checks.size()
           << " checks failed)\n";
}

void render_json(const Report& rep, std::ostream& os) {
    ordered_json out;
    out["command"] = rep.command;
    out["params"] = rep.params;
    ordered_json results = ordered_json::object();
    for (const auto& [name, c] : rep.checks) {
        ordered_json entry;
        entry["status"] = c.status;
        entry["details"] = c.details;
        results[name] = entry;
    }
    out["results"] = results;
    out["version"] = kVersion;
    os << out.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// small shared helpers

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Field parse_field(const std::string& s) {
    if (s == "Q" || s == "q") return Field::rationals();
    try {
        size_t used = 0;
        long p = std::stol(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return Field::fp(p);
    } catch (const std::exception&) {
        throw UsageError("--field must be a prime number or Q, got '" + s + "'");
    }
}

std::string field_label(const Field& f) {
    return f.is_rational() ? "Q" : std::to_string(f.characteristic());
}

ordered_json string_list(const std::vector<std::string>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& s : v) out.push_back(s);
    return out;
}

ordered_json dga_defects(const cedga::DgaReport& r) {
    std::vector<std::string> lines;
    for (const auto& e : r.entries) {
        lines.push_back(e.detail);
        if (lines.size() >= 6) break;
    }
    return string_list(lines);
}

std::string sv_str(const AInfinityAlgebra& A, const cedga::SparseVec& v) {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : v) {
        if (!out.empty()) out += " + ";
        out += c.str() + "*" + A.name(i);
    }
    return out;
}

std::vector<Idx> unpack_key(uint64_t key, int arity) {
    std::vector<Idx> t(static_cast<size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
        t[static_cast<size_t>(i)] = static_cast<Idx>((key & 0xff) - 1);
        key >>= 8;
    }
    return t;
}

std::string tuple_label(const AInfinityAlgebra& A, const std::vector<Idx>& t) {
    std::string out = "(";
    for (size_t i = 0; i < t.size(); ++i) {
        if (i) out += ",";
        out += A.name(t[i]);
    }
    return out + ")";
}

// All stored products in the arity range, skipping rows forced by strict
// unitality; sorted by display name for stable output.
ordered_json mu_table(const AInfinityAlgebra& A, int lo, int hi) {
    std::map<std::string, std::string> rows;
    for (int d = lo; d <= hi && d <= A.max_arity(); ++d) {
        for (const auto& [key, val] : A.entries(d)) {
            std::vector<Idx> t = unpack_key(key, d);
            bool has_unit = false;
            for (Idx x : t) has_unit = has_unit || x == A.unit();
            if (has_unit) continue;
            rows.emplace("mu" + std::to_string(d) + tuple_label(A, t), sv_str(A, val));
        }
    }
    ordered_json out = ordered_json::object();
    for (const auto& [k, v] : rows) out[k] = v;
    return out;
}

ordered_json ainfty_details(const cedga::AinftyReport& r) {
    ordered_json d;
    d["tuples"] = r.tuples_checked;
    d["violations"] = r.violations;
    if (!r.examples.empty()) d["examples"] = string_list(r.examples);
    return d;
}

// ---------------------------------------------------------------------------
// the expected twisted differential, built independently of twist():
// d a0 turns into the signed sum over nonempty subsets of the four top
// letters, and each chord picks up its letters with the signs forced by
// the letter shift g -> g - 1.
std::map<int, NCPoly> expected_twist_images(const KnotParams& kp, const FreeDGA& L) {
    const Field& f = L.field;
    const char fam_letter[4] = {'x', 'y', 'z', 'w'};
    const int tops[4] = {kp.p, kp.q, kp.r, kp.s};
    auto gid = [&](const std::string& n) { return L.gens.require(n); };
    auto letter = [&](int fam, int i) {
        return gid(std::string(1, fam_letter[fam]) + std::to_string(i));
    };
    auto chord = [&](int fam, int i) {
        return gid("a" + std::string(1, fam_letter[fam]) + std::to_string(i));
    };
    const int b[7] = {-1,        gid("b1"), gid("b2"), gid("b3"),
                      gid("b4"), gid("b5"), gid("b6")};

    std::map<int, NCPoly> out;
    {
        // signed inclusion-exclusion over {w_s, z_r, y_q, x_p} in that order
        const int top4[4] = {letter(3, kp.s), letter(2, kp.r), letter(1, kp.q),
                             letter(0, kp.p)};
        NCPoly e = NCPoly::zero(f);
        for (int mask = 1; mask < 16; ++mask) {
            cedga::Word w;
            int bits = 0;
            for (int j = 0; j < 4; ++j)
                if (mask & (1 << j)) {
                    w.push_back(top4[j]);
                    bits++;
                }
            e.add_term(w, Scalar(f, bits % 2 ? 1 : -1));
        }
        out.emplace(gid("a0"), std::move(e));
    }
    const Scalar one = Scalar::one(f);
    const Scalar minus(f, -1);
    // degree-1 chords over the bottom letters
    const std::pair<int, int> bpair[4] = {
        {b[1], b[4]}, {b[2], b[5]}, {b[4], b[1]}, {b[3], b[6]}};
    for (int fam = 0; fam < 4; ++fam) {
        NCPoly e = NCPoly::zero(f);
        e.add_term({letter(fam, 0)}, one);
        e.add_term({bpair[fam].first, bpair[fam].second}, one);
        if (fam == 2) {
            e.add_term({b[5], b[2]}, one);
            e.add_term({b[6], b[3]}, minus);
            e.add_term({letter(2, 0), b[6], b[3]}, one);
            e.add_term({b[4], b[1], b[5], b[2]}, one);
        }
        out.emplace(chord(fam, 0), std::move(e));
    }
    for (int fam = 0; fam < 4; ++fam)
        for (int i = 1; i <= tops[fam]; ++i) {
            NCPoly e = NCPoly::zero(f);
            e.add_term({letter(fam, i - 1)}, one);
            e.add_term({letter(fam, i)}, one);
            e.add_term({letter(fam, i - 1), letter(fam, i)}, minus);
            out.emplace(chord(fam, i), std::move(e));
        }
    return out;
}

// ---------------------------------------------------------------------------
// subcommand bodies

void run_verify(const KnotParams& kp, const Field& field, Report& rep) {
    FreeDGA L = cedga::build_ce_dga(kp, field);
    cedga::Augmentation eps = cedga::canonical_augmentation(kp, L);

    cedga::DgaReport dr = cedga::verify_dga(L);
    rep.add("ce_dga", dr.pass, dga_defects(dr));

    std::string why;
    bool aug_ok = cedga::verify_augmentation(L, eps, &why);
    rep.add("augmentation", aug_ok, why);

    cedga::ClassicalInvariants inv = cedga::classical_invariants(kp);
    ordered_json invd;
    invd["rotation"] = inv.rotation;
    invd["thurston_bennequin"] = inv.thurston_bennequin;
    invd["slice_genus"] = inv.slice_genus;
    rep.add("invariants",
            inv.rotation == 0 && inv.thurston_bennequin == 5 && inv.slice_genus == 3,
            invd);

    FreeDGA T = cedga::twist(L, eps);
    cedga::DgaReport tr = cedga::verify_dga(T);
    std::vector<std::string> tdef;
    for (const auto& e : tr.entries) tdef.push_back(e.detail);
    for (const auto& g : T.gens.all())
        if (!T.d_of(g.id).coeff({}).is_zero())
            tdef.push_back("constant term survives in d(" + g.name + ")");
    rep.add("twisted_dga", tdef.empty(), string_list(tdef));

    std::map<int, NCPoly> expected = expected_twist_images(kp, T);
    std::vector<std::string> mismatches;
    for (const auto& g : T.gens.all()) {
        auto it = expected.find(g.id);
        NCPoly want = it == expected.end() ? NCPoly::zero(field) : it->second;
        NCPoly got = T.d_of(g.id);
        if (got != want && mismatches.size() < 6)
            mismatches.push_back("d(" + g.name + ") = " + got.str(T.gens) +
                                 ", expected " + want.str(T.gens));
    }
    rep.add("twist_table", mismatches.empty(), string_list(mismatches));

    FreeDGA N = cedga::normalized_dga(kp, field);
    cedga::DgaReport nr = cedga::verify_dga(N);
    std::vector<std::string> ndef;
    for (const auto& e : nr.entries) ndef.push_back(e.detail);
    const NCPoly normalized_a0 = N.d_of(N.gens.require("a0"));
    for (const auto& [w, c] : normalized_a0.terms())
        if (w.size() <= 1)
            ndef.push_back("d(a0) still has a short term: " +
                           cedga::word_str(N.gens, w));
    rep.add("normalized", ndef.empty(), string_list(ndef));
}

void run_linhom(const KnotParams& kp, const Field& field, Report& rep) {
    FreeDGA N = cedga::normalized_dga(kp, field);
    cedga::LinearizedComplex lc = cedga::linear_part(N);
    std::map<int, long> dims = cedga::homology_dims(lc);
    ordered_json table = ordered_json::object();
    for (const auto& [deg, dim] : dims) table[std::to_string(deg)] = dim;
    rep.add("homology", true, table);
}

void run_dual(const KnotParams& kp, const Field& field, int max_arity, long samples,
              uint64_t seed, Report& rep) {
    AInfinityAlgebra B = cedga::dualize(cedga::normalized_dga(kp, field));

    cedga::AinftyReport unit_rep = cedga::check_strict_unitality(B);
    rep.add("unitality", unit_rep.pass, ainfty_details(unit_rep));

    const int exhaustive_hi = std::min(max_arity, 4);
    cedga::AinftyReport rel = cedga::check_ainfty_relations(B, 1, exhaustive_hi);
    rep.add("relations_exhaustive", rel.pass, ainfty_details(rel));

    if (max_arity >= 5) {
        if (samples > 0) {
            cedga::AinftyReport sampled =
                cedga::check_ainfty_relations(B, 5, max_arity, samples, seed);
            rep.add("relations_sampled", sampled.pass, ainfty_details(sampled));
        } else {
            rep.skip("relations_sampled",
                     "arities above 4 need --samples and --seed");
        }
    }

    rep.add("table", true, mu_table(B, 1, B.max_arity()));
}

void run_transfer(const KnotParams& kp, const Field& field, int max_arity,
                  Report& rep) {
    AInfinityAlgebra B = cedga::dualize(cedga::normalized_dga(kp, field));
    cedga::Contraction con = cedga::standard_contraction(kp, B);

    cedga::ContractionReport crep = cedga::verify_contraction(B, con);
    rep.add("contraction", crep.pass, string_list(crep.defects));

    cedga::TransferResult tr = cedga::transfer_products(B, con, max_arity);
    const AInfinityAlgebra& A = tr.algebra;

    rep.add("minimal", A.entries(1).empty(),
            A.entries(1).empty() ? "mu1 vanishes on the retained basis"
                                 : "mu1 is nonzero");

    cedga::AinftyReport unit_rep = cedga::check_strict_unitality(A);
    rep.add("unitality", unit_rep.pass, ainfty_details(unit_rep));

    cedga::AinftyReport rel =
        cedga::check_ainfty_relations(A, 1, std::min(max_arity, 4));
    rep.add("relations", rel.pass, ainfty_details(rel));

    rep.add("mu_table", true, mu_table(A, 2, max_arity));

    ordered_json comps = ordered_json::object();
    for (size_t d = 1; d < tr.morphism.f.size(); ++d)
        comps["F" + std::to_string(d)] =
            static_cast<long>(tr.morphism.f[d].size());
    rep.add("morphism_components", true, comps);
}

void run_obstruct(const KnotParams& kp, const Field& field, long samples,
                  uint64_t seed, Report& rep) {
    cedga::ObstructionReport orep =
        cedga::obstruction_check(kp, field, samples, seed);

    // mechanical convention: the summed left-hand side carries coefficient -1
    // on the distinguished degree-2 class (see SIGNS.md); in characteristic 2
    // this is the coefficient 1 of the non-existence argument
    rep.add("lhs_coefficient", orep.lhs_coefficient == Scalar(field, -1),
            orep.lhs_coefficient.str());

    ordered_json sampled;
    sampled["samples"] = orep.rhs_samples;
    sampled["failures"] = orep.rhs_failures;
    rep.add("rhs_samples", orep.rhs_failures == 0, sampled);

    bool residual_ok = field.characteristic() == 2
                           ? orep.symbolic_residual.empty()
                           : true;  // nonzero residual is the expected outcome
    rep.add("residual", residual_ok, string_list(orep.symbolic_residual));

    if (field.characteristic() == 2) {
        rep.add("verdict", orep.verdict,
                orep.verdict
                    ? "no quasi-isomorphism onto the surface cohomology ring"
                    : "inconclusive");
        long sq = cedga::surface_h1_square_failures(field);
        ordered_json sqd;
        sqd["degree1_vectors"] = 64;
        sqd["square_nonzero"] = sq;
        rep.add("h1_squares", sq == 0, sqd);
    } else {
        rep.skip("verdict", "the full verdict runs in characteristic 2");
    }
}

void run_formality(int genus, Report& rep) {
    struct Named {
        std::string label;
        cedga::DGAlgebraPresentation pres;
    };
    std::vector<Named> algebras;
    algebras.push_back({"C", cedga::build_C(genus)});
    algebras.push_back({"Cprime", cedga::build_Cprime(genus)});
    algebras.push_back({"Chat", cedga::build_Chat(genus)});
    algebras.push_back({"H", cedga::build_H(genus)});

    for (const auto& a : algebras) {
        cedga::SurfaceReport sr = cedga::verify_dg_algebra(a.pres);
        rep.add(a.label + ".algebra", sr.pass, string_list(sr.defects));
        std::vector<long> dims = cedga::cohomology(a.pres);
        bool dims_ok = dims.size() == 3 && dims[0] == 1 && dims[1] == 2 * genus &&
                       dims[2] == 1;
        ordered_json dj = ordered_json::array();
        for (long d : dims) dj.push_back(d);
        rep.add(a.label + ".cohomology", dims_ok, dj);
    }

    std::vector<cedga::DGMorphism> morphisms;
    morphisms.push_back(cedga::build_Phi(genus));
    morphisms.push_back(cedga::build_inclusion(genus));
    morphisms.push_back(cedga::build_PhiHat(genus));
    for (const auto& m : morphisms) {
        cedga::SurfaceReport sr = cedga::verify_dg_morphism(m);
        rep.add(m.label + ".morphism", sr.pass, string_list(sr.defects));
        rep.add(m.label + ".quasi_iso", cedga::is_quasi_iso(m),
                m.label + ": " + m.source.label + " -> " + m.target.label);
    }
}

void run_check(const std::string& path, Report& rep) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();

    cedga::DGADocument doc = [&] {
        try {
            return cedga::parse_dga(text);
        } catch (const cedga::ParseError& e) {
            ordered_json d;
            switch (e.kind()) {
                case cedga::ParseErrorKind::syntax: d["kind"] = "syntax"; break;
                case cedga::ParseErrorKind::undeclared_name:
                    d["kind"] = "undeclared_name";
                    break;
                case cedga::ParseErrorKind::duplicate_declaration:
                    d["kind"] = "duplicate_declaration";
                    break;
                case cedga::ParseErrorKind::bad_field:
                    d["kind"] = "bad_field";
                    break;
            }
            d["line"] = e.line();
            d["column"] = e.column();
            d["message"] = e.what();
            rep.add("parse", false, d);
            throw;
        }
    }();

    ordered_json pd;
    pd["generators"] = doc.dga.gens.size();
    pd["field"] = field_label(doc.dga.field);
    rep.add("parse", true, pd);

    cedga::DgaReport dr = cedga::verify_dga(doc.dga);
    rep.add("dga", dr.pass, dga_defects(dr));

    {
        const cedga::Augmentation* eps = doc.aug ? &*doc.aug : nullptr;
        std::string s1 = cedga::serialize_dga(doc.dga, eps);
        cedga::DGADocument doc2 = cedga::parse_dga(s1);
        std::string s2 =
            cedga::serialize_dga(doc2.dga, doc2.aug ? &*doc2.aug : nullptr);
        rep.add("round_trip", s1 == s2,
                s1 == s2 ? "serialize-parse-serialize is stable" : "unstable");
    }

    const FreeDGA* complex_src = &doc.dga;
    FreeDGA twisted{doc.dga.field, {}, {}};
    bool can_linearize = true;
    std::string skip_reason;
    if (doc.aug) {
        std::string why;
        bool aug_ok = cedga::verify_augmentation(doc.dga, *doc.aug, &why);
        rep.add("augmentation", aug_ok, why);
        if (aug_ok) {
            twisted = cedga::twist(doc.dga, *doc.aug);
            complex_src = &twisted;
        } else {
            can_linearize = false;
            skip_reason = "augmentation invalid";
        }
    } else {
        for (const auto& g : doc.dga.gens.all())
            if (!doc.dga.d_of(g.id).coeff({}).is_zero()) {
                can_linearize = false;
                skip_reason =
                    "differential has constant terms and no augmentation was given";
                break;
            }
    }
    if (can_linearize) {
        std::map<int, long> dims =
            cedga::homology_dims(cedga::linear_part(*complex_src));
        ordered_json table = ordered_json::object();
        for (const auto& [deg, dim] : dims) table[std::to_string(deg)] = dim;
        rep.add("homology", true, table);
    } else {
        rep.skip("homology", skip_reason);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact verification toolkit for a four-parameter family of Legendrian "
        "knot differential graded algebras"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    int p = 2, q = 2, r = 3, s = 3;
    std::string field_str = "2";
    std::string format = "text";
    int max_arity = 4;
    long samples = 0;
    uint64_t seed = 0;
    int genus = 1;
    std::string input_path;

    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--p", p, "first parameter (>= 2)");
        cmd->add_option("--q", q, "second parameter (>= 2)");
        cmd->add_option("--r", r, "third parameter (>= 2, opposite parity)");
        cmd->add_option("--s", s, "fourth parameter (>= 2, opposite parity)");
        cmd->add_option("--field", field_str, "coefficient field: a prime, or Q");
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* c_verify = app.add_subcommand(
        "verify", "check the family algebra, augmentation, and twisted table");
    add_family(c_verify);
    add_format(c_verify);

    CLI::App* c_linhom = app.add_subcommand(
        "linhom", "homology of the word-length-one part after twisting");
    add_family(c_linhom);
    add_format(c_linhom);

    CLI::App* c_dual =
        app.add_subcommand("dual", "dual algebra product table and relations");
    add_family(c_dual);
    add_format(c_dual);
    c_dual->add_option("--max-arity", max_arity, "check relations up to this arity");
    c_dual->add_option("--samples", samples, "random tuples per arity above 4");
    CLI::Option* dual_seed = c_dual->add_option("--seed", seed, "sampling seed");

    CLI::App* c_transfer = app.add_subcommand(
        "transfer", "transferred products on the retained basis");
    add_family(c_transfer);
    add_format(c_transfer);
    c_transfer->add_option("--max-arity", max_arity,
                           "transfer products up to this arity");

    CLI::App* c_obstruct = app.add_subcommand(
        "obstruct", "quasi-isomorphism obstruction onto the surface ring");
    add_family(c_obstruct);
    add_format(c_obstruct);
    CLI::Option* obstruct_samples =
        c_obstruct->add_option("--samples", samples, "random morphism candidates");
    CLI::Option* obstruct_seed =
        c_obstruct->add_option("--seed", seed, "sampling seed");

    CLI::App* c_formality = app.add_subcommand(
        "formality", "surface presentations, morphisms, and cohomology");
    add_format(c_formality);
    c_formality->add_option("--genus", genus, "surface genus (>= 1)");

    CLI::App* c_check =
        app.add_subcommand("check", "parse and verify a .dga input file");
    add_format(c_check);
    c_check->add_option("file", input_path, "input file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Report rep;
    try {
        auto family_params = [&](Report& out) {
            out.params["p"] = p;
            out.params["q"] = q;
            out.params["r"] = r;
            out.params["s"] = s;
            out.params["field"] = field_label(parse_field(field_str));
        };
        KnotParams kp{p, q, r, s};

        if (app.got_subcommand(c_verify)) {
            rep.command = "verify";
            family_params(rep);
            kp.validate();
            run_verify(kp, parse_field(field_str), rep);
        } else if (app.got_subcommand(c_linhom)) {
            rep.command = "linhom";
            family_params(rep);
            kp.validate();
            run_linhom(kp, parse_field(field_str), rep);
        } else if (app.got_subcommand(c_dual)) {
            rep.command = "dual";
            family_params(rep);
            rep.params["max_arity"] = max_arity;
            if (samples > 0) {
                if (dual_seed->count() == 0)
                    throw UsageError("--seed is required when --samples > 0");
                rep.params["samples"] = samples;
                rep.params["seed"] = seed;
            }
            if (max_arity < 1 || max_arity > 8)
                throw UsageError("--max-arity must lie in 1..8");
            kp.validate();
            run_dual(kp, parse_field(field_str), max_arity, samples, seed, rep);
        } else if (app.got_subcommand(c_transfer)) {
            rep.command = "transfer";
            family_params(rep);
            rep.params["max_arity"] = max_arity;
            if (max_arity < 2 || max_arity > 8)
                throw UsageError("--max-arity must lie in 2..8");
            kp.validate();
            run_transfer(kp, parse_field(field_str), max_arity, rep);
        } else if (app.got_subcommand(c_obstruct)) {
            rep.command = "obstruct";
            family_params(rep);
            if (obstruct_samples->count() == 0) samples = 10000;
            if (samples <= 0)
                throw UsageError("--samples must be positive");
            if (obstruct_seed->count() == 0)
                throw UsageError("--seed is required when --samples > 0");
            rep.params["samples"] = samples;
            rep.params["seed"] = seed;
            kp.validate();
            run_obstruct(kp, parse_field(field_str), samples, seed, rep);
        } else if (app.got_subcommand(c_formality)) {
            rep.command = "formality";
            if (genus < 1) throw UsageError("--genus must be at least 1");
            rep.params["genus"] = genus;
            run_formality(genus, rep);
        } else if (app.got_subcommand(c_check)) {
            rep.command = "check";
            rep.params["input"] = input_path;
            run_check(input_path, rep);
        }
    } catch (const UsageError& e) {
        std::cerr << "cedga: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "cedga: " << e.what() << "\n";
        return 2;
    } catch (const cedga::ParseError&) {
        // the failing check is already in the report; fall through to render
    } catch (const std::exception& e) {
        std::cerr << "cedga: internal error: " << e.what() << "\n";
        return 1;
    }

    if (format == "json")
        render_json(rep, std::cout);
    else
        render_text(rep, std::cout);
    return rep.all_pass() ? 0 : 1;
}
