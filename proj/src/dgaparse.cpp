#include "cedga/dgaparse.hpp"

#include <cctype>
#include <set>
#include <utility>

namespace cedga {

namespace {

std::string kind_word(ParseErrorKind k) {
    switch (k) {
        case ParseErrorKind::syntax: return "syntax error";
        case ParseErrorKind::undeclared_name: return "undeclared name";
        case ParseErrorKind::duplicate_declaration: return "duplicate declaration";
        case ParseErrorKind::bad_field: return "bad field";
    }
    return "error";
}

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// single-line scanner; a '#' terminates the visible part of the line
struct Scan {
    const std::string& line;
    int lineno;
    size_t i = 0;

    void ws() {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                   line[i] == '\r'))
            ++i;
    }
    bool at_end() {
        ws();
        return i >= line.size() || line[i] == '#';
    }
    char peek() {
        ws();
        return at_end() ? '\0' : line[i];
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    int col() const { return static_cast<int>(i) + 1; }

    [[noreturn]] void fail(ParseErrorKind kind, const std::string& msg) {
        throw ParseError(kind, lineno, col(), msg);
    }

    // empty if the next token is not a name
    std::string name() {
        if (at_end() || !is_name_start(line[i])) return {};
        size_t start = i;
        while (i < line.size() && is_name_char(line[i])) ++i;
        return line.substr(start, i - start);
    }
    std::string need_name(const std::string& what) {
        std::string n = name();
        if (n.empty()) fail(ParseErrorKind::syntax, "expected " + what);
        return n;
    }
    std::string digits() {
        ws();
        size_t start = i;
        while (i < line.size() && is_digit(line[i])) ++i;
        return line.substr(start, i - start);
    }
};

long small_int(Scan& s, const std::string& what, ParseErrorKind kind) {
    bool neg = false;
    if (s.eat('-'))
        neg = true;
    else
        s.eat('+');
    std::string ds = s.digits();
    if (ds.empty()) s.fail(kind, "expected " + what);
    mpz_class z(ds, 10);
    if (neg) z = -z;
    if (!z.fits_slong_p()) s.fail(kind, what + " out of range");
    return z.get_si();
}

// coefficient magnitude: digits, optionally '/' digits
mpq_class magnitude(Scan& s) {
    std::string num = s.digits();
    // caller guarantees a leading digit
    if (s.eat('/')) {
        std::string den = s.digits();
        if (den.empty())
            s.fail(ParseErrorKind::syntax, "expected digits after '/'");
        mpz_class dz(den, 10);
        if (dz == 0) s.fail(ParseErrorKind::syntax, "zero denominator");
        mpq_class q(mpz_class(num, 10), dz);
        q.canonicalize();
        return q;
    }
    return mpq_class(mpz_class(num, 10));
}

Scalar make_scalar(Scan& s, const Field& f, const mpq_class& q) {
    try {
        return Scalar(f, q);
    } catch (const std::invalid_argument& e) {
        s.fail(ParseErrorKind::syntax, e.what());
    }
}

int lookup_gen(Scan& s, const GenSet& gens, const std::string& nm) {
    const Generator* g = gens.find(nm);
    if (!g)
        s.fail(ParseErrorKind::undeclared_name,
               "'" + nm + "' has not been declared");
    return g->id;
}

// signed sum of terms; a term is a coefficient, a word, or coefficient*word
NCPoly expression(Scan& s, const FreeDGA& d) {
    NCPoly out = NCPoly::zero(d.field);
    bool first = true;
    while (true) {
        long sign = 1;
        if (s.eat('-'))
            sign = -1;
        else if (s.eat('+'))
            sign = 1;
        else if (!first) {
            if (s.at_end()) break;
            s.fail(ParseErrorKind::syntax, "expected '+' or '-' between terms");
        } else if (s.at_end()) {
            s.fail(ParseErrorKind::syntax, "expected an expression");
        }

        mpq_class mag(1);
        Word w;
        if (is_digit(s.peek())) {
            mag = magnitude(s);
        } else {
            std::string nm = s.name();
            if (nm.empty())
                s.fail(ParseErrorKind::syntax,
                       "expected a coefficient or generator name");
            w.push_back(lookup_gen(s, d.gens, nm));
        }
        while (s.eat('*')) {
            std::string nm = s.need_name("generator name after '*'");
            w.push_back(lookup_gen(s, d.gens, nm));
        }
        out.add_term(w, make_scalar(s, d.field, sign < 0 ? mpq_class(-mag) : mag));
        first = false;
    }
    return out;
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, int line, int column,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + kind_word(kind) +
                         ": " + message),
      kind_(kind),
      line_(line),
      column_(column) {}

DGADocument parse_dga(const std::string& text) {
    std::optional<FreeDGA> dga;
    std::optional<Augmentation> aug;
    std::set<int> diff_seen;
    std::set<int> aug_seen;

    int lineno = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line = text.substr(
            pos, nl == std::string::npos ? std::string::npos : nl - pos);
        ++lineno;
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;

        Scan s{line, lineno};
        if (s.at_end()) continue;
        int dir_col = s.col();
        std::string dir = s.name();
        if (dir.empty())
            s.fail(ParseErrorKind::syntax, "expected a directive");

        if (dir == "field") {
            if (dga)
                throw ParseError(ParseErrorKind::duplicate_declaration, lineno,
                                 dir_col, "the field was already declared");
            if (s.peek() == 'Q') {
                std::string q = s.name();
                if (q != "Q")
                    s.fail(ParseErrorKind::bad_field,
                           "expected a prime or 'Q', got '" + q + "'");
                dga.emplace(FreeDGA{Field::rationals(), GenSet{}, Derivation{}});
            } else {
                int mod_col = s.col();
                long p = small_int(s, "a field modulus", ParseErrorKind::bad_field);
                if (!is_prime(p))
                    throw ParseError(ParseErrorKind::bad_field, lineno, mod_col,
                                     std::to_string(p) + " is not prime");
                dga.emplace(FreeDGA{Field::fp(p), GenSet{}, Derivation{}});
            }
        } else if (dir == "gen") {
            if (!dga)
                s.fail(ParseErrorKind::syntax,
                       "the field must be declared before any generator");
            int name_col = s.col();
            std::string nm = s.need_name("a generator name");
            if (dga->gens.find(nm))
                throw ParseError(ParseErrorKind::duplicate_declaration, lineno,
                                 name_col, "'" + nm + "' was already declared");
            if (!s.eat(':'))
                s.fail(ParseErrorKind::syntax, "expected ':' after the name");
            long deg = small_int(s, "a degree", ParseErrorKind::syntax);
            if (deg < -1000000 || deg > 1000000)
                s.fail(ParseErrorKind::syntax, "degree out of range");
            dga->gens.add(nm, static_cast<int>(deg));
        } else if (dir == "diff") {
            if (!dga)
                s.fail(ParseErrorKind::syntax,
                       "the field must be declared before any differential");
            int name_col = s.col();
            std::string nm = s.need_name("a generator name");
            int id = lookup_gen(s, dga->gens, nm);
            if (!diff_seen.insert(id).second)
                throw ParseError(ParseErrorKind::duplicate_declaration, lineno,
                                 name_col,
                                 "'" + nm + "' already has a differential");
            if (!s.eat('='))
                s.fail(ParseErrorKind::syntax, "expected '=' after the name");
            NCPoly img = expression(s, *dga);
            if (!img.is_zero()) dga->diff.images.insert_or_assign(id, std::move(img));
        } else if (dir == "aug") {
            if (!dga)
                s.fail(ParseErrorKind::syntax,
                       "the field must be declared before any augmentation");
            int name_col = s.col();
            std::string nm = s.need_name("a generator name");
            int id = lookup_gen(s, dga->gens, nm);
            if (!aug_seen.insert(id).second)
                throw ParseError(ParseErrorKind::duplicate_declaration, lineno,
                                 name_col,
                                 "'" + nm + "' already has an augmentation value");
            if (!s.eat('='))
                s.fail(ParseErrorKind::syntax, "expected '=' after the name");
            long sign = 1;
            if (s.eat('-'))
                sign = -1;
            else
                s.eat('+');
            if (!is_digit(s.peek()))
                s.fail(ParseErrorKind::syntax, "expected a scalar");
            mpq_class mag = magnitude(s);
            if (!aug) aug.emplace();
            aug->values.insert_or_assign(
                id, make_scalar(s, dga->field,
                                sign < 0 ? mpq_class(-mag) : mag));
        } else {
            throw ParseError(ParseErrorKind::syntax, lineno, dir_col,
                             "unknown directive '" + dir + "'");
        }

        if (!s.at_end())
            s.fail(ParseErrorKind::syntax, "unexpected trailing input");
    }

    if (!dga)
        throw ParseError(ParseErrorKind::syntax, lineno ? lineno : 1, 1,
                         "missing 'field' declaration");
    return DGADocument{std::move(*dga), std::move(aug)};
}

namespace {

std::string expr_str(const GenSet& gens, const NCPoly& x) {
    std::string s;
    for (const auto& [w, c] : x.terms()) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (w.empty()) {
            s += mag;
        } else {
            if (mag != "1") s += mag + "*";
            for (size_t k = 0; k < w.size(); ++k) {
                if (k) s += "*";
                s += gens.at(w[k]).name;
            }
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string serialize_dga(const FreeDGA& d, const Augmentation* eps) {
    std::string out = "field ";
    out += d.field.is_rational() ? "Q" : std::to_string(d.field.characteristic());
    out += "\n";
    for (const Generator& g : d.gens.all())
        out += "gen " + g.name + " : " + std::to_string(g.degree) + "\n";
    for (const Generator& g : d.gens.all()) {
        auto it = d.diff.images.find(g.id);
        if (it == d.diff.images.end() || it->second.is_zero()) continue;
        out += "diff " + g.name + " = " + expr_str(d.gens, it->second) + "\n";
    }
    if (eps)
        for (const Generator& g : d.gens.all()) {
            auto it = eps->values.find(g.id);
            if (it == eps->values.end()) continue;
            out += "aug " + g.name + " = " + it->second.str() + "\n";
        }
    return out;
}

}  // namespace cedga
