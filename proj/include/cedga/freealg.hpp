#pragma once
// The free graded unital associative algebra on a finite generator set:
// words, noncommutative polynomials, graded derivations, algebra maps.
//
// Canonical form: an NCPoly is a sorted association list word -> nonzero
// coefficient, words ordered by length then lexicographically by generator
// id.  All operations return canonical forms, so equality is structural.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cedga/scalar.hpp"

namespace cedga {

struct Generator {
    int id;            // index into the owning GenSet
    std::string name;  // display name, unique within the set
    int degree;        // any integer, negatives allowed
};

// The generator universe of one free algebra; ids are dense indices.
class GenSet {
public:
    int add(const std::string& name, int degree);
    int size() const { return static_cast<int>(gens_.size()); }
    const Generator& at(int id) const;
    const Generator* find(const std::string& name) const;
    int require(const std::string& name) const;  // throws on unknown name
    const std::vector<Generator>& all() const { return gens_; }

private:
    std::vector<Generator> gens_;
    std::map<std::string, int> by_name_;
};

// A word is a finite sequence of generator ids; empty = the unit.
using Word = std::vector<int>;

int word_degree(const GenSet& gens, const Word& w);
std::string word_str(const GenSet& gens, const Word& w);

// length-then-lexicographic; the canonical term order.
bool word_less(const Word& a, const Word& b);

class NCPoly {
public:
    explicit NCPoly(const Field& f) : field_(f) {}
    static NCPoly zero(const Field& f) { return NCPoly(f); }
    static NCPoly unit(const Field& f) { return constant(Scalar::one(f)); }
    static NCPoly constant(const Scalar& c);
    static NCPoly generator(const Field& f, int id);
    static NCPoly monomial(const Scalar& c, const Word& w);

    const Field& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<std::pair<Word, Scalar>>& terms() const { return terms_; }

    // Coefficient of a word (zero scalar if absent).
    Scalar coeff(const Word& w) const;

    void add_term(const Word& w, const Scalar& c);  // keeps canonical form

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly scaled(const Scalar& c) const;

    bool operator==(const NCPoly& o) const;
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    // Set of degrees of the words present (constants contribute 0).
    std::set<int> degrees(const GenSet& gens) const;
    // Common degree if homogeneous (the zero polynomial is homogeneous of
    // every degree and reports nullopt).
    std::optional<int> homogeneous_degree(const GenSet& gens) const;

    std::string str(const GenSet& gens) const;

private:
    Field field_;
    std::vector<std::pair<Word, Scalar>> terms_;  // canonical: sorted, nonzero
};

// Bilinear concatenation product; rejects mismatched fields.
NCPoly multiply(const NCPoly& a, const NCPoly& b);

// A degree-shifting map determined on generators and extended by the graded
// Leibniz rule D(xy) = D(x) y + (-1)^{|x|} x D(y); D(1) = 0.
struct Derivation {
    std::map<int, NCPoly> images;  // generator id -> image (missing = zero)
    int shift = -1;

    const NCPoly* image(int id) const;
};

NCPoly apply_derivation(const GenSet& gens, const Derivation& d, const NCPoly& x);

// A unital multiplicative map determined on generators.
struct AlgebraMap {
    std::map<int, NCPoly> images;  // missing id = identity on that generator

    const NCPoly* image(int id) const;
};

NCPoly apply_algebra_map(const GenSet& gens, const Field& f, const AlgebraMap& m,
                         const NCPoly& x);

}  // namespace cedga
