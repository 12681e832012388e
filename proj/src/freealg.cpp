#include "cedga/freealg.hpp"

#include <algorithm>
#include <sstream>

namespace cedga {

int GenSet::add(const std::string& name, int degree) {
    if (by_name_.count(name))
        throw std::invalid_argument("duplicate generator name: " + name);
    int id = size();
    gens_.push_back({id, name, degree});
    by_name_[name] = id;
    return id;
}

const Generator& GenSet::at(int id) const {
    if (id < 0 || id >= size())
        throw std::out_of_range("generator id " + std::to_string(id));
    return gens_[static_cast<size_t>(id)];
}

const Generator* GenSet::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : &gens_[static_cast<size_t>(it->second)];
}

int GenSet::require(const std::string& name) const {
    const Generator* g = find(name);
    if (!g) throw std::invalid_argument("unknown generator: " + name);
    return g->id;
}

int word_degree(const GenSet& gens, const Word& w) {
    int d = 0;
    for (int id : w) d += gens.at(id).degree;
    return d;
}

std::string word_str(const GenSet& gens, const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += "*";
        s += gens.at(w[i]).name;
    }
    return s;
}

bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

NCPoly NCPoly::constant(const Scalar& c) {
    NCPoly out(c.field());
    out.add_term({}, c);
    return out;
}

NCPoly NCPoly::generator(const Field& f, int id) {
    NCPoly out(f);
    out.add_term({id}, Scalar::one(f));
    return out;
}

NCPoly NCPoly::monomial(const Scalar& c, const Word& w) {
    NCPoly out(c.field());
    out.add_term(w, c);
    return out;
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), w,
        [](const std::pair<Word, Scalar>& t, const Word& key) {
            return word_less(t.first, key);
        });
    if (it != terms_.end() && it->first == w) return it->second;
    return Scalar::zero(field_);
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (field_ != c.field())
        throw std::invalid_argument("field mismatch: " + field_.name() + " vs " +
                                    c.field().name());
    if (c.is_zero()) return;
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), w,
        [](const std::pair<Word, Scalar>& t, const Word& key) {
            return word_less(t.first, key);
        });
    if (it != terms_.end() && it->first == w) {
        Scalar s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    } else {
        terms_.insert(it, {w, c});
    }
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    if (field_ != o.field_)
        throw std::invalid_argument("field mismatch: " + field_.name() + " vs " +
                                    o.field_.name());
    NCPoly out = *this;
    for (const auto& [w, c] : o.terms_) out.add_term(w, c);
    return out;
}

NCPoly NCPoly::operator-() const {
    NCPoly out(field_);
    out.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) out.terms_.push_back({w, -c});
    return out;
}

NCPoly NCPoly::operator-(const NCPoly& o) const { return *this + (-o); }

NCPoly NCPoly::scaled(const Scalar& c) const {
    if (field_ != c.field())
        throw std::invalid_argument("field mismatch: " + field_.name() + " vs " +
                                    c.field().name());
    NCPoly out(field_);
    if (c.is_zero()) return out;
    out.terms_.reserve(terms_.size());
    for (const auto& [w, k] : terms_) out.terms_.push_back({w, k * c});
    return out;
}

bool NCPoly::operator==(const NCPoly& o) const {
    if (field_ != o.field_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first ||
            terms_[i].second != o.terms_[i].second)
            return false;
    return true;
}

std::set<int> NCPoly::degrees(const GenSet& gens) const {
    std::set<int> out;
    for (const auto& [w, c] : terms_) out.insert(word_degree(gens, w));
    return out;
}

std::optional<int> NCPoly::homogeneous_degree(const GenSet& gens) const {
    std::set<int> ds = degrees(gens);
    if (ds.size() == 1) return *ds.begin();
    return std::nullopt;
}

std::string NCPoly::str(const GenSet& gens) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::string mag = neg ? cs.substr(1) : cs;
        if (w.empty())
            os << mag;
        else if (mag == "1")
            os << word_str(gens, w);
        else
            os << mag << "*" << word_str(gens, w);
    }
    return os.str();
}

NCPoly multiply(const NCPoly& a, const NCPoly& b) {
    if (a.field() != b.field())
        throw std::invalid_argument("field mismatch: " + a.field().name() +
                                    " vs " + b.field().name());
    NCPoly out(a.field());
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, ca * cb);
        }
    }
    return out;
}

const NCPoly* Derivation::image(int id) const {
    auto it = images.find(id);
    return it == images.end() ? nullptr : &it->second;
}

NCPoly apply_derivation(const GenSet& gens, const Derivation& d, const NCPoly& x) {
    const Field f = x.field();
    NCPoly out(f);
    for (const auto& [w, c] : x.terms()) {
        // D(g_1 ... g_k) = sum_i (-1)^{|g_1...g_{i-1}|} g_1...g_{i-1} D(g_i) g_{i+1}...g_k
        int prefix_degree = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            const NCPoly* dg = d.image(w[i]);
            if (dg) {
                if (dg->field() != f)
                    throw std::invalid_argument("field mismatch in derivation image");
                Scalar sign = prefix_degree % 2 == 0 ? Scalar::one(f)
                                                     : -Scalar::one(f);
                for (const auto& [wm, cm] : dg->terms()) {
                    Word full(w.begin(), w.begin() + static_cast<long>(i));
                    full.insert(full.end(), wm.begin(), wm.end());
                    full.insert(full.end(), w.begin() + static_cast<long>(i) + 1,
                                w.end());
                    out.add_term(full, c * cm * sign);
                }
            }
            prefix_degree += gens.at(w[i]).degree;
        }
    }
    return out;
}

const NCPoly* AlgebraMap::image(int id) const {
    auto it = images.find(id);
    return it == images.end() ? nullptr : &it->second;
}

NCPoly apply_algebra_map(const GenSet& gens, const Field& f, const AlgebraMap& m,
                         const NCPoly& x) {
    if (x.field() != f)
        throw std::invalid_argument("field mismatch in algebra map argument");
    NCPoly out(f);
    for (const auto& [w, c] : x.terms()) {
        NCPoly acc = NCPoly::constant(c);
        for (int id : w) {
            gens.at(id);  // range check: unknown ids are rejected
            const NCPoly* img = m.image(id);
            acc = img ? multiply(acc, *img)
                      : multiply(acc, NCPoly::generator(f, id));
        }
        out = out + acc;
    }
    return out;
}

}  // namespace cedga
