#include "cedga/scalar.hpp"

#include <sstream>

namespace cedga {

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::fp(long p) {
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime, got " +
                                    std::to_string(p));
    return Field(p);
}

std::string Field::name() const {
    return p_ == 0 ? std::string("Q") : "F" + std::to_string(p_);
}

namespace {
long mod_reduce(long n, long p) {
    long r = n % p;
    return r < 0 ? r + p : r;
}

// Extended Euclid; p prime, 0 < a < p.
long mod_inverse(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod_reduce(t, p);
}
}  // namespace

Scalar::Scalar(const Field& f, long n) : p_(f.characteristic()), r_(0) {
    if (p_ == 0)
        q_ = n;
    else
        r_ = mod_reduce(n, p_);
}

Scalar::Scalar(const Field& f, const mpq_class& q) : p_(f.characteristic()), r_(0) {
    if (p_ == 0) {
        q_ = q;
        q_.canonicalize();
    } else {
        // num/den mod p; den must be invertible.
        mpz_class pz(p_);
        mpz_class num = q.get_num() % pz;
        mpz_class den = q.get_den() % pz;
        if (den == 0)
            throw std::invalid_argument("denominator not invertible mod " +
                                        std::to_string(p_));
        long n = mod_reduce(num.get_si(), p_);
        long d = mod_reduce(den.get_si(), p_);
        r_ = (n * mod_inverse(d, p_)) % p_;
    }
}

Field Scalar::field() const {
    return p_ == 0 ? Field::rationals() : Field::fp(p_);
}

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw std::invalid_argument("field mismatch: " + field().name() + " vs " +
                                    o.field().name());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar out(field());
    if (p_ == 0)
        out.q_ = q_ + o.q_;
    else
        out.r_ = (r_ + o.r_) % p_;
    return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar out(field());
    if (p_ == 0)
        out.q_ = q_ * o.q_;
    else
        out.r_ = (r_ * o.r_) % p_;
    return out;
}

Scalar Scalar::operator-() const {
    Scalar out(field());
    if (p_ == 0)
        out.q_ = -q_;
    else
        out.r_ = r_ == 0 ? 0 : p_ - r_;
    return out;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar out(field());
    if (p_ == 0)
        out.q_ = 1 / q_;
    else
        out.r_ = mod_inverse(r_, p_);
    return out;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

const mpq_class& Scalar::rational_value() const {
    if (p_ != 0) throw std::logic_error("rational_value() on an F_p scalar");
    return q_;
}

long Scalar::residue() const {
    if (p_ == 0) throw std::logic_error("residue() on a rational scalar");
    return r_;
}

std::string Scalar::str() const {
    if (p_ == 0) {
        std::ostringstream os;
        os << q_;
        return os.str();
    }
    return std::to_string(r_);
}

}  // namespace cedga
