#pragma once
// Exact scalars over a prime field F_p or over the rationals.
//
// The coefficient field is a runtime parameter: every Scalar carries its
// field tag, and binary operations reject mismatched fields.  Rational
// arithmetic is arbitrary-precision (GMP); there is no floating point
// anywhere in this library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cedga {

// Field descriptor: characteristic p >= 2 (prime), or 0 for the rationals.
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field fp(long p);

    long characteristic() const { return p_; }
    bool is_rational() const { return p_ == 0; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string name() const;

private:
    explicit Field(long p) : p_(p) {}
    long p_;
};

bool is_prime(long n);

class Scalar {
public:
    // Zero in the given field.
    explicit Scalar(const Field& f) : p_(f.characteristic()), r_(0) {}
    Scalar(const Field& f, long n);
    Scalar(const Field& f, const mpq_class& q);

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // rejects division by zero
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Defined only over the rationals / only over F_p respectively.
    const mpq_class& rational_value() const;
    long residue() const;

    // "3", "-1", "2/7", ... ; used by the serializer and the JSON layer.
    std::string str() const;

private:
    void check_same_field(const Scalar& o) const;

    long p_;        // 0 = rationals
    long r_;        // residue in [0, p) when p_ > 0
    mpq_class q_;   // value when p_ == 0
};

}  // namespace cedga
