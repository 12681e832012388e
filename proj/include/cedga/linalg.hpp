#pragma once
// Exact dense linear algebra: rank over F_p by Gaussian elimination and over
// the rationals by fraction-free (Bareiss) elimination on the integer matrix
// obtained by clearing row denominators.

#include <vector>

#include "cedga/scalar.hpp"

namespace cedga {

class DenseMatrix {
public:
    DenseMatrix(const Field& f, size_t rows, size_t cols)
        : field_(f), rows_(rows), cols_(cols),
          a_(rows * cols, Scalar::zero(f)) {}

    const Field& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

private:
    Field field_;
    size_t rows_, cols_;
    std::vector<Scalar> a_;
};

size_t rank(const DenseMatrix& m);

// rows(b) composed after a must vanish: checks a then b compose to zero,
// i.e. b*a = 0 as linear maps (a: X -> Y given by columns, b: Y -> Z).
bool composes_to_zero(const DenseMatrix& b, const DenseMatrix& a);

}  // namespace cedga
