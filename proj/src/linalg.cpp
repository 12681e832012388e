#include "cedga/linalg.hpp"

namespace cedga {

namespace {

size_t rank_fp(const DenseMatrix& m) {
    const long p = m.field().characteristic();
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c).residue();

    size_t rk = 0;
    for (size_t col = 0; col < cols && rk < rows; ++col) {
        size_t piv = rk;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rk]);
        // normalize pivot row
        long inv = Scalar(Field::fp(p), a[rk][col]).inverse().residue();
        for (size_t c = col; c < cols; ++c) a[rk][c] = a[rk][c] * inv % p;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rk || a[r][col] == 0) continue;
            long f = a[r][col];
            for (size_t c = col; c < cols; ++c)
                a[r][c] = ((a[r][c] - f * a[rk][c]) % p + p) % p;
        }
        ++rk;
    }
    return rk;
}

// Bareiss fraction-free elimination over the integers.
size_t rank_bareiss(std::vector<std::vector<mpz_class>>& a) {
    const size_t rows = a.size();
    if (rows == 0) return 0;
    const size_t cols = a[0].size();
    mpz_class prev(1);
    size_t rk = 0;
    for (size_t col = 0; col < cols && rk < rows; ++col) {
        size_t piv = rk;
        while (piv < rows && a[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rk]);
        for (size_t r = rk + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                a[r][c] = (a[rk][col] * a[r][c] - a[r][col] * a[rk][c]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rk][col];
        ++rk;
    }
    return rk;
}

size_t rank_rational(const DenseMatrix& m) {
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (size_t r = 0; r < rows; ++r) {
        // clear the row's denominators; row scaling preserves rank
        mpz_class lcm(1);
        for (size_t c = 0; c < cols; ++c)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                    m.at(r, c).rational_value().get_den().get_mpz_t());
        for (size_t c = 0; c < cols; ++c) {
            const mpq_class& q = m.at(r, c).rational_value();
            a[r][c] = q.get_num() * (lcm / q.get_den());
        }
    }
    return rank_bareiss(a);
}

}  // namespace

size_t rank(const DenseMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return m.field().is_rational() ? rank_rational(m) : rank_fp(m);
}

bool composes_to_zero(const DenseMatrix& b, const DenseMatrix& a) {
    if (a.rows() != b.cols())
        throw std::invalid_argument("composition shape mismatch");
    const Field& f = a.field();
    for (size_t i = 0; i < b.rows(); ++i) {
        for (size_t j = 0; j < a.cols(); ++j) {
            Scalar s = Scalar::zero(f);
            for (size_t k = 0; k < a.rows(); ++k)
                s = s + b.at(i, k) * a.at(k, j);
            if (!s.is_zero()) return false;
        }
    }
    return true;
}

}  // namespace cedga
