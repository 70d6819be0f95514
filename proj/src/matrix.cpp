#include "gorenstein/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "gorenstein/errors.hpp"

namespace gorenstein {

ExactMatrix::ExactMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

ExactMatrix ExactMatrix::identity(Field f, std::size_t n) {
    ExactMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExactMatrix ExactMatrix::select(const std::vector<std::size_t>& rows,
                                const std::vector<std::size_t>& cols) const {
    ExactMatrix s(field_, rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
    return s;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix product: dimension mismatch");
    if (!(a.field() == b.field())) throw InputError("matrix product: field mismatch");
    ExactMatrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

namespace {

// ---- F_p fast path ---------------------------------------------------------

struct ModMatrix {
    std::uint64_t p;
    std::size_t rows, cols;
    std::vector<std::uint64_t> a;

    explicit ModMatrix(const ExactMatrix& m)
        : p(m.field().characteristic()), rows(m.rows()), cols(m.cols()), a(rows * cols) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m(r, c).residue();
    }
    std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        for (std::size_t c = 0; c < cols; ++c) std::swap(at(r1, c), at(r2, c));
    }

    /// In-place reduced row echelon form; returns pivot columns.
    /// When `det` is non-null, accumulates the determinant of the leading
    /// square part (only meaningful for square input).
    std::vector<std::size_t> rref(std::uint64_t* det = nullptr, bool reduce_above = true) {
        std::vector<std::size_t> pivots;
        std::size_t r = 0;
        std::uint64_t d = 1;
        for (std::size_t c = 0; c < cols && r < rows; ++c) {
            std::size_t piv = r;
            while (piv < rows && at(piv, c) == 0) ++piv;
            if (piv == rows) {
                d = 0;
                continue;
            }
            if (piv != r) {
                swap_rows(piv, r);
                d = modp::sub(0, d, p);
            }
            const std::uint64_t pv = at(r, c);
            d = modp::mul(d, pv, p);
            const std::uint64_t inv = modp::inv(pv, p);
            for (std::size_t j = c; j < cols; ++j) at(r, j) = modp::mul(at(r, j), inv, p);
            for (std::size_t i = reduce_above ? 0 : r + 1; i < rows; ++i) {
                if (i == r || at(i, c) == 0) continue;
                const std::uint64_t f = at(i, c);
                for (std::size_t j = c; j < cols; ++j)
                    if (at(r, j) != 0) at(i, j) = modp::sub(at(i, j), modp::mul(f, at(r, j), p), p);
            }
            pivots.push_back(c);
            ++r;
        }
        if (det) *det = pivots.size() == rows && rows == cols ? d : 0;
        return pivots;
    }
};

// ---- Q path ----------------------------------------------------------------

std::vector<std::vector<mpz_class>> integer_rows(const ExactMatrix& m) {
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpz_class& den = m(r, c).rational().get_den();
            if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpq_class& q = m(r, c).rational();
            out[r][c] = q.get_num() * (l / q.get_den());
        }
    }
    return out;
}

// Fraction-free elimination; every intermediate entry is a minor of the
// input, so the division by the previous pivot is exact.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

// Generic reduced row echelon form through Scalar arithmetic.
std::vector<std::size_t> scalar_rref(ExactMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
        const Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

ExactMatrix from_mod(const ModMatrix& mm, const Field& f) {
    ExactMatrix out(f, mm.rows, mm.cols);
    for (std::size_t r = 0; r < mm.rows; ++r)
        for (std::size_t c = 0; c < mm.cols; ++c) out(r, c) = Scalar::from_residue(f, mm.a[r * mm.cols + c]);
    return out;
}

/// RREF in either field, returning the reduced matrix and its pivots.
std::pair<ExactMatrix, std::vector<std::size_t>> rref(const ExactMatrix& m) {
    if (m.field().is_prime()) {
        ModMatrix mm(m);
        auto piv = mm.rref();
        return {from_mod(mm, m.field()), std::move(piv)};
    }
    ExactMatrix copy = m;
    auto piv = scalar_rref(copy);
    return {std::move(copy), std::move(piv)};
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.field().is_prime()) {
        ModMatrix mm(m);
        return mm.rref(nullptr, false).size();
    }
    return bareiss_rank(integer_rows(m), m.cols());
}

Scalar determinant(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
    const Field& f = m.field();
    if (m.rows() == 0) return Scalar(f, 1);
    if (f.is_prime()) {
        ModMatrix mm(m);
        std::uint64_t d = 0;
        mm.rref(&d, false);
        return Scalar::from_residue(f, d);
    }
    // Bareiss on the scaled integer matrix, then undo the row scaling.
    const std::size_t n = m.rows();
    mpq_class scale = 1;
    for (std::size_t r = 0; r < n; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < n; ++c) {
            const mpz_class& den = m(r, c).rational().get_den();
            if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        }
        scale *= l;
    }
    auto a = integer_rows(m);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return Scalar(f);
        if (piv != k) {
            std::swap(a[piv], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpq_class det(prev * sign);
    det /= scale;
    det.canonicalize();
    return Scalar(f, det.get_num(), det.get_den());
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    ExactMatrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar(m.field(), 1);
    }
    auto [red, piv] = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw InputError("matrix is singular");
    std::vector<std::size_t> rows(n), cols(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = i;
        cols[i] = n + i;
    }
    return red.select(rows, cols);
}

std::vector<std::vector<Scalar>> kernel(const ExactMatrix& m) {
    auto [red, piv] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(m.cols(), Scalar(m.field()));
        v[free] = Scalar(m.field(), 1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -red(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> pivot_columns(const ExactMatrix& m) { return rref(m).second; }

std::vector<std::size_t> greedy_independent_rows(const ExactMatrix& m) {
    return pivot_columns(m.transpose());
}

}  // namespace gorenstein
