#ifndef TRICOVER_LINALG_HPP
#define TRICOVER_LINALG_HPP

// Small dense complex matrices (nothing here exceeds 8x8) with the handful of
// operations the period geometry needs: products, conjugate transpose,
// Gaussian inverse, Hermitian LDL pivots, and a Jacobi eigenvalue sweep for
// trustworthy smallest-eigenvalue estimates.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "tricover/errors.hpp"

namespace tricover {

using cdouble = std::complex<double>;

class CMat {
public:
    CMat() : rows_(0), cols_(0) {}
    CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static CMat identity(int n) {
        CMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static CMat diag(const std::vector<cdouble>& d) {
        CMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
        for (std::size_t i = 0; i < d.size(); ++i) m(static_cast<int>(i), static_cast<int>(i)) = d[i];
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    cdouble& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cdouble& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    bool all_finite() const {
        for (const auto& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }

    friend CMat operator+(const CMat& a, const CMat& b) {
        check_same(a, b);
        CMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend CMat operator-(const CMat& a, const CMat& b) {
        check_same(a, b);
        CMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    friend CMat operator*(const CMat& a, const CMat& b) {
        if (a.cols_ != b.rows_) throw input_error("CMat: shape mismatch in product");
        CMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                cdouble aik = a(i, k);
                if (aik == cdouble(0.0)) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend CMat operator*(cdouble s, const CMat& a) {
        CMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = s * a.a_[k];
        return r;
    }

    CMat transpose() const {
        CMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    CMat conj() const {
        CMat r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = std::conj(a_[k]);
        return r;
    }
    CMat conj_transpose() const { return conj().transpose(); }

    CMat real_part() const {
        CMat r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].real();
        return r;
    }
    CMat imag_part() const {
        CMat r(rows_, cols_);
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].imag();
        return r;
    }

    double max_abs() const {
        double m = 0;
        for (const auto& z : a_) m = std::max(m, std::abs(z));
        return m;
    }

    // Gaussian elimination with partial pivoting; throws degeneracy_error when
    // the pivot falls below a scale-relative floor.
    CMat inverse() const {
        if (rows_ != cols_) throw input_error("CMat: inverse of non-square");
        int n = rows_;
        CMat a = *this, inv = identity(n);
        double scale = std::max(max_abs(), 1e-300);
        for (int col = 0; col < n; ++col) {
            int piv = col;
            for (int r = col + 1; r < n; ++r)
                if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
            if (std::abs(a(piv, col)) < 1e-14 * scale)
                throw degeneracy_error("CMat: numerically singular matrix");
            if (piv != col) {
                for (int j = 0; j < n; ++j) { std::swap(a(col, j), a(piv, j)); std::swap(inv(col, j), inv(piv, j)); }
            }
            cdouble d = a(col, col);
            for (int j = 0; j < n; ++j) { a(col, j) /= d; inv(col, j) /= d; }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                cdouble f = a(r, col);
                if (f == cdouble(0.0)) continue;
                for (int j = 0; j < n; ++j) { a(r, j) -= f * a(col, j); inv(r, j) -= f * inv(col, j); }
            }
        }
        return inv;
    }

    cdouble det() const {
        if (rows_ != cols_) throw input_error("CMat: det of non-square");
        int n = rows_;
        CMat a = *this;
        cdouble d = 1.0;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            for (int r = col + 1; r < n; ++r)
                if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
            if (a(piv, col) == cdouble(0.0)) return 0.0;
            if (piv != col) {
                for (int j = col; j < n; ++j) std::swap(a(col, j), a(piv, j));
                d = -d;
            }
            d *= a(col, col);
            for (int r = col + 1; r < n; ++r) {
                cdouble f = a(r, col) / a(col, col);
                for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            }
        }
        return d;
    }

private:
    int rows_, cols_;
    std::vector<cdouble> a_;
    static void check_same(const CMat& a, const CMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("CMat: shape mismatch");
    }
};

using CVec = std::vector<cdouble>;

inline CMat column(const CVec& v) {
    CMat m(static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i];
    return m;
}

inline double hermitian_defect(const CMat& m) {
    return (m - m.conj_transpose()).max_abs();
}

inline double symmetry_defect(const CMat& m) {
    return (m - m.transpose()).max_abs();
}

struct EigenResult {
    std::vector<double> values; // ascending
};

// Cyclic Jacobi for Hermitian matrices; plenty for n <= 8.
inline EigenResult hermitian_eigenvalues(CMat m) {
    if (m.rows() != m.cols()) throw input_error("hermitian_eigenvalues: non-square");
    int n = m.rows();
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(m(p, q));
        if (off < 1e-30 * std::max(1.0, m.max_abs() * m.max_abs())) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                cdouble b = m(p, q);
                double g = std::abs(b);
                if (g == 0.0) continue;
                double app = m(p, p).real(), aqq = m(q, q).real();
                // With b = |b| e^{i phi}, conjugating by
                //   U = [[c, -s e^{i phi}], [s e^{-i phi}, c]]
                // kills the (p,q) entry when tan(2 theta) = 2|b| / (a_pp - a_qq).
                cdouble phase = b / g;
                double theta = 0.5 * std::atan2(2 * g, app - aqq);
                double c = std::cos(theta), s = std::sin(theta);
                // columns: A <- A U
                for (int k = 0; k < n; ++k) {
                    cdouble mkp = m(k, p), mkq = m(k, q);
                    m(k, p) = c * mkp + s * std::conj(phase) * mkq;
                    m(k, q) = -s * phase * mkp + c * mkq;
                }
                // rows: A <- U^dagger A
                for (int k = 0; k < n; ++k) {
                    cdouble mpk = m(p, k), mqk = m(q, k);
                    m(p, k) = c * mpk + s * phase * mqk;
                    m(q, k) = -s * std::conj(phase) * mpk + c * mqk;
                }
            }
    }
    EigenResult r;
    r.values.resize(n);
    for (int i = 0; i < n; ++i) r.values[i] = m(i, i).real();
    std::sort(r.values.begin(), r.values.end());
    return r;
}

} // namespace tricover

#endif
