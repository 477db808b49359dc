#ifndef TRICOVER_EISENSTEIN_HPP
#define TRICOVER_EISENSTEIN_HPP

// Exact arithmetic over the Eisenstein integers Z[w], w = (-1+sqrt(-3))/2,
// together with small dense matrices over Z[w] and over its fraction field
// (kept as an integer matrix plus a common positive denominator).

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricover/bigint.hpp"

namespace tricover {

using cdouble = std::complex<double>;

inline const cdouble kOmega{-0.5, 0.8660254037844386467637231707529362};  // w = exp(2*pi*i/3)
inline const cdouble kZeta = -kOmega * kOmega;                            // zeta = -w^2 = exp(i*pi/3)

// u + v*w with w^2 = -1 - w.
class Eisenstein {
public:
    Eisenstein() : u_(0), v_(0) {}
    Eisenstein(BigInt u, BigInt v) : u_(std::move(u)), v_(std::move(v)) {}
    Eisenstein(std::int64_t u, std::int64_t v = 0) : u_(u), v_(v) {}

    static Eisenstein omega() { return Eisenstein(0, 1); }
    static Eisenstein omega2() { return Eisenstein(-1, -1); } // w^2 = -1 - w
    static Eisenstein zeta() { return Eisenstein(1, 1); }     // -w^2

    const BigInt& u() const { return u_; }
    const BigInt& v() const { return v_; }
    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }

    friend Eisenstein operator+(const Eisenstein& a, const Eisenstein& b) {
        return Eisenstein(a.u_ + b.u_, a.v_ + b.v_);
    }
    friend Eisenstein operator-(const Eisenstein& a, const Eisenstein& b) {
        return Eisenstein(a.u_ - b.u_, a.v_ - b.v_);
    }
    friend Eisenstein operator-(const Eisenstein& a) { return Eisenstein(-a.u_, -a.v_); }
    // (u1 + v1 w)(u2 + v2 w) = u1u2 - v1v2 + (u1v2 + v1u2 - v1v2) w
    friend Eisenstein operator*(const Eisenstein& a, const Eisenstein& b) {
        BigInt vv = a.v_ * b.v_;
        return Eisenstein(a.u_ * b.u_ - vv, a.u_ * b.v_ + a.v_ * b.u_ - vv);
    }
    Eisenstein& operator+=(const Eisenstein& b) { *this = *this + b; return *this; }
    Eisenstein& operator-=(const Eisenstein& b) { *this = *this - b; return *this; }
    Eisenstein& operator*=(const Eisenstein& b) { *this = *this * b; return *this; }

    friend bool operator==(const Eisenstein& a, const Eisenstein& b) {
        return a.u_ == b.u_ && a.v_ == b.v_;
    }
    friend bool operator!=(const Eisenstein& a, const Eisenstein& b) { return !(a == b); }

    // complex conjugate: conj(w) = w^2, so conj(u + v w) = (u - v) - v w
    Eisenstein conj() const { return Eisenstein(u_ - v_, -v_); }

    BigInt norm() const { return u_ * u_ - u_ * v_ + v_ * v_; } // u^2 - uv + v^2 >= 0

    // Z[w]/(1-w) = F_3 via w -> 1; divisible iff u + v = 0 mod 3.
    bool divisible_by_one_minus_omega() const {
        std::uint32_t rem = 0;
        abs(u_ + v_).divmod_small(3, rem);
        return rem == 0;
    }

    cdouble to_complex() const { return cdouble(u_.to_double(), 0.0) + cdouble(v_.to_double(), 0.0) * kOmega; }

    std::string to_string() const {
        if (v_.is_zero()) return u_.to_string();
        return u_.to_string() + (v_.is_negative() ? "" : "+") + v_.to_string() + "w";
    }

private:
    BigInt u_, v_;
};

// Dense matrix over Z[w].
class EisMat {
public:
    EisMat() : rows_(0), cols_(0) {}
    EisMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static EisMat identity(int n) {
        EisMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Eisenstein(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Eisenstein& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Eisenstein& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend EisMat operator+(const EisMat& a, const EisMat& b) {
        check_same(a, b);
        EisMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend EisMat operator-(const EisMat& a, const EisMat& b) {
        check_same(a, b);
        EisMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    friend EisMat operator*(const EisMat& a, const EisMat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("EisMat: shape mismatch");
        EisMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const Eisenstein& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }
    friend EisMat operator*(const Eisenstein& s, const EisMat& a) {
        EisMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = s * a.a_[k];
        return r;
    }
    friend bool operator==(const EisMat& a, const EisMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const EisMat& a, const EisMat& b) { return !(a == b); }

    EisMat transpose() const {
        EisMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    EisMat conj_transpose() const {
        EisMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
        return r;
    }

    Eisenstein det() const {
        if (rows_ != cols_) throw std::invalid_argument("EisMat: det of non-square");
        return det_rec(*this);
    }

    bool congruent_identity_mod_one_minus_omega() const {
        if (rows_ != cols_) return false;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                Eisenstein d = (*this)(i, j) - (i == j ? Eisenstein(1) : Eisenstein(0));
                if (!d.divisible_by_one_minus_omega()) return false;
            }
        return true;
    }

private:
    int rows_, cols_;
    std::vector<Eisenstein> a_;
    static void check_same(const EisMat& a, const EisMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("EisMat: shape mismatch");
    }
    static Eisenstein det_rec(const EisMat& m) {
        int n = m.rows();
        if (n == 1) return m(0, 0);
        Eisenstein acc(0);
        for (int j = 0; j < n; ++j) {
            if (m(0, j).is_zero()) continue;
            EisMat minor(n - 1, n - 1);
            for (int r = 1; r < n; ++r) {
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(r - 1, cc++) = m(r, c);
                }
            }
            Eisenstein term = m(0, j) * det_rec(minor);
            acc = (j % 2 == 0) ? acc + term : acc - term;
        }
        return acc;
    }
};

// Matrix over Q(w): integer Eisenstein matrix with common positive denominator.
class EisMatQ {
public:
    EisMatQ() : den_(1) {}
    explicit EisMatQ(EisMat num, BigInt den = BigInt(1)) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    static EisMatQ identity(int n) { return EisMatQ(EisMat::identity(n)); }

    const EisMat& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int rows() const { return num_.rows(); }
    int cols() const { return num_.cols(); }
    bool is_integral() const { return den_ == BigInt(1); }

    friend EisMatQ operator*(const EisMatQ& a, const EisMatQ& b) {
        return EisMatQ(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend EisMatQ operator+(const EisMatQ& a, const EisMatQ& b) {
        return EisMatQ(Eisenstein(b.den_, BigInt(0)) * a.num_ + Eisenstein(a.den_, BigInt(0)) * b.num_,
                       a.den_ * b.den_);
    }
    friend EisMatQ operator-(const EisMatQ& a, const EisMatQ& b) {
        return EisMatQ(Eisenstein(b.den_, BigInt(0)) * a.num_ - Eisenstein(a.den_, BigInt(0)) * b.num_,
                       a.den_ * b.den_);
    }
    friend bool operator==(const EisMatQ& a, const EisMatQ& b) {
        return a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const EisMatQ& a, const EisMatQ& b) { return !(a == b); }

    EisMatQ conj_transpose() const { return EisMatQ(num_.conj_transpose(), den_); }

private:
    EisMat num_;
    BigInt den_;

    void normalize() {
        if (den_.is_zero()) throw std::invalid_argument("EisMatQ: zero denominator");
        if (den_.is_negative()) {
            den_ = -den_;
            num_ = Eisenstein(-1) * num_;
        }
        BigInt g = den_;
        for (int i = 0; i < num_.rows() && g != BigInt(1); ++i)
            for (int j = 0; j < num_.cols() && g != BigInt(1); ++j) {
                g = gcd(g, num_(i, j).u());
                g = gcd(g, num_(i, j).v());
            }
        if (g != BigInt(1) && !g.is_zero()) {
            for (int i = 0; i < num_.rows(); ++i)
                for (int j = 0; j < num_.cols(); ++j) {
                    std::uint32_t r = 0;
                    BigInt u = num_(i, j).u(), v = num_(i, j).v();
                    // exact division by g via BigRat reduction path
                    num_(i, j) = Eisenstein(BigRat(u, g).num(), BigRat(v, g).num());
                    (void)r;
                }
            den_ = BigRat(den_, g).num();
        }
    }
};

using EisVec4 = std::array<Eisenstein, 4>;

} // namespace tricover

#endif
