#ifndef TRICOVER_SYMPLECTIC_HPP
#define TRICOVER_SYMPLECTIC_HPP

// Lift of the signature (3,1) unitary group into Sp(8,R): writing g = P + w Q
// with real P, Q, the lift is [[P, QH], [-HQ, H(P-Q)H]]. Group elements over
// Z[w] land in Sp(8,Z). Includes the matrix W (lift of w*I), reflection lifts
// through the rank-2 fixed-space formula, and the exact transformation action
// on rational theta characteristics.

#include <array>
#include <vector>

#include "tricover/bigint.hpp"
#include "tricover/characteristics.hpp"
#include "tricover/eisenstein.hpp"
#include "tricover/errors.hpp"
#include "tricover/linalg.hpp"
#include "tricover/roots.hpp"

namespace tricover {

class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static ZMat identity(int n) {
        ZMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = BigInt(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const BigInt& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend ZMat operator+(const ZMat& a, const ZMat& b) {
        check(a, b);
        ZMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
        return r;
    }
    friend ZMat operator-(const ZMat& a, const ZMat& b) {
        check(a, b);
        ZMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
        return r;
    }
    friend ZMat operator*(const ZMat& a, const ZMat& b) {
        if (a.cols_ != b.rows_) throw input_error("ZMat: shape mismatch");
        ZMat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (int j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
            }
        return r;
    }
    friend ZMat operator*(const BigInt& s, const ZMat& a) {
        ZMat r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = s * a.a_[k];
        return r;
    }
    friend bool operator==(const ZMat& a, const ZMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const ZMat& a, const ZMat& b) { return !(a == b); }

    ZMat transpose() const {
        ZMat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    CMat to_cmat() const {
        CMat m(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j).to_double();
        return m;
    }

private:
    int rows_, cols_;
    std::vector<BigInt> a_;
    static void check(const ZMat& a, const ZMat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw input_error("ZMat: shape mismatch");
    }
};

// integer matrix with positive common denominator
class ZMatQ {
public:
    ZMatQ() : den_(1) {}
    explicit ZMatQ(ZMat num, BigInt den = BigInt(1)) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    static ZMatQ identity(int n) { return ZMatQ(ZMat::identity(n)); }

    const ZMat& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int rows() const { return num_.rows(); }
    int cols() const { return num_.cols(); }
    bool is_integral() const { return den_ == BigInt(1); }

    friend ZMatQ operator*(const ZMatQ& a, const ZMatQ& b) { return ZMatQ(a.num_ * b.num_, a.den_ * b.den_); }
    friend ZMatQ operator+(const ZMatQ& a, const ZMatQ& b) {
        return ZMatQ(b.den_ * a.num_ + a.den_ * b.num_, a.den_ * b.den_);
    }
    friend ZMatQ operator-(const ZMatQ& a, const ZMatQ& b) {
        return ZMatQ(b.den_ * a.num_ - a.den_ * b.num_, a.den_ * b.den_);
    }
    friend bool operator==(const ZMatQ& a, const ZMatQ& b) { return a.den_ == b.den_ && a.num_ == b.num_; }
    friend bool operator!=(const ZMatQ& a, const ZMatQ& b) { return !(a == b); }

    CMat to_cmat() const {
        CMat m = num_.to_cmat();
        double d = den_.to_double();
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) /= d;
        return m;
    }

private:
    ZMat num_;
    BigInt den_;
    void normalize() {
        if (den_.is_zero()) throw input_error("ZMatQ: zero denominator");
        if (den_.is_negative()) {
            den_ = -den_;
            num_ = BigInt(-1) * num_;
        }
        BigInt g = den_;
        for (int i = 0; i < num_.rows() && g != BigInt(1); ++i)
            for (int j = 0; j < num_.cols() && g != BigInt(1); ++j) g = gcd(g, num_(i, j));
        if (g != BigInt(1)) {
            for (int i = 0; i < num_.rows(); ++i)
                for (int j = 0; j < num_.cols(); ++j) num_(i, j) = BigRat(num_(i, j), g).num();
            den_ = BigRat(den_, g).num();
        }
    }
};

inline ZMat symplectic_J_int() {
    ZMat j(8, 8);
    for (int i = 0; i < 4; ++i) {
        j(i, i + 4) = BigInt(-1);
        j(i + 4, i) = BigInt(1);
    }
    return j;
}

inline bool is_symplectic_exact(const ZMat& g) {
    ZMat j = symplectic_J_int();
    return g.transpose() * j * g == j;
}

inline ZMat int_H() {
    ZMat h(4, 4);
    h(0, 0) = BigInt(1); h(1, 1) = BigInt(1); h(2, 2) = BigInt(1); h(3, 3) = BigInt(-1);
    return h;
}

// lift of g = P + wQ; rational g lifts with the same denominator
inline ZMatQ lift_unitary(const EisMatQ& g) {
    if (g.rows() != 4 || g.cols() != 4) throw input_error("lift_unitary: need 4x4");
    ZMat p(4, 4), q(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            p(i, j) = g.num()(i, j).u();
            q(i, j) = g.num()(i, j).v();
        }
    ZMat h = int_H();
    ZMat qh = q * h;
    ZMat hq = h * q;
    ZMat hpqh = h * (p - q) * h;
    ZMat m(8, 8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            m(i, j) = p(i, j);
            m(i, j + 4) = qh(i, j);
            m(i + 4, j) = -hq(i, j);
            m(i + 4, j + 4) = hpqh(i, j);
        }
    return ZMatQ(std::move(m), g.den());
}

// inverse of the lift on its image: A + w B H
inline EisMatQ unlift(const ZMatQ& m) {
    if (m.rows() != 8 || m.cols() != 8) throw input_error("unlift: need 8x8");
    EisMat g(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            BigInt a = m.num()(i, j);
            BigInt bh = m.num()(i, j + 4) * BigInt(j == 3 ? -1 : 1); // (BH)_{ij} = B_ij H_jj
            g(i, j) = Eisenstein(a, bh);
        }
    return EisMatQ(std::move(g), m.den());
}

inline const ZMat& matrix_W() {
    static const ZMat w = [] {
        EisMat wi(4, 4);
        for (int i = 0; i < 4; ++i) wi(i, i) = Eisenstein::omega();
        return lift_unitary(EisMatQ(wi)).num();
    }();
    return w;
}

// Rank-2 column space formula for the lifted reflections: with v = a + w b,
// v1 = (a; -Hb), V = (v1, W v1):
//   lift(R^w(v))    = I - (I - W)   V (tV J V)^{-1} tV J
//   lift(R^zeta(v)) = I - (I + W^2) V (tV J V)^{-1} tV J
inline ZMatQ lift_reflection(const EisVec4& v, ReflExponent exponent) {
    ZMat v1(8, 1);
    for (int i = 0; i < 4; ++i) {
        v1(i, 0) = v[i].u();
        v1(i + 4, 0) = (i == 3 ? v[i].v() : -v[i].v()); // -Hb
    }
    const ZMat& w = matrix_W();
    ZMat v2 = w * v1;
    ZMat V(8, 2);
    for (int i = 0; i < 8; ++i) {
        V(i, 0) = v1(i, 0);
        V(i, 1) = v2(i, 0);
    }
    ZMat j = symplectic_J_int();
    ZMat tVJ = V.transpose() * j;
    ZMat gram = tVJ * V; // 2x2
    BigInt det = gram(0, 0) * gram(1, 1) - gram(0, 1) * gram(1, 0);
    if (det.is_zero()) throw domain_error("lift_reflection: tV J V singular");
    ZMat adj(2, 2);
    adj(0, 0) = gram(1, 1);
    adj(0, 1) = -gram(0, 1);
    adj(1, 0) = -gram(1, 0);
    adj(1, 1) = gram(0, 0);
    ZMat front = exponent == ReflExponent::Omega ? (ZMat::identity(8) - w)
                                                 : (ZMat::identity(8) + w * w);
    ZMat num = det * ZMat::identity(8) - front * V * adj * tVJ;
    return ZMatQ(std::move(num), det);
}

// ---- action on theta characteristics -------------------------------------

using CharVec = std::array<BigRat, 8>; // row vector (a, b)

inline CharVec char_vector(const SixthChar& c) {
    CharVec r;
    auto b6 = c.six_b();
    for (int i = 0; i < 4; ++i) {
        r[static_cast<std::size_t>(i)] = BigRat::frac(c.six_a[static_cast<std::size_t>(i)], 6);
        r[static_cast<std::size_t>(i + 4)] = BigRat::frac(b6[static_cast<std::size_t>(i)], 6);
    }
    return r;
}

struct CharActionResult {
    CharVec image;  // g.(a,b), exact
    BigRat phase;   // phi_{(a,b)}(g), exact
};

// g.(a,b) = (a,b) g^{-1} + (1/2)(dv(C tD), dv(A tB)) and the phase
// phi_{(a,b)}(g) = -(1/2)(a tD B ta - 2 a tB C tb + b tC A tb)
//                 + (1/2)(a tD - b tC) t(dv(A tB))
inline CharActionResult char_action(const ZMat& g, const CharVec& c) {
    if (!is_symplectic_exact(g)) throw input_error("char_action: g not integral symplectic");
    ZMat A(4, 4), B(4, 4), C(4, 4), D(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            A(i, j) = g(i, j);
            B(i, j) = g(i, j + 4);
            C(i, j) = g(i + 4, j);
            D(i, j) = g(i + 4, j + 4);
        }
    // g^{-1} = [[tD, -tB], [-tC, tA]]
    ZMat ginv(8, 8);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            ginv(i, j) = D(j, i);
            ginv(i, j + 4) = -B(j, i);
            ginv(i + 4, j) = -C(j, i);
            ginv(i + 4, j + 4) = A(j, i);
        }
    CharActionResult out;
    for (int j = 0; j < 8; ++j) {
        BigRat s(0);
        for (int i = 0; i < 8; ++i) s += c[static_cast<std::size_t>(i)] * BigRat(ginv(i, j), BigInt(1));
        out.image[static_cast<std::size_t>(j)] = s;
    }
    ZMat ctd = C * D.transpose();
    ZMat atb = A * B.transpose();
    for (int i = 0; i < 4; ++i) {
        out.image[static_cast<std::size_t>(i)] += BigRat(ctd(i, i), BigInt(2));
        out.image[static_cast<std::size_t>(i + 4)] += BigRat(atb(i, i), BigInt(2));
    }

    auto quad = [&](const ZMat& M, int off_l, int off_r) {
        BigRat s(0);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                s += c[static_cast<std::size_t>(off_l + i)] * BigRat(M(i, j), BigInt(1)) *
                     c[static_cast<std::size_t>(off_r + j)];
        return s;
    };
    ZMat tDB = D.transpose() * B;
    ZMat tBC = B.transpose() * C;
    ZMat tCA = C.transpose() * A;
    BigRat phi = -(quad(tDB, 0, 0) - BigRat(2) * quad(tBC, 0, 4) + quad(tCA, 4, 4)) * BigRat::frac(1, 2);
    // (a tD - b tC) t(dv(A tB))
    BigRat lin(0);
    for (int i = 0; i < 4; ++i) {
        BigRat coeff(0);
        for (int k = 0; k < 4; ++k) {
            coeff += c[static_cast<std::size_t>(k)] * BigRat(D(i, k), BigInt(1));
            coeff -= c[static_cast<std::size_t>(k + 4)] * BigRat(C(i, k), BigInt(1));
        }
        lin += coeff * BigRat(atb(i, i), BigInt(1));
    }
    phi += lin * BigRat::frac(1, 2);
    out.phase = phi;
    return out;
}

inline bool congruent_mod_Z8(const CharVec& a, const CharVec& b) {
    for (int i = 0; i < 8; ++i)
        if (!(a[static_cast<std::size_t>(i)] - b[static_cast<std::size_t>(i)]).is_integer()) return false;
    return true;
}

} // namespace tricover

#endif
