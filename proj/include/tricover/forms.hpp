#ifndef TRICOVER_FORMS_HPP
#define TRICOVER_FORMS_HPP

// The two bilinear forms everything is measured against: the signature (3,1)
// Hermitian form H = diag(1,1,1,-1) on C^4 and the standard symplectic form
// J = [[0,-I],[I,0]] on R^8, plus the Moebius action of Sp(8,R) on the
// degree-4 Siegel space.

#include <array>
#include <complex>
#include <limits>

#include "tricover/linalg.hpp"

namespace tricover {

inline constexpr double kPi = 3.14159265358979323846264338327950288;

inline const std::array<double, 4> kH = {1.0, 1.0, 1.0, -1.0};

inline CMat hermitian_form_H() {
    CMat h(4, 4);
    for (int i = 0; i < 4; ++i) h(i, i) = kH[i];
    return h;
}

inline CMat symplectic_form_J() {
    CMat j(8, 8);
    for (int i = 0; i < 4; ++i) {
        j(i, i + 4) = -1.0;
        j(i + 4, i) = 1.0;
    }
    return j;
}

using Vec4 = std::array<cdouble, 4>;

// t(conj u) H v
inline cdouble hermitian_pairing(const Vec4& u, const Vec4& v) {
    cdouble s = 0.0;
    for (int i = 0; i < 4; ++i) s += std::conj(u[i]) * kH[i] * v[i];
    return s;
}

struct PosDefResult {
    bool positive = false;
    double min_pivot = 0.0;  // smallest leading-principal pivot of the LDL^* factorization
    double lambda_min = 0.0; // Jacobi smallest-eigenvalue estimate (used by theta truncation)
};

// Hermitian LDL^* pivots decide definiteness; a Jacobi sweep supplies the
// eigenvalue estimate the theta tail bound wants.
inline PosDefResult is_positive_definite(const CMat& m, double tol = 1e-10) {
    if (m.rows() != m.cols()) throw input_error("is_positive_definite: non-square");
    if (hermitian_defect(m) > tol * std::max(1.0, m.max_abs()))
        throw input_error("is_positive_definite: matrix not Hermitian within tolerance");
    int n = m.rows();
    CMat a = m;
    PosDefResult r;
    r.positive = true;
    r.min_pivot = std::numeric_limits<double>::infinity();
    for (int k = 0; k < n; ++k) {
        double piv = a(k, k).real();
        r.min_pivot = std::min(r.min_pivot, piv);
        if (piv <= tol) { r.positive = false; break; }
        // Schur complement update; keeps the trailing block Hermitian.
        for (int i = k + 1; i < n; ++i) {
            cdouble f = a(i, k) / piv;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    auto eig = hermitian_eigenvalues(m);
    r.lambda_min = eig.values.front();
    if (!r.positive && r.min_pivot == std::numeric_limits<double>::infinity()) r.min_pivot = 0.0;
    return r;
}

struct MoebiusResult {
    CMat tau;          // (A tau + B)(C tau + D)^{-1}, re-symmetrized
    cdouble det_factor; // det(C tau + D)
    double symmetry_defect_raw; // before re-symmetrization
};

// tau must be symmetric with positive-definite imaginary part; g symplectic.
inline MoebiusResult moebius_act(const CMat& g, const CMat& tau, double tol = 1e-8) {
    if (g.rows() != 8 || g.cols() != 8) throw input_error("moebius_act: g must be 8x8");
    if (tau.rows() != 4 || tau.cols() != 4) throw input_error("moebius_act: tau must be 4x4");
    CMat j = symplectic_form_J();
    if ((g.transpose() * j * g - j).max_abs() > tol)
        throw input_error("moebius_act: g is not symplectic within tolerance");
    if (symmetry_defect(tau) > tol)
        throw input_error("moebius_act: tau not symmetric");
    if (!is_positive_definite(tau.imag_part(), 1e-12).positive)
        throw input_error("moebius_act: Im(tau) not positive definite");

    CMat a(4, 4), b(4, 4), c(4, 4), d(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            a(i, k) = g(i, k);
            b(i, k) = g(i, k + 4);
            c(i, k) = g(i + 4, k);
            d(i, k) = g(i + 4, k + 4);
        }
    CMat ctd = c * tau + d;
    cdouble det_factor = ctd.det();
    CMat res = (a * tau + b) * ctd.inverse(); // inverse() throws degeneracy_error if singular

    MoebiusResult out;
    out.symmetry_defect_raw = symmetry_defect(res);
    if (out.symmetry_defect_raw > 1e-6 * std::max(1.0, res.max_abs()))
        throw consistency_error("moebius_act: result far from symmetric");
    CMat sym(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) sym(i, k) = 0.5 * (res(i, k) + res(k, i));
    if (!is_positive_definite(sym.imag_part(), 1e-12).positive)
        throw consistency_error("moebius_act: Im of result not positive definite");
    out.tau = sym;
    out.det_factor = det_factor;
    return out;
}

} // namespace tricover

#endif
