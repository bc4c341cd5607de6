#include "ctmc/kernels.hpp"

#include <array>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ctmc::kernels {

bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

namespace {

bool use_parallel(Exec exec, Eigen::Index n) {
    if (!parallel_available()) return false;
    switch (exec) {
        case Exec::Serial: return false;
        case Exec::Parallel: return true;
        case Exec::Auto: return n >= kParallelThreshold;
    }
    return false;
}

// Column-major j-k-i loop: streams through A's columns and writes each
// column of C once.
void gemm_column(const Matrix& a, const Matrix& b, Matrix& c, Eigen::Index j) {
    const Eigen::Index n = a.rows();
    const Eigen::Index k_dim = a.cols();
    double* cj = c.data() + j * n;
    for (Eigen::Index i = 0; i < n; ++i) cj[i] = 0.0;
    const double* bj = b.data() + j * k_dim;
    for (Eigen::Index k = 0; k < k_dim; ++k) {
        const double bkj = bj[k];
        if (bkj == 0.0) continue;
        const double* ak = a.data() + k * n;
        for (Eigen::Index i = 0; i < n; ++i) cj[i] += ak[i] * bkj;
    }
}

}  // namespace

void gemm(const Matrix& a, const Matrix& b, Matrix& c, Exec exec) {
    if (a.cols() != b.rows()) throw Error(Errc::DimensionMismatch, "gemm: inner dimensions differ");
    c.resize(a.rows(), b.cols());
    const Eigen::Index m = b.cols();
    if (use_parallel(exec, a.rows())) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (Eigen::Index j = 0; j < m; ++j) gemm_column(a, b, c, j);
#endif
    } else {
        for (Eigen::Index j = 0; j < m; ++j) gemm_column(a, b, c, j);
    }
}

Matrix gemm(const Matrix& a, const Matrix& b, Exec exec) {
    Matrix c;
    gemm(a, b, c, exec);
    return c;
}

void matvec(const Matrix& a, const Vector& x, Vector& y, Exec exec) {
    if (a.cols() != x.size()) throw Error(Errc::DimensionMismatch, "matvec: dimensions differ");
    const Eigen::Index n = a.rows();
    y.setZero(n);
    if (use_parallel(exec, n)) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (Eigen::Index i = 0; i < n; ++i) {
            double acc = 0.0;
            for (Eigen::Index k = 0; k < a.cols(); ++k) acc += a(i, k) * x[k];
            y[i] = acc;
        }
#endif
    } else {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            const double xk = x[k];
            if (xk == 0.0) continue;
            const double* ak = a.data() + k * n;
            for (Eigen::Index i = 0; i < n; ++i) y[i] += ak[i] * xk;
        }
    }
}

namespace {

double one_norm(const Matrix& a) {
    double best = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) best = std::max(best, a.col(j).cwiseAbs().sum());
    return best;
}

// Pade numerator/denominator for orders 3..9: U = A*(b1*I + b3*A2 + ...),
// V = b0*I + b2*A2 + ...
void pade_low(const Matrix& a, const Matrix& a2, const double* b, int m, Matrix& u, Matrix& v,
              Exec exec) {
    const Eigen::Index n = a.rows();
    Matrix odd = Matrix::Identity(n, n) * b[1];
    Matrix even = Matrix::Identity(n, n) * b[0];
    Matrix power = Matrix::Identity(n, n);
    for (int k = 2; k <= m; k += 2) {
        power = gemm(power, a2, exec);
        even += b[k] * power;
        if (k + 1 <= m) odd += b[k + 1] * power;
    }
    u = gemm(a, odd, exec);
    v = even;
}

}  // namespace

Matrix expm(const Matrix& a, Exec exec) {
    if (a.rows() != a.cols()) throw Error(Errc::NotSquare, "expm: matrix must be square");
    const Eigen::Index n = a.rows();
    if (n == 0) return Matrix(0, 0);

    static constexpr std::array<double, 4> b3 = {120, 60, 12, 1};
    static constexpr std::array<double, 6> b5 = {30240, 15120, 3360, 420, 30, 1};
    static constexpr std::array<double, 8> b7 = {17297280, 8648640, 1995840, 277200,
                                                 25200,    1512,    56,      1};
    static constexpr std::array<double, 10> b9 = {17643225600., 8821612800., 2075673600.,
                                                  302702400.,   30270240.,   2162160.,
                                                  110880.,      3960.,       90.,
                                                  1.};
    static constexpr std::array<double, 14> b13 = {64764752532480000., 32382376266240000.,
                                                   7771770303897600.,  1187353796428800.,
                                                   129060195264000.,   10559470521600.,
                                                   670442572800.,      33522128640.,
                                                   1323241920.,        40840800.,
                                                   960960.,            16380.,
                                                   182.,               1.};
    constexpr double theta3 = 1.495585217958292e-2;
    constexpr double theta5 = 2.539398330063230e-1;
    constexpr double theta7 = 9.504178996162932e-1;
    constexpr double theta9 = 2.097847961257068;
    constexpr double theta13 = 5.371920351148152;

    const double norm = one_norm(a);
    Matrix u, v;

    if (norm <= theta9) {
        const Matrix a2 = gemm(a, a, exec);
        if (norm <= theta3) {
            pade_low(a, a2, b3.data(), 3, u, v, exec);
        } else if (norm <= theta5) {
            pade_low(a, a2, b5.data(), 5, u, v, exec);
        } else if (norm <= theta7) {
            pade_low(a, a2, b7.data(), 7, u, v, exec);
        } else {
            pade_low(a, a2, b9.data(), 9, u, v, exec);
        }
        Matrix num = v + u;
        Matrix den = v - u;
        return den.partialPivLu().solve(num);
    }

    int squarings = static_cast<int>(std::ceil(std::log2(norm / theta13)));
    squarings = std::max(squarings, 0);
    const Matrix scaled = a * std::pow(2.0, -squarings);

    const Matrix a2 = gemm(scaled, scaled, exec);
    const Matrix a4 = gemm(a2, a2, exec);
    const Matrix a6 = gemm(a2, a4, exec);
    const Matrix identity = Matrix::Identity(n, n);

    Matrix w1 = b13[13] * a6 + b13[11] * a4 + b13[9] * a2;
    Matrix w2 = b13[7] * a6 + b13[5] * a4 + b13[3] * a2 + b13[1] * identity;
    u = gemm(scaled, Matrix(gemm(a6, w1, exec) + w2), exec);
    Matrix z1 = b13[12] * a6 + b13[10] * a4 + b13[8] * a2;
    v = gemm(a6, z1, exec) + b13[6] * a6 + b13[4] * a4 + b13[2] * a2 + b13[0] * identity;

    Matrix num = v + u;
    Matrix den = v - u;
    Matrix r = den.partialPivLu().solve(num);
    for (int s = 0; s < squarings; ++s) r = gemm(r, r, exec);
    return r;
}

Vector expm_apply(const Matrix& a, double t, const Vector& x, Exec exec) {
    const Matrix e = expm(Matrix(a * t), exec);
    Vector y;
    matvec(e, x, y, exec);
    return y;
}

}  // namespace ctmc::kernels
