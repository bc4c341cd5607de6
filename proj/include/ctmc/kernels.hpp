#pragma once

#include "ctmc/types.hpp"

namespace ctmc::kernels {

/// Execution policy for the dense kernels. Serial is the reference
/// implementation the tests compare against; Parallel uses OpenMP when the
/// build has it and falls back to the serial loops otherwise; Auto switches
/// on the matrix size.
enum class Exec { Serial, Parallel, Auto };

/// Matrices at or above this dimension go parallel under Exec::Auto.
inline constexpr int kParallelThreshold = 96;

bool parallel_available();

/// C = A * B. Plain dense product, column-major walk.
void gemm(const Matrix& a, const Matrix& b, Matrix& c, Exec exec = Exec::Auto);
Matrix gemm(const Matrix& a, const Matrix& b, Exec exec = Exec::Auto);

/// y = A * x.
void matvec(const Matrix& a, const Vector& x, Vector& y, Exec exec = Exec::Auto);

/// Matrix exponential by Pade approximation with scaling and squaring
/// (order 13 at the top, lower orders for small norms).
Matrix expm(const Matrix& a, Exec exec = Exec::Auto);

/// exp(a * t) applied to a vector; convenience wrapper used by propagation.
Vector expm_apply(const Matrix& a, double t, const Vector& x, Exec exec = Exec::Auto);

}  // namespace ctmc::kernels
