#pragma once

#include "blockdiff/matrix.hpp"

namespace blockdiff::kern {

// Execution policy for the compute kernels. Every kernel has a serial
// reference implementation and an OpenMP implementation; both produce
// bit-identical results because each output element is reduced in the same
// order by exactly one thread. The serial path is kept for testing and for
// the kernel benchmark.
enum class Exec { Serial, Parallel };

// Process-wide default used by the model/training code.
void set_default_exec(Exec e);
Exec default_exec();

// C[M x N] = A[M x K] * B[K x N]   (accumulate = false overwrites C)
void gemm_nn(MatView a, MatView b, MutView c, bool accumulate, Exec exec);

// C[M x N] = A[M x K] * B[N x K]^T
void gemm_nt(MatView a, MatView b, MutView c, bool accumulate, Exec exec);

// C[K x N] = A[M x K]^T * B[M x N]
void gemm_tn(MatView a, MatView b, MutView c, bool accumulate, Exec exec);

inline void gemm_nn(MatView a, MatView b, MutView c, bool acc = false) {
    gemm_nn(a, b, c, acc, default_exec());
}
inline void gemm_nt(MatView a, MatView b, MutView c, bool acc = false) {
    gemm_nt(a, b, c, acc, default_exec());
}
inline void gemm_tn(MatView a, MatView b, MutView c, bool acc = false) {
    gemm_tn(a, b, c, acc, default_exec());
}

// y[M x N] += bias[N] broadcast over rows.
void add_bias(MutView y, const double* bias, Exec exec);
inline void add_bias(MutView y, const double* bias) { add_bias(y, bias, default_exec()); }

// In-place softmax over row[0..n).
void softmax_row(double* row, int n);

double dot(const double* a, const double* b, int n);

// y += alpha * x
void axpy(double* y, const double* x, double alpha, int n);

} // namespace blockdiff::kern
