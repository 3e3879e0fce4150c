#include "blockdiff/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace blockdiff::kern {

namespace {
Exec g_default_exec = Exec::Parallel;

// Row-block worth splitting across threads; below this the fork overhead
// dominates for the small matrices the decoders produce.
constexpr int kParallelRowThreshold = 8;
} // namespace

void set_default_exec(Exec e) { g_default_exec = e; }
Exec default_exec() { return g_default_exec; }

double dot(const double* a, const double* b, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy(double* y, const double* x, double alpha, int n) {
    for (int i = 0; i < n; ++i) y[i] += alpha * x[i];
}

namespace {

// One row of C = A row i times B, ikj order so the inner loop is contiguous
// in both B and C.
inline void gemm_nn_row(const Matrix& a, const Matrix& b, Matrix& c, int i, bool accumulate) {
    const int K = a.cols;
    const int N = b.cols;
    double* crow = c.row(i);
    if (!accumulate) std::fill(crow, crow + N, 0.0);
    const double* arow = a.row(i);
    for (int k = 0; k < K; ++k) {
        const double aik = arow[k];
        if (aik == 0.0) continue;
        axpy(crow, b.row(k), aik, N);
    }
}

inline void gemm_nt_row(const Matrix& a, const Matrix& b, Matrix& c, int i, bool accumulate) {
    const int K = a.cols;
    const int N = b.rows;
    const double* arow = a.row(i);
    double* crow = c.row(i);
    for (int j = 0; j < N; ++j) {
        double s = dot(arow, b.row(j), K);
        crow[j] = accumulate ? crow[j] + s : s;
    }
}

// Row k of C = column k of A dotted against all of B; kept serial per output
// row so results are independent of thread count.
inline void gemm_tn_row(const Matrix& a, const Matrix& b, Matrix& c, int k, bool accumulate) {
    const int M = a.rows;
    const int N = b.cols;
    double* crow = c.row(k);
    if (!accumulate) std::fill(crow, crow + N, 0.0);
    for (int m = 0; m < M; ++m) {
        const double amk = a.at(m, k);
        if (amk == 0.0) continue;
        axpy(crow, b.row(m), amk, N);
    }
}

} // namespace

void gemm_nn(const Matrix& a, const Matrix& b, Matrix& c, bool accumulate, Exec exec) {
    const int M = a.rows;
    if (exec == Exec::Parallel && M >= kParallelRowThreshold) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < M; ++i) gemm_nn_row(a, b, c, i, accumulate);
    } else {
        for (int i = 0; i < M; ++i) gemm_nn_row(a, b, c, i, accumulate);
    }
}

void gemm_nt(const Matrix& a, const Matrix& b, Matrix& c, bool accumulate, Exec exec) {
    const int M = a.rows;
    if (exec == Exec::Parallel && M >= kParallelRowThreshold) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < M; ++i) gemm_nt_row(a, b, c, i, accumulate);
    } else {
        for (int i = 0; i < M; ++i) gemm_nt_row(a, b, c, i, accumulate);
    }
}

void gemm_tn(const Matrix& a, const Matrix& b, Matrix& c, bool accumulate, Exec exec) {
    const int K = a.cols;
    if (exec == Exec::Parallel && K >= kParallelRowThreshold) {
#pragma omp parallel for schedule(static)
        for (int k = 0; k < K; ++k) gemm_tn_row(a, b, c, k, accumulate);
    } else {
        for (int k = 0; k < K; ++k) gemm_tn_row(a, b, c, k, accumulate);
    }
}

void add_bias(Matrix& y, const double* bias, Exec exec) {
    const int M = y.rows;
    const int N = y.cols;
    if (exec == Exec::Parallel && M >= kParallelRowThreshold) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < M; ++i) axpy(y.row(i), bias, 1.0, N);
    } else {
        for (int i = 0; i < M; ++i) axpy(y.row(i), bias, 1.0, N);
    }
}

void softmax_row(double* row, int n) {
    double mx = row[0];
    for (int i = 1; i < n; ++i) mx = std::max(mx, row[i]);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        row[i] = std::exp(row[i] - mx);
        sum += row[i];
    }
    const double inv = 1.0 / sum;
    for (int i = 0; i < n; ++i) row[i] *= inv;
}

} // namespace blockdiff::kern
