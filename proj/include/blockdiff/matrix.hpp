#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace blockdiff {

// Dense row-major double matrix. Deliberately minimal: the compute-heavy
// paths go through the kernels module, everything else indexes rows directly.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

    double* row(int i) { return data.data() + static_cast<size_t>(i) * cols; }
    const double* row(int i) const { return data.data() + static_cast<size_t>(i) * cols; }

    double& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    double at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

    void zero() { std::fill(data.begin(), data.end(), 0.0); }

    void resize(int r, int c) {
        rows = r;
        cols = c;
        data.assign(static_cast<size_t>(r) * c, 0.0);
    }
};

// Read-only view over row-major storage (weights live in a flat parameter
// buffer, activations in Matrix).
struct MatView {
    const double* d = nullptr;
    int rows = 0;
    int cols = 0;

    MatView() = default;
    MatView(const double* p, int r, int c) : d(p), rows(r), cols(c) {}
    MatView(const Matrix& m) : d(m.data.data()), rows(m.rows), cols(m.cols) {}

    const double* row(int i) const { return d + static_cast<size_t>(i) * cols; }
    double at(int i, int j) const { return d[static_cast<size_t>(i) * cols + j]; }
};

// Mutable view, used for gradient accumulation into the flat buffer.
struct MutView {
    double* d = nullptr;
    int rows = 0;
    int cols = 0;

    MutView() = default;
    MutView(double* p, int r, int c) : d(p), rows(r), cols(c) {}
    MutView(Matrix& m) : d(m.data.data()), rows(m.rows), cols(m.cols) {}

    double* row(int i) const { return d + static_cast<size_t>(i) * cols; }
};

} // namespace blockdiff
