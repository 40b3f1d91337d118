#pragma once

#include <cstddef>
#include <vector>

namespace pitse {

// Dense row-major matrix of 64-bit floats. The only container the numeric
// core uses; rows x cols with data.size() == rows * cols.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    bool empty() const { return rows == 0 || cols == 0; }
};

// Throws NumericError naming `what` if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what);
void require_finite(const std::vector<double>& v, const char* what);

double dot(const std::vector<double>& a, const std::vector<double>& b);

// Mean squared error of two equal-length nonempty vectors.
double mse(const std::vector<double>& pred, const std::vector<double>& target);

double mean(const std::vector<double>& v);
// Population standard deviation (divides by n).
double stddev(const std::vector<double>& v);

}  // namespace pitse
