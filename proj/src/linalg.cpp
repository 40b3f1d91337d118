#include "pitse/linalg.hpp"

#include <cmath>
#include <string>

#include "pitse/errors.hpp"

namespace pitse {

void require_finite(const Matrix& m, const char* what) {
    for (std::size_t i = 0; i < m.data.size(); ++i) {
        if (!std::isfinite(m.data[i])) {
            throw NumericError(std::string(what) + ": non-finite entry at flat index " +
                               std::to_string(i));
        }
    }
}

void require_finite(const std::vector<double>& v, const char* what) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!std::isfinite(v[i])) {
            throw NumericError(std::string(what) + ": non-finite entry at index " +
                               std::to_string(i));
        }
    }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) {
        throw DimensionError("dot: length mismatch " + std::to_string(a.size()) + " vs " +
                             std::to_string(b.size()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

double mse(const std::vector<double>& pred, const std::vector<double>& target) {
    if (pred.empty()) throw DataError("mse: empty input");
    if (pred.size() != target.size()) {
        throw DimensionError("mse: length mismatch " + std::to_string(pred.size()) + " vs " +
                             std::to_string(target.size()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        double d = pred[i] - target[i];
        acc += d * d;
    }
    return acc / static_cast<double>(pred.size());
}

double mean(const std::vector<double>& v) {
    if (v.empty()) throw DataError("mean: empty input");
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc / static_cast<double>(v.size());
}

double stddev(const std::vector<double>& v) {
    double m = mean(v);
    double acc = 0.0;
    for (double x : v) acc += (x - m) * (x - m);
    return std::sqrt(acc / static_cast<double>(v.size()));
}

}  // namespace pitse
