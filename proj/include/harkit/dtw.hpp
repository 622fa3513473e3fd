#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "harkit/types.hpp"

namespace harkit {

/// Monotone alignment between two sequences with pinned endpoints.
/// Steps are restricted to (1,0), (0,1) and (1,1).
struct WarpingPath {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

struct DtwResult {
    double cost = 0.0;
    WarpingPath path;
};

/// Reusable dynamic-programming buffers; DBA performs many alignments, so the
/// cost matrix is recycled between calls.
class DtwWorkspace {
  public:
    /// Accumulated-cost matrix for the full alignment, row-major (la x lb).
    /// Local cost is the squared sample difference; the total is the minimal
    /// sum over all admissible paths.
    DtwResult align(std::span<const double> a, std::span<const double> b) {
        const std::size_t la = a.size(), lb = b.size();
        if (la == 0 || lb == 0) throw ConfigError("dtw: sequences must be non-empty");
        cost_.resize(la * lb);
        double* d = cost_.data();

        d[0] = sq(a[0] - b[0]);
        for (std::size_t j = 1; j < lb; ++j) d[j] = d[j - 1] + sq(a[0] - b[j]);
        for (std::size_t i = 1; i < la; ++i) {
            const double ai = a[i];
            double* row = d + i * lb;
            const double* prev = row - lb;
            row[0] = prev[0] + sq(ai - b[0]);
            for (std::size_t j = 1; j < lb; ++j) {
                const double best = min3(prev[j - 1], prev[j], row[j - 1]);
                row[j] = best + sq(ai - b[j]);
            }
        }

        DtwResult result;
        result.cost = d[la * lb - 1];
        backtrack(a, b, result.path);
        return result;
    }

    /// Cost-only variant with two rolling rows (used for medoid search).
    double cost(std::span<const double> a, std::span<const double> b) {
        const std::size_t la = a.size(), lb = b.size();
        if (la == 0 || lb == 0) throw ConfigError("dtw: sequences must be non-empty");
        row_.resize(lb);
        prev_row_.resize(lb);
        double* cur = row_.data();
        double* prev = prev_row_.data();

        cur[0] = sq(a[0] - b[0]);
        for (std::size_t j = 1; j < lb; ++j) cur[j] = cur[j - 1] + sq(a[0] - b[j]);
        for (std::size_t i = 1; i < la; ++i) {
            std::swap(cur, prev);
            const double ai = a[i];
            cur[0] = prev[0] + sq(ai - b[0]);
            for (std::size_t j = 1; j < lb; ++j)
                cur[j] = min3(prev[j - 1], prev[j], cur[j - 1]) + sq(ai - b[j]);
        }
        return cur[lb - 1];
    }

  private:
    static double sq(double v) { return v * v; }
    static double min3(double x, double y, double z) {
        double m = x < y ? x : y;
        return m < z ? m : z;
    }

    /// Recover the optimal path from the accumulated-cost matrix. Ties prefer
    /// the diagonal step, then the vertical one, for determinism.
    void backtrack(std::span<const double> a, std::span<const double> b, WarpingPath& path) const {
        const std::size_t la = a.size(), lb = b.size();
        const double* d = cost_.data();
        path.pairs.clear();
        path.pairs.reserve(la + lb);
        std::size_t i = la - 1, j = lb - 1;
        path.pairs.emplace_back(i, j);
        while (i > 0 || j > 0) {
            if (i == 0) {
                --j;
            } else if (j == 0) {
                --i;
            } else {
                const double diag = d[(i - 1) * lb + (j - 1)];
                const double up = d[(i - 1) * lb + j];
                const double left = d[i * lb + (j - 1)];
                if (diag <= up && diag <= left) {
                    --i;
                    --j;
                } else if (up <= left) {
                    --i;
                } else {
                    --j;
                }
            }
            path.pairs.emplace_back(i, j);
        }
        std::reverse(path.pairs.begin(), path.pairs.end());
    }

    std::vector<double> cost_;
    std::vector<double> row_, prev_row_;
};

/// Boundary-constrained dynamic time warping of two scalar sequences.
inline DtwResult dtw(std::span<const double> a, std::span<const double> b) {
    DtwWorkspace ws;
    return ws.align(a, b);
}

inline double dtw_cost(std::span<const double> a, std::span<const double> b) {
    DtwWorkspace ws;
    return ws.cost(a, b);
}

}  // namespace harkit
