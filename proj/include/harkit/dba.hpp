#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "harkit/dtw.hpp"
#include "harkit/rng.hpp"
#include "harkit/types.hpp"

namespace harkit {

enum class BarycenterInit { Medoid, Random };

struct BarycenterConfig {
    int max_iters = 30;
    double rel_tolerance = 1e-4;  // on the within-set DTW cost change
    BarycenterInit init = BarycenterInit::Medoid;
    std::uint64_t seed = 0;

    void validate() const {
        if (max_iters < 1) throw ConfigError("dba: max_iters must be >= 1");
        if (!(rel_tolerance > 0.0)) throw ConfigError("dba: rel_tolerance must be positive");
    }
};

struct DbaResult {
    std::vector<double> barycenter;
    /// Within-set cost after each update, preceded by the initial cost.
    std::vector<double> cost_history;
    int iterations = 0;
};

namespace detail {

inline std::size_t medoid_index(const std::vector<std::span<const double>>& members,
                                DtwWorkspace& ws) {
    std::size_t best = 0;
    double best_total = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < members.size(); ++i) {
        double total = 0.0;
        for (std::size_t j = 0; j < members.size(); ++j) {
            if (i == j) continue;
            total += ws.cost(members[i], members[j]);
            if (total >= best_total) break;
        }
        if (total < best_total) {
            best_total = total;
            best = i;
        }
    }
    return best;
}

}  // namespace detail

/// DTW barycentre averaging. Each iteration aligns every member to the current
/// barycentre and replaces each barycentre point with the mean of all member
/// samples mapped onto it; the within-set cost never increases.
inline DbaResult dba(const std::vector<std::span<const double>>& members,
                     const BarycenterConfig& config = {}) {
    config.validate();
    if (members.empty()) throw ConfigError("dba: member set must be non-empty");
    for (const auto& m : members)
        if (m.empty()) throw ConfigError("dba: members must be non-empty");

    DtwWorkspace ws;
    DbaResult result;

    std::size_t init_index;
    if (config.init == BarycenterInit::Medoid || members.size() == 1) {
        init_index = detail::medoid_index(members, ws);
    } else {
        Rng rng(config.seed);
        init_index = static_cast<std::size_t>(rng.uniform_index(members.size()));
    }
    result.barycenter.assign(members[init_index].begin(), members[init_index].end());

    const std::size_t len = result.barycenter.size();
    std::vector<double> sums(len);
    std::vector<std::size_t> counts(len);

    double prev_cost = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < config.max_iters; ++iter) {
        std::fill(sums.begin(), sums.end(), 0.0);
        std::fill(counts.begin(), counts.end(), 0);

        double cost = 0.0;
        for (const auto& member : members) {
            const DtwResult aligned = ws.align(result.barycenter, member);
            cost += aligned.cost;
            for (const auto& [bi, mi] : aligned.path.pairs) {
                sums[bi] += member[mi];
                ++counts[bi];
            }
        }
        if (result.cost_history.empty()) result.cost_history.push_back(cost);

        // Endpoint pinning guarantees every barycentre point is hit at least once.
        for (std::size_t i = 0; i < len; ++i)
            result.barycenter[i] = sums[i] / static_cast<double>(counts[i]);
        result.iterations = iter + 1;

        if (cost == 0.0) break;
        if (prev_cost < std::numeric_limits<double>::infinity() &&
            (prev_cost - cost) / prev_cost < config.rel_tolerance) {
            break;
        }
        prev_cost = cost;
        if (iter > 0) result.cost_history.push_back(cost);
    }

    // Final within-set cost for the returned barycentre.
    double final_cost = 0.0;
    for (const auto& member : members) final_cost += ws.cost(result.barycenter, member);
    result.cost_history.push_back(final_cost);
    return result;
}

inline DbaResult dba(const std::vector<std::vector<double>>& members,
                     const BarycenterConfig& config = {}) {
    std::vector<std::span<const double>> views;
    views.reserve(members.size());
    for (const auto& m : members) views.emplace_back(m.data(), m.size());
    return dba(views, config);
}

}  // namespace harkit
