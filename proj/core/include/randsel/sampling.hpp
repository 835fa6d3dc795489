#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "randsel/rng.hpp"

namespace randsel {

/// Sorted, duplicate-free collection of feature indices.
using FeatureSet = std::vector<int>;

/// Derives one 64-bit seed per task index from a master seed. Identical
/// (master_seed, index) pairs always produce the identical task seed.
struct SeedPlan {
    std::uint64_t master_seed = 0;

    std::uint64_t task_seed(std::uint64_t index) const {
        return splitmix64_at(master_seed, index);
    }
};

enum class TaskKind {
    Base, ///< feature subset of size floor(n_active / 2)
    Plus, ///< feature subset of size floor(n_active / 2) + 1
};

/// One alignment evaluation unit: a feature subset plus a row subsample.
/// Tasks are immutable values and may be evaluated concurrently.
struct SubsampleTask {
    FeatureSet features;
    std::vector<int> rows;
    std::uint64_t seed = 0;
    TaskKind kind = TaskKind::Base;
};

/// Uniformly random size-subset of `active` via a partial Fisher-Yates
/// shuffle, returned sorted. Deterministic per seed.
FeatureSet draw_feature_subset(const FeatureSet& active, int size, std::uint64_t seed);

/// Bootstrap row sample: s indices drawn with replacement from [0, m).
/// In balanced mode the s slots are split evenly across classes (remainder
/// to the rarest classes first) and drawn with replacement within class;
/// `labels` must then hold the m per-row class values.
std::vector<int> draw_rows(int m, int s, std::uint64_t seed, bool balanced = false,
                           std::span<const int> labels = {});

/// Draws the BASE and PLUS tasks for one loop step: independent feature
/// subsets of sizes floor(n/2) and floor(n/2)+1 and independent row
/// subsamples, seeded from consecutive counter slots 2*pair_index and
/// 2*pair_index + 1. Within a task the feature subset is drawn first, then
/// the rows. Returns nullopt once fewer than 3 features remain (the
/// selector's terminal state).
std::optional<std::pair<SubsampleTask, SubsampleTask>> make_task_pair(
    const FeatureSet& active, int m, int s, const SeedPlan& plan, std::uint64_t pair_index,
    bool balanced = false, std::span<const int> labels = {});

} // namespace randsel
