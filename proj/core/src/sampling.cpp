#include "randsel/sampling.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "randsel/errors.hpp"

namespace randsel {

namespace {

FeatureSet draw_subset_with(Xoshiro256ss& rng, const FeatureSet& active, int size) {
    const int n = static_cast<int>(active.size());
    if (size < 1 || size > n)
        throw ParamError("subset size " + std::to_string(size) + " out of range for " +
                         std::to_string(n) + " active features");

    // partial Fisher-Yates: the first `size` slots end up a uniform subset
    FeatureSet pool = active;
    for (int i = 0; i < size; ++i) {
        const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    return pool;
}

std::vector<int> draw_rows_with(Xoshiro256ss& rng, int m, int s, bool balanced,
                                std::span<const int> labels) {
    if (m < 1) throw ParamError("draw_rows requires at least one row");
    if (s < 1) throw ParamError("draw_rows requires a positive sample size");

    std::vector<int> rows;
    rows.reserve(s);
    if (!balanced) {
        for (int i = 0; i < s; ++i)
            rows.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(m))));
        return rows;
    }

    if (static_cast<int>(labels.size()) != m)
        throw ParamError("balanced sampling needs one label per row");

    // class id -> row indices, iterated in ascending id order
    std::map<int, std::vector<int>> by_class;
    for (int i = 0; i < m; ++i) by_class[labels[i]].push_back(i);
    if (by_class.size() < 2)
        throw DegenerateLabelError("balanced sampling requires at least two classes present");

    const int n_classes = static_cast<int>(by_class.size());
    const int base = s / n_classes;
    int remainder = s - base * n_classes;

    std::map<int, int> quota;
    for (const auto& [cls, members] : by_class) quota[cls] = base;
    // leftover slots go to the rarest classes first; ties to the smaller id
    std::vector<std::pair<int, int>> by_rarity; // (count, class id)
    for (const auto& [cls, members] : by_class)
        by_rarity.emplace_back(static_cast<int>(members.size()), cls);
    std::sort(by_rarity.begin(), by_rarity.end());
    for (int i = 0; remainder > 0; ++i, --remainder)
        ++quota[by_rarity[static_cast<std::size_t>(i)].second];

    for (const auto& [cls, members] : by_class) {
        const auto count = static_cast<std::uint64_t>(members.size());
        for (int i = 0; i < quota[cls]; ++i)
            rows.push_back(members[static_cast<std::size_t>(rng.below(count))]);
    }
    return rows;
}

} // namespace

FeatureSet draw_feature_subset(const FeatureSet& active, int size, std::uint64_t seed) {
    Xoshiro256ss rng(seed);
    return draw_subset_with(rng, active, size);
}

std::vector<int> draw_rows(int m, int s, std::uint64_t seed, bool balanced,
                           std::span<const int> labels) {
    Xoshiro256ss rng(seed);
    return draw_rows_with(rng, m, s, balanced, labels);
}

std::optional<std::pair<SubsampleTask, SubsampleTask>> make_task_pair(
    const FeatureSet& active, int m, int s, const SeedPlan& plan, std::uint64_t pair_index,
    bool balanced, std::span<const int> labels) {
    const int n = static_cast<int>(active.size());
    if (n < 3) return std::nullopt;

    const int base_size = n / 2;
    const int plus_size = base_size + 1;

    auto build = [&](TaskKind kind, int size, std::uint64_t seed) {
        SubsampleTask task;
        task.kind = kind;
        task.seed = seed;
        Xoshiro256ss rng(seed);
        // subset first, rows second, from the task's own stream
        task.features = draw_subset_with(rng, active, size);
        task.rows = draw_rows_with(rng, m, s, balanced, labels);
        return task;
    };

    SubsampleTask base = build(TaskKind::Base, base_size, plan.task_seed(2 * pair_index));
    SubsampleTask plus = build(TaskKind::Plus, plus_size, plan.task_seed(2 * pair_index + 1));
    return std::make_pair(std::move(base), std::move(plus));
}

} // namespace randsel
