#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace ht::detail {

template <class R>
R distinct_word_sum(std::span<const std::pair<R, int>> groups, std::vector<int>& counts,
                    std::map<std::vector<int>, R>& memo, const R& zero, const R& one) {
    bool empty = true;
    for (int c : counts)
        if (c > 0) empty = false;
    if (empty) return one;
    auto it = memo.find(counts);
    if (it != memo.end()) return it->second;
    R acc = zero;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        if (counts[i] == 0) continue;
        --counts[i];
        acc = acc + groups[i].first * distinct_word_sum(groups, counts, memo, zero, one);
        ++counts[i];
    }
    memo.emplace(counts, acc);
    return acc;
}

/// (1/N!) sum over all N! arrangements of the multiset given as
/// (element, multiplicity) groups.  Only distinct orderings are walked;
/// the repeated ones contribute through the multinomial weight.
template <class R>
R grouped_symmetrized_product(std::span<const std::pair<R, int>> groups, const R& zero,
                              const R& one) {
    std::vector<int> counts;
    counts.reserve(groups.size());
    for (const auto& g : groups) counts.push_back(g.second);
    std::map<std::vector<int>, R> memo;
    R sum = distinct_word_sum(groups, counts, memo, zero, one);
    double weight = 1.0;
    int placed = 0;
    for (int c : counts)
        for (int j = 1; j <= c; ++j) weight *= static_cast<double>(j) / ++placed;
    return weight * sum;
}

} // namespace ht::detail
