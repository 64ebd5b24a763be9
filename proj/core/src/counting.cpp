#include "liquidpower/counting.hpp"

#include <stdexcept>

namespace liquidpower {

BigInt PartitionCounter::zero_ = 0;

std::size_t PartitionCounter::KeyHash::operator()(const Key& k) const {
    std::uint64_t h = 0x9E3779B97F4A7C15ull;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        h *= 0xFF51AFD7ED558CCDull;
    };
    for (int v : k.n) mix(static_cast<std::uint64_t>(v));
    for (std::int64_t v : k.w) mix(static_cast<std::uint64_t>(v));
    return static_cast<std::size_t>(h);
}

PartitionCounter::PartitionCounter(std::span<const std::int64_t> item_weights, int groups)
    : groups_(groups), items_(static_cast<int>(item_weights.size())) {
    if (groups_ < 2 || groups_ > max_groups)
        throw std::invalid_argument("PartitionCounter: groups must be in [2, 4]");
    for (std::int64_t w : item_weights) {
        if (w < 0) throw std::invalid_argument("PartitionCounter: negative item weight");
        total_weight_ += w;
    }

    const int tracked = groups_ - 1;
    table_.emplace(Key{}, BigInt(1));
    std::unordered_map<Key, BigInt, KeyHash> next;
    for (std::int64_t w : item_weights) {
        next.clear();
        next.reserve(table_.size() * (tracked + 1));
        for (const auto& [key, cnt] : table_) {
            next[key] += cnt; // item joins the implicit last group
            for (int g = 0; g < tracked; ++g) {
                Key grown = key;
                grown.n[g] += 1;
                grown.w[g] += w;
                next[grown] += cnt;
            }
        }
        table_.swap(next);
    }
}

const BigInt& PartitionCounter::count(std::span<const int> sizes,
                                      std::span<const std::int64_t> group_weights) const {
    const int tracked = groups_ - 1;
    if (static_cast<int>(sizes.size()) != tracked ||
        static_cast<int>(group_weights.size()) != tracked)
        throw std::invalid_argument("PartitionCounter: expected sizes/weights for the first "
                                    "groups-1 groups");
    Key key;
    for (int g = 0; g < tracked; ++g) {
        if (sizes[g] < 0 || group_weights[g] < 0) return zero_;
        key.n[g] = sizes[g];
        key.w[g] = group_weights[g];
    }
    const auto it = table_.find(key);
    return it == table_.end() ? zero_ : it->second;
}

BigInt count_partitions(std::span<const std::int64_t> item_weights, int groups,
                        std::span<const int> sizes,
                        std::span<const std::int64_t> group_weights) {
    return PartitionCounter(item_weights, groups).count(sizes, group_weights);
}

} // namespace liquidpower
