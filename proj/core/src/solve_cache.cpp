#include "ringnim/solver.hpp"

namespace ringnim {

std::size_t SolveCache::Hash::operator()(const KeyView& key) const noexcept {
  // FNV-1a over the rules and piles.
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(key.variant));
  mix(key.k);
  mix(key.piles.size());
  for (Pile p : key.piles) mix(p);
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::optional<Status> SolveCache::find(const Rules& rules,
                                       std::span<const Pile> canonical) const {
  const KeyView key{rules.variant, rules.k, canonical};
  const std::size_t h = Hash{}(key);
  Shard& shard = shard_for(h);
  std::shared_lock lock(shard.mutex);
  auto it = shard.table.find(key);
  if (it == shard.table.end()) return std::nullopt;
  return it->second;
}

void SolveCache::store(const Rules& rules, std::span<const Pile> canonical,
                       Status s) {
  Key key{rules.variant, rules.k, {canonical.begin(), canonical.end()}};
  const std::size_t h = Hash{}(key);
  Shard& shard = shard_for(h);
  std::unique_lock lock(shard.mutex);
  shard.table.insert_or_assign(std::move(key), s);
}

std::size_t SolveCache::size() const {
  std::size_t n = 0;
  for (const Shard& shard : shards_) {
    std::shared_lock lock(shard.mutex);
    n += shard.table.size();
  }
  return n;
}

void SolveCache::clear() {
  for (Shard& shard : shards_) {
    std::unique_lock lock(shard.mutex);
    shard.table.clear();
  }
}

}  // namespace ringnim
