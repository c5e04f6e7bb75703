#pragma once

#include "polydual/bigint.hpp"
#include "polydual/error.hpp"
#include "polydual/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <thread>
#include <vector>

namespace polydual {

/// Table entry during enumeration; enumeration needs |R| <= 256.
using Cell = std::uint8_t;
inline constexpr std::size_t kMaxEnumerableRingOrder = 256;
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Set of fixed-width byte strings, kept in insertion order.
class KeySet {
 public:
  explicit KeySet(std::size_t width = 0);

  /// True if the key was not present.
  bool insert(std::span<const Cell> key);
  bool contains(std::span<const Cell> key) const;
  /// Insertion index of a key, or npos.
  std::size_t find(std::span<const Cell> key) const;
  static constexpr std::size_t npos = ~std::size_t{0};

  std::size_t size() const noexcept { return count_; }
  std::size_t width() const noexcept { return width_; }
  std::span<const Cell> key(std::size_t i) const {
    return {arena_.data() + i * width_, width_};
  }
  void merge(const KeySet& other);

 private:
  std::size_t probe(std::span<const Cell> key) const;
  void grow();

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<Cell> arena_;
  std::vector<std::uint32_t> slots_;  // key index + 1; 0 marks empty
};

/// The image of R^n under a map that is additive in each coordinate:
/// coefficient vector (c_0..c_{n-1}) maps to sum_j contribution(j, c_j),
/// summed entrywise in R. Every table space in this library (function
/// tables, pair tables, dual-ring tables) has this shape.
struct TableSpace {
  std::size_t width = 0;
  std::size_t radix = 0;
  std::vector<Cell> add;  // radix x radix
  std::vector<Cell> neg;  // radix
  /// contributions[j] holds radix tables of `width` cells, one per c.
  std::vector<std::vector<Cell>> contributions;
  /// Additive generators of R, as element indices.
  std::vector<Cell> generators;

  static TableSpace for_ring(const FiniteRing& ring, std::size_t width);

  std::size_t positions() const noexcept { return contributions.size(); }
  Count leaf_count() const { return ipow(Count(radix), positions()); }
  std::span<const Cell> contribution(std::size_t j, std::size_t c) const {
    return {contributions[j].data() + c * width, width};
  }
  void add_position(std::vector<Cell> tables) { contributions.push_back(std::move(tables)); }
};

struct EnumOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
};

/// Throws Error(budget_exceeded) when the space has more than `budget` leaves.
void check_budget(const TableSpace& space, std::uint64_t budget, const char* what);

/// Partition count used by `sweep`. It depends only on the space, never on
/// the worker count, so per-partition results are reproducible.
std::size_t partition_count(const TableSpace& space);

/// Visits every coefficient vector with its table, depth-first with the
/// first positions outermost. Partitions (fixed-length prefixes) are handed
/// to workers; the returned states are in partition order, so merging them in
/// order gives results independent of `workers`.
///
/// visit(State&, std::span<const Cell> digits, std::span<const Cell> table)
template <class State, class Make, class Visit>
std::vector<State> sweep(const TableSpace& space, const EnumOptions& opt, Make make,
                         Visit visit) {
  check_budget(space, opt.budget, "sweep");
  const std::size_t n = space.positions();
  const std::size_t parts = partition_count(space);
  std::size_t prefix_len = 0;
  for (std::size_t p = 1; p < parts; p *= space.radix) ++prefix_len;

  std::vector<State> states;
  states.reserve(parts);
  for (std::size_t i = 0; i < parts; ++i) states.push_back(make());

  auto run_partition = [&](std::size_t part) {
    State& state = states[part];
    const std::size_t w = space.width;
    std::vector<std::vector<Cell>> partial(n + 1, std::vector<Cell>(w, 0));
    std::vector<Cell> digits(n, 0);
    std::size_t rest = part;
    for (std::size_t j = prefix_len; j-- > 0;) {
      digits[j] = static_cast<Cell>(rest % space.radix);
      rest /= space.radix;
    }
    for (std::size_t j = 0; j < prefix_len; ++j) {
      const auto c = space.contribution(j, digits[j]);
      for (std::size_t e = 0; e < w; ++e) {
        partial[j + 1][e] = space.add[partial[j][e] * space.radix + c[e]];
      }
    }
    auto recurse = [&](auto& self, std::size_t j) -> void {
      if (j == n) {
        visit(state, std::span<const Cell>(digits), std::span<const Cell>(partial[n]));
        return;
      }
      const Cell* prev = partial[j].data();
      Cell* next = partial[j + 1].data();
      const Cell* add = space.add.data();
      const std::size_t radix = space.radix;
      for (std::size_t c = 0; c < radix; ++c) {
        const Cell* contrib = space.contributions[j].data() + c * w;
        for (std::size_t e = 0; e < w; ++e) next[e] = add[prev[e] * radix + contrib[e]];
        digits[j] = static_cast<Cell>(c);
        self(self, j + 1);
      }
    };
    recurse(recurse, prefix_len);
  };

  const unsigned workers = std::max(1U, opt.workers);
  if (workers == 1) {
    for (std::size_t part = 0; part < parts; ++part) run_partition(part);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t part = next++; part < parts; part = next++) run_partition(part);
      });
    }
  }
  return states;
}

/// Distinct leaf tables for which keep(table) holds, in first-seen order.
template <class Keep>
KeySet distinct_tables(const TableSpace& space, const EnumOptions& opt, Keep keep) {
  auto states = sweep<KeySet>(
      space, opt, [&] { return KeySet(space.width); },
      [&](KeySet& seen, std::span<const Cell>, std::span<const Cell> table) {
        if (keep(table)) seen.insert(table);
      });
  KeySet all(space.width);
  for (const auto& s : states) all.merge(s);
  return all;
}

inline KeySet distinct_tables(const TableSpace& space, const EnumOptions& opt) {
  return distinct_tables(space, opt, [](std::span<const Cell>) { return true; });
}

/// Additive subgroup generated by the space's contributions, enumerated in
/// two layers: the image of the first `split` cells, and the fiber over zero
/// (the last width - split cells of elements whose first part vanishes).
/// The full image is {rep(F) + (0, D)} and its order is
/// base.size() * fiber.size().
struct FiberedImage {
  std::size_t split = 0;
  KeySet base;               // distinct first parts
  std::vector<Cell> lifts;   // second part of one preimage per base key
  KeySet fiber;              // second parts over the zero first part

  Count order() const { return Count(base.size()) * fiber.size(); }
  /// Calls f(full_table) for every element of the image.
  void for_each(const TableSpace& space, const std::function<void(std::span<const Cell>)>& f) const;
};

/// Breadth-first closure over the first projection using one generator per
/// (position, additive generator of R), then closure of the fiber from its
/// Schreier elements rep(F) + g - rep(F + g). Throws Error(budget_exceeded)
/// if either layer grows past `budget`.
FiberedImage fibered_closure(const TableSpace& space, std::size_t split, std::uint64_t budget);

}  // namespace polydual
