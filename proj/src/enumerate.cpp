#include "polydual/enumerate.hpp"

#include <cstring>
#include <string>

namespace polydual {

namespace {

std::uint64_t hash_cells(const Cell* p, std::size_t n) {
  std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ n;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    std::uint64_t w;
    std::memcpy(&w, p + i, 8);
    h = (h ^ w) * 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 31;
  }
  std::uint64_t w = 0;
  std::memcpy(&w, p + i, n - i);
  h = (h ^ w) * 0x94D049BB133111EBULL;
  h ^= h >> 29;
  return h;
}

}  // namespace

KeySet::KeySet(std::size_t width) : width_(width), slots_(16, 0) {}

std::size_t KeySet::probe(std::span<const Cell> key) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash_cells(key.data(), width_) & mask;
  while (true) {
    const std::uint32_t id = slots_[s];
    if (id == 0) return s;
    if (std::memcmp(arena_.data() + (id - 1) * width_, key.data(), width_) == 0) return s;
    s = (s + 1) & mask;
  }
}

void KeySet::grow() {
  std::vector<std::uint32_t> old(slots_.size() * 2, 0);
  old.swap(slots_);
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = 0; i < count_; ++i) {
    std::size_t s = hash_cells(arena_.data() + i * width_, width_) & mask;
    while (slots_[s] != 0) s = (s + 1) & mask;
    slots_[s] = static_cast<std::uint32_t>(i + 1);
  }
}

bool KeySet::insert(std::span<const Cell> key) {
  const std::size_t s = probe(key);
  if (slots_[s] != 0) return false;
  if (count_ >= 0xFFFFFFF0U) throw Error(ErrorCode::budget_exceeded, "key set is full");
  arena_.insert(arena_.end(), key.begin(), key.end());
  slots_[s] = static_cast<std::uint32_t>(++count_);
  if (count_ * 2 > slots_.size()) grow();
  return true;
}

bool KeySet::contains(std::span<const Cell> key) const { return slots_[probe(key)] != 0; }

std::size_t KeySet::find(std::span<const Cell> key) const {
  const std::uint32_t id = slots_[probe(key)];
  return id == 0 ? npos : id - 1;
}

void KeySet::merge(const KeySet& other) {
  for (std::size_t i = 0; i < other.size(); ++i) insert(other.key(i));
}

TableSpace TableSpace::for_ring(const FiniteRing& ring, std::size_t width) {
  const std::size_t q = ring.order();
  if (q > kMaxEnumerableRingOrder) {
    throw Error(ErrorCode::precondition, "enumeration needs a ring of order at most " +
                                             std::to_string(kMaxEnumerableRingOrder));
  }
  TableSpace space;
  space.width = width;
  space.radix = q;
  space.add.resize(q * q);
  space.neg.resize(q);
  for (Elem a = 0; a < q; ++a) {
    space.neg[a] = static_cast<Cell>(ring.neg(a));
    for (Elem b = 0; b < q; ++b) space.add[a * q + b] = static_cast<Cell>(ring.add(a, b));
  }
  std::vector<bool> in_span(q, false);
  in_span[0] = true;
  std::vector<Elem> span{0};
  for (Elem e = 1; e < q; ++e) {
    if (in_span[e]) continue;
    space.generators.push_back(static_cast<Cell>(e));
    for (std::size_t i = 0; i < span.size(); ++i) {
      for (Cell g : space.generators) {
        const Elem s = ring.add(span[i], g);
        if (!in_span[s]) {
          in_span[s] = true;
          span.push_back(s);
        }
      }
    }
  }
  return space;
}

void check_budget(const TableSpace& space, std::uint64_t budget, const char* what) {
  const Count leaves = space.leaf_count();
  if (leaves > budget) {
    throw Error(ErrorCode::budget_exceeded, std::string(what) + ": " + to_decimal(leaves) +
                                                " candidates exceed budget " +
                                                std::to_string(budget));
  }
}

std::size_t partition_count(const TableSpace& space) {
  std::size_t parts = 1;
  for (std::size_t j = 0; j < space.positions() && parts < 64; ++j) parts *= space.radix;
  return parts;
}

void FiberedImage::for_each(const TableSpace& space,
                            const std::function<void(std::span<const Cell>)>& f) const {
  const std::size_t w = space.width;
  const std::size_t rest = w - split;
  std::vector<Cell> table(w);
  for (std::size_t b = 0; b < base.size(); ++b) {
    const auto first = base.key(b);
    std::copy(first.begin(), first.end(), table.begin());
    const Cell* lift = lifts.data() + b * rest;
    for (std::size_t d = 0; d < fiber.size(); ++d) {
      const auto delta = fiber.key(d);
      for (std::size_t e = 0; e < rest; ++e) {
        table[split + e] = space.add[lift[e] * space.radix + delta[e]];
      }
      f(table);
    }
  }
}

namespace {

void add_into(const TableSpace& space, const Cell* a, const Cell* b, Cell* out, std::size_t n) {
  for (std::size_t e = 0; e < n; ++e) out[e] = space.add[a[e] * space.radix + b[e]];
}

// Extends the subgroup `group` by the element d.
void extend_subgroup(const TableSpace& space, KeySet& group, std::span<const Cell> d,
                     std::uint64_t budget) {
  if (group.contains(d)) return;
  const std::size_t n = d.size();
  const std::size_t before = group.size();
  std::vector<Cell> multiple(d.begin(), d.end());
  std::vector<Cell> sum(n);
  while (!group.contains(multiple)) {
    for (std::size_t i = 0; i < before; ++i) {
      add_into(space, group.key(i).data(), multiple.data(), sum.data(), n);
      group.insert(sum);
    }
    if (group.size() > budget) {
      throw Error(ErrorCode::budget_exceeded,
                  "closure: subgroup exceeds budget " + std::to_string(budget));
    }
    add_into(space, multiple.data(), d.data(), sum.data(), n);
    multiple = sum;
  }
}

}  // namespace

FiberedImage fibered_closure(const TableSpace& space, std::size_t split, std::uint64_t budget) {
  const std::size_t w = space.width;
  const std::size_t rest = w - split;
  FiberedImage img;
  img.split = split;
  img.base = KeySet(split);
  img.fiber = KeySet(rest);

  KeySet gens(w);
  for (std::size_t j = 0; j < space.positions(); ++j) {
    for (Cell g : space.generators) gens.insert(space.contribution(j, g));
  }

  std::vector<Cell> zero(w, 0);
  img.base.insert(std::span<const Cell>(zero).first(split));
  img.lifts.assign(rest, 0);
  img.fiber.insert(std::span<const Cell>(zero).subspan(split));

  std::vector<Cell> s(w), t(w), d(rest);
  for (std::size_t idx = 0; idx < img.base.size(); ++idx) {
    const auto first = img.base.key(idx);
    std::copy(first.begin(), first.end(), s.begin());
    std::copy_n(img.lifts.data() + idx * rest, rest, s.begin() + static_cast<std::ptrdiff_t>(split));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      add_into(space, s.data(), gens.key(g).data(), t.data(), w);
      const std::span<const Cell> t_first(t.data(), split);
      const std::size_t pos = img.base.find(t_first);
      if (pos == KeySet::npos) {
        img.base.insert(t_first);
        img.lifts.insert(img.lifts.end(), t.begin() + static_cast<std::ptrdiff_t>(split), t.end());
        if (img.base.size() > budget) {
          throw Error(ErrorCode::budget_exceeded,
                      "closure: image exceeds budget " + std::to_string(budget));
        }
      } else if (rest > 0) {
        const Cell* lift = img.lifts.data() + pos * rest;
        for (std::size_t e = 0; e < rest; ++e) {
          d[e] = space.add[t[split + e] * space.radix + space.neg[lift[e]]];
        }
        extend_subgroup(space, img.fiber, d, budget);
      }
    }
  }
  return img;
}

}  // namespace polydual
