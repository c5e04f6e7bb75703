#include "polydual/dual.hpp"

#include "polydual/error.hpp"

namespace polydual {

DualRing::DualRing(RingPtr base, std::size_t k) : base_(std::move(base)), k_(k) {
  if (k_ == 0) throw Error(ErrorCode::precondition, "dual ring needs k >= 1");
}

Count DualRing::order() const { return ipow(Count(base_->order()), k_ + 1); }

void DualRing::check(const DualElement& x) const {
  if (x.coords.size() != k_ + 1) {
    throw Error(ErrorCode::ring_mismatch,
                "element has " + std::to_string(x.coords.size() - 1) +
                    " dual parts, ring has " + std::to_string(k_));
  }
}

DualElement DualRing::embed(Elem a) const {
  DualElement x = zero();
  x.coords[0] = a;
  return x;
}

DualElement DualRing::alpha(std::size_t i) const {
  DualElement x = zero();
  x.coords.at(i) = base_->one();
  return x;
}

DualElement DualRing::add(const DualElement& x, const DualElement& y) const {
  check(x);
  check(y);
  DualElement r = zero();
  for (std::size_t i = 0; i <= k_; ++i) r.coords[i] = base_->add(x.coords[i], y.coords[i]);
  return r;
}

DualElement DualRing::neg(const DualElement& x) const {
  check(x);
  DualElement r = zero();
  for (std::size_t i = 0; i <= k_; ++i) r.coords[i] = base_->neg(x.coords[i]);
  return r;
}

DualElement DualRing::sub(const DualElement& x, const DualElement& y) const {
  return add(x, neg(y));
}

DualElement DualRing::mul(const DualElement& x, const DualElement& y) const {
  check(x);
  check(y);
  const FiniteRing& R = *base_;
  DualElement r = zero();
  r.coords[0] = R.mul(x.coords[0], y.coords[0]);
  for (std::size_t i = 1; i <= k_; ++i) {
    r.coords[i] = R.add(R.mul(x.coords[0], y.coords[i]), R.mul(y.coords[0], x.coords[i]));
  }
  return r;
}

bool DualRing::is_unit(const DualElement& x) const {
  check(x);
  return base_->is_unit(x.constant());
}

DualElement DualRing::inverse(const DualElement& x) const {
  check(x);
  const FiniteRing& R = *base_;
  if (!R.is_unit(x.constant())) {
    throw Error(ErrorCode::not_a_unit, "not a unit: " + format(x) + " in " + spec_string());
  }
  const Elem inv0 = R.inverse(x.constant());
  const Elem inv0_sq = R.mul(inv0, inv0);
  DualElement r = zero();
  r.coords[0] = inv0;
  for (std::size_t i = 1; i <= k_; ++i) r.coords[i] = R.neg(R.mul(inv0_sq, x.coords[i]));
  return r;
}

std::uint64_t DualRing::enumerable_order() const {
  if (k_ > kMaxEnumerableK) {
    throw Error(ErrorCode::precondition,
                "enumeration supports k <= " + std::to_string(kMaxEnumerableK));
  }
  const Count ord = order();
  if (ord > kMaxEnumerableDualOrder) {
    throw Error(ErrorCode::precondition, spec_string() + " is too large to enumerate");
  }
  return static_cast<std::uint64_t>(ord);
}

std::optional<LocalStructure> DualRing::local_structure() const {
  auto base_ls = base_->local_structure();
  if (!base_ls) return std::nullopt;
  const std::uint64_t n = enumerable_order();
  const std::size_t q = base_->order();
  std::vector<bool> in_m(q, false);
  for (auto a : base_ls->maximal_ideal) in_m[a] = true;
  LocalStructure ls;
  ls.nilpotency = base_ls->nilpotency + 1;
  ls.residue_field = base_ls->residue_field;
  ls.residue_map.resize(n);
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    const auto a0 = static_cast<Elem>(idx % q);
    if (in_m[a0]) ls.maximal_ideal.push_back(idx);
    ls.residue_map[idx] = base_ls->residue_map[a0];
  }
  return ls;
}

std::uint64_t DualRing::index(const DualElement& x) const {
  check(x);
  std::uint64_t idx = 0;
  for (std::size_t i = k_ + 1; i-- > 0;) idx = idx * base_->order() + x.coords[i];
  return idx;
}

DualElement DualRing::element(std::uint64_t idx) const {
  DualElement x = zero();
  for (std::size_t i = 0; i <= k_; ++i) {
    x.coords[i] = static_cast<Elem>(idx % base_->order());
    idx /= base_->order();
  }
  return x;
}

std::vector<DualElement> DualRing::enumerate() const {
  const std::uint64_t n = enumerable_order();
  std::vector<DualElement> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(element(i));
  return out;
}

std::string DualRing::format(const DualElement& x) const {
  check(x);
  std::string out;
  if (x.coords[0] != 0) out = base_->format(x.coords[0]);
  for (std::size_t i = 1; i <= k_; ++i) {
    if (x.coords[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (x.coords[i] != base_->one()) out += base_->format(x.coords[i]) + "*";
    out += "a" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string DualRing::spec_string() const {
  return to_string(base_->spec()) + "[" + std::to_string(k_) + "]";
}

}  // namespace polydual
