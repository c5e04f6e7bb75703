#include "polydual/ring.hpp"

#include "polydual/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace polydual {

namespace {

std::uint64_t ipow_u64(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::size_t local_order(const LocalRingSpec& s) {
  return std::visit(
      [](const auto& v) -> std::size_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZModPrimePower>) {
          return ipow_u64(v.p, v.n);
        } else {
          return ipow_u64(v.p, v.e);
        }
      },
      s);
}

// Dense coefficient vectors over Z_p, low degree first.
using ZpPoly = std::vector<std::uint32_t>;

void trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic b over Z_p.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>(
          (a[shift + i] + static_cast<std::uint64_t>(p - lead) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

bool zp_irreducible(const ZpPoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    const std::uint64_t count = ipow_u64(p, d);
    for (std::uint64_t code = 0; code < count; ++code) {
      ZpPoly g(d + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (zp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::string format_zp_poly(const ZpPoly& coeffs) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const std::uint32_t c = coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += "x";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

void validate_local(const LocalRingSpec& s) {
  if (const auto* z = std::get_if<ZModPrimePower>(&s)) {
    if (!is_prime(z->p)) {
      throw Error(ErrorCode::invalid_ring_spec,
                  "modulus base " + std::to_string(z->p) + " is not prime");
    }
    if (z->n == 0) throw Error(ErrorCode::invalid_ring_spec, "exponent must be >= 1");
    return;
  }
  const auto& g = std::get<GaloisField>(s);
  if (!is_prime(g.p)) {
    throw Error(ErrorCode::invalid_ring_spec,
                "characteristic " + std::to_string(g.p) + " is not prime");
  }
  if (g.e == 0) throw Error(ErrorCode::invalid_ring_spec, "extension degree must be >= 1");
  if (g.modulus.size() != g.e + 1) {
    throw Error(ErrorCode::invalid_ring_spec,
                "modulus must have degree " + std::to_string(g.e));
  }
  if (g.modulus.back() != 1) throw Error(ErrorCode::invalid_ring_spec, "modulus must be monic");
  for (auto c : g.modulus) {
    if (c >= g.p) throw Error(ErrorCode::invalid_ring_spec, "modulus coefficient out of Z_p");
  }
  if (!zp_irreducible(g.modulus, g.p)) {
    throw Error(ErrorCode::invalid_ring_spec,
                "modulus " + format_zp_poly(g.modulus) + " is reducible over Z_" +
                    std::to_string(g.p));
  }
}

std::string local_to_string(const LocalRingSpec& s) {
  if (const auto* z = std::get_if<ZModPrimePower>(&s)) {
    return "Z/" + std::to_string(ipow_u64(z->p, z->n));
  }
  const auto& g = std::get<GaloisField>(s);
  std::string out = "F_" + std::to_string(ipow_u64(g.p, g.e));
  if (!(g.e == 1 && g.modulus == ZpPoly{0, 1})) out += ":" + format_zp_poly(g.modulus);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void validate(const RingSpec& spec) {
  std::size_t order = 0;
  if (const auto* sum = std::get_if<DirectSum>(&spec)) {
    if (sum->summands.size() < 2) {
      throw Error(ErrorCode::invalid_ring_spec, "direct sum needs at least two summands");
    }
    order = 1;
    for (const auto& s : sum->summands) {
      validate_local(s);
      order *= local_order(s);
      if (order > kMaxRingOrder) break;
    }
  } else {
    const LocalRingSpec local = std::holds_alternative<ZModPrimePower>(spec)
                                    ? LocalRingSpec{std::get<ZModPrimePower>(spec)}
                                    : LocalRingSpec{std::get<GaloisField>(spec)};
    validate_local(local);
    order = local_order(local);
  }
  if (order > kMaxRingOrder) {
    throw Error(ErrorCode::invalid_ring_spec,
                "ring order exceeds " + std::to_string(kMaxRingOrder));
  }
}

std::string to_string(const RingSpec& spec) {
  if (const auto* sum = std::get_if<DirectSum>(&spec)) {
    std::string out;
    for (const auto& s : sum->summands) {
      if (!out.empty()) out += " (+) ";
      out += local_to_string(s);
    }
    return out;
  }
  if (const auto* z = std::get_if<ZModPrimePower>(&spec)) return local_to_string(*z);
  return local_to_string(std::get<GaloisField>(spec));
}

FiniteRing::FiniteRing(RingSpec spec) : spec_(std::move(spec)) {}

RingPtr FiniteRing::build(const RingSpec& spec) {
  validate(spec);
  auto ring = std::make_shared<FiniteRing>(spec);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, ZModPrimePower>) {
          ring->tabulate_zmod(s);
        } else if constexpr (std::is_same_v<T, GaloisField>) {
          ring->tabulate_gf(s);
        } else {
          ring->tabulate_sum(s);
        }
      },
      spec);
  ring->finish();
  return ring;
}

void FiniteRing::tabulate_zmod(const ZModPrimePower& s) {
  order_ = ipow_u64(s.p, s.n);
  one_ = order_ == 1 ? 0 : 1;
  add_.resize(order_ * order_);
  mul_.resize(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      add_[a * order_ + b] = static_cast<Elem>((a + b) % order_);
      mul_[a * order_ + b] = static_cast<Elem>((a * b) % order_);
    }
  }
}

void FiniteRing::tabulate_gf(const GaloisField& s) {
  const std::uint32_t p = s.p;
  const std::size_t e = s.e;
  order_ = ipow_u64(p, e);
  one_ = 1;
  auto digits = [&](std::size_t idx) {
    ZpPoly d(e, 0);
    for (std::size_t i = 0; i < e; ++i) {
      d[i] = static_cast<std::uint32_t>(idx % p);
      idx /= p;
    }
    return d;
  };
  auto encode = [&](const ZpPoly& d) {
    std::size_t idx = 0;
    for (std::size_t i = d.size(); i-- > 0;) idx = idx * p + d[i];
    return static_cast<Elem>(idx);
  };
  add_.resize(order_ * order_);
  mul_.resize(order_ * order_);
  for (std::size_t a = 0; a < order_; ++a) {
    const ZpPoly da = digits(a);
    for (std::size_t b = 0; b < order_; ++b) {
      const ZpPoly db = digits(b);
      ZpPoly sum(e);
      for (std::size_t i = 0; i < e; ++i) sum[i] = (da[i] + db[i]) % p;
      add_[a * order_ + b] = encode(sum);
      ZpPoly prod(2 * e - 1, 0);
      for (std::size_t i = 0; i < e; ++i) {
        for (std::size_t j = 0; j < e; ++j) {
          prod[i + j] = static_cast<std::uint32_t>(
              (prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % p);
        }
      }
      ZpPoly r = zp_mod(prod, s.modulus, p);
      r.resize(e, 0);
      mul_[a * order_ + b] = encode(r);
    }
  }
}

void FiniteRing::tabulate_sum(const DirectSum& s) {
  order_ = 1;
  for (const auto& local : s.summands) {
    RingPtr part = std::visit([](const auto& v) { return FiniteRing::build(RingSpec{v}); }, local);
    strides_.push_back(order_);
    order_ *= part->order();
    parts_.push_back(std::move(part));
  }
  std::vector<Elem> ones(parts_.size());
  for (std::size_t i = 0; i < parts_.size(); ++i) ones[i] = parts_[i]->one();
  one_ = combine(ones);
  add_.resize(order_ * order_);
  mul_.resize(order_ * order_);
  std::vector<Elem> sum(parts_.size()), prod(parts_.size());
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        const Elem ai = component(static_cast<Elem>(a), i);
        const Elem bi = component(static_cast<Elem>(b), i);
        sum[i] = parts_[i]->add(ai, bi);
        prod[i] = parts_[i]->mul(ai, bi);
      }
      add_[a * order_ + b] = combine(sum);
      mul_[a * order_ + b] = combine(prod);
    }
  }
}

void FiniteRing::finish() {
  neg_.assign(order_, 0);
  inv_.assign(order_, kNoInverse);
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = 0; b < order_; ++b) {
      if (add(a, b) == zero()) neg_[a] = b;
      if (mul(a, b) == one_) inv_[a] = b;
    }
  }
  unit_count_ = static_cast<std::size_t>(
      std::count_if(inv_.begin(), inv_.end(), [](Elem x) { return x != kNoInverse; }));
  multiples_of_one_.clear();
  Elem m = zero();
  do {
    multiples_of_one_.push_back(m);
    m = add(m, one_);
  } while (m != zero());
}

Elem FiniteRing::pow(Elem a, std::uint64_t e) const {
  Elem result = one_;
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

Elem FiniteRing::from_integer(std::int64_t n) const {
  const auto c = static_cast<std::int64_t>(multiples_of_one_.size());
  return multiples_of_one_[static_cast<std::size_t>(((n % c) + c) % c)];
}

Elem FiniteRing::inverse(Elem a) const {
  if (!is_unit(a)) {
    throw Error(ErrorCode::not_a_unit, "not a unit: " + format(a) + " in " + to_string(spec_));
  }
  return inv_[a];
}

std::optional<LocalStructure> FiniteRing::local_structure() const {
  if (is_direct_sum()) return std::nullopt;
  LocalStructure ls;
  if (const auto* z = std::get_if<ZModPrimePower>(&spec_)) {
    for (std::size_t a = 0; a < order_; a += z->p) ls.maximal_ideal.push_back(a);
    ls.nilpotency = z->n;
    ls.residue_field = z->n == 1 ? shared_from_this()
                                 : FiniteRing::build(ZModPrimePower{z->p, 1});
    ls.residue_map.resize(order_);
    for (std::size_t a = 0; a < order_; ++a) ls.residue_map[a] = static_cast<Elem>(a % z->p);
  } else {
    ls.maximal_ideal = {0};
    ls.nilpotency = 1;
    ls.residue_field = shared_from_this();
    ls.residue_map.resize(order_);
    std::iota(ls.residue_map.begin(), ls.residue_map.end(), Elem{0});
  }
  return ls;
}

std::vector<RingPtr> FiniteRing::summands() const {
  if (is_direct_sum()) return parts_;
  return {shared_from_this()};
}

Elem FiniteRing::component(Elem a, std::size_t i) const {
  if (!is_direct_sum()) return a;
  return static_cast<Elem>((a / strides_[i]) % parts_[i]->order());
}

Elem FiniteRing::combine(std::span<const Elem> parts) const {
  if (!is_direct_sum()) return parts.front();
  std::size_t idx = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) idx += parts[i] * strides_[i];
  return static_cast<Elem>(idx);
}

std::string FiniteRing::format(Elem a) const {
  if (!is_direct_sum()) return std::to_string(a);
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += parts_[i]->format(component(a, i));
  }
  return out + ")";
}

Elem FiniteRing::parse_literal(std::string_view text) const {
  auto parse_index = [](std::string_view t, std::size_t limit, std::size_t base_offset) {
    std::size_t b = 0;
    while (b < t.size() && t[b] == ' ') ++b;
    std::size_t e = t.size();
    while (e > b && t[e - 1] == ' ') --e;
    std::uint64_t v = 0;
    const auto* first = t.data() + b;
    const auto* last = t.data() + e;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw ParseError("expected element literal", base_offset + b);
    }
    if (v >= limit) {
      throw ParseError("coefficient " + std::to_string(v) + " out of ring", base_offset + b);
    }
    return static_cast<Elem>(v);
  };
  if (!text.empty() && text.front() == '(') {
    if (!is_direct_sum()) throw ParseError("tuple literal in a local ring", 0);
    if (text.back() != ')') throw ParseError("unterminated tuple literal", text.size());
    std::vector<Elem> comps;
    std::size_t start = 1;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] == ',' || i + 1 == text.size()) {
        if (comps.size() >= parts_.size()) throw ParseError("too many tuple components", i);
        const auto& part = parts_[comps.size()];
        comps.push_back(parse_index(text.substr(start, i - start), part->order(), start));
        start = i + 1;
      }
    }
    if (comps.size() != parts_.size()) {
      throw ParseError("expected " + std::to_string(parts_.size()) + " tuple components",
                       text.size());
    }
    return combine(comps);
  }
  return parse_index(text, order_, 0);
}

bool is_unit(const RingElement& a) { return a.ring->is_unit(a.index); }

RingElement inverse(const RingElement& a) { return {a.ring, a.ring->inverse(a.index)}; }

}  // namespace polydual
