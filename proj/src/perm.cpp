#include "mpt/perm.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mpt/error.hpp"

namespace mpt {

namespace {

void require_same_size(const PermSystem &s, const PermSystem &t) {
  if (s.size() != t.size())
    throw Error(ErrorKind::dimension,
                "atom counts differ: " + std::to_string(s.size()) + " vs " + std::to_string(t.size()));
}

std::int64_t as_signed(std::size_t n) { return static_cast<std::int64_t>(n); }

} // namespace

PermSystem::PermSystem(std::vector<Atom> images) : map_(std::move(images)) {
  if (map_.empty())
    throw Error(ErrorKind::input, "a permutation needs at least one atom");
  std::vector<char> seen(map_.size(), 0);
  for (Atom y : map_) {
    if (y >= map_.size() || seen[y])
      throw Error(ErrorKind::input, "images do not form a bijection");
    seen[y] = 1;
  }
}

PermSystem PermSystem::identity(std::size_t n) {
  std::vector<Atom> images(n);
  std::iota(images.begin(), images.end(), Atom{0});
  return PermSystem(std::move(images));
}

bool PermSystem::is_identity() const noexcept {
  for (std::size_t x = 0; x < map_.size(); ++x)
    if (map_[x] != x)
      return false;
  return true;
}

AtomSet::AtomSet(std::size_t n, std::vector<Atom> members) : n_(n), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw Error(ErrorKind::input, "repeated set member");
  if (!members_.empty() && members_.back() >= n_)
    throw Error(ErrorKind::input, "set member " + std::to_string(members_.back()) + " out of range");
}

AtomSet AtomSet::from_mask(std::span<const char> mask) {
  AtomSet out(mask.size());
  for (std::size_t x = 0; x < mask.size(); ++x)
    if (mask[x])
      out.members_.push_back(static_cast<Atom>(x));
  return out;
}

bool AtomSet::contains(Atom x) const { return std::binary_search(members_.begin(), members_.end(), x); }

std::vector<char> AtomSet::mask() const {
  std::vector<char> m(n_, 0);
  for (Atom x : members_)
    m[x] = 1;
  return m;
}

AtomSet set_union(const AtomSet &a, const AtomSet &b) {
  if (a.universe() != b.universe())
    throw Error(ErrorKind::dimension, "sets live on different atom counts");
  std::vector<Atom> merged;
  merged.reserve(a.count() + b.count());
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(merged));
  return AtomSet(a.universe(), std::move(merged));
}

WeakNeighborhood::WeakNeighborhood(PermSystem center_, std::vector<AtomSet> sets_, Rational epsilon_)
    : center(std::move(center_)), sets(std::move(sets_)), epsilon(epsilon_) {
  if (epsilon <= 0)
    throw Error(ErrorKind::input, "neighborhood epsilon must be positive");
  std::vector<char> used(center.size(), 0);
  for (const auto &a : sets) {
    if (a.universe() != center.size())
      throw Error(ErrorKind::dimension, "neighborhood set has the wrong atom count");
    for (Atom x : a.members()) {
      if (used[x])
        throw Error(ErrorKind::input, "neighborhood sets must be pairwise disjoint");
      used[x] = 1;
    }
  }
}

PermSystem compose(const PermSystem &s, const PermSystem &t) {
  require_same_size(s, t);
  std::vector<Atom> out(s.size());
  for (Atom x = 0; x < out.size(); ++x)
    out[x] = s(t(x));
  return PermSystem(std::move(out));
}

PermSystem inverse(const PermSystem &t) {
  std::vector<Atom> out(t.size());
  for (Atom x = 0; x < out.size(); ++x)
    out[t(x)] = x;
  return PermSystem(std::move(out));
}

PermSystem conjugate(const PermSystem &h, const PermSystem &t) {
  require_same_size(h, t);
  // h t h^-1 sends h(x) to h(t(x)).
  std::vector<Atom> out(t.size());
  for (Atom x = 0; x < out.size(); ++x)
    out[h(x)] = h(t(x));
  return PermSystem(std::move(out));
}

PermSystem power(const PermSystem &t, std::int64_t k) {
  PermSystem base = k < 0 ? inverse(t) : t;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  PermSystem result = PermSystem::identity(t.size());
  while (e > 0) {
    if (e & 1)
      result = compose(base, result);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

AtomSet disagreement(const PermSystem &s, const PermSystem &t) {
  require_same_size(s, t);
  std::vector<char> mask(s.size(), 0);
  for (Atom x = 0; x < s.size(); ++x)
    mask[x] = s(x) != t(x);
  return AtomSet::from_mask(mask);
}

Rational halmos_distance(const PermSystem &s, const PermSystem &t) {
  require_same_size(s, t);
  std::int64_t differ = 0;
  for (Atom x = 0; x < s.size(); ++x)
    differ += s(x) != t(x);
  return Rational(differ, as_signed(s.size()));
}

AtomSet image(const PermSystem &t, const AtomSet &a) {
  if (a.universe() != t.size())
    throw Error(ErrorKind::dimension, "set and permutation have different atom counts");
  std::vector<Atom> out;
  out.reserve(a.count());
  for (Atom x : a.members())
    out.push_back(t(x));
  return AtomSet(t.size(), std::move(out));
}

bool neighborhood_contains(const WeakNeighborhood &nbhd, const PermSystem &s) {
  require_same_size(nbhd.center, s);
  const auto n = s.size();
  std::vector<char> marks(n, 0);
  for (const auto &a : nbhd.sets) {
    std::fill(marks.begin(), marks.end(), 0);
    for (Atom x : a.members()) {
      marks[s(x)] ^= 1;
      marks[nbhd.center(x)] ^= 2;
    }
    std::int64_t sym = 0;
    for (char m : marks)
      sym += m == 1 || m == 2;
    if (!(Rational(sym, as_signed(n)) < nbhd.epsilon))
      return false;
  }
  return true;
}

std::vector<std::vector<Atom>> cycles(const PermSystem &t) {
  std::vector<std::vector<Atom>> out;
  std::vector<char> seen(t.size(), 0);
  for (Atom start = 0; start < t.size(); ++start) {
    if (seen[start])
      continue;
    auto &cycle = out.emplace_back();
    for (Atom x = start; !seen[x]; x = t(x)) {
      seen[x] = 1;
      cycle.push_back(x);
    }
  }
  return out;
}

std::vector<std::size_t> cycle_type(const PermSystem &t) {
  std::vector<std::size_t> lengths;
  for (const auto &c : cycles(t))
    lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool is_ergodic(const PermSystem &t) {
  std::size_t len = 1;
  for (Atom x = t(0); x != 0; x = t(x))
    ++len;
  return len == t.size();
}

bool is_m_periodic(const PermSystem &t, std::size_t m) {
  if (m == 0)
    throw Error(ErrorKind::input, "period must be at least 1");
  for (const auto &c : cycles(t))
    if (c.size() != m)
      return false;
  return true;
}

std::vector<Atom> orbit_of_zero(const PermSystem &t) {
  std::vector<Atom> orbit;
  orbit.reserve(t.size());
  Atom x = 0;
  do {
    orbit.push_back(x);
    x = t(x);
  } while (x != 0);
  if (orbit.size() != t.size())
    throw Error(ErrorKind::ergodicity, "transformation is not a single cycle");
  return orbit;
}

PermSystem rotation(std::size_t n, std::int64_t a) {
  if (n == 0)
    throw Error(ErrorKind::input, "a permutation needs at least one atom");
  const auto sn = as_signed(n);
  const auto shift = ((a % sn) + sn) % sn;
  std::vector<Atom> images(n);
  for (std::size_t x = 0; x < n; ++x)
    images[x] = static_cast<Atom>((as_signed(x) + shift) % sn);
  return PermSystem(std::move(images));
}

PermSystem transposition(std::size_t n, Atom a, Atom b) {
  if (n == 0)
    throw Error(ErrorKind::input, "a permutation needs at least one atom");
  std::vector<Atom> out(n);
  std::iota(out.begin(), out.end(), Atom{0});
  if (a >= n || b >= n)
    throw Error(ErrorKind::input, "transposition atom out of range");
  std::swap(out[a], out[b]);
  return PermSystem(std::move(out));
}

PermSystem from_cycles(std::size_t n, const std::vector<std::vector<Atom>> &cs) {
  auto id = PermSystem::identity(n);
  std::vector<Atom> out(id.images().begin(), id.images().end());
  for (const auto &c : cs)
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= n)
        throw Error(ErrorKind::input, "cycle atom out of range");
      out[c[i]] = c[(i + 1) % c.size()];
    }
  return PermSystem(std::move(out));
}

} // namespace mpt
