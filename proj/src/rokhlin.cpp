#include "mpt/rokhlin.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mpt/error.hpp"

namespace mpt {

namespace {

std::int64_t as_signed(std::size_t n) { return static_cast<std::int64_t>(n); }

// Position of every atom along the orbit of 0.
std::vector<std::size_t> orbit_positions(const std::vector<Atom> &orbit) {
  std::vector<std::size_t> pos(orbit.size());
  for (std::size_t i = 0; i < orbit.size(); ++i)
    pos[orbit[i]] = i;
  return pos;
}

std::vector<std::int64_t> displacements(const PermSystem &s, const std::vector<std::size_t> &pos) {
  const auto n = as_signed(s.size());
  std::vector<std::int64_t> k(s.size());
  for (Atom x = 0; x < s.size(); ++x) {
    std::int64_t r = (as_signed(pos[s(x)]) - as_signed(pos[x]) + n) % n;
    k[x] = 2 * r > n ? r - n : r;
  }
  return k;
}

void require_cycle(const PermSystem &t, const char *what) {
  if (!is_ergodic(t))
    throw Error(ErrorKind::ergodicity, std::string(what) + " is not a single cycle");
}

// max(|k(x)|, |k_inv(x)|) for every atom.
std::vector<std::int64_t> window_need(const PermSystem &s, const PermSystem &t) {
  require_cycle(s, "s");
  require_cycle(t, "t");
  if (s.size() != t.size())
    throw Error(ErrorKind::dimension, "s and t have different atom counts");
  auto pos = orbit_positions(orbit_of_zero(t));
  auto k = displacements(s, pos);
  auto k_inv = displacements(inverse(s), pos);
  std::vector<std::int64_t> need(s.size());
  for (std::size_t x = 0; x < need.size(); ++x)
    need[x] = std::max(std::abs(k[x]), std::abs(k_inv[x]));
  return need;
}

} // namespace

AtomSet RokhlinTower::level(std::size_t i) const { return levels(i, i + 1); }

AtomSet RokhlinTower::levels(std::size_t first, std::size_t last) const {
  std::vector<Atom> out;
  for (Atom y : base.members()) {
    Atom x = y;
    for (std::size_t i = 0; i < last; ++i) {
      if (i >= first)
        out.push_back(x);
      x = transform(x);
    }
  }
  return AtomSet(transform.size(), std::move(out));
}

RokhlinTower rokhlin_tower(const PermSystem &t, std::size_t height) {
  require_cycle(t, "transform");
  const auto n = t.size();
  if (height < 1 || height > n)
    throw Error(ErrorKind::height, "tower height " + std::to_string(height) + " outside [1, " +
                                       std::to_string(n) + "]");
  auto orbit = orbit_of_zero(t);
  const auto columns = n / height;
  std::vector<Atom> base, residual;
  for (std::size_t j = 0; j < columns; ++j)
    base.push_back(orbit[j * height]);
  for (std::size_t i = columns * height; i < n; ++i)
    residual.push_back(orbit[i]);
  return RokhlinTower{t, height, AtomSet(n, std::move(base)), AtomSet(n, std::move(residual))};
}

bool tower_is_valid(const RokhlinTower &tower) {
  const auto n = tower.transform.size();
  if (tower.height < 1 || tower.base.universe() != n || tower.residual.universe() != n)
    return false;
  std::vector<char> covered(n, 0);
  for (Atom y : tower.base.members()) {
    Atom x = y;
    for (std::size_t i = 0; i < tower.height; ++i) {
      if (covered[x])
        return false;
      covered[x] = 1;
      x = tower.transform(x);
    }
  }
  for (Atom r : tower.residual.members()) {
    if (covered[r])
      return false;
    covered[r] = 1;
  }
  if (std::find(covered.begin(), covered.end(), 0) != covered.end())
    return false;
  return tower.residual.measure() == Rational(as_signed(n % tower.height), as_signed(n));
}

PermSystem periodic_approximation(const PermSystem &t, std::size_t height) {
  require_cycle(t, "transform");
  const auto n = t.size();
  if (height < 1 || n % height != 0)
    throw Error(ErrorKind::divisibility,
                "height " + std::to_string(height) + " does not divide " + std::to_string(n));
  auto tower = rokhlin_tower(t, height);
  std::vector<Atom> images(t.images().begin(), t.images().end());
  for (Atom y : tower.base.members()) {
    Atom top = y;
    for (std::size_t i = 0; i + 1 < height; ++i)
      top = t(top);
    images[top] = y;
  }
  return PermSystem(std::move(images));
}

PermSystem conjugate_periodic(const PermSystem &p1, const PermSystem &p2) {
  if (p1.size() != p2.size())
    throw Error(ErrorKind::dimension, "atom counts differ");
  auto c1 = cycles(p1);
  auto c2 = cycles(p2);
  // cycles() lists by minimal atom already; stable grouping by length keeps that order.
  auto by_length = [](auto &cs) {
    std::stable_sort(cs.begin(), cs.end(), [](const auto &a, const auto &b) { return a.size() < b.size(); });
  };
  by_length(c1);
  by_length(c2);
  if (c1.size() != c2.size())
    throw Error(ErrorKind::conjugacy, "cycle types differ");
  std::vector<Atom> h(p1.size());
  for (std::size_t c = 0; c < c1.size(); ++c) {
    if (c1[c].size() != c2[c].size())
      throw Error(ErrorKind::conjugacy, "cycle types differ");
    for (std::size_t i = 0; i < c1[c].size(); ++i)
      h[c1[c][i]] = c2[c][i];
  }
  return PermSystem(std::move(h));
}

std::pair<PermSystem, Rational> ergodic_smoothing(const PermSystem &s) {
  auto cs = cycles(s);
  if (cs.size() == 1)
    return {s, Rational(0)};
  std::vector<Atom> images(s.images().begin(), s.images().end());
  for (std::size_t c = 0; c < cs.size(); ++c)
    images[cs[c].front()] = s(cs[(c + 1) % cs.size()].front());
  PermSystem merged(std::move(images));
  auto cost = halmos_distance(s, merged);
  return {std::move(merged), cost};
}

DisplacementCocycle displacement_cocycle(const PermSystem &s, const PermSystem &t) {
  require_cycle(s, "s");
  require_cycle(t, "t");
  if (s.size() != t.size())
    throw Error(ErrorKind::dimension, "s and t have different atom counts");
  auto pos = orbit_positions(orbit_of_zero(t));
  return DisplacementCocycle{s, t, displacements(s, pos)};
}

AtomSet window_exceptions(const PermSystem &s, const PermSystem &t, std::size_t window) {
  auto need = window_need(s, t);
  std::vector<char> mask(need.size(), 0);
  for (std::size_t x = 0; x < need.size(); ++x)
    mask[x] = need[x] >= as_signed(window);
  return AtomSet::from_mask(mask);
}

std::size_t min_window(const PermSystem &s, const PermSystem &t, const Rational &bound) {
  if (bound <= 0 || bound > 1)
    throw Error(ErrorKind::input, "window bound must lie in (0, 1]");
  auto need = window_need(s, t);
  const auto n = need.size();
  // at_least[m] = #{x : need(x) >= m}
  std::vector<std::int64_t> histogram(n / 2 + 2, 0);
  for (auto v : need)
    ++histogram[static_cast<std::size_t>(v)];
  std::int64_t at_least = as_signed(n);
  for (std::size_t m = 1; m < histogram.size(); ++m) {
    at_least -= histogram[m - 1];
    if (Rational(at_least, as_signed(n)) < bound)
      return m;
  }
  return n / 2 + 1;
}

} // namespace mpt
