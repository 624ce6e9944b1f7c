#include "mpt/conjugator.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "mpt/error.hpp"

namespace mpt {

namespace {

std::int64_t as_signed(std::size_t n) { return static_cast<std::int64_t>(n); }

// Runs fn(i) for i in [0, count) over up to `jobs` threads. Each index is
// touched by exactly one thread, so fn may write to slot i of a shared
// vector without locking.
template <typename Fn> void for_each_index(std::size_t count, unsigned jobs, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers)
        fn(i);
    });
}

} // namespace

PermSystem complete_to_cycle(const PartialMap &constraints, std::size_t height) {
  if (constraints.size() != height || height == 0)
    throw Error(ErrorKind::input, "constraint table does not match height " + std::to_string(height));
  std::vector<char> has_pred(height, 0);
  for (const auto &target : constraints) {
    if (!target)
      continue;
    if (*target >= height || has_pred[*target])
      throw Error(ErrorKind::input, "constraints are not an injective map into the column");
    has_pred[*target] = 1;
  }

  // Maximal paths start at atoms with no incoming constraint.
  struct Path {
    Atom smallest;
    Atom head;
    Atom tail;
  };
  std::vector<Path> paths;
  std::vector<char> visited(height, 0);
  std::size_t covered = 0;
  for (Atom head = 0; head < height; ++head) {
    if (has_pred[head])
      continue;
    Path p{head, head, head};
    Atom x = head;
    for (;;) {
      visited[x] = 1;
      ++covered;
      p.smallest = std::min(p.smallest, x);
      if (!constraints[x])
        break;
      x = *constraints[x];
    }
    p.tail = x;
    paths.push_back(p);
  }

  std::vector<Atom> sigma(height);
  if (covered < height) {
    // Whatever is left sits on constraint cycles. Only one cycle through
    // every atom is acceptable.
    if (!paths.empty() || covered != 0)
      throw Error(ErrorKind::completion, "constraints close a cycle shorter than the column");
    Atom x = 0;
    std::size_t len = 0;
    do {
      x = *constraints[x];
      ++len;
    } while (x != 0);
    if (len != height)
      throw Error(ErrorKind::completion, "constraints close a cycle shorter than the column");
    for (Atom i = 0; i < height; ++i)
      sigma[i] = *constraints[i];
    return PermSystem(std::move(sigma));
  }

  std::sort(paths.begin(), paths.end(), [](const Path &a, const Path &b) { return a.smallest < b.smallest; });
  for (Atom i = 0; i < height; ++i)
    if (constraints[i])
      sigma[i] = *constraints[i];
  for (std::size_t p = 0; p < paths.size(); ++p)
    sigma[paths[p].tail] = paths[(p + 1) % paths.size()].head;
  return PermSystem(std::move(sigma));
}

PermSystem standardize(const PermSystem &sigma, Atom anchor) {
  const auto n = sigma.size();
  if (!is_ergodic(sigma))
    throw Error(ErrorKind::input, "sigma is not a single cycle");
  if (anchor >= n)
    throw Error(ErrorKind::input, "anchor out of range");
  std::vector<Atom> tau(n);
  Atom x = anchor;
  for (std::size_t m = 0; m < n; ++m) {
    tau[x] = static_cast<Atom>((anchor + m) % n);
    x = sigma(x);
  }
  return PermSystem(std::move(tau));
}

PermSystem standardize_from(const PermSystem &sigma, Atom start) {
  const auto n = sigma.size();
  if (!is_ergodic(sigma))
    throw Error(ErrorKind::input, "sigma is not a single cycle");
  if (start >= n)
    throw Error(ErrorKind::input, "start out of range");
  std::vector<Atom> tau(n);
  Atom x = start;
  for (std::size_t m = 0; m < n; ++m) {
    tau[x] = static_cast<Atom>(m);
    x = sigma(x);
  }
  return PermSystem(std::move(tau));
}

Atom choose_start(const PartialMap &constraints, const PermSystem &sigma) {
  const auto n = sigma.size();
  if (constraints.size() != n)
    throw Error(ErrorKind::input, "constraint table does not match sigma");
  std::vector<char> is_target(n, 0);
  for (const auto &c : constraints)
    if (c)
      is_target[*c] = 1;

  // Walking sigma from the start, level i is fixed iff the atom i sits i
  // steps after the start, so each atom votes for exactly one start.
  auto order = orbit_of_zero(sigma);
  std::vector<std::size_t> votes(n, 0);
  for (std::size_t p = 0; p < n; ++p)
    ++votes[order[(p + n - order[p]) % n]];

  std::optional<Atom> best;
  for (Atom a = 0; a < n; ++a)
    if (!is_target[a] && (!best || votes[a] > votes[*best]))
      best = a;
  return best.value_or(0);
}

ColumnPermutation column_permutation(const PartialMap &constraints, std::size_t height) {
  auto sigma = complete_to_cycle(constraints, height);
  auto start = choose_start(constraints, sigma);
  auto tau = standardize_from(sigma, start);
  return ColumnPermutation{height, constraints, std::move(sigma), std::move(tau), start};
}

std::optional<std::size_t> tower_height_for(std::size_t n, std::size_t window, const Rational &budget) {
  for (std::size_t height = 1; height <= n; ++height) {
    if (Rational(2 * as_signed(window), as_signed(height)) < budget &&
        Rational(as_signed(n % height), as_signed(n)) < budget)
      return height;
  }
  return std::nullopt;
}

ConjugatorCertificate construct_conjugator(const PermSystem &s, const PermSystem &t, std::size_t window,
                                           std::size_t height, unsigned jobs) {
  if (s.size() != t.size())
    throw Error(ErrorKind::dimension, "s and t have different atom counts");
  if (!is_ergodic(s) || !is_ergodic(t))
    throw Error(ErrorKind::ergodicity, "s and t must both be single cycles");
  if (window < 1)
    throw Error(ErrorKind::input, "window must be at least 1");
  const auto n = t.size();

  auto tower = rokhlin_tower(t, height);
  auto orbit = orbit_of_zero(t);
  auto l0 = window_exceptions(s, t, window);

  const std::size_t edge = std::min(window, height);
  auto l1 = set_union(tower.levels(0, edge), tower.levels(height - edge, height));
  auto l2 = tower.residual;

  // Induced permutation of each column. Column c is orbit[c*height, (c+1)*height);
  // every step of s that stays inside the column becomes a constraint.
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i)
    pos[orbit[i]] = i;
  const std::size_t columns = n / height;
  std::vector<PartialMap> constraints(columns);
  std::vector<PermSystem> sigmas(columns, PermSystem::identity(height));
  for_each_index(columns, jobs, [&](std::size_t c) {
    PartialMap cm(height);
    const std::size_t offset = c * height;
    for (std::size_t i = 0; i < height; ++i) {
      const auto j = pos[s(orbit[offset + i])];
      if (j >= offset && j < offset + height)
        cm[i] = static_cast<Atom>(j - offset);
    }
    // s is a single n-cycle, so constraints close a cycle only when the
    // column is the whole space; anything shorter would mean s^k(x) = x.
    sigmas[c] = complete_to_cycle(cm, height);
    constraints[c] = std::move(cm);
  });

  // Columns sharing a completed permutation share a standardizer. The class
  // anchor is chosen against the union of the member columns' constraints.
  std::map<std::vector<Atom>, std::vector<std::size_t>> classes;
  for (std::size_t c = 0; c < columns; ++c) {
    auto key = sigmas[c].images();
    classes[std::vector<Atom>(key.begin(), key.end())].push_back(c);
  }
  std::vector<const std::vector<std::size_t> *> members;
  for (const auto &entry : classes)
    members.push_back(&entry.second);
  std::vector<PermSystem> tau_inverse(members.size(), PermSystem::identity(height));
  for_each_index(members.size(), jobs, [&](std::size_t g) {
    const auto &cols = *members[g];
    PartialMap merged(height);
    for (auto c : cols)
      for (std::size_t i = 0; i < height; ++i)
        if (constraints[c][i])
          merged[i] = constraints[c][i];
    const auto &sigma = sigmas[cols.front()];
    tau_inverse[g] = inverse(standardize_from(sigma, choose_start(merged, sigma)));
  });

  std::vector<Atom> h(n);
  for (Atom x = 0; x < n; ++x)
    h[x] = x;
  for (std::size_t g = 0; g < members.size(); ++g)
    for (auto c : *members[g]) {
      const std::size_t offset = c * height;
      for (std::size_t i = 0; i < height; ++i)
        h[orbit[offset + i]] = orbit[offset + tau_inverse[g](static_cast<Atom>(i))];
    }

  PermSystem hp(std::move(h));
  auto conj = conjugate(hp, t);
  ConjugatorCertificate cert{s,
                             t,
                             hp,
                             window,
                             std::move(tower),
                             std::move(l0),
                             std::move(l1),
                             std::move(l2),
                             Rational(1),
                             halmos_distance(conj, s),
                             halmos_distance(hp, PermSystem::identity(n)),
                             halmos_distance(s, t)};

  const auto exceptional = cert.exceptional().mask();
  for (Atom x = 0; x < n; ++x)
    if (!exceptional[x] && conj(x) != s(x))
      throw std::logic_error("conjugated map disagrees with s off the exceptional set");
  return cert;
}

ConjugatorCertificate build_conjugator(const PermSystem &s, const PermSystem &t, const Rational &delta,
                                       unsigned jobs) {
  if (delta <= 0 || delta > 1)
    throw Error(ErrorKind::input, "delta must lie in (0, 1]");
  if (s.size() != t.size())
    throw Error(ErrorKind::dimension, "s and t have different atom counts");
  if (!is_ergodic(s) || !is_ergodic(t))
    throw Error(ErrorKind::ergodicity, "s and t must both be single cycles");

  const Rational budget = delta / 3;
  const auto window = min_window(s, t, budget);
  auto height = tower_height_for(t.size(), window, budget);
  if (!height)
    throw Error(ErrorKind::resolution, "no tower height up to " + std::to_string(t.size()) +
                                           " fits window " + std::to_string(window) + " at delta " +
                                           to_string(delta));
  auto cert = construct_conjugator(s, t, window, *height, jobs);
  cert.delta_target = delta;
  if (!(cert.exceptional().measure() < delta))
    throw std::logic_error("exceptional set exceeds its budget");
  return cert;
}

bool verify_conjugator(const ConjugatorCertificate &cert) {
  try {
    const auto n = cert.t.size();
    if (cert.s.size() != n || cert.h.size() != n || cert.tower.transform != cert.t)
      return false;
    if (cert.l0.universe() != n || cert.l1.universe() != n || cert.l2.universe() != n)
      return false;
    if (!(cert.delta_target > 0 && cert.delta_target <= 1))
      return false;
    if (!is_ergodic(cert.s) || !is_ergodic(cert.t))
      return false;
    if (!tower_is_valid(cert.tower))
      return false;
    const auto height = cert.tower.height;
    if (cert.window < 1 || 2 * cert.window > height)
      return false;

    // Exceptional sets, rebuilt from s, t and the tower.
    if (cert.l0 != window_exceptions(cert.s, cert.t, cert.window))
      return false;
    if (cert.l1 != set_union(cert.tower.levels(0, cert.window),
                             cert.tower.levels(height - cert.window, height)))
      return false;
    if (cert.l2 != cert.tower.residual)
      return false;

    // h moves atoms only within their own column.
    std::vector<std::size_t> column(n, SIZE_MAX);
    std::size_t c = 0;
    for (Atom y : cert.tower.base.members()) {
      Atom x = y;
      for (std::size_t i = 0; i < height; ++i, x = cert.t(x))
        column[x] = c;
      ++c;
    }
    for (Atom x = 0; x < n; ++x) {
      if (column[x] == SIZE_MAX ? cert.h(x) != x : column[cert.h(x)] != column[x])
        return false;
    }

    const auto exceptional = cert.exceptional();
    const auto off = exceptional.mask();
    const auto conj = compose(cert.h, compose(cert.t, inverse(cert.h)));
    for (Atom x = 0; x < n; ++x)
      if (!off[x] && conj(x) != cert.s(x))
        return false;

    const auto conj_dist = halmos_distance(conj, cert.s);
    const auto id_dist = halmos_distance(cert.h, PermSystem::identity(n));
    const auto input_dist = halmos_distance(cert.s, cert.t);
    if (conj_dist != cert.measured_conj_dist || id_dist != cert.measured_id_dist ||
        input_dist != cert.input_dist)
      return false;

    const auto mu_l = exceptional.measure();
    if (!(conj_dist <= mu_l && mu_l < cert.delta_target && conj_dist < cert.delta_target))
      return false;
    return id_dist <= input_dist + mu_l;
  } catch (const Error &) {
    return false;
  }
}

} // namespace mpt
