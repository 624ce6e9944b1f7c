#include "mpt/splus.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "mpt/error.hpp"

namespace mpt {

namespace {

std::vector<Rational> sorted_values(const FiniteSequence &x) {
  std::vector<Rational> v(x.entries().begin(), x.entries().end());
  std::sort(v.begin(), v.end());
  return v;
}

std::map<Rational, std::size_t> index_of(const FiniteSequence &x) {
  std::map<Rational, std::size_t> idx;
  for (std::size_t i = 0; i < x.size(); ++i)
    idx.emplace(x[i], i);
  return idx;
}

// Sends the indices in `front` to slots 0, 1, ... and the rest, in order,
// to the following slots.
PermSystem bring_to_front(std::size_t length, const std::vector<std::size_t> &front) {
  std::vector<Atom> g(length);
  std::vector<char> placed(length, 0);
  Atom slot = 0;
  for (auto i : front) {
    g[i] = slot++;
    placed[i] = 1;
  }
  for (std::size_t i = 0; i < length; ++i)
    if (!placed[i])
      g[i] = slot++;
  return PermSystem(std::move(g));
}

std::string describe(const Interval &iv) { return "(" + to_string(iv.lo) + ", " + to_string(iv.hi) + ")"; }

// Index lists are in range, pair equal values, and walk the values upward.
bool pairs_match(const FiniteSequence &a, const FiniteSequence &b, const SharedSubset &w) {
  if (w.p.size() != w.q.size())
    return false;
  for (std::size_t i = 0; i < w.p.size(); ++i) {
    if (w.p[i] >= a.size() || w.q[i] >= b.size() || a[w.p[i]] != b[w.q[i]])
      return false;
    if (i > 0 && !(a[w.p[i - 1]] < a[w.p[i]]))
      return false;
  }
  return true;
}

} // namespace

FiniteSequence::FiniteSequence(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw Error(ErrorKind::input, "a sequence needs at least one entry");
  auto v = entries_;
  std::sort(v.begin(), v.end());
  if (auto it = std::adjacent_find(v.begin(), v.end()); it != v.end())
    throw Error(ErrorKind::distinctness, "repeated entry " + to_string(*it));
}

FiniteSequence act(const PermSystem &g, const FiniteSequence &x) {
  if (g.size() != x.size())
    throw Error(ErrorKind::dimension, "permutation and sequence lengths differ");
  std::vector<Rational> out(x.size());
  for (Atom i = 0; i < x.size(); ++i)
    out[g(i)] = x[i];
  return FiniteSequence(std::move(out));
}

bool eplus_check(const FiniteSequence &x, const FiniteSequence &y) {
  return x.size() == y.size() && sorted_values(x) == sorted_values(y);
}

FiniteSequence interleave(const FiniteSequence &x, const FiniteSequence &y) {
  if (x.size() != y.size())
    throw Error(ErrorKind::dimension, "interleaved sequences must have equal length");
  if (!shared_subset_witness(x, y).p.empty())
    throw Error(ErrorKind::distinctness, "interleaved sequences share a value");
  std::vector<Rational> z;
  z.reserve(2 * x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    z.push_back(x[i]);
    z.push_back(y[i]);
  }
  return FiniteSequence(std::move(z));
}

SharedSubset shared_subset_witness(const FiniteSequence &x, const FiniteSequence &y) {
  auto in_x = index_of(x);
  auto in_y = index_of(y);
  SharedSubset out;
  auto a = in_x.begin();
  auto b = in_y.begin();
  while (a != in_x.end() && b != in_y.end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      out.p.push_back(a->second);
      out.q.push_back(b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

FinitePermWitness squiggle_witness(const FiniteSequence &x, const FiniteSequence &y,
                                   std::span<const Interval> box, std::size_t k) {
  const auto r = box.size();
  if (k > r)
    throw Error(ErrorKind::input, "k = " + std::to_string(k) + " exceeds the box width " + std::to_string(r));
  for (const auto &iv : box)
    if (!(iv.lo < iv.hi))
      throw Error(ErrorKind::input, "empty interval " + describe(iv));

  std::set<Rational> available;
  for (auto i : shared_subset_witness(x, y).p)
    available.insert(x[i]);

  // Intervals by right end, each taking the smallest free shared value it
  // contains. This finds a distinct value for every interval whenever one exists.
  std::vector<std::size_t> order(r);
  for (std::size_t i = 0; i < r; ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (box[a].hi != box[b].hi)
      return box[a].hi < box[b].hi;
    return box[a].lo < box[b].lo;
  });
  std::vector<Rational> chosen(r);
  for (auto m : order) {
    auto it = available.upper_bound(box[m].lo);
    if (it == available.end() || !(*it < box[m].hi))
      throw Error(ErrorKind::density, "no unused shared value in interval " + std::to_string(m) + " " +
                                          describe(box[m]));
    chosen[m] = *it;
    available.erase(it);
  }

  auto in_x = index_of(x);
  auto in_y = index_of(y);
  std::vector<std::size_t> front_x, front_y;
  for (const auto &v : chosen) {
    front_x.push_back(in_x.at(v));
    front_y.push_back(in_y.at(v));
  }
  return FinitePermWitness{bring_to_front(x.size(), front_x), bring_to_front(y.size(), front_y), k};
}

bool verify_squiggle(const SquiggleCertificate &cert) {
  try {
    const auto &w = cert.witness;
    const auto r = cert.box.size();
    if (w.k > r || r > cert.x.size() || r > cert.y.size())
      return false;
    auto gx = act(w.gx, cert.x);
    auto gy = act(w.gy, cert.y);
    for (std::size_t i = 0; i < r; ++i)
      if (gx[i] != gy[i] || !cert.box[i].contains(gx[i]))
        return false;
    return true;
  } catch (const Error &) {
    return false;
  }
}

SquigglePath squiggle_path(const FiniteSequence &x, const FiniteSequence &y) {
  auto z = interleave(x, y);
  auto xz = shared_subset_witness(x, z);
  auto yz = shared_subset_witness(y, z);
  return SquigglePath{x, y, std::move(z), std::move(xz), std::move(yz)};
}

bool verify_squiggle_path(const SquigglePath &path) {
  const auto &x = path.x;
  const auto &y = path.y;
  const auto &z = path.z;
  if (x.size() != y.size() || z.size() != 2 * x.size())
    return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (z[2 * i] != x[i] || z[2 * i + 1] != y[i])
      return false;
  // Each edge shares all of x (resp. y) with z.
  return path.xz.p.size() == x.size() && path.yz.p.size() == y.size() && pairs_match(x, z, path.xz) &&
         pairs_match(y, z, path.yz);
}

} // namespace mpt
