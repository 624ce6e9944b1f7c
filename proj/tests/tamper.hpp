// Single-field corruptions of each certificate type. Every tamper is built so
// that an honest verifier must reject it; the helpers check this themselves
// where the effect depends on the data (e.g. which atoms an H swap touches).
#ifndef MPT_TESTS_TAMPER_HPP
#define MPT_TESTS_TAMPER_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mpt/conjugator.hpp"
#include "mpt/random.hpp"
#include "mpt/splus.hpp"
#include "mpt/witness.hpp"

namespace tamper {

template <typename T> struct Tampered {
  std::string what;
  T value;
};

inline mpt::PermSystem swap_images(const mpt::PermSystem &p, mpt::Atom a, mpt::Atom b) {
  std::vector<mpt::Atom> v(p.images().begin(), p.images().end());
  std::swap(v[a], v[b]);
  return mpt::PermSystem(std::move(v));
}

inline mpt::AtomSet drop_member(const mpt::AtomSet &s, std::size_t index) {
  std::vector<mpt::Atom> v(s.members().begin(), s.members().end());
  v.erase(v.begin() + static_cast<long>(index % v.size()));
  return mpt::AtomSet(s.universe(), std::move(v));
}

inline mpt::Rational one_atom(std::size_t n) { return mpt::Rational(1, static_cast<std::int64_t>(n)); }

/// Swaps two images of h inside one column so that h t h^-1 now disagrees
/// with s somewhere off the exceptional set.
inline mpt::PermSystem break_conjugator(const mpt::ConjugatorCertificate &c, mpt::Rng &rng) {
  const auto n = c.h.size();
  const auto height = c.tower.height;
  const auto orbit = mpt::orbit_of_zero(c.t);
  const auto columns = n / height;
  const auto exceptional = c.exceptional().mask();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const auto col = rng.below(columns);
    const auto i = rng.below(height), j = rng.below(height);
    if (i == j)
      continue;
    const auto a = orbit[col * height + i], b = orbit[col * height + j];
    auto h = swap_images(c.h, a, b);
    auto conj = mpt::conjugate(h, c.t);
    for (mpt::Atom x = 0; x < n; ++x)
      if (!exceptional[x] && conj(x) != c.s(x))
        return h;
  }
  throw std::runtime_error("no off-L swap found");
}

/// `count` tampers cycling through image swaps, rational perturbations and
/// dropped set members.
inline std::vector<Tampered<mpt::ConjugatorCertificate>> conjugator(const mpt::ConjugatorCertificate &c,
                                                                    std::size_t count, std::uint64_t seed) {
  mpt::Rng rng(seed);
  const auto n = c.h.size();
  std::vector<Tampered<mpt::ConjugatorCertificate>> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    auto t = c;
    std::string what;
    switch (k % 9) {
    case 0:
      t.h = break_conjugator(c, rng);
      what = "swap two images of h";
      break;
    case 1:
      t.measured_conj_dist += one_atom(n);
      what = "raise measured_conj_dist";
      break;
    case 2:
      t.measured_id_dist += one_atom(n);
      what = "raise measured_id_dist";
      break;
    case 3:
      t.delta_target = c.exceptional().measure();
      what = "lower delta_target to mu(L)";
      break;
    case 4:
      t.input_dist += one_atom(n);
      what = "raise input_dist";
      break;
    case 5:
      if (c.l0.empty())
        continue;
      t.l0 = drop_member(c.l0, rng.below(c.l0.count()));
      what = "drop a member of l0";
      break;
    case 6:
      t.l1 = drop_member(c.l1, rng.below(c.l1.count()));
      what = "drop a member of l1";
      break;
    case 7:
      if (c.l2.empty())
        continue;
      t.l2 = drop_member(c.l2, rng.below(c.l2.count()));
      what = "drop a member of l2";
      break;
    case 8:
      t.tower.base = drop_member(c.tower.base, rng.below(c.tower.base.count()));
      what = "drop a tower base atom";
      break;
    }
    out.push_back({std::move(what), std::move(t)});
  }
  return out;
}

inline std::vector<Tampered<mpt::UnbalancedWitness>> witness(const mpt::UnbalancedWitness &w, std::size_t count,
                                                             std::uint64_t seed) {
  mpt::Rng rng(seed);
  const auto n = w.t1.size();
  auto pick_pair = [&] {
    auto a = static_cast<mpt::Atom>(rng.below(n));
    auto b = static_cast<mpt::Atom>((a + 1 + rng.below(n - 1)) % n);
    return std::pair{a, b};
  };
  std::vector<Tampered<mpt::UnbalancedWitness>> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    auto t = w;
    std::string what;
    switch (k % 8) {
    case 0: {
      auto [a, b] = pick_pair();
      t.g1 = swap_images(w.g1, a, b);
      what = "swap two images of g1";
      break;
    }
    case 1: {
      auto [a, b] = pick_pair();
      t.g2 = swap_images(w.g2, a, b);
      what = "swap two images of g2";
      break;
    }
    case 2: {
      // h is also stored in the inner certificate; touching only the outer
      // copy is a single-field change.
      auto [a, b] = pick_pair();
      t.h = swap_images(w.h, a, b);
      what = "swap two images of h";
      break;
    }
    case 3:
      t.delta = w.delta / 2;
      what = "halve delta";
      break;
    case 4:
      t.final_dist += one_atom(n);
      what = "raise final_dist";
      break;
    case 5:
      t.v_eps = 2 * mpt::halmos_distance(w.conj1, w.conj2);
      what = "shrink v_eps to twice d(conj1, conj2)";
      break;
    case 6:
      t.inner_cert.l1 = drop_member(w.inner_cert.l1, rng.below(w.inner_cert.l1.count()));
      what = "drop a member of the inner l1";
      break;
    case 7:
      t.inner_cert.tower.residual = mpt::AtomSet(n);
      if (w.inner_cert.tower.residual.empty())
        t.inner_cert.tower.base = drop_member(w.inner_cert.tower.base, rng.below(w.inner_cert.tower.base.count()));
      what = "drop inner tower atoms";
      break;
    }
    out.push_back({std::move(what), std::move(t)});
  }
  return out;
}

inline std::vector<mpt::Rational> entries_of(const mpt::FiniteSequence &x) {
  return std::vector<mpt::Rational>(x.entries().begin(), x.entries().end());
}

/// A value strictly larger than every entry of x and y.
inline mpt::Rational fresh_value(const mpt::FiniteSequence &x, const mpt::FiniteSequence &y) {
  mpt::Rational top = x[0];
  for (const auto &v : x.entries())
    top = std::max(top, v);
  for (const auto &v : y.entries())
    top = std::max(top, v);
  return top + 1;
}

inline std::vector<Tampered<mpt::SquiggleCertificate>> squiggle(const mpt::SquiggleCertificate &c, std::size_t count,
                                                                std::uint64_t seed) {
  mpt::Rng rng(seed);
  const auto r = c.box.size();
  const auto len = c.x.size();
  auto ginv = mpt::inverse(c.witness.gx);
  std::vector<Tampered<mpt::SquiggleCertificate>> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    auto t = c;
    std::string what;
    const auto slot = static_cast<mpt::Atom>(rng.below(r));
    switch (k % 5) {
    case 0: {
      // exchange a prefix slot of gx with a slot past the prefix
      if (len == r)
        continue;
      const auto other = static_cast<mpt::Atom>(r + rng.below(len - r));
      t.witness.gx = swap_images(c.witness.gx, ginv(slot), ginv(other));
      what = "swap a prefix image of gx";
      break;
    }
    case 1: {
      auto v = entries_of(c.x);
      v[ginv(slot)] = fresh_value(c.x, c.y);
      t.x = mpt::FiniteSequence(std::move(v));
      what = "replace a prefix value of x";
      break;
    }
    case 2: {
      // the prefix value sits strictly inside the interval; close it off
      const auto value = c.x[ginv(slot)];
      t.box[slot].hi = value;
      what = "move a box endpoint onto the chosen value";
      break;
    }
    case 3: {
      auto v = entries_of(c.x);
      v.pop_back();
      t.x = mpt::FiniteSequence(std::move(v));
      what = "drop the last entry of x";
      break;
    }
    case 4: {
      const auto value = c.x[ginv(slot)];
      t.box[slot].lo = value;
      what = "move a box endpoint onto the chosen value";
      break;
    }
    }
    out.push_back({std::move(what), std::move(t)});
  }
  return out;
}

inline std::vector<Tampered<mpt::SquigglePath>> path(const mpt::SquigglePath &p, std::size_t count,
                                                     std::uint64_t seed) {
  mpt::Rng rng(seed);
  std::vector<Tampered<mpt::SquigglePath>> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    auto t = p;
    std::string what;
    switch (k % 5) {
    case 0: {
      auto v = entries_of(p.z);
      v[rng.below(v.size())] = fresh_value(p.x, p.y);
      t.z = mpt::FiniteSequence(std::move(v));
      what = "replace a value of z";
      break;
    }
    case 1: {
      auto i = rng.below(t.xz.p.size());
      t.xz.p.erase(t.xz.p.begin() + static_cast<long>(i));
      t.xz.q.erase(t.xz.q.begin() + static_cast<long>(i));
      what = "drop a shared pair of the x-z edge";
      break;
    }
    case 2: {
      if (t.yz.q.size() < 2)
        continue;
      auto i = rng.below(t.yz.q.size() - 1);
      std::swap(t.yz.q[i], t.yz.q[i + 1]);
      what = "swap two z indices of the y-z edge";
      break;
    }
    case 3: {
      auto v = entries_of(p.y);
      v[rng.below(v.size())] = fresh_value(p.x, p.y);
      t.y = mpt::FiniteSequence(std::move(v));
      what = "replace a value of y";
      break;
    }
    case 4: {
      auto v = entries_of(p.x);
      v.pop_back();
      if (v.empty())
        continue;
      t.x = mpt::FiniteSequence(std::move(v));
      what = "drop the last entry of x";
      break;
    }
    }
    out.push_back({std::move(what), std::move(t)});
  }
  return out;
}

} // namespace tamper

#endif
