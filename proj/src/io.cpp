#include "mpt/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "mpt/error.hpp"

namespace mpt {

namespace {

template <typename Range> void write_line(std::ostream &out, const Range &values) {
  bool first = true;
  for (const auto &v : values) {
    if (!first)
      out << ' ';
    out << v;
    first = false;
  }
  out << '\n';
}

std::uint64_t parse_count(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
    throw Error(ErrorKind::parse, "expected a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

// Value of a `key=value` word.
std::string_view keyed(const std::string &word, std::string_view key) {
  if (word.size() < key.size() + 1 || word.compare(0, key.size(), key) != 0 || word[key.size()] != '=')
    throw Error(ErrorKind::parse, "expected " + std::string(key) + "=..., got '" + word + "'");
  return std::string_view(word).substr(key.size() + 1);
}

std::vector<std::string> header(TextReader &in, std::string_view kind, std::size_t fields) {
  auto w = in.words();
  if (w.empty() || w[0] != kind || w.size() != fields + 1)
    throw Error(ErrorKind::parse, "line " + std::to_string(in.line_number()) + ": expected a '" +
                                      std::string(kind) + "' header");
  return w;
}

std::vector<Atom> atoms(const std::vector<std::string> &words, std::size_t first = 0) {
  std::vector<Atom> out;
  for (std::size_t i = first; i < words.size(); ++i) {
    auto v = parse_count(words[i]);
    if (v > UINT32_MAX)
      throw Error(ErrorKind::parse, "atom index too large");
    out.push_back(static_cast<Atom>(v));
  }
  return out;
}

std::vector<std::size_t> indices(TextReader &in, const std::string &key) {
  auto w = in.words();
  if (w.empty() || w[0] != key)
    throw Error(ErrorKind::parse, "line " + std::to_string(in.line_number()) + ": expected '" + key + "'");
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < w.size(); ++i)
    out.push_back(static_cast<std::size_t>(parse_count(w[i])));
  return out;
}

std::vector<std::string> rationals_text(std::span<const Rational> values) {
  std::vector<std::string> out;
  for (const auto &v : values)
    out.push_back(to_string(v));
  return out;
}

} // namespace

// ---------------------------------------------------------------- writers

void write_perm(std::ostream &out, const PermSystem &p) {
  out << "perm n=" << p.size() << '\n';
  write_line(out, p.images());
}

void write_set(std::ostream &out, const AtomSet &s) {
  out << "set n=" << s.universe() << '\n';
  write_line(out, s.members());
}

void write_sequence(std::ostream &out, const FiniteSequence &x) {
  out << "seq L=" << x.size() << '\n';
  write_line(out, rationals_text(x.entries()));
}

void write_tower(std::ostream &out, const RokhlinTower &tower) {
  out << "tower n=" << tower.transform.size() << " m=" << tower.height << '\n';
  write_line(out, tower.base.members());
  write_line(out, tower.residual.members());
}

void write_neighborhood(std::ostream &out, const WeakNeighborhood &nbhd) {
  out << "nbhd n=" << nbhd.center.size() << " sets=" << nbhd.sets.size() << " eps=" << to_string(nbhd.epsilon)
      << '\n';
  write_perm(out, nbhd.center);
  for (const auto &a : nbhd.sets)
    write_set(out, a);
}

void write_certificate(std::ostream &out, const ConjugatorCertificate &cert) {
  out << "conjugator-certificate\n";
  out << "delta_target " << to_string(cert.delta_target) << '\n';
  out << "window " << cert.window << '\n';
  out << "input_dist " << to_string(cert.input_dist) << '\n';
  out << "measured_conj_dist " << to_string(cert.measured_conj_dist) << '\n';
  out << "measured_id_dist " << to_string(cert.measured_id_dist) << '\n';
  out << "s\n";
  write_perm(out, cert.s);
  out << "t\n";
  write_perm(out, cert.t);
  out << "h\n";
  write_perm(out, cert.h);
  out << "tower\n";
  write_tower(out, cert.tower);
  out << "l0\n";
  write_set(out, cert.l0);
  out << "l1\n";
  write_set(out, cert.l1);
  out << "l2\n";
  write_set(out, cert.l2);
  out << "end\n";
}

void write_witness(std::ostream &out, const UnbalancedWitness &w) {
  out << "unbalanced-witness\n";
  out << "seed " << w.seed << '\n';
  out << "v_eps " << to_string(w.v_eps) << '\n';
  out << "delta " << to_string(w.delta) << '\n';
  out << "final_dist " << to_string(w.final_dist) << '\n';
  const std::pair<const char *, const PermSystem *> perms[] = {
      {"t1", &w.t1}, {"t2", &w.t2}, {"g1", &w.g1}, {"g2", &w.g2},
      {"h", &w.h},   {"conj1", &w.conj1}, {"conj2", &w.conj2}};
  for (const auto &[name, p] : perms) {
    out << name << '\n';
    write_perm(out, *p);
  }
  out << "u_spec\n";
  write_neighborhood(out, w.u_spec);
  out << "inner_cert\n";
  write_certificate(out, w.inner_cert);
  out << "end\n";
}

void write_squiggle(std::ostream &out, const SquiggleCertificate &cert) {
  out << "squiggle-witness\n";
  out << "k " << cert.witness.k << '\n';
  out << "box " << cert.box.size() << '\n';
  for (const auto &iv : cert.box)
    out << "interval " << to_string(iv.lo) << ' ' << to_string(iv.hi) << '\n';
  out << "x\n";
  write_sequence(out, cert.x);
  out << "y\n";
  write_sequence(out, cert.y);
  out << "gx\n";
  write_perm(out, cert.witness.gx);
  out << "gy\n";
  write_perm(out, cert.witness.gy);
  out << "end\n";
}

void write_path(std::ostream &out, const SquigglePath &path) {
  out << "squiggle-path\n";
  out << "x\n";
  write_sequence(out, path.x);
  out << "y\n";
  write_sequence(out, path.y);
  out << "z\n";
  write_sequence(out, path.z);
  auto keyed_line = [&](const char *key, const std::vector<std::size_t> &v) {
    out << key;
    for (auto i : v)
      out << ' ' << i;
    out << '\n';
  };
  keyed_line("xz_p", path.xz.p);
  keyed_line("xz_q", path.xz.q);
  keyed_line("yz_p", path.yz.p);
  keyed_line("yz_q", path.yz.q);
  out << "end\n";
}

// ---------------------------------------------------------------- reader

std::string TextReader::line() {
  std::string text;
  if (!std::getline(in_, text))
    throw Error(ErrorKind::parse, "unexpected end of input after line " + std::to_string(line_no_));
  ++line_no_;
  if (!text.empty() && text.back() == '\r')
    text.pop_back();
  return text;
}

std::vector<std::string> TextReader::words() {
  std::istringstream ss(line());
  std::vector<std::string> out;
  for (std::string w; ss >> w;)
    out.push_back(w);
  return out;
}

bool TextReader::at_end() { return in_.peek() == std::char_traits<char>::eof(); }

void TextReader::expect(const std::string &expected) {
  auto got = line();
  if (got != expected)
    throw Error(ErrorKind::parse,
                "line " + std::to_string(line_no_) + ": expected '" + expected + "', got '" + got + "'");
}

std::string TextReader::scalar(const std::string &key) {
  auto w = words();
  if (w.size() != 2 || w[0] != key)
    throw Error(ErrorKind::parse, "line " + std::to_string(line_no_) + ": expected '" + key + " <value>'");
  return w[1];
}

// ---------------------------------------------------------------- parsers

PermSystem read_perm(TextReader &in) {
  auto n = parse_count(keyed(header(in, "perm", 1)[1], "n"));
  auto images = atoms(in.words());
  if (images.size() != n)
    throw Error(ErrorKind::parse, "perm declares n=" + std::to_string(n) + " but lists " +
                                      std::to_string(images.size()) + " images");
  return PermSystem(std::move(images));
}

AtomSet read_set(TextReader &in) {
  auto n = parse_count(keyed(header(in, "set", 1)[1], "n"));
  return AtomSet(n, atoms(in.words()));
}

std::vector<AtomSet> read_sets(TextReader &in) {
  std::vector<AtomSet> out;
  while (!in.at_end())
    out.push_back(read_set(in));
  return out;
}

FiniteSequence read_sequence(TextReader &in) {
  auto length = parse_count(keyed(header(in, "seq", 1)[1], "L"));
  std::vector<Rational> entries;
  for (const auto &w : in.words())
    entries.push_back(parse_rational(w));
  if (entries.size() != length)
    throw Error(ErrorKind::parse, "seq declares L=" + std::to_string(length) + " but lists " +
                                      std::to_string(entries.size()) + " entries");
  return FiniteSequence(std::move(entries));
}

RokhlinTower read_tower(TextReader &in, const PermSystem &transform) {
  auto w = header(in, "tower", 2);
  auto n = parse_count(keyed(w[1], "n"));
  auto m = parse_count(keyed(w[2], "m"));
  if (n != transform.size())
    throw Error(ErrorKind::dimension, "tower and transform have different atom counts");
  AtomSet base(n, atoms(in.words()));
  AtomSet residual(n, atoms(in.words()));
  return RokhlinTower{transform, static_cast<std::size_t>(m), std::move(base), std::move(residual)};
}

WeakNeighborhood read_neighborhood(TextReader &in) {
  auto w = header(in, "nbhd", 3);
  auto n = parse_count(keyed(w[1], "n"));
  auto count = parse_count(keyed(w[2], "sets"));
  auto eps = parse_rational(keyed(w[3], "eps"));
  auto center = read_perm(in);
  if (center.size() != n)
    throw Error(ErrorKind::parse, "neighborhood center has the wrong atom count");
  std::vector<AtomSet> sets;
  for (std::uint64_t i = 0; i < count; ++i)
    sets.push_back(read_set(in));
  return WeakNeighborhood(std::move(center), std::move(sets), eps);
}

ConjugatorCertificate read_certificate(TextReader &in) {
  in.expect("conjugator-certificate");
  auto delta = parse_rational(in.scalar("delta_target"));
  auto window = parse_count(in.scalar("window"));
  auto input_dist = parse_rational(in.scalar("input_dist"));
  auto conj_dist = parse_rational(in.scalar("measured_conj_dist"));
  auto id_dist = parse_rational(in.scalar("measured_id_dist"));
  in.expect("s");
  auto s = read_perm(in);
  in.expect("t");
  auto t = read_perm(in);
  in.expect("h");
  auto h = read_perm(in);
  in.expect("tower");
  auto tower = read_tower(in, t);
  in.expect("l0");
  auto l0 = read_set(in);
  in.expect("l1");
  auto l1 = read_set(in);
  in.expect("l2");
  auto l2 = read_set(in);
  in.expect("end");
  return ConjugatorCertificate{std::move(s),  std::move(t),  std::move(h), static_cast<std::size_t>(window),
                               std::move(tower), std::move(l0), std::move(l1), std::move(l2),
                               delta,         conj_dist,     id_dist,      input_dist};
}

UnbalancedWitness read_witness(TextReader &in) {
  in.expect("unbalanced-witness");
  auto seed = parse_count(in.scalar("seed"));
  auto v_eps = parse_rational(in.scalar("v_eps"));
  auto delta = parse_rational(in.scalar("delta"));
  auto final_dist = parse_rational(in.scalar("final_dist"));
  auto named_perm = [&](const char *name) {
    in.expect(name);
    return read_perm(in);
  };
  auto t1 = named_perm("t1");
  auto t2 = named_perm("t2");
  auto g1 = named_perm("g1");
  auto g2 = named_perm("g2");
  auto h = named_perm("h");
  auto conj1 = named_perm("conj1");
  auto conj2 = named_perm("conj2");
  in.expect("u_spec");
  auto u_spec = read_neighborhood(in);
  in.expect("inner_cert");
  auto inner = read_certificate(in);
  in.expect("end");
  return UnbalancedWitness{std::move(t1), std::move(t2),    std::move(u_spec), v_eps,
                           delta,         seed,             std::move(g1),     std::move(g2),
                           std::move(h),  std::move(conj1), std::move(conj2),  final_dist,
                           std::move(inner)};
}

SquiggleCertificate read_squiggle(TextReader &in) {
  in.expect("squiggle-witness");
  auto k = parse_count(in.scalar("k"));
  auto r = parse_count(in.scalar("box"));
  std::vector<Interval> box;
  for (std::uint64_t i = 0; i < r; ++i) {
    auto w = in.words();
    if (w.size() != 3 || w[0] != "interval")
      throw Error(ErrorKind::parse, "line " + std::to_string(in.line_number()) + ": expected an interval");
    box.push_back({parse_rational(w[1]), parse_rational(w[2])});
  }
  in.expect("x");
  auto x = read_sequence(in);
  in.expect("y");
  auto y = read_sequence(in);
  in.expect("gx");
  auto gx = read_perm(in);
  in.expect("gy");
  auto gy = read_perm(in);
  in.expect("end");
  return SquiggleCertificate{std::move(x), std::move(y), std::move(box),
                             FinitePermWitness{std::move(gx), std::move(gy), static_cast<std::size_t>(k)}};
}

SquigglePath read_path(TextReader &in) {
  in.expect("squiggle-path");
  in.expect("x");
  auto x = read_sequence(in);
  in.expect("y");
  auto y = read_sequence(in);
  in.expect("z");
  auto z = read_sequence(in);
  SharedSubset xz, yz;
  xz.p = indices(in, "xz_p");
  xz.q = indices(in, "xz_q");
  yz.p = indices(in, "yz_p");
  yz.q = indices(in, "yz_q");
  in.expect("end");
  return SquigglePath{std::move(x), std::move(y), std::move(z), std::move(xz), std::move(yz)};
}

std::vector<Interval> parse_box(const std::string &spec) {
  std::vector<Interval> box;
  std::istringstream ss(spec);
  for (std::string part; std::getline(ss, part, ',');) {
    auto colon = part.find(':');
    if (colon == std::string::npos)
      throw Error(ErrorKind::parse, "box interval '" + part + "' is not lo:hi");
    box.push_back({parse_rational(part.substr(0, colon)), parse_rational(part.substr(colon + 1))});
  }
  return box;
}

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error(ErrorKind::io, "cannot write " + path.string());
  out << contents;
  if (!out)
    throw Error(ErrorKind::io, "short write to " + path.string());
}

std::string header_of(const std::string &document) {
  auto end = document.find('\n');
  auto first = document.substr(0, end);
  if (!first.empty() && first.back() == '\r')
    first.pop_back();
  return first;
}

} // namespace mpt
