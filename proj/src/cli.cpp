#include "mpt/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mpt/conjugator.hpp"
#include "mpt/error.hpp"
#include "mpt/generate.hpp"
#include "mpt/io.hpp"
#include "mpt/rokhlin.hpp"
#include "mpt/splus.hpp"
#include "mpt/witness.hpp"

namespace mpt::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  // shared
  std::size_t n = 0;
  std::optional<std::uint64_t> seed;
  std::size_t m = 0;
  std::string delta = "1/20";
  std::string out_path;
  unsigned jobs = 1;
  // gen
  std::string kind = "rotation";
  std::int64_t a = 1;
  std::string from;
  std::size_t edits = 1;
  // files
  std::string s, t, t1, t2, center, sets, x, y;
  std::string u_eps, v_eps;
  std::string box;
  std::size_t k = 0;
  std::string cert, witness, squiggle, path;
};

template <typename Doc> std::string render(void (*writer)(std::ostream &, const Doc &), const Doc &doc) {
  std::ostringstream ss;
  writer(ss, doc);
  return ss.str();
}

template <typename T, typename Reader> T load(const std::string &path, Reader reader) {
  std::istringstream in(read_file(path));
  TextReader text(in);
  return reader(text);
}

PermSystem load_perm(const std::string &path) { return load<PermSystem>(path, read_perm); }
FiniteSequence load_sequence(const std::string &path) { return load<FiniteSequence>(path, read_sequence); }

std::uint64_t require_seed(const Options &o) {
  if (!o.seed)
    throw Error(ErrorKind::input, "--seed is required for this command");
  return *o.seed;
}

class Runner {
public:
  Runner(const Options &o, std::ostream &out) : o_(o), out_(out) {}

  CommandResult result;

  void emit(const std::string &contents) {
    if (o_.out_path.empty())
      throw Error(ErrorKind::input, "--out is required");
    write_file(o_.out_path, contents);
    result.output_paths.push_back(o_.out_path);
  }

  void gen() {
    PermSystem p = PermSystem::identity(1);
    if (o_.kind == "orbit_edits") {
      p = orbit_local_edits(load_perm(o_.from), o_.edits, require_seed(o_));
    } else {
      GeneratorSpec spec;
      std::uint64_t seed = 0;
      if (o_.kind == "rotation") {
        spec = GeneratorSpec::rotation(o_.a);
        seed = o_.seed.value_or(0);
      } else if (o_.kind == "random_cycle") {
        spec = GeneratorSpec::random_cycle();
        seed = require_seed(o_);
      } else if (o_.kind == "random_permutation") {
        spec = GeneratorSpec::random_permutation();
        seed = require_seed(o_);
      } else if (o_.kind == "m_periodic") {
        spec = GeneratorSpec::m_periodic(static_cast<std::int64_t>(o_.m));
        seed = require_seed(o_);
      } else {
        throw Error(ErrorKind::input, "unknown generator kind '" + o_.kind + "'");
      }
      p = generate(spec, o_.n, seed);
    }
    emit(render(write_perm, p));
    out_ << "gen " << o_.kind << " n=" << p.size() << " ergodic=" << (is_ergodic(p) ? "yes" : "no") << '\n';
  }

  void dist() {
    auto d = halmos_distance(load_perm(o_.s), load_perm(o_.t));
    out_ << "d " << to_string(d) << '\n';
  }

  void tower() {
    auto t = load_perm(o_.t);
    auto tw = rokhlin_tower(t, o_.m);
    emit(render(write_tower, tw));
    out_ << "tower m=" << tw.height << " columns=" << tw.base.count() << " residual "
         << to_string(tw.residual.measure()) << '\n';
  }

  void approx() {
    auto t = load_perm(o_.t);
    auto p = periodic_approximation(t, o_.m);
    emit(render(write_perm, p));
    out_ << "approx m=" << o_.m << " d " << to_string(halmos_distance(t, p)) << '\n';
  }

  void smooth() {
    auto [merged, cost] = ergodic_smoothing(load_perm(o_.s));
    emit(render(write_perm, merged));
    out_ << "smooth cost " << to_string(cost) << '\n';
  }

  void conj() {
    auto cert = build_conjugator(load_perm(o_.s), load_perm(o_.t), parse_rational(o_.delta), o_.jobs);
    emit(render(write_certificate, cert));
    out_ << "conj window=" << cert.window << " height=" << cert.tower.height << " conj_dist "
         << to_string(cert.measured_conj_dist) << " mu(L) " << to_string(cert.exceptional().measure())
         << " id_dist " << to_string(cert.measured_id_dist) << " input_dist " << to_string(cert.input_dist)
         << (cert.id_flagged() ? " [id_dist exceeds input_dist]" : "") << '\n';
  }

  void witness() {
    auto t1 = load_perm(o_.t1);
    auto t2 = load_perm(o_.t2);
    auto center = load_perm(o_.center);
    std::vector<AtomSet> sets;
    if (!o_.sets.empty())
      sets = load<std::vector<AtomSet>>(o_.sets, read_sets);
    WeakNeighborhood u(std::move(center), std::move(sets), parse_rational(o_.u_eps));
    auto w = build_unbalanced_witness(t1, t2, u, parse_rational(o_.v_eps), parse_rational(o_.delta),
                                      require_seed(o_), o_.jobs);
    emit(render(write_witness, w));
    out_ << "witness final_dist " << to_string(w.final_dist) << " d(conj1,conj2) "
         << to_string(halmos_distance(w.conj1, w.conj2)) << " d(h,id) " << to_string(w.inner_cert.measured_id_dist)
         << '\n';
  }

  void splus() {
    auto x = load_sequence(o_.x);
    auto y = load_sequence(o_.y);
    out_ << "eplus " << (eplus_check(x, y) ? "yes" : "no") << '\n';
    if (!o_.box.empty()) {
      SquiggleCertificate cert{x, y, parse_box(o_.box), squiggle_witness(x, y, parse_box(o_.box), o_.k)};
      emit(render(write_squiggle, cert));
      out_ << "squiggle r=" << cert.box.size() << " k=" << cert.witness.k << '\n';
    } else {
      auto path = squiggle_path(x, y);
      emit(render(write_path, path));
      out_ << "path z L=" << path.z.size() << " shared(x,z)=" << path.xz.p.size()
           << " shared(y,z)=" << path.yz.p.size() << '\n';
    }
  }

  void verify() {
    std::string file;
    for (const auto *f : {&o_.cert, &o_.witness, &o_.squiggle, &o_.path})
      if (!f->empty()) {
        if (!file.empty())
          throw Error(ErrorKind::input, "verify takes exactly one file");
        file = *f;
      }
    if (file.empty())
      throw Error(ErrorKind::input, "verify needs --cert, --witness, --squiggle or --path");

    auto doc = read_file(file);
    auto kind = header_of(doc);
    std::istringstream in(doc);
    TextReader text(in);
    bool ok = false;
    if (kind == "conjugator-certificate")
      ok = verify_conjugator(read_certificate(text));
    else if (kind == "unbalanced-witness")
      ok = verify_witness(read_witness(text));
    else if (kind == "squiggle-witness")
      ok = verify_squiggle(read_squiggle(text));
    else if (kind == "squiggle-path")
      ok = verify_squiggle_path(read_path(text));
    else
      throw Error(ErrorKind::parse, "unrecognised document '" + kind + "'");
    out_ << "verify " << kind << ' ' << (ok ? "ok" : "FAILED") << '\n';
    result.exit_code = ok ? 0 : 1;
  }

private:
  const Options &o_;
  std::ostream &out_;
};

} // namespace

CommandResult run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Finite measure-preserving systems: towers, conjugators and witnesses", "mptool"};
  app.require_subcommand(1);

  auto common = [&](CLI::App *sub) {
    sub->add_option("--out", o.out_path, "output file");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  auto *gen = app.add_subcommand("gen", "generate a system");
  gen->add_option("--kind", o.kind, "rotation | random_cycle | random_permutation | m_periodic | orbit_edits");
  gen->add_option("--n", o.n, "atom count");
  gen->add_option("--a", o.a, "rotation shift");
  gen->add_option("--m", o.m, "period for m_periodic");
  gen->add_option("--seed", o.seed);
  gen->add_option("--from", o.from, "cycle to edit (orbit_edits)");
  gen->add_option("--edits", o.edits, "number of orbit-local edits");
  common(gen);

  auto *dist = app.add_subcommand("dist", "Halmos distance");
  dist->add_option("--s", o.s)->required();
  dist->add_option("--t", o.t)->required();

  auto *tower = app.add_subcommand("tower", "Rokhlin tower of an ergodic system");
  tower->add_option("--t", o.t)->required();
  tower->add_option("--m", o.m, "tower height")->required();
  common(tower);

  auto *approx = app.add_subcommand("approx", "periodic approximation");
  approx->add_option("--t", o.t)->required();
  approx->add_option("--m", o.m, "period")->required();
  common(approx);

  auto *smooth = app.add_subcommand("smooth", "merge cycles into one");
  smooth->add_option("--s", o.s)->required();
  common(smooth);

  auto *conj = app.add_subcommand("conj", "near-identity conjugator certificate");
  conj->add_option("--s", o.s)->required();
  conj->add_option("--t", o.t)->required();
  conj->add_option("--delta", o.delta, "p/q");
  common(conj);

  auto *witness = app.add_subcommand("witness", "unbalancedness witness");
  witness->add_option("--t1", o.t1)->required();
  witness->add_option("--t2", o.t2)->required();
  witness->add_option("--center", o.center, "center of U")->required();
  witness->add_option("--sets", o.sets, "file of set blocks for U");
  witness->add_option("--u-eps", o.u_eps, "p/q")->required();
  witness->add_option("--v-eps", o.v_eps, "p/q")->required();
  witness->add_option("--delta", o.delta, "p/q");
  witness->add_option("--seed", o.seed);
  common(witness);

  auto *splus = app.add_subcommand("splus", "sequence witnesses (path, or squiggle with --box)");
  splus->add_option("--x", o.x)->required();
  splus->add_option("--y", o.y)->required();
  splus->add_option("--box", o.box, "lo:hi,lo:hi,...");
  splus->add_option("--k", o.k);
  common(splus);

  auto *verify = app.add_subcommand("verify", "recheck a certificate");
  verify->add_option("--cert", o.cert);
  verify->add_option("--witness", o.witness);
  verify->add_option("--squiggle", o.squiggle);
  verify->add_option("--path", o.path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return {0, {}};
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << '\n' << app.help();
    return {2, {}};
  }

  Runner runner(o, out);
  try {
    if (gen->parsed())
      runner.gen();
    else if (dist->parsed())
      runner.dist();
    else if (tower->parsed())
      runner.tower();
    else if (approx->parsed())
      runner.approx();
    else if (smooth->parsed())
      runner.smooth();
    else if (conj->parsed())
      runner.conj();
    else if (witness->parsed())
      runner.witness();
    else if (splus->parsed())
      runner.splus();
    else if (verify->parsed())
      runner.verify();
  } catch (const Error &e) {
    err << "error: " << error_name(e.kind()) << ": " << e.what() << '\n';
    runner.result.exit_code = 2;
  }
  return runner.result;
}

} // namespace mpt::cli
