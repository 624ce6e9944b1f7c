#ifndef MPT_IO_HPP
#define MPT_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "mpt/conjugator.hpp"
#include "mpt/perm.hpp"
#include "mpt/rokhlin.hpp"
#include "mpt/splus.hpp"
#include "mpt/witness.hpp"

// Text formats. Every block starts with a header line naming its kind and
// sizes; rationals are always written as p/q.
//
//   perm n=<N>              set n=<N>              seq L=<L>
//   <N images>              <sorted members>       <L rationals>
//
//   tower n=<N> m=<M>       nbhd n=<N> sets=<K> eps=<p/q>
//   <base members>          <center perm block>
//   <residual members>      <K set blocks>
//
// Certificates are a header line, `name value` scalar lines, `name` lines
// followed by an embedded block, and a closing `end`.

namespace mpt {

void write_perm(std::ostream &out, const PermSystem &p);
void write_set(std::ostream &out, const AtomSet &s);
void write_sequence(std::ostream &out, const FiniteSequence &x);
void write_tower(std::ostream &out, const RokhlinTower &tower);
void write_neighborhood(std::ostream &out, const WeakNeighborhood &nbhd);
void write_certificate(std::ostream &out, const ConjugatorCertificate &cert);
void write_witness(std::ostream &out, const UnbalancedWitness &w);
void write_squiggle(std::ostream &out, const SquiggleCertificate &cert);
void write_path(std::ostream &out, const SquigglePath &path);

/// Line-oriented reader shared by all parsers. Blank lines are significant
/// (an empty set is written as an empty member line).
class TextReader {
public:
  explicit TextReader(std::istream &in) : in_(in) {}

  /// Next line; throws Error(parse) at end of input.
  std::string line();
  /// Next line split on whitespace.
  std::vector<std::string> words();
  bool at_end();
  /// Consumes a line that must equal `expected`.
  void expect(const std::string &expected);
  /// Consumes `key value` and returns value.
  std::string scalar(const std::string &key);
  std::size_t line_number() const { return line_no_; }

private:
  std::istream &in_;
  std::size_t line_no_ = 0;
};

PermSystem read_perm(TextReader &in);
AtomSet read_set(TextReader &in);
FiniteSequence read_sequence(TextReader &in);
RokhlinTower read_tower(TextReader &in, const PermSystem &transform);
WeakNeighborhood read_neighborhood(TextReader &in);
ConjugatorCertificate read_certificate(TextReader &in);
UnbalancedWitness read_witness(TextReader &in);
SquiggleCertificate read_squiggle(TextReader &in);
SquigglePath read_path(TextReader &in);

/// Reads consecutive set blocks until end of input.
std::vector<AtomSet> read_sets(TextReader &in);

/// `lo:hi,lo:hi,...` with rational endpoints.
std::vector<Interval> parse_box(const std::string &spec);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const std::string &contents);

/// First line of a document, used to dispatch on certificate kind.
std::string header_of(const std::string &document);

} // namespace mpt

#endif
