#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vcpack/entropy.hpp"

namespace vcpack {

using Rational = boost::multiprecision::cpp_rational;

/// A finite set of distinct length-n vectors over the alphabet {0..k-1}.
/// Binary classes (k = 2) map symbol 0 <-> -1 and symbol 1 <-> +1.
/// Immutable after construction; safe to share across threads.
class FunctionClass {
 public:
  /// Throws domain_error on bad symbols, ragged rows, or (unless dedup)
  /// duplicate rows. With dedup=true duplicates are silently merged.
  FunctionClass(int k, int n, std::vector<std::vector<std::uint8_t>> rows,
                bool dedup = false);

  /// Build a binary class from a +-1 matrix (-1 <-> 0, +1 <-> 1).
  static FunctionClass from_pm(const std::vector<std::vector<int>>& rows,
                               bool dedup = false);

  int k() const { return k_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::uint8_t>& row(int i) const { return rows_[i]; }

  /// Hamming distance between rows i and j (coordinate count).
  int hamming(int i, int j) const;
  /// Normalized Hamming distance rho as an exact rational.
  Rational rho(int i, int j) const;
  /// (1/n) sum x_i y_i for binary classes; satisfies 2 rho + <x,y> = 1.
  Rational inner_product(int i, int j) const;
  /// max |<x,y>| over distinct pairs (binary). Defined as 0 for m < 2.
  Rational gamma_orth() const;
  /// gamma_k(x,y) = 1 - (k/(k-1)) rho(x,y); coincides with inner_product
  /// for k = 2.
  Rational gamma_k_pair(int i, int j) const;
  /// max |gamma_k| over distinct pairs.
  Rational gamma_orth_k() const;

  /// Projection onto the index sequence I (deduplicated set semantics).
  FunctionClass project(std::span<const int> coords) const;
  /// True iff the projection onto I is the full binary cube; empty I
  /// shatters by convention.
  bool shatters(std::span<const int> coords) const;

  /// Exact VC dimension (binary only). Subset search in increasing size;
  /// shattering is downward closed, so the first empty size level stops the
  /// search, and sizes with 2^s > m are never entered.
  int vc_dimension() const;

  // Generalized dimensions for k-ary classes via exact witness-and-subset
  // search. All three coincide with vc_dimension when k = 2.
  int natarajan_dim() const;
  int graph_dim() const;
  int pollard_dim() const;

 private:
  int k_;
  int n_;
  std::vector<std::vector<std::uint8_t>> rows_;
  std::vector<std::vector<std::uint64_t>> packed_;  // per-row bitwords, k = 2

  void pack_binary();
};

/// Exact packing number result: a maximum eps-separated subset (pairwise
/// rho >= eps, inclusive) with its witness row indices.
struct PackingResult {
  Rational eps;
  int size = 0;
  std::vector<int> witness;  // lexicographically least among maxima
  bool exact = false;
};

/// Maximum eps-separated subset via branch-and-bound maximum clique on the
/// graph with edges {x,y : rho(x,y) >= eps}; greedy-coloring upper bound,
/// deterministic ordering.
PackingResult packing_number(const FunctionClass& fc, const Rational& eps);

struct SauerAuditReport {
  bool pass = true;
  std::vector<std::string> checks;      // one line per check performed
  std::vector<std::string> violations;  // empty on pass
};

/// Audits |F|I| <= sum C(|I|,i) on sampled index sets (binary, d = dvc) and
/// |F| <= sum C(n,i) k^i against each generalized dimension (k-ary).
SauerAuditReport sauer_audit(const FunctionClass& fc, std::uint64_t seed = 0,
                             int index_samples = 32);

/// Family file format: line 1 "k n m"; then m rows of n whitespace-separated
/// symbols. For k = 2 a row of +/- characters is also accepted on read.
/// Writer emits the symbol form, LF endings, no trailing whitespace.
FunctionClass read_family(std::istream& in);
void write_family(std::ostream& out, const FunctionClass& fc);

}  // namespace vcpack
