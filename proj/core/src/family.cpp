#include "vcpack/family.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "vcpack/errors.hpp"
#include "vcpack/rng.hpp"

namespace vcpack {

FunctionClass::FunctionClass(int k, int n,
                             std::vector<std::vector<std::uint8_t>> rows,
                             bool dedup)
    : k_(k), n_(n) {
  if (k < 2) throw domain_error("FunctionClass: k < 2");
  if (n < 1) throw domain_error("FunctionClass: n < 1");
  if (rows.empty()) throw domain_error("FunctionClass: empty class");
  std::set<std::vector<std::uint8_t>> seen;
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != n) {
      throw domain_error("FunctionClass: row length != n");
    }
    for (auto s : r) {
      if (s >= k) throw domain_error("FunctionClass: symbol >= k");
    }
    if (!seen.insert(r).second) {
      if (!dedup) throw domain_error("FunctionClass: duplicate row");
      continue;
    }
    rows_.push_back(std::move(r));
  }
  if (k_ == 2) pack_binary();
}

FunctionClass FunctionClass::from_pm(const std::vector<std::vector<int>>& rows,
                                     bool dedup) {
  std::vector<std::vector<std::uint8_t>> sym;
  sym.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<std::uint8_t> s;
    s.reserve(r.size());
    for (int v : r) {
      if (v != 1 && v != -1) throw domain_error("from_pm: entries must be +-1");
      s.push_back(v == 1 ? 1 : 0);
    }
    sym.push_back(std::move(s));
  }
  return FunctionClass(2, sym.empty() ? 0 : static_cast<int>(sym[0].size()),
                       std::move(sym), dedup);
}

void FunctionClass::pack_binary() {
  const int words = (n_ + 63) / 64;
  packed_.assign(rows_.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (int j = 0; j < n_; ++j) {
      if (rows_[i][j]) packed_[i][j / 64] |= 1ULL << (j % 64);
    }
  }
}

int FunctionClass::hamming(int i, int j) const {
  if (k_ == 2) {
    int diff = 0;
    for (std::size_t w = 0; w < packed_[i].size(); ++w) {
      diff += std::popcount(packed_[i][w] ^ packed_[j][w]);
    }
    return diff;
  }
  int diff = 0;
  for (int c = 0; c < n_; ++c) diff += rows_[i][c] != rows_[j][c];
  return diff;
}

Rational FunctionClass::rho(int i, int j) const {
  return Rational(hamming(i, j), n_);
}

Rational FunctionClass::inner_product(int i, int j) const {
  if (k_ != 2) throw domain_error("inner_product: binary classes only");
  return Rational(n_ - 2 * hamming(i, j), n_);
}

Rational FunctionClass::gamma_orth() const {
  if (k_ != 2) throw domain_error("gamma_orth: binary classes only");
  Rational best = 0;  // m < 2: maximum over the empty pair set, defined as 0
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      Rational ip = inner_product(i, j);
      if (ip < 0) ip = -ip;
      if (ip > best) best = ip;
    }
  }
  return best;
}

Rational FunctionClass::gamma_k_pair(int i, int j) const {
  // 1 - (k/(k-1)) * rho = (n(k-1) - k*diff) / (n(k-1))
  return Rational(static_cast<long>(n_) * (k_ - 1) -
                      static_cast<long>(k_) * hamming(i, j),
                  static_cast<long>(n_) * (k_ - 1));
}

Rational FunctionClass::gamma_orth_k() const {
  Rational best = 0;
  for (int i = 0; i < size(); ++i) {
    for (int j = i + 1; j < size(); ++j) {
      Rational g = gamma_k_pair(i, j);
      if (g < 0) g = -g;
      if (g > best) best = g;
    }
  }
  return best;
}

FunctionClass FunctionClass::project(std::span<const int> coords) const {
  if (coords.empty()) throw domain_error("project: empty index sequence");
  std::set<int> distinct;
  for (int c : coords) {
    if (c < 0 || c >= n_) throw domain_error("project: index out of range");
    if (!distinct.insert(c).second) {
      throw domain_error("project: repeated index");
    }
  }
  std::vector<std::vector<std::uint8_t>> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) {
    std::vector<std::uint8_t> p;
    p.reserve(coords.size());
    for (int c : coords) p.push_back(r[c]);
    out.push_back(std::move(p));
  }
  return FunctionClass(k_, static_cast<int>(coords.size()), std::move(out),
                       /*dedup=*/true);
}

bool FunctionClass::shatters(std::span<const int> coords) const {
  if (coords.empty()) return true;
  if (k_ != 2) throw domain_error("shatters: binary classes only");
  const int s = static_cast<int>(coords.size());
  if (s >= 63 || (1LL << s) > size()) return false;
  std::unordered_set<std::uint64_t> masks;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint64_t m = 0;
    for (int b = 0; b < s; ++b) {
      if (rows_[i][coords[b]]) m |= 1ULL << b;
    }
    masks.insert(m);
  }
  return masks.size() == (1ULL << s);
}

namespace {

// Calls fn on every size-s combination of {0..n-1} until fn returns true
// (meaning "found, stop"); returns whether any call returned true.
template <typename Fn>
bool any_combination(int n, int s, Fn&& fn) {
  std::vector<int> idx(s);
  for (int i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    int i = s - 1;
    while (i >= 0 && idx[i] == n - s + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int FunctionClass::vc_dimension() const {
  if (k_ != 2) throw domain_error("vc_dimension: binary classes only");
  int d = 0;
  for (int s = 1; s <= n_; ++s) {
    if (s >= 63 || (1LL << s) > size()) break;  // shattering needs 2^s <= m
    const bool found = any_combination(
        n_, s, [&](const std::vector<int>& idx) { return shatters(idx); });
    if (!found) break;  // shattering is downward closed
    d = s;
  }
  return d;
}

namespace {

// Distinct projected rows onto idx, encoded base k into 64-bit keys.
std::vector<std::vector<std::uint8_t>> project_rows(
    const FunctionClass& fc, const std::vector<int>& idx) {
  std::set<std::vector<std::uint8_t>> out;
  for (int i = 0; i < fc.size(); ++i) {
    std::vector<std::uint8_t> p;
    p.reserve(idx.size());
    for (int c : idx) p.push_back(fc.row(i)[c]);
    out.insert(std::move(p));
  }
  return {out.begin(), out.end()};
}

bool natarajan_shatters(const FunctionClass& fc, const std::vector<int>& idx) {
  const int s = static_cast<int>(idx.size());
  const int k = fc.k();
  auto proj = project_rows(fc, idx);
  if (proj.size() < (1ULL << s)) return false;
  std::set<std::vector<std::uint8_t>> members(proj.begin(), proj.end());
  // Enumerate witness pairs (f1, f2) with f1[i] != f2[i] everywhere:
  // k(k-1) ordered symbol pairs per coordinate.
  const int pairs_per_coord = k * (k - 1);
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pair_table;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      if (a != b) pair_table.emplace_back(a, b);
    }
  }
  std::vector<int> choice(s, 0);
  while (true) {
    bool ok = true;
    for (std::uint64_t mask = 0; ok && mask < (1ULL << s); ++mask) {
      std::vector<std::uint8_t> v(s);
      for (int i = 0; i < s; ++i) {
        const auto& [a, b] = pair_table[choice[i]];
        v[i] = (mask >> i) & 1 ? a : b;
      }
      ok = members.count(v) > 0;
    }
    if (ok) return true;
    int i = 0;
    while (i < s && ++choice[i] == pairs_per_coord) choice[i++] = 0;
    if (i == s) return false;
  }
}

bool graph_shatters(const FunctionClass& fc, const std::vector<int>& idx) {
  const int s = static_cast<int>(idx.size());
  const int k = fc.k();
  auto proj = project_rows(fc, idx);
  if (static_cast<long long>(proj.size()) < (1LL << s)) return false;
  // Single witness g in [k]^s; need every agreement set realized.
  std::vector<int> g(s, 0);
  while (true) {
    std::vector<bool> seen(1ULL << s, false);
    std::size_t count = 0;
    for (const auto& p : proj) {
      std::uint64_t mask = 0;
      for (int i = 0; i < s; ++i) {
        if (p[i] == g[i]) mask |= 1ULL << i;
      }
      if (!seen[mask]) {
        seen[mask] = true;
        ++count;
      }
    }
    if (count == (1ULL << s)) return true;
    int i = 0;
    while (i < s && ++g[i] == k) g[i++] = 0;
    if (i == s) return false;
  }
}

bool pollard_shatters(const FunctionClass& fc, const std::vector<int>& idx) {
  const int s = static_cast<int>(idx.size());
  const int k = fc.k();
  auto proj = project_rows(fc, idx);
  if (static_cast<long long>(proj.size()) < (1LL << s)) return false;
  // Thresholds w_i in {1..k-1}; need every sign pattern of (x_i >= w_i).
  std::vector<int> w(s, 1);
  while (true) {
    std::vector<bool> seen(1ULL << s, false);
    std::size_t count = 0;
    for (const auto& p : proj) {
      std::uint64_t mask = 0;
      for (int i = 0; i < s; ++i) {
        if (p[i] >= w[i]) mask |= 1ULL << i;
      }
      if (!seen[mask]) {
        seen[mask] = true;
        ++count;
      }
    }
    if (count == (1ULL << s)) return true;
    int i = 0;
    while (i < s && ++w[i] == k) w[i++] = 1;
    if (i == s) return false;
  }
}

template <typename Shatters>
int generalized_dim(const FunctionClass& fc, Shatters&& sh) {
  int d = 0;
  for (int s = 1; s <= fc.n(); ++s) {
    if (s >= 63 || (1LL << s) > fc.size()) break;
    const bool found = any_combination(
        fc.n(), s, [&](const std::vector<int>& idx) { return sh(fc, idx); });
    if (!found) break;
    d = s;
  }
  return d;
}

}  // namespace

int FunctionClass::natarajan_dim() const {
  return generalized_dim(*this, natarajan_shatters);
}

int FunctionClass::graph_dim() const {
  return generalized_dim(*this, graph_shatters);
}

int FunctionClass::pollard_dim() const {
  return generalized_dim(*this, pollard_shatters);
}

// ---------------------------------------------------------------------------
// Maximum clique search (branch and bound with greedy coloring).

namespace {

struct CliqueSearch {
  const std::vector<std::vector<bool>>& adj;
  int target;  // stop as soon as a clique of this size is found; -1 = never
  std::vector<int> best;
  bool stopped = false;

  void expand(std::vector<int>& current, const std::vector<int>& cand) {
    if (stopped) return;
    if (cand.empty()) {
      if (current.size() > best.size()) {
        best = current;
        if (target > 0 && static_cast<int>(best.size()) >= target) {
          stopped = true;
        }
      }
      return;
    }
    // Greedy coloring of the candidates (ascending vertex index) gives the
    // pruning bound: a clique uses at most one vertex per color class.
    std::vector<std::vector<int>> classes;
    std::vector<int> order, color;
    for (int v : cand) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool clash = false;
        for (int u : classes[c]) {
          if (adj[u][v]) {
            clash = true;
            break;
          }
        }
        if (!clash) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      for (int v : classes[c]) {
        order.push_back(v);
        color.push_back(static_cast<int>(c) + 1);
      }
    }
    std::vector<int> pool = order;
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (stopped) return;
      if (current.size() + color[i] <= best.size()) return;
      const int v = order[i];
      std::vector<int> next;
      for (int j = 0; j < i; ++j) {
        if (adj[v][pool[j]]) next.push_back(pool[j]);
      }
      current.push_back(v);
      if (current.size() + next.size() > best.size()) expand(current, next);
      current.pop_back();
    }
  }
};

std::vector<int> max_clique(const std::vector<std::vector<bool>>& adj,
                            const std::vector<int>& vertices, int target) {
  CliqueSearch search{adj, target, {}, false};
  std::vector<int> current;
  search.expand(current, vertices);
  return search.best;
}

}  // namespace

PackingResult packing_number(const FunctionClass& fc, const Rational& eps) {
  if (!(eps > 0 && eps <= 1)) {
    throw domain_error("packing_number: need 0 < eps <= 1");
  }
  const int m = fc.size();
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (fc.rho(i, j) >= eps) adj[i][j] = adj[j][i] = true;
    }
  }
  std::vector<int> all(m);
  for (int i = 0; i < m; ++i) all[i] = i;
  const int opt = static_cast<int>(max_clique(adj, all, -1).size());

  // Reconstruct the lexicographically least maximum witness: greedily take
  // the smallest vertex that still extends to a clique of the optimal size.
  PackingResult result{eps, opt, {}, true};
  std::vector<int> pool = all;
  while (static_cast<int>(result.witness.size()) < opt) {
    for (int v : pool) {
      const int need = opt - static_cast<int>(result.witness.size()) - 1;
      std::vector<int> next;
      for (int u : pool) {
        if (u > v && adj[v][u]) next.push_back(u);
      }
      if (need == 0 ||
          static_cast<int>(max_clique(adj, next, need).size()) >= need) {
        result.witness.push_back(v);
        pool = std::move(next);
        break;
      }
    }
  }
  return result;
}

SauerAuditReport sauer_audit(const FunctionClass& fc, std::uint64_t seed,
                             int index_samples) {
  SauerAuditReport report;
  auto record = [&](bool ok, const std::string& line) {
    report.checks.push_back((ok ? "ok: " : "VIOLATION: ") + line);
    if (!ok) {
      report.pass = false;
      report.violations.push_back(line);
    }
  };
  const BigInt m = fc.size();
  if (fc.k() == 2) {
    const int d = fc.vc_dimension();
    record(m <= binom_sum(fc.n(), d),
           "|F| <= binom_sum(n, dvc) with dvc=" + std::to_string(d));
    RandomSource rnd(seed);
    for (int t = 0; t < index_samples; ++t) {
      const int s = 1 + static_cast<int>(rnd.bounded(fc.n()));
      std::vector<int> coords(fc.n());
      for (int i = 0; i < fc.n(); ++i) coords[i] = i;
      for (int i = 0; i < s; ++i) {
        std::swap(coords[i],
                  coords[i + rnd.bounded(static_cast<std::uint64_t>(
                                fc.n() - i))]);
      }
      coords.resize(s);
      std::sort(coords.begin(), coords.end());
      const auto projected = fc.project(coords);
      std::ostringstream line;
      line << "|F|I| <= binom_sum(" << s << ", " << d << ") for sampled I";
      record(BigInt(projected.size()) <= binom_sum(s, std::min(s, d)),
             line.str());
    }
  }
  // Generalized Sauer bound against each of the three k-ary dimensions.
  const int dims[3] = {fc.natarajan_dim(), fc.graph_dim(), fc.pollard_dim()};
  const char* names[3] = {"natarajan", "graph", "pollard"};
  for (int i = 0; i < 3; ++i) {
    std::ostringstream line;
    line << "|F| <= binom_sum_k(n, " << names[i] << "=" << dims[i] << ", k)";
    record(m <= binom_sum_k(fc.n(), dims[i], fc.k()), line.str());
  }
  return report;
}

FunctionClass read_family(std::istream& in) {
  int k, n, m;
  if (!(in >> k >> n >> m)) throw domain_error("read_family: bad header");
  if (m < 1) throw domain_error("read_family: m < 1");
  std::string rest;
  std::getline(in, rest);
  std::vector<std::vector<std::uint8_t>> rows;
  rows.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw domain_error("read_family: short file");
    std::vector<std::uint8_t> row;
    row.reserve(n);
    if (line.find_first_of("+-") != std::string::npos) {
      if (k != 2) throw domain_error("read_family: +/- rows require k=2");
      for (char c : line) {
        if (c == '+') {
          row.push_back(1);
        } else if (c == '-') {
          row.push_back(0);
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          throw domain_error("read_family: bad +/- row");
        }
      }
    } else {
      std::istringstream ls(line);
      long sym;
      while (ls >> sym) {
        if (sym < 0 || sym >= k) throw domain_error("read_family: symbol >= k");
        row.push_back(static_cast<std::uint8_t>(sym));
      }
    }
    rows.push_back(std::move(row));
  }
  return FunctionClass(k, n, std::move(rows));
}

void write_family(std::ostream& out, const FunctionClass& fc) {
  out << fc.k() << " " << fc.n() << " " << fc.size() << "\n";
  for (int i = 0; i < fc.size(); ++i) {
    const auto& r = fc.row(i);
    for (int j = 0; j < fc.n(); ++j) {
      if (j) out << " ";
      out << static_cast<int>(r[j]);
    }
    out << "\n";
  }
}

}  // namespace vcpack
