#include <doctest.h>

#include <algorithm>
#include <span>
#include <sstream>
#include <vector>

#include "vcpack/errors.hpp"
#include "vcpack/family.hpp"
#include "vcpack/rng.hpp"

using namespace vcpack;

namespace {

FunctionClass hadamard4() {
  return FunctionClass(2, 4,
                       {{1, 1, 1, 1}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 1}});
}

FunctionClass random_binary(RandomSource& rnd, int n, int m) {
  std::vector<std::vector<std::uint8_t>> rows;
  while (static_cast<int>(rows.size()) < m) {
    std::vector<std::uint8_t> r(n);
    for (int j = 0; j < n; ++j) r[j] = static_cast<std::uint8_t>(rnd.next_bit());
    rows.push_back(std::move(r));
  }
  return FunctionClass(2, n, std::move(rows), /*dedup=*/true);
}

}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(FunctionClass(1, 2, {{0, 0}}), domain_error);
  CHECK_THROWS_AS(FunctionClass(2, 0, {{}}), domain_error);
  CHECK_THROWS_AS(FunctionClass(2, 2, {}), domain_error);
  CHECK_THROWS_AS(FunctionClass(2, 2, {{0, 2}}), domain_error);
  CHECK_THROWS_AS(FunctionClass(2, 2, {{0}}), domain_error);
  CHECK_THROWS_AS(FunctionClass(2, 2, {{0, 1}, {0, 1}}), domain_error);
  CHECK(FunctionClass(2, 2, {{0, 1}, {0, 1}}, true).size() == 1);
  CHECK_THROWS_AS(FunctionClass::from_pm({{1, 2}}), domain_error);
}

TEST_CASE("hadamard-4 pairwise structure") {
  auto h = hadamard4();
  CHECK(h.size() == 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      CHECK(h.hamming(i, j) == 2);
      CHECK(h.rho(i, j) == Rational(1, 2));
      CHECK(h.inner_product(i, j) == 0);
    }
  }
  CHECK(h.gamma_orth() == 0);
  CHECK(h.gamma_orth_k() == 0);
  CHECK(h.vc_dimension() == 2);
}

TEST_CASE("rho and inner product identities, property tested") {
  RandomSource rnd(7);
  for (int t = 0; t < 50; ++t) {
    auto fc = random_binary(rnd, 3 + static_cast<int>(rnd.bounded(6)),
                            2 + static_cast<int>(rnd.bounded(10)));
    for (int i = 0; i < fc.size(); ++i) {
      for (int j = 0; j < fc.size(); ++j) {
        // 2 rho + <x,y> = 1 for binary classes.
        CHECK(Rational(2) * fc.rho(i, j) + fc.inner_product(i, j) == 1);
        CHECK(fc.gamma_k_pair(i, j) == fc.inner_product(i, j));
      }
    }
  }
  // k-ary identity (k/(k-1)) rho + gamma_k = 1.
  for (int t = 0; t < 30; ++t) {
    const int k = 3 + static_cast<int>(rnd.bounded(3));
    const int n = 2 + static_cast<int>(rnd.bounded(5));
    std::vector<std::vector<std::uint8_t>> rows;
    for (int i = 0; i < 6; ++i) {
      std::vector<std::uint8_t> r(n);
      for (int j = 0; j < n; ++j) {
        r[j] = static_cast<std::uint8_t>(rnd.bounded(k));
      }
      rows.push_back(std::move(r));
    }
    FunctionClass fc(k, n, std::move(rows), true);
    for (int i = 0; i < fc.size(); ++i) {
      for (int j = 0; j < fc.size(); ++j) {
        CHECK(Rational(k, k - 1) * fc.rho(i, j) + fc.gamma_k_pair(i, j) == 1);
      }
    }
  }
}

TEST_CASE("projection and shattering") {
  auto h = hadamard4();
  const int c0[] = {0};
  // Coordinate 0 is all-ones, so the projection has one row.
  CHECK(h.project(c0).size() == 1);
  const int c12[] = {1, 2};
  CHECK(h.project(c12).size() == 4);
  CHECK(h.shatters(c12));
  CHECK(h.shatters(std::span<const int>{}));
  const int c123[] = {1, 2, 3};
  CHECK_FALSE(h.shatters(c123));  // 2^3 > 4 rows
  const int bad[] = {4};
  CHECK_THROWS_AS(h.project(bad), domain_error);
  const int rep[] = {1, 1};
  CHECK_THROWS_AS(h.project(rep), domain_error);
  CHECK_THROWS_AS(h.project(std::span<const int>{}), domain_error);
}

TEST_CASE("vc dimension on known classes") {
  // Full cube on 3 points: vc = 3.
  std::vector<std::vector<std::uint8_t>> cube;
  for (int v = 0; v < 8; ++v) {
    cube.push_back({static_cast<std::uint8_t>(v & 1),
                    static_cast<std::uint8_t>((v >> 1) & 1),
                    static_cast<std::uint8_t>((v >> 2) & 1)});
  }
  CHECK(FunctionClass(2, 3, cube).vc_dimension() == 3);
  // Singletons plus the empty set: vc = 1.
  std::vector<std::vector<std::uint8_t>> single{{0, 0, 0}};
  for (int i = 0; i < 3; ++i) {
    std::vector<std::uint8_t> r(3, 0);
    r[i] = 1;
    single.push_back(r);
  }
  CHECK(FunctionClass(2, 3, single).vc_dimension() == 1);
  CHECK(FunctionClass(2, 3, {{0, 1, 0}}).vc_dimension() == 0);
}

TEST_CASE("generalized dimensions collapse to vc for binary classes") {
  RandomSource rnd(11);
  for (int t = 0; t < 40; ++t) {
    auto fc = random_binary(rnd, 3 + static_cast<int>(rnd.bounded(5)),
                            2 + static_cast<int>(rnd.bounded(12)));
    const int d = fc.vc_dimension();
    CHECK(fc.natarajan_dim() == d);
    CHECK(fc.graph_dim() == d);
    CHECK(fc.pollard_dim() == d);
  }
}

TEST_CASE("generalized dimensions of the full ternary square") {
  std::vector<std::vector<std::uint8_t>> rows;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      rows.push_back({static_cast<std::uint8_t>(a),
                      static_cast<std::uint8_t>(b)});
    }
  }
  FunctionClass fc(3, 2, rows);
  CHECK(fc.natarajan_dim() == 2);
  CHECK(fc.graph_dim() == 2);
  CHECK(fc.pollard_dim() == 2);
}

TEST_CASE("packing numbers with exact thresholds") {
  auto h = hadamard4();
  auto full = packing_number(h, Rational(1, 2));
  CHECK(full.size == 4);
  CHECK(full.witness == std::vector<int>{0, 1, 2, 3});
  CHECK(full.exact);
  auto one = packing_number(h, Rational(3, 4));
  CHECK(one.size == 1);
  CHECK(one.witness == std::vector<int>{0});
  // eps <= min rho always packs everything.
  CHECK(packing_number(h, Rational(1, h.n())).size == h.size());
  CHECK_THROWS_AS(packing_number(h, Rational(0)), domain_error);
  CHECK_THROWS_AS(packing_number(h, Rational(3, 2)), domain_error);
}

TEST_CASE("packing witness ties break lexicographically") {
  // rho(00,11) = rho(01,10) = 1; two maximum cliques, {0,1} wins.
  FunctionClass fc(2, 2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}});
  auto r = packing_number(fc, Rational(1));
  CHECK(r.size == 2);
  CHECK(r.witness == std::vector<int>{0, 1});
}

TEST_CASE("packing number against brute force on random classes") {
  RandomSource rnd(23);
  for (int t = 0; t < 25; ++t) {
    auto fc = random_binary(rnd, 4 + static_cast<int>(rnd.bounded(4)),
                            3 + static_cast<int>(rnd.bounded(8)));
    const Rational eps(1 + static_cast<long>(rnd.bounded(fc.n())), fc.n());
    auto r = packing_number(fc, eps);
    // Brute force over all subsets.
    int best = 0;
    const int m = fc.size();
    for (int mask = 1; mask < (1 << m); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i) {
        if (mask & (1 << i)) sub.push_back(i);
      }
      bool ok = true;
      for (std::size_t a = 0; ok && a < sub.size(); ++a) {
        for (std::size_t b = a + 1; ok && b < sub.size(); ++b) {
          ok = fc.rho(sub[a], sub[b]) >= eps;
        }
      }
      if (ok) best = std::max(best, static_cast<int>(sub.size()));
    }
    CHECK(r.size == best);
    // The witness itself must be eps-separated.
    for (std::size_t a = 0; a < r.witness.size(); ++a) {
      for (std::size_t b = a + 1; b < r.witness.size(); ++b) {
        CHECK(fc.rho(r.witness[a], r.witness[b]) >= eps);
      }
    }
  }
}

TEST_CASE("sauer audit passes on well-formed classes") {
  CHECK(sauer_audit(hadamard4()).pass);
  RandomSource rnd(31);
  for (int t = 0; t < 10; ++t) {
    auto fc = random_binary(rnd, 5 + static_cast<int>(rnd.bounded(4)),
                            4 + static_cast<int>(rnd.bounded(12)));
    auto rep = sauer_audit(fc, 1000 + t);
    CHECK(rep.pass);
    CHECK(rep.violations.empty());
    CHECK(rep.checks.size() > 3);
  }
}

TEST_CASE("family file io round trip") {
  auto h = hadamard4();
  std::ostringstream out;
  write_family(out, h);
  CHECK(out.str() == "2 4 4\n1 1 1 1\n1 0 1 0\n1 1 0 0\n1 0 0 1\n");
  std::istringstream in(out.str());
  auto back = read_family(in);
  CHECK(back.k() == h.k());
  CHECK(back.n() == h.n());
  CHECK(back.size() == h.size());
  for (int i = 0; i < h.size(); ++i) CHECK(back.row(i) == h.row(i));
  // Writing again reproduces the same bytes.
  std::ostringstream out2;
  write_family(out2, back);
  CHECK(out2.str() == out.str());
}

TEST_CASE("family reader accepts sign rows and rejects malformed input") {
  std::istringstream pm("2 3 2\n+-+\n--+\n");
  auto fc = read_family(pm);
  CHECK(fc.row(0) == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(fc.row(1) == std::vector<std::uint8_t>{0, 0, 1});

  std::istringstream bad_header("x y z\n");
  CHECK_THROWS_AS(read_family(bad_header), domain_error);
  std::istringstream short_file("2 3 2\n+-+\n");
  CHECK_THROWS_AS(read_family(short_file), domain_error);
  std::istringstream bad_symbol("3 2 1\n0 5\n");
  CHECK_THROWS_AS(read_family(bad_symbol), domain_error);
  std::istringstream pm_ternary("3 2 1\n+-\n");
  CHECK_THROWS_AS(read_family(pm_ternary), domain_error);
  std::istringstream dup("2 2 2\n0 1\n0 1\n");
  CHECK_THROWS_AS(read_family(dup), domain_error);
}
