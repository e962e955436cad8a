// End-to-end checks for the command-line tool. argv[1] is the binary path;
// each case shells out and inspects exit status and captured stdout.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  std::cout << (ok ? "ok: " : "FAIL: ") << what << "\n";
  if (!ok) ++failures;
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-cli>\n";
    return 2;
  }
  const std::string bin = argv[1];

  const std::string family_path = "/tmp/vcpack_cli_family.txt";
  {
    std::ofstream f(family_path);
    f << "2 4 4\n1 1 1 1\n1 0 1 0\n1 1 0 0\n1 0 0 1\n";
  }

  {
    auto r = run(bin + " beta --gamma 0.25");
    expect(r.code == 0, "beta exits 0");
    expect(std::abs(std::stod(r.out) - 5.583931570467623) < 1e-8,
           "beta value matches the oracle");
  }
  {
    auto r = run(bin + " delta --gamma 0 --k 2");
    expect(r.code == 0 &&
               std::abs(std::stod(r.out) - 0.2270921952193482) < 1e-8,
           "delta value matches the oracle");
    auto t = run(bin + " delta --gamma 0 --k 2 --theorem-domain");
    expect(t.code == 0 && std::stod(t.out) >= std::stod(r.out) - 1e-12,
           "theorem-domain delta is no smaller");
  }

  expect(run(bin).code == 1, "missing subcommand exits 1");
  expect(run(bin + " beta").code == 1, "missing required option exits 1");
  expect(run(bin + " beta --gamma 0.1 --bogus 3").code == 1,
         "unknown option exits 1");
  expect(run(bin + " beta --gamma 1.0").code == 2, "divergent input exits 2");
  expect(run(bin + " family vcdim /nonexistent.txt").code == 2,
         "unreadable family file exits 2");
  expect(run(bin + " --budget 10 experiment projection --r 2 --exhaustive " +
             family_path)
                 .code == 3,
         "tiny enumeration budget exits 3");

  {
    auto r = run(bin + " construct hadamard --n 2");
    expect(r.code == 0 &&
               r.out == "2 4 4\n1 1 1 1\n1 0 1 0\n1 1 0 0\n1 0 0 1\n",
           "hadamard construction emits the canonical file");
    auto vc = run(bin + " construct hadamard --n 2 | " + bin +
                  " family vcdim -");
    expect(vc.code == 0 && std::stoi(vc.out) == 2,
           "construct-to-vcdim pipeline gives 2");
  }
  {
    auto r = run(bin + " family stats " + family_path);
    expect(r.code == 0 && contains(r.out, "m: 4") &&
               contains(r.out, "gamma_orth: 0") &&
               contains(r.out, "vc_dimension: 2"),
           "family stats reports size, gamma, dimension");
    auto j = run(bin + " --format json family stats " + family_path);
    expect(j.code == 0 && contains(j.out, "\"vc_dimension\":2"),
           "json stats carries the dimension");
  }
  {
    auto r = run(bin + " family packing --eps 1/2 " + family_path);
    expect(r.code == 0 && contains(r.out, "size: 4") &&
               contains(r.out, "witness: 0 1 2 3"),
           "packing at eps=1/2 keeps all four rows");
    auto half = run(bin + " family packing --eps 0.75 " + family_path);
    expect(half.code == 0 && contains(half.out, "size: 1"),
           "packing at eps=3/4 keeps one row");
  }
  {
    auto r = run(bin + " experiment projection --r 2 --exhaustive " +
                 family_path);
    expect(r.code == 0 && contains(r.out, "p_collision: 3/8"),
           "exhaustive projection collision is 3/8");
    auto k = run(bin + " experiment key-inequality --r 4 " + family_path);
    expect(k.code == 0 && contains(k.out, "pass: yes"),
           "key inequality passes at r = 4");
    auto bad = run(bin + " experiment key-inequality --r 3 " + family_path);
    expect(bad.code == 2, "key inequality below 2d exits 2");
  }
  {
    auto r = run(bin + " figures --which 2 --grid 0:0.05:0.1");
    expect(r.code == 0 && r.out.rfind("gamma,beta\n0,2\n", 0) == 0,
           "figure 2 starts with the gamma=0 row");
    auto f1 = run(bin + " figures --which 1");
    expect(f1.code == 0 &&
               contains(f1.out, "gamma,gkm_log_per_d,haussler_log_per_d"),
           "figure 1 has the comparison header");
  }
  {
    auto r = run(bin + " verify-lemmas --n-max 12 --k 3");
    expect(r.code == 0 && contains(r.out, "verified: 66") &&
               contains(r.out, "counterexamples: 0"),
           "lemma sweep verifies all 66 desk-scale cases");
  }
  {
    auto r = run(bin + " bounds --gamma 0 --d 2 --n 4");
    expect(r.code == 0 && contains(r.out, "SauerUpper: 11") &&
               contains(r.out, "RothSeroussi: 4"),
           "bounds table includes the exact columns");
  }
  {
    const std::string cmd =
        bin + " construct random --n 16 --gamma 0.5 --m 8 --seed 7";
    auto a = run(cmd);
    auto b = run(cmd);
    expect(a.code == 0 && a.out == b.out && !a.out.empty(),
           "seeded construction is byte-identical across runs");
    auto c = run(cmd + " | " + bin + " family gamma -");
    expect(c.code == 0, "constructed family parses back");
  }

  std::remove(family_path.c_str());
  if (failures) {
    std::cout << failures << " check(s) failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
