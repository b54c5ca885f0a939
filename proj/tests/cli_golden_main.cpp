// End-to-end CLI checks: byte-exact golden comparisons, exit codes, and
// parse-serialize stability of the emitted JSON.

#include "wallcross/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cout << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  std::string out;
  int exit_code;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {"", -1};
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  int status = pclose(pipe);
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return {out, code};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_golden(const std::string& args, const std::string& golden_name) {
  RunResult r = run_cli(args);
  expect(r.exit_code == 0, "exit code 0 for: " + args);
  std::string want = slurp(std::string(GOLDEN_DIR) + "/" + golden_name);
  expect(!want.empty(), "golden file readable: " + golden_name);
  expect(r.out == want, "byte-exact output for: " + args + " vs " + golden_name);
}

void check_ledger_stability(const std::string& golden_name) {
  std::string bytes = slurp(std::string(GOLDEN_DIR) + "/" + golden_name);
  auto j = nlohmann::json::parse(bytes);
  wallcross::io::LedgerDocument doc = wallcross::io::ledger_from_json(j);
  std::string again = wallcross::io::to_json(doc).dump(2) + "\n";
  expect(again == bytes, "parse-serialize stability of " + golden_name);
}

}  // namespace

int main() {
  const std::string data = DATA_DIR;

  check_golden("ledger --r 1 --k 0 --ch2x2 -6 --format json", "ledger_hilb3.json");
  check_golden("ledger --r 1 --k 0 --ch2x2 -6 --format text", "ledger_hilb3.txt");
  check_golden("ledger --r 2 --k 0 --ch2x2 -8 --format json", "ledger_r2.json");
  check_golden("ledger --r 1 --k 1 --ch2x2 -5 --format json", "ledger_k1.json");
  check_golden("flip --i 1 --wminus 2 --wplus 3 --format json", "flip_123.json");
  check_golden("bott --n 4 --i 2 --kmax 3 --format json", "bott_gr24.json");
  check_golden("walls --zeta0 1 --zeta1 -7/12 --format json", "walls_chamber2.json");
  check_golden("adhm --file " + data + "/one_stable_rep.json --m 1 --format json",
               "adhm_stable.json");
  check_golden("ledger --config " + data + "/ledger_two_points.toml", "ledger_hilb2.json");
  check_golden("--config " + data + "/ledger_two_points.toml", "ledger_hilb2.json");

  check_ledger_stability("ledger_hilb3.json");
  check_ledger_stability("ledger_r2.json");
  check_ledger_stability("ledger_k1.json");

  // exit-code contract
  expect(run_cli("adhm --file " + data + "/bad_relation_rep.json --m 1").exit_code == 4,
         "violated relation exits 4");
  expect(run_cli("ledger --r 1 --k 1 --ch2x2 -5 --strict").exit_code == 3,
         "k != 0 under --strict exits 3");
  expect(run_cli("ledger --r 1 --k 0 --ch2x2 -5").exit_code == 2,
         "parity violation exits 2");
  expect(run_cli("ledger --r 0 --k 0 --ch2x2 -6").exit_code == 2, "rank 0 exits 2");
  expect(run_cli("adhm --file " + data + "/no_such_file.json --m 1").exit_code == 2,
         "missing file exits 2");
  expect(run_cli("walls").exit_code == 2, "no selector exits 2");
  expect(run_cli("walls --zeta0 1 --zeta1 nonsense").exit_code == 2, "bad rational exits 2");
  expect(run_cli("nonexistent-subcommand").exit_code == 2, "unknown subcommand exits 2");

  // adhm on a rep that fails the first wall test still exits 0 and reports
  RunResult nilp = run_cli("adhm --file " + data + "/zero_stable_rep.json --m 1 --format json");
  expect(nilp.exit_code == 0, "unstable rep still reports cleanly");
  {
    auto j = nlohmann::json::parse(nilp.out);
    expect(j["stability"]["cond1"] == true, "nilpotent witness passes the first condition");
    expect(j["stability"]["cond2"] == false, "nilpotent witness fails the second condition");
    expect(j["bn_index"] == 2, "nilpotent witness has jump index 2 at m=1");
  }

  // m = 0 partial check is labelled as such
  RunResult part = run_cli("adhm --file " + data + "/ocm1.json --m 0 --format json");
  expect(part.exit_code == 0, "m=0 check runs");
  {
    auto j = nlohmann::json::parse(part.out);
    expect(j["stability"]["partial"] == true, "m=0 stability is flagged partial");
    expect(j["class"]["r"] == 0, "curve representation has rank 0");
    expect(j["class"]["k"] == -1, "curve representation has k = -1");
  }

  if (failures == 0) {
    std::cout << "all cli golden checks passed\n";
    return 0;
  }
  std::cout << failures << " cli golden check(s) failed\n";
  return 1;
}
