#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifndef ARITYGAP_CLI_PATH
#error "ARITYGAP_CLI_PATH must point at the command-line binary"
#endif

namespace {

int failures = 0;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RunResult run(const std::string& args) {
  const std::string out_path = "/tmp/aritygap_cli_out.txt";
  const std::string err_path = "/tmp/aritygap_cli_err.txt";
  const std::string command =
      std::string(ARITYGAP_CLI_PATH) + " " + args + " > " + out_path + " 2> " + err_path;
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_path);
  result.err = slurp(err_path);
  return result;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

void expect(bool condition, const std::string& label) {
  if (!condition) {
    std::cerr << "FAILED: " << label << "\n";
    ++failures;
  }
}

const std::string maj3_table =
    "aritygap-table v1\n"
    "domain: 0 1\n"
    "codomain: 0 1\n"
    "arity: 3\n"
    "table:\n"
    "0 0 0 -> 0\n"
    "0 0 1 -> 0\n"
    "0 1 0 -> 0\n"
    "0 1 1 -> 1\n"
    "1 0 0 -> 0\n"
    "1 0 1 -> 1\n"
    "1 1 0 -> 1\n"
    "1 1 1 -> 1\n";

const std::string and2_set_function =
    "aritygap-table v1\n"
    "domain: 0 1\n"
    "codomain: rational\n"
    "arity: 2\n"
    "kind: setfunction\n"
    "table:\n"
    "0 0 -> 0\n"
    "0 1 -> 0\n"
    "1 0 -> 0\n"
    "1 1 -> 1\n";

void test_analyze() {
  write_file("/tmp/aritygap_cli_maj3.tbl", maj3_table);
  const auto r = run("analyze /tmp/aritygap_cli_maj3.tbl");
  expect(r.exit_code == 0, "analyze exits 0");
  expect(contains(r.out, "gap 2"), "analyze reports the gap");
  expect(contains(r.out, "essl 1"), "analyze reports the identification bound");
  expect(contains(r.out, "oracle gap 2"), "analyze cross-checks the oracle");

  write_file("/tmp/aritygap_cli_proj.tbl",
             "aritygap-table v1\n"
             "domain: 0 1\n"
             "codomain: 0 1\n"
             "arity: 2\n"
             "table:\n"
             "0 0 -> 0\n"
             "0 1 -> 1\n"
             "1 0 -> 0\n"
             "1 1 -> 1\n");
  const auto undefined = run("analyze /tmp/aritygap_cli_proj.tbl");
  expect(undefined.exit_code == 0, "analyze exits 0 when the gap is undefined");
  expect(contains(undefined.out, "undefined"), "analyze says the gap is undefined");
}

void test_classify() {
  write_file("/tmp/aritygap_cli_maj3.tbl", maj3_table);
  const auto r = run("classify /tmp/aritygap_cli_maj3.tbl --boolean");
  expect(r.exit_code == 0, "classify exits 0");
  expect(contains(r.out, "gap 2"), "classify finds gap two");
  expect(contains(r.out, "majority"), "classify names the template");
}

void test_transforms() {
  write_file("/tmp/aritygap_cli_and2.tbl", and2_set_function);
  const auto m = run("mobius /tmp/aritygap_cli_and2.tbl");
  expect(m.exit_code == 0, "mobius exits 0");
  expect(contains(m.out, "kind: mobius"), "mobius emits coefficient tables");
  expect(contains(m.out, "1 1 -> 1"), "conjunction weight sits on the full set");

  const auto owen = run("eval-owen /tmp/aritygap_cli_and2.tbl 1/3 2/3");
  expect(owen.exit_code == 0, "eval-owen exits 0");
  expect(owen.out == "2/9\n", "eval-owen multiplies");

  const auto lov = run("eval-lovasz /tmp/aritygap_cli_and2.tbl 1/3 2/3");
  expect(lov.exit_code == 0, "eval-lovasz exits 0");
  expect(lov.out == "1/3\n", "eval-lovasz takes the minimum");
}

void test_sweep() {
  const auto r = run("sweep --check boolean --domain 2 --codomain 2 --arity 2 --exhaustive");
  expect(r.exit_code == 0, "clean sweep exits 0");
  expect(contains(r.out, "aritygap-report v1"), "sweep prints the report block");
  expect(contains(r.out, "generated=16"), "sweep counts the binary cube");
  expect(contains(r.err, "clean"), "sweep summarizes to stderr");

  const auto seeded_a = run("sweep --check characterization --domain 2 --codomain 3 --arity 3 "
                            "--samples 200 --seed 77 --jobs 1");
  const auto seeded_b = run("sweep --check characterization --domain 2 --codomain 3 --arity 3 "
                            "--samples 200 --seed 77 --jobs 3");
  expect(seeded_a.exit_code == 0 && seeded_b.exit_code == 0, "seeded sweeps exit 0");
  expect(seeded_a.out == seeded_b.out, "job count never changes the block");
}

void test_errors() {
  const auto unknown = run("sweep --check gibberish --exhaustive");
  expect(unknown.exit_code == 2, "unknown check exits 2");

  const auto conflict = run("sweep --check boolean --exhaustive --samples 5 --seed 1");
  expect(conflict.exit_code == 2, "conflicting modes exit 2");

  write_file("/tmp/aritygap_cli_broken.tbl", "aritygap-table v1\nnope\n");
  const auto broken = run("analyze /tmp/aritygap_cli_broken.tbl");
  expect(broken.exit_code == 2, "parse errors exit 2");
  expect(contains(broken.err, "line 2"), "parse errors carry the line");

  const auto missing = run("analyze /tmp/aritygap_cli_does_not_exist.tbl");
  expect(missing.exit_code == 2, "missing files exit 2");

  const auto no_sub = run("");
  expect(no_sub.exit_code == 2, "a subcommand is required");
}

void test_formats() {
  const auto r = run("formats");
  expect(r.exit_code == 0, "formats exits 0");
  expect(contains(r.out, "aritygap-table v1"), "formats documents tables");
  expect(contains(r.out, "aritygap-poset v1"), "formats documents posets");
  expect(contains(r.out, "splitmix64"), "formats documents the sampling scheme");
}

}  // namespace

int main() {
  test_analyze();
  test_classify();
  test_transforms();
  test_sweep();
  test_errors();
  test_formats();
  if (failures == 0) {
    std::cout << "command-line checks passed\n";
    return 0;
  }
  std::cerr << failures << " command-line check(s) failed\n";
  return 1;
}
