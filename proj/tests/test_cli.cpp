#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " KOHNERT_CLI " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t n; (n = std::fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(KOHNERT_DATA_DIR) + "/" + name; }

bool has(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("classify") {
  const Result r = run("classify " + data("not_bounded.kd"));
  CHECK(r.code == 0);
  CHECK(has(r.out, "northeast: yes"));
  CHECK(has(r.out, "bounded: NO, witness (2,1),(2,2),(3,2)"));

  const Result lock = run("classify --input " + data("lock_32011103.kd"));
  CHECK(lock.code == 0);
  CHECK(has(lock.out, "lock: yes"));
  CHECK(has(lock.out, "ranked: yes"));
  CHECK(has(lock.out, "bounded: yes"));

  const Result empty = run("classify " + data("empty.kd"));
  CHECK(empty.code == 0);
  CHECK(has(empty.out, "cells: 0"));
  CHECK(has(empty.out, "multiplicity-free: yes"));

  const Result json = run("classify --format json " + data("not_mmf.kd"));
  CHECK(json.code == 0);
  const auto j = nlohmann::json::parse(json.out);
  CHECK(j["multiplicity_free"]["holds"] == false);
  CHECK(j["multiplicity_free"]["witness"]["kind"] == "mmf");
}

TEST_CASE("classify exit codes") {
  const auto se = temp_file("kohnert_cli_se.kd", "2 1\n1 2\n");
  CHECK(run("classify " + se.string()).code == 0);
  CHECK(run("classify --require-ne " + se.string()).code == 3);
  const auto bad = temp_file("kohnert_cli_bad.kd", "1 1\n1 1\n");
  CHECK(run("classify " + bad.string()).code == 2);
  CHECK(run("classify /nonexistent/file.kd").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("poset") {
  const Result stats = run("poset --stats " + data("lock_022.kd"));
  CHECK(stats.code == 0);
  CHECK(stats.out == "nodes=6 covers=6 minimal=1\n");
  CHECK(has(run("poset --stats " + data("not_bounded.kd")).out, "minimal=2"));
  CHECK(run("poset --stats --elementary " + data("not_bounded.kd")).out == "nodes=5 covers=4 minimal=2\n");

  const Result dot = run("poset " + data("single.kd"));
  CHECK(dot.code == 0);
  CHECK(has(dot.out, "digraph"));
  CHECK_FALSE(has(dot.out, "->"));
  CHECK(run("poset " + data("lock_022.kd")).out == run("poset " + data("lock_022.kd")).out);

  const Result json = run("poset --format json " + data("lock_022.kd"));
  CHECK(nlohmann::json::parse(json.out)["nodes"].size() == 6);

  CHECK(run("poset --max-nodes 5 " + data("lock_022.kd")).code == 4);
  CHECK(run("poset " + data("lock_022.kd"), "KOHNERT_MAX_NODES=3").code == 4);
  CHECK(run("poset --max-nodes 6 " + data("lock_022.kd"), "KOHNERT_MAX_NODES=3").code == 0);
}

TEST_CASE("poset output file") {
  const auto out = std::filesystem::temp_directory_path() / "kohnert_cli_poset.dot";
  std::filesystem::remove(out);
  CHECK(run("poset --out " + out.string() + " " + data("lock_022.kd")).code == 0);
  std::ifstream in(out);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  CHECK(has(text, "rankdir=TB"));
}

TEST_CASE("poly") {
  const Result lock = run("poly " + data("lock_022.kd"));
  CHECK(lock.code == 0);
  CHECK(has(lock.out, "x1^2*x2^2 + "));
  CHECK(has(lock.out, "multiplicity-free: yes"));
  const Result bad = run("poly " + data("not_mmf.kd"));
  CHECK(has(bad.out, "multiplicity-free: NO (witness monomial x1*x2, coefficient 2)"));
  CHECK(run("poly " + data("single.kd")).out.rfind("x1\n", 0) == 0);
}

TEST_CASE("verify") {
  const Result r = run("verify --rows 3 --cols 3 --jobs 2");
  CHECK(r.code == 0);
  CHECK(has(r.out, "OK: 0 mismatches"));
  const Result tiny = run("verify --rows 1 --cols 1 --json");
  CHECK(tiny.code == 0);
  CHECK(nlohmann::json::parse(tiny.out)["diagrams_checked"] == 2);
  const Result chains = run("verify --rows 3 --cols 3 --properties ranked --chains 50 --seed 3");
  CHECK(chains.code == 0);
  CHECK(has(chains.out, "shuffle: 50 chains (seed 3)"));
  CHECK(run("verify --properties shape").code == 2);
  CHECK(run("verify --rows 6 --cols 5").code == 4);
}

TEST_CASE("lock") {
  const Result lock_out = run("lock --alpha 1,3,1,0,2");
  CHECK(lock_out.code == 0);
  CHECK(has(lock_out.out, ".OO\n...\n..O\nOOO\n..O\n"));
  const Result rb = run("lock --alpha 3,2,0,1,1,1,0,3");
  CHECK(has(rb.out, "ranked: yes"));
  CHECK(has(rb.out, "bounded: yes"));
  CHECK(has(rb.out, "ranked and bounded: yes"));
  const Result mmf = run("lock --alpha 0,0,2,1 --check mmf");
  CHECK(mmf.code == 0);
  CHECK(has(mmf.out, "multiplicity-free: NO"));
  CHECK_FALSE(has(mmf.out, "ranked"));
  CHECK(run("lock --alpha 1,x").code == 2);
  CHECK(run("lock").code == 2);
}
