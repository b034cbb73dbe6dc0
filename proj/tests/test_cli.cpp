#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "waring/ring.hpp"
#include "waring/ring_io.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(WARING_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, got);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::filesystem::path tmp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("waring subcommand") {
  auto r = run("waring --ring zmod:27 --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("w: 4") != std::string::npos);
  CHECK(r.out.find("s: 1") != std::string::npos);

  auto frob = run("waring --ring trunc:3:3 --n 6");
  CHECK(frob.out.find("w: 2") != std::string::npos);

  auto f7 = run("waring --ring gf:7:1 --n 3");
  CHECK(f7.out.find("w: 3") != std::string::npos);
}

TEST_CASE("padic subcommand") {
  auto zp = run("padic --p 2 --n 4");
  CHECK(zp.exit_code == 0);
  CHECK(zp.out.find("w: 15") != std::string::npos);
  auto qp = run("padic --p 2 --n 4 --field");
  CHECK(qp.out.find("w: 15") != std::string::npos);
  CHECK(qp.out.find("theorem:") != std::string::npos);
}

TEST_CASE("deterministic output") {
  const std::string invocation = "table --n 4 --pmax 80 --format csv --threads 4";
  auto a = run(invocation);
  auto b = run(invocation);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("p,w_Zp,w_Qp,w_Fp,s_Fp,theorem_tag\n", 0) == 0);
}

TEST_CASE("classified table groups primes") {
  auto r = run("table --n 3 --pmax 50 --format csv --classify");
  CHECK(r.exit_code == 0);
  // 3 and 7 stay alone; the tail classes collect everything else.
  CHECK(r.out.find("3,4,2,1,1") != std::string::npos);
  CHECK(r.out.find("7,3,2,3,1") != std::string::npos);
}

TEST_CASE("json lines round trip") {
  auto r = run("table --n 4 --pmax 30 --format json-lines");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.dump() == line);
    ++count;
  }
  CHECK(count == 10);

  auto w = run("waring --ring zmod:32 --n 4 --format json-lines");
  auto j = nlohmann::json::parse(w.out);
  CHECK(j["w"] == 15);
  CHECK(j.dump() + "\n" == w.out);
}

TEST_CASE("exit codes") {
  CHECK(run("padic --p 4 --n 3").exit_code == 2);
  CHECK(run("waring --ring zmod:999999999 --n 2").exit_code == 3);
  CHECK(run("quadratic --d 5 --p 2 --n 4").exit_code == 4);
  CHECK(run("series --field symbolic:inf:inf:0 --n 2").exit_code == 4);
  CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("ring-validate") {
  auto good_path = tmp_file("waring_good_spec.json");
  std::ofstream(good_path) << waring::serialize_ring_spec(
      waring::Ring::zmod(8).spec());
  CHECK(run("ring-validate " + good_path.string()).exit_code == 0);

  auto spec = waring::Ring::gf(3, 2).spec();
  spec.mult[0][1] = {1, 1};  // breaks commutativity
  auto bad_path = tmp_file("waring_bad_spec.json");
  std::ofstream(bad_path) << waring::serialize_ring_spec(spec);
  CHECK(run("ring-validate " + bad_path.string()).exit_code == 2);

  CHECK(run("ring-validate --ring quad:2:16:16").exit_code == 0);
  std::filesystem::remove(good_path);
  std::filesystem::remove(bad_path);
}

TEST_CASE("quadratic and bound subcommands") {
  auto q = run("quadratic --d 2 --p 2 --n 4");
  CHECK(q.exit_code == 0);
  CHECK(q.out.find("w_ring: 7") != std::string::npos);
  CHECK(q.out.find("w_field: 7") != std::string::npos);
  CHECK(q.out.find("s: 6") != std::string::npos);

  auto b = run("bound-q --n 6 --pmax 50");
  CHECK(b.out.find(">= 9 (witness p=3)") != std::string::npos);
}

TEST_CASE("series subcommand") {
  auto s = run("series --field gf:7:1 --n 3 --flavor formal");
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("w: 3") != std::string::npos);
}

TEST_CASE("advisory cache") {
  auto cache = tmp_file("waring_cache_test.jsonl");
  std::filesystem::remove(cache);
  auto first = run("waring --ring zmod:27 --n 3 --cache " + cache.string());
  CHECK(first.exit_code == 0);
  REQUIRE(std::filesystem::exists(cache));
  auto second = run("waring --ring zmod:27 --n 3 --cache " + cache.string());
  CHECK(second.out == first.out);

  auto verify = run("crosscheck --pmax 10 --nmax 4 --cache " + cache.string());
  CHECK(verify.out.find("cache: 1 verified, 0 stale") != std::string::npos);

  // Corrupt the cached value; crosscheck must notice.
  {
    std::ifstream in(cache);
    std::string line;
    std::getline(in, line);
    in.close();
    auto j = nlohmann::json::parse(line);
    j["w"] = 99;
    std::ofstream(cache, std::ios::trunc) << j.dump() << "\n";
  }
  auto stale = run("crosscheck --pmax 10 --nmax 4 --cache " + cache.string());
  CHECK(stale.out.find("stale cache entry: zmod:27|n=3") != std::string::npos);
  CHECK(stale.out.find("cache: 0 verified, 1 stale") != std::string::npos);
  std::filesystem::remove(cache);
}

TEST_CASE("crosscheck subcommand") {
  auto r = run("crosscheck --pmax 30 --nmax 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mismatches: 0") != std::string::npos);
}
