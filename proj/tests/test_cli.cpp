#include <algorithm>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "stargray/generator.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result cli(const std::string& args) {
  Result r;
  const std::string cmd = std::string(STARGRAY_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("generate n = 1") {
  auto r = cli("generate -n 1 --shift -1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("3\n2\n", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("generate matches the library") {
  auto r = cli("generate -n 4 --shift 2 --limit 28");
  CHECK(r.code == 0);
  stargray::Generator g(4, 2);
  std::string expect;
  for (int i = 0; i < 28; ++i) expect += std::to_string(g.next()->flip) + "\n";
  CHECK(r.out == expect);
  auto both = cli("generate -n 2 --format both --limit 1");
  CHECK(both.out == "1\t100011\n");
  auto combos = cli("generate -n 2 --format combinations --limit 2");
  CHECK(combos.out == "100011\n010011\n");
}

TEST_CASE("invalid arguments exit with 2") {
  CHECK(cli("generate -n 4 --shift 3").code == 2);
  CHECK(cli("generate -n 0").code == 2);
  CHECK(cli("generate -n 4 --start 0101").code == 2);
  CHECK(cli("generate -n 4 --format xml").code == 2);
  CHECK(cli("generate").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("verify -n 20 --suite hamilton").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("verify and analyze") {
  auto v = cli("verify -n 5 --suite all");
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
  auto j = cli("verify -n 4 --suite lemmas --json");
  CHECK(j.code == 0);
  CHECK(j.out.find("\"pass\"") != std::string::npos);
  auto e = cli("verify -n 7 --suite lemmas --explain-shift");
  CHECK(e.code == 0);
  auto a = cli("analyze spanning-tree -n 5 --dot");
  CHECK(a.code == 0);
  CHECK(std::count(a.out.begin(), a.out.end(), '>') == 5);
  auto c = cli("analyze cycles -n 4");
  CHECK(c.out.rfind("tree,lambda,length\n", 0) == 0);
  CHECK(cli("analyze spanning-tree -n 5").out == cli("analyze spanning-tree -n 5").out);
}
