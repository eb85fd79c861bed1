#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DFORGE_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("dforge_cli_" + name)).string();
}

}  // namespace

TEST(Cli, SearchPrime) {
  EXPECT_EQ(run("search-prime --q 3 --d 2 --const 1").out, "T^2+1\n");
  EXPECT_EQ(run("search-prime --q 3 --d 1 --const 1").out, "T+1\n");
  const auto r = run("search-prime --q 3 --d 2 --zeta 2 --sign -1 --format json");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("character"), -1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("search-prime --q 4 --d 2 --const 1").status, 2);
  EXPECT_EQ(run("search-prime --q 3 --d 2").status, 2);
  EXPECT_EQ(run("phi --flag '1,T+'").status, 2);
  EXPECT_EQ(run("search-prime --q 3 --d 2 --const 1 --format yaml").status, 2);
}

TEST(Cli, DrinfeldCommands) {
  EXPECT_EQ(run("phi --flag 1,1").out, "phi_T = tau^2 + (T+1)*tau + (T)\n");
  EXPECT_EQ(run("atkin-lehner --flag 1,T,2,1").status, 0);
  EXPECT_EQ(run("atkin-lehner --flag 1,T,2").status, 2);
  const auto m = run("motive-det --flag 1,1 --format json");
  ASSERT_EQ(m.status, 0);
  const auto j = nlohmann::json::parse(m.out);
  EXPECT_EQ(j.at("det"), "2*Y");
  EXPECT_EQ(j.at("zeta"), 2);
}

TEST(Cli, CoverAndGalois) {
  const std::string file = temp_path("cover.json");
  const auto c = run("cover --q 3 --N 'T^2+1' --out " + file);
  ASSERT_EQ(c.status, 0);
  EXPECT_EQ(c.out,
            "T^2*x^2*y^10 - T^2*N*x*y^9 - T*N^2*x^2*y^8 + T*N^3*y^8 + N^3*x^2*y^6 - N^4*y^6 + N^4*x^2*y^4 - "
            "N^5*y^4 + T*N^5*x^2*y^2 - T*N^6*y^2 + T^2*N^5*x*y - T^2*N^6\n");
  std::ifstream is(file);
  const auto j = nlohmann::json::parse(is);
  EXPECT_EQ(j.at("text").get<std::string>() + "\n", c.out);
  EXPECT_TRUE(j.at("checks").at("descent").get<bool>());

  EXPECT_EQ(run("cover --q 3 --N 'T^2+T+2'").status, 2);
  EXPECT_EQ(run("cover --q 3 --N 'T^2+2'").status, 2);

  const auto g1 = run("galois " + file + " --trials 200 --seed 5 --format json");
  const auto g2 = run("galois " + file + " --trials 200 --seed 5 --format json");
  EXPECT_EQ(g1.out, g2.out);
  const auto rep = nlohmann::json::parse(g1.out);
  for (const char* k : {"observed", "oracle", "containment", "coverage", "distance", "discarded"})
    EXPECT_TRUE(rep.contains(k)) << k;
  const bool pass = rep.at("containment").get<bool>() && rep.at("coverage").get<bool>();
  EXPECT_EQ(g1.status, pass ? 0 : 1);
  EXPECT_EQ(run("galois " + file + " --trials 0").status, 2);
  EXPECT_EQ(run("galois /nonexistent.json").status, 2);
  std::filesystem::remove(file);
}
