// Drives the gatekeeper executable end to end.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + GATEKEEPER_CLI + " " + args + " 2>/dev/null";
  Run r{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gatekeeper_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

const char* kThree = "flight_id,arrival,departure\nf1,0,60\nf2,100,160\nf3,200,260\n";

}  // namespace

TEST_F(Cli, GenerateIsDeterministic) {
  const auto a = run("generate --flights 996 --seed 7");
  const auto b = run("generate --flights 996 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  std::size_t lines = 0;
  for (char c : a.out) lines += c == '\n';
  EXPECT_EQ(lines, 997u);
  const auto one = run("generate --flights 1");
  EXPECT_EQ(one.out.substr(0, one.out.find('\n')), "flight_id,arrival,departure");
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 2);
}

TEST_F(Cli, EnvironmentSetsFlagsButFlagsWin) {
  const auto env = run("generate", "GATEKEEPER_FLIGHTS=3 GATEKEEPER_SEED=9");
  EXPECT_EQ(std::count(env.out.begin(), env.out.end(), '\n'), 4);
  const auto flag = run("generate --flights 2", "GATEKEEPER_FLIGHTS=3");
  EXPECT_EQ(std::count(flag.out.begin(), flag.out.end(), '\n'), 3);
}

TEST_F(Cli, EvaluateExitCodes) {
  const auto sched = write("s.csv", kThree);
  const auto good = write("a.csv", "flight_id,gate\nf1,1\nf2,2\nf3,1\n");
  const auto r = run("evaluate " + sched + " " + good);
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["objective"].get<double>(), 1.0 / 170, 1e-12);
  EXPECT_EQ(j["verdict"], "good");

  const auto clash = write("c.csv", "flight_id,arrival,departure\nA,600,660\nB,650,710\n");
  const auto one_gate = write("c_a.csv", "flight_id,gate\nA,1\nB,1\n");
  const auto bad = run("evaluate " + clash + " " + one_gate + " --overlap soft");
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(nlohmann::json::parse(bad.out)["hard_conflicts"].size(), 1u);

  const auto unknown = write("u.csv", "flight_id,gate\nA,1\nZ,1\n");
  EXPECT_EQ(run("evaluate " + clash + " " + unknown).code, 1);
  EXPECT_EQ(run("evaluate " + path("missing.csv") + " " + good).code, 1);
}

TEST_F(Cli, SolveThenEvaluateReproducesObjective) {
  const auto sched = write("s.csv", kThree);
  for (const std::string solver : {"exact", "greedy", "local"}) {
    const auto out = path("assign_" + solver + ".csv");
    const auto summary = path("summary_" + solver + ".json");
    const auto r = run("solve " + sched + " --gates 2 --solver " + solver + " -o " + out +
                       " --summary " + summary);
    ASSERT_EQ(r.code, 0) << solver;
    const auto s = nlohmann::json::parse(slurp(summary));
    EXPECT_NEAR(s["objective"].get<double>(), 1.0 / 170, 1e-12);
    if (solver == "exact") {
      EXPECT_TRUE(s["proven_optimal"].get<bool>());
    }
    const auto e = run("evaluate " + sched + " " + out + " --gates 2");
    EXPECT_EQ(e.code, 0);
    EXPECT_NEAR(nlohmann::json::parse(e.out)["objective"].get<double>(),
                s["objective"].get<double>(), 1e-9);
  }
}

TEST_F(Cli, SolveInfeasibleAndInputErrors) {
  const auto clash = write("c.csv", "flight_id,arrival,departure\nA,600,660\nB,650,710\n");
  EXPECT_EQ(run("solve " + clash + " --gates 1").code, 3);
  EXPECT_EQ(run("solve " + clash + " --gates 2 -o " + path("x.csv")).code, 0);
  const auto broken = write("b.csv", "flight_id,arrival,departure\nA,11:00,10:00\n");
  EXPECT_EQ(run("solve " + broken + " --gates 2").code, 1);
  const auto enough = run("solve " + write("s.csv", kThree) + " --gates 3");
  EXPECT_EQ(enough.out, "flight_id,gate\nf1,1\nf2,2\nf3,3\n");
}

TEST_F(Cli, SweepTable) {
  const auto sched = write("s.csv", kThree);
  const auto r = run("sweep " + sched + " --gates 1-3 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);
  const auto single = run("sweep " + sched + " --gates 5");
  EXPECT_EQ(std::count(single.out.begin(), single.out.end(), '\n'), 2);
  EXPECT_EQ(run("sweep " + sched + " --gates 0").code, 1);
}

TEST_F(Cli, Plot) {
  const auto sched = write("s.csv", kThree);
  const auto assign = write("a.csv", "flight_id,gate\nf1,1\nf2,2\nf3,1\n");
  EXPECT_EQ(run("plot " + sched + " --scatter " + path("only.svg")).code, 0);
  EXPECT_TRUE(fs::exists(path("only.svg")));
  EXPECT_EQ(run("plot " + sched + " --assignment " + assign + " --scatter " + path("sc.svg") +
                " --gantt " + path("g.svg"))
                .code,
            0);
  EXPECT_NE(slurp(path("g.svg")).find("class=\"bar\""), std::string::npos);
  EXPECT_EQ(run("plot " + path("nope.csv") + " --scatter " + path("x.svg")).code, 1);
}
