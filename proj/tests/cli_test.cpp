#include <doctest.h>

#include <cli.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using fejerlab::lab::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("fejerlab_cli_test_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("unknown flags and missing subcommands are configuration errors") {
  const auto a = run({"blowup", "--no-such-flag"});
  CHECK(a.code == 1);
  CHECK_FALSE(a.err.empty());
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"blowup", "--ppi", "notanumber"}).code == 1);
}

TEST_CASE("help exits cleanly") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("blowup") != std::string::npos);
}

TEST_CASE("blowup writes its table") {
  const auto path = temp_path("growth.csv");
  const auto r = run({"blowup", "--m", "1,4,9,16", "--grid-M", "16", "--ppi", "8", "--out", path});
  CHECK(r.code == 0);
  const auto csv = slurp(path);
  CHECK(csv.rfind("m,n_m,delta_n,bound,pointwise_min,norm_linfw,norm_l1w\n", 0) == 0);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == 5);
  CHECK(r.out.find("VIOLATED") == std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("unresolved grids are configuration errors") {
  const auto r = run({"blowup", "--m", "25", "--ppi", "2"});
  CHECK(r.code == 1);
  CHECK(r.err.find("configuration error") != std::string::npos);
}

TEST_CASE("duality sweep reports its gap") {
  const auto r = run({"duality", "--trials", "10", "--seed", "7", "--fejer-max-n", "8", "--grid-M", "3"});
  CHECK(r.code == 0);
  CHECK(r.err.find("max relative gap") != std::string::npos);
  CHECK(r.out.rfind("family,index,M,norm_l1w,norm_linfw,relative_gap\n", 0) == 0);
}

TEST_CASE("contract violations exit with 2 and name the invariant") {
  const auto r = run({"fejer-converge", "--limit", "1e-9"});
  CHECK(r.code == 2);
  CHECK(r.err.find("VIOLATED") != std::string::npos);
}

TEST_CASE("identical configuration gives identical output") {
  const std::vector<std::string> args{"duality", "--trials", "12", "--seed", "99", "--fejer-max-n", "4",
                                      "--grid-M", "2"};
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto c = run({"duality", "--trials", "12", "--seed", "100", "--fejer-max-n", "4", "--grid-M", "2"});
  CHECK(c.out != a.out);
}

TEST_CASE("config files fill unset options and flags win") {
  const auto cfg = temp_path("blowup.ini");
  {
    std::ofstream f(cfg);
    f << "# blow-up settings\nm = 1,4\ngrid-M = 9\n";
  }
  const auto a = run({"blowup", "--config", cfg});
  CHECK(a.code == 0);
  CHECK(a.out.rfind("m,n_m", 0) == 0);
  CHECK(a.out.find("\n4,") != std::string::npos);
  CHECK(a.out.find("\n9,") == std::string::npos);

  const auto b = run({"blowup", "--config", cfg, "--m", "1"});
  CHECK(b.code == 0);
  CHECK(b.out.find("\n4,") == std::string::npos);

  {
    std::ofstream f(cfg);
    f << "bogus = 3\n";
  }
  CHECK(run({"blowup", "--config", cfg}).code == 1);
  CHECK(run({"blowup", "--config", temp_path("missing.ini")}).code == 1);
  std::remove(cfg.c_str());
}

TEST_CASE("other subcommands run") {
  CHECK(run({"maximal", "--M", "4,16", "--growth", "1"}).code == 0);
  CHECK(run({"taylor-fourier", "--inputs", "3"}).code == 0);
  CHECK(run({"product", "--pairs", "5"}).code == 0);
  const auto d = run({"density", "--functions", "t3", "--degrees", "2,3,4", "--grid-M", "3"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("function,degree,error,fejer_error,converged\n", 0) == 0);
}

TEST_CASE("witness writes a sidecar summary") {
  const auto path = temp_path("witness.csv");
  const auto r = run({"witness", "--grid-M", "16", "--stages", "2", "--out", path});
  CHECK(r.code == 0);
  CHECK(slurp(path).rfind("stage,n,cell,theta,coefficient,operator_norm,error\n", 0) == 0);
  CHECK(slurp(path + ".txt").find("stages 2") != std::string::npos);
  std::remove(path.c_str());
  std::remove((path + ".txt").c_str());
}

}  // TEST_SUITE
