#include "commands.hpp"
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pascal");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = pascal::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "pascal-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("ball table") {
  const auto r = cli({"ball", "--preset", "z2", "--radius", "2"});
  REQUIRE(r.code == 0);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 14);
  CHECK(rows[0] == "element\tlength\tcount");
  CHECK(std::find(rows.begin(), rows.end(), "(1,1)\t2\t2") != rows.end());

  const auto zero = cli({"ball", "--preset", "z2", "--radius", "0"});
  CHECK(lines(zero.out) == std::vector<std::string>{"element\tlength\tcount", "(0,0)\t0\t1"});

  const auto zts = lines(cli({"ball", "--preset", "z-t-s10", "--radius", "6"}).out);
  CHECK(std::find(zts.begin(), zts.end(), "(15)\t6\t6") != zts.end());
}

TEST_CASE("output is deterministic") {
  const auto a = cli({"ball", "--preset", "z2-hexagon", "--radius", "5", "--format", "json"});
  const auto b = cli({"ball", "--preset", "z2-hexagon", "--radius", "5", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto m1 = cli({"matrices", "--preset", "dinf"});
  const auto m2 = cli({"matrices", "--preset", "dinf"});
  CHECK(m1.out == m2.out);
}

TEST_CASE("triangle") {
  const auto r = cli({"triangle", "--preset", "z2", "--size", "4"});
  REQUIRE(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"1\t1\t1\t1", "1\t2\t3\t4", "1\t3\t6\t10", "1\t4\t10\t20"});
  CHECK(cli({"triangle", "--preset", "z2", "--size", "1"}).out == "1\n");
  CHECK(cli({"triangle", "--preset", "dinf", "--size", "3"}).code == pascal::cli::kUsage);
}

TEST_CASE("hull, tau and compatible") {
  const auto hull = cli({"hull", "--preset", "z-t-s10"});
  REQUIRE(hull.code == 0);
  CHECK(hull.out.find("\"vertices\"") != std::string::npos);
  CHECK(cli({"tau", "--preset", "z-t-s10", "--word", "t"}).out == "1/10\n");
  CHECK(cli({"tau", "--preset", "z2", "--element", "[1,1]"}).out == "2\n");
  const auto comp = cli({"compatible", "--preset", "z2", "--empirical", "5", "12"});
  CHECK(comp.code == 0);
  CHECK(cli({"hull", "--preset", "f2-basis"}).code == pascal::cli::kUsage);
}

TEST_CASE("automaton, matrices and eval") {
  const auto bundle = scratch("f2e.json").string();
  const auto m = cli({"matrices", "--preset", "f2-extended", "-o", bundle});
  REQUIRE(m.code == 0);
  const auto e = cli({"eval", "--bundle", bundle, "--word", "a b a b a b"});
  CHECK(e.code == 0);
  CHECK(e.out == "8\n");
  CHECK(cli({"eval", "--preset", "z-single", "--word", "t t t"}).out == "1\n");
  CHECK(cli({"eval", "--preset", "z-single", "--word", "t t^-1"}).code == pascal::cli::kUsage);

  const auto z2 = cli({"matrices", "--preset", "z2", "--diff-cap", "8"});
  CHECK(z2.code == pascal::cli::kConstruction);
  CHECK(z2.err.rfind("error:difference-overflow", 0) == 0);

  const auto acc = cli({"automaton", "--preset", "z-t-s10"});
  CHECK(acc.code == 0);
  CHECK(acc.out.find("pascal-acceptor/1") != std::string::npos);
  const auto tight = cli({"automaton", "--preset", "z-t-s10", "--train-radius", "3"});
  CHECK(tight.code == pascal::cli::kResource);
  CHECK(tight.err.rfind("error:insufficient-radius", 0) == 0);
}

TEST_CASE("verify") {
  const auto d = cli({"verify", "--preset", "dinf", "--radius", "8"});
  CHECK(d.code == 0);
  CHECK(d.out.find("p ≡ 1 verified") != std::string::npos);
  const auto fault = cli({"verify", "--preset", "z-x-z", "--radius", "6", "--inject-fault", "binomial"});
  CHECK(fault.code == pascal::cli::kVerification);
  CHECK(fault.err.rfind("error:verification", 0) == 0);
  CHECK(fault.err.find("expected=") != std::string::npos);
  CHECK(cli({"verify", "--preset", "z-t-s10", "--radius", "8", "--inject-fault", "matrix"}).code ==
        pascal::cli::kVerification);
}

TEST_CASE("growth") {
  CHECK(cli({"growth", "--preset", "dinf", "--max-length", "4"}).out == "linear-bounded; counts 1,2,2,2,2\n");
  CHECK(cli({"growth", "--preset", "f2-basis", "--max-length", "3"}).out == "exponential; counts 1,4,12,36\n");
  CHECK(cli({"growth", "--preset", "z-single", "--max-length", "2"}).out == "linear-bounded; counts 1,2,2\n");
}

TEST_CASE("error tokens and exit codes") {
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{\"group\": ";
  const auto p = cli({"ball", bad.string(), "--radius", "1"});
  CHECK(p.code == pascal::cli::kParse);
  CHECK(p.err.rfind("error:parse", 0) == 0);

  const auto big = cli({"ball", "--preset", "f2-basis", "--radius", "9", "--max-elements", "100"});
  CHECK(big.code == pascal::cli::kResource);
  CHECK(big.err.rfind("error:resource", 0) == 0);

  CHECK(cli({"ball"}).code == pascal::cli::kUsage);
  CHECK(cli({"nonsense"}).code == pascal::cli::kUsage);
  CHECK(cli({"presets"}).out.find("z-t-s10") != std::string::npos);
}
