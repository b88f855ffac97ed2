#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "recten/cli.hpp"
#include "recten/io.hpp"

namespace recten {
namespace {

using testing::data_path;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::FILE* f = std::fopen(path.c_str(), "wb");
  std::fputs(content.c_str(), f);
  std::fclose(f);
  return path;
}

TEST(Cli, BoundsExample) {
  const CliResult r = run({"bounds", data_path("a_ex.json"), "--s", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("L=6.6533 U=33.2547 Theta=8.1240 Phi=31.8692"), std::string::npos) << r.out;
}

TEST(Cli, LambdaMaxExample) {
  const CliResult r = run({"lambda-max", data_path("a_ex.json")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("lambda=18.0755"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("status=converged"), std::string::npos) << r.out;
}

TEST(Cli, ZeroTensorInclusion) {
  const auto path = temp_file("recten_zero.json", R"({"p":2,"q":1,"m":3,"n":3,"entries":[]})");
  const CliResult r = run({"inclusion", path.string(), "--method", "psi", "--s", "1", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"unionRadius\": 0.0"), std::string::npos) << r.out;
}

TEST(Cli, InfoVerifySweepPlot) {
  const std::string a = data_path("a_ex.json");
  CliResult r = run({"info", a});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("nnz=10"), std::string::npos);
  EXPECT_NE(r.out.find("R3=35.0000"), std::string::npos);

  r = run({"verify", a, "--s", "3", "--values", data_path("a_ex_h_singular_values.txt")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("all inside: yes"), std::string::npos);

  r = run({"sweep-s", a, "--objective", "min-phi", "--s", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("partitions=3 best S={1,2} Sbar={3} value=31.8692"), std::string::npos) << r.out;

  r = run({"plot", a, "--s", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.rfind("<?xml", 0), 0u);
}

TEST(Cli, OutFileAndThreads) {
  const auto path = std::filesystem::temp_directory_path() / "recten_cli_out.txt";
  std::filesystem::remove(path);
  const CliResult r = run({"--threads", "2", "bounds", data_path("a_ex.json"), "--s", "3", "--out", path.string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(read_file(path).find("Phi=31.8692"), std::string::npos);
}

TEST(Cli, RandomRoundTrips) {
  const CliResult r = run({"random", "--p", "1", "--q", "2", "--m", "3", "--n", "2", "--seed", "5"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const RectangularTensor t = parse_tensor(r.out);
  EXPECT_EQ(t.q(), 2);
  EXPECT_EQ(run({"random", "--p", "1", "--q", "2", "--m", "3", "--n", "2", "--seed", "5"}).out, r.out);
}

TEST(Cli, ExitCodes) {
  const std::string a = data_path("a_ex.json");
  CliResult r = run({"bounds", a});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_EQ(r.err.rfind("error: category=validation kind=subset\n", 0), 0u) << r.err;

  r = run({"bounds", a, "--s", "1,2,3"});
  EXPECT_EQ(r.code, kExitValidation);

  r = run({"frobnicate"});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("kind=usage"), std::string::npos);

  r = run({"info", "/nonexistent/tensor.json"});
  EXPECT_EQ(r.code, kExitValidation);

  r = run({"lambda-max", a, "--oracle-tol", "0"});
  EXPECT_EQ(r.code, kExitValidation);

  const auto huge = temp_file("recten_huge.json",
                              R"({"p":1,"q":1,"m":2,"n":2,"entries":[{"i":[1],"j":[1],"v":1.7e308},{"i":[1],"j":[2],"v":1.7e308}]})");
  r = run({"lambda-max", huge.string()});
  EXPECT_EQ(r.code, kExitNumeric);
  EXPECT_EQ(r.err.rfind("error: category=numeric", 0), 0u) << r.err;

  r = run({"sweep-s", a, "--max-n", "2"});
  EXPECT_EQ(r.code, kExitCapacity);
  EXPECT_EQ(r.err.rfind("error: category=capacity", 0), 0u) << r.err;

  const auto signed_tensor = temp_file("recten_signed.json", R"({"p":1,"q":1,"m":2,"n":2,"entries":[{"i":[1],"j":[1],"v":-1}]})");
  r = run({"bounds", signed_tensor.string(), "--s", "1"});
  EXPECT_EQ(r.code, kExitValidation);
}

}  // namespace
}  // namespace recten
