#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "landau/cli.hpp"
#include "landau/io.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = landau::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(f);
  return v;
}

}  // namespace

TEST(Io, NumberFormat) {
  using landau::io::format_number;
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(format_number(29.0), "29");
  EXPECT_EQ(format_number(-1.5e-300), "-1.5000000000000001e-300");
  EXPECT_EQ(std::stod(format_number(M_PI)), M_PI);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"zeros", "--emax", "600"}).code, 2);
  EXPECT_EQ(run({"zeros", "--emax", "-1"}).code, 2);
  EXPECT_EQ(run({"count", "--e", "10", "--L", "0.5"}).code, 2);
  EXPECT_EQ(run({"zeros", "--emax", "10", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"wavefunction", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"classical", "--mode", "action", "--e", "1e9"}).code, 2);
  const auto bad = run({"spectrum", "--emax", "1e12"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_EQ(lines(bad.err).size(), 1u);
}

TEST(Cli, Zeros) {
  const auto none = run({"zeros", "--emax", "10"});
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(none.out, "index,E_zero\n");
  const auto csv = run({"zeros", "--emax", "100"});
  const auto rows = lines(csv.out);
  ASSERT_EQ(rows.size(), 30u);
  const auto js = run({"zeros", "--emax", "100", "--format", "json"});
  ASSERT_EQ(js.code, 0);
  const auto j = nlohmann::json::parse(js.out);
  ASSERT_EQ(j["zeros"].size(), 29u);
  for (std::size_t i = 0; i < 29; ++i) {
    const auto f = split(rows[i + 1]);
    EXPECT_EQ(std::stoi(f[0]), static_cast<int>(i + 1));
    EXPECT_EQ(std::stod(f[1]), j["zeros"][i].get<double>());
  }
}

TEST(Cli, Count) {
  const auto zero = run({"count", "--e", "0"});
  ASSERT_EQ(zero.code, 0);
  EXPECT_EQ(lines(zero.out)[0], "E,theta,n_smooth,s_fluct,n_exact,n_sc");
  EXPECT_EQ(lines(zero.out)[1], "0,0,1,NA,0,0");
  const auto grid = run({"count", "--range", "1:100:1"});
  ASSERT_EQ(grid.code, 0);
  const auto rows = lines(grid.out);
  ASSERT_EQ(rows.size(), 101u);
  long prev = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = split(rows[i]);
    const long n = std::stol(f[4]);
    EXPECT_GE(n, prev);
    EXPECT_EQ(n, std::lround(std::stod(f[2]) + std::stod(f[3])));
    prev = n;
  }
  EXPECT_EQ(prev, 29);
}

TEST(Cli, Spectrum) {
  const auto even = run({"spectrum", "--emax", "20", "--parity", "even"});
  const auto odd = run({"spectrum", "--emax", "20", "--parity", "odd"});
  ASSERT_EQ(even.code, 0);
  ASSERT_EQ(odd.code, 0);
  for (const auto* o : {&even, &odd}) {
    const auto rows = lines(o->out);
    ASSERT_GT(rows.size(), 2u);
    double prev = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto f = split(rows[i]);
      EXPECT_GT(std::stod(f[2]), prev);
      EXPECT_LT(std::stod(f[3]), 1e-9);
      prev = std::stod(f[2]);
    }
  }
  EXPECT_NE(even.out, odd.out);
  EXPECT_EQ(lines(run({"spectrum", "--emax", "0"}).out).size(), 1u);
}

TEST(Cli, WavefunctionCsvAndBinary) {
  const auto csv = run({"wavefunction", "--e", "10", "--n", "20"});
  ASSERT_EQ(csv.code, 0);
  const auto rows = lines(csv.out);
  ASSERT_EQ(rows.size(), 401u);
  EXPECT_EQ(rows[0], "x,y,re,im,abs");
  for (std::size_t k = 1; k <= 400; ++k) {
    const auto a = split(rows[k]), b = split(rows[401 - k]);
    EXPECT_EQ(std::stod(a[0]), -std::stod(b[0]));
    EXPECT_NEAR(std::stod(a[4]), std::stod(b[4]), 1e-10 * std::stod(a[4]));
  }
  const auto bin = run({"wavefunction", "--e", "10", "--n", "20", "--format", "json"});
  ASSERT_EQ(bin.code, 0);
  const auto nl = bin.out.find('\n');
  const auto header = nlohmann::json::parse(bin.out.substr(0, nl));
  EXPECT_EQ(header["n_x"], 20);
  ASSERT_EQ(bin.out.size() - nl - 1, 5u * 400u * sizeof(double));
  double first_abs;
  std::memcpy(&first_abs, bin.out.data() + nl + 1 + 4 * 400 * sizeof(double), sizeof(double));
  EXPECT_EQ(first_abs, std::stod(split(rows[1])[4]));
}

TEST(Cli, FigureGridAndRidge) {
  const auto meta_path = std::filesystem::temp_directory_path() / "landau_cli_meta_test.json";
  const auto odd = run({"wavefunction", "--e", "10", "--parity", "odd", "--n", "201"});
  ASSERT_EQ(odd.code, 0);
  const auto centre = split(lines(odd.out)[1 + 100 * 201 + 100]);
  EXPECT_EQ(std::stod(centre[0]), 0.0);
  EXPECT_EQ(std::stod(centre[4]), 0.0);
  const auto even = run({"wavefunction", "--e", "10", "--parity", "even", "--n", "200", "--meta", meta_path.string()});
  ASSERT_EQ(even.code, 0);
  EXPECT_EQ(lines(even.out).size(), 40001u);
  std::ifstream in(meta_path);
  const auto meta = nlohmann::json::parse(in);
  EXPECT_TRUE(meta["ridge"]["within_one_cell"].get<bool>());
  EXPECT_EQ(meta["ridge"]["hyperbola_c"].get<double>(), 10.0);
  std::filesystem::remove(meta_path);
}

TEST(Cli, Classical) {
  const auto tr = run({"classical", "--mode", "trajectory", "--lambda", "0", "--x0", "1", "--t-final", "20"});
  ASSERT_EQ(tr.code, 0);
  const auto rows = lines(tr.out);
  const double e0 = std::stod(split(rows[1])[5]);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_NEAR(std::stod(split(rows[i])[5]), e0, 1e-9);
  const auto coh = run({"classical", "--mode", "coherent", "--z", "0.5", "--gamma", "50"});
  ASSERT_EQ(coh.code, 0);
  const auto crow = lines(coh.out);
  for (std::size_t i = 1; i < crow.size(); ++i) EXPECT_NEAR(std::stod(split(crow[i])[3]), 0.5, 1e-14);
  const auto act = run({"classical", "--mode", "action", "--log-ratio", "10.16", "--range", "10:80:10", "--z", "0.5"});
  ASSERT_EQ(act.code, 0);
  const auto arows = lines(act.out);
  EXPECT_EQ(arows[0], "E,action_Q,action_q,n_action,n_higher_level,difference");
  for (std::size_t i = 1; i < arows.size(); ++i) {
    const auto f = split(arows[i]);
    EXPECT_NEAR(std::stod(f[3]), std::stod(f[4]), 0.05 * std::stod(f[4]));
  }
}

TEST(Cli, OutFileMatchesStdout) {
  const auto path = std::filesystem::temp_directory_path() / "landau_cli_out_test.csv";
  const auto a = run({"area", "--e", "10", "--method", "monte_carlo", "--seed", "7", "--n", "100000"});
  const auto b = run({"area", "--e", "10", "--method", "monte_carlo", "--seed", "7", "--n", "100000", "--out",
                      path.string()});
  ASSERT_EQ(b.code, 0);
  EXPECT_TRUE(b.out.empty());
  std::ifstream in(path, std::ios::binary);
  const std::string file((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(file, a.out);
  std::filesystem::remove(path);
}
