#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "pearson/commands.hpp"

using namespace pearson;

namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = run_cli(args, out, err);
  return CliResult{rc, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("count emits the frozen reference table in CSV") {
  const CliResult r =
      cli({"count", "--q", "4,5,6", "--n", "4", "--n-max", "7"});
  REQUIRE(r.exit_code == kExitOk);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 14);  // metadata + header + 12 rows
  CHECK(lines[0] == "# pearsoncode 1.0.0, seed=n/a, rng=n/a");
  CHECK(lines[1] == "q,n,N1,N2,P,r1,r2,rP,r0_approx");

  // n,q -> N1,N2,P from the frozen reference table.
  struct Row { const char* prefix; const char* counts; };
  const Row expected[] = {
      {"4,4,", "175,110,146"},   {"5,4,", "369,194,290"},
      {"6,4,", "671,302,578"},   {"4,5,", "781,570,720"},
      {"5,5,", "2101,1320,1860"},{"6,5,", "4651,2550,4380"},
      {"4,6,", "3367,2702,3242"},{"5,6,", "11529,8162,10802"},
      {"6,6,", "31031,19502,30242"},{"4,7,", "14197,12138,13944"},
      {"5,7,", "61741,47544,59556"},{"6,7,", "201811,140070,199500"},
  };
  for (const Row& row : expected) {
    bool found = false;
    for (const auto& line : lines) {
      if (line.rfind(row.prefix, 0) == 0) {
        const auto f = fields_of(line);
        REQUIRE(f.size() == 9);
        found = f[2] + "," + f[3] + "," + f[4] == row.counts;
        break;
      }
    }
    CHECK_MESSAGE(found, row.prefix);
  }
}

TEST_CASE("count human format mirrors the table layout") {
  const CliResult r =
      cli({"count", "--q", "9", "--n", "2", "--format", "human"});
  REQUIRE(r.exit_code == kExitOk);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 2);
  CHECK(tokens_of(lines[0]) ==
        std::vector<std::string>{"n", "q", "N2", "P", "N1"});
  CHECK(tokens_of(lines[1]) ==
        std::vector<std::string>{"2", "9", "2", "2", "17"});
}

TEST_CASE("count validates its ranges") {
  CHECK(cli({"count", "--q", "4", "--n", "1"}).exit_code == kExitUsageError);
  CHECK(cli({"count", "--q", "1", "--n", "4"}).exit_code == kExitUsageError);
  CHECK(cli({"count", "--q", "4", "--n", "5", "--n-max", "3"}).exit_code ==
        kExitUsageError);
  CHECK(cli({"count", "--n", "4"}).exit_code == kExitUsageError);
}

TEST_CASE("enumerate writes the codebook and reports the count on stderr") {
  const CliResult r = cli({"enumerate", "--q", "3", "--n", "3"});
  REQUIRE(r.exit_code == kExitOk);
  CHECK(r.err == "12 words\n");
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 13);
  CHECK(lines[0] == "3 3");
  CHECK(lines[1] == "0 0 1");

  const CliResult t = cli({"enumerate", "--q", "4", "--n", "3", "--family",
                           "tconstrained", "--refs", "0,3"});
  REQUIRE(t.exit_code == kExitOk);
  CHECK(t.err == "18 words\n");
}

TEST_CASE("enumerate flag validation") {
  // refs only belong to the tconstrained family.
  CHECK(cli({"enumerate", "--q", "4", "--n", "3", "--refs", "0,3"})
            .exit_code == kExitUsageError);
  CHECK(cli({"enumerate", "--q", "4", "--n", "3", "--family", "tconstrained"})
            .exit_code == kExitUsageError);
  CHECK(cli({"enumerate", "--q", "4", "--n", "3", "--family", "nonsense"})
            .exit_code == kExitUsageError);
  const CliResult budget =
      cli({"enumerate", "--q", "8", "--n", "12", "--budget", "1000"});
  CHECK(budget.exit_code == kExitResourceError);
  CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("check passes optimal books and flags violations") {
  const auto good = temp_path("cli_good_book.txt");
  REQUIRE(cli({"enumerate", "--q", "4", "--n", "4", "--output",
               good.string()})
              .exit_code == kExitOk);
  const CliResult ok = cli({"check", good.string()});
  CHECK(ok.exit_code == kExitOk);
  CHECK(ok.out == "OK: 146 words, q=4, n=4\n");
  std::filesystem::remove(good);

  const auto bad = temp_path("cli_bad_book.txt");
  REQUIRE(cli({"enumerate", "--q", "5", "--n", "4", "--family",
               "tconstrained", "--refs", "0,2", "--output", bad.string()})
              .exit_code == kExitOk);
  const CliResult caught = cli({"check", bad.string()});
  CHECK(caught.exit_code == kExitVerificationFailure);
  CHECK(caught.out.find("Property A violation") != std::string::npos);
  CHECK(caught.out.find("(0,0,2,4)") != std::string::npos);
  std::filesystem::remove(bad);

  const auto constant = temp_path("cli_constant_book.txt");
  {
    std::ofstream f(constant);
    f << "3 2\n2 2\n";
  }
  const CliResult cres = cli({"check", constant.string()});
  CHECK(cres.exit_code == kExitVerificationFailure);
  CHECK(cres.out.find("Property B violation") != std::string::npos);
  std::filesystem::remove(constant);
}

TEST_CASE("check reports parse failures as usage errors") {
  const auto mangled = temp_path("cli_mangled_book.txt");
  {
    std::ofstream f(mangled);
    f << "4 3\n0 1 9\n";
  }
  const CliResult r = cli({"check", mangled.string()});
  CHECK(r.exit_code == kExitUsageError);
  CHECK(r.err.find("line 2") != std::string::npos);
  std::filesystem::remove(mangled);

  CHECK(cli({"check", "/no/such/file.txt"}).exit_code == kExitUsageError);
}

TEST_CASE("enumerate then check round trips cleanly") {
  for (std::uint32_t q = 2; q <= 5; ++q) {
    for (std::uint32_t n = 2; n <= 5; ++n) {
      const auto path = temp_path("cli_roundtrip_" + std::to_string(q) + "_" +
                                  std::to_string(n) + ".txt");
      REQUIRE(cli({"enumerate", "--q", std::to_string(q), "--n",
                   std::to_string(n), "--output", path.string()})
                  .exit_code == kExitOk);
      CHECK(cli({"check", path.string()}).exit_code == kExitOk);
      std::filesystem::remove(path);
    }
  }
}

TEST_CASE("simulate emits reproducible CSV with metadata") {
  const std::vector<std::string> args{"simulate", "--q", "3",  "--n",
                                      "3",        "--sigma", "0", "--trials",
                                      "50",       "--seed",  "7"};
  const CliResult r1 = cli(args);
  const CliResult r2 = cli(args);
  REQUIRE(r1.exit_code == kExitOk);
  CHECK(r1.out == r2.out);  // bitwise deterministic

  const auto lines = lines_of(r1.out);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] ==
        "# pearsoncode 1.0.0, seed=7, rng=mt19937_64/splitmix64-per-trial/"
        "box-muller");
  CHECK(lines[1] == "detector,q,n,a,b,sigma,trials,errors,wer,ci");
  const auto pearson_row = fields_of(lines[2]);
  REQUIRE(pearson_row.size() == 10);
  CHECK(pearson_row[0] == "pearson");
  CHECK(pearson_row[6] == "50");
  CHECK(pearson_row[7] == "0");  // sigma 0: no errors
  CHECK(pearson_row[8] == "0");
  const auto euclidean_row = fields_of(lines[3]);
  CHECK(euclidean_row[0] == "euclidean");
  CHECK(euclidean_row[7] == "0");
}

TEST_CASE("simulated pearson error counts ignore gain and offset") {
  const std::vector<std::string> base{"simulate", "--q", "3", "--n", "3",
                                      "--sigma", "0.2", "--trials", "400",
                                      "--seed", "11"};
  std::vector<std::string> warped = base;
  warped.insert(warped.end(), {"--gain", "2.5", "--offset", "-7"});
  const CliResult r1 = cli(base);
  const CliResult r2 = cli(warped);
  REQUIRE(r1.exit_code == kExitOk);
  REQUIRE(r2.exit_code == kExitOk);
  const auto row1 = fields_of(lines_of(r1.out)[2]);
  const auto row2 = fields_of(lines_of(r2.out)[2]);
  REQUIRE(row1[0] == "pearson");
  REQUIRE(row2[0] == "pearson");
  // errors, wer, ci agree exactly; the a and b columns differ.
  CHECK(row1[7] == row2[7]);
  CHECK(row1[8] == row2[8]);
  CHECK(row1[9] == row2[9]);
  CHECK(row1[3] != row2[3]);
}

TEST_CASE("simulate refuses a non-Pearson family") {
  const CliResult r =
      cli({"simulate", "--q", "5", "--n", "3", "--family", "tconstrained",
           "--refs", "0,2", "--trials", "10"});
  CHECK(r.exit_code == kExitVerificationFailure);
  CHECK(r.err.find("Property A") != std::string::npos);
}

TEST_CASE("redundancy emits the frozen reference comparison row") {
  const CliResult r = cli({"redundancy", "--q", "8", "--n", "10"});
  REQUIRE(r.exit_code == kExitOk);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1] == "n,r1,r2,rP,r0_approx");
  const auto row = fields_of(lines[2]);
  REQUIRE(row.size() == 5);
  CHECK(row[0] == "10");
  CHECK(row[3] == "0.147442");  // 6 significant digits
  CHECK(row[4] == "2.78858");
}

TEST_CASE("redundancy marks the binary alphabet as out of scope for r0") {
  const CliResult csv = cli({"redundancy", "--q", "2", "--n", "4"});
  REQUIRE(csv.exit_code == kExitOk);
  const auto row = fields_of(lines_of(csv.out)[2]);
  CHECK(row[4] == "nan");

  const CliResult human =
      cli({"redundancy", "--q", "2", "--n", "4", "--format", "human"});
  REQUIRE(human.exit_code == kExitOk);
  const auto tokens = tokens_of(lines_of(human.out)[1]);
  REQUIRE(tokens.size() == 5);
  CHECK(tokens[4] == "n/a");
}

TEST_CASE("redundancy range runs and stays ordered") {
  const CliResult r =
      cli({"redundancy", "--q", "8", "--n", "2", "--n-max", "40"});
  REQUIRE(r.exit_code == kExitOk);
  CHECK(lines_of(r.out).size() == 2 + 39);
}

TEST_CASE("output flag writes the report to a file") {
  const auto path = temp_path("cli_count_out.csv");
  const CliResult r = cli({"count", "--q", "4", "--n", "4", "--output",
                           path.string()});
  REQUIRE(r.exit_code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str().find("4,4,175,110,146") != std::string::npos);
  std::filesystem::remove(path);

  CHECK(cli({"count", "--q", "4", "--n", "4", "--output",
             "/no_such_dir_here/x.csv"})
            .exit_code == kExitUsageError);
}

TEST_CASE("usage errors and help") {
  CHECK(cli({}).exit_code == kExitUsageError);
  CHECK(cli({"frobnicate"}).exit_code == kExitUsageError);
  CHECK(cli({"count"}).exit_code == kExitUsageError);  // missing --q/--n
  CHECK(cli({"count", "--q", "4", "--n", "4", "--format", "yaml"}).exit_code ==
        kExitUsageError);
  const CliResult help = cli({"--help"});
  CHECK(help.exit_code == kExitOk);
  CHECK(help.out.find("count") != std::string::npos);
  CHECK(help.out.find("simulate") != std::string::npos);
}

TEST_CASE("real formatting uses six significant digits") {
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(0.14744150936521372) == "0.147442");
  CHECK(format_real(1234567.0) == "1.23457e+06");
  CHECK(format_real(std::nan("")) == "nan");
}
