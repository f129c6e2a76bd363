#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "ptlab/cli.hpp"
#include "ptlab/gf2m.hpp"

namespace {

using json = nlohmann::json;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult ptlab_run(std::vector<std::string> args) {
  args.insert(args.begin(), "ptlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ptlab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> records(const std::string& text) {
  std::vector<json> v;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) v.push_back(json::parse(line));
  }
  return v;
}

}  // namespace

TEST(CliVerify, SingleTheorem) {
  const CliResult r = ptlab_run({"verify", "--theorems", "t1", "--m", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0]["theorem"], "t1");
  EXPECT_EQ(recs[0]["m"], 5);
  EXPECT_EQ(recs[0]["predicted"], false);
  EXPECT_EQ(recs[0]["observed"], false);
  EXPECT_EQ(recs[0]["agree"], true);
  EXPECT_TRUE(recs[0].contains("elapsed_ms"));
}

TEST(CliVerify, FullCampaign) {
  const CliResult r = ptlab_run({"verify", "--theorems", "t1,t2,t3", "--m", "1..9", "--workers", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 27u);
  for (const auto& rec : recs) EXPECT_EQ(rec["agree"], true) << rec.dump();
}

TEST(CliVerify, Nonexistence) {
  const CliResult r = ptlab_run({"verify", "--theorems", "nonexist", "--m", "5..9"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& rec : records(r.out)) {
    const int m = rec["m"];
    if (m % 2 == 1) {
      EXPECT_EQ(rec["observed"], false) << m;
    }
  }
  const auto small = records(ptlab_run({"verify", "--theorems", "nonexist", "--m", "3"}).out);
  ASSERT_EQ(small.size(), 1u);
  EXPECT_TRUE(small[0]["predicted"].is_null());
}

TEST(CliSearch, FindsKnownClasses) {
  auto has = [](const std::vector<json>& recs, int r, int a, int b) {
    for (const auto& rec : recs) {
      if (rec["r"] == r && rec["alpha"] == a && rec["beta"] == b && rec["permutes"] == true) return true;
    }
    return false;
  };
  const CliResult m3 = ptlab_run({"search", "--m", "3", "--r-max", "8", "--alpha-max", "8"});
  ASSERT_EQ(m3.code, 0) << m3.err;
  const auto recs3 = records(m3.out);
  EXPECT_TRUE(has(recs3, 3, 3, 1));
  for (const auto& rec : recs3) {
    if (rec["r"] == 3 && rec["alpha"] == 3 && rec["beta"] == 1) {
      EXPECT_EQ(rec["catalog"], 1);
      EXPECT_EQ(rec["catalog_condition_holds"], true);
    }
    EXPECT_EQ(rec["brute_force_agrees"], true);
  }
  EXPECT_TRUE(has(records(ptlab_run({"search", "--m", "3", "--r-max", "9", "--alpha-max", "8"}).out), 9, 8, 6));
  EXPECT_TRUE(has(records(ptlab_run({"search", "--m", "2", "--r-max", "8", "--alpha-max", "8"}).out), 7, 7, 5));
}

TEST(CliSearch, Limits) {
  EXPECT_EQ(ptlab_run({"search", "--m", "9"}).code, 1);
  EXPECT_EQ(ptlab_run({"search", "--r-max", "33"}).code, 1);
  EXPECT_EQ(ptlab_run({"search", "--alpha-max", "1"}).code, 1);
}

TEST(CliQm, Pairs) {
  const CliResult r = ptlab_run({"qm", "--m", "3", "--pairs", "F1:F2,f5:f6,F1:F1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto recs = records(r.out);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0]["equivalent"], false);
  EXPECT_EQ(recs[0]["certificate"], "step1-empty");
  EXPECT_EQ(recs[1]["equivalent"], true);
  // f5(x) = f6(x^44), equivalently f6(x) = f5(x^53).
  EXPECT_EQ(recs[1]["d"], 44);
  EXPECT_EQ(recs[1]["d_inv"], 53);
  EXPECT_EQ(recs[1]["A1"], "1");
  EXPECT_EQ(recs[1]["A2"], "1");
  EXPECT_EQ(recs[2]["equivalent"], true);
  EXPECT_EQ(recs[2]["d"], 1);
}

TEST(CliQm, NonPermutationAndParsing) {
  const auto recs = records(ptlab_run({"qm", "--m", "5", "--pairs", "F1:11-10-4"}).out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_TRUE(recs[0]["equivalent"].is_null());
  EXPECT_EQ(recs[0]["certificate"], "F-not-a-permutation");
  EXPECT_EQ(ptlab_run({"qm", "--pairs", "F9:F1"}).code, 1);
  EXPECT_EQ(ptlab_run({"qm", "--pairs", "f19:F1"}).code, 1);
  EXPECT_EQ(ptlab_run({"qm", "--pairs", "F1"}).code, 1);
  EXPECT_EQ(ptlab_run({"qm", "--pairs", "3-2-2:F1"}).code, 1);
  EXPECT_EQ(ptlab_run({"qm"}).code, 1);
}

TEST(CliCurve, Reports) {
  const CliResult r = ptlab_run({"curve", "--m", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rec = records(r.out).at(0);
  EXPECT_EQ(rec["verdict"], "not-a-permutation");
  EXPECT_EQ(rec["infinity"], 2);
  EXPECT_EQ(rec["projective"].get<int>(), rec["affine"].get<int>() + 2);

  const auto big = records(ptlab_run({"curve", "--m", "17", "--workers", "2"}).out).at(0);
  EXPECT_GE(big["projective"].get<std::int64_t>(), big["bound_lo"].get<std::int64_t>());
  EXPECT_LE(big["projective"].get<std::int64_t>(), big["bound_hi"].get<std::int64_t>());

  const auto audit = records(ptlab_run({"curve", "--m", "18", "--audit-only"}).out).at(0);
  EXPECT_EQ(audit["bound"], 131071);
  EXPECT_EQ(ptlab_run({"curve", "--m", "21"}).code, 1);
}

TEST(CliFormat, CsvHeadersAndOutputFile) {
  const CliResult v = ptlab_run({"verify", "--theorems", "t2", "--m", "3", "--format", "csv", "--no-timing"});
  EXPECT_EQ(v.out, "theorem,m,predicted,observed,agree,elapsed_ms\nt2,3,true,true,true,0.0\n");
  const CliResult c = ptlab_run({"curve", "--m", "18", "--audit-only", "--format", "csv"});
  EXPECT_EQ(c.out.substr(0, c.out.find('\n')), "m,bound,bound_real_sqrt,affine_lower,first_m,first_even_m");
  const CliResult q = ptlab_run({"qm", "--m", "3", "--pairs", "F1:F2", "--format", "csv"});
  EXPECT_EQ(q.out, "F,G,m,equivalent,d,d_inv,A1,A2,certificate,step1\nF1,F2,3,false,,,,,step1-empty,\n");

  const std::string path = ::testing::TempDir() + "ptlab_cli_out.jsonl";
  const CliResult f = ptlab_run({"verify", "--theorems", "t3", "--m", "2", "--output", path});
  EXPECT_EQ(f.code, 0);
  EXPECT_TRUE(f.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(records(ss.str()).at(0)["observed"], true);
  EXPECT_EQ(ptlab_run({"verify", "--m", "2", "--output", "/nonexistent/dir/x"}).code, 1);
}

TEST(CliDeterminism, WorkerCountDoesNotChangeOutput) {
  const std::vector<std::vector<std::string>> cmds = {
      {"verify", "--theorems", "t1,t2,t3,nonexist", "--m", "1..8", "--no-timing"},
      {"search", "--m", "2..4", "--seed", "99"},
      {"qm", "--m", "3..4", "--pairs", "f5:f6,F1:f1,f3:f4"},
      {"curve", "--m", "5..9"},
  };
  for (const auto& base : cmds) {
    std::string first;
    for (const char* w : {"1", "3", "8"}) {
      auto args = base;
      args.push_back("--workers");
      args.push_back(w);
      const CliResult r = ptlab_run(args);
      ASSERT_EQ(r.code, 0) << r.err;
      if (first.empty()) {
        first = r.out;
      } else {
        EXPECT_EQ(r.out, first) << base[0] << " workers=" << w;
      }
    }
  }
}

TEST(CliErrors, UsageExitCodes) {
  EXPECT_EQ(ptlab_run({}).code, 1);
  EXPECT_EQ(ptlab_run({"frobnicate"}).code, 1);
  EXPECT_EQ(ptlab_run({"verify", "--m", "0..3"}).code, 1);
  EXPECT_EQ(ptlab_run({"verify", "--m", "13"}).code, 1);
  EXPECT_EQ(ptlab_run({"verify", "--m", "4..2"}).code, 1);
  EXPECT_EQ(ptlab_run({"verify", "--m", "x"}).code, 1);
  EXPECT_EQ(ptlab_run({"verify", "--theorems", "t9", "--m", "2"}).code, 1);
  EXPECT_EQ(ptlab_run({"verify", "--format", "xml"}).code, 1);
  EXPECT_EQ(ptlab_run({"verify", "--workers", "0"}).code, 1);
  EXPECT_EQ(ptlab_run({"verify", "--help"}).code, 0);
}

TEST(CliEnvironment, ModulusTableOverride) {
  const std::string path = ::testing::TempDir() + "ptlab_cli_moduli.txt";
  {
    std::ofstream f(path);
    f << "6 5b\n4 19\n";  // other irreducibles for degrees 6 and 4
  }
  const auto plain = ptlab_run({"qm", "--m", "3", "--pairs", "f5:f6,F1:F2"});
  ::setenv("PTLAB_MODULUS_TABLE", path.c_str(), 1);
  const auto alt = ptlab_run({"qm", "--m", "3", "--pairs", "f5:f6,F1:F2"});
  const auto alt_verify = ptlab_run({"verify", "--m", "2..3", "--no-timing"});
  ::setenv("PTLAB_MODULUS_TABLE", "/nonexistent/table.txt", 1);
  const auto missing = ptlab_run({"verify", "--m", "2"});
  ::unsetenv("PTLAB_MODULUS_TABLE");
  const auto plain_verify = ptlab_run({"verify", "--m", "2..3", "--no-timing"});
  ptlab::set_default_modulus_table(ptlab::ModulusTable::builtin());

  EXPECT_EQ(alt.code, 0);
  // Equivalence is a property of the maps, not of the field's representation.
  EXPECT_EQ(records(alt.out).at(0)["equivalent"], records(plain.out).at(0)["equivalent"]);
  EXPECT_EQ(records(alt.out).at(1)["equivalent"], false);
  EXPECT_EQ(alt_verify.out, plain_verify.out);
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);
}

TEST(CliBinary, RunsAsProcess) {
  const std::string cmd = std::string(PTLAB_CLI_PATH) + " curve --m 18 --audit-only";
  FILE* p = ::popen(cmd.c_str(), "r");
  ASSERT_NE(p, nullptr);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, p)) out += buf;
  const int status = ::pclose(p);
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), 0);
  EXPECT_EQ(records(out).at(0)["bound"], 131071);
  const int bad = std::system((std::string(PTLAB_CLI_PATH) + " verify --m 99 2>/dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(bad), 1);
}
