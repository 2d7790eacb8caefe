#include <gtest/gtest.h>

#include "json.hpp"

#include "clifinv/cli.hpp"
#include "clifinv/mvparse.hpp"

namespace clifinv {
namespace {

TEST(CliTest, InversePlain) {
  const CliResult r = run_cli({"inverse", "--sig", "5,0", "1+2e1+3e23+4e2345"});
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("det 354960\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("adjugate 3576 + 96 e1 - 53832 e23 - 15072 e45 - 8592 e123 - 28992 e145 "
                       "+ 47424 e2345 - 8256 e12345\n"),
            std::string::npos)
      << r.out;
}

TEST(CliTest, InverseJsonMatchesOracleJson) {
  const CliResult inv = run_cli({"inverse", "--sig", "1,5", "--json", "2+e1+4e3+e15+3e126"});
  const CliResult orc = run_cli({"oracle", "--sig", "1,5", "--json", "2+e1+4e3+e15+3e126"});
  ASSERT_EQ(inv.exit_code, kExitOk) << inv.err;
  ASSERT_EQ(orc.exit_code, kExitOk) << orc.err;
  auto a = nlohmann::json::parse(inv.out);
  const auto b = nlohmann::json::parse(orc.out);
  EXPECT_EQ(a["det"], "678025");
  EXPECT_EQ(a["formula"], "n6.a");
  a.erase("det");
  a.erase("formula");
  EXPECT_EQ(a, b);
  // The JSON document is accepted back as input.
  const CliResult again = run_cli({"oracle", "--json", orc.out});
  EXPECT_EQ(again.exit_code, kExitOk) << again.err;
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({"inverse", "--sig", "4,1", "3+e2+e5-e12-e15+3e125"}).exit_code,
            kExitNotInvertible);
  EXPECT_EQ(run_cli({"det", "--sig", "4,1", "3+e2+e5-e12-e15+3e125"}).exit_code,
            kExitNotInvertible);
  EXPECT_EQ(run_cli({"oracle", "--sig", "4,1", "3+e2+e5-e12-e15+3e125"}).exit_code,
            kExitNotInvertible);
  EXPECT_EQ(run_cli({"inverse", "--sig", "2,0", "1+e3"}).exit_code, kExitUsage);
  EXPECT_EQ(run_cli({"inverse", "1+e1"}).exit_code, kExitUsage);
  EXPECT_EQ(run_cli({"inverse", "--sig", "9", "1"}).exit_code, kExitUsage);
  EXPECT_EQ(run_cli({"bogus"}).exit_code, kExitUsage);
  EXPECT_EQ(run_cli({}).exit_code, kExitUsage);
  EXPECT_EQ(run_cli({"inverse", "--sig", "2,0", "--formula", "n9", "1"}).exit_code,
            kExitUnknownFormula);
  EXPECT_EQ(run_cli({"inverse", "--sig", "5,0", "--formula", "n4.a", "1"}).exit_code, kExitUsage);
  EXPECT_EQ(run_cli({"inverse", "--sig", "2,0", "--even", "1+e1"}).exit_code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).exit_code, kExitOk);
}

TEST(CliTest, DetAndEven) {
  const CliResult d = run_cli({"det", "--sig", "2,2", "--formula", "n6.a",
                               "45+55e1+84e12+39e134+93e234+15e1234"});
  EXPECT_EQ(d.exit_code, kExitOk);
  EXPECT_EQ(d.out, "67166445910339801\n");
  const CliResult e = run_cli({"inverse", "--sig", "3,0", "--even", "1+e12"});
  EXPECT_EQ(e.exit_code, kExitOk) << e.err;
  EXPECT_NE(e.out.find("inverse 1/2 - 1/2 e12\n"), std::string::npos) << e.out;
}

TEST(CliTest, Formulas) {
  const CliResult r = run_cli({"formulas", "--dim", "4"});
  EXPECT_EQ(r.exit_code, kExitOk);
  EXPECT_NE(r.out.find("n4.a\tverified"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(default)"), std::string::npos);
  const CliResult j = run_cli({"formulas", "--dim", "5", "--json"});
  const auto list = nlohmann::json::parse(j.out);
  EXPECT_EQ(list.size(), 53u);
}

TEST(CliTest, CheckIsDeterministicAcrossThreads) {
  const CliResult serial = run_cli({"check", "--trials", "2", "--dim", "3", "--seed", "9"});
  const CliResult threaded =
      run_cli({"check", "--trials", "2", "--dim", "3", "--seed", "9", "--threads", "3"});
  EXPECT_EQ(serial.exit_code, kExitOk) << serial.out;
  EXPECT_EQ(serial.out, threaded.out);
  EXPECT_NE(serial.out.find("PASS 8/8 trials"), std::string::npos) << serial.out;
}

TEST(CliTest, SearchModes) {
  const CliResult r = run_cli({"search", "--mode", "rediscover", "--dim", "2"});
  EXPECT_EQ(r.exit_code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("{1,2}"), std::string::npos) << r.out;
  const CliResult a = run_cli({"search", "--mode", "audit", "--formula", "n4.b", "--verify", "5"});
  EXPECT_EQ(a.exit_code, kExitOk) << a.err;
  EXPECT_EQ(run_cli({"search", "--mode", "nope"}).exit_code, kExitUsage);
  EXPECT_EQ(run_cli({"search", "--mode", "rediscover"}).exit_code, kExitUsage);
}

}  // namespace
}  // namespace clifinv
