#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "sino/formats.hpp"
#include "sinograph_app/app.hpp"

namespace fs = std::filesystem;
using sinograph_app::run;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("sinograph_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    // 4E00 < 4E01 < 4E02 by stroke prefix; the one-stroke U+20000 sits below 4E00.
    write("strokes.tsv",
          "4E00\th:(0,0)-(10,0);s:(5,-5)-(5,5)\n"
          "4E01\th:(0,0)-(10,0);s:(5,-5)-(5,5);p:(20,0)-(25,10)\n"
          "4E02\th:(0,0)-(10,0);s:(5,-5)-(5,5);p:(20,0)-(25,10);d:(30,30)-(31,33)\n"
          "20000\th:(0,0)-(4,0)\n");
    write("variants.tsv", "");
    write("readings.tsv", "4E00\tcmn\tren2\n4E01\tcmn\tren4\n4E02\tcmn\tshui3\n");
    write("radicals.tsv", "4E00\t1\n4E01\t1\n4E02\t1\n");
    write("synsets.tsv", "a\t\xE4\xB8\x80\nb\t\xE4\xB8\x81\n");
    write("relations.tsv", "a\thyponym\tb\n");
  }
  void TearDown() override { fs::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) { std::ofstream(dir_ / name) << text; }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int cli(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run(args, out_, err_);
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, BuildGraphCountsAndFilter) {
  ASSERT_EQ(cli({"build-graph", "--strokes", path("strokes.tsv"), "--variants", path("variants.tsv"), "-o", path("g.snap")}), 0)
      << err_.str();
  EXPECT_NE(out_.str().find("nodes\t4\n"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("edges\t3\n"), std::string::npos) << out_.str();

  ASSERT_EQ(cli({"build-graph", "--strokes", path("strokes.tsv"), "--variants", path("variants.tsv"), "--bmp-only", "-o",
                 path("g.snap")}), 0);
  EXPECT_NE(out_.str().find("nodes\t3\n"), std::string::npos);
  EXPECT_NE(out_.str().find("edges\t2\n"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  write("empty.tsv", "");
  EXPECT_EQ(cli({"build-graph", "--strokes", path("empty.tsv"), "--variants", path("variants.tsv"), "-o", path("g.snap")}), 2);
  EXPECT_EQ(cli({"build-graph", "--strokes", path("missing.tsv"), "--variants", path("variants.tsv"), "-o", path("g.snap")}), 2);
  EXPECT_EQ(cli({"no-such-command"}), 1);
  EXPECT_EQ(cli({"build-graph"}), 1);
  EXPECT_EQ(cli({"--help"}), 0);
  EXPECT_EQ(cli({"build-graph", "--strokes", path("strokes.tsv"), "--variants", path("variants.tsv"), "--range", "4E03-4E09",
                 "-o", path("g.snap")}), 2);
  write("lonely.tsv", "4E00\th:(0,0)-(10,0)\n");
  ASSERT_EQ(cli({"build-graph", "--strokes", path("lonely.tsv"), "--variants", path("variants.tsv"), "-o", path("l.snap")}), 0);
  EXPECT_EQ(cli({"annotate", "--snapshot", path("l.snap"), "-o", path("la.snap")}), 3);
}

TEST_F(Cli, AnnotateIsIdempotentAndHandlesMissingReadings) {
  ASSERT_EQ(cli({"build-graph", "--strokes", path("strokes.tsv"), "--variants", path("variants.tsv"), "--bmp-only", "-o",
                 path("g.snap")}), 0);
  const std::vector<std::string> common{"--radicals", path("radicals.tsv"), "--synsets", path("synsets.tsv"),
                                        "--relations", path("relations.tsv")};
  auto args = std::vector<std::string>{"annotate", "--snapshot", path("g.snap"), "-o", path("a.snap"), "--readings",
                                       path("readings.tsv")};
  args.insert(args.end(), common.begin(), common.end());
  ASSERT_EQ(cli(args), 0) << err_.str();
  args[2] = path("a.snap");
  args[4] = path("b.snap");
  ASSERT_EQ(cli(args), 0);
  std::ifstream a(path("a.snap")), b(path("b.snap"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());

  auto snap = sino::io::read_file(path("a.snap"), [](std::istream& in, const std::string& s) { return sino::io::read_snapshot(in, s); });
  const auto& e01 = snap.graph.attributes({0, 1});
  EXPECT_EQ(e01.f1, 1u);
  EXPECT_EQ(*e01.semanticity, 1.0);
  EXPECT_EQ(*snap.graph.attributes({1, 2}).phoneticity[0], 0.0);

  auto no_readings = std::vector<std::string>{"annotate", "--snapshot", path("g.snap"), "-o", path("c.snap")};
  no_readings.insert(no_readings.end(), common.begin(), common.end());
  ASSERT_EQ(cli(no_readings), 0);
  snap = sino::io::read_file(path("c.snap"), [](std::istream& in, const std::string& s) { return sino::io::read_snapshot(in, s); });
  for (const auto& [_, attrs] : snap.graph.edges()) {
    for (const auto& phi : attrs.phoneticity) EXPECT_FALSE(phi);
    EXPECT_TRUE(attrs.semanticity);
  }

  ASSERT_EQ(cli({"chains", "--snapshot", path("a.snap"), "--start", "2"}), 0);
  EXPECT_NE(out_.str().find("2\t2 1 0\t"), std::string::npos) << out_.str();
  ASSERT_EQ(cli({"query-unknown", "--snapshot", path("a.snap"), "--class", "2"}), 0);
  EXPECT_EQ(out_.str(), "b\t1\n");
  ASSERT_EQ(cli({"phi-hist", "--snapshot", path("a.snap"), "--bins", "2"}), 0);
  EXPECT_EQ(out_.str(), "lower,upper,count\n0,0.5,1\n0.5,1,1\n");
  EXPECT_EQ(cli({"phi-hist", "--snapshot", path("c.snap")}), 3);
  ASSERT_EQ(cli({"graph-stats", "--snapshot", path("a.snap")}), 0);
  EXPECT_NE(out_.str().find("in_degree_alpha\tn/a"), std::string::npos);
}

TEST_F(Cli, FreqdistSelfIsZero) {
  write("f.tsv", "4E00\t5\n4E01\t3\n4E02\t1\n");
  ASSERT_EQ(cli({"freqdist", "--freq", path("f.tsv"), "--freq", path("f.tsv"), "-n", "3", "--ufl-out", path("u.tsv")}), 0);
  EXPECT_EQ(out_.str(), "list\tf\tf\nf\t0\t0\nf\t0\t0\n");
  std::ifstream u(path("u.tsv"));
  std::string first;
  std::getline(u, first);
  EXPECT_EQ(first.substr(0, 5), "4E00\t");
}

TEST_F(Cli, FeaturesAndEvaluateOnSeparableCorpus) {
  ASSERT_EQ(cli({"build-graph", "--strokes", path("strokes.tsv"), "--variants", path("variants.tsv"), "-o", path("g.snap")}), 0);
  std::ostringstream corpus;
  for (int i = 0; i < 40; ++i) corpus << (i % 2 ? "one\t\xE4\xB8\x80\xE4\xB8\x80\n" : "two\t\xE4\xB8\x81\xE4\xB8\x82\n");
  write("corpus.tsv", corpus.str());
  ASSERT_EQ(cli({"features", "--snapshot", path("g.snap"), "--corpus", path("corpus.tsv"), "-o", path("v.tsv")}), 0)
      << err_.str();
  ASSERT_EQ(cli({"evaluate", "--vectors", path("v.tsv")}), 0) << err_.str();
  EXPECT_NE(out_.str().find("accuracy\t1\n"), std::string::npos) << out_.str();
  EXPECT_EQ(cli({"features", "--snapshot", path("g.snap"), "--corpus", path("corpus.tsv"), "--strategy", "9", "-o",
                 path("v.tsv")}), 2);
}
