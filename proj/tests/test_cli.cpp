#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "mrce/formats.hpp"
#include "mrce/instance_forge.hpp"

namespace fs = std::filesystem;
using namespace mrce;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(MRCE_TEST_TMPDIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

std::string field(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
  }
  return "";
}

}  // namespace

TEST_CASE("solve prints the exact ratio and the derived figures") {
  const auto dir = scratch("solve");
  spit(dir / "one.cnf", "p cnf 1 1\n1 1 1 0\n");
  const auto prefix = (dir / "red").string();
  const auto gen = run({"gen", "reduction", "--cnf", (dir / "one.cnf").string(), "--out", prefix});
  REQUIRE(gen.code == 0);
  const auto graph_text = slurp(prefix + ".graph");
  CHECK(graph_text.rfind("# threshold 9/2\n9 ", 0) == 0);
  CHECK(slurp(prefix + ".roles").rfind("0 root\n1 literal +1\n", 0) == 0);

  const auto r = run({"solve", prefix + ".graph", "--algo", "exact"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "ratio") == "9/2");
  CHECK(field(r.out, "decimal") == "4.5");
  CHECK(field(r.out, "size") == "2");
  CHECK(field(r.out, "closed_neighborhood") == "9");
  CHECK(field(r.out, "surveillance_lower_bound") == "4");
}

TEST_CASE("solve on a single interval") {
  const auto dir = scratch("single");
  spit(dir / "one.intervals", "1 0\n0 0 1\n");
  const auto r = run({"solve", (dir / "one.intervals").string(), "--algo", "interval"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "ratio") == "1/1");
  CHECK(field(r.out, "surveillance_lower_bound") == "0");
}

TEST_CASE("split depth is monotone through the command line") {
  const auto dir = scratch("split_k");
  const auto prefix = (dir / "s").string();
  REQUIRE(run({"gen", "split", "-n", "12", "--seed", "4", "--out", prefix}).code == 0);
  const auto k1 = run({"solve", prefix + ".graph", "--algo", "split", "--k", "1"});
  const auto k3 = run({"solve", prefix + ".graph", "--algo", "split", "--k", "3"});
  REQUIRE(k1.code == 0);
  REQUIRE(k3.code == 0);
  CHECK(Ratio::parse(field(k3.out, "ratio")) >= Ratio::parse(field(k1.out, "ratio")));
}

TEST_CASE("check names the first violated condition") {
  const auto dir = scratch("check");
  const auto g = (dir / "p.graph").string();
  spit(g, "4 3 0\n0 1\n1 2\n2 3\n");
  const auto verdict = [&](const std::string& sol) {
    spit(dir / "s.sol", sol);
    return run({"check", g, (dir / "s.sol").string()});
  };
  auto r = verdict("ratio 3/2\n0 1\n");
  CHECK(r.code == 0);
  CHECK(r.out == "ok ratio 3/2\n");
  r = verdict("ratio 3/2\n1 2\n");
  CHECK(r.code == 1);
  CHECK(r.out == "invalid: root missing\n");
  r = verdict("ratio 2/1\n0 1\n");
  CHECK(r.code == 1);
  CHECK(r.out.rfind("invalid: ratio mismatch", 0) == 0);
  r = verdict("ratio 1/1\n0 2\n");
  CHECK(r.code == 1);
  CHECK(r.out == "invalid: disconnected\n");
  r = verdict("ratio 1/1\n0 9\n");
  CHECK(r.code == 1);
  CHECK(r.out == "invalid: vertex 9 out of range\n");
  r = verdict("ratio 1/1\n0 1 1\n");
  CHECK(r.code == 1);
  CHECK(r.out == "invalid: duplicate vertex\n");
  r = verdict("ratio\n0\n");
  CHECK(r.code == 2);
}

TEST_CASE("generate, solve and check round trip for every algorithm") {
  const auto dir = scratch("roundtrip");
  const auto split = (dir / "split").string();
  const auto general = (dir / "general").string();
  const auto interval = (dir / "interval").string();
  REQUIRE(run({"gen", "split", "-n", "11", "--seed", "2", "--out", split}).code == 0);
  REQUIRE(run({"gen", "general", "-n", "11", "--density", "0.4", "--seed", "2", "--out", general}).code == 0);
  const auto iv = run({"gen", "interval", "-n", "10", "--seed", "2", "--out", interval});
  REQUIRE(iv.code == 0);
  CHECK(fs::exists(interval + ".intervals"));
  CHECK(fs::exists(interval + ".graph"));

  struct Case {
    std::string input;
    std::string algo;
  };
  const std::vector<Case> cases{
      {split + ".graph", "exact"},       {split + ".graph", "split"},
      {split + ".graph", "general"},     {general + ".graph", "exact"},
      {general + ".graph", "general"},   {interval + ".intervals", "interval"},
      {interval + ".intervals", "exact"}, {interval + ".intervals", "general"},
      {interval + ".graph", "exact"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.input);
    CAPTURE(c.algo);
    const auto sol = (dir / "out.sol").string();
    const auto s = run({"solve", c.input, "--algo", c.algo, "-o", sol});
    REQUIRE(s.code == 0);
    CHECK(slurp(sol).rfind("# algo " + c.algo, 0) == 0);
    const auto k = run({"check", c.input, sol});
    CHECK(k.code == 0);
    CHECK(k.out == "ok ratio " + field(s.out, "ratio") + "\n");
  }
}

TEST_CASE("generation and solving are byte-for-byte repeatable") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  for (const std::string kind : {"split", "general", "interval"}) {
    for (const auto& d : {a, b}) {
      REQUIRE(run({"gen", kind, "-n", "12", "--seed", "77", "--out", (d / kind).string()}).code == 0);
    }
    CHECK(slurp(a / (kind + ".graph")) == slurp(b / (kind + ".graph")));
  }
  CHECK(slurp(a / "interval.intervals") == slurp(b / "interval.intervals"));
  for (const std::string algo : {"exact", "split", "general"}) {
    for (const auto& d : {a, b}) {
      REQUIRE(run({"solve", (d / "split.graph").string(), "--algo", algo, "-o",
                   (d / (algo + ".sol")).string()}).code == 0);
    }
    CHECK(slurp(a / (algo + ".sol")) == slurp(b / (algo + ".sol")));
  }
}

TEST_CASE("exit codes") {
  const auto dir = scratch("codes");
  spit(dir / "bad.graph", "3 2 0\n0 1\n");
  CHECK(run({"solve", (dir / "bad.graph").string()}).code == 2);
  CHECK(run({"solve", (dir / "missing.graph").string()}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"solve", (dir / "bad.graph").string(), "--algo", "magic"}).code == 2);
  CHECK(run({}).code == 2);

  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("solve") != std::string::npos);
  CHECK(run({"solve", "--help"}).code == 0);

  spit(dir / "c5.graph", "5 5 0\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  const auto c5 = (dir / "c5.graph").string();
  CHECK(run({"solve", c5, "--algo", "split"}).code == 3);
  CHECK(run({"solve", c5, "--algo", "interval"}).code == 3);
  CHECK(run({"solve", c5, "--algo", "split", "--k", "0"}).code == 2);

  std::ostringstream path;
  path << "30 29 0\n";
  for (int i = 0; i + 1 < 30; ++i) path << i << ' ' << i + 1 << '\n';
  spit(dir / "long.graph", path.str());
  const auto big = (dir / "long.graph").string();
  const auto capped = run({"solve", big, "--algo", "exact"});
  CHECK(capped.code == 4);
  CHECK(capped.err.find("MRCE_ORACLE_CAP") != std::string::npos);
  ::setenv("MRCE_ORACLE_CAP", "30", 1);
  const auto forced = run({"solve", big, "--algo", "exact"});
  ::unsetenv("MRCE_ORACLE_CAP");
  CHECK(forced.code == 0);
  CHECK(field(forced.out, "ratio") == "2/1");
}

TEST_CASE("audit reports quotients against the guarantee") {
  const auto dir = scratch("audit");
  for (int seed = 1; seed <= 6; ++seed) {
    const auto s = std::to_string(seed);
    REQUIRE(run({"gen", "interval", "-n", "12", "--seed", s, "--out", (dir / ("i" + s)).string()}).code == 0);
  }
  const auto iv = run({"audit", dir.string(), "--algo", "interval"});
  CHECK(iv.code == 0);
  CHECK(iv.out.rfind("instance,n,exact,algo,quotient\n", 0) == 0);
  CHECK(iv.out.find("# audited 6, skipped 0") != std::string::npos);
  CHECK(iv.out.find("# min quotient 1/1 ") != std::string::npos);
  CHECK(iv.out.find("# result PASS") != std::string::npos);

  const auto split_dir = scratch("audit_split");
  for (int seed = 1; seed <= 6; ++seed) {
    const auto s = std::to_string(seed);
    REQUIRE(run({"gen", "split", "-n", "12", "--seed", s, "--out", (split_dir / ("s" + s)).string()}).code == 0);
  }
  spit(split_dir / "c5.graph", "5 5 0\n0 1\n1 2\n2 3\n3 4\n0 4\n");
  const auto sp = run({"audit", split_dir.string(), "--algo", "split", "--k", "2"});
  CHECK(sp.code == 0);
  CHECK(sp.out.find("# audited 6, skipped 1") != std::string::npos);
  CHECK(sp.out.find("# threshold 1/2 ") != std::string::npos);
  CHECK(sp.err.find("c5.graph") != std::string::npos);

  const auto gen = run({"audit", split_dir.string(), "--algo", "general"});
  CHECK(gen.code == 0);
  CHECK(gen.out.find("# threshold 21/200 (0.105)") != std::string::npos);
  CHECK(gen.out.find("# audited 7, skipped 0") != std::string::npos);

  CHECK(run({"audit", (dir / "nope").string(), "--algo", "general"}).code == 2);
}
