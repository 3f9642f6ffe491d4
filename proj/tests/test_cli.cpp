#include <doctest.h>

#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = tka::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(TKA_TEST_DATA) + "/" + name; }

std::string without_timing(const std::string& s) {
  std::istringstream in(s);
  std::string line, kept;
  while (std::getline(in, line)) {
    if (line.rfind("time_ms=", 0) != 0) kept += line + "\n";
  }
  return kept;
}

std::filesystem::path emitted_corpus() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("tka_cli_corpus_" + std::to_string(::getpid()));
    std::filesystem::remove_all(d);
    REQUIRE(run({"corpus", "--emit", d.string()}).code == 0);
    return d;
  }();
  return dir;
}

std::vector<std::string> corpus_files() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(emitted_corpus())) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

}  // namespace

TEST_CASE("compute on the unknot") {
  Result r = run({"compute", (emitted_corpus() / "unknot.tkd").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("delta      0\n") != std::string::npos);
  CHECK(r.out.find("sanity     n/a") != std::string::npos);
}

TEST_CASE("compute reports the virtual trefoil") {
  Result r = run({"--machine", "compute", (emitted_corpus() / "virtual_trefoil.tkd").string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("delta=t^2*x1^2*x2 - t^2*x1 - t*x1*x2 + t*x1 + x1*x2 - 1\n") != std::string::npos);
  CHECK(r.out.find("sanity=ok\n") != std::string::npos);
  CHECK(r.out.find("time_ms=") != std::string::npos);
  CHECK(run({"compute", (emitted_corpus() / "virtual_trefoil.tkd").string()}).out.find("time") == std::string::npos);
}

TEST_CASE("check-concordance") {
  Result neg = run({"check-concordance", "--poly", "t^2-t+1", "1"});
  CHECK(neg.code == 1);
  CHECK(neg.out.find("verdict       fail") != std::string::npos);
  CHECK(neg.out.find("odd-self-conjugate") != std::string::npos);

  Result parens = run({"--machine", "check-concordance", "--poly", "(t - 2)", "1"});
  CHECK(parens.code == 2);  // the grammar has no parentheses
  Result pair = run({"--machine", "check-concordance", "--poly", "2*t^2 - 5*t + 2", "1"});
  CHECK(pair.code == 0);
  CHECK(pair.out.find("verdict=pass\n") != std::string::npos);
  CHECK(pair.out.find("witness_p=") != std::string::npos);

  Result slice = run({"--machine", "check-concordance", (emitted_corpus() / "virtual_trefoil.tkd").string(),
                      (emitted_corpus() / "unknot.tkd").string()});
  CHECK(slice.code == 1);
  CHECK(slice.out.find("reason=zero-mismatch\n") != std::string::npos);

  Result genus = run({"check-concordance", (emitted_corpus() / "virtual_trefoil.tkd").string(),
                      (emitted_corpus() / "virtual_trefoil_g2.tkd").string()});
  CHECK(genus.code == 2);
  CHECK(run({"check-concordance", "missing.tkd", "also_missing.tkd"}).code == 2);
}

TEST_CASE("validate, factor and torsion") {
  CHECK(run({"validate", (emitted_corpus() / "virtual_trefoil.tkd").string()}).code == 0);
  Result bad = run({"validate", data("two_term.tkc")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);

  Result f = run({"--machine", "factor", "t^2 - 1"});
  CHECK(f.code == 0);
  CHECK(f.out.find("factor=t - 1\n") != std::string::npos);
  CHECK(f.out.find("factor=t + 1\n") != std::string::npos);
  CHECK(run({"factor", "0"}).code == 2);
  CHECK(run({"factor", "t +"}).code == 2);

  Result t = run({"--machine", "torsion", data("two_term.tkc")});
  CHECK(t.code == 0);
  CHECK(t.out.find("numerator=t - 1\n") != std::string::npos);
  Result na = run({"--machine", "torsion", data("not_acyclic.tkc")});
  CHECK(na.code == 1);
  CHECK(na.out.find("degree=0\n") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"compute", "--bogus", "x"}).code == 2);
  Result help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check-concordance") != std::string::npos);
}

TEST_CASE("every corpus file validates and computes") {
  std::vector<std::string> files = corpus_files();
  CHECK(files.size() >= 20);
  std::vector<std::string> args = {"validate"};
  args.insert(args.end(), files.begin(), files.end());
  CHECK(run(args).code == 0);
  args[0] = "compute";
  CHECK(run(args).code == 0);
}

TEST_CASE("reports are byte-identical across runs and thread counts") {
  std::vector<std::string> args = {"--machine", "compute"};
  for (const auto& f : corpus_files()) args.push_back(f);
  const std::string one = without_timing(run(args).out);
  CHECK(one == without_timing(run(args).out));
  setenv("TKA_THREADS", "4", 1);
  const std::string four = without_timing(run(args).out);
  unsetenv("TKA_THREADS");
  CHECK(one == four);
}
