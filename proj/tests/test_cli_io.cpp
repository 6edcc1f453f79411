#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "golodlab/cli.hpp"
#include "golodlab/errors.hpp"
#include "golodlab/io.hpp"
#include "golodlab/parallel.hpp"
#include "oracles.hpp"

using namespace golod;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "golodlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("golodlab_test_" + name);
  std::ofstream(path) << content;
  return path;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("facet-lines parsing") {
  const auto tri = parse_complex("1 2\n2 3\n3 1\n", InputFormat::facet_lines);
  CHECK(tri.num_vertices() == 3);
  CHECK(tri.f_vector() == std::vector<std::size_t>{3, 3});
  const auto with_comments = parse_complex("# a comment\n1 2   # trailing\n\n2 3\n3 1\n", InputFormat::facet_lines);
  CHECK(with_comments == tri);
  const auto dup = parse_complex("1 2\n2 1\n1 2\n2 3\n", InputFormat::facet_lines);
  CHECK(dup.facets().size() == 2);
}

TEST_CASE("facet-json parsing") {
  const auto d2 = parse_complex(R"({"vertices":[1,2,3],"facets":[[1,2,3]]})", InputFormat::facet_json);
  CHECK(d2.f_vector() == std::vector<std::size_t>{3, 3, 1});
  const auto extra = parse_complex(R"({"vertices":[1,2,3,7],"facets":[[1,2]]})", InputFormat::facet_json);
  CHECK(extra.num_vertices() == 4);
  CHECK(detect_format("  {\"facets\": []}") == InputFormat::facet_json);
  CHECK(detect_format("1 2\n") == InputFormat::facet_lines);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_complex("1 2\n2 x\n", InputFormat::facet_lines);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_complex("1 2 1\n", InputFormat::facet_lines), ParseError);
  CHECK_THROWS_AS(parse_complex("# nothing\n", InputFormat::facet_lines), ParseError);
  CHECK_THROWS_AS(parse_complex(R"({"vertices":[1,2],"facets":[[1,3]]})", InputFormat::facet_json), ParseError);
  CHECK_THROWS_AS(parse_complex(R"({"facets":[[1,2]})", InputFormat::facet_json), ParseError);
  CHECK_THROWS_AS(parse_complex(R"({"facets":[["a"]]})", InputFormat::facet_json), ParseError);
  CHECK_THROWS_AS(parse_complex(R"([1,2])", InputFormat::facet_json), ParseError);
}

TEST_CASE("emitted complexes round-trip through the parser") {
  for (const auto& e : catalog_entries()) {
    const auto k = load_catalog(e.name);
    CHECK_MESSAGE(parse_complex(emit_facet_lines(k), InputFormat::facet_lines) == k, e.name);
    CHECK_MESSAGE(parse_complex(emit_facet_json(k).dump(), InputFormat::facet_json) == k, e.name);
    CHECK(emit_facet_lines(parse_complex(emit_facet_lines(k), InputFormat::facet_lines)) == emit_facet_lines(k));
  }
}

TEST_CASE("catalog contents and self-validation") {
  std::set<std::string> names;
  for (const auto& e : catalog_entries()) {
    names.insert(e.name);
    CHECK_MESSAGE(validate_entry(e).empty(), e.name, ": ", validate_entry(e));
    CHECK_MESSAGE(oracle::betti(e.facets, 0) == e.betti_q, e.name);
    CHECK_MESSAGE(oracle::betti(e.facets, 2) == e.betti_f2, e.name);
    long long chi = 0;
    for (const auto& f : oracle::closure(e.facets)) chi += f.size() % 2 ? 1 : -1;
    CHECK_MESSAGE(chi == e.euler_characteristic, e.name);
  }
  for (const char* required : {"point", "two-points", "triangle", "rp2-6", "torus-7"}) CHECK(names.count(required));
  for (int n = 4; n <= 12; ++n) CHECK(names.count("cycle-" + std::to_string(n)));
  for (int n = 1; n <= 6; ++n) {
    CHECK(names.count("bd-simplex-" + std::to_string(n)));
    CHECK(names.count("simplex-" + std::to_string(n)));
  }
}

TEST_CASE("catalog expectations") {
  auto find = [](const std::string& name) {
    for (const auto& e : catalog_entries())
      if (e.name == name) return e;
    throw std::runtime_error(name);
  };
  CHECK(find("triangle").betti_q == std::vector<int>{1, 1});
  const auto torus = find("torus-7");
  CHECK(torus.euler_characteristic == 0);
  CHECK(torus.betti_q[1] == 2);
  CHECK(torus.orientable);
  const auto rp2 = find("rp2-6");
  CHECK(rp2.euler_characteristic == 1);
  CHECK(rp2.betti_f2[1] == 1);
  CHECK(rp2.betti_q[2] == 0);
  CHECK_FALSE(rp2.orientable);

  CatalogEntry broken = rp2;
  broken.facets.pop_back();
  CHECK_FALSE(validate_entry(broken).empty());
  CatalogEntry lying = torus;
  lying.orientable = false;
  CHECK_FALSE(validate_entry(lying).empty());
  CHECK_THROWS_AS(load_catalog("no-such-complex"), DomainError);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"tight", "--bogus", "catalog:triangle"}).code == 1);
  CHECK(run({"homology", "catalog:no-such-complex"}).code == 1);
  CHECK(run({"homology", "/nonexistent/file.txt"}).code == 1);
  CHECK(run({"homology", "--field", "f4", "catalog:triangle"}).code == 1);
  const auto bad = write_temp("bad.txt", "1 2\n2 x\n");
  const auto r = run({"homology", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);
  const auto non_tight = run({"certify-golod", "catalog:cycle-4"});
  CHECK(non_tight.code == 0);
  CHECK(Json::parse(non_tight.out)["certificate"]["Q"]["status"] == "not tight");
}

TEST_CASE("verdicts through the command line") {
  const auto tight = run({"tight", "--field", "f2", "catalog:rp2-6"});
  CHECK(tight.code == 0);
  const auto tj = Json::parse(tight.out);
  CHECK(tj["tight"]["F2"]["verdict"] == true);

  const auto cert = run({"certify-golod", "--field", "f2", "--max-arity", "3", "catalog:rp2-6"});
  CHECK(cert.code == 0);
  const auto cj = Json::parse(cert.out);
  CHECK(cj["certificate"]["F2"]["verified"] == true);

  const auto text = run({"tight", "--format", "text", "catalog:cycle-4"});
  CHECK(text.code == 0);
  CHECK(text.out.find("{1,3}") != std::string::npos);

  const auto file = write_temp("tri.txt", "1 2\n2 3\n3 1\n");
  const auto hom = run({"homology", "--field", "q", file.string()});
  CHECK(hom.code == 0);
  CHECK(Json::parse(hom.out)["homology"]["Q"]["betti"] == Json::array({1, 1}));

  const auto massey = run({"massey-triple", "--field", "f2", "--class", "1,4:0:0", "--class", "2,5:0:0", "--class",
                           "3,6:0:0", "catalog:cycle-6"});
  CHECK(massey.code == 0);
  CHECK(Json::parse(massey.out)["defined"] == true);

  const auto wg = run({"weak-golod", "catalog:cycle-4"});
  CHECK(wg.code == 0);
  CHECK(Json::parse(wg.out)["weak_golod"]["Q"]["verdict"] == false);
}

TEST_CASE("output file and catalog listing") {
  const auto path = std::filesystem::temp_directory_path() / "golodlab_test_out.json";
  std::filesystem::remove(path);
  const auto r = run({"report", "--field", "q", "--out", path.string(), "catalog:bd-simplex-2"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const auto j = Json::parse(slurp(path));
  std::vector<std::string> keys;
  for (const auto& [k, _] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"name", "fields", "f_vector", "betti", "tight", "weak_golod", "certificate",
                                         "annotations", "tool_version", "schema_version"});
  CHECK(j["schema_version"] == kSchemaVersion);

  const auto cat = run({"catalog"});
  CHECK(cat.code == 0);
  CHECK(Json::parse(cat.out)["entries"].size() == catalog_entries().size());
}

TEST_CASE("identity sweep through the command line") {
  const auto r = run({"verify-identities", "--field", "f2", "--cases", "20", "--seed", "7", "catalog:cycle-4"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["all_zero"] == true);
}

TEST_CASE("job count resolution") {
  CHECK(resolve_jobs(3) == 3);
  setenv("GOLODLAB_JOBS", "5", 1);
  CHECK(resolve_jobs(std::nullopt) == 5);
  CHECK(resolve_jobs(2) == 2);
  unsetenv("GOLODLAB_JOBS");
  CHECK(resolve_jobs(std::nullopt) >= 1);
}

TEST_CASE("reports are deterministic across runs and job counts") {
  for (const char* name : {"catalog:rp2-6", "catalog:cycle-6", "catalog:three-edges"}) {
    const auto a = run({"report", "--field", "q", "--field", "f2", "--jobs", "1", name});
    const auto b = run({"report", "--field", "q", "--field", "f2", "--jobs", "1", name});
    const auto c = run({"report", "--field", "q", "--field", "f2", "--jobs", "8", name});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
  }
}

TEST_CASE("text reports name the failing subset") {
  const auto r = run({"report", "--format", "text", "--field", "q", "catalog:cycle-5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("{1,3}") != std::string::npos);
}
