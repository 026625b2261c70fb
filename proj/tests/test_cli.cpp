#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>

#include "chainops/cli.hpp"
#include "fixtures.hpp"

using namespace chainops;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code;
  std::string out, err;
};

CliResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "chainops");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  fs::path path;
  TempFile(const std::string& name, const std::string& content)
      : path(fs::temp_directory_path() / ("chainops_test_" + name)) {
    std::ofstream f(path, std::ios::binary);
    f << content;
  }
  ~TempFile() { fs::remove(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST_CASE("cli props") {
  TempFile table("min3.txt", format_table(min_table(3)));
  auto r = run_cli({"props", "--table", table.str()});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("associative:        yes") != std::string::npos);
  CHECK(r.out.find("neutral:            3") != std::string::npos);

  auto rj = run_cli({"props", "--table", table.str(), "--json"});
  CHECK(rj.exit_code == 0);
  auto j = Json::parse(rj.out);
  CHECK(j["associative"] == true);
  CHECK(j["neutral"] == 3);
  CHECK(j["witnesses"].empty());

  TempFile bad("figa.txt", format_table(fixtures::fig_a_table()));
  auto rb = run_cli({"props", "--table", bad.str()});
  CHECK(rb.exit_code == 0);
  CHECK(rb.out.find("associative:        no") != std::string::npos);
  CHECK(rb.out.find("picture case (a)") != std::string::npos);
}

TEST_CASE("cli props accepts JSON tables") {
  TempFile table("min3.json", table_to_json(min_table(3)).dump());
  auto r = run_cli({"props", "--table", table.str(), "--json"});
  CHECK(r.exit_code == 0);
  CHECK(Json::parse(r.out)["k"] == 3);
}

TEST_CASE("cli synthesize and decompose invert each other byte for byte") {
  for (std::string spec : {"k=6; R D Gx R", "k=3; ; proj=x", "k=3; R R", "k=4; Gy; proj=y"}) {
    auto synth = run_cli({"synthesize", spec});
    REQUIRE(synth.exit_code == 0);
    TempFile table("roundtrip.txt", synth.out);
    auto dec = run_cli({"decompose", "--table", table.str()});
    REQUIRE(dec.exit_code == 0);
    CHECK(dec.out == spec + "\n");
  }

  auto r = run_cli({"synthesize", "k=6; R D Gx R"});
  CHECK(r.out == format_table(fixtures::l6_figure_table()));
}

TEST_CASE("cli enumerate") {
  auto r = run_cli({"enumerate", "--k", "3", "--filter", "assoc"});
  CHECK(r.exit_code == 0);
  // 12 tables of 4 lines each, blank line separated
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12 * 4 + 11);

  auto limited = run_cli({"enumerate", "--k", "3", "--filter", "assoc", "--limit", "2"});
  CHECK(std::count(limited.out.begin(), limited.out.end(), '\n') == 2 * 4 + 1);
  CHECK(limited.out.substr(0, 2) == "3\n");

  auto json = run_cli({"enumerate", "--k", "2", "--format", "json"});
  CHECK(Json::parse(json.out).size() == 4);

  auto bad = run_cli({"enumerate", "--k", "3", "--filter", "assoc,unknown"});
  CHECK(bad.exit_code == 3);
  auto bound = run_cli({"enumerate", "--k", "9"});
  CHECK(bound.exit_code == 3);
}

TEST_CASE("cli count") {
  auto r = run_cli({"count", "--kmax", "10"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("A: 1 4 12 34 94 258 706 1930 5274 14410\n") != std::string::npos);

  auto csv = run_cli({"count", "--kmax", "3", "--format", "csv"});
  CHECK(csv.out.find("k,A,B,C,D,provenance\n") == 0);
  CHECK(csv.out.find("3,12,6,10,4,recurrence\n") != std::string::npos);

  auto brute = run_cli({"count", "--kmax", "3", "--format", "csv", "--brute"});
  CHECK(brute.out.find("3,12,6,10,4,brute-force\n") != std::string::npos);

  auto json = run_cli({"count", "--kmax", "45", "--format", "json"});
  auto j = Json::parse(json.out);
  CHECK(j["entries"][44]["provenance"] == "recurrence");
  CHECK(j["entries"][44]["B"].get<std::string>().size() >= 20);  // beyond 64-bit
}

TEST_CASE("cli verify") {
  auto r = run_cli({"verify", "--kmax", "2"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("[PASS] tnumb-list") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
  CHECK(r.out.find("theorem checks passed") != std::string::npos);
}

TEST_CASE("cli render") {
  TempFile table("min2.txt", format_table(min_table(2)));
  auto r = run_cli({"render", "--table", table.str()});
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 2\n|*\n1-1\n");

  auto svg = run_cli({"render", "--table", table.str(), "--format", "svg", "--cell-size", "16"});
  CHECK(svg.exit_code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);

  TempFile px3("px3.txt", format_table(proj_x_table(3)));
  auto overlay = run_cli({"render", "--table", px3.str(), "--path", "k=3; ; proj=x"});
  CHECK(overlay.exit_code == 0);
  CHECK(overlay.out.find('P') != std::string::npos);

  auto mismatch = run_cli({"render", "--table", px3.str(), "--path", "k=4; R R R"});
  CHECK(mismatch.exit_code == 3);
}

TEST_CASE("cli nary") {
  TempFile g("min2.txt", format_table(min_table(2)));
  auto derive_out = run_cli({"nary", "derive", "--table", g.str(), "--arity", "3"});
  CHECK(derive_out.exit_code == 0);
  CHECK(derive_out.out.substr(0, 4) == "3 2\n");
  CHECK(derive_out.out.find("1 1 1 1 1 1 1 2") != std::string::npos);

  auto parity = run_cli({"nary", "parity", "--arity", "3"});
  CHECK(parity.out == "3 2\n1 2 2 1 2 1 1 2\n");

  TempFile parity_file("parity.txt", parity.out);
  auto reduce_out = run_cli({"nary", "reduce", "--table", parity_file.str()});
  CHECK(reduce_out.exit_code == 0);
  CHECK(reduce_out.out.find("not reducible") != std::string::npos);

  auto props = run_cli({"nary", "props", "--table", parity_file.str(), "--json"});
  auto j = Json::parse(props.out);
  CHECK(j["associative"] == true);
  CHECK(j["quasitrivial"] == true);
  CHECK(j["monotone"] == false);
  CHECK(j["nondecreasing"] == false);

  TempFile mid("mid.txt", "3 2\n1 1 2 2 1 1 2 2\n");  // middle projection
  auto reduce_mid = run_cli({"nary", "reduce", "--table", mid.str()});
  CHECK(reduce_mid.exit_code == 3);  // precondition: not associative

  TempFile tmin("tmin.txt", format_nary_table(derive(min_table(3), 3)));
  auto reduce_min = run_cli({"nary", "reduce", "--table", tmin.str()});
  CHECK(reduce_min.exit_code == 0);
  CHECK(reduce_min.out.find("reducible\n3\n1 1 1\n1 2 2\n1 2 3\n") == 0);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"bogus"}).exit_code == 2);
  CHECK(run_cli({"props"}).exit_code == 2);  // missing --table
  CHECK(run_cli({"count", "--kmax", "3", "--format", "yaml"}).exit_code == 2);
  CHECK(run_cli({"props", "--table", "/nonexistent/table.txt"}).exit_code == 3);
  CHECK(run_cli({"synthesize", "k=3; R Q"}).exit_code == 3);

  TempFile bad("figa2.txt", format_table(fixtures::fig_a_table()));
  CHECK(run_cli({"decompose", "--table", bad.str()}).exit_code == 3);

  CHECK(run_cli({"--help"}).exit_code == 0);
}
