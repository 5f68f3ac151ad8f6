#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cavjj/config.hpp"
#include "cavjj/errors.hpp"
#include "cavjj/output.hpp"

using namespace cavjj;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto d = fs::temp_directory_path() / ("cavjj_test_" + name);
  fs::remove_all(d);
  return d;
}

}  // namespace

TEST_CASE("reduced block with top-level options") {
  const auto cfg = parse_config_text(
      "command = contours\n"
      "nz = 201\n"
      "out = results\n"
      "format = json\n"
      "[reduced]\n"
      "r = 3\n"
      "r_bc = 0.1\n"
      "lambda = 0.1\n"
      "a_tilde = 0.02\n"
      "b = -0.65\n"
      "c = 0.07\n");
  CHECK(cfg.subcommand == "contours");
  CHECK(cfg.out_dir == "results");
  CHECK(cfg.format == OutputFormat::json);
  CHECK(cfg.option_int("nz", 0) == 201);
  CHECK(cfg.option_double("missing", 2.5) == 2.5);
  const auto rp = cfg.reduced();
  CHECK(rp.r_b == 3.0);
  CHECK(rp.r_c == 3.0);
  CHECK(rp.lambda == 0.1);
  CHECK(rp.a_tilde() == doctest::Approx(0.02));
  CHECK(rp.b_detune == -0.65);
  CHECK(rp.e_mirror_detune == 1.0);
}

TEST_CASE("physical block reduces") {
  const auto cfg = parse_config_text(
      "[physical]\nomega = 0.5\nn = 100\nu0 = 2\nkappa = 100\nv = 0.03\nv_prime = 0.001\ns = 0.001\n"
      "eta = 50\nomega_p = 170\nomega_m = 270\n");
  REQUIRE(std::holds_alternative<PhysicalParams>(cfg.params));
  const auto rp = cfg.reduced();
  CHECK(rp.r_b == doctest::Approx(3.0));
  CHECK(rp.b_detune == doctest::Approx(-0.3));
}

TEST_CASE("config errors are usage errors") {
  CHECK_THROWS_AS((void)parse_config_text("[reduced]\nr = 1\n[physical]\nomega = 1\n"), UsageError);
  CHECK_THROWS_AS((void)parse_config_text("[reduced]\nbogus = 1\n"), UsageError);
  CHECK_THROWS_AS((void)parse_config_text("[reduced]\nr = abc\n"), UsageError);
  CHECK_THROWS_AS((void)parse_config_text("[other]\nr = 1\n"), UsageError);
  CHECK_THROWS_AS((void)parse_config_text("format = xml\n"), UsageError);
  CHECK_THROWS_AS((void)parse_config_text("nz = 3.5\n").option_int("nz", 0), UsageError);
  CHECK_THROWS_AS((void)load_config("/nonexistent/cavjj.cfg"), UsageError);
  CHECK_THROWS_AS((void)RunConfig{}.reduced(), UsageError);
}

TEST_CASE("overrides") {
  auto cfg = parse_config_text("[reduced]\nr = 3\n");
  apply_override(cfg, "reduced.lambda=3.87");
  apply_override(cfg, "nz=11");
  apply_override(cfg, "reduced.r_c=0.5");
  CHECK(cfg.reduced().lambda == 3.87);
  CHECK(cfg.reduced().r_c == 0.5);
  CHECK(cfg.reduced().r_b == 3.0);
  CHECK(cfg.option("nz") == "11");
  CHECK_THROWS_AS(apply_override(cfg, "physical.omega=1"), UsageError);
  CHECK_THROWS_AS(apply_override(cfg, "novalue"), UsageError);

  RunConfig empty;
  apply_override(empty, "physical.omega=2");
  CHECK(std::get<PhysicalParams>(empty.params).omega == 2.0);
}

TEST_CASE("formats") {
  for (auto f : {OutputFormat::csv, OutputFormat::json, OutputFormat::binary_matrix}) {
    CHECK(parse_format(to_string(f)) == f);
  }
  CHECK_THROWS_AS((void)parse_format("hdf5"), UsageError);
}

TEST_CASE("number formatting round-trips") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(-0.65) == "-0.65");
  CHECK(format_number(3.0) == "3");
  for (double v : {1.0 / 3.0, 2.718281828459045, 1e-300, -6.02e23}) {
    CHECK(std::stod(format_number(v)) == v);
  }
}

TEST_CASE("csv table with metadata header and sidecar") {
  const auto dir = scratch("csv");
  Table t{{"t", "name", "n"}, {}};
  t.add({0.5, std::string("x"), 3L});
  t.add({1.0, std::string("y"), -1L});
  Meta m;
  m["kind"] = "demo";
  m["params"]["r_b"] = 3.0;
  m["params"]["lambda"] = 0.1;
  const auto files = write_table(dir / "sub" / "table", t, m, OutputFormat::csv);
  REQUIRE(files.size() == 2);
  CHECK(slurp(files[0]) ==
        "# kind=demo\n# params.r_b=3\n# params.lambda=0.1\nt,name,n\n0.5,x,3\n1,y,-1\n");
  const auto side = nlohmann::json::parse(slurp(files[1]));
  CHECK(side["row_count"] == 2);
  CHECK(side["columns"][1] == "name");
  CHECK(side["params"]["lambda"] == 0.1);
  fs::remove_all(dir);
}

TEST_CASE("json table") {
  const auto dir = scratch("json");
  Table t{{"a", "b"}, {}};
  t.add({1.5, 2L});
  const auto files = write_table(dir / "t", t, Meta{{"k", 1}}, OutputFormat::json);
  REQUIRE(files.size() == 1);
  const auto doc = nlohmann::json::parse(slurp(files[0]));
  CHECK(doc["meta"]["k"] == 1);
  CHECK(doc["rows"][0][0] == 1.5);
  CHECK(doc["rows"][0][1] == 2);
  fs::remove_all(dir);
}

TEST_CASE("field writers") {
  const auto dir = scratch("field");
  ScalarField f;
  f.spec.nz = 2;
  f.spec.nphi = 3;
  f.values = {1, 2, 3, 4, 5, 6.25};

  const auto bin = write_field(dir / "f", f, Meta{{"k", "v"}}, OutputFormat::binary_matrix);
  const std::string raw = slurp(bin.at(0));
  const auto nl = raw.find('\n');
  const auto head = nlohmann::json::parse(raw.substr(0, nl));
  CHECK(head["nz"] == 2);
  CHECK(head["nphi"] == 3);
  CHECK(head["dtype"] == "float64-le");
  REQUIRE(raw.size() - nl - 1 == 6 * sizeof(double));
  double back[6];
  std::memcpy(back, raw.data() + nl + 1, sizeof back);
  CHECK(back[5] == 6.25);
  CHECK(back[3] == 4.0);

  const auto csv = write_field(dir / "g", f, Meta{}, OutputFormat::csv);
  const std::string text = slurp(csv.at(0));
  CHECK(text.find("z,phi,energy_b\n") != std::string::npos);
  CHECK(text.find("0.999,6.283185307179586,6.25\n") != std::string::npos);

  const auto js = write_field(dir / "h", f, Meta{}, OutputFormat::json);
  const auto doc = nlohmann::json::parse(slurp(js.at(0)));
  CHECK(doc["values"][1][2] == 6.25);
  CHECK(doc["z"].size() == 2);
  fs::remove_all(dir);
}

TEST_CASE("unwritable output directory") {
  const auto dir = scratch("blocked");
  fs::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  CHECK_THROWS_AS(ensure_dir(dir / "file" / "sub"), UsageError);
  fs::remove_all(dir);
}
