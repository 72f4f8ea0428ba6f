#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sg/config.hpp"
#include "sg/errors.hpp"
#include "sg/io.hpp"
#include "support.hpp"

namespace sg {
namespace {

namespace fs = std::filesystem;

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sg_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::vector<std::string> lines_of(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

using Diagnostics = TempDir;
using Snapshots = TempDir;

TEST(FormatDouble, RoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 14.310835055997712, 0.0}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST_F(Diagnostics, EmptyIsHeaderOnly) {
  emit_diagnostics({}, path("d.csv"));
  const auto l = lines_of(path("d.csv"));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l[0], "step,time,energy,energy_error,multiplier,newton_iters");
  EXPECT_TRUE(read_diagnostics(path("d.csv")).empty());
}

TEST_F(Diagnostics, ThreeStepsFourLinesAndExactRoundTrip) {
  const std::vector<StepDiagnostics> d{{1, 0.01, 14.310835055997712, 1.7e-15, -3.2e-8, 2},
                                       {2, 0.02, 14.310835055997714, 3.5e-15, 1.0 / 3.0, 1},
                                       {3, 0.03, 14.31083505599771, 0.0, 0.0, 0}};
  emit_diagnostics(d, path("d.csv"));
  EXPECT_EQ(lines_of(path("d.csv")).size(), 4u);
  const auto back = read_diagnostics(path("d.csv"));
  ASSERT_EQ(back.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(back[i].step, d[i].step);
    EXPECT_EQ(back[i].time, d[i].time);
    EXPECT_EQ(back[i].energy, d[i].energy);
    EXPECT_EQ(back[i].energy_error, d[i].energy_error);
    EXPECT_EQ(back[i].multiplier, d[i].multiplier);
    EXPECT_EQ(back[i].newton_iters, d[i].newton_iters);
  }
}

TEST_F(Diagnostics, AbortMarkerIsTrailingComment) {
  emit_diagnostics({{1, 0.1, 1.0, 0.0, 0.0, 1}}, path("d.csv"), 2);
  const auto l = lines_of(path("d.csv"));
  ASSERT_EQ(l.size(), 3u);
  EXPECT_EQ(l[2], "# aborted at step 2");
  EXPECT_EQ(read_diagnostics(path("d.csv")).size(), 1u);
}

TEST_F(Diagnostics, IoErrorsCarryPath) {
  const std::string bad = path("missing/dir/d.csv");
  try {
    emit_diagnostics({}, bad);
    FAIL();
  } catch (const IoError& e) {
    EXPECT_EQ(e.path(), bad);
  }
  EXPECT_THROW(read_diagnostics(path("nope.csv")), IoError);
  std::ofstream(path("junk.csv")) << "a,b\n";
  EXPECT_THROW(read_diagnostics(path("junk.csv")), IoError);
}

TEST_F(Snapshots, ZeroStateWritesZeros) {
  const GridPtr g = make_grid({-1.0, 1.0, 0.0, 2.0}, GridFamily::MidPoint, 3, 4);
  emit_snapshot({Field(g), Field(g)}, 0.5, path("s"));
  for (const char* suffix : {"s_u.csv", "s_v.csv"}) {
    const Snapshot s = read_field_snapshot(path(suffix));
    EXPECT_EQ(s.field.max_abs(), 0.0);
    EXPECT_EQ(s.t, 0.5);
  }
}

TEST_F(Snapshots, HeaderCarriesMetadata) {
  const GridPtr g = make_grid({-1.0, 1.0, 0.0, 2.0}, GridFamily::Regular, 3, 4);
  write_field_snapshot(Field(g, 1.0), 0.1, path("f.csv"));
  const auto l = lines_of(path("f.csv"));
  ASSERT_EQ(l.size(), 1u + 4u);
  EXPECT_EQ(l[0], "# t=0.10000000000000001 family=regular nx=3 ny=4 a=-1 b=1 c=0 d=2");
  EXPECT_EQ(std::count(l[1].begin(), l[1].end(), ','), 4);
}

TEST_F(Snapshots, ReloadReproducesField) {
  for (GridFamily f : {GridFamily::MidPoint, GridFamily::Regular}) {
    const GridPtr g = make_grid({-1.5, 2.0, 0.0, 1.0}, f, 7, 5);
    const Field u = test::random_field(g, 3);
    write_field_snapshot(u, 1.25, path("f.csv"));
    const Snapshot s = read_field_snapshot(path("f.csv"));
    EXPECT_EQ(s.t, 1.25);
    EXPECT_TRUE(s.field.grid().same_layout(*g));
    EXPECT_EQ(s.field.data(), u.data());
  }
}

TEST_F(Snapshots, MalformedFilesRejected) {
  std::ofstream(path("a.csv")) << "0,1\n";
  EXPECT_THROW(read_field_snapshot(path("a.csv")), IoError);
  std::ofstream(path("b.csv")) << "# t=0 family=mid nx=2 ny=1 a=0 b=1 c=0 d=1\n1\n";
  EXPECT_THROW(read_field_snapshot(path("b.csv")), IoError);
}

TEST(ConvergenceCsv, EmptyOrderOnFirstRow) {
  ConvergenceTable t;
  t.rows = {{0.1, 1e-3, 2e-3, std::nullopt, std::nullopt}, {0.05, 2.5e-4, 5e-4, 2.0, 2.0}};
  std::istringstream in(convergence_csv(t));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "resolution,l2,linf,order_l2,order_linf");
  std::getline(in, line);
  EXPECT_EQ(line, "0.10000000000000001,0.001,0.002,,");
  std::getline(in, line);
  EXPECT_EQ(line, "0.050000000000000003,0.00025000000000000001,0.00050000000000000001,2,2");
}

TEST(Config, SchemaInstanceWithDefaults) {
  const RunConfig c = parse_config(
      R"({"case":"breather","scheme":"pepm","nx":256,"ny":1,"tau":0.01,"t_end":1.0})");
  EXPECT_EQ(c.case_spec.preset, "breather");
  EXPECT_EQ(c.scheme, Scheme::Pepm);
  EXPECT_EQ(c.grid, GridFamily::MidPoint);
  EXPECT_EQ(c.g, GChoice::G1);
  EXPECT_EQ(*c.nx, 256u);
  EXPECT_EQ(*c.ny, 1u);
  EXPECT_EQ(*c.tau, 0.01);
  EXPECT_EQ(*c.t_end, 1.0);
  EXPECT_EQ(c.tol, 1e-14);
  EXPECT_TRUE(c.snapshot_times.empty());
  EXPECT_EQ(c.out_dir, ".");
}

std::string error_key(const std::string& source) {
  try {
    parse_config(source);
  } catch (const ConfigError& e) {
    return e.key();
  }
  return "";
}

TEST(Config, ErrorsNameTheKey) {
  EXPECT_EQ(error_key(R"({"tau":-1})"), "tau");
  EXPECT_EQ(error_key(R"({"case":"breather"})"), "scheme");
  EXPECT_EQ(error_key(R"({"scheme":"svm"})"), "case");
  EXPECT_EQ(error_key(R"({"case":"breather","scheme":"rk4"})"), "scheme");
  EXPECT_EQ(error_key(R"({"case":"breather","scheme":"pepm","nx":0})"), "nx");
  EXPECT_EQ(error_key(R"({"case":"breather","scheme":"pepm","nx":12.5})"), "nx");
  EXPECT_EQ(error_key(R"({"case":"breather","scheme":"pepm","grid":"hex"})"), "grid");
  EXPECT_EQ(error_key(R"({"case":"breather","scheme":"pepm","colour":1})"), "colour");
  EXPECT_EQ(error_key(R"({"case":"nowhere","scheme":"pepm"})"), "case");
  EXPECT_EQ(error_key(R"({"case":"breather","scheme":"pepm","tau":0.3,"t_end":1})"), "t_end");
  EXPECT_EQ(error_key(R"({"case":"ring","scheme":"pepm","snapshot_times":[-1]})"),
            "snapshot_times");
  EXPECT_EQ(error_key("{not json"), "(document)");
  EXPECT_EQ(error_key("[1,2]"), "(document)");
}

TEST(Config, InlineCaseSpec) {
  const RunConfig c = parse_config(
      R"({"case":{"preset":"breather","domain":[-40,40,0,1],"c":0.25},"scheme":"svm",
          "grid":"regular","g":"g2","snapshot_times":[0.5,1],"out_dir":"o"})");
  ASSERT_TRUE(c.case_spec.domain.has_value());
  EXPECT_EQ(c.case_spec.domain->a, -40.0);
  EXPECT_EQ(*c.case_spec.breather_c, 0.25);
  EXPECT_EQ(c.grid, GridFamily::Regular);
  EXPECT_EQ(c.g, GChoice::G2);
  EXPECT_EQ(c.snapshot_times, (std::vector<double>{0.5, 1.0}));
  const BenchmarkCase bc = resolve_case(c.case_spec);
  EXPECT_EQ(bc.problem.domain.b, 40.0);
  EXPECT_NEAR(bc.problem.exact.value()(0.0, 0.0, 1.0),
              breather_exact(0.0, 1.0, 0.25), 1e-15);

  EXPECT_EQ(error_key(R"({"case":{"preset":"ring","c":0.3},"scheme":"pepm"})"), "case.c");
  EXPECT_EQ(error_key(R"({"case":{"preset":"ring","domain":[0,1]},"scheme":"pepm"})"),
            "case.domain");
  EXPECT_EQ(error_key(R"({"case":{"domain":[0,1,0,1]},"scheme":"pepm"})"), "case.preset");
}

TEST(Config, CaseDefaultsFillSchemeSettings) {
  const RunConfig c = parse_config(R"({"case":"ring","scheme":"baseline","tol":1e-12})");
  const BenchmarkCase bc = resolve_case(c.case_spec);
  const SchemeConfig s = scheme_config(c, bc);
  EXPECT_EQ(s.scheme, Scheme::PcCnBaseline);
  EXPECT_EQ(s.tau, 0.01);
  EXPECT_EQ(s.t_end, 15.0);
  EXPECT_EQ(s.newton_tol, 1e-12);
  EXPECT_EQ(effective_nx(c, bc), 128u);
  EXPECT_EQ(effective_ny(c, bc), 128u);
}

TEST(Config, NameRoundTrips) {
  for (Scheme s : {Scheme::Pepm, Scheme::Svm, Scheme::PcCnBaseline}) {
    EXPECT_EQ(parse_scheme(to_string(s)), s);
  }
  for (GridFamily f : {GridFamily::MidPoint, GridFamily::Regular}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
  for (GChoice g : {GChoice::G1, GChoice::G2}) EXPECT_EQ(parse_g(to_string(g)), g);
}

}  // namespace
}  // namespace sg
