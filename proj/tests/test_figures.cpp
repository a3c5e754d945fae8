#include <doctest.h>

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "skewinfo/catalog.hpp"
#include "skewinfo/figures.hpp"
#include "test_helpers.hpp"

using namespace skewinfo;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<double>> parse_csv(const std::string& csv, std::string* header) {
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  if (header) {
    *header = line;
  }
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      row.push_back(std::stod(cell));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

TEST_SUITE("figures") {

TEST_CASE("fig2 reproduces the Bloch-circle dataset") {
  FigureSpec spec;
  spec.id = "fig2";
  spec.res = 50;
  const std::string csv = figure_csv(spec);
  std::string header;
  const auto rows = parse_csv(csv, &header);
  CHECK(header == "theta,sum,lb1,lb0,lb0bar");
  REQUIRE(rows.size() == 50);

  // first row sits exactly at theta = 0
  const std::string first_line = csv.substr(csv.find('\n') + 1);
  CHECK(first_line.substr(0, first_line.find('\n')) ==
        "0,1,0.980936347194,0.542893218813,0.5");

  double worst = 0.0;
  for (const auto& row : rows) {
    REQUIRE(row.size() == 5);
    const double theta = row[0];
    worst = std::max(worst, std::abs(row[1] - 1.0));
    worst = std::max(worst, std::abs(row[2] - analytic::example1_lb1(theta)));
    worst = std::max(worst, std::abs(row[3] - analytic::example1_lb0(theta)));
    worst = std::max(worst, std::abs(row[4] - analytic::example1_lb0bar(theta)));
  }
  CHECK(worst < 1e-9); // 12-digit CSV rounding stays far below this
  CHECK(rows.back()[0] == doctest::Approx(kPi).epsilon(1e-12));
}

TEST_CASE("figure output is byte-identical across runs") {
  FigureSpec spec;
  spec.id = "fig5";
  spec.res = 12;
  CHECK(figure_csv(spec) == figure_csv(spec));

  FigureSpec gamma_spec;
  gamma_spec.id = "fig1";
  gamma_spec.res = 16;
  CHECK(figure_csv(gamma_spec) == figure_csv(gamma_spec));
}

TEST_CASE("fig1 grid hits the known gamma minimizer") {
  FigureSpec spec;
  spec.id = "fig1";
  spec.res = 120;
  const std::string csv = figure_csv(spec);
  std::string header;
  const auto rows = parse_csv(csv, &header);
  CHECK(header == "theta,phi,gamma");
  REQUIRE(rows.size() == 120 * 240);

  double min_gamma = std::numeric_limits<double>::infinity();
  for (const auto& row : rows) {
    min_gamma = std::min(min_gamma, row[2]);
  }
  const double floor = std::sqrt(3.0) - 4.0 / 3.0;
  CHECK(min_gamma >= floor - 1e-6);
  CHECK(std::abs(min_gamma - floor) < 1e-3);
}

TEST_CASE("fig1 pipeline gamma is radius-independent") {
  for (double t : {0.25, 1.0}) {
    FigureSpec spec;
    spec.id = "fig1";
    spec.res = 10;
    spec.t = t;
    std::string header;
    for (const auto& row : parse_csv(figure_csv(spec), &header)) {
      CHECK(std::abs(row[2] - analytic::gamma(row[0], row[1])) < 1e-8);
    }
  }
  FigureSpec bad;
  bad.id = "fig1";
  bad.t = 0.0;
  CHECK_THROWS_AS(figure_csv(bad), DomainError);
}

TEST_CASE("fig3 surface and slice") {
  FigureSpec spec;
  spec.id = "fig3";
  spec.res = 12;
  std::string header;
  const auto rows = parse_csv(figure_csv(spec), &header);
  CHECK(header == "theta,phi,sum,lb1,lb0,lb0bar");
  REQUIRE(rows.size() == 144);
  for (const auto& row : rows) {
    CHECK(std::abs(row[2] - analytic::spin1_sum(row[0], row[1])) < 1e-9);
    CHECK(row[3] <= row[2] + 1e-9); // lb1 <= sum
    CHECK(row[3] >= row[4] - 1e-9); // lb1 >= lb0
  }

  spec.slice = true;
  const auto slice_rows = parse_csv(figure_csv(spec), &header);
  CHECK(header == "theta,sum,lb1,lb0,lb0bar");
  REQUIRE(slice_rows.size() == 12);
  for (const auto& row : slice_rows) {
    CHECK(std::abs(row[1] - analytic::spin1_sum(row[0], kPi / 4.0)) < 1e-9);
  }
}

TEST_CASE("fig4 surface and slice stay inside the open alpha domain") {
  FigureSpec spec;
  spec.id = "fig4";
  spec.res = 10;
  std::string header;
  const auto rows = parse_csv(figure_csv(spec), &header);
  CHECK(header == "alpha,beta,sum,lb1,lb0,lb0bar");
  REQUIRE(rows.size() == 100);
  for (const auto& row : rows) {
    CHECK(row[0] > 0.0);
    CHECK(row[0] < kPi);
    CHECK(row[3] <= row[2] + 1e-9);
    CHECK(row[3] >= row[4] - 1e-9);
  }

  spec.slice = true;
  const auto slice_rows = parse_csv(figure_csv(spec), &header);
  CHECK(header == "alpha,sum,lb1,lb0,lb0bar");
  REQUIRE(slice_rows.size() == 10);
}

TEST_CASE("fig5 exhibits both dominance regimes") {
  FigureSpec spec;
  spec.id = "fig5";
  spec.res = 200;
  std::string header;
  const auto rows = parse_csv(figure_csv(spec), &header);
  CHECK(header == "theta,sum,thm3,thm4");
  REQUIRE(rows.size() == 200);
  int thm3_wins = 0;
  int thm4_wins = 0;
  for (const auto& row : rows) {
    CHECK(row[2] <= row[1] + 1e-9);
    CHECK(row[3] <= row[1] + 1e-9);
    if (row[2] > row[3] + 1e-12) ++thm3_wins;
    if (row[3] > row[2] + 1e-12) ++thm4_wins;
  }
  CHECK(thm3_wins > 0);
  CHECK(thm4_wins > 0);

  FigureSpec bad;
  bad.id = "fig5";
  bad.q = 1.5;
  CHECK_THROWS_AS(figure_csv(bad), DomainError);
}

TEST_CASE("write_figure emits the same bytes as figure_csv") {
  FigureSpec spec;
  spec.id = "fig2";
  spec.res = 8;
  const auto path = std::filesystem::temp_directory_path() / "skewinfo_fig2_test.csv";
  write_figure(spec, path);
  std::ifstream in(path, std::ios::binary);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == figure_csv(spec));
  std::filesystem::remove(path);
}

TEST_CASE("spec validation") {
  FigureSpec unknown;
  unknown.id = "fig9";
  CHECK_THROWS_AS(figure_csv(unknown), DomainError);
  FigureSpec tiny;
  tiny.id = "fig2";
  tiny.res = 1;
  CHECK_THROWS_AS(figure_csv(tiny), DomainError);
}

} // TEST_SUITE
