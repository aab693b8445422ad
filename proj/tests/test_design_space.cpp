#include <algorithm>
#include <set>
#include <sstream>

#include "bellowlab/design_space.hpp"
#include "doctest.h"

using namespace bellowlab;
using namespace bellowlab::design_space;

TEST_SUITE_BEGIN("design_space");

TEST_CASE("candidate grid enumerates 72 variants in a fixed order") {
  auto specs = enumerate_candidates();
  REQUIRE(specs.size() == 72);
  CHECK(specs.front().shape == CellShape::Square);
  CHECK(specs.front().cell_length_cm == 1.0);
  CHECK(specs.front().n_cells == 1);
  CHECK(specs.back().shape == CellShape::Circle);
  CHECK(specs.back().cell_length_cm == 4.0);
  CHECK(specs.back().n_cells == 14);

  std::set<std::tuple<int, double, int>> unique;
  int squares = 0;
  for (const auto& s : specs) {
    unique.insert({static_cast<int>(s.shape), s.cell_length_cm, s.n_cells});
    if (s.shape == CellShape::Square) ++squares;
  }
  CHECK(unique.size() == 72);
  CHECK(squares == 24);
}

TEST_CASE("study constraints keep exactly the 18 buildable variants") {
  auto report = downselect(enumerate_candidates(), study_constraints());
  CHECK(report.viable.size() == 18);
  CHECK(report.rejected.size() == 54);

  std::set<std::tuple<int, double, int>> viable;
  for (const auto& s : report.viable)
    viable.insert({static_cast<int>(s.shape), s.cell_length_cm, s.n_cells});
  for (CellShape shape : kAllShapes)
    for (double p : {3.0, 4.0})
      for (int n : {8, 10, 12})
        CHECK(viable.count({static_cast<int>(shape), p, n}) == 1);
}

TEST_CASE("rejections record every violated constraint") {
  auto report = downselect(enumerate_candidates(), study_constraints());
  bool found = false;
  for (const auto& r : report.rejected) {
    if (r.spec.shape == CellShape::Square && r.spec.cell_length_cm == 1.0 &&
        r.spec.n_cells == 1) {
      found = true;
      REQUIRE(r.violated_ids.size() == 2);
      CHECK(std::count(r.violated_ids.begin(), r.violated_ids.end(),
                       "min-cell-length") == 1);
      CHECK(std::count(r.violated_ids.begin(), r.violated_ids.end(),
                       "min-cell-count") == 1);
    }
    CHECK_FALSE(r.violated_ids.empty());
  }
  CHECK(found);
}

TEST_CASE("downselect is idempotent on the viable set") {
  auto first = downselect(enumerate_candidates(), study_constraints());
  auto second = downselect(first.viable, study_constraints());
  CHECK(second.rejected.empty());
  REQUIRE(second.viable.size() == first.viable.size());
  for (std::size_t i = 0; i < first.viable.size(); ++i)
    CHECK(second.viable[i] == first.viable[i]);
}

TEST_CASE("no constraints means everything is viable") {
  auto report = downselect(enumerate_candidates(), {});
  CHECK(report.viable.size() == 72);
  CHECK(report.rejected.empty());
}

TEST_CASE("required elongation is the arc length") {
  CHECK(required_elongation(90.0, 5.0) ==
        doctest::Approx(7.853981633974483).epsilon(1e-14));
  CHECK(required_elongation(0.0, 5.0) == 0.0);
  // Linear in both arguments.
  CHECK(required_elongation(45.0, 5.0) * 2.0 ==
        doctest::Approx(required_elongation(90.0, 5.0)));
  CHECK(required_elongation(90.0, 2.5) * 2.0 ==
        doctest::Approx(required_elongation(90.0, 5.0)));
  CHECK_THROWS_AS(required_elongation(90.0, 0.0), ValidationError);
  CHECK_THROWS_AS(required_elongation(-1.0, 5.0), ValidationError);
}

TEST_CASE("elongation screen is advisory") {
  auto table = actuator::CellDisplacementTable::builtin();
  // 11.44 cm available vs 7.85 cm required.
  CHECK(elongation_screen({CellShape::Square, 3.0, 8}, table, 90.0, 5.0) ==
        Screen::Pass);
  // 6.40 cm available.
  CHECK(elongation_screen({CellShape::Rectangle, 3.0, 8}, table, 90.0, 5.0) ==
        Screen::Marginal);
  // Marginal designs must still be in the viable set.
  auto report = downselect(enumerate_candidates(), study_constraints());
  bool rect38_viable = false;
  for (const auto& s : report.viable)
    if (s.shape == CellShape::Rectangle && s.cell_length_cm == 3.0 &&
        s.n_cells == 8)
      rect38_viable = true;
  CHECK(rect38_viable);
}

TEST_CASE("selection CSV carries the audit trail") {
  auto report = downselect(enumerate_candidates(), study_constraints());
  std::ostringstream out;
  write_selection_csv(report, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "shape,p_cm,n,viable,violations");
  std::getline(in, line);
  CHECK(line == "square,1,1,0,min-cell-length;min-cell-count");
  int rows = 1, viable_rows = 0;
  do {
    ++rows;
    auto last_comma = line.rfind(',');
    auto prev_comma = line.rfind(',', last_comma - 1);
    std::string viable_flag =
        line.substr(prev_comma + 1, last_comma - prev_comma - 1);
    std::string violations = line.substr(last_comma + 1);
    if (viable_flag == "1") {
      ++viable_rows;
      CHECK(violations.empty());
    } else {
      CHECK(viable_flag == "0");
      CHECK_FALSE(violations.empty());
    }
  } while (std::getline(in, line));
  CHECK(rows == 73);
  CHECK(viable_rows == 18);
}

TEST_SUITE_END();
