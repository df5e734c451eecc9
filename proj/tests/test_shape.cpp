#include "doctest.h"
#include "kickbasis/shape.hpp"

using kickbasis::Cell;
using kickbasis::Family;
using kickbasis::Shape;

TEST_CASE("parse accepts plain and power forms") {
    CHECK(Shape::parse("2,2,1") == Shape({2, 2, 1}));
    CHECK(Shape::parse("2^2,1") == Shape({2, 2, 1}));
    CHECK(Shape::parse("2^3") == Shape({2, 2, 2}));
    CHECK(Shape::parse("4,1,1") == Shape({4, 1, 1}));
    CHECK(Shape::parse("4,1^2") == Shape({4, 1, 1}));
    CHECK(Shape::parse("1") == Shape({1}));
    CHECK(Shape::parse("2,2,1").str() == "2,2,1");
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS(Shape::parse(""));
    CHECK_THROWS(Shape::parse("0"));
    CHECK_THROWS(Shape::parse("1,2"));   // must weakly decrease downward
    CHECK_THROWS(Shape::parse("2,,1"));
    CHECK_THROWS(Shape::parse("2^0,1"));
}

TEST_CASE("row storage is bottom first") {
    const Shape s = Shape::parse("2,2,1");
    CHECK(s.num_rows() == 3);
    CHECK(s.row_len(1) == 2);
    CHECK(s.row_len(3) == 1);
    CHECK(s.n() == 5);
}

TEST_CASE("family classification") {
    CHECK(Shape::parse("2,2,1").is_two_column());
    CHECK_FALSE(Shape::parse("2,2,1").is_hook());
    CHECK(Shape::parse("4,1,1").is_hook());
    CHECK_FALSE(Shape::parse("4,1,1").is_two_column());
    // Hooks with arm <= 2 sit in both families.
    const Shape both = Shape::parse("2,1,1");
    CHECK(both.is_two_column());
    CHECK(both.is_hook());
    CHECK(both.default_family() == Family::TwoColumn);
    CHECK(Shape::parse("3,1").default_family() == Family::Hook);
}

TEST_CASE("two-column and hook parameters") {
    const Shape s = Shape::parse("2,2,1");
    CHECK(s.two_col_a() == 3);
    CHECK(s.two_col_b() == 2);
    CHECK(Shape::parse("4,1,1").hook_m() == 2);
    CHECK(Shape::parse("3").hook_m() == 0);
}

TEST_CASE("cells run bottom-up, left-to-right") {
    const std::vector<Cell> cells = Shape::parse("2,1").cells();
    REQUIRE(cells.size() == 3);
    CHECK(cells[0] == Cell{0, 0});
    CHECK(cells[1] == Cell{0, 1});
    CHECK(cells[2] == Cell{1, 0});
}

TEST_CASE("degree statistics") {
    CHECK(Shape::parse("2,1").n_mu() == 1);
    CHECK(Shape::parse("2,1").n_mu_conj() == 1);
    CHECK(Shape::parse("2,2,1").n_mu() == 0 + 0 + 1 + 1 + 2);
    CHECK(Shape::parse("2,2,1").n_mu_conj() == 2);
    CHECK(Shape::parse("4,1,1").n_mu() == 3);
    CHECK(Shape::parse("4,1,1").n_mu_conj() == 0 + 1 + 2 + 3);
    CHECK(Shape::parse("1,1,1").n_mu() == 3);
    CHECK(Shape::parse("3").n_mu() == 0);
}
