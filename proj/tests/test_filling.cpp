#include "doctest.h"
#include "kickbasis/filling.hpp"

using kickbasis::Cell;
using kickbasis::Filling;
using kickbasis::Params;
using kickbasis::RowOcc;
using kickbasis::Shape;
using kickbasis::Working;
using kickbasis::occupancy;
using kickbasis::orbit_point;
using kickbasis::prefer_rows_hook;
using kickbasis::prefer_rows_two_column;

TEST_CASE("parse and print round trip") {
    for (const char* text : {"2,4/6,1/5,3", "5,3,6,2/4/1", "1", "1,3/2",
                             "2,1/3", "_,1/2?", "_/_/_"}) {
        CHECK(Filling::parse(text).str() == text);
    }
}

TEST_CASE("parse infers the shape from row lengths") {
    const Filling f = Filling::parse("2,4/6,1/5,3");
    CHECK(f.shape() == Shape::parse("2,2,2"));
    CHECK(Filling::parse("5,3,6,2/4/1").shape() == Shape::parse("4,1,1"));
}

TEST_CASE("entry lookup both ways") {
    const Filling f = Filling::parse("2,4/6,1/5,3");
    CHECK(f.entry_at(Cell{0, 0}) == 2);
    CHECK(f.entry_at(Cell{1, 0}) == 6);
    CHECK(f.entry_at(Cell{2, 1}) == 3);
    CHECK(f.cell_of(5) == Cell{2, 0});
    CHECK(f.row_of(6) == 2);
    CHECK(f.is_standard());
}

TEST_CASE("pending entries have a row but no column") {
    Filling f(Shape::parse("2,1"));
    f.place_pending(1, 3);
    CHECK(f.pending_row_of(3) == 1);
    CHECK(f.cell_of(3) == std::nullopt);
    CHECK(f.row_of(3) == 1);
    CHECK_FALSE(f.is_standard());
    f.fix_pending(3, 1);
    CHECK(f.cell_of(3) == Cell{0, 1});
    f.place(Cell{0, 0}, 1);
    f.place(Cell{1, 0}, 2);
    CHECK(f.is_standard());
    CHECK(f.str() == "1,3/2");
}

TEST_CASE("orbit point reads original coordinates") {
    const Filling f = Filling::parse("1,3/2");
    const auto pt = orbit_point(f, Params::defaults(f.shape()));
    CHECK(pt.xv(1) == 1);  // row 1 -> alpha_1
    CHECK(pt.xv(2) == 2);
    CHECK(pt.yv(3) == 2);  // column 2 -> beta_2
    CHECK(pt.yv(2) == 1);
}

TEST_CASE("two-column straightening orphans the partner cell") {
    // Removing 6 from the middle length-2 row leaves its partner 1 in a
    // length-1 row directly above the surviving length-2 block.
    Working w = Working::from(Filling::parse("2,4/6,1/5,3"));
    w.remove_and_straighten_two_column(6);
    CHECK(w.str() == "2,4/5,3/1");
    CHECK(w.rows[1].orig_row == 3);   // slid rows keep their labels
    CHECK(w.rows[2].orig_row == 2);
    w.remove_and_straighten_two_column(5);
    CHECK(w.str() == "2,4/3/1");
    CHECK(w.rows[1].orig_row == 3);
}

TEST_CASE("two-column straightening drops an emptied short row") {
    Working w = Working::from(Filling::parse("2,1/3"));
    w.remove_and_straighten_two_column(3);
    CHECK(w.str() == "2,1");
    CHECK(w.rows[0].orig_row == 1);
}

TEST_CASE("hook straightening pushes the bottom row left") {
    Working w = Working::from(Filling::parse("5,3,6,2/4/1"));
    w.remove_and_straighten_hook(6);
    CHECK(w.str() == "5,3,2/4/1");
    w.remove_and_straighten_hook(5);
    CHECK(w.str() == "3,2/4/1");
    w.remove_and_straighten_hook(4);
    CHECK(w.str() == "3,2/1");
    CHECK(w.rows[1].orig_row == 3);   // the surviving leg keeps its label
}

TEST_CASE("two-column row preference") {
    // Empty 2-rows top-down, empty 1-rows top-down, then half-full 2-rows by
    // decreasing occupant.
    const std::vector<RowOcc> rows = {
        {2, 1, 1, 5},   // half full, occupant 5
        {2, 2, 0, 0},   // empty 2-row
        {2, 3, 1, 7},   // half full, occupant 7
        {1, 4, 0, 0},   // empty 1-row
        {1, 5, 1, 6},   // full 1-row: never preferred
    };
    CHECK(prefer_rows_two_column(rows) == std::vector<int>{1, 3, 2, 0});
}

TEST_CASE("hook row preference keeps the bottom first while roomy") {
    const std::vector<RowOcc> twoFree = {
        {4, 1, 2, 0}, {1, 2, 0, 0}, {1, 3, 1, 9}};
    CHECK(prefer_rows_hook(twoFree) == std::vector<int>{0, 1});
    const std::vector<RowOcc> oneFree = {
        {4, 1, 3, 0}, {1, 2, 0, 0}, {1, 3, 0, 0}};
    CHECK(prefer_rows_hook(oneFree) == std::vector<int>{2, 1, 0});
}

TEST_CASE("occupancy counts entries above the threshold") {
    const Working w = Working::from(Filling::parse("2,4/6,1/5,3"));
    const auto occ = occupancy(w, 4);
    REQUIRE(occ.size() == 3);
    CHECK(occ[0].count == 0);
    CHECK(occ[1].count == 1);
    CHECK(occ[1].occupant == 6);
    CHECK(occ[2].count == 1);
    CHECK(occ[2].occupant == 5);
}
