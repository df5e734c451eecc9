#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kickbasis/params.hpp"
#include "kickbasis/shape.hpp"

namespace kickbasis {

// A filling of a shape. Standard fillings are bijections cells -> 1..n.
// Partial fillings (used by the kicking tree and enumeration) may leave cells
// empty and may hold "pending" entries that have a row but no column yet;
// pending entries only ever occur as the sole occupant of a length-2 row.
class Filling {
  public:
    Filling() = default;
    explicit Filling(Shape shape);

    // Text form: rows bottom-to-top joined by "/", entries left-to-right
    // joined by ","; empty cells print "_" and pending entries print "k?".
    // parse infers the shape from the row lengths.
    static Filling parse(const std::string& text);
    std::string str() const;

    const Shape& shape() const { return shape_; }
    int n() const { return shape_.n(); }

    int entry_at(const Cell& c) const;           // 0 when empty
    std::optional<Cell> cell_of(int entry) const;
    std::optional<int> pending_row_of(int entry) const;  // 1-indexed row
    int row_of(int entry) const;                 // placed or pending; throws if absent

    void place(const Cell& c, int entry);
    void place_pending(int row1, int entry);
    void fix_pending(int entry, int col0);       // assign column q=col0 in its row
    void remove_pending(int entry);
    void clear(const Cell& c);

    bool is_standard() const;
    bool operator==(const Filling&) const = default;

  private:
    Shape shape_;
    std::vector<int> grid_;                       // canonical cell order, 0 = empty
    std::vector<std::pair<int, int>> pending_;    // (entry, row1)
    int cell_index(const Cell& c) const;
};

// Orbit point of a standard filling: entry i placed at original cell (p,q)
// contributes x_i = alpha_{p+1}, y_i = beta_{q+1}.
struct OrbitPoint {
    std::vector<Rational> x, y;  // index 0 holds entry 1
    const Rational& xv(int entry) const { return x.at(entry - 1); }
    const Rational& yv(int entry) const { return y.at(entry - 1); }
};
OrbitPoint orbit_point(const Filling& f, const Params& params);

// Working copy of a filling used by the phi recursions: physical rows
// bottom-up, every cell occupied, each cell remembering its original
// coordinates. Straightening rearranges rows but never original labels.
struct WCell {
    Cell orig;
    int entry;
};
struct WRow {
    std::vector<WCell> cells;  // physical left-to-right
    int orig_row;              // 1-indexed original row label (alpha subscript)
};
struct Working {
    std::vector<WRow> rows;    // index 0 = physical bottom

    static Working from(const Filling& f);
    int max_entry() const;
    // Locates entry e; returns false if absent.
    bool locate(int e, int* row_idx, int* cell_idx) const;

    // Removes the current largest entry n and repairs the shape.
    // Two-column: deleting from a length-2 row orphans the partner cell, which
    // moves directly above the length-2 block (below all length-1 rows);
    // deleting a length-1 row lets the rows above slide down.
    void remove_and_straighten_two_column(int n);
    // Hook: cells push left within the bottom row, rows above slide down.
    void remove_and_straighten_hook(int n);

    std::string str() const;   // same text form as Filling
};

// Occupancy summary of one physical row, restricted to entries > k.
struct RowOcc {
    int len;           // cells in the row (current shape)
    int orig_row;      // alpha subscript
    int count;         // occupants > k
    int occupant;      // the single occupant > k when len==2 && count==1
};

// Row preference for placing k, most preferred first; only rows with a free
// cell appear. Input rows are physical bottom-up. Returns indices into `rows`.
// Two-column: empty length-2 rows top to bottom, then empty length-1 rows top
// to bottom, then singly occupied length-2 rows by decreasing occupant.
std::vector<int> prefer_rows_two_column(const std::vector<RowOcc>& rows);
// Hook: the bottom row while it has at least two free cells, then all rows
// with a free cell from top to bottom.
std::vector<int> prefer_rows_hook(const std::vector<RowOcc>& rows);

// RowOcc view of a working filling w.r.t. k (occupants are entries > k).
std::vector<RowOcc> occupancy(const Working& w, int k);

}  // namespace kickbasis
