#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace kickbasis {

// Cells use zero-indexed coordinates: p counts rows from the bottom, q columns
// from the left. Row arithmetic elsewhere (alpha/beta subscripts) is 1-indexed,
// so the cell (p,q) reads parameters alpha[p+1], beta[q+1].
struct Cell {
    int p = 0;
    int q = 0;
    bool operator==(const Cell&) const = default;
};

enum class Family { TwoColumn, Hook };

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A partition drawn with its longest row at the bottom. rows[0] is the bottom
// row length; lengths are weakly decreasing going up.
class Shape {
  public:
    Shape() = default;
    explicit Shape(std::vector<int> row_lengths);

    // Accepts "2,2,1" and the power shorthand "2^2,1" (largest part first).
    static Shape parse(const std::string& spec);

    int n() const { return n_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int row_len(int row1) const { return rows_.at(row1 - 1); }  // 1-indexed from bottom
    const std::vector<int>& row_lengths() const { return rows_; }

    bool is_two_column() const;           // all rows have length <= 2
    bool is_hook() const;                 // all rows above the bottom have length 1
    bool is_single_row() const { return rows_.size() == 1; }
    Family default_family() const;        // TwoColumn when possible, else Hook

    // Two-column parameters: a = number of rows, b = number of length-2 rows.
    int two_col_a() const { return num_rows(); }
    int two_col_b() const;
    // Hook parameter: leg length m (rows above the bottom).
    int hook_m() const { return num_rows() - 1; }

    std::vector<Cell> cells() const;      // bottom-up, left-to-right
    int n_mu() const;                     // sum of p over cells: top t-degree
    int n_mu_conj() const;                // sum of q over cells: top q-degree

    std::string str() const;              // "2,2,1"
    bool operator==(const Shape&) const = default;

  private:
    std::vector<int> rows_;
    int n_ = 0;
};

}  // namespace kickbasis
