#include "kickbasis/shape.hpp"

#include <algorithm>
#include <sstream>

namespace kickbasis {

Shape::Shape(std::vector<int> row_lengths) : rows_(std::move(row_lengths)) {
    if (rows_.empty()) throw std::invalid_argument("shape: no rows");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i] < 1) throw std::invalid_argument("shape: row length < 1");
        if (i > 0 && rows_[i] > rows_[i - 1])
            throw std::invalid_argument("shape: row lengths must weakly decrease upward");
        n_ += rows_[i];
    }
}

Shape Shape::parse(const std::string& spec) {
    std::vector<int> parts;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("shape: empty part in '" + spec + "'");
        int len = 0, mult = 1;
        auto caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                len = std::stoi(tok);
            } else {
                len = std::stoi(tok.substr(0, caret));
                mult = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("shape: bad part '" + tok + "'");
        }
        if (len < 1 || mult < 1) throw std::invalid_argument("shape: bad part '" + tok + "'");
        for (int i = 0; i < mult; ++i) parts.push_back(len);
    }
    if (parts.empty()) throw std::invalid_argument("shape: empty spec");
    // Input lists the largest part first; storage is bottom row first, which
    // is the same order.
    return Shape(parts);
}

bool Shape::is_two_column() const {
    return rows_[0] <= 2;
}

bool Shape::is_hook() const {
    for (std::size_t i = 1; i < rows_.size(); ++i)
        if (rows_[i] != 1) return false;
    return true;
}

Family Shape::default_family() const {
    if (is_two_column()) return Family::TwoColumn;
    if (is_hook()) return Family::Hook;
    throw std::invalid_argument("shape " + str() + " is neither two-column nor a hook");
}

int Shape::two_col_b() const {
    int b = 0;
    for (int len : rows_)
        if (len == 2) ++b;
    return b;
}

std::vector<Cell> Shape::cells() const {
    std::vector<Cell> out;
    out.reserve(n_);
    for (int p = 0; p < num_rows(); ++p)
        for (int q = 0; q < rows_[p]; ++q) out.push_back(Cell{p, q});
    return out;
}

int Shape::n_mu() const {
    int s = 0;
    for (const Cell& c : cells()) s += c.p;
    return s;
}

int Shape::n_mu_conj() const {
    int s = 0;
    for (const Cell& c : cells()) s += c.q;
    return s;
}

std::string Shape::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rows_[i]);
    }
    return out;
}

}  // namespace kickbasis
