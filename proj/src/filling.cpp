#include "kickbasis/filling.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kickbasis {

namespace {

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

Filling::Filling(Shape shape) : shape_(std::move(shape)) {
    grid_.assign(shape_.n(), 0);
}

int Filling::cell_index(const Cell& c) const {
    if (c.p < 0 || c.p >= shape_.num_rows() || c.q < 0 || c.q >= shape_.row_len(c.p + 1))
        throw std::out_of_range("filling: cell outside shape");
    int idx = 0;
    for (int p = 0; p < c.p; ++p) idx += shape_.row_len(p + 1);
    return idx + c.q;
}

Filling Filling::parse(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(text);
    std::string row_text;
    while (std::getline(ss, row_text, '/')) {
        std::vector<std::string> toks;
        std::stringstream rs(row_text);
        std::string tok;
        while (std::getline(rs, tok, ',')) toks.push_back(trimmed(tok));
        if (toks.empty()) throw std::invalid_argument("filling: empty row in '" + text + "'");
        rows.push_back(std::move(toks));
    }
    if (rows.empty()) throw std::invalid_argument("filling: empty text");

    std::vector<int> lens;
    for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
    Filling f{Shape(lens)};

    std::vector<bool> seen(f.n() + 1, false);
    auto check_entry = [&](int e) {
        if (e < 1 || e > f.n()) throw std::invalid_argument("filling: entry out of range");
        if (seen[e]) throw std::invalid_argument("filling: repeated entry");
        seen[e] = true;
    };
    for (int p = 0; p < static_cast<int>(rows.size()); ++p) {
        for (int q = 0; q < static_cast<int>(rows[p].size()); ++q) {
            const std::string& tok = rows[p][q];
            if (tok == "_") continue;
            if (tok.empty()) throw std::invalid_argument("filling: empty token");
            try {
                if (tok.back() == '?') {
                    int e = std::stoi(tok.substr(0, tok.size() - 1));
                    check_entry(e);
                    f.place_pending(p + 1, e);
                } else {
                    int e = std::stoi(tok);
                    check_entry(e);
                    f.place(Cell{p, q}, e);
                }
            } catch (const std::invalid_argument&) {
                throw;
            } catch (const std::exception&) {
                throw std::invalid_argument("filling: bad token '" + tok + "'");
            }
        }
    }
    return f;
}

std::string Filling::str() const {
    std::string out;
    for (int p = 0; p < shape_.num_rows(); ++p) {
        if (p) out += '/';
        // Pending entries print first in placement order; a row never mixes
        // pending and placed entries.
        std::vector<std::string> toks;
        for (const auto& [e, row1] : pending_)
            if (row1 == p + 1) toks.push_back(std::to_string(e) + "?");
        int len = shape_.row_len(p + 1);
        for (int q = static_cast<int>(toks.size()); q < len; ++q) {
            int e = grid_[cell_index(Cell{p, q})];
            toks.push_back(e ? std::to_string(e) : "_");
        }
        for (std::size_t i = 0; i < toks.size(); ++i) {
            if (i) out += ',';
            out += toks[i];
        }
    }
    return out;
}

int Filling::entry_at(const Cell& c) const {
    return grid_[cell_index(c)];
}

std::optional<Cell> Filling::cell_of(int entry) const {
    for (const Cell& c : shape_.cells())
        if (grid_[cell_index(c)] == entry) return c;
    return std::nullopt;
}

std::optional<int> Filling::pending_row_of(int entry) const {
    for (const auto& [e, row1] : pending_)
        if (e == entry) return row1;
    return std::nullopt;
}

int Filling::row_of(int entry) const {
    if (auto c = cell_of(entry)) return c->p + 1;
    if (auto r = pending_row_of(entry)) return *r;
    throw std::invalid_argument("filling: entry " + std::to_string(entry) + " absent");
}

void Filling::place(const Cell& c, int entry) {
    int idx = cell_index(c);
    if (grid_[idx]) throw std::invalid_argument("filling: cell occupied");
    grid_[idx] = entry;
}

void Filling::place_pending(int row1, int entry) {
    if (row1 < 1 || row1 > shape_.num_rows())
        throw std::invalid_argument("filling: pending row outside shape");
    pending_.emplace_back(entry, row1);
}

void Filling::fix_pending(int entry, int col0) {
    for (auto it = pending_.begin(); it != pending_.end(); ++it) {
        if (it->first == entry) {
            int row1 = it->second;
            pending_.erase(it);
            place(Cell{row1 - 1, col0}, entry);
            return;
        }
    }
    throw std::invalid_argument("filling: entry not pending");
}

void Filling::remove_pending(int entry) {
    for (auto it = pending_.begin(); it != pending_.end(); ++it)
        if (it->first == entry) {
            pending_.erase(it);
            return;
        }
    throw std::invalid_argument("filling: entry not pending");
}

void Filling::clear(const Cell& c) {
    grid_[cell_index(c)] = 0;
}

bool Filling::is_standard() const {
    if (!pending_.empty()) return false;
    std::vector<bool> seen(shape_.n() + 1, false);
    for (int e : grid_) {
        if (e < 1 || e > shape_.n() || seen[e]) return false;
        seen[e] = true;
    }
    return true;
}

OrbitPoint orbit_point(const Filling& f, const Params& params) {
    if (!f.is_standard()) throw std::invalid_argument("orbit point needs a standard filling");
    params.validate(f.shape());
    OrbitPoint pt;
    pt.x.resize(f.n());
    pt.y.resize(f.n());
    for (const Cell& c : f.shape().cells()) {
        int e = f.entry_at(c);
        pt.x[e - 1] = params.a(c.p + 1);
        pt.y[e - 1] = params.b(c.q + 1);
    }
    return pt;
}

Working Working::from(const Filling& f) {
    if (!f.is_standard()) throw std::invalid_argument("working copy needs a standard filling");
    Working w;
    const Shape& sh = f.shape();
    for (int p = 0; p < sh.num_rows(); ++p) {
        WRow row;
        row.orig_row = p + 1;
        for (int q = 0; q < sh.row_len(p + 1); ++q)
            row.cells.push_back(WCell{Cell{p, q}, f.entry_at(Cell{p, q})});
        w.rows.push_back(std::move(row));
    }
    return w;
}

int Working::max_entry() const {
    int m = 0;
    for (const WRow& r : rows)
        for (const WCell& c : r.cells) m = std::max(m, c.entry);
    return m;
}

bool Working::locate(int e, int* row_idx, int* cell_idx) const {
    for (int i = 0; i < static_cast<int>(rows.size()); ++i)
        for (int j = 0; j < static_cast<int>(rows[i].cells.size()); ++j)
            if (rows[i].cells[j].entry == e) {
                *row_idx = i;
                *cell_idx = j;
                return true;
            }
    return false;
}

void Working::remove_and_straighten_two_column(int n) {
    int ri = 0, ci = 0;
    if (!locate(n, &ri, &ci)) throw std::invalid_argument("straighten: entry absent");
    if (rows[ri].cells.size() == 2) {
        // The orphaned partner moves directly above the block of length-2
        // rows, below every length-1 row. Original coordinates travel with it.
        rows[ri].cells.erase(rows[ri].cells.begin() + ci);
        WRow orphan = std::move(rows[ri]);
        rows.erase(rows.begin() + ri);
        int block = 0;
        while (block < static_cast<int>(rows.size()) && rows[block].cells.size() == 2) ++block;
        rows.insert(rows.begin() + block, std::move(orphan));
    } else {
        rows.erase(rows.begin() + ri);
    }
}

void Working::remove_and_straighten_hook(int n) {
    int ri = 0, ci = 0;
    if (!locate(n, &ri, &ci)) throw std::invalid_argument("straighten: entry absent");
    rows[ri].cells.erase(rows[ri].cells.begin() + ci);
    if (rows[ri].cells.empty()) rows.erase(rows.begin() + ri);
}

std::string Working::str() const {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += '/';
        for (std::size_t j = 0; j < rows[i].cells.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(rows[i].cells[j].entry);
        }
    }
    return out;
}

std::vector<RowOcc> occupancy(const Working& w, int k) {
    std::vector<RowOcc> out;
    for (const WRow& r : w.rows) {
        RowOcc occ;
        occ.len = static_cast<int>(r.cells.size());
        occ.orig_row = r.orig_row;
        occ.count = 0;
        occ.occupant = 0;
        for (const WCell& c : r.cells)
            if (c.entry > k) {
                ++occ.count;
                occ.occupant = c.entry;
            }
        if (occ.len != 2 || occ.count != 1) occ.occupant = 0;
        out.push_back(occ);
    }
    return out;
}

std::vector<int> prefer_rows_two_column(const std::vector<RowOcc>& rows) {
    std::vector<int> empty2, empty1, single2;
    for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
        const RowOcc& r = rows[i];
        if (r.len == 2 && r.count == 0) empty2.push_back(i);
        else if (r.len == 1 && r.count == 0) empty1.push_back(i);
        else if (r.len == 2 && r.count == 1) single2.push_back(i);
    }
    std::stable_sort(single2.begin(), single2.end(), [&](int i, int j) {
        return rows[i].occupant > rows[j].occupant;
    });
    std::vector<int> out;
    out.insert(out.end(), empty2.begin(), empty2.end());
    out.insert(out.end(), empty1.begin(), empty1.end());
    out.insert(out.end(), single2.begin(), single2.end());
    return out;
}

std::vector<int> prefer_rows_hook(const std::vector<RowOcc>& rows) {
    std::vector<int> out;
    bool bottom_first = !rows.empty() && rows[0].len - rows[0].count >= 2;
    if (bottom_first) out.push_back(0);
    for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i) {
        if (bottom_first && i == 0) break;
        if (rows[i].len - rows[i].count > 0) out.push_back(i);
    }
    return out;
}

}  // namespace kickbasis
