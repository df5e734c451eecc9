#include "kickbasis/hilbert.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kickbasis/kicking.hpp"

namespace kickbasis {

namespace {

std::int64_t binom64(int a, int b) {
    if (b < 0 || b > a) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

Shape two_column_shape(int a, int b) {
    std::vector<int> rows;
    rows.reserve(a);
    for (int i = 0; i < b; ++i) rows.push_back(2);
    for (int i = b; i < a; ++i) rows.push_back(1);
    return Shape(std::move(rows));
}

// Per-filling record for the refined sums: the basis polynomial's bidegree
// and the length of the forced prefix (n in the left cell of row b, n-1 in
// the left cell of row b-1, and so on).
struct JWeight {
    int tdeg;
    int qdeg;
    int prefix;
};

std::vector<JWeight> j_weights(int a, int b, int cap) {
    const Shape shape = two_column_shape(a, b);
    const int n = shape.n();
    if (n > cap) {
        throw CapExceeded("refined sum for n=" + std::to_string(n) +
                          " exceeds the enumeration cap of " +
                          std::to_string(cap));
    }
    std::vector<JWeight> ws;
    for (const auto& f : enumerate_fillings(shape, Family::TwoColumn, cap)) {
        const auto [dx, dy] = phi_two_column(f).bidegree();
        int prefix = 0;
        while (prefix < b &&
               f.entry_at(Cell{b - prefix - 1, 0}) == n - prefix) {
            ++prefix;
        }
        ws.push_back(JWeight{dx, dy, prefix});
    }
    return ws;
}

}  // namespace

QTPoly degree_polynomial(const Shape& shape, Family family, int cap) {
    QTPoly f;
    for (const auto& s : enumerate_fillings(shape, family, cap)) {
        const auto [dx, dy] = phi(s, family).bidegree();
        f += QTPoly::term(1, dx, dy);
    }
    return f;
}

QTPoly degree_polynomial(const Shape& shape, int cap) {
    return degree_polynomial(shape, shape.default_family(), cap);
}

std::pair<int, int> top_degrees(const Shape& shape) {
    return {shape.n_mu(), shape.n_mu_conj()};
}

SymmetryReport symmetry_report(const QTPoly& f, int N, int M) {
    SymmetryReport r;
    r.N = N;
    r.M = M;
    const auto [mt, mq] = f.max_degrees();
    r.actual_t = mt;
    r.actual_q = mq;
    if (mt != N || mq != M) return r;
    r.pass = f.qt_symmetric(N, M);
    return r;
}

QTPoly j_enumerated(int a, int b, int m, int cap) {
    if (!(a >= b && b >= m && m >= 0)) return QTPoly();
    if (a == 0) return QTPoly(1);
    QTPoly sum;
    for (const auto& w : j_weights(a, b, cap)) {
        if (w.prefix >= m) sum += QTPoly::term(1, w.tdeg, w.qdeg);
    }
    return sum.shift_down_q(m);
}

namespace {

// Shared recursion for both recurrence variants. Each variant keeps its own
// memo table so cross-agreement is a genuine check. Single-threaded by
// contract; parallel callers would need to publish insertions atomically.
QTPoly j_rec(int a, int b, int m, bool first, std::map<JKey, QTPoly>& memo) {
    if (!(a >= b && b >= m && m >= 0)) return QTPoly();
    const JKey key{a, b, m};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    QTPoly v;
    if (m == b) {
        v = QTPoly(binom64(a, b)) * t_fact(b) * t_fact(a - b);
    } else if (a == b && m > 0) {
        v = j_rec(b, b - m, 0, first, memo);
    } else {
        const QTPoly q = QTPoly::term(1, 0, 1);
        const auto tpow = [](int k) { return QTPoly::term(1, k, 0); };
        if (first) {
            v = t_int(m) * j_rec(a - 1, b - 1, m - 1, first, memo) +
                tpow(b - m) * t_int(a - b) * j_rec(a - 1, b, m, first, memo) +
                tpow(m) * t_int(b - m) * j_rec(a, b - 1, m, first, memo) +
                q * t_int(b - m) * j_rec(a, b, m + 1, first, memo);
        } else {
            v = tpow(b - m) * t_int(m) * j_rec(a - 1, b - 1, m - 1, first, memo) +
                t_int(a - b) * j_rec(a - 1, b, m, first, memo) +
                q * t_int(b - m) * j_rec(a, b - 1, m, first, memo) +
                tpow(a - b) * t_int(b - m) * j_rec(a, b, m + 1, first, memo);
        }
    }
    memo.emplace(key, v);
    return v;
}

}  // namespace

QTPoly j_recurrence_first(int a, int b, int m) {
    static std::map<JKey, QTPoly> memo;
    return j_rec(a, b, m, true, memo);
}

QTPoly j_recurrence_second(int a, int b, int m) {
    static std::map<JKey, QTPoly> memo;
    return j_rec(a, b, m, false, memo);
}

QTPoly j_reduced(const QTPoly& j, int a, int b, int m) {
    return j.divide_exact(t_fact(a - b) * t_fact(b - m) * t_fact(m));
}

std::pair<int, int> j_top_degrees(int a, int b, int m) {
    const auto c2 = [](int k) { return k * (k - 1) / 2; };
    return {c2(a - m) + c2(b), b - m};
}

std::pair<int, int> j_reduced_top_degrees(int a, int b, int m) {
    const int d = b - m;
    return {(a - 1) * d - d * (d - 1) / 2, d};
}

std::map<JKey, QTPoly> j_table(int sum_cap) {
    std::map<JKey, QTPoly> t;
    for (int a = 1; a <= sum_cap; ++a) {
        for (int b = 0; b <= a && a + b <= sum_cap; ++b) {
            for (int m = 0; m <= b; ++m) {
                t[JKey{a, b, m}] = j_recurrence_first(a, b, m);
            }
        }
    }
    return t;
}

}  // namespace kickbasis
