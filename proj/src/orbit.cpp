#include "kickbasis/orbit.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>

#include "kickbasis/kicking.hpp"

namespace kickbasis {

namespace {

std::int64_t factorial64(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit inputs.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Fixed 62-bit moduli so reduction of an entry fits an unsigned long and
// products fit 128 bits.
std::vector<u64> prescreen_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> ps;
        u64 c = (u64(1) << 62) - 1;
        while (ps.size() < 2) {
            if (is_prime_u64(c)) ps.push_back(c);
            --c;
        }
        return ps;
    }();
    return primes;
}

// Row-wise denominator clearing: scaling a row by a positive integer leaves
// both the rank and the kernel unchanged.
std::vector<std::vector<mpz_class>> clear_denominators(
    const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<mpz_class>> z;
    z.reserve(m.size());
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& e : row) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), e.get_den().get_mpz_t());
            l = l / g * e.get_den();
        }
        std::vector<mpz_class> zr;
        zr.reserve(row.size());
        for (const auto& e : row) {
            zr.push_back(e.get_num() * (l / e.get_den()));
        }
        z.push_back(std::move(zr));
    }
    return z;
}

// Nonzero determinant mod p certifies a nonzero integer determinant. The
// converse direction proves nothing, so a zero result only defers to the
// exact elimination.
bool nonsingular_mod_p(const std::vector<std::vector<mpz_class>>& z, u64 p) {
    const int n = static_cast<int>(z.size());
    std::vector<std::vector<u64>> a(n, std::vector<u64>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            u64 r = mpz_fdiv_ui(z[i][j].get_mpz_t(), p);
            a[i][j] = r;
        }
    }
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int i = c; i < n; ++i) {
            if (a[i][c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) return false;
        std::swap(a[pr], a[c]);
        const u64 inv = powmod(a[c][c], p - 2, p);
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            const u64 f = mulmod(a[i][c], inv, p);
            a[i][c] = 0;
            for (int j = c + 1; j < n; ++j) {
                u64 s = mulmod(f, a[c][j], p);
                a[i][j] = (a[i][j] >= s) ? a[i][j] - s : a[i][j] + (p - s);
            }
        }
    }
    return true;
}

struct Echelon {
    std::vector<std::vector<mpz_class>> e;
    std::vector<int> pivot_cols;  // one per pivot row, increasing
    int rank = 0;
};

// Fraction-free elimination: every intermediate entry is a minor of the
// input, so the division by the previous pivot is exact (Sylvester's
// identity); a remainder would mean corrupted arithmetic, not bad input.
Echelon bareiss(std::vector<std::vector<mpz_class>> e) {
    const int n = static_cast<int>(e.size());
    Echelon out;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int pr = -1;
        for (int i = r; i < n; ++i) {
            if (e[i][c] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(e[pr], e[r]);
        for (int i = r + 1; i < n; ++i) {
            for (int j = c + 1; j < n; ++j) {
                mpz_class v = e[i][j] * e[r][c] - e[i][c] * e[r][j];
                if (prev != 1) {
                    if (!mpz_divisible_p(v.get_mpz_t(), prev.get_mpz_t())) {
                        throw std::logic_error(
                            "fraction-free elimination lost exactness");
                    }
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(),
                                 prev.get_mpz_t());
                }
                e[i][j] = v;
            }
            e[i][c] = 0;
        }
        prev = e[r][c];
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rank = r;
    out.e = std::move(e);
    return out;
}

// Kernel vector from the echelon form: unit at the first free column, zero
// at the other free columns, back-substituted at the pivots.
std::vector<Rational> kernel_from_echelon(const Echelon& ech, int n) {
    int free_col = -1;
    {
        int pi = 0;
        for (int c = 0; c < n; ++c) {
            if (pi < ech.rank && ech.pivot_cols[pi] == c) {
                ++pi;
            } else {
                free_col = c;
                break;
            }
        }
    }
    if (free_col < 0) throw std::logic_error("full-rank matrix has no kernel");
    std::vector<Rational> v(n, Rational(0));
    v[free_col] = 1;
    for (int i = ech.rank - 1; i >= 0; --i) {
        const int c = ech.pivot_cols[i];
        Rational s = 0;
        for (int j = c + 1; j < n; ++j) {
            if (v[j] != 0) s += Rational(ech.e[i][j]) * v[j];
        }
        v[c] = -s / Rational(ech.e[i][c]);
        v[c].canonicalize();
    }
    return v;
}

}  // namespace

std::vector<std::vector<Rational>> evaluation_matrix(const Shape& shape,
                                                     Family family,
                                                     const Params& params,
                                                     std::int64_t max_entries) {
    const int n = shape.n();
    if (n > 20 || factorial64(n) > max_entries) {
        throw CapExceeded("evaluation matrix for n=" + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(max_entries) +
                          " fillings");
    }
    const auto fillings = enumerate_fillings(shape, family, n);
    const int d = static_cast<int>(fillings.size());
    std::vector<FactorProduct> phis;
    std::vector<OrbitPoint> points;
    phis.reserve(d);
    points.reserve(d);
    for (const auto& f : fillings) {
        phis.push_back(phi(f, family));
        points.push_back(orbit_point(f, params));
    }
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            m[i][j] = phis[i].evaluate(points[j], params);
        }
    }
    return m;
}

CertifyReport certify_nonsingular_matrix(
    const std::vector<std::vector<Rational>>& m) {
    const int n = static_cast<int>(m.size());
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("certify requires a square matrix");
        }
    }
    if (n == 0) return {true, {}};
    const auto z = clear_denominators(m);
    // A nonzero determinant mod a prime settles the question without big
    // minors; only a (rare in this problem) zero falls through to the exact
    // elimination.
    if (n >= 12) {
        for (u64 p : prescreen_primes()) {
            if (nonsingular_mod_p(z, p)) return {true, {}};
        }
    }
    const auto ech = bareiss(z);
    if (ech.rank == n) return {true, {}};
    auto v = kernel_from_echelon(ech, n);
    for (int i = 0; i < n; ++i) {
        Rational s = 0;
        for (int j = 0; j < n; ++j) {
            if (v[j] != 0) s += m[i][j] * v[j];
        }
        if (s != 0) throw std::logic_error("kernel witness failed to verify");
    }
    return {false, std::move(v)};
}

CertifyReport certify_nonsingular(const Shape& shape, Family family,
                                  const Params& params,
                                  std::int64_t max_entries) {
    return certify_nonsingular_matrix(
        evaluation_matrix(shape, family, params, max_entries));
}

std::optional<std::pair<int, int>> check_triangular_violation(
    const std::vector<std::vector<Rational>>& m) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) {
        if (m[i][i] == 0) return std::make_pair(i, i);
        for (int j = 0; j < i; ++j) {
            if (m[i][j] != 0) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<int, int>> check_block_triangular_by_largest(
    const Shape& shape, Family family, const Params& params,
    std::int64_t max_entries) {
    const int n = shape.n();
    if (n > 20 || factorial64(n) > max_entries) {
        throw CapExceeded("block check for n=" + std::to_string(n) +
                          " exceeds the cap of " + std::to_string(max_entries) +
                          " fillings");
    }
    std::vector<RowOcc> empty;
    for (int r = 1; r <= shape.num_rows(); ++r) {
        empty.push_back(RowOcc{shape.row_len(r), r, 0, 0});
    }
    const auto pref = (family == Family::TwoColumn)
                          ? prefer_rows_two_column(empty)
                          : prefer_rows_hook(empty);
    std::vector<int> rank_of_row(shape.num_rows() + 1, -1);
    for (int i = 0; i < static_cast<int>(pref.size()); ++i) {
        rank_of_row[pref[i] + 1] = i;
    }
    const auto fillings = enumerate_fillings(shape, family, n);
    const int d = static_cast<int>(fillings.size());
    std::vector<int> block(d);
    for (int i = 0; i < d; ++i) {
        block[i] = rank_of_row[fillings[i].row_of(n)];
        if (block[i] < 0) throw std::logic_error("filling outside block order");
        if (i > 0 && block[i] < block[i - 1]) {
            throw std::logic_error("kicking order does not refine the blocks");
        }
    }
    std::vector<FactorProduct> phis;
    std::vector<OrbitPoint> points;
    phis.reserve(d);
    points.reserve(d);
    for (const auto& f : fillings) {
        phis.push_back(phi(f, family));
        points.push_back(orbit_point(f, params));
    }
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (block[j] >= block[i]) continue;
            if (phis[i].evaluate(points[j], params) != 0) {
                return std::make_pair(i, j);
            }
        }
    }
    return std::nullopt;
}

}  // namespace kickbasis
