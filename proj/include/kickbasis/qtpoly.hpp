#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace kickbasis {

struct DegreeOverflow : std::runtime_error {
    explicit DegreeOverflow(const std::string& what) : std::runtime_error(what) {}
};
struct NonDivisible : std::runtime_error {
    explicit NonDivisible(const std::string& what) : std::runtime_error(what) {}
};
// A q^m division left a remainder; signals an implementation fault in the
// forced-cell enumeration rather than bad input.
struct NonExactDivision : std::runtime_error {
    explicit NonExactDivision(const std::string& what) : std::runtime_error(what) {}
};

// Polynomial in q,t with integer coefficients. Exponents are small and
// nonnegative; coefficients fit comfortably in 64 bits for every size this
// library reaches (n! at n<=9).
class QTPoly {
  public:
    QTPoly() = default;
    explicit QTPoly(std::int64_t c);  // constant
    static QTPoly term(std::int64_t c, int tdeg, int qdeg);

    QTPoly& operator+=(const QTPoly&);
    QTPoly& operator-=(const QTPoly&);
    QTPoly operator+(const QTPoly&) const;
    QTPoly operator-(const QTPoly&) const;
    QTPoly operator*(const QTPoly&) const;
    bool operator==(const QTPoly&) const = default;

    bool is_zero() const { return terms_.empty(); }
    std::int64_t coeff(int tdeg, int qdeg) const;
    // Max exponent appearing on each variable; (-1,-1) for the zero poly.
    std::pair<int, int> max_degrees() const;

    // Exact division; throws NonDivisible when the remainder is nonzero.
    QTPoly divide_exact(const QTPoly& d) const;
    // Divides by q^m; throws NonExactDivision when some term has qdeg < m.
    QTPoly shift_down_q(int m) const;

    // Reverses each variable at the stated degrees: t^i q^j -> t^(N-i) q^(M-j).
    // Throws DegreeOverflow when a term exceeds (N,M).
    QTPoly qt_reverse(int N, int M) const;
    bool qt_symmetric(int N, int M) const { return qt_reverse(N, M) == *this; }

    // Swaps q and t in every term.
    QTPoly swap_qt() const;

    std::int64_t eval_one_one() const;  // value at q=t=1

    // Text form: terms sorted by (tdeg, qdeg); each term "c*q^j*t^i" with unit
    // coefficients, first powers and zero exponents elided ("1 + 2*q + 2*t +
    // q*t"). The zero polynomial prints "0".
    std::string str() const;
    // JSON form {"terms":[{"t":i,"q":j,"c":c},...]} in the same term order.
    std::string json() const;

  private:
    // (tdeg, qdeg) -> coefficient, zero coefficients never stored.
    std::map<std::pair<int, int>, std::int64_t> terms_;
};

QTPoly t_int(int m);   // [m]_t = 1 + t + ... + t^(m-1)
QTPoly t_fact(int m);  // [m]_t!

}  // namespace kickbasis
