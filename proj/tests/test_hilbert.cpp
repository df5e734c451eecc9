#include "doctest.h"
#include "kickbasis/hilbert.hpp"

using kickbasis::Family;
using kickbasis::QTPoly;
using kickbasis::Shape;
using kickbasis::degree_polynomial;
using kickbasis::j_enumerated;
using kickbasis::j_recurrence_first;
using kickbasis::j_recurrence_second;
using kickbasis::j_reduced;
using kickbasis::j_reduced_top_degrees;
using kickbasis::j_table;
using kickbasis::j_top_degrees;
using kickbasis::symmetry_report;
using kickbasis::t_fact;
using kickbasis::top_degrees;

namespace {
QTPoly f21() {
    QTPoly f(1);
    f += QTPoly::term(2, 0, 1);
    f += QTPoly::term(2, 1, 0);
    f += QTPoly::term(1, 1, 1);
    return f;
}
std::int64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
}  // namespace

TEST_CASE("small degree polynomials") {
    CHECK(degree_polynomial(Shape::parse("1")) == QTPoly(1));
    CHECK(degree_polynomial(Shape::parse("2")).str() == "1 + q");
    CHECK(degree_polynomial(Shape::parse("1,1")).str() == "1 + t");
    CHECK(degree_polynomial(Shape::parse("2,1")) == f21());
    CHECK(degree_polynomial(Shape::parse("2,1")).str() ==
          "1 + 2*q + 2*t + q*t");
    CHECK(degree_polynomial(Shape::parse("3")).str() ==
          "1 + 2*q + 2*q^2 + q^3");
    CHECK(degree_polynomial(Shape::parse("1,1,1")) == t_fact(3));
}

TEST_CASE("both routes give the same polynomial where both apply") {
    for (const char* spec : {"2", "2,1", "2,1,1"}) {
        const Shape shape = Shape::parse(spec);
        CHECK(degree_polynomial(shape, Family::TwoColumn) ==
              degree_polynomial(shape, Family::Hook));
    }
}

TEST_CASE("top degrees and the symmetry verdict") {
    const Shape shape = Shape::parse("2,1");
    CHECK(top_degrees(shape) == std::pair<int, int>{1, 1});
    const auto rep = symmetry_report(degree_polynomial(shape), 1, 1);
    CHECK(rep.pass);
    CHECK(rep.actual_t == 1);
    CHECK(rep.actual_q == 1);
    // A lopsided polynomial fails fast with its observed degrees.
    const auto bad = symmetry_report(QTPoly(1) + QTPoly::term(1, 0, 1), 1, 1);
    CHECK_FALSE(bad.pass);
    CHECK(bad.actual_t == 0);
    CHECK(bad.actual_q == 1);
}

TEST_CASE("refined polynomials at small sizes") {
    CHECK(j_enumerated(1, 1, 1) == QTPoly(1));
    CHECK(j_enumerated(1, 1, 0).str() == "1 + q");
    CHECK(j_enumerated(2, 1, 1) == QTPoly(2));
    CHECK(j_enumerated(2, 1, 0) == f21());
    CHECK(j_enumerated(2, 2, 2).str() == "1 + t");
    CHECK(j_enumerated(2, 2, 1) == f21());
    // Out-of-range indices give the zero polynomial.
    CHECK(j_enumerated(1, 2, 0) == QTPoly());
    CHECK(j_enumerated(2, 2, 3) == QTPoly());
    CHECK(j_recurrence_first(1, 2, 0) == QTPoly());
}

TEST_CASE("the two recurrences and the enumeration agree") {
    for (int a = 1; a <= 3; ++a) {
        for (int b = 0; b <= a; ++b) {
            for (int m = 0; m <= b; ++m) {
                const QTPoly je = j_enumerated(a, b, m);
                const QTPoly r1 = j_recurrence_first(a, b, m);
                const QTPoly r2 = j_recurrence_second(a, b, m);
                CHECK(je == r1);
                CHECK(r1 == r2);
            }
        }
    }
}

TEST_CASE("full-restriction initial condition") {
    for (int a = 1; a <= 5; ++a) {
        for (int b = 0; b <= a; ++b) {
            CHECK(j_recurrence_first(a, b, b) ==
                  QTPoly(binom(a, b)) * t_fact(b) * t_fact(a - b));
        }
    }
}

TEST_CASE("rectangles reduce the restriction depth") {
    for (int b = 1; b <= 3; ++b) {
        for (int m = 1; m <= b; ++m) {
            CHECK(j_recurrence_first(b, b, m) ==
                  j_recurrence_first(b, b - m, 0));
        }
    }
}

TEST_CASE("t-factorial divisibility and the reduced form") {
    CHECK(j_reduced(j_recurrence_first(3, 2, 2), 3, 2, 2) == QTPoly(3));
    CHECK(j_reduced(j_recurrence_first(1, 1, 0), 1, 1, 0).str() == "1 + q");
    for (int a = 1; a <= 4; ++a) {
        for (int b = 0; b <= a; ++b) {
            for (int m = 0; m <= b; ++m) {
                const QTPoly jt =
                    j_reduced(j_recurrence_first(a, b, m), a, b, m);
                const auto [N, M] = j_reduced_top_degrees(a, b, m);
                CHECK(symmetry_report(jt, N, M).pass);
            }
        }
    }
}

TEST_CASE("stated top degrees match the polynomials") {
    CHECK(j_top_degrees(2, 2, 1) == std::pair<int, int>{1, 1});
    for (int a = 1; a <= 4; ++a) {
        for (int b = 0; b <= a; ++b) {
            for (int m = 0; m <= b; ++m) {
                const QTPoly j = j_recurrence_first(a, b, m);
                CHECK(j.max_degrees() == j_top_degrees(a, b, m));
            }
        }
    }
}

TEST_CASE("unrestricted values at one count the fillings") {
    std::int64_t fact = 1;
    for (int n = 1; n <= 6; ++n) {
        fact *= n;
        for (int b = 0; 2 * b <= n; ++b) {
            CHECK(j_recurrence_first(n - b, b, 0).eval_one_one() == fact);
        }
    }
}

TEST_CASE("table covers the triangle and matches the recurrence") {
    const auto table = j_table(5);
    CHECK(table.count({2, 1, 0}) == 1);
    CHECK(table.count({3, 2, 2}) == 1);
    CHECK(table.count({3, 3, 0}) == 0);  // a + b beyond the cap
    for (const auto& [key, value] : table) {
        CHECK(value == j_recurrence_first(key.a, key.b, key.m));
    }
}
