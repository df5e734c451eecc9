#include "doctest.h"
#include "kickbasis/qtpoly.hpp"

using kickbasis::DegreeOverflow;
using kickbasis::NonDivisible;
using kickbasis::NonExactDivision;
using kickbasis::QTPoly;
using kickbasis::t_fact;
using kickbasis::t_int;

namespace {
// 1 + 2q + 2t + qt, the running example throughout the suite.
QTPoly f21() {
    QTPoly f(1);
    f += QTPoly::term(2, 0, 1);
    f += QTPoly::term(2, 1, 0);
    f += QTPoly::term(1, 1, 1);
    return f;
}
}  // namespace

TEST_CASE("text form puts q before t, terms by (t,q)") {
    CHECK(QTPoly().str() == "0");
    CHECK(QTPoly(1).str() == "1");
    CHECK(QTPoly(-2).str() == "-2");
    CHECK(QTPoly::term(1, 1, 1).str() == "q*t");
    CHECK(QTPoly::term(3, 2, 0).str() == "3*t^2");
    CHECK(QTPoly::term(1, 2, 3).str() == "q^3*t^2");
    CHECK(f21().str() == "1 + 2*q + 2*t + q*t");
    CHECK((t_int(1) - t_int(2)).str() == "-t");
}

TEST_CASE("json form is stable") {
    CHECK((QTPoly(1) + QTPoly::term(1, 0, 1)).json() ==
          "{\"terms\":[{\"t\":0,\"q\":0,\"c\":1},{\"t\":0,\"q\":1,\"c\":1}]}");
    CHECK(QTPoly().json() == "{\"terms\":[]}");
}

TEST_CASE("ring operations") {
    const QTPoly q = QTPoly::term(1, 0, 1);
    const QTPoly t = QTPoly::term(1, 1, 0);
    CHECK((q + t) * (q + t) == q * q + QTPoly(2) * q * t + t * t);
    CHECK(q - q == QTPoly());
    CHECK(QTPoly() * q == QTPoly());
    CHECK(q * t == QTPoly::term(1, 1, 1));
}

TEST_CASE("coefficient and degree queries") {
    CHECK(f21().coeff(0, 1) == 2);
    CHECK(f21().coeff(1, 1) == 1);
    CHECK(f21().coeff(3, 0) == 0);
    CHECK(f21().max_degrees() == std::pair<int, int>{1, 1});
    CHECK(QTPoly().max_degrees() == std::pair<int, int>{-1, -1});
    CHECK(f21().eval_one_one() == 6);
}

TEST_CASE("t-analogs") {
    CHECK(t_int(1) == QTPoly(1));
    CHECK(t_int(3).str() == "1 + t + t^2");
    CHECK(t_fact(3).str() == "1 + 2*t + 2*t^2 + t^3");
    CHECK(t_fact(4).eval_one_one() == 24);
    CHECK(t_int(0) == QTPoly());
    CHECK(t_fact(0) == QTPoly(1));
}

TEST_CASE("exact division recovers cofactors") {
    CHECK(t_fact(3).divide_exact(t_int(2)) == t_int(3));
    CHECK(f21().divide_exact(f21()) == QTPoly(1));
    CHECK((f21() * t_fact(2)).divide_exact(t_fact(2)) == f21());
    CHECK_THROWS_AS(t_int(2).divide_exact(QTPoly::term(1, 0, 1)),
                    NonDivisible);
    CHECK_THROWS_AS(QTPoly(3).divide_exact(QTPoly(2)), NonDivisible);
}

TEST_CASE("q shift requires every term to carry the power") {
    CHECK(QTPoly::term(1, 0, 2).shift_down_q(1) == QTPoly::term(1, 0, 1));
    CHECK(f21().shift_down_q(0) == f21());
    CHECK_THROWS_AS((QTPoly(1) + QTPoly::term(1, 0, 1)).shift_down_q(1),
                    NonExactDivision);
}

TEST_CASE("degree reversal and symmetry") {
    CHECK(f21().qt_symmetric(1, 1));
    CHECK_FALSE((QTPoly(1) + QTPoly::term(1, 0, 1)).qt_symmetric(1, 1));
    CHECK(t_int(3).qt_symmetric(2, 0));
    CHECK(f21().qt_reverse(1, 1) == f21());
    CHECK(QTPoly::term(1, 0, 0).qt_reverse(2, 1) == QTPoly::term(1, 2, 1));
    CHECK_THROWS_AS(f21().qt_reverse(0, 0), DegreeOverflow);
}

TEST_CASE("variable swap") {
    CHECK(f21().swap_qt() == f21());
    CHECK(t_int(3).swap_qt().str() == "1 + q + q^2");
    CHECK(QTPoly::term(5, 2, 1).swap_qt() == QTPoly::term(5, 1, 2));
}
