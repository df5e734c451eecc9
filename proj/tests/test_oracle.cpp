#include "doctest.h"
#include "kickbasis/hilbert.hpp"
#include "kickbasis/kicking.hpp"
#include "kickbasis/oracle.hpp"

using kickbasis::Family;
using kickbasis::MultiPoly;
using kickbasis::Params;
using kickbasis::QTPoly;
using kickbasis::Rational;
using kickbasis::Shape;
using kickbasis::delta_determinant;
using kickbasis::expand;
using kickbasis::harmonic_hilbert;

TEST_CASE("arithmetic on the dense representation") {
    MultiPoly p(2);  // variables x1 x2 y1 y2
    p.add_term({1, 0, 0, 0}, Rational(1));
    p.add_term({0, 0, 1, 0}, Rational(2));
    MultiPoly q(2);
    q.add_term({0, 1, 0, 0}, Rational(1));
    const MultiPoly prod = p * q;
    CHECK(prod.term_count() == 2);
    CHECK(prod.terms().at({1, 1, 0, 0}) == 1);
    CHECK(prod.terms().at({0, 1, 1, 0}) == 2);
    p.add_term({1, 0, 0, 0}, Rational(-1));  // cancels to drop the term
    CHECK(p.term_count() == 1);
    CHECK(p.scaled(Rational(3)).terms().at({0, 0, 1, 0}) == 6);
}

TEST_CASE("derivatives act on one variable at a time") {
    MultiPoly p(2);
    p.add_term({2, 0, 1, 0}, Rational(1));  // x1^2 y1
    const MultiPoly dx = p.d_dx(1);
    CHECK(dx.terms().at({1, 0, 1, 0}) == 2);
    const MultiPoly dy = p.d_dy(1);
    CHECK(dy.terms().at({2, 0, 0, 0}) == 1);
    CHECK(p.d_dx(2).is_zero());
    CHECK(p.d_dy(2).is_zero());
}

TEST_CASE("shape determinant expands to signed monomials") {
    const MultiPoly d = delta_determinant(Shape::parse("2,1"));
    CHECK(d.term_count() == 6);
    // Swapping two column assignments flips the sign: x3*y2 vs x3*y1.
    CHECK(d.terms().at({0, 0, 1, 0, 1, 0}) ==
          -d.terms().at({0, 0, 1, 1, 0, 0}));
    CHECK(d.bidegree_of_leading() == std::pair<int, int>{1, 1});
}

TEST_CASE("expansion substitutes concrete constants") {
    const auto f = kickbasis::Filling::parse("2,1/3");
    const auto p = kickbasis::phi_two_column(f);  // (x3-a1)(y1-b1)
    const Shape shape = f.shape();
    const MultiPoly ex = expand(p, Params::defaults(shape), 3);
    CHECK(ex.terms().at({0, 0, 1, 1, 0, 0}) == 1);    // x3 y1
    CHECK(ex.terms().at({0, 0, 0, 0, 0, 0}) == 1);    // (-1)(-1)
    CHECK(ex.terms().at({0, 0, 1, 0, 0, 0}) == -1);   // x3 (-b1)
    CHECK(ex.bidegree_of_leading() == p.bidegree());
}

TEST_CASE("expanded basis polynomials lead with their variable part") {
    for (const char* spec : {"2,1", "2,2", "3,1"}) {
        const Shape shape = Shape::parse(spec);
        const Family family = shape.default_family();
        const Params params = Params::defaults(shape);
        for (const auto& f : kickbasis::enumerate_fillings(shape, family)) {
            const auto p = kickbasis::phi(f, family);
            CHECK(expand(p, params, shape.n()).bidegree_of_leading() ==
                  p.bidegree());
        }
    }
}

TEST_CASE("closure dimensions at tiny sizes") {
    CHECK(harmonic_hilbert(Shape::parse("1")) == QTPoly(1));
    CHECK(harmonic_hilbert(Shape::parse("2")).str() == "1 + q");
    CHECK(harmonic_hilbert(Shape::parse("1,1")).str() == "1 + t");
    CHECK(harmonic_hilbert(Shape::parse("2,1")).str() ==
          "1 + 2*q + 2*t + q*t");
}

TEST_CASE("conjugate shapes swap the variables") {
    CHECK(harmonic_hilbert(Shape::parse("1,1")) ==
          harmonic_hilbert(Shape::parse("2")).swap_qt());
    CHECK(harmonic_hilbert(Shape::parse("1,1,1")) ==
          harmonic_hilbert(Shape::parse("3")).swap_qt());
    CHECK(harmonic_hilbert(Shape::parse("2,1,1")) ==
          harmonic_hilbert(Shape::parse("3,1")).swap_qt());
}

TEST_CASE("closure dimension counts the fillings") {
    CHECK(harmonic_hilbert(Shape::parse("2,1")).eval_one_one() == 6);
    CHECK(harmonic_hilbert(Shape::parse("2,1,1")).eval_one_one() == 24);
    CHECK(harmonic_hilbert(Shape::parse("4,1")).eval_one_one() == 120);
}

TEST_CASE("closure matches the enumerated degrees") {
    for (const char* spec : {"2,2", "3,1", "2,1,1", "1,1,1,1"}) {
        const Shape shape = Shape::parse(spec);
        CHECK(harmonic_hilbert(shape) ==
              kickbasis::degree_polynomial(shape, shape.default_family()));
    }
}

TEST_CASE("oracle cap holds") {
    CHECK_THROWS_AS(delta_determinant(Shape::parse("3,1,1,1"), 5),
                    kickbasis::CapExceeded);
    CHECK_THROWS_AS(harmonic_hilbert(Shape::parse("2,2,1,1"), 5),
                    kickbasis::CapExceeded);
}
