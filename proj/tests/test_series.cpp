#include <doctest.h>

#include <initializer_list>
#include <stdexcept>

#include <pdokit/series.hpp>

using pdokit::Int;
using pdokit::IntSeries;
using pdokit::MultiPoly;
using pdokit::PolySeries;

namespace {

IntSeries make(std::initializer_list<long long> v) {
    IntSeries s(v.size());
    std::size_t i = 0;
    for (long long c : v) s.set_coeff(i++, Int(c));
    return s;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("constructors and bounds") {
    CHECK(IntSeries::zero(4).is_identically_zero());
    CHECK(IntSeries::one(4) == make({1, 0, 0, 0}));
    CHECK(IntSeries::one(0).order() == 0);
    CHECK(IntSeries::monomial(2, Int(7), 5) == make({0, 0, 7, 0, 0}));
    // a monomial beyond the truncation contributes nothing
    CHECK(IntSeries::monomial(9, Int(7), 5).is_identically_zero());

    const IntSeries s = make({1, 2});
    CHECK(s.coeff(1) == Int(2));
    CHECK_THROWS_AS((void)s.coeff(2), std::out_of_range);
}

TEST_CASE("order bookkeeping is honest") {
    const IntSeries a = make({1, 1, 1, 1, 1});
    const IntSeries b = make({1, 2, 3});

    CHECK((a + b).order() == 3);
    CHECK((a - b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(a.shifted(2).order() == 7);
    CHECK(a.shifted(2) == make({0, 0, 1, 1, 1, 1, 1}));
    CHECK(a.truncated(2) == make({1, 1}));
    CHECK_THROWS_AS((void)b.truncated(4), std::invalid_argument);
    CHECK(a.subst_qpow(3).order() == 15);
    CHECK(a.subst_qpow(1) == a);
    CHECK_THROWS_AS((void)a.subst_qpow(0), std::invalid_argument);
}

TEST_CASE("dissection slices") {
    const IntSeries s = make({1, 2, 3, 4, 5, 6, 7});
    CHECK(s.dissect(2, 0) == make({1, 3, 5, 7}));
    CHECK(s.dissect(2, 1) == make({2, 4, 6}));
    CHECK(s.dissect(3, 2) == make({3, 6}));
    CHECK(s.dissect(7, 6) == make({7}));
    CHECK(make({1}).dissect(2, 1).order() == 0);
    CHECK_THROWS_AS((void)s.dissect(0, 0), std::invalid_argument);
    CHECK_THROWS_AS((void)s.dissect(2, 2), std::invalid_argument);
}

TEST_CASE("reassembly from the two slices") {
    const IntSeries s = make({3, 1, 4, 1, 5, 9, 2, 6});
    const IntSeries even = s.dissect(2, 0);
    const IntSeries odd = s.dissect(2, 1);
    CHECK(even == make({3, 4, 5, 2}));
    CHECK(odd == make({1, 1, 9, 6}));
    const IntSeries back = even.subst_qpow(2).truncated(8) +
                           odd.subst_qpow(2).shifted(1).truncated(8);
    CHECK(back == s);
}

TEST_CASE("reciprocals of unit series") {
    const IntSeries a = make({1, -1, 0, 0, 0, 0});
    CHECK(a.inverse() == make({1, 1, 1, 1, 1, 1}));
    CHECK(a * a.inverse() == IntSeries::one(6));

    const IntSeries b = make({1, 1, 0, 0, 0});
    CHECK(b.inverse() == make({1, -1, 1, -1, 1}));

    const IntSeries c = make({-1, 1, 0, 0});
    CHECK(c.inverse() == make({-1, -1, -1, -1}));
    CHECK(c * c.inverse() == IntSeries::one(4));

    CHECK_THROWS_AS((void)make({2, 0}).inverse(), pdokit::NonUnitConstantTerm);
    CHECK_THROWS_AS((void)make({0, 1}).inverse(), pdokit::NonUnitConstantTerm);
    CHECK_THROWS_AS((void)IntSeries(0).inverse(), pdokit::NonUnitConstantTerm);
}

TEST_CASE("first_difference pinpoints the lowest disagreement") {
    const IntSeries a = make({5, 0, -2, 7, 1});
    CHECK_FALSE(pdokit::first_difference(a, a).has_value());

    IntSeries b = a;
    b.add_coeff(2, Int(3));
    b.add_coeff(4, Int(1));
    const auto d = pdokit::first_difference(a, b);
    REQUIRE(d.has_value());
    CHECK(d->power == 2);
    CHECK(d->expected == Int(-2));
    CHECK(d->actual == Int(1));

    // comparison stops at the smaller order
    CHECK_FALSE(pdokit::first_difference(a, a.truncated(2)).has_value());
}

TEST_CASE("scaling and in-place operators") {
    const IntSeries a = make({1, 2, 3});
    CHECK(a.scaled(Int(-2)) == make({-2, -4, -6}));
    IntSeries b = a;
    b += a;
    b *= a;
    CHECK(b == a.scaled(Int(2)) * a);
    b -= b;
    CHECK(b.is_identically_zero());
    CHECK((-a) + a == IntSeries::zero(3));
}

TEST_CASE("rendering") {
    CHECK(make({1, 0, -3}).to_string() == "1 + -3*q^2 + O(q^3)");
    CHECK(make({0, 2}).to_string() == "2*q + O(q^2)");
    CHECK(IntSeries(3).to_string() == "0 + O(q^3)");
}

TEST_CASE("polynomial coefficients") {
    const MultiPoly x = MultiPoly::x();
    PolySeries p(4);
    p.set_coeff(0, MultiPoly(1));
    p.set_coeff(1, x + MultiPoly(1));
    CHECK(p.to_string() == "1 + (x + 1)*q + O(q^4)");

    const PolySeries lifted = pdokit::to_poly_series(make({2, 0, -1}));
    CHECK(lifted.coeff(0) == MultiPoly(2));
    CHECK(lifted.coeff(1).is_zero());
    CHECK(lifted.coeff(2) == MultiPoly(-1));

    // mapping back to integers by evaluation round-trips
    const IntSeries down = pdokit::map_series<Int>(
        lifted, [](const MultiPoly& c) { return c.eval(Int(1), Int(1)); });
    CHECK(down == make({2, 0, -1}));

    // products in the polynomial ring: (1 + x q)^2
    PolySeries g(3);
    g.set_coeff(0, MultiPoly(1));
    g.set_coeff(1, x);
    const PolySeries sq = g * g;
    CHECK(sq.coeff(1) == x * 2);
    CHECK(sq.coeff(2) == x * x);
}

}  // TEST_SUITE
