#include <doctest.h>

#include <cstdlib>
#include <initializer_list>
#include <vector>

#include <pdokit/qfunctions.hpp>

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

// Oracle: multiply out prod (1 - q^(rk)) by plain out-of-place convolution.
IntSeries naive_eta(unsigned r, std::size_t order) {
    std::vector<Int> prod(order, Int(0));
    if (order > 0) prod[0] = 1;
    for (std::size_t k = r; k < order; k += r) {
        std::vector<Int> next(order, Int(0));
        for (std::size_t i = 0; i < order; ++i) {
            if (prod[i].is_zero()) continue;
            next[i] += prod[i];
            if (i + k < order) next[i + k] -= prod[i];
        }
        prod = std::move(next);
    }
    IntSeries s(order);
    for (std::size_t i = 0; i < order; ++i) s.set_coeff(i, prod[i]);
    return s;
}

// Oracle: the pentagonal expansion sum_j (-1)^j q^(j(3j-1)/2) over all
// integers j, truncated.
IntSeries pentagonal(std::size_t order) {
    IntSeries s(order);
    for (long long j = -100; j <= 100; ++j) {
        const long long e = j * (3 * j - 1) / 2;
        if (e >= 0 && static_cast<std::size_t>(e) < order)
            s.add_coeff(static_cast<std::size_t>(e), Int(j % 2 == 0 ? 1 : -1));
    }
    return s;
}

}  // namespace

TEST_SUITE("qfunctions") {

TEST_CASE("eta factor pinned values") {
    CHECK(pdokit::eta_factor(1, 8) == make({1, -1, -1, 0, 0, 1, 0, 1}));
    CHECK(pdokit::eta_factor(2, 7) == make({1, 0, -1, 0, -1, 0, 0}));
    CHECK(pdokit::eta_factor(5, 4) == make({1, 0, 0, 0}));
    CHECK(pdokit::eta_factor(3, 0).order() == 0);
}

TEST_CASE("eta factor against two independent routes") {
    CHECK(pdokit::eta_factor(1, 60) == pentagonal(60));
    for (unsigned r = 1; r <= 4; ++r) CHECK(pdokit::eta_factor(r, 30) == naive_eta(r, 30));
    // f_r(q) = f_1(q^r)
    for (unsigned r : {2u, 3u, 5u, 12u}) {
        const std::size_t up = (40 + r - 1) / r;
        CHECK(pdokit::eta_factor(r, 40) ==
              pdokit::eta_factor(1, up).subst_qpow(r).truncated(40));
    }
}

TEST_CASE("eta quotients reproduce classical counting sequences") {
    // partition numbers from 1/f1
    CHECK(pdokit::eta_quotient({{}, {{1, 1}}}, 11) ==
          make({1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42}));
    // overpartitions from f2/f1^2
    CHECK(pdokit::overpartition_series(6) == make({1, 2, 4, 8, 14, 24}));
    CHECK(pdokit::overpartition_series(6) ==
          pdokit::eta_quotient({{{2, 1}}, {{1, 2}}}, 6));
    // empty spec is the constant 1
    CHECK(pdokit::eta_quotient({{}, {}}, 5) == IntSeries::one(5));
}

TEST_CASE("eta quotient spec validation") {
    CHECK_THROWS_AS((void)pdokit::eta_quotient({{{0, 1}}, {}}, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)pdokit::eta_quotient({{{2, 0}}, {}}, 5), std::invalid_argument);
    CHECK_THROWS_AS((void)pdokit::eta_quotient({{{2, 1}, {2, 1}}, {}}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)pdokit::eta_quotient({{}, {{3, 1}, {3, 2}}}, 5),
                    std::invalid_argument);
}

TEST_CASE("theta sums pinned and in product form") {
    CHECK(pdokit::theta_phi(10) == make({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
    CHECK(pdokit::theta_psi(7) == make({1, 1, 0, 1, 0, 0, 1}));
    CHECK(pdokit::theta_phi(0).order() == 0);

    CHECK(pdokit::theta_phi(60) ==
          pdokit::eta_quotient({{{2, 5}}, {{1, 2}, {4, 2}}}, 60));
    CHECK(pdokit::theta_psi(60) == pdokit::eta_quotient({{{2, 2}}, {{1, 1}}}, 60));
}

TEST_CASE("designated odd-part counting series") {
    const IntSeries s = pdokit::pdo_counting_series(40);
    CHECK(s.truncated(11) == make({1, 1, 2, 4, 5, 8, 12, 16, 22, 32, 42}));
    CHECK(s.coeff(24) == Int(1308));
    CHECK(s.coeff(39) == Int(21368));
}

TEST_CASE("odd-index products") {
    // distinct odd parts: prod (1 + q^(2m-1)) = f2^2 / (f1 f4)
    const IntSeries distinct_odd = pdokit::odd_index_product<Int>(
        [](std::size_t m) {
            return IntSeries::one(40) + IntSeries::monomial(2 * m - 1, Int(1), 40);
        },
        40);
    CHECK(distinct_odd == pdokit::eta_quotient({{{2, 2}}, {{1, 1}, {4, 1}}}, 40));

    // factors identically 1 multiply to 1
    CHECK(pdokit::odd_index_product<Int>(
              [](std::size_t) { return IntSeries::one(10); }, 10) == IntSeries::one(10));

    // polynomial factors 1 + x^2 * q^r/(1-q^r)^2 with r = 2m-1; the q^3
    // coefficient collects 3x^2 from r = 1 and x^2 from r = 3
    const PolySeries geom = pdokit::odd_index_product<MultiPoly>(
        [](std::size_t m) {
            const std::size_t r = 2 * m - 1;
            PolySeries f = PolySeries::one(8);
            for (std::size_t i = 1; i * r < 8; ++i)
                f.add_coeff(i * r, MultiPoly::monomial(2, 0, Int(i)));
            return f;
        },
        8);
    CHECK(geom.coeff(1) == MultiPoly::monomial(2, 0, Int(1)));
    CHECK(geom.coeff(3) == MultiPoly::monomial(2, 0, Int(4)));
}

TEST_CASE("odd-index product rejects bad factors") {
    CHECK_THROWS_AS((void)pdokit::odd_index_product<Int>(
                        [](std::size_t) { return IntSeries::zero(10); }, 10),
                    pdokit::FactorNotUnit);
    // support below 2m-1: the m = 2 factor may not touch q^1
    CHECK_THROWS_AS((void)pdokit::odd_index_product<Int>(
                        [](std::size_t) {
                            return IntSeries::one(10) + IntSeries::monomial(1, Int(1), 10);
                        },
                        10),
                    std::invalid_argument);
    // factors must be known at least to the requested order
    CHECK_THROWS_AS((void)pdokit::odd_index_product<Int>(
                        [](std::size_t) { return IntSeries::one(4); }, 10),
                    std::invalid_argument);
}

}  // TEST_SUITE
