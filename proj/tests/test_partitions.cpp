#include <doctest.h>

#include <functional>
#include <set>
#include <string>
#include <vector>

#include <pdokit/partitions.hpp>
#include <pdokit/qfunctions.hpp>

using pdokit::Int;
using pdokit::IntSeries;
using pdokit::MultiPoly;
using pdokit::PDOPair;
using pdokit::PDOPartition;
using pdokit::PolySeries;

namespace {

template <typename E, typename F>
std::string thrown_message(F&& f) {
    try {
        f();
    } catch (const E& e) {
        return e.what();
    }
    return {};
}

// Oracle: weighted count of odd-part partitions, each weighted by the
// product of its multiplicities (= number of ways to place one mark per
// distinct size). Plain recursion on the largest size, no library code.
Int marked_count_oracle(unsigned n) {
    std::function<Int(unsigned, unsigned)> rec = [&](unsigned rem,
                                                     unsigned maxsize) -> Int {
        if (rem == 0) return Int(1);
        Int total(0);
        for (unsigned s = std::min(maxsize, rem); s >= 1; --s) {
            if (s % 2 == 0) continue;
            for (unsigned m = 1; m * s <= rem; ++m)
                total += Int(m) * rec(rem - m * s, s > 0 ? s - 1 : 0);
            if (s == 1) break;
        }
        return total;
    };
    return rec(n, n);
}

// Oracle for the k-size weighted decompositions: sum of prod(m_i) over
// n = m_1 s_1 + ... + m_k s_k with s_1 > ... > s_k from the allowed set.
Int selection_oracle(unsigned n, unsigned k, bool odd_only) {
    std::function<Int(unsigned, unsigned, unsigned)> rec =
        [&](unsigned rem, unsigned left, unsigned maxsize) -> Int {
        if (left == 0) return rem == 0 ? Int(1) : Int(0);
        Int total(0);
        for (unsigned s = maxsize; s >= 1; --s) {
            if (odd_only && s % 2 == 0) continue;
            if (s > rem) continue;
            for (unsigned m = 1; m * s <= rem; ++m)
                total += Int(m) * rec(rem - m * s, left - 1, s - 1);
            if (s == 1) break;
        }
        return total;
    };
    return rec(n, k, n);
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("parse and render round trips") {
    const PDOPartition p = PDOPartition::parse("7'+3+3'+1+1+1+1'+1");
    CHECK(p.weight() == 18);
    CHECK(p.to_string() == "7'+3+3'+1+1+1+1'+1");
    CHECK(PDOPartition::parse(p.to_string()) == p);

    CHECK(PDOPartition::parse("").empty());
    CHECK(PDOPartition::parse("\xE2\x88\x85").empty());
    CHECK(PDOPartition().to_string() == "\xE2\x88\x85");
    CHECK(PDOPartition().weight() == 0);

    // whitespace and part order are unconstrained on input
    CHECK(PDOPartition::parse("  1' + 3'  ") == PDOPartition::parse("3'+1'"));

    // every enumerated object round-trips through its text form
    for (const auto& q : pdokit::enumerate_pdo(9))
        CHECK(PDOPartition::parse(q.to_string()) == q);
}

TEST_CASE("parse rejects malformed text, naming the offending size") {
    using pdokit::ParseError;
    CHECK(thrown_message<ParseError>([] { PDOPartition::parse("2'"); }).find("even") !=
          std::string::npos);
    CHECK(thrown_message<ParseError>([] { PDOPartition::parse("3"); }).find("no mark") !=
          std::string::npos);
    CHECK(thrown_message<ParseError>([] {
              PDOPartition::parse("3'+3'");
          }).find("more than one mark") != std::string::npos);
    CHECK_THROWS_AS((void)PDOPartition::parse("3'+"), ParseError);
    CHECK_THROWS_AS((void)PDOPartition::parse("0'"), ParseError);
    CHECK_THROWS_AS((void)PDOPartition::parse("abc"), ParseError);
    CHECK_THROWS_AS((void)PDOPartition::parse("3''"), ParseError);
    CHECK_THROWS_AS((void)PDOPartition::parse("99999999999999999999'"), ParseError);
}

TEST_CASE("run map validation") {
    using RunMap = PDOPartition::RunMap;
    CHECK_THROWS_AS(PDOPartition(RunMap{{4, {2, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(PDOPartition(RunMap{{3, {2, 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(PDOPartition(RunMap{{3, {2, 3}}}), std::invalid_argument);
    CHECK_THROWS_AS(PDOPartition(RunMap{{0, {1, 1}}}), std::invalid_argument);
    CHECK(PDOPartition(RunMap{{3, {2, 1}}, {1, {1, 1}}}).weight() == 7);
}

TEST_CASE("statistics") {
    const auto s = pdokit::pdo_stats(PDOPartition::parse("7'+3+3'+1+1+1+1'+1"));
    CHECK(s.weight == 18);
    CHECK(s.distinct_sizes == 3);
    CHECK(s.odd_multiplicity_sizes == 2);

    const auto e = pdokit::pdo_stats(PDOPartition());
    CHECK(e.weight == 0);
    CHECK(e.distinct_sizes == 0);
    CHECK(e.odd_multiplicity_sizes == 0);

    const PDOPair pair{PDOPartition::parse("3'+3+1+1+1'"),
                       PDOPartition::parse("5'+5+3'")};
    const auto ps = pdokit::pair_stats(pair);
    CHECK(ps.weight == 22);
    CHECK(ps.distinct_sizes == 4);
    CHECK(ps.shared_sizes == 1);
}

TEST_CASE("pair text form") {
    const PDOPair pair{PDOPartition::parse("1'+1"), PDOPartition()};
    CHECK(pdokit::pair_to_string(pair) == "(1'+1 | \xE2\x88\x85)");
    const PDOPair back = pdokit::parse_pair("(1'+1 | \xE2\x88\x85)");
    CHECK(back.mu == pair.mu);
    CHECK(back.nu == pair.nu);
    CHECK(pdokit::parse_pair("( 3' | 1' )").mu == PDOPartition::parse("3'"));

    CHECK_THROWS_AS((void)pdokit::parse_pair("3' | 1'"), pdokit::ParseError);
    CHECK_THROWS_AS((void)pdokit::parse_pair("(3' , 1')"), pdokit::ParseError);
    CHECK_THROWS_AS((void)pdokit::parse_pair("(3' | 1' | 5')"), pdokit::ParseError);
}

TEST_CASE("enumeration: weight 4 in the documented order") {
    const auto all = pdokit::enumerate_pdo(4);
    const std::vector<std::string> expected = {"3'+1'", "1'+1+1+1", "1+1'+1+1",
                                               "1+1+1'+1", "1+1+1+1'"};
    REQUIRE(all.size() == expected.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(all[i].to_string() == expected[i]);

    CHECK(pdokit::enumerate_pdo(0).size() == 1);
    CHECK(pdokit::enumerate_pdo(0)[0].empty());
    CHECK(pdokit::enumerate_pdo(2).size() == 2);
}

TEST_CASE("enumeration counts match the counting series and the oracle") {
    const IntSeries series = pdokit::pdo_counting_series(19);
    const std::vector<long long> table = {1, 1, 2, 4, 5, 8, 12, 16, 22, 32, 42};
    for (unsigned n = 0; n < 19; ++n) {
        const Int count(pdokit::enumerate_pdo(n).size());
        CHECK(count == series.coeff(n));
        CHECK(count == marked_count_oracle(n));
        if (n < table.size()) CHECK(count == Int(table[n]));
    }
}

TEST_CASE("statistic series: single partitions") {
    const PolySeries p1 = pdokit::p1_enumerated(9);
    CHECK(p1.coeff(0) == MultiPoly(1));
    CHECK(p1.coeff(1) == MultiPoly::monomial(1, 1));
    CHECK(p1.coeff(2) == MultiPoly::monomial(1, 0, Int(2)));
    CHECK(p1.coeff(8).coeff(2, 2) == Int(10));
    // weight-8 objects split by distinct-size count: 8 with one, 14 with two
    CHECK(p1.coeff(8).subst_y(Int(1)) ==
          MultiPoly::monomial(1, 0, Int(8)) + MultiPoly::monomial(2, 0, Int(14)));
}

TEST_CASE("statistic series: ordered pairs") {
    const PolySeries p2 = pdokit::p2_enumerated(5);
    CHECK(p2.coeff(0) == MultiPoly(1));
    CHECK(p2.coeff(1) == MultiPoly::monomial(1, 0, Int(2)));
    CHECK(p2.coeff(4) == MultiPoly::monomial(1, 0, Int(8)) +
                             MultiPoly::monomial(2, 0, Int(4)) +
                             MultiPoly::monomial(2, 2, Int(10)));
    // evaluating x = y = 1 recovers the pair count, the series self-convolution
    const IntSeries counts = pdokit::pdo_counting_series(5);
    for (unsigned n = 0; n < 5; ++n) {
        Int conv(0);
        for (unsigned k = 0; k <= n; ++k) conv += counts.coeff(k) * counts.coeff(n - k);
        CHECK(p2.coeff(n).eval(Int(1), Int(1)) == conv);
    }
}

TEST_CASE("weighted selection tables") {
    const IntSeries c1 = pdokit::ck_enumerated(1, 21);
    const IntSeries c2 = pdokit::ck_enumerated(2, 21);
    CHECK(pdokit::ck_enumerated(0, 6) == IntSeries::one(6));
    CHECK(c1.coeff(3) == Int(4));
    CHECK(c1.coeff(4) == Int(4));
    CHECK(c1.coeff(8) == Int(8));
    CHECK(c2.coeff(4) == Int(1));
    CHECK(c2.coeff(8) == Int(14));
    for (unsigned n = 0; n < 21; ++n) {
        CHECK(c1.coeff(n) == selection_oracle(n, 1, true));
        CHECK(c2.coeff(n) == selection_oracle(n, 2, true));
    }
    const auto rows = pdokit::ck_series_table(3, 21);
    REQUIRE(rows.size() == 4);
    CHECK(rows[1] == c1);
    CHECK(rows[2] == c2);
    for (unsigned n = 0; n < 21; ++n)
        CHECK(rows[3].coeff(n) == selection_oracle(n, 3, true));
}

TEST_CASE("unrestricted-size selection tables") {
    const IntSeries a1 = pdokit::ak_enumerated(1, 13);
    const IntSeries a2 = pdokit::ak_enumerated(2, 13);
    const std::vector<long long> sigma = {1, 3, 4, 7, 6, 12, 8, 15, 13, 18, 12, 28};
    const std::vector<long long> a2row = {0, 0, 1, 3, 9, 15, 30, 45, 67, 99, 135, 175};
    for (unsigned n = 1; n <= 12; ++n) {
        CHECK(a1.coeff(n) == Int(sigma[n - 1]));
        CHECK(a2.coeff(n) == Int(a2row[n - 1]));
        CHECK(a1.coeff(n) == selection_oracle(n, 1, false));
        CHECK(a2.coeff(n) == selection_oracle(n, 2, false));
    }
    CHECK_THROWS_AS((void)pdokit::ak_enumerated(0, 5), std::invalid_argument);
    const auto rows = pdokit::ak_series_table(2, 13);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == IntSeries::one(13));
    CHECK(rows[1] == a1);
    CHECK(rows[2] == a2);
}

TEST_CASE("pair split: worked examples") {
    const PDOPartition p = PDOPartition::parse("3+3'+1'+1");
    const PDOPair image = pdokit::bijection_forward(p);
    CHECK(pdokit::pair_to_string(image) == "(1' | 3')");
    CHECK(pdokit::bijection_inverse(image) == p);

    const PDOPartition q = PDOPartition::parse("1'+1+1+1");
    CHECK(pdokit::pair_to_string(pdokit::bijection_forward(q)) ==
          "(1'+1 | \xE2\x88\x85)");

    CHECK(pdokit::bijection_forward(PDOPartition()).mu.empty());
    CHECK(pdokit::bijection_inverse(PDOPair{}).empty());
}

TEST_CASE("pair split: domain errors") {
    CHECK(thrown_message<pdokit::OddMultiplicity>([] {
              (void)pdokit::bijection_forward(PDOPartition::parse("3'"));
          }).find("3") != std::string::npos);
    CHECK_THROWS_AS(
        (void)pdokit::bijection_forward(PDOPartition::parse("3+3'+5'+5+5")),
        pdokit::OddMultiplicity);
    CHECK_THROWS_AS((void)pdokit::bijection_inverse(PDOPair{
                        PDOPartition::parse("3'"), PDOPartition::parse("3'")}),
                    pdokit::SharedPartSize);
}

TEST_CASE("pair split: exhaustive round trip with preserved statistics") {
    const std::vector<long long> eligible_expected = {1, 2, 4, 8, 12, 20, 32, 48, 72};
    for (unsigned w = 0; w <= 16; ++w) {
        std::size_t eligible = 0;
        std::set<std::string> images;
        for (const auto& p : pdokit::enumerate_pdo(w)) {
            const auto st = pdokit::pdo_stats(p);
            if (st.odd_multiplicity_sizes != 0) continue;
            ++eligible;
            const PDOPair pair = pdokit::bijection_forward(p);
            const auto ps = pdokit::pair_stats(pair);
            CHECK(ps.weight * 2 == w);
            CHECK(ps.distinct_sizes == st.distinct_sizes);
            CHECK(ps.shared_sizes == 0);
            CHECK(pdokit::bijection_inverse(pair) == p);
            images.insert(pdokit::pair_to_string(pair));
        }
        CHECK(images.size() == eligible);
        if (w % 2 == 1) {
            CHECK(eligible == 0);
        } else {
            CHECK(Int(eligible) == Int(eligible_expected[w / 2]));
        }
    }
    // the same counts by a disjoint route: the y-free part of the statistic
    // series at x = 1
    const PolySeries p1 = pdokit::p1_enumerated(17);
    for (unsigned w = 0; w <= 16; w += 2)
        CHECK(p1.coeff(w).eval(Int(1), Int(0)) == Int(eligible_expected[w / 2]));
}

TEST_CASE("index maps on the wedge") {
    CHECK(pdokit::fe_map(3, 1) == std::pair<unsigned, unsigned>{4, 2});
    CHECK(pdokit::fo_map(3, 1) == std::pair<unsigned, unsigned>{3, 2});
    CHECK(pdokit::fe_map(5, 2) == std::pair<unsigned, unsigned>{7, 3});
    CHECK(pdokit::fo_map(5, 2) == std::pair<unsigned, unsigned>{6, 3});

    CHECK_THROWS_AS((void)pdokit::fe_map(2, 2), pdokit::NotInDomain);
    CHECK_THROWS_AS((void)pdokit::fo_map(2, 2), pdokit::NotInDomain);
    CHECK_THROWS_AS((void)pdokit::fe_map(3, 0), pdokit::NotInDomain);
    CHECK_THROWS_AS((void)pdokit::fo_map(1, 2), pdokit::NotInDomain);

    // on n <= 12 the two maps are injective and land exactly on the
    // same-parity / opposite-parity pairs they claim
    std::set<std::pair<unsigned, unsigned>> fe_images, fo_images;
    for (unsigned n = 2; n <= 12; ++n)
        for (unsigned m = 1; m < n; ++m) {
            const auto e = pdokit::fe_map(n, m);
            const auto o = pdokit::fo_map(n, m);
            CHECK(e.first > e.second);
            CHECK(e.second >= 1);
            CHECK((e.first - e.second) % 2 == 0);
            CHECK(o.first > o.second);
            CHECK(o.second >= 1);
            CHECK((o.first - o.second) % 2 == 1);
            CHECK(fe_images.insert(e).second);
            CHECK(fo_images.insert(o).second);
        }
    std::size_t same_parity = 0, opposite_parity = 0;
    for (unsigned a = 1; a <= 24; ++a)
        for (unsigned b = 1; b < a; ++b) {
            if (a + b > 24) continue;
            if ((a - b) % 2 == 0) ++same_parity;
            else if (a + b <= 23) ++opposite_parity;
        }
    CHECK(fe_images.size() == same_parity);
    CHECK(fo_images.size() == opposite_parity);
}

}  // TEST_SUITE
