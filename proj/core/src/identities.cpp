#include <pdokit/identities.hpp>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include <pdokit/chebyshev.hpp>
#include <pdokit/partitions.hpp>
#include <pdokit/qfunctions.hpp>
#include <pdokit/series.hpp>

// Constant-factor ledger for the integral Chebyshev rewrite.
//
// Every trig-flavored identity below is verified over the integral family
// p_n (p_0 = 2, p_1 = t, p_n = t*p_{n-1} - p_{n-2}; see chebyshev.hpp), i.e.
// p_n(t) = 2*T_n(t/2) with T_n the classical first-kind Chebyshev polynomial.
// Classical statements of these identities are written with half-argument
// sums "1 + 2*sum T_...(t/2) q^..."; substituting T_n(t/2) = p_n(t)/2 folds
// every displayed constant into the family. One row per identity as checked:
//
//   g-dissection, g2-special, gxgy-symmetric, andrews-rose, refine-x:
//     1 + 2*sum T_{2n} q^(n^2)              ->  1 + sum p_{2n} q^(n^2)
//     (and the analogous 4n / 4n-2 sums in the even/odd components)
//   root-identity:
//     (theta quotient)*(1 + 2*sum T_{4n} q^(2n^2))
//                                           ->  (same)*(1 + sum p_{4n} q^(2n^2))
//     4q*(theta quotient)*(sum T_{4n-2} q^(2n^2-2n))
//                                           ->  2q*(same)*(sum p_{4n-2} ...)
//     (1 + 2*sum T_{2n} q^(n^2))^2          ->  (1 + sum p_{2n} q^(n^2))^2
//   main-2dis, first line:
//     4q^2*(sum T_{4n-2} q^(4n^2-4n))^2     ->  q^2*(sum p_{4n-2} ...)^2
//   main-2dis, second line: T appears linearly on both sides, so the halves
//     cancel and the p-form keeps the classical shape verbatim.
//   cheby-xyuv, even line: as main-2dis first line, with arguments u and v.
//   cheby-xyuv, odd line: the classical form reads
//     2*(sum T..(x))(sum T..(y)) = (1+2 sum T..(u))(sum T..(v)) + (u <-> v);
//     after substituting p/2 a common factor 1/2 cancels, leaving
//     (sum p..(x))(sum p..(y)) = (1+sum p..(u))(sum p..(v)) + (u <-> v).
//   fa-identity:
//     2*sum T_{2n+1} q^(n^2+n)              ->  sum p_{2n+1} q^(n^2+n)

namespace pdokit {

namespace {

IdentityReport new_report(std::string id, std::size_t order) {
    IdentityReport rep;
    rep.id = std::move(id);
    rep.truncation = order;
    rep.pass = true;
    return rep;
}

// Compare one sub-identity; on the first mismatch the report flips to failed
// and later comparisons are skipped.
template <typename C>
bool record(IdentityReport& rep, const TruncatedSeries<C>& expected,
            const TruncatedSeries<C>& actual, const std::string& label = {}) {
    if (!rep.pass) return false;
    auto d = first_difference(expected, actual);
    if (!d) return true;
    rep.pass = false;
    rep.first_mismatch = CoeffMismatch{d->power, coeff_to_string(d->expected),
                                       coeff_to_string(d->actual)};
    if (!label.empty()) rep.note = "mismatch in: " + label;
    return false;
}

PolySeries project_series(const ExtSeries& s) {
    return map_series<MultiPoly>(s, [](const QuadExt& e) { return e.project_base(); });
}

PolySeries at_y2(const PolySeries& s) {
    return map_series<MultiPoly>(s, [](const MultiPoly& p) { return p.subst_y(Int(2)); });
}

PolySeries at_y1(const PolySeries& s) {
    return map_series<MultiPoly>(s, [](const MultiPoly& p) { return p.subst_y(Int(1)); });
}

// Largest k with k^2 < order: weighted selections of k distinct odd sizes
// first reach weight 1 + 3 + ... + (2k-1) = k^2.
unsigned max_rows_by_square(std::size_t order) {
    unsigned k = 0;
    while (static_cast<std::size_t>(k + 1) * (k + 1) < order) ++k;
    return k;
}

// Largest k with k(k+1) < order (unrestricted sizes under q -> q^2 first
// reach weight 2 * k(k+1)/2).
unsigned max_rows_by_pronic(std::size_t order) {
    unsigned k = 0;
    while (static_cast<std::size_t>(k + 1) * (k + 2) < order) ++k;
    return k;
}

// sum over k of rows[k] * x^(x_power(k)).
template <typename XPow>
PolySeries attach_x_powers(const std::vector<IntSeries>& rows, std::size_t order,
                           XPow&& x_power, unsigned first_row = 0) {
    PolySeries s(order);
    for (unsigned k = first_row; k < rows.size(); ++k) {
        for (std::size_t n = 0; n < std::min(order, rows[k].order()); ++n) {
            const Int& c = rows[k].coeff(n);
            if (!c.is_zero()) s.add_coeff(n, MultiPoly::monomial(x_power(k), 0, c));
        }
    }
    return s;
}

// The two product forms over odd indices r = 2m-1. Factor m of the first:
//   1 + sum_j j*x*q^(jr) for even j, plus j*x*y*q^(jr) for odd j
// (a run of j copies of part r admits j mark positions; y flags odd j).
PolySeries p1_product_form(std::size_t order) {
    return odd_index_product<MultiPoly>(
        [order](std::size_t m) {
            const std::size_t r = 2 * m - 1;
            PolySeries f = PolySeries::one(order);
            for (std::size_t j = 1; j * r < order; ++j)
                f.add_coeff(j * r,
                            MultiPoly::monomial(1, j % 2 == 0 ? 0 : 1,
                                                Int(static_cast<unsigned long>(j))));
            return f;
        },
        order);
}

// Factor m of the second: 1 + sum_t (2t*x + ((t^3-t)/6)*x^2*y^2) q^(tr).
// A total of t copies of part r split across an ordered pair contributes
// 2t mark choices when one side takes all copies, and sum_{a=1}^{t-1} a(t-a)
// = (t^3-t)/6 choices when both sides are hit (y^2 flags the shared size).
PolySeries p2_product_form(std::size_t order) {
    return odd_index_product<MultiPoly>(
        [order](std::size_t m) {
            const std::size_t r = 2 * m - 1;
            PolySeries f = PolySeries::one(order);
            for (std::size_t t = 1; t * r < order; ++t) {
                const Int tt(static_cast<unsigned long>(t));
                MultiPoly c = MultiPoly::monomial(1, 0, 2 * tt);
                const Int both = (tt * tt * tt - tt) / 6;
                if (!both.is_zero()) c += MultiPoly::monomial(2, 2, both);
                f.add_coeff(t * r, c);
            }
            return f;
        },
        order);
}

// phi theta sum with q -> q^2, to the given order: 1 + 2*sum q^(2n^2).
IntSeries phi_q2(std::size_t order) {
    return theta_phi((order + 1) / 2).subst_qpow(2).truncated(order);
}

// psi theta sum with q -> q^4: sum_{n>=1} q^(2n(n-1)).
IntSeries psi_q4(std::size_t order) {
    return theta_psi((order + 3) / 4).subst_qpow(4).truncated(order);
}

// Even/odd components inflated back to the undissected exponent scale
// (4n^2 and 4n^2-4n).
template <typename C>
TruncatedSeries<C> even_component_q2(const C& t, std::size_t order) {
    return g_even_component(t, (order + 1) / 2).subst_qpow(2).truncated(order);
}

template <typename C>
TruncatedSeries<C> odd_component_q2(const C& t, std::size_t order) {
    return g_odd_component(t, (order + 1) / 2).subst_qpow(2).truncated(order);
}

constexpr std::size_t kSingleEnumerationCap = 48;  // full-enumeration budget
constexpr std::size_t kRefineEnumerationCap = 40;
constexpr std::size_t kPairEnumerationCap = 24;

}  // namespace

IdentityReport check_pdo_genfn(std::size_t order) {
    auto rep = new_report("pdo-genfn", order);
    const std::size_t cap = std::min(order, kSingleEnumerationCap);
    IntSeries counted(cap);
    for (std::size_t n = 0; n < cap; ++n)
        counted.set_coeff(n, Int(enumerate_pdo(static_cast<unsigned>(n)).size()));
    record(rep, counted, pdo_counting_series(order));
    if (rep.pass && order > cap)
        rep.note = "counts cross-checked by full enumeration below " + std::to_string(cap);
    return rep;
}

IdentityReport check_convolution(std::size_t order) {
    auto rep = new_report("convolution", order);
    const IntSeries base = pdo_counting_series(2 * order);
    const IntSeries half = base.truncated(order);
    record(rep, base.dissect(2, 0).truncated(order), half * half);
    return rep;
}

IdentityReport check_refine_x(std::size_t order) {
    auto rep = new_report("refine-x", order);
    // Closed-route series: sum_k (weighted selections of k odd sizes) x^k.
    const auto rows = ck_series_table(max_rows_by_square(order), order);
    const PolySeries series =
        attach_x_powers(rows, order, [](unsigned k) { return k; });
    const std::size_t half = order / 2;
    const PolySeries series_half = series.truncated(half);
    record(rep, series.dissect(2, 0).truncated(half), series_half * series_half,
           "series route");

    // Enumerated route, and the bridge between the two routes.
    const std::size_t cap = std::min(order, kRefineEnumerationCap);
    const PolySeries enumerated = at_y1(p1_enumerated(cap));
    record(rep, enumerated, series.truncated(cap), "enumeration vs series");
    const PolySeries enum_half = enumerated.truncated(cap / 2);
    record(rep, enumerated.dissect(2, 0).truncated(cap / 2), enum_half * enum_half,
           "enumerated route");
    return rep;
}

IdentityReport check_andrews_rose(std::size_t order) {
    auto rep = new_report("andrews-rose", order);
    const PolySeries lhs = to_poly_series(overpartition_series(order)) *
                           g_series(MultiPoly::x(), order);
    const auto rows = ck_series_table(max_rows_by_square(order), order);
    const PolySeries rhs =
        attach_x_powers(rows, order, [](unsigned k) { return 2 * k; });
    record(rep, rhs, lhs, "weighted selections vs series product");

    // The single-power and doubled-power forms of the selection series are
    // bridged by squaring the variable.
    const PolySeries single =
        attach_x_powers(rows, order, [](unsigned k) { return k; });
    record(rep, rhs,
           map_series<MultiPoly>(single,
                                 [](const MultiPoly& p) { return p.dilate_x(2); }),
           "square-substitution bridge");
    return rep;
}

IdentityReport check_g_dissection(std::size_t order) {
    auto rep = new_report("g-dissection", order);
    const MultiPoly X = MultiPoly::x();
    const PolySeries g = g_series(X, order);
    const std::size_t h = (order + 1) / 2;
    const PolySeries even = g_even_component(X, h);
    const PolySeries odd = g_odd_component(X, h);
    const PolySeries recombined = even.subst_qpow(2).truncated(order) +
                                  odd.subst_qpow(2).shifted(1).truncated(order);
    record(rep, g, recombined, "recombination");
    record(rep, g.dissect(2, 0), even, "even slice");
    record(rep, g.dissect(2, 1), odd, "odd slice");
    record(rep, theta_phi(order), g_series(Int(2), order), "value-2 specialization");
    return rep;
}

IdentityReport check_overpartition_dissection(std::size_t order) {
    auto rep = new_report("overpartition-dissection", order);
    const IntSeries base = overpartition_series(2 * order);
    record(rep, base.dissect(2, 0).truncated(order),
           eta_quotient({{{4, 5}}, {{1, 4}, {8, 2}}}, order), "even part");
    record(rep, base.dissect(2, 1).truncated(order),
           eta_quotient({{{2, 2}, {8, 2}}, {{1, 4}, {4, 1}}}, order).scaled(Int(2)),
           "odd part");
    return rep;
}

IdentityReport check_root_identity(std::size_t order) {
    auto rep = new_report("root-identity", order);
    const MultiPoly X = MultiPoly::x();
    const PolySeries even_weight =
        to_poly_series(eta_quotient({{{4, 5}}, {{2, 2}, {8, 2}}}, order));
    const PolySeries odd_weight =
        to_poly_series(eta_quotient({{{8, 2}}, {{4, 1}}}, order));
    const PolySeries lhs =
        even_weight * g_even_component(X, order) +
        (odd_weight * g_odd_component(X, order))
            .scaled(MultiPoly(2))
            .shifted(1)
            .truncated(order);
    const PolySeries g = g_series(X, order);
    record(rep, lhs, g * g);
    return rep;
}

IdentityReport check_main_2dis(std::size_t order) {
    auto rep = new_report("main-2dis", order);
    const MultiPoly X = MultiPoly::x();
    const PolySeries ge = g_even_component(X, order);
    const PolySeries go = g_odd_component(X, order);
    const PolySeries ge4 = even_component_q2(X, order);
    const PolySeries go4 = odd_component_q2(X, order);
    record(rep, to_poly_series(phi_q2(order)) * ge,
           ge4 * ge4 + (go4 * go4).shifted(2).truncated(order), "even line");
    record(rep, to_poly_series(psi_q4(order)) * go, ge4 * go4, "odd line");
    return rep;
}

IdentityReport check_huffing(std::size_t trials, std::size_t order, unsigned seed) {
    auto rep = new_report("huffing", order);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    for (std::size_t t = 0; t < trials && rep.pass; ++t) {
        IntSeries a(order), b(2 * order);
        for (std::size_t i = 0; i < order; ++i) a.set_coeff(i, Int(dist(rng)));
        for (std::size_t i = 0; i < 2 * order; ++i) b.set_coeff(i, Int(dist(rng)));
        const IntSeries lhs = (a.subst_qpow(2) * b).dissect(2, 0).truncated(order);
        const IntSeries rhs = a * b.dissect(2, 0).truncated(order);
        record(rep, lhs, rhs, "trial " + std::to_string(t));
    }
    if (rep.pass)
        rep.note = "trials=" + std::to_string(trials) + " seed=" +
                   std::to_string(seed) + " coefficients in [-9,9]";
    return rep;
}

IdentityReport check_g2_special(std::size_t order) {
    auto rep = new_report("g2-special", order);
    const MultiPoly X = MultiPoly::x();
    // At the value 2 the whole family degenerates: p_n(2) = 2 for all n.
    const IntSeries g2 = g_series(Int(2), order);
    record(rep, theta_phi(order), g2, "value-2 sum form");
    record(rep, eta_quotient({{{2, 5}}, {{1, 2}, {4, 2}}}, order), g2,
           "value-2 product form");

    const PolySeries gx2 = g_series(X, 2 * order);
    const PolySeries g2big = to_poly_series(g_series(Int(2), 2 * order));
    const PolySeries gx = g_series(X, order);
    record(rep, (g2big * gx2).dissect(2, 0).truncated(order), gx * gx,
           "huffed value-2 product");

    // Same identity dressed with the overpartition weight on both sides.
    const PolySeries w2 = to_poly_series(overpartition_series(2 * order)) * gx2;
    const PolySeries w1 = to_poly_series(overpartition_series(order)) * gx;
    record(rep, w2.dissect(2, 0).truncated(order), w1 * w1, "weighted bridge");
    return rep;
}

IdentityReport check_gxgy_symmetric(std::size_t order) {
    auto rep = new_report("gxgy-symmetric", order);
    const PolySeries gx = g_series(MultiPoly::x(), 2 * order);
    const PolySeries gy = g_series(MultiPoly::y(), 2 * order);
    const PolySeries lhs = (gx * gy).dissect(2, 0).truncated(order);
    const ExtSeries gu = g_series(QuadExt::u(), order);
    const ExtSeries gv = g_series(QuadExt::v(), order);
    const PolySeries rhs = project_series(gu * gv);
    record(rep, lhs, rhs, "symmetric collapse");

    // y = 2 forces the two extension generators down to the single variable.
    const PolySeries gxo = g_series(MultiPoly::x(), order);
    record(rep, at_y2(lhs), gxo * gxo, "value-2 degeneration");
    if (rep.pass)
        rep.note = "all extension coefficients collapsed to the base ring";
    return rep;
}

IdentityReport check_p1_product(std::size_t order) {
    auto rep = new_report("p1-product", order);
    const std::size_t cap = std::min(order, kRefineEnumerationCap);
    record(rep, p1_enumerated(cap), p1_product_form(order).truncated(cap));
    if (rep.pass && order > cap)
        rep.note = "enumerated comparison below " + std::to_string(cap) +
                   "; product form computed to full order";
    return rep;
}

IdentityReport check_p2_product(std::size_t order) {
    auto rep = new_report("p2-product", order);
    const std::size_t cap = std::min(order, kPairEnumerationCap);
    record(rep, p2_enumerated(cap), p2_product_form(order).truncated(cap));
    if (rep.pass && order > cap)
        rep.note = "enumerated comparison below " + std::to_string(cap) +
                   "; product form computed to full order";
    return rep;
}

IdentityReport check_p1p2_refine(std::size_t order) {
    auto rep = new_report("p1p2-refine", order);
    record(rep, p1_product_form(2 * order).dissect(2, 0).truncated(order),
           p2_product_form(order), "product forms");
    const std::size_t cap = std::min(order, kPairEnumerationCap);
    record(rep, p1_enumerated(2 * cap).dissect(2, 0).truncated(cap),
           p2_enumerated(cap), "enumerated routes");
    return rep;
}

IdentityReport check_cheby_xyuv(std::size_t order) {
    auto rep = new_report("cheby-xyuv", order);
    const MultiPoly X = MultiPoly::x(), Y = MultiPoly::y();
    const QuadExt U = QuadExt::u(), V = QuadExt::v();

    const PolySeries gex = g_even_component(X, order);
    const PolySeries gey = g_even_component(Y, order);
    const PolySeries gox = g_odd_component(X, order);
    const PolySeries goy = g_odd_component(Y, order);

    const ExtSeries geu4 = even_component_q2(U, order);
    const ExtSeries gev4 = even_component_q2(V, order);
    const ExtSeries gou4 = odd_component_q2(U, order);
    const ExtSeries gov4 = odd_component_q2(V, order);

    const PolySeries lhs_even = gex * gey;
    const PolySeries rhs_even =
        project_series(geu4 * gev4 + (gou4 * gov4).shifted(2).truncated(order));
    record(rep, lhs_even, rhs_even, "even line");

    const PolySeries lhs_odd = gox * goy;
    const PolySeries rhs_odd = project_series(geu4 * gov4 + gev4 * gou4);
    record(rep, lhs_odd, rhs_odd, "odd line (doubled form)");

    // y = 2 collapses both generators to the single variable and the two
    // lines to the single-variable split identities.
    const PolySeries ge4x = even_component_q2(X, order);
    const PolySeries go4x = odd_component_q2(X, order);
    const PolySeries phi2 = to_poly_series(phi_q2(order));
    const PolySeries psi4 = to_poly_series(psi_q4(order));
    record(rep, phi2 * gex, at_y2(lhs_even), "even line at y=2, theta side");
    record(rep, ge4x * ge4x + (go4x * go4x).shifted(2).truncated(order),
           at_y2(rhs_even), "even line at y=2, split side");
    record(rep, (psi4 * gox).scaled(MultiPoly(2)), at_y2(lhs_odd),
           "odd line at y=2, theta side");
    record(rep, (ge4x * go4x).scaled(MultiPoly(2)), at_y2(rhs_odd),
           "odd line at y=2, split side");
    return rep;
}

IdentityReport check_fa_identity(std::size_t order) {
    auto rep = new_report("fa-identity", order);
    const PolySeries lhs = f_series(MultiPoly::x(), order);
    const IntSeries f2 = eta_factor(2, order);
    const IntSeries cube = f2 * f2 * f2;
    const auto rows = ak_series_table(max_rows_by_pronic(order), (order + 1) / 2);

    const auto build = [&](unsigned first_row) {
        PolySeries rhs(order);
        for (unsigned k = first_row; k < rows.size(); ++k) {
            const IntSeries term = cube * rows[k].subst_qpow(2).truncated(order);
            for (std::size_t n = 0; n < order; ++n) {
                const Int& c = term.coeff(n);
                if (!c.is_zero())
                    rhs.add_coeff(n, MultiPoly::monomial(2 * k + 1, 0, c));
            }
        }
        return rhs;
    };

    // The k = 0 row of the sum is not pinned down by the defining recipe
    // (it has no sizes to select), so resolve it empirically: try the
    // constant-1 row first, then a sum starting at k = 1.
    const auto with_row0 = first_difference(lhs, build(0));
    if (!with_row0) {
        rep.note = "k=0 row resolved to the constant 1";
        return rep;
    }
    if (!first_difference(lhs, build(1))) {
        rep.note = "k=0 row resolved to zero (sum starts at k=1)";
        return rep;
    }
    rep.pass = false;
    rep.first_mismatch = CoeffMismatch{with_row0->power,
                                       coeff_to_string(with_row0->expected),
                                       coeff_to_string(with_row0->actual)};
    rep.note = "neither convention for the k=0 row fits";
    return rep;
}

IdentityReport check_harness_selftest(std::size_t order) {
    auto rep = new_report("harness-selftest", order);
    if (order < 2) {
        rep.note = "order too small to plant a mismatch; nothing compared";
        return rep;
    }
    const IntSeries a = pdo_counting_series(order);
    IntSeries b = a;
    const std::size_t planted = order / 2;
    b.add_coeff(planted, Int(1));
    const auto clean = first_difference(a, a);
    const auto dirty = first_difference(a, b);
    const bool ok = !clean && dirty && dirty->power == planted &&
                    dirty->expected == a.coeff(planted) &&
                    dirty->actual == a.coeff(planted) + 1;
    if (ok) {
        rep.note = "planted mismatch at q^" + std::to_string(planted) + " detected";
    } else {
        rep.pass = false;
        rep.note = "comparator failed to flag the planted mismatch";
    }
    return rep;
}

const std::vector<CheckInfo>& check_registry() {
    static const std::vector<CheckInfo> registry = {
        {"pdo-genfn", "counting series matches brute-force enumeration", 40,
         [](std::size_t n) { return check_pdo_genfn(n); }},
        {"convolution", "even-indexed counts equal the self-convolution", 100,
         [](std::size_t n) { return check_convolution(n); }},
        {"refine-x", "size-count refinement: even slice equals the square", 200,
         [](std::size_t n) { return check_refine_x(n); }},
        {"andrews-rose",
         "overpartition weight times the even series equals the selection sums", 65,
         [](std::size_t n) { return check_andrews_rose(n); }},
        {"g-dissection", "even/odd split of the square-exponent series recombines",
         100, [](std::size_t n) { return check_g_dissection(n); }},
        {"overpartition-dissection",
         "overpartition series splits into the stated quotients", 200,
         [](std::size_t n) { return check_overpartition_dissection(n); }},
        {"root-identity", "theta-weighted split equals the squared series", 100,
         [](std::size_t n) { return check_root_identity(n); }},
        {"main-2dis", "single-variable split identities", 100,
         [](std::size_t n) { return check_main_2dis(n); }},
        {"huffing", "even-slice operator commutes with q^2 cofactors (seeded)", 64,
         [](std::size_t n) { return check_huffing(100, n); }},
        {"g2-special", "value-2 specialization and its huffed square identity", 100,
         [](std::size_t n) { return check_g2_special(n); }},
        {"gxgy-symmetric", "two-variable huffed product collapses symmetrically", 65,
         [](std::size_t n) { return check_gxgy_symmetric(n); }},
        {"p1-product", "single-partition statistic series equals its product form",
         40, [](std::size_t n) { return check_p1_product(n); }},
        {"p2-product", "pair statistic series equals its product form", 24,
         [](std::size_t n) { return check_p2_product(n); }},
        {"p1p2-refine", "even slice of the single series equals the pair series",
         101, [](std::size_t n) { return check_p1p2_refine(n); }},
        {"cheby-xyuv", "two-variable split identities in the quadratic extension",
         65, [](std::size_t n) { return check_cheby_xyuv(n); }},
        {"fa-identity", "odd-index series equals cube-weighted selection sums", 41,
         [](std::size_t n) { return check_fa_identity(n); }},
        {"harness-selftest", "comparator flags a planted mismatch", 16,
         [](std::size_t n) { return check_harness_selftest(n); }},
    };
    return registry;
}

bool is_known_check(const std::string& id) {
    for (const auto& info : check_registry())
        if (info.id == id) return true;
    return false;
}

IdentityReport run_check(const std::string& id, std::optional<std::size_t> truncation) {
    for (const auto& info : check_registry()) {
        if (info.id != id) continue;
        const std::size_t order = truncation.value_or(info.default_truncation);
        try {
            return info.run(order);
        } catch (const std::exception& e) {
            IdentityReport rep;
            rep.id = id;
            rep.truncation = order;
            rep.pass = false;
            rep.note = std::string("aborted: ") + e.what();
            return rep;
        }
    }
    throw std::invalid_argument("unknown check id: " + id);
}

std::vector<IdentityReport> run_all(std::optional<std::size_t> truncation) {
    std::vector<IdentityReport> reports;
    reports.reserve(check_registry().size());
    for (const auto& info : check_registry())
        reports.push_back(run_check(info.id, truncation));
    return reports;
}

nlohmann::json report_to_json(const IdentityReport& r) {
    nlohmann::json j{{"id", r.id}, {"truncation", r.truncation}, {"pass", r.pass}};
    if (r.first_mismatch) {
        j["first_mismatch"] = {{"power", r.first_mismatch->power},
                               {"expected", r.first_mismatch->expected},
                               {"actual", r.first_mismatch->actual}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

IdentityReport report_from_json(const nlohmann::json& j) {
    IdentityReport r;
    r.id = j.at("id").get<std::string>();
    r.truncation = j.at("truncation").get<std::size_t>();
    r.pass = j.at("pass").get<bool>();
    if (j.contains("first_mismatch") && !j.at("first_mismatch").is_null()) {
        const auto& m = j.at("first_mismatch");
        r.first_mismatch = CoeffMismatch{m.at("power").get<std::size_t>(),
                                         m.at("expected").get<std::string>(),
                                         m.at("actual").get<std::string>()};
    }
    if (j.contains("note")) r.note = j.at("note").get<std::string>();
    return r;
}

}  // namespace pdokit
