#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include <pdokit/multipoly.hpp>
#include <pdokit/series.hpp>

namespace pdokit {

// The integral Chebyshev-type family p_0 = 2, p_1 = t, p_n = t*p_{n-1} - p_{n-2},
// characterized by p_n(z + 1/z) = z^n + z^{-n}. Equivalently p_n(t) = 2*T_n(t/2)
// with T_n the classical first-kind Chebyshev polynomial; working with p_n
// keeps every coefficient an exact integer.

// p_n in the polynomial variable x. Memoized internally; returns a copy.
MultiPoly dickson(unsigned n);

// p_0 .. p_max_index evaluated at an arbitrary ring element t.
template <typename C>
std::vector<C> dickson_sequence(const C& t, std::size_t max_index) {
    std::vector<C> d;
    d.reserve(max_index + 1);
    d.push_back(C(2));
    if (max_index >= 1) d.push_back(t);
    for (std::size_t n = 2; n <= max_index; ++n) d.push_back(t * d[n - 1] - d[n - 2]);
    return d;
}

template <typename C>
C dickson_eval(const C& t, std::size_t n) {
    if (n == 0) return C(2);
    C prev = C(2);
    C cur = t;
    for (std::size_t k = 2; k <= n; ++k) {
        C next = t * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// 1 + sum_{n>=1} p_{2n}(t) q^(n^2).
template <typename C>
TruncatedSeries<C> g_series(const C& t, std::size_t order) {
    TruncatedSeries<C> s = TruncatedSeries<C>::one(order);
    std::size_t nmax = 0;
    while ((nmax + 1) * (nmax + 1) < order) ++nmax;
    const auto d = dickson_sequence(t, 2 * nmax);
    for (std::size_t n = 1; n <= nmax; ++n) s.add_coeff(n * n, d[2 * n]);
    return s;
}

// Even/odd halves of g_series written in the halved variable, so that
//   g(t, q) = even(t, q^2) + q * odd(t, q^2).
// even: 1 + sum_{n>=1} p_{4n}(t) q^(2n^2)
template <typename C>
TruncatedSeries<C> g_even_component(const C& t, std::size_t order) {
    TruncatedSeries<C> s = TruncatedSeries<C>::one(order);
    std::size_t nmax = 0;
    while (2 * (nmax + 1) * (nmax + 1) < order) ++nmax;
    const auto d = dickson_sequence(t, 4 * nmax);
    for (std::size_t n = 1; n <= nmax; ++n) s.add_coeff(2 * n * n, d[4 * n]);
    return s;
}

// odd: sum_{n>=1} p_{4n-2}(t) q^(2n^2-2n); its leading term p_2(t) sits at q^0.
template <typename C>
TruncatedSeries<C> g_odd_component(const C& t, std::size_t order) {
    TruncatedSeries<C> s = TruncatedSeries<C>::zero(order);
    std::size_t nmax = 0;
    while (2 * (nmax + 1) * nmax < order) ++nmax;
    const auto d = dickson_sequence(t, nmax == 0 ? 0 : 4 * nmax - 2);
    for (std::size_t n = 1; n <= nmax; ++n) s.add_coeff(2 * n * n - 2 * n, d[4 * n - 2]);
    return s;
}

// sum_{n>=0} p_{2n+1}(t) q^(n^2+n).
template <typename C>
TruncatedSeries<C> f_series(const C& t, std::size_t order) {
    TruncatedSeries<C> s = TruncatedSeries<C>::zero(order);
    if (order == 0) return s;
    std::size_t nmax = 0;
    while ((nmax + 1) * (nmax + 2) < order) ++nmax;
    const auto d = dickson_sequence(t, 2 * nmax + 1);
    for (std::size_t n = 0; n <= nmax; ++n) s.add_coeff(n * n + n, d[2 * n + 1]);
    return s;
}

}  // namespace pdokit
