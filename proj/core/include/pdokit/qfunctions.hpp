#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pdokit/series.hpp>

namespace pdokit {

// A finite product of factors f_r = prod_{k>=1}(1 - q^{rk}), given as
// numerator and denominator lists of (subscript r, positive exponent).
// Subscripts must be distinct within each list.
struct EtaQuotientSpec {
    std::vector<std::pair<unsigned, unsigned>> numerator;
    std::vector<std::pair<unsigned, unsigned>> denominator;
};

// f_r truncated to the given order (only the finitely many binomials with
// rk < order contribute).
IntSeries eta_factor(unsigned subscript, std::size_t order);

// Product of the numerator factors times the inverse of the denominator
// product. Throws std::invalid_argument on malformed specs.
IntSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t order);

// 1 + 2*sum_{n>=1} q^(n^2), the square-exponent theta sum.
IntSeries theta_phi(std::size_t order);

// sum_{n>=1} q^(n(n-1)/2) = 1 + q + q^3 + q^6 + ..., the triangular-exponent
// theta sum.
IntSeries theta_psi(std::size_t order);

// Coefficient of q^n counts partitions of n into odd parts carrying one
// designation mark per distinct part size: f4*f6^2 / (f1*f3*f12).
IntSeries pdo_counting_series(std::size_t order);

// Coefficient of q^n counts overpartitions of n: f2 / f1^2.
IntSeries overpartition_series(std::size_t order);

// Product over m = 1, 2, ... of factor_at(m), where factor m must be 1 plus
// terms supported on exponents >= 2m-1; factors with 2m-1 >= order are
// identically 1 at this truncation, so the product is finite. factor_at(m)
// must return a series of order >= the requested order. Throws FactorNotUnit
// on a non-unit constant term and std::invalid_argument on support or order
// violations.
template <typename C, typename FactorAt>
TruncatedSeries<C> odd_index_product(FactorAt&& factor_at, std::size_t order) {
    TruncatedSeries<C> prod = TruncatedSeries<C>::one(order);
    for (std::size_t m = 1; 2 * m - 1 < order; ++m) {
        TruncatedSeries<C> f = factor_at(m);
        if (f.order() < order)
            throw std::invalid_argument("odd_index_product: factor at m=" +
                                        std::to_string(m) + " has order " +
                                        std::to_string(f.order()) + " < " +
                                        std::to_string(order));
        if (f.order() > order) f = f.truncated(order);
        if (!(f.coeff(0) == C(1)))
            throw FactorNotUnit("factor at m=" + std::to_string(m) +
                                " has constant term " + coeff_to_string(f.coeff(0)));
        for (std::size_t e = 1; e < 2 * m - 1 && e < order; ++e)
            if (!is_zero(f.coeff(e)))
                throw std::invalid_argument(
                    "odd_index_product: factor at m=" + std::to_string(m) +
                    " has support below exponent " + std::to_string(2 * m - 1));
        prod = prod * f;
    }
    return prod;
}

}  // namespace pdokit
