#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pdokit/bigint.hpp>
#include <pdokit/errors.hpp>
#include <pdokit/multipoly.hpp>

namespace pdokit {

// Where two series first disagree: q^power with both coefficients.
template <typename C>
struct SeriesMismatch {
    std::size_t power = 0;
    C expected;
    C actual;
};

// Formal power series known modulo q^order over an exact coefficient ring C.
// Coefficients are stored densely as c[0..order-1]. Operations keep honest
// truncation bookkeeping: a sum or product of series known to different
// orders is only claimed to the smaller order, and nothing ever fabricates
// coefficients beyond what its inputs determine.
//
// C must provide: construction from small ints, +=, *, unary -, ==, and the
// free helpers is_zero(c) and coeff_to_string(c).
template <typename C>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order) {}

    static TruncatedSeries zero(std::size_t order) { return TruncatedSeries(order); }

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        if (order > 0) s.c_[0] = C(1);
        return s;
    }

    static TruncatedSeries monomial(std::size_t power, C coeff, std::size_t order) {
        TruncatedSeries s(order);
        if (power < order) s.c_[power] = std::move(coeff);
        return s;
    }

    std::size_t order() const { return c_.size(); }
    const C& coeff(std::size_t i) const { return c_.at(i); }
    const std::vector<C>& coeffs() const { return c_; }

    void set_coeff(std::size_t i, C v) { c_.at(i) = std::move(v); }
    void add_coeff(std::size_t i, const C& v) { c_.at(i) += v; }

    bool is_identically_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const C& c) { return is_zero(c); });
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    // Cauchy product to the smaller of the two orders. Zero coefficients are
    // skipped on both sides, which matters for the very sparse theta-style
    // series that show up here.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t n = std::min(a.c_.size(), b.c_.size());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (is_zero(a.c_[i])) continue;
            const std::size_t lim = n - i;
            for (std::size_t j = 0; j < lim; ++j) {
                if (is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    TruncatedSeries scaled(const C& s) const {
        TruncatedSeries r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) r.c_[i] = c_[i] * s;
        return r;
    }

    // Multiply by q^k. The result is honestly known to order + k.
    TruncatedSeries shifted(std::size_t k) const {
        TruncatedSeries r(c_.size() + k);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    // Forget coefficients at and above new_order. Growing the order would
    // fabricate unknown coefficients, so that is rejected.
    TruncatedSeries truncated(std::size_t new_order) const {
        if (new_order > c_.size())
            throw std::invalid_argument("truncated: order can only shrink (" +
                                        std::to_string(new_order) + " > " +
                                        std::to_string(c_.size()) + ")");
        TruncatedSeries r(new_order);
        std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(new_order),
                  r.c_.begin());
        return r;
    }

    // Reciprocal by the triangular recurrence. Only constant terms +1 and -1
    // are invertible over these rings; anything else is a hard error rather
    // than a silently wrong answer.
    TruncatedSeries inverse() const {
        if (c_.empty())
            throw NonUnitConstantTerm("cannot invert a series truncated to order 0");
        const C& c0 = c_[0];
        if (!(c0 == C(1) || c0 == C(-1)))
            throw NonUnitConstantTerm("constant term " + coeff_to_string(c0) +
                                      " is not +1 or -1");
        TruncatedSeries r(c_.size());
        r.c_[0] = c0;
        for (std::size_t k = 1; k < c_.size(); ++k) {
            C acc = C(0);
            for (std::size_t j = 1; j <= k; ++j) {
                if (is_zero(c_[j]) || is_zero(r.c_[k - j])) continue;
                acc += c_[j] * r.c_[k - j];
            }
            if (!is_zero(acc)) r.c_[k] = -(acc * c0);
        }
        return r;
    }

    // Extract the arithmetic-progression slice q^residue, q^(residue+modulus), ...
    // as a series in its own variable: result[i] = this[modulus*i + residue].
    // The result order is the exact count of known slice coefficients.
    TruncatedSeries dissect(std::size_t modulus, std::size_t residue) const {
        if (modulus == 0 || residue >= modulus)
            throw std::invalid_argument("dissect: need 0 <= residue < modulus");
        if (c_.size() <= residue) return TruncatedSeries(0);
        TruncatedSeries r((c_.size() - residue + modulus - 1) / modulus);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = c_[modulus * i + residue];
        return r;
    }

    // Substitute q -> q^k. Knowledge mod q^N becomes knowledge mod q^(N*k).
    TruncatedSeries subst_qpow(std::size_t k) const {
        if (k == 0) throw std::invalid_argument("subst_qpow: exponent must be positive");
        TruncatedSeries r(c_.size() * k);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!is_zero(c_[i])) r.c_[i * k] = c_[i];
        return r;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            if (!out.empty()) out += " + ";
            std::string cs = coeff_to_string(c_[i]);
            if (cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
            out += cs;
            if (i == 1) out += "*q";
            else if (i > 1) out += "*q^" + std::to_string(i);
        }
        if (out.empty()) out = "0";
        return out + " + O(q^" + std::to_string(c_.size()) + ")";
    }

private:
    std::vector<C> c_;
};

// Compare two series coefficient-by-coefficient up to the smaller order and
// report the first disagreement, if any.
template <typename C>
std::optional<SeriesMismatch<C>> first_difference(const TruncatedSeries<C>& expected,
                                                  const TruncatedSeries<C>& actual) {
    const std::size_t n = std::min(expected.order(), actual.order());
    for (std::size_t i = 0; i < n; ++i)
        if (!(expected.coeff(i) == actual.coeff(i)))
            return SeriesMismatch<C>{i, expected.coeff(i), actual.coeff(i)};
    return std::nullopt;
}

// Apply f to every coefficient, producing a series over the ring D.
template <typename D, typename C, typename F>
TruncatedSeries<D> map_series(const TruncatedSeries<C>& s, F&& f) {
    TruncatedSeries<D> r(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) r.set_coeff(i, f(s.coeff(i)));
    return r;
}

using IntSeries = TruncatedSeries<Int>;
using PolySeries = TruncatedSeries<MultiPoly>;
using ExtSeries = TruncatedSeries<QuadExt>;

// Lift an integer series into the polynomial coefficient ring.
inline PolySeries to_poly_series(const IntSeries& s) {
    return map_series<MultiPoly>(s, [](const Int& c) { return MultiPoly(c); });
}

}  // namespace pdokit
