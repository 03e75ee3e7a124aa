#include <pdokit/qfunctions.hpp>

#include <algorithm>

namespace pdokit {

namespace {

void validate_side(const std::vector<std::pair<unsigned, unsigned>>& side,
                   const char* name) {
    std::vector<unsigned> seen;
    for (const auto& [r, e] : side) {
        if (r == 0)
            throw std::invalid_argument(std::string("eta_quotient: zero subscript in ") + name);
        if (e == 0)
            throw std::invalid_argument(std::string("eta_quotient: zero exponent in ") + name);
        if (std::find(seen.begin(), seen.end(), r) != seen.end())
            throw std::invalid_argument(std::string("eta_quotient: duplicate subscript ") +
                                        std::to_string(r) + " in " + name);
        seen.push_back(r);
    }
}

}  // namespace

IntSeries eta_factor(unsigned subscript, std::size_t order) {
    if (subscript == 0)
        throw std::invalid_argument("eta_factor: subscript must be positive");
    IntSeries a = IntSeries::one(order);
    // Multiply in place by (1 - q^s) for s = r, 2r, ...; descending e keeps
    // the read side untouched until it is consumed.
    for (std::size_t s = subscript; s < order; s += subscript) {
        for (std::size_t e = order - 1; e >= s; --e) {
            const Int& lower = a.coeff(e - s);
            if (!is_zero(lower)) a.add_coeff(e, -lower);
            if (e == s) break;
        }
    }
    return a;
}

IntSeries eta_quotient(const EtaQuotientSpec& spec, std::size_t order) {
    validate_side(spec.numerator, "numerator");
    validate_side(spec.denominator, "denominator");
    IntSeries result = IntSeries::one(order);
    for (const auto& [r, e] : spec.numerator) {
        const IntSeries f = eta_factor(r, order);
        for (unsigned i = 0; i < e; ++i) result = result * f;
    }
    IntSeries den = IntSeries::one(order);
    for (const auto& [r, e] : spec.denominator) {
        const IntSeries f = eta_factor(r, order);
        for (unsigned i = 0; i < e; ++i) den = den * f;
    }
    if (!spec.denominator.empty()) result = result * den.inverse();
    return result;
}

IntSeries theta_phi(std::size_t order) {
    IntSeries s = IntSeries::one(order);
    for (std::size_t n = 1; n * n < order; ++n) s.add_coeff(n * n, Int(2));
    return s;
}

IntSeries theta_psi(std::size_t order) {
    IntSeries s = IntSeries::zero(order);
    for (std::size_t n = 1; n * (n - 1) / 2 < order; ++n)
        s.add_coeff(n * (n - 1) / 2, Int(1));
    return s;
}

IntSeries pdo_counting_series(std::size_t order) {
    return eta_quotient({{{4, 1}, {6, 2}}, {{1, 1}, {3, 1}, {12, 1}}}, order);
}

IntSeries overpartition_series(std::size_t order) {
    return eta_quotient({{{2, 1}}, {{1, 2}}}, order);
}

}  // namespace pdokit
