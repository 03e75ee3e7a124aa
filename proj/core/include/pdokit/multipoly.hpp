#pragma once

#include <compare>
#include <map>
#include <string>

#include <pdokit/bigint.hpp>
#include <pdokit/errors.hpp>

namespace pdokit {

// Exponent pair of a monomial x^dx * y^dy.
struct Monomial {
    unsigned dx = 0;
    unsigned dy = 0;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order: total degree first, then x-degree.
// This is the canonical order used everywhere monomials are rendered.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        const unsigned ta = a.dx + a.dy;
        const unsigned tb = b.dx + b.dy;
        if (ta != tb) return ta < tb;
        return a.dx < b.dx;
    }
};

// Sparse exact-integer polynomial in the two variables x and y.
// Zero coefficients are never stored; the zero polynomial has an empty
// term map, so equality is structural.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Int, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(long v);  // constant
    explicit MultiPoly(Int v);

    static MultiPoly x();
    static MultiPoly y();
    static MultiPoly monomial(unsigned dx, unsigned dy, Int coeff = Int(1));

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of x^dx y^dy (zero if absent).
    Int coeff(unsigned dx, unsigned dy) const;

    unsigned deg_x() const;
    unsigned deg_y() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    MultiPoly subst_x(const Int& v) const;  // x := v
    MultiPoly subst_y(const Int& v) const;  // y := v
    Int eval(const Int& xv, const Int& yv) const;
    MultiPoly dilate_x(unsigned k) const;  // x -> x^k

    // Canonical rendering: terms in descending grlex order, e.g. "x^2*y - 3*x + 2".
    std::string to_string() const;

private:
    void add_term(const Monomial& m, const Int& c);
    TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }
inline std::string coeff_to_string(const MultiPoly& p) { return p.to_string(); }

// Element a + b*u of MultiPoly[u] / (u^2 - xy*u + (x^2 + y^2 - 4)).
// The conjugate root v = xy - u is never stored; expressions symmetric in
// u and v collapse to a zero u-coefficient, which project_base() asserts.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long v) : base_(v) {}
    explicit QuadExt(MultiPoly base) : base_(std::move(base)) {}
    QuadExt(MultiPoly base, MultiPoly ucoef)
        : base_(std::move(base)), ucoef_(std::move(ucoef)) {}

    static QuadExt u();
    static QuadExt v();  // xy - u

    const MultiPoly& base() const { return base_; }
    const MultiPoly& ucoef() const { return ucoef_; }
    bool is_zero() const { return base_.is_zero() && ucoef_.is_zero(); }

    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt operator-() const;

    friend QuadExt operator+(QuadExt a, const QuadExt& b) { return a += b; }
    friend QuadExt operator-(QuadExt a, const QuadExt& b) { return a -= b; }
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend bool operator==(const QuadExt&, const QuadExt&) = default;

    // Throws NonSymmetricResidue if the u-coefficient has not collapsed to zero.
    MultiPoly project_base() const;

    std::string to_string() const;

private:
    MultiPoly base_;
    MultiPoly ucoef_;
};

inline bool is_zero(const QuadExt& e) { return e.is_zero(); }
inline std::string coeff_to_string(const QuadExt& e) { return e.to_string(); }

// u + v and u * v as plain polynomials.
const MultiPoly& quadext_trace();  // xy
const MultiPoly& quadext_norm();   // x^2 + y^2 - 4

}  // namespace pdokit
