#include <pdokit/multipoly.hpp>

#include <utility>

namespace pdokit {

MultiPoly::MultiPoly(long v) {
    if (v != 0) terms_.emplace(Monomial{0, 0}, Int(v));
}

MultiPoly::MultiPoly(Int v) {
    if (!v.is_zero()) terms_.emplace(Monomial{0, 0}, std::move(v));
}

MultiPoly MultiPoly::x() { return monomial(1, 0); }
MultiPoly MultiPoly::y() { return monomial(0, 1); }

MultiPoly MultiPoly::monomial(unsigned dx, unsigned dy, Int coeff) {
    MultiPoly p;
    if (!coeff.is_zero()) p.terms_.emplace(Monomial{dx, dy}, std::move(coeff));
    return p;
}

Int MultiPoly::coeff(unsigned dx, unsigned dy) const {
    auto it = terms_.find(Monomial{dx, dy});
    return it == terms_.end() ? Int(0) : it->second;
}

unsigned MultiPoly::deg_x() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
    return d;
}

unsigned MultiPoly::deg_y() const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
    return d;
}

void MultiPoly::add_term(const Monomial& m, const Int& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(Monomial{ma.dx + mb.dx, ma.dy + mb.dy}, ca * cb);
    return r;
}

MultiPoly MultiPoly::subst_x(const Int& v) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Int p(1);
        for (unsigned i = 0; i < m.dx; ++i) p *= v;
        r.add_term(Monomial{0, m.dy}, c * p);
    }
    return r;
}

MultiPoly MultiPoly::subst_y(const Int& v) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        Int p(1);
        for (unsigned i = 0; i < m.dy; ++i) p *= v;
        r.add_term(Monomial{m.dx, 0}, c * p);
    }
    return r;
}

Int MultiPoly::eval(const Int& xv, const Int& yv) const {
    Int r(0);
    for (const auto& [m, c] : terms_) {
        Int p = c;
        for (unsigned i = 0; i < m.dx; ++i) p *= xv;
        for (unsigned i = 0; i < m.dy; ++i) p *= yv;
        r += p;
    }
    return r;
}

MultiPoly MultiPoly::dilate_x(unsigned k) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.dx * k, m.dy}, c);
    return r;
}

namespace {

void append_monomial(std::string& out, const Monomial& m) {
    if (m.dx > 0) {
        out += 'x';
        if (m.dx > 1) out += "^" + std::to_string(m.dx);
    }
    if (m.dy > 0) {
        if (m.dx > 0) out += '*';
        out += 'y';
        if (m.dy > 1) out += "^" + std::to_string(m.dy);
    }
}

}  // namespace

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool first = out.empty();
        const bool neg = c < 0;
        if (!first) out += neg ? " - " : " + ";
        else if (neg) out += '-';
        const Int mag = neg ? Int(-c) : c;
        const bool constant = (m.dx == 0 && m.dy == 0);
        if (constant) {
            out += mag.str();
        } else {
            if (mag != 1) {
                out += mag.str();
                out += '*';
            }
            append_monomial(out, m);
        }
    }
    return out;
}

const MultiPoly& quadext_trace() {
    static const MultiPoly t = MultiPoly::x() * MultiPoly::y();
    return t;
}

const MultiPoly& quadext_norm() {
    static const MultiPoly n = MultiPoly::x() * MultiPoly::x() +
                               MultiPoly::y() * MultiPoly::y() - MultiPoly(4);
    return n;
}

QuadExt QuadExt::u() { return QuadExt(MultiPoly(), MultiPoly(1)); }

QuadExt QuadExt::v() { return QuadExt(quadext_trace(), MultiPoly(-1)); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    base_ += o.base_;
    ucoef_ += o.ucoef_;
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    base_ -= o.base_;
    ucoef_ -= o.ucoef_;
    return *this;
}

QuadExt QuadExt::operator-() const { return QuadExt(-base_, -ucoef_); }

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    // (a0 + a1 u)(b0 + b1 u) with u^2 = xy*u - (x^2 + y^2 - 4)
    MultiPoly cross = a.base_ * b.ucoef_ + a.ucoef_ * b.base_;
    if (a.ucoef_.is_zero() || b.ucoef_.is_zero())
        return QuadExt(a.base_ * b.base_, std::move(cross));
    MultiPoly high = a.ucoef_ * b.ucoef_;
    return QuadExt(a.base_ * b.base_ - high * quadext_norm(),
                   std::move(cross) + high * quadext_trace());
}

MultiPoly QuadExt::project_base() const {
    if (!ucoef_.is_zero())
        throw NonSymmetricResidue("nonzero u-coefficient: " + ucoef_.to_string());
    return base_;
}

std::string QuadExt::to_string() const {
    if (ucoef_.is_zero()) return base_.to_string();
    std::string out = "(" + base_.to_string() + ") + (" + ucoef_.to_string() + ")*u";
    return out;
}

}  // namespace pdokit
