#include "drg/algebraic.hpp"

#include <cassert>
#include <cmath>
#include <cstdio>

namespace drg {

namespace {

// Isolating-interval bisection: keeps the unique root of p strictly inside (lo, hi).
// Requires p to have no rational roots, so rational points never evaluate to zero.
void bisect_once(const IntPoly& p, Rat& lo, Rat& hi) {
    Rat m = (lo + hi) / 2;
    int sm = p.sign_at(m);
    assert(sm != 0);
    if (p.sign_at(lo) == sm)
        lo = m;
    else
        hi = m;
}

} // namespace

AlgebraicReal AlgebraicReal::root_of(const IntPoly& p_in, const Rat& lo, const Rat& hi) {
    if (lo >= hi) throw Error(ErrorKind::Domain, "empty isolating interval");
    IntPoly p = square_free_part(p_in.primitive());
    // Collapse to a rational if the isolated root is rational.
    IntPoly stripped = p;
    std::vector<Rat> rats = strip_rational_roots(stripped);
    for (const Rat& r : rats) {
        if (r > lo && r < hi) return AlgebraicReal(r);
    }
    p = stripped;
    if (p.degree() <= 0) throw Error(ErrorKind::Domain, "no root in isolating interval");
    SturmChain chain(p);
    int n = chain.count_roots(lo, hi);
    if (n != 1) throw Error(ErrorKind::Domain, "interval does not isolate exactly one root");
    return AlgebraicReal(std::move(p), lo, hi);
}

AlgebraicReal AlgebraicReal::quadratic_larger_root(const Rat& s, const Rat& t) {
    Rat disc = s * s + 4 * t;
    if (sgn(disc) <= 0) throw Error(ErrorKind::Domain, "quadratic has no two distinct real roots");
    // x^2 - s x - t as a primitive integer polynomial.
    RatPoly q(std::vector<Rat>{-t, -s, Rat(1)});
    IntPoly p = q.to_primitive_int();
    // The larger root exceeds s/2; the Cauchy bound caps both roots.
    Rat half_s = s / 2;
    Rat bound = abs(s) + abs(t) + 2;
    return root_of(p, half_s, bound);
}

const Rat& AlgebraicReal::rational_value() const {
    if (!is_rational_) throw Error(ErrorKind::Domain, "not a rational value");
    return rat_;
}

RatInterval AlgebraicReal::interval() const {
    if (is_rational_) return RatInterval::point(rat_);
    return {lo_, hi_};
}

RatInterval AlgebraicReal::enclosure(const Rat& eps) const {
    if (is_rational_) return RatInterval::point(rat_);
    AlgebraicReal copy = *this;
    copy.refine_below(eps);
    return {copy.lo_, copy.hi_};
}

void AlgebraicReal::refine_step() {
    if (is_rational_) return;
    bisect_once(poly_, lo_, hi_);
}

void AlgebraicReal::refine_below(const Rat& width) {
    if (is_rational_) return;
    while (hi_ - lo_ >= width) bisect_once(poly_, lo_, hi_);
}

int AlgebraicReal::compare(const Rat& r) const {
    if (is_rational_) return rat_ < r ? -1 : (rat_ == r ? 0 : 1);
    // poly_ has no rational roots, so the value differs from r.
    AlgebraicReal copy = *this;
    while (r > copy.lo_ && r < copy.hi_) copy.refine_step();
    if (r <= copy.lo_) return 1;
    return -1;
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    if (o.is_rational_) return compare(o.rat_);
    if (is_rational_) return -o.compare(rat_);
    AlgebraicReal a = *this, b = o;
    while (true) {
        if (a.hi_ <= b.lo_) {
            // Touching endpoints are fine: endpoints are never roots.
            return -1;
        }
        if (b.hi_ <= a.lo_) return 1;
        // Overlapping: equal iff a common root lies in the overlap.
        IntPoly g = poly_gcd(a.poly_, b.poly_);
        if (g.degree() > 0) {
            Rat lo = std::max(a.lo_, b.lo_);
            Rat hi = std::min(a.hi_, b.hi_);
            if (lo < hi && SturmChain(g).count_roots(lo, hi) > 0) return 0;
        }
        a.refine_step();
        b.refine_step();
    }
}

AlgebraicReal AlgebraicReal::mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const {
    if (is_rational_) {
        Rat den = c * rat_ + d;
        if (den == 0) throw Error(ErrorKind::Domain, "mobius transform pole");
        return AlgebraicReal((a * rat_ + b) / den);
    }
    if (a * d - b * c == 0) {
        // Degenerate map: constant value a/c (or b/d).
        if (c != 0) return AlgebraicReal(a / c);
        if (d != 0) return AlgebraicReal(b / d);
        throw Error(ErrorKind::Domain, "degenerate mobius transform");
    }
    AlgebraicReal x = *this;
    if (c != 0) {
        Rat pole = -d / c;
        while (pole > x.lo_ && pole < x.hi_) x.refine_step();
    }
    // Substitute the inverse map t -> (d*y - b) / (-c*y + a) into poly_, clearing
    // denominators: q(y) = sum_i p_i (d y - b)^i (a - c y)^(n-i).
    int n = x.poly_.degree();
    RatPoly num(std::vector<Rat>{-b, d});
    RatPoly den(std::vector<Rat>{a, -c});
    std::vector<RatPoly> num_pow(n + 1), den_pow(n + 1);
    num_pow[0] = RatPoly::constant(Rat(1));
    den_pow[0] = RatPoly::constant(Rat(1));
    for (int i = 1; i <= n; ++i) {
        num_pow[i] = num_pow[i - 1] * num;
        den_pow[i] = den_pow[i - 1] * den;
    }
    RatPoly q;
    for (int i = 0; i <= n; ++i) {
        if (x.poly_.c[i] == 0) continue;
        q = q + num_pow[i] * den_pow[n - i] * Rat(x.poly_.c[i]);
    }
    IntPoly qi = q.to_primitive_int();
    auto image = [&](const Rat& t) { return (a * t + b) / (c * t + d); };
    Rat y1 = image(x.lo_), y2 = image(x.hi_);
    if (y1 > y2) std::swap(y1, y2);
    return root_of(qi, y1, y2);
}

double AlgebraicReal::approx() const {
    if (is_rational_) return rat_.get_d();
    RatInterval iv = enclosure(rat_of(1, 1000000000000LL));
    return iv.mid().get_d();
}

std::string AlgebraicReal::decimal(int significant_digits) const {
    double v;
    if (is_rational_)
        v = rat_.get_d();
    else
        v = approx();
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
    return buf;
}

IntPoly AlgebraicReal::minimal_polynomial() const {
    if (is_rational_) {
        return IntPoly(std::vector<Int>{Int(-rat_.get_num()), Int(rat_.get_den())});
    }
    std::vector<IntPoly> factors = factor_monic_allreal(poly_);
    for (const IntPoly& f : factors) {
        if (SturmChain(f).count_roots(lo_, hi_) > 0) return f;
    }
    throw Error(ErrorKind::Domain, "minimal polynomial factor not found");
}

bool vanishes_at(const RatPoly& g, const AlgebraicReal& x) {
    if (x.is_rational()) return g.eval(x.rational_value()) == 0;
    RatPoly r = g.mod(RatPoly::from(x.poly()));
    if (r.is_zero()) return true;
    IntPoly h = poly_gcd(r.to_primitive_int(), x.poly());
    if (h.degree() <= 0) return false;
    RatInterval iv = x.interval();
    return SturmChain(h).count_roots(iv.lo, iv.hi) > 0;
}

int sign_at(const RatPoly& g, const AlgebraicReal& x) {
    if (x.is_rational()) return sgn(g.eval(x.rational_value()));
    if (vanishes_at(g, x)) return 0;
    AlgebraicReal copy = x;
    while (true) {
        RatInterval v = g.eval(copy.interval());
        if (auto s = v.definite_sign()) return *s;
        copy.refine_step();
    }
}

RatInterval enclose(const RatPoly& g, const AlgebraicReal& x, const Rat& eps) {
    if (x.is_rational()) return RatInterval::point(g.eval(x.rational_value()));
    AlgebraicReal copy = x;
    while (true) {
        RatInterval v = g.eval(copy.interval());
        if (v.width() < eps) return v;
        copy.refine_step();
    }
}

std::vector<AlgebraicReal> real_roots(const IntPoly& p) {
    std::vector<AlgebraicReal> out;
    IntPoly sf = square_free_part(p);
    for (const RatInterval& iv : isolate_real_roots(sf)) {
        // Isolating intervals are half-open (lo, hi]: a root sitting exactly on hi
        // is rational (bisection endpoints are rational).
        if (sf.eval(iv.hi) == 0)
            out.emplace_back(iv.hi);
        else
            out.push_back(AlgebraicReal::root_of(sf, iv.lo, iv.hi));
    }
    return out;
}

} // namespace drg
