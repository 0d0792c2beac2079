#pragma once

#include "drg/polynomial.hpp"
#include "drg/rational.hpp"

#include <optional>
#include <string>

namespace drg {

// An exact real number: either a rational, or the unique root of a primitive
// square-free integer polynomial (with no rational roots) inside an isolating
// interval. Values are immutable; refinement returns sharper copies.
class AlgebraicReal {
  public:
    AlgebraicReal() : rat_(0), is_rational_(true) {}
    /* implicit */ AlgebraicReal(Rat v) : rat_(std::move(v)), is_rational_(true) {}
    /* implicit */ AlgebraicReal(long long v) : rat_(rat_of(v)), is_rational_(true) {}

    // Root of p in (lo, hi); normalizes p and collapses to a rational when the
    // enclosed root is rational. Verifies the interval isolates exactly one root.
    static AlgebraicReal root_of(const IntPoly& p, const Rat& lo, const Rat& hi);

    // The larger root of x^2 - sx - t (i.e. (s + sqrt(s^2+4t))/2), requires s^2+4t > 0.
    static AlgebraicReal quadratic_larger_root(const Rat& s, const Rat& t);

    bool is_rational() const { return is_rational_; }
    const Rat& rational_value() const;
    const IntPoly& poly() const { return poly_; }
    RatInterval interval() const; // exact point interval for rationals

    // Interval of width < eps containing the value.
    RatInterval enclosure(const Rat& eps) const;

    // Exact three-way comparison.
    int compare(const AlgebraicReal& o) const;
    int compare(const Rat& r) const;
    int sign() const { return compare(Rat(0)); }

    bool operator==(const AlgebraicReal& o) const { return compare(o) == 0; }
    bool operator<(const AlgebraicReal& o) const { return compare(o) < 0; }
    bool operator<=(const AlgebraicReal& o) const { return compare(o) <= 0; }
    bool operator>(const AlgebraicReal& o) const { return compare(o) > 0; }
    bool operator>=(const AlgebraicReal& o) const { return compare(o) >= 0; }

    // (a*x + b) / (c*x + d) applied to this value; the denominator must not vanish.
    AlgebraicReal mobius(const Rat& a, const Rat& b, const Rat& c, const Rat& d) const;

    double approx() const;
    // Decimal rendering with the given number of significant digits.
    std::string decimal(int significant_digits = 12) const;
    // Minimal polynomial (monic part irrelevant for rationals: returns den*x - num).
    IntPoly minimal_polynomial() const;

    // One bisection step (no-op for rationals).
    void refine_step();
    void refine_below(const Rat& width);

  private:
    AlgebraicReal(IntPoly p, Rat lo, Rat hi)
        : rat_(0), poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)), is_rational_(false) {}

    Rat rat_;
    IntPoly poly_;
    Rat lo_, hi_;
    bool is_rational_;
};

// Does g (a polynomial with rational coefficients) vanish at x?
bool vanishes_at(const RatPoly& g, const AlgebraicReal& x);
// Exact sign of g(x).
int sign_at(const RatPoly& g, const AlgebraicReal& x);
// Interval enclosure of g(x) with width < eps.
RatInterval enclose(const RatPoly& g, const AlgebraicReal& x, const Rat& eps);

// All real roots of p, ascending, as exact algebraic numbers.
std::vector<AlgebraicReal> real_roots(const IntPoly& p);

} // namespace drg
