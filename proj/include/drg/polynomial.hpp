#pragma once

#include "drg/rational.hpp"

#include <string>
#include <vector>

namespace drg {

// Dense univariate polynomials, coefficient index = degree.
// IntPoly is kept trimmed (no leading zeros); the zero polynomial has empty coeffs.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
    static IntPoly zero() { return IntPoly{}; }
    static IntPoly constant(Int v);
    static IntPoly from_roots(const std::vector<Int>& roots); // prod (x - r)

    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const Int& leading() const { return c.back(); }
    void trim();

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const;
    RatInterval eval(const RatInterval& x) const;

    IntPoly derivative() const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    bool operator==(const IntPoly& o) const = default;

    Int content() const;       // gcd of coefficients, sign of leading coeff
    IntPoly primitive() const; // divided by content

    // Exact division by a monic divisor; throws if the division is not exact.
    IntPoly div_exact_monic(const IntPoly& monic_divisor) const;
    // Remainder after division by a monic divisor.
    IntPoly mod_monic(const IntPoly& monic_divisor) const;

    std::string to_string(const std::string& var = "x") const;
};

struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }
    static RatPoly from(const IntPoly& p);
    static RatPoly constant(Rat v);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void trim();

    Rat eval(const Rat& x) const;
    RatInterval eval(const RatInterval& x) const;

    RatPoly derivative() const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    bool operator==(const RatPoly& o) const = default;

    // Euclidean division, divisor nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    RatPoly mod(const RatPoly& d) const { return divmod(d).second; }

    // Primitive integer polynomial with the same roots (positive leading coefficient).
    IntPoly to_primitive_int() const;
};

// gcd as a primitive integer polynomial with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
IntPoly square_free_part(const IntPoly& p);
bool is_square_free(const IntPoly& p);

// All rational roots (with the rational root theorem), each listed once.
std::vector<Rat> rational_roots(const IntPoly& p);
// Divides out (x - r) for every rational root r, with multiplicity; returns the roots found.
std::vector<Rat> strip_rational_roots(IntPoly& p);

// Sturm chain for exact real-root counting.
struct SturmChain {
    std::vector<IntPoly> seq;
    explicit SturmChain(const IntPoly& p);
    int variations_at(const Rat& x) const;
    // Number of distinct real roots in (a, b], requires a <= b.
    int count_roots(const Rat& a, const Rat& b) const;
};

// Isolating intervals (lo, hi] for every distinct real root, ascending; p nonzero.
std::vector<RatInterval> isolate_real_roots(const IntPoly& p);

// Factor a monic square-free integer polynomial, all of whose roots are real,
// into monic irreducible integer factors (ascending degree). Degree <= 5 supported.
std::vector<IntPoly> factor_monic_allreal(const IntPoly& p);

} // namespace drg
