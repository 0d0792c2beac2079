#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace drg {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorKind {
    Shape,
    BadC1,
    NegativeA,
    Parse,
    Domain,
    SingularSystem,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Rat rat_of(long long num, long long den = 1) {
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q"; used for CLI flags like --epsilon 1/2.
inline Rat parse_rat(const std::string& s) {
    try {
        Rat q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::Parse, "not a rational: '" + s + "'");
    }
}

// Closed interval with exact rational endpoints.
struct RatInterval {
    Rat lo;
    Rat hi;

    RatInterval() = default;
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {}
    static RatInterval point(const Rat& v) { return {v, v}; }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool is_point() const { return lo == hi; }

    // Sign if the whole interval is on one side of zero, nullopt otherwise.
    std::optional<int> definite_sign() const {
        if (sgn(lo) > 0) return 1;
        if (sgn(hi) < 0) return -1;
        if (sgn(lo) == 0 && sgn(hi) == 0) return 0;
        return std::nullopt;
    }

    RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    RatInterval operator-() const { return {-hi, -lo}; }

    RatInterval operator*(const RatInterval& o) const {
        Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
        Rat mn = a, mx = a;
        for (const Rat* v : {&b, &c, &d}) {
            if (*v < mn) mn = *v;
            if (*v > mx) mx = *v;
        }
        return {mn, mx};
    }

    RatInterval operator*(const Rat& s) const {
        if (sgn(s) >= 0) return {lo * s, hi * s};
        return {hi * s, lo * s};
    }

    RatInterval operator+(const Rat& s) const { return {lo + s, hi + s}; }
    RatInterval operator-(const Rat& s) const { return {lo - s, hi - s}; }

    // Requires the divisor interval to exclude zero.
    RatInterval operator/(const RatInterval& o) const {
        if (o.contains_zero()) throw Error(ErrorKind::Domain, "interval division by zero-straddling interval");
        RatInterval inv{Rat(1) / o.hi, Rat(1) / o.lo};
        return *this * inv;
    }
};

} // namespace drg
