#include "drg/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace drg {

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::from_roots(const std::vector<Int>& roots) {
    IntPoly p = constant(1);
    for (const Int& r : roots) {
        IntPoly lin(std::vector<Int>{-r, 1});
        p = p * lin;
    }
    return p;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Rat& x) const {
    if (is_integer(x)) {
        Int v = eval(Int(x.get_num()));
        return sgn(v);
    }
    return sgn(eval(x));
}

RatInterval IntPoly::eval(const RatInterval& x) const {
    RatInterval acc = RatInterval::point(Rat(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

IntPoly IntPoly::derivative() const {
    IntPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * static_cast<long>(i));
    d.trim();
    return d;
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    IntPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    IntPoly r;
    r.c.assign(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    IntPoly r;
    r.c.assign(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
}

Int IntPoly::content() const {
    Int g = 0;
    for (const Int& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 0) return 1;
    if (!c.empty() && sgn(c.back()) < 0) g = -g;
    return g;
}

IntPoly IntPoly::primitive() const {
    if (is_zero()) return {};
    Int g = content();
    IntPoly r;
    r.c.reserve(c.size());
    for (const Int& v : c) r.c.push_back(v / g);
    return r;
}

IntPoly IntPoly::div_exact_monic(const IntPoly& d) const {
    assert(d.is_monic());
    IntPoly rem = *this;
    int dd = d.degree();
    if (degree() < dd) {
        if (!is_zero()) throw Error(ErrorKind::Domain, "inexact polynomial division");
        return {};
    }
    IntPoly q;
    q.c.assign(degree() - dd + 1, Int(0));
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Int f = rem.leading();
        q.c[shift] = f;
        for (int i = 0; i <= dd; ++i) rem.c[shift + i] -= f * d.c[i];
        rem.trim();
    }
    if (!rem.is_zero()) throw Error(ErrorKind::Domain, "inexact polynomial division");
    q.trim();
    return q;
}

IntPoly IntPoly::mod_monic(const IntPoly& d) const {
    assert(d.is_monic());
    IntPoly rem = *this;
    int dd = d.degree();
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Int f = rem.leading();
        for (int i = 0; i <= dd; ++i) rem.c[shift + i] -= f * d.c[i];
        rem.trim();
    }
    return rem;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& v = c[i];
        if (v == 0) continue;
        Int av = abs(v);
        if (first) {
            if (sgn(v) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(v) < 0 ? "-" : "+");
        }
        bool show_coeff = (av != 1) || i == 0;
        if (show_coeff) out << av.get_str();
        if (i > 0) {
            if (show_coeff) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RatPoly RatPoly::from(const IntPoly& p) {
    RatPoly r;
    r.c.reserve(p.c.size());
    for (const Int& v : p.c) r.c.emplace_back(v);
    return r;
}

RatPoly RatPoly::constant(Rat v) {
    RatPoly p;
    if (v != 0) p.c.push_back(std::move(v));
    return p;
}

void RatPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatInterval RatPoly::eval(const RatInterval& x) const {
    RatInterval acc = RatInterval::point(Rat(0));
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

RatPoly RatPoly::derivative() const {
    RatPoly d;
    for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * rat_of(static_cast<long long>(i)));
    d.trim();
    return d;
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    RatPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

RatPoly RatPoly::operator*(const Rat& s) const {
    if (s == 0) return {};
    RatPoly r = *this;
    for (Rat& v : r.c) v *= s;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatPoly r;
    r.c.assign(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    RatPoly r;
    r.c.assign(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
    r.trim();
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::Domain, "polynomial division by zero");
    RatPoly q, rem = *this;
    int dd = d.degree();
    if (rem.degree() >= dd) q.c.assign(rem.degree() - dd + 1, Rat(0));
    while (rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rat f = rem.c.back() / d.c.back();
        q.c[shift] = f;
        for (int i = 0; i <= dd; ++i) rem.c[shift + i] -= f * d.c[i];
        rem.trim();
    }
    q.trim();
    return {q, rem};
}

IntPoly RatPoly::to_primitive_int() const {
    if (is_zero()) return {};
    Int den = 1;
    for (const Rat& v : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den().get_mpz_t());
    IntPoly p;
    p.c.reserve(c.size());
    for (const Rat& v : c) {
        Rat scaled = v * Rat(den);
        p.c.push_back(Int(scaled.get_num()));
    }
    return p.primitive();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    RatPoly x = RatPoly::from(a), y = RatPoly::from(b);
    while (!y.is_zero()) {
        RatPoly r = x.mod(y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return {};
    return x.to_primitive_int();
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.degree() <= 0) return p.primitive();
    IntPoly g = poly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.primitive();
    RatPoly q = RatPoly::from(p).divmod(RatPoly::from(g)).first;
    return q.to_primitive_int();
}

bool is_square_free(const IntPoly& p) {
    if (p.degree() <= 0) return true;
    return poly_gcd(p, p.derivative()).degree() == 0;
}

namespace {

std::vector<Int> divisors_of(const Int& n_in) {
    Int n = abs(n_in);
    std::vector<Int> divs;
    if (n == 0) return divs;
    Int i = 1;
    while (i * i <= n) {
        if (n % i == 0) {
            divs.push_back(i);
            Int j = n / i;
            if (j != i) divs.push_back(j);
        }
        ++i;
    }
    return divs;
}

} // namespace

std::vector<Rat> rational_roots(const IntPoly& p_in) {
    std::vector<Rat> roots;
    IntPoly p = p_in.primitive();
    if (p.degree() <= 0) return roots;
    // Strip x^m first: zero is a root iff the constant term vanishes.
    size_t low = 0;
    while (low < p.c.size() && p.c[low] == 0) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        p.c.erase(p.c.begin(), p.c.begin() + static_cast<long>(low));
    }
    if (p.degree() <= 0) return roots;
    for (const Int& num : divisors_of(p.c.front())) {
        for (const Int& den : divisors_of(p.leading())) {
            for (int s : {1, -1}) {
                Rat cand(s > 0 ? num : Int(-num), den);
                cand.canonicalize();
                if (p.eval(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
        }
    }
    return roots;
}

std::vector<Rat> strip_rational_roots(IntPoly& p) {
    std::vector<Rat> found;
    for (const Rat& r : rational_roots(p)) {
        RatPoly lin(std::vector<Rat>{-r, Rat(1)});
        RatPoly cur = RatPoly::from(p);
        while (true) {
            auto [q, rem] = cur.divmod(lin);
            if (!rem.is_zero()) break;
            found.push_back(r);
            cur = q;
        }
        p = cur.to_primitive_int();
    }
    return found;
}

SturmChain::SturmChain(const IntPoly& p) {
    IntPoly p0 = square_free_part(p);
    if (p0.is_zero()) throw Error(ErrorKind::Domain, "Sturm chain of zero polynomial");
    seq.push_back(p0);
    if (p0.degree() == 0) return;
    seq.push_back(p0.derivative().primitive());
    while (seq.back().degree() > 0) {
        RatPoly rem = RatPoly::from(seq[seq.size() - 2]).mod(RatPoly::from(seq.back()));
        if (rem.is_zero()) break; // square-free input: only at the end
        IntPoly next = rem.to_primitive_int();
        // Sturm sequence uses the negated remainder.
        for (Int& v : next.c) v = -v;
        seq.push_back(std::move(next));
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const IntPoly& p : seq) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    if (a > b) throw Error(ErrorKind::Domain, "empty interval");
    return variations_at(a) - variations_at(b);
}

std::vector<RatInterval> isolate_real_roots(const IntPoly& p_in) {
    IntPoly p = square_free_part(p_in);
    std::vector<RatInterval> out;
    if (p.degree() <= 0) return out;
    SturmChain chain(p);
    // Cauchy bound: all real roots lie in (-B, B].
    Rat bound(1);
    for (int i = 0; i < p.degree(); ++i) {
        Rat v = Rat(abs(p.c[i])) / Rat(abs(p.leading()));
        if (v > bound) bound = v;
    }
    bound += 1;
    struct Seg {
        Rat a, b;
        int count;
    };
    std::vector<Seg> work{{-bound, bound, chain.count_roots(-bound, bound)}};
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.emplace_back(s.a, s.b);
            continue;
        }
        Rat m = (s.a + s.b) / 2;
        int left = chain.count_roots(s.a, m);
        work.push_back({s.a, m, left});
        work.push_back({m, s.b, s.count - left});
    }
    std::sort(out.begin(), out.end(), [](const RatInterval& x, const RatInterval& y) { return x.lo < y.lo; });
    return out;
}

namespace {

// Try to split a monic integer polynomial with all-real roots into
// (monic quadratic) * (monic cofactor), by pairing isolated real roots.
bool try_quadratic_split(const IntPoly& p, IntPoly& quad, IntPoly& rest) {
    std::vector<RatInterval> iv = isolate_real_roots(p);
    if (static_cast<int>(iv.size()) != p.degree()) return false; // not all-real; unsupported
    SturmChain chain(p);
    // Refine every root interval until width < 1/4 so that sums/products of pairs
    // identify a unique integer candidate.
    auto refine = [&](RatInterval& r, const Rat& target) {
        while (r.width() >= target) {
            Rat m = r.mid();
            if (chain.count_roots(r.lo, m) == 1)
                r.hi = m;
            else
                r.lo = m;
        }
    };
    Rat target = rat_of(1, 64);
    Rat scale(1);
    for (const RatInterval& r : iv) {
        Rat a = abs(r.lo) > abs(r.hi) ? abs(r.lo) : abs(r.hi);
        if (a > scale) scale = a;
    }
    for (auto& r : iv) refine(r, target / (scale + 1));
    int n = static_cast<int>(iv.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            RatInterval sum = iv[i] + iv[j];
            RatInterval prod = iv[i] * iv[j];
            Int ps = floor_rat(sum.mid() + rat_of(1, 2));
            Int pq = floor_rat(prod.mid() + rat_of(1, 2));
            IntPoly cand(std::vector<Int>{pq, -ps, Int(1)});
            IntPoly rem = p.mod_monic(cand);
            if (rem.is_zero()) {
                quad = cand;
                rest = p.div_exact_monic(cand);
                return true;
            }
        }
    }
    return false;
}

} // namespace

std::vector<IntPoly> factor_monic_allreal(const IntPoly& p_in) {
    std::vector<IntPoly> factors;
    IntPoly p = p_in;
    if (!p.is_monic()) throw Error(ErrorKind::Domain, "factor_monic_allreal needs a monic polynomial");
    // Peel off linear factors.
    std::vector<Rat> roots = strip_rational_roots(p);
    for (const Rat& r : roots) {
        if (!is_integer(r)) throw Error(ErrorKind::Domain, "monic polynomial with non-integer rational root");
        factors.push_back(IntPoly(std::vector<Int>{Int(-r.get_num()), Int(1)}));
    }
    while (p.degree() >= 4) {
        IntPoly quad, rest;
        if (!try_quadratic_split(p, quad, rest)) break;
        factors.push_back(quad);
        p = rest;
        std::vector<Rat> more = strip_rational_roots(p);
        for (const Rat& r : more) factors.push_back(IntPoly(std::vector<Int>{Int(-r.get_num()), Int(1)}));
    }
    // Degree 2 or 3 with no rational roots is irreducible over Q.
    if (p.degree() > 0) factors.push_back(p);
    std::sort(factors.begin(), factors.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.c < b.c;
    });
    return factors;
}

} // namespace drg
