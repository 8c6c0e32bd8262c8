#ifndef HERMSIG_INTERVAL_HPP
#define HERMSIG_INTERVAL_HPP

// Closed rational enclosures [lo, hi] with outward dyadic rounding, plus the
// handful of certified transcendental enclosures the library needs (pi, cos).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace hermsig {

/// Closed interval with rational endpoints, lo <= hi.
struct Enclosure {
    mpq_class lo;
    mpq_class hi;

    Enclosure() = default;
    explicit Enclosure(const mpq_class& point) : lo(point), hi(point) {}
    Enclosure(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h))
    {
        if (lo > hi) throw std::logic_error("enclosure with lo > hi");
    }

    [[nodiscard]] mpq_class width() const { return hi - lo; }
    [[nodiscard]] bool contains(const mpq_class& q) const { return lo <= q && q <= hi; }
    [[nodiscard]] bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    [[nodiscard]] mpq_class midpoint() const { return (lo + hi) / 2; }
};

namespace interval_detail {

inline mpz_class pow2(unsigned bits)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
    return r;
}

inline mpz_class floor_q(const mpq_class& q)
{
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline mpz_class ceil_q(const mpq_class& q)
{
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline mpq_class dyadic(const mpz_class& num, unsigned bits)
{
    mpq_class r(num, pow2(bits));
    r.canonicalize();
    return r;
}

} // namespace interval_detail

inline mpq_class round_down(const mpq_class& q, unsigned bits)
{
    using namespace interval_detail;
    if (q.get_den() == 1) return q;
    return dyadic(floor_q(q * pow2(bits)), bits);
}

inline mpq_class round_up(const mpq_class& q, unsigned bits)
{
    using namespace interval_detail;
    if (q.get_den() == 1) return q;
    return dyadic(ceil_q(q * pow2(bits)), bits);
}

/// Rounds endpoints outward onto the dyadic grid 2^-bits.
inline Enclosure widen(const Enclosure& e, unsigned bits)
{
    return {round_down(e.lo, bits), round_up(e.hi, bits)};
}

inline Enclosure operator+(const Enclosure& a, const Enclosure& b) { return {a.lo + b.lo, a.hi + b.hi}; }
inline Enclosure operator-(const Enclosure& a, const Enclosure& b) { return {a.lo - b.hi, a.hi - b.lo}; }
inline Enclosure operator-(const Enclosure& a) { return {-a.hi, -a.lo}; }

inline Enclosure operator*(const Enclosure& a, const Enclosure& b)
{
    mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline Enclosure reciprocal(const Enclosure& a)
{
    if (a.contains_zero()) throw std::domain_error("reciprocal of an enclosure containing zero");
    mpq_class l = 1 / a.hi, h = 1 / a.lo;
    return {l, h};
}

inline Enclosure operator/(const Enclosure& a, const Enclosure& b) { return a * reciprocal(b); }

/// Enclosure of sqrt(q) for rational q >= 0, endpoints on the 2^-bits grid.
inline Enclosure sqrt_enclosure(const mpq_class& q, unsigned bits)
{
    using namespace interval_detail;
    if (sgn(q) < 0) throw std::domain_error("square root of a negative rational");
    const mpz_class scale = pow2(2 * bits);
    mpz_class lo_arg = floor_q(q * scale), hi_arg = ceil_q(q * scale);
    mpz_class lo_root, hi_root;
    mpz_sqrt(lo_root.get_mpz_t(), lo_arg.get_mpz_t());
    mpz_sqrt(hi_root.get_mpz_t(), hi_arg.get_mpz_t());
    if (hi_root * hi_root != hi_arg) hi_root += 1;
    return {dyadic(lo_root, bits), dyadic(hi_root, bits)};
}

/// Monotone square root of an enclosure with lo >= 0.
inline Enclosure sqrt_enclosure(const Enclosure& e, unsigned bits)
{
    if (sgn(e.lo) < 0) throw std::domain_error("square root of an enclosure reaching below zero");
    return {sqrt_enclosure(e.lo, bits).lo, sqrt_enclosure(e.hi, bits).hi};
}

namespace interval_detail {

// arctan(1/k) by its alternating series; consecutive partial sums bracket the value.
inline Enclosure arctan_inverse(unsigned long k, unsigned bits)
{
    const mpq_class tolerance(1, pow2(bits + 4));
    const mpz_class k2 = mpz_class(k) * k;
    mpz_class power = k; // k^(2j+1)
    mpq_class sum = 0;
    for (unsigned long j = 0;; ++j) {
        mpq_class term(1, power * (2 * j + 1));
        term.canonicalize();
        mpq_class next = (j % 2 == 0) ? mpq_class(sum + term) : mpq_class(sum - term);
        if (term < tolerance) return next < sum ? Enclosure(next, sum) : Enclosure(sum, next);
        sum = next;
        power *= k2;
    }
}

} // namespace interval_detail

/// Certified enclosure of pi (Machin's formula), width about 2^-bits.
inline Enclosure pi_enclosure(unsigned bits)
{
    static std::mutex mutex;
    static std::map<unsigned, Enclosure> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        if (auto it = cache.find(bits); it != cache.end()) return it->second;
    }
    using interval_detail::arctan_inverse;
    Enclosure a = arctan_inverse(5, bits + 8), b = arctan_inverse(239, bits + 8);
    Enclosure pi = Enclosure(mpq_class(16)) * a - Enclosure(mpq_class(4)) * b;
    pi = widen(pi, bits + 2);
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(bits, pi);
    return pi;
}

/// Enclosure of cos(y) for rational y, via Taylor with the Lagrange remainder.
inline Enclosure cos_enclosure(const mpq_class& y, unsigned bits)
{
    using namespace interval_detail;
    const mpq_class tolerance(1, pow2(bits + 4));
    const mpq_class y2 = y * y;
    mpq_class term = 1; // y^(2j) / (2j)!
    mpq_class sum = 0;
    for (unsigned long j = 0;; ++j) {
        // |remainder after j terms| <= y^(2j)/(2j)!, which is `term` here
        if (j > 0 && abs(term) < tolerance) {
            mpq_class bound = abs(term);
            return widen(Enclosure(sum - bound, sum + bound), bits + 2);
        }
        sum += (j % 2 == 0) ? term : mpq_class(-term);
        term = term * y2 / ((2 * j + 1) * (2 * j + 2));
    }
}

/// Enclosure of cos(num * pi / den) for an angle inside [0, pi].
inline Enclosure cos_pi_fraction(long num, unsigned long den, unsigned bits)
{
    if (num < 0 || static_cast<unsigned long>(num) > den)
        throw std::domain_error("cos_pi_fraction expects an angle in [0, pi]");
    Enclosure pi = pi_enclosure(bits + 8);
    mpq_class f(num, den);
    f.canonicalize();
    mpq_class x_lo = round_down(pi.lo * f, bits + 8), x_hi = round_up(pi.hi * f, bits + 8);
    mpq_class pi_hi = pi.hi;
    if (x_hi > pi_hi) x_hi = pi_hi;
    // cos is decreasing on [0, pi]
    Enclosure at_hi = cos_enclosure(x_hi, bits), at_lo = cos_enclosure(x_lo, bits);
    return {at_hi.lo, at_lo.hi};
}

inline std::string to_decimal(const mpq_class& q, int digits = 40)
{
    mpf_class f(q, static_cast<mp_bitcnt_t>(digits * 4 + 64));
    mp_exp_t exponent = 0;
    std::string mantissa = f.get_str(exponent, 10, static_cast<std::size_t>(digits));
    if (mantissa.empty()) return "0";
    std::string sign;
    if (mantissa[0] == '-') {
        sign = "-";
        mantissa.erase(0, 1);
    }
    std::ostringstream out;
    out << sign << "0." << mantissa << "e" << exponent;
    return out.str();
}

} // namespace hermsig

#endif
