#ifndef HERMSIG_SCALAR_HPP
#define HERMSIG_SCALAR_HPP

// Exact real scalars: rationals, elements of a real quadratic tower
// Q -> Q(sqrt d) -> Q(sqrt d)(s) with s^2 in Q(sqrt d), and certified
// interval enclosures for values that are only numerically available.
//
// Embedding into R is fixed: sqrt d > 0 and s > 0.

#include <array>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "interval.hpp"

namespace hermsig {

inline constexpr unsigned kDefaultPrecision = 128;

/// Upper bound on interval refinement, in bits. HERMSIG_INTERVAL_PREC_CAP overrides.
inline unsigned precision_cap()
{
    static const unsigned cap = [] {
        if (const char* env = std::getenv("HERMSIG_INTERVAL_PREC_CAP")) {
            long v = std::strtol(env, nullptr, 10);
            if (v >= 64) return static_cast<unsigned>(v);
        }
        return 8192u;
    }();
    return cap;
}

namespace detail {

inline std::optional<mpq_class> rational_sqrt(const mpq_class& q)
{
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

// Element a + b*sqrt(d) of the first tower level.
struct Quad1 {
    mpq_class a, b;
};

inline Quad1 mul1(const Quad1& x, const Quad1& y, const mpq_class& d)
{
    return {x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
}
inline Quad1 add1(const Quad1& x, const Quad1& y) { return {x.a + y.a, x.b + y.b}; }
inline Quad1 sub1(const Quad1& x, const Quad1& y) { return {x.a - y.a, x.b - y.b}; }
inline bool is_zero1(const Quad1& x) { return sgn(x.a) == 0 && sgn(x.b) == 0; }

inline Quad1 inv1(const Quad1& x, const mpq_class& d)
{
    mpq_class n = x.a * x.a - d * x.b * x.b;
    if (sgn(n) == 0) throw division_by_zero();
    return {x.a / n, -x.b / n};
}

inline int sign1(const Quad1& x, const mpq_class& d)
{
    int sa = sgn(x.a), sb = sgn(x.b);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with d b^2
    return sa * sgn(x.a * x.a - d * x.b * x.b);
}

// Square root of x inside Q(sqrt d), positive, if x is a square there.
inline std::optional<Quad1> sqrt1(const Quad1& x, const mpq_class& d)
{
    if (sgn(x.b) == 0) {
        if (auto r = rational_sqrt(x.a)) return Quad1{*r, 0};
        if (auto r = rational_sqrt(x.a / d)) return Quad1{0, *r};
        return std::nullopt;
    }
    auto disc = rational_sqrt(x.a * x.a - d * x.b * x.b);
    if (!disc) return std::nullopt;
    for (const mpq_class& a2 : {mpq_class((x.a + *disc) / 2), mpq_class((x.a - *disc) / 2)}) {
        if (sgn(a2) <= 0) continue;
        auto a = rational_sqrt(a2);
        if (!a) continue;
        Quad1 root{*a, x.b / (2 * *a)};
        if (root.a * root.a + d * root.b * root.b != x.a) continue;
        if (sign1(root, d) < 0) root = {-root.a, -root.b};
        return root;
    }
    return std::nullopt;
}

// Splits a positive rational q as f^2 * m with m a (trial-division) square-free integer.
inline std::pair<mpq_class, mpz_class> square_free_split(const mpq_class& q)
{
    mpz_class m = q.get_num() * q.get_den();
    mpz_class f = 1;
    for (unsigned long p = 2; p < 100000; ++p) {
        mpz_class pp = mpz_class(p) * p;
        if (pp > m) break;
        while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
            m /= pp;
            f *= p;
        }
    }
    mpq_class factor(f, q.get_den());
    factor.canonicalize();
    return {factor, m};
}

} // namespace detail

/// A field of the tower: Q, Q(sqrt d), or Q(sqrt d)(s) with s^2 = t in Q(sqrt d).
class Field {
public:
    Field() = default;

    [[nodiscard]] int depth() const { return node_ ? node_->depth : 0; }
    [[nodiscard]] const mpq_class& d() const { return node_->d; }
    [[nodiscard]] const detail::Quad1& t() const { return node_->t; }
    [[nodiscard]] Field base() const
    {
        if (depth() <= 1) return {};
        return Field(node_->base);
    }

    static Field quadratic(const mpq_class& d)
    {
        auto n = std::make_shared<Node>();
        n->depth = 1;
        n->d = d;
        return Field(std::move(n));
    }

    static Field extend(const Field& base, const detail::Quad1& t)
    {
        if (base.depth() != 1) throw std::invalid_argument("second tower level needs a first-level base");
        auto n = std::make_shared<Node>();
        n->depth = 2;
        n->d = base.d();
        n->t = t;
        n->base = base.node_;
        return Field(std::move(n));
    }

    friend bool operator==(const Field& x, const Field& y)
    {
        if (x.depth() != y.depth()) return false;
        if (x.depth() == 0) return true;
        if (x.node_ == y.node_) return true;
        if (x.d() != y.d()) return false;
        return x.depth() == 1 || (x.t().a == y.t().a && x.t().b == y.t().b);
    }
    friend bool operator!=(const Field& x, const Field& y) { return !(x == y); }

    /// True if this field is a subfield of `other` along the tower.
    [[nodiscard]] bool is_prefix_of(const Field& other) const
    {
        if (depth() > other.depth()) return false;
        if (depth() == 0) return true;
        if (depth() == other.depth()) return *this == other;
        return *this == other.base();
    }

    static Field join(const Field& x, const Field& y)
    {
        if (x.is_prefix_of(y)) return y;
        if (y.is_prefix_of(x)) return x;
        throw incompatible_towers("scalars live in incompatible quadratic towers: " + x.describe() + " vs "
                                  + y.describe());
    }

    [[nodiscard]] std::string sqrt_d_string() const { return "sqrt(" + d().get_str() + ")"; }
    [[nodiscard]] std::string s_string() const;

    [[nodiscard]] std::string describe() const
    {
        switch (depth()) {
        case 0: return "Q";
        case 1: return "Q(" + sqrt_d_string() + ")";
        default: return "Q(" + sqrt_d_string() + ")(" + s_string() + ")";
        }
    }

private:
    struct Node {
        int depth = 0;
        mpq_class d;
        detail::Quad1 t;
        std::shared_ptr<const Node> base;
    };
    explicit Field(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

class Scalar;
Scalar sqrt_in(const Field& base, const Scalar& radicand);

/// Exact real number (rational or quadratic-tower element) or a certified
/// interval enclosure with a refinement generator. Values are immutable.
class Scalar {
public:
    using Coeffs = std::array<mpq_class, 4>; // basis {1, sqrt d, s, sqrt d * s}
    using Generator = std::function<Enclosure(unsigned)>;

    Scalar() = default;
    Scalar(int v) : q_(v) {}
    Scalar(long v) : q_(v) {}
    Scalar(const mpz_class& v) : q_(v) {}
    Scalar(mpq_class v) : q_(std::move(v)) {}

    static Scalar rational(long num, long den)
    {
        if (den == 0) throw division_by_zero();
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q);
    }

    /// Element c0 + c1 sqrt d + c2 s + c3 sqrt d s of `field`, canonicalised.
    static Scalar in_field(const Field& field, Coeffs c)
    {
        Scalar out;
        out.assign_coeffs(field, std::move(c));
        return out;
    }

    /// Interval-mode scalar whose enclosures at increasing precision come from `gen`.
    static Scalar from_generator(Generator gen)
    {
        Scalar out;
        out.ival_ = std::make_shared<IntervalNode>(std::move(gen));
        return out;
    }

    [[nodiscard]] bool is_rational() const { return !quad_ && !ival_; }
    [[nodiscard]] bool is_interval() const { return static_cast<bool>(ival_); }
    [[nodiscard]] bool is_exact() const { return !ival_; }

    [[nodiscard]] const mpq_class& rational_value() const
    {
        if (!is_rational()) throw std::logic_error("scalar is not rational: " + to_string());
        return q_;
    }

    [[nodiscard]] Field field() const { return quad_ ? quad_->field : Field{}; }

    [[nodiscard]] Coeffs coefficients() const
    {
        if (ival_) throw std::logic_error("interval scalar has no exact coefficients");
        if (quad_) return quad_->c;
        return {q_, 0, 0, 0};
    }

    [[nodiscard]] bool is_zero() const { return is_rational() && sgn(q_) == 0; }
    [[nodiscard]] bool is_one() const { return is_rational() && q_ == 1; }

    /// Enclosure at working precision `bits` (exact values give tight enclosures).
    [[nodiscard]] Enclosure enclose(unsigned bits = kDefaultPrecision) const
    {
        if (ival_) return ival_->at(bits);
        if (!quad_) return Enclosure(q_);
        const Field& f = quad_->field;
        const Coeffs& c = quad_->c;
        Enclosure r = sqrt_enclosure(f.d(), bits + 16);
        Enclosure acc = Enclosure(c[0]) + Enclosure(c[1]) * r;
        if (f.depth() == 2) {
            Enclosure t = Enclosure(f.t().a) + Enclosure(f.t().b) * r;
            Enclosure s = sqrt_enclosure(widen(t, bits + 16), bits + 16);
            acc = acc + Enclosure(c[2]) * s + Enclosure(c[3]) * r * s;
        }
        return widen(acc, bits + 8);
    }

    /// Exact sign; interval values are refined up to the precision cap.
    [[nodiscard]] int sign() const
    {
        if (!quad_ && !ival_) return sgn(q_);
        if (quad_) {
            const Field& f = quad_->field;
            const Coeffs& c = quad_->c;
            detail::Quad1 a{c[0], c[1]};
            if (f.depth() == 1) return detail::sign1(a, f.d());
            detail::Quad1 b{c[2], c[3]};
            int sa = detail::sign1(a, f.d()), sb = detail::sign1(b, f.d());
            if (sb == 0) return sa;
            if (sa == 0 || sa == sb) return sb;
            detail::Quad1 a2 = detail::mul1(a, a, f.d());
            detail::Quad1 b2t = detail::mul1(detail::mul1(b, b, f.d()), f.t(), f.d());
            return sa * detail::sign1(detail::sub1(a2, b2t), f.d());
        }
        unsigned bits = kDefaultPrecision;
        for (;;) {
            Enclosure e = ival_->at(bits);
            if (sgn(e.lo) > 0) return 1;
            if (sgn(e.hi) < 0) return -1;
            if (sgn(e.lo) == 0 && sgn(e.hi) == 0) return 0;
            if (bits >= precision_cap()) throw indeterminate_sign("cannot separate interval scalar from zero", bits);
            bits = std::min(bits * 2, precision_cap());
        }
    }

    [[nodiscard]] Scalar inverse() const
    {
        if (is_rational()) {
            if (sgn(q_) == 0) throw division_by_zero();
            return Scalar(mpq_class(1 / q_));
        }
        if (ival_) {
            if (sign() == 0) throw division_by_zero();
            Scalar self = *this;
            return from_generator([self](unsigned bits) {
                unsigned b = bits;
                for (;;) {
                    Enclosure e = self.enclose(b + 8);
                    if (!e.contains_zero()) return widen(reciprocal(e), bits);
                    if (b >= precision_cap()) throw indeterminate_sign("reciprocal of interval near zero", b);
                    b = std::min(b * 2, precision_cap());
                }
            });
        }
        const Field& f = quad_->field;
        const Coeffs& c = quad_->c;
        detail::Quad1 a{c[0], c[1]};
        if (f.depth() == 1) {
            detail::Quad1 r = detail::inv1(a, f.d());
            return in_field(f, {r.a, r.b, 0, 0});
        }
        detail::Quad1 b{c[2], c[3]};
        detail::Quad1 norm = detail::sub1(detail::mul1(a, a, f.d()),
                                          detail::mul1(detail::mul1(b, b, f.d()), f.t(), f.d()));
        detail::Quad1 ni = detail::inv1(norm, f.d());
        detail::Quad1 ra = detail::mul1(a, ni, f.d()), rb = detail::mul1(b, ni, f.d());
        return in_field(f, {ra.a, ra.b, -rb.a, -rb.b});
    }

    friend Scalar operator+(const Scalar& x, const Scalar& y)
    {
        if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.q_ + y.q_));
        if (y.is_zero()) return x;
        if (x.is_zero()) return y;
        if (x.ival_ || y.ival_) return interval_op(x, y, [](const Enclosure& a, const Enclosure& b) { return a + b; });
        return linear_op(x, y, 1);
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y)
    {
        if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.q_ - y.q_));
        if (y.is_zero()) return x;
        if (x.ival_ || y.ival_) return interval_op(x, y, [](const Enclosure& a, const Enclosure& b) { return a - b; });
        return linear_op(x, y, -1);
    }
    friend Scalar operator-(const Scalar& x)
    {
        if (x.is_rational()) return Scalar(mpq_class(-x.q_));
        return Scalar(0) - x;
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y)
    {
        if (x.is_rational() && y.is_rational()) return Scalar(mpq_class(x.q_ * y.q_));
        if (x.is_zero() || y.is_zero()) return Scalar(0);
        if (x.ival_ || y.ival_) return interval_op(x, y, [](const Enclosure& a, const Enclosure& b) { return a * b; });
        Field f = Field::join(x.field(), y.field());
        Coeffs a = x.coefficients(), b = y.coefficients();
        if (f.depth() == 0) return Scalar(mpq_class(a[0] * b[0]));
        const mpq_class& d = f.d();
        detail::Quad1 xa{a[0], a[1]}, xb{a[2], a[3]}, ya{b[0], b[1]}, yb{b[2], b[3]};
        detail::Quad1 lo = detail::mul1(xa, ya, d), hi = detail::add1(detail::mul1(xa, yb, d), detail::mul1(xb, ya, d));
        if (f.depth() == 2) lo = detail::add1(lo, detail::mul1(detail::mul1(xb, yb, d), f.t(), d));
        return in_field(f, {lo.a, lo.b, hi.a, hi.b});
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Exact equality; interval scalars compare equal only to themselves.
    friend bool operator==(const Scalar& x, const Scalar& y)
    {
        if (x.ival_ || y.ival_) return x.ival_ == y.ival_;
        if (x.is_rational() && y.is_rational()) return x.q_ == y.q_;
        if (x.is_rational() != y.is_rational()) return false;
        return x.quad_->field == y.quad_->field && x.quad_->c == y.quad_->c;
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

    [[nodiscard]] double to_double() const
    {
        if (is_rational()) return q_.get_d();
        return enclose(96).midpoint().get_d();
    }

    /// Canonical text form, parseable by the expression grammar (exact values).
    [[nodiscard]] std::string to_string() const
    {
        if (is_rational()) return q_.get_str();
        if (ival_) {
            Enclosure e = enclose(kDefaultPrecision);
            return "[" + to_decimal(e.lo, 36) + ", " + to_decimal(e.hi, 36) + "]";
        }
        const Field& f = quad_->field;
        const Coeffs& c = quad_->c;
        const std::array<std::string, 4> basis = {"", f.sqrt_d_string(), f.depth() == 2 ? f.s_string() : "",
                                                  f.depth() == 2 ? f.sqrt_d_string() + "*" + f.s_string() : ""};
        std::string out;
        for (int i = 0; i < 4; ++i) {
            if (sgn(c[i]) == 0) continue;
            mpq_class mag = abs(c[i]);
            std::string term;
            if (basis[i].empty()) term = mag.get_str();
            else if (mag == 1) term = basis[i];
            else term = mag.get_str() + "*" + basis[i];
            if (out.empty()) out = sgn(c[i]) < 0 ? "-" + term : term;
            else out += (sgn(c[i]) < 0 ? " - " : " + ") + term;
        }
        return "(" + out + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    struct QuadValue {
        Field field;
        Coeffs c;
    };

    class IntervalNode {
    public:
        explicit IntervalNode(Generator g) : gen_(std::move(g)) {}
        Enclosure at(unsigned bits) const
        {
            {
                std::lock_guard<std::mutex> lock(mutex_);
                if (auto it = cache_.find(bits); it != cache_.end()) return it->second;
            }
            Enclosure e = gen_(bits);
            std::lock_guard<std::mutex> lock(mutex_);
            cache_.emplace(bits, e);
            return e;
        }

    private:
        Generator gen_;
        mutable std::mutex mutex_;
        mutable std::map<unsigned, Enclosure> cache_;
    };

    void assign_coeffs(Field f, Coeffs c)
    {
        if (f.depth() == 2 && sgn(c[2]) == 0 && sgn(c[3]) == 0) f = f.base();
        if (f.depth() == 1 && sgn(c[1]) == 0) f = Field{};
        if (f.depth() == 0) {
            q_ = c[0];
            quad_.reset();
            return;
        }
        quad_ = std::make_shared<QuadValue>(QuadValue{std::move(f), std::move(c)});
    }

    static Scalar linear_op(const Scalar& x, const Scalar& y, int sign)
    {
        Field f = Field::join(x.field(), y.field());
        Coeffs a = x.coefficients(), b = y.coefficients();
        for (int i = 0; i < 4; ++i) a[i] = sign > 0 ? mpq_class(a[i] + b[i]) : mpq_class(a[i] - b[i]);
        return in_field(f, std::move(a));
    }

    template <typename Op>
    static Scalar interval_op(const Scalar& x, const Scalar& y, Op op)
    {
        return from_generator([x, y, op](unsigned bits) { return widen(op(x.enclose(bits + 8), y.enclose(bits + 8)), bits + 4); });
    }

    mpq_class q_;
    std::shared_ptr<const QuadValue> quad_;
    std::shared_ptr<const IntervalNode> ival_;
};

inline std::string Field::s_string() const
{
    Scalar t = Scalar::in_field(base(), {node_->t.a, node_->t.b, 0, 0});
    return "sqrt(" + t.to_string() + ")";
}

inline int sign_of(const Scalar& a) { return a.sign(); }

/// Square root of `radicand` in `base` or in the smallest tower extension of
/// `base` containing it. Perfect squares stay in `base`.
inline Scalar sqrt_in(const Field& base, const Scalar& radicand)
{
    if (radicand.is_interval()) {
        if (radicand.sign() <= 0) throw std::domain_error("square root of a non-positive interval scalar");
        return Scalar::from_generator([radicand](unsigned bits) {
            return widen(sqrt_enclosure(radicand.enclose(bits + 8), bits + 8), bits + 4);
        });
    }
    int s = radicand.sign();
    if (s < 0) throw std::domain_error("square root of a negative scalar " + radicand.to_string());
    if (s == 0) return Scalar(0);
    Field f = Field::join(base, radicand.field());
    Scalar::Coeffs c = radicand.coefficients();
    if (f.depth() == 0) {
        if (auto r = detail::rational_sqrt(c[0])) return Scalar(*r);
        auto [factor, m] = detail::square_free_split(c[0]);
        if (m == 1) return Scalar(factor);
        return Scalar::in_field(Field::quadratic(mpq_class(m)), {0, factor, 0, 0});
    }
    if (f.depth() == 1) {
        detail::Quad1 x{c[0], c[1]};
        if (auto r = detail::sqrt1(x, f.d())) return Scalar::in_field(f, {r->a, r->b, 0, 0});
        return Scalar::in_field(Field::extend(f, x), {0, 0, 1, 0});
    }
    if (sgn(c[2]) != 0 || sgn(c[3]) != 0)
        throw std::domain_error("tower depth exceeded: square root of a second-level element");
    detail::Quad1 x{c[0], c[1]};
    if (auto r = detail::sqrt1(x, f.d())) return Scalar::in_field(f, {r->a, r->b, 0, 0});
    // sqrt(x) = s * sqrt(x / t) when x / t is a square of the first level
    detail::Quad1 ratio = detail::mul1(x, detail::inv1(f.t(), f.d()), f.d());
    if (auto r = detail::sqrt1(ratio, f.d())) return Scalar::in_field(f, {0, 0, r->a, r->b});
    throw std::domain_error("tower depth exceeded: extension beyond two quadratic levels");
}

inline Scalar sqrt_of(const Scalar& radicand) { return sqrt_in(radicand.field(), radicand); }

/// Field in which `radicand` has a square root (`base` itself for squares).
inline Field sqrt_extend(const Field& base, const Scalar& radicand)
{
    return Field::join(base, sqrt_in(base, radicand).field());
}

/// Replaces an interval value by the exact value it is certified to enclose:
/// refines until the enclosure is at most `width` wide and checks containment.
inline Scalar snap_to_exact(const Scalar& approx, const Scalar& exact, const mpq_class& width)
{
    if (approx.is_exact()) {
        if (approx != exact) throw invariant_violation("exact value " + approx.to_string() + " differs from " + exact.to_string());
        return exact;
    }
    for (unsigned bits = kDefaultPrecision;; bits = std::min(bits * 2, precision_cap())) {
        Enclosure e = approx.enclose(bits);
        Enclosure x = exact.enclose(bits + 32);
        if (e.width() <= width) {
            if (e.lo <= x.lo && x.hi <= e.hi) return exact;
            throw invariant_violation("interval value does not enclose " + exact.to_string());
        }
        if (bits >= precision_cap()) throw indeterminate_sign("could not reach the requested enclosure width", bits);
    }
}

/// Complex number re + i*im over Scalar.
class ComplexScalar {
public:
    ComplexScalar() = default;
    ComplexScalar(int v) : re_(v) {}
    ComplexScalar(long v) : re_(v) {}
    ComplexScalar(Scalar re) : re_(std::move(re)) {}
    ComplexScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexScalar i() { return {Scalar(0), Scalar(1)}; }

    [[nodiscard]] const Scalar& re() const { return re_; }
    [[nodiscard]] const Scalar& im() const { return im_; }
    [[nodiscard]] bool is_real() const { return im_.is_zero(); }
    [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    [[nodiscard]] bool is_one() const { return re_.is_one() && im_.is_zero(); }
    [[nodiscard]] bool is_exact() const { return re_.is_exact() && im_.is_exact(); }
    [[nodiscard]] bool is_gaussian_rational() const { return re_.is_rational() && im_.is_rational(); }

    [[nodiscard]] ComplexScalar conj() const { return {re_, -im_}; }
    [[nodiscard]] Scalar norm_squared() const { return re_ * re_ + im_ * im_; }

    [[nodiscard]] ComplexScalar inverse() const
    {
        if (im_.is_zero()) return ComplexScalar(re_.inverse());
        Scalar n = norm_squared();
        if (n.sign() == 0) throw division_by_zero();
        Scalar ni = n.inverse();
        return {re_ * ni, -im_ * ni};
    }

    friend ComplexScalar operator+(const ComplexScalar& a, const ComplexScalar& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend ComplexScalar operator-(const ComplexScalar& a, const ComplexScalar& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend ComplexScalar operator-(const ComplexScalar& a) { return {-a.re_, -a.im_}; }
    friend ComplexScalar operator*(const ComplexScalar& a, const ComplexScalar& b)
    {
        if (a.im_.is_zero() && b.im_.is_zero()) return ComplexScalar(a.re_ * b.re_);
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend ComplexScalar operator/(const ComplexScalar& a, const ComplexScalar& b) { return a * b.inverse(); }
    ComplexScalar& operator+=(const ComplexScalar& o) { return *this = *this + o; }
    ComplexScalar& operator-=(const ComplexScalar& o) { return *this = *this - o; }
    ComplexScalar& operator*=(const ComplexScalar& o) { return *this = *this * o; }

    friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const ComplexScalar& a, const ComplexScalar& b) { return !(a == b); }

    [[nodiscard]] std::string to_string() const
    {
        if (im_.is_zero()) return re_.to_string();
        std::string imag = im_.is_one() ? "i" : (im_ == Scalar(-1) ? "-i" : im_.to_string() + "*i");
        if (re_.is_zero()) return imag;
        return "(" + re_.to_string() + " + " + (im_.is_one() ? "i" : im_.to_string() + "*i") + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const ComplexScalar& c) { return os << c.to_string(); }

private:
    Scalar re_;
    Scalar im_;
};

} // namespace hermsig

#endif
