#ifndef HERMSIG_MULTI_INDEX_HPP
#define HERMSIG_MULTI_INDEX_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace hermsig {

/// Exponent vector of fixed arity (at most kMaxArity entries).
class MultiIndex {
public:
    static constexpr unsigned kMaxArity = 30;
    using exponent_type = std::uint16_t;

    MultiIndex() = default;
    explicit MultiIndex(unsigned arity) : n_(check_arity(arity)) {}
    MultiIndex(std::initializer_list<unsigned> exps) : n_(check_arity(static_cast<unsigned>(exps.size())))
    {
        unsigned i = 0;
        for (unsigned e : exps) e_[i++] = narrow(e);
    }

    static MultiIndex unit(unsigned arity, unsigned var, unsigned power = 1)
    {
        MultiIndex m(arity);
        m.set(var, power);
        return m;
    }

    [[nodiscard]] unsigned arity() const { return n_; }
    [[nodiscard]] unsigned operator[](unsigned i) const { return e_[i]; }
    void set(unsigned i, unsigned v)
    {
        if (i >= n_) throw std::out_of_range("multi-index position out of range");
        e_[i] = narrow(v);
    }

    [[nodiscard]] unsigned degree() const
    {
        unsigned d = 0;
        for (unsigned i = 0; i < n_; ++i) d += e_[i];
        return d;
    }

    /// Degree of the sub-range [from, to).
    [[nodiscard]] unsigned degree(unsigned from, unsigned to) const
    {
        unsigned d = 0;
        for (unsigned i = from; i < to; ++i) d += e_[i];
        return d;
    }

    [[nodiscard]] bool is_zero() const { return degree() == 0; }

    [[nodiscard]] bool divides(const MultiIndex& o) const
    {
        for (unsigned i = 0; i < n_; ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b)
    {
        same_arity(a, b);
        MultiIndex r(a.n_);
        for (unsigned i = 0; i < a.n_; ++i) r.e_[i] = narrow(unsigned(a.e_[i]) + b.e_[i]);
        return r;
    }

    /// Componentwise difference; requires b to divide a.
    friend MultiIndex operator-(const MultiIndex& a, const MultiIndex& b)
    {
        same_arity(a, b);
        MultiIndex r(a.n_);
        for (unsigned i = 0; i < a.n_; ++i) {
            if (b.e_[i] > a.e_[i]) throw std::domain_error("multi-index difference would be negative");
            r.e_[i] = static_cast<exponent_type>(a.e_[i] - b.e_[i]);
        }
        return r;
    }

    friend MultiIndex min(const MultiIndex& a, const MultiIndex& b)
    {
        same_arity(a, b);
        MultiIndex r(a.n_);
        for (unsigned i = 0; i < a.n_; ++i) r.e_[i] = std::min(a.e_[i], b.e_[i]);
        return r;
    }

    [[nodiscard]] MultiIndex scaled(unsigned k) const
    {
        MultiIndex r(n_);
        for (unsigned i = 0; i < n_; ++i) r.e_[i] = narrow(unsigned(e_[i]) * k);
        return r;
    }

    /// Copy with arity `m` >= arity(), new trailing positions zero.
    [[nodiscard]] MultiIndex padded(unsigned m) const
    {
        if (m < n_) throw arity_mismatch("cannot shrink a multi-index");
        MultiIndex r(m);
        std::copy_n(e_.begin(), n_, r.e_.begin());
        return r;
    }

    /// Entries [from, from + len) as a new multi-index.
    [[nodiscard]] MultiIndex slice(unsigned from, unsigned len) const
    {
        MultiIndex r(len);
        std::copy_n(e_.begin() + from, len, r.e_.begin());
        return r;
    }

    /// Concatenation (a, b).
    friend MultiIndex concat(const MultiIndex& a, const MultiIndex& b)
    {
        MultiIndex r(a.n_ + b.n_);
        std::copy_n(a.e_.begin(), a.n_, r.e_.begin());
        std::copy_n(b.e_.begin(), b.n_, r.e_.begin() + a.n_);
        return r;
    }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b)
    {
        return a.n_ == b.n_ && std::equal(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin());
    }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return !(a == b); }

    /// Lexicographic comparison of raw exponents (first position most significant).
    friend int lex_compare(const MultiIndex& a, const MultiIndex& b)
    {
        for (unsigned i = 0; i < std::min(a.n_, b.n_); ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
        return a.n_ == b.n_ ? 0 : (a.n_ < b.n_ ? -1 : 1);
    }

    /// Graded lexicographic comparison.
    friend int grlex_compare(const MultiIndex& a, const MultiIndex& b)
    {
        unsigned da = a.degree(), db = b.degree();
        if (da != db) return da < db ? -1 : 1;
        return lex_compare(a, b);
    }

    [[nodiscard]] std::string to_string() const
    {
        std::string s = "(";
        for (unsigned i = 0; i < n_; ++i) s += (i ? "," : "") + std::to_string(e_[i]);
        return s + ")";
    }

private:
    static unsigned check_arity(unsigned a)
    {
        if (a > kMaxArity) throw arity_mismatch("arity " + std::to_string(a) + " exceeds the supported maximum");
        return a;
    }
    static exponent_type narrow(unsigned v)
    {
        if (v > 0xFFFFu) throw std::overflow_error("exponent overflow");
        return static_cast<exponent_type>(v);
    }
    static void same_arity(const MultiIndex& a, const MultiIndex& b)
    {
        if (a.n_ != b.n_) throw arity_mismatch("multi-index arity mismatch");
    }

    std::array<exponent_type, kMaxArity> e_{};
    std::uint8_t n_ = 0;
};

/// Orders terms from the grlex-largest down; canonical printing and basis order.
struct GrlexDescending {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const { return grlex_compare(a, b) > 0; }
};

} // namespace hermsig

#endif
