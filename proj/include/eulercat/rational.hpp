#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "eulercat/errors.hpp"

namespace eulercat {

// Exact rational scalar backed by GMP. Values are kept canonical (lowest
// terms, positive denominator) after every operation, so rendering the same
// value always yields the same "p/q" string.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw MathError("DIVISION_BY_ZERO", "rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Parses "p" or "p/q" (optional leading '-').
    static Rat from_string(std::string_view s) {
        mpq_class q;
        if (s.empty() || q.set_str(std::string(s), 10) != 0)
            throw InputError("PARSE_ERROR", "bad rational literal: '" + std::string(s) + "'");
        if (q.get_den() == 0)
            throw InputError("PARSE_ERROR", "zero denominator in: '" + std::string(s) + "'");
        q.canonicalize();
        return Rat(std::move(q));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Requires an integer value that fits in long long.
    long long to_ll() const {
        if (!is_integer() || !v_.get_num().fits_slong_p())
            throw MathError("NOT_AN_INTEGER", "value " + str() + " is not a machine integer");
        return v_.get_num().get_si();
    }

    std::string str() const { return v_.get_str(); }  // "p/q", or "p" when q = 1

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw MathError("DIVISION_BY_ZERO", "rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

private:
    mpq_class v_;
};

inline Rat binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rat(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return Rat(r);
}

inline Rat factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rat(r);
}

}  // namespace eulercat
