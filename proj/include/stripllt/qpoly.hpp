#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace sllt {

using Integer = mpz_class;
using Rational = mpq_class;

// Polynomial in q with integer coefficients; c_[e] is the coefficient of q^e.
// The coefficient vector never has a trailing zero.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c); // NOLINT: integers convert implicitly
    QPoly(const Integer& c); // NOLINT
    explicit QPoly(std::vector<Integer> coeffs);

    static QPoly q_power(int e, long c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Integer coeff(int e) const;
    const std::vector<Integer>& coeffs() const { return c_; }

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Integer& k);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    QPoly operator-() const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator<(const QPoly& a, const QPoly& b);

    // exact quotient when d divides *this, nullopt otherwise
    std::optional<QPoly> divide_exact(const QPoly& d) const;
    // divide every coefficient by an integer, which must divide exactly
    std::optional<QPoly> divide_exact(const Integer& d) const;

    Integer content() const; // gcd of coefficients, 0 for the zero polynomial
    bool nonnegative() const;
    Integer eval(long q) const;

    std::string str() const; // "3q^6 + q^5"

private:
    void trim();
    std::vector<Integer> c_;
};

QPoly pow(const QPoly& p, int e);

} // namespace sllt
