#pragma once

#include "stripllt/compositions.hpp"
#include "stripllt/qpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace sllt {

enum class Basis { m, s, h, e, p };

char basis_char(Basis b);
Basis parse_basis(const std::string& s);

using Exponent = std::vector<int>;

// Homogeneous polynomial in x_1..x_k with QPoly coefficients.
class SymFunc {
public:
    SymFunc(int k, int degree);

    int k() const { return k_; }
    int degree() const { return degree_; }
    const std::map<Exponent, QPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponent& x, const QPoly& c);
    QPoly coeff(const Exponent& x) const;
    // coefficient of x^lambda, lambda padded with zeros; zero if l(lambda) > k
    QPoly monomial_coeff(const Partition& lambda) const;

    bool is_symmetric() const;

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc& operator*=(const QPoly& c);

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const QPoly& c) { return a *= c; }
    friend SymFunc operator*(const QPoly& c, SymFunc a) { return a *= c; }
    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    int k_;
    int degree_;
    std::map<Exponent, QPoly> terms_;
};

SymFunc multiply(const SymFunc& f, const SymFunc& g);

// f = (1/denominator) * sum coeffs[lambda] * b_lambda
struct BasisExpansion {
    Basis basis = Basis::s;
    int degree = 0;
    std::map<Partition, QPoly> coeffs;
    Integer denominator = 1;

    QPoly coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const QPoly& c);
    // positive denominator, coprime to the content of the numerators
    void normalize();
    bool integral() const { return denominator == 1; }

    friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

SymFunc eval_basis(Basis b, const Partition& lambda, int k);

// coefficient of x^lambda in b_mu, for any number of variables >= l(lambda)
Integer monomial_coefficient(Basis b, const Partition& mu, const Partition& lambda);

BasisExpansion to_basis(const SymFunc& f, Basis b);
SymFunc evaluate(const BasisExpansion& e, int k);

BasisExpansion ribbon_expansion(const Composition& alpha);
SymFunc ribbon(const Composition& alpha, int k);

BasisExpansion plethystic_q_substitute(const BasisExpansion& e);
BasisExpansion divide_qpoly(const BasisExpansion& e, const QPoly& d);

std::string to_text(const BasisExpansion& e);

} // namespace sllt
