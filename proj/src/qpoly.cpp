#include "stripllt/qpoly.hpp"

#include <algorithm>

namespace sllt {

QPoly::QPoly(long c) {
    if (c != 0)
        c_.emplace_back(c);
}

QPoly::QPoly(const Integer& c) {
    if (c != 0)
        c_.push_back(c);
}

QPoly::QPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly QPoly::q_power(int e, long c) {
    std::vector<Integer> v(e + 1);
    v[e] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Integer QPoly::coeff(int e) const {
    if (e < 0 || e >= static_cast<int>(c_.size()))
        return 0;
    return c_[e];
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size())
        c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Integer> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Integer& k) {
    for (auto& x : c_)
        x *= k;
    trim();
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

bool operator<(const QPoly& a, const QPoly& b) {
    if (a.c_.size() != b.c_.size())
        return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
        if (a.c_[i] != b.c_[i])
            return a.c_[i] < b.c_[i];
    return false;
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& d) const {
    if (d.is_zero())
        return std::nullopt;
    if (is_zero())
        return QPoly();
    if (degree() < d.degree())
        return std::nullopt;
    std::vector<Integer> rem = c_;
    std::vector<Integer> quo(c_.size() - d.c_.size() + 1);
    const Integer& lead = d.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Integer& top = rem[k + d.c_.size() - 1];
        if (top == 0)
            continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            return std::nullopt;
        quo[k] = top / lead;
        for (std::size_t j = 0; j < d.c_.size(); ++j)
            rem[k + j] -= quo[k] * d.c_[j];
    }
    for (const auto& x : rem)
        if (x != 0)
            return std::nullopt;
    return QPoly(std::move(quo));
}

std::optional<QPoly> QPoly::divide_exact(const Integer& d) const {
    if (d == 0)
        return std::nullopt;
    std::vector<Integer> r = c_;
    for (auto& x : r) {
        if (!mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    }
    return QPoly(std::move(r));
}

Integer QPoly::content() const {
    Integer g = 0;
    for (const auto& x : c_)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

bool QPoly::nonnegative() const {
    return std::all_of(c_.begin(), c_.end(), [](const Integer& x) { return x >= 0; });
}

Integer QPoly::eval(long q) const {
    Integer acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = acc * q + c_[i];
    return acc;
}

std::string QPoly::str() const {
    if (is_zero())
        return "0";
    std::string s;
    for (int e = degree(); e >= 0; --e) {
        const Integer& c = c_[e];
        if (c == 0)
            continue;
        Integer mag = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        if (mag != 1 || e == 0)
            s += mag.get_str();
        if (e >= 1)
            s += "q";
        if (e >= 2)
            s += "^" + std::to_string(e);
    }
    return s;
}

QPoly pow(const QPoly& p, int e) {
    QPoly r(1);
    for (int i = 0; i < e; ++i)
        r *= p;
    return r;
}

} // namespace sllt
