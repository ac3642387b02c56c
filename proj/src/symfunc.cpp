#include "stripllt/symfunc.hpp"

#include "stripllt/errors.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>

namespace sllt {

char basis_char(Basis b) {
    switch (b) {
    case Basis::m: return 'm';
    case Basis::s: return 's';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::p: return 'p';
    }
    return '?';
}

Basis parse_basis(const std::string& s) {
    if (s == "m") return Basis::m;
    if (s == "s") return Basis::s;
    if (s == "h") return Basis::h;
    if (s == "e") return Basis::e;
    if (s == "p") return Basis::p;
    fail(ErrorKind::Parse, "unknown basis '" + s + "' (expected m, s, h, e or p)");
}

SymFunc::SymFunc(int k, int degree) : k_(k), degree_(degree) {
    if (k < 1)
        fail(ErrorKind::PreconditionViolated, "need at least one variable");
}

void SymFunc::add_term(const Exponent& x, const QPoly& c) {
    if (static_cast<int>(x.size()) != k_ || std::accumulate(x.begin(), x.end(), 0) != degree_)
        fail(ErrorKind::PreconditionViolated, "exponent vector does not match variable count or degree");
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(x, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

QPoly SymFunc::coeff(const Exponent& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? QPoly() : it->second;
}

QPoly SymFunc::monomial_coeff(const Partition& lambda) const {
    if (static_cast<int>(lambda.size()) > k_)
        return QPoly();
    Exponent x(k_, 0);
    std::copy(lambda.begin(), lambda.end(), x.begin());
    return coeff(x);
}

namespace {

Integer orbit_size(const Exponent& sorted) {
    Integer n;
    mpz_fac_ui(n.get_mpz_t(), sorted.size());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i])
            ++j;
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), j - i);
        n /= f;
        i = j;
    }
    return n;
}

} // namespace

bool SymFunc::is_symmetric() const {
    std::map<Exponent, std::pair<const QPoly*, long>> groups;
    for (const auto& [x, c] : terms_) {
        Exponent s = x;
        std::sort(s.begin(), s.end(), std::greater<>());
        auto [it, fresh] = groups.try_emplace(s, &c, 0);
        if (!fresh && !(*it->second.first == c))
            return false;
        ++it->second.second;
    }
    for (const auto& [s, g] : groups)
        if (orbit_size(s) != g.second)
            return false;
    return true;
}

SymFunc& SymFunc::operator+=(const SymFunc& o) {
    if (o.k_ != k_)
        fail(ErrorKind::MismatchedVariableCount, "adding symmetric functions in different variable counts");
    if (o.degree_ != degree_ && !o.is_zero() && !is_zero())
        fail(ErrorKind::PreconditionViolated, "adding functions of different degree");
    if (is_zero())
        degree_ = o.degree_;
    for (const auto& [x, c] : o.terms_)
        add_term(x, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) {
    SymFunc neg = o;
    neg *= QPoly(-1);
    return *this += neg;
}

SymFunc& SymFunc::operator*=(const QPoly& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [x, v] : terms_)
        v *= c;
    return *this;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    if (f.k() != g.k())
        fail(ErrorKind::MismatchedVariableCount, "multiplying symmetric functions in different variable counts");
    SymFunc r(f.k(), f.degree() + g.degree());
    Exponent x(f.k());
    for (const auto& [a, ca] : f.terms())
        for (const auto& [b, cb] : g.terms()) {
            for (int i = 0; i < f.k(); ++i)
                x[i] = a[i] + b[i];
            r.add_term(x, ca * cb);
        }
    return r;
}

QPoly BasisExpansion::coeff(const Partition& lambda) const {
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? QPoly() : it->second;
}

void BasisExpansion::add(const Partition& lambda, const QPoly& c) {
    QPoly& slot = coeffs[lambda];
    slot += c;
    if (slot.is_zero())
        coeffs.erase(lambda);
}

void BasisExpansion::normalize() {
    if (denominator == 0)
        fail(ErrorKind::PreconditionViolated, "zero denominator");
    if (denominator < 0) {
        denominator = -denominator;
        for (auto& [l, c] : coeffs)
            c = -c;
    }
    Integer g = denominator;
    for (const auto& [l, c] : coeffs) {
        Integer cg = c.content();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cg.get_mpz_t());
    }
    if (g == 1)
        return;
    denominator /= g;
    for (auto& [l, c] : coeffs)
        c = *c.divide_exact(g);
}

namespace {

// one-part generators
SymFunc generator(Basis b, int r, int k) {
    SymFunc f(k, r);
    Exponent x(k, 0);
    switch (b) {
    case Basis::h: {
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (i == k - 1) {
                x[i] = left;
                f.add_term(x, 1);
                return;
            }
            for (int a = 0; a <= left; ++a) {
                x[i] = a;
                rec(i + 1, left - a);
            }
        };
        rec(0, r);
        break;
    }
    case Basis::e: {
        std::function<void(int, int)> rec = [&](int i, int left) {
            if (left == 0) {
                f.add_term(x, 1);
                return;
            }
            if (k - i < left)
                return;
            x[i] = 1;
            rec(i + 1, left - 1);
            x[i] = 0;
            rec(i + 1, left);
        };
        rec(0, r);
        break;
    }
    case Basis::p:
        for (int i = 0; i < k; ++i) {
            x.assign(k, 0);
            x[i] = r;
            f.add_term(x, 1);
        }
        break;
    default:
        fail(ErrorKind::PreconditionViolated, "no one-part generator for this basis");
    }
    return f;
}

SymFunc schur(const Partition& lambda, int k) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    SymFunc f(k, n);
    if (static_cast<int>(lambda.size()) > k)
        return f;
    std::vector<std::vector<int>> t;
    for (int len : lambda)
        t.emplace_back(len, 0);
    Exponent x(k, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int c) {
        if (r == t.size()) {
            f.add_term(x, 1);
            return;
        }
        if (c == static_cast<int>(t[r].size())) {
            rec(r + 1, 0);
            return;
        }
        int lo = 1;
        if (c > 0)
            lo = t[r][c - 1];
        if (r > 0)
            lo = std::max(lo, t[r - 1][c] + 1);
        // leave room below in this column
        int rows_below = 0;
        for (std::size_t rr = r + 1; rr < t.size() && static_cast<int>(t[rr].size()) > c; ++rr)
            ++rows_below;
        for (int v = lo; v <= k - rows_below; ++v) {
            t[r][c] = v;
            ++x[v - 1];
            rec(r, c + 1);
            --x[v - 1];
        }
    };
    rec(0, 0);
    return f;
}

SymFunc monomial(const Partition& lambda, int k) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    SymFunc f(k, n);
    if (static_cast<int>(lambda.size()) > k)
        return f;
    Exponent x(k, 0);
    std::copy(lambda.begin(), lambda.end(), x.begin());
    std::sort(x.begin(), x.end());
    do {
        f.add_term(x, 1);
    } while (std::next_permutation(x.begin(), x.end()));
    return f;
}

Integer kostka(const Partition& mu, std::vector<int> content) {
    int total = std::accumulate(content.begin(), content.end(), 0);
    if (total != std::accumulate(mu.begin(), mu.end(), 0))
        return 0;
    if (content.empty())
        return 1;
    if (mu.size() > content.size())
        return 0;
    int r = content.back();
    content.pop_back();
    Integer count = 0;
    Partition nu(mu.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == mu.size()) {
            if (left != 0)
                return;
            Partition trimmed = nu;
            while (!trimmed.empty() && trimmed.back() == 0)
                trimmed.pop_back();
            count += kostka(trimmed, content);
            return;
        }
        int floor = i + 1 < mu.size() ? mu[i + 1] : 0;
        for (int v = mu[i]; v >= floor; --v) {
            if (mu[i] - v > left)
                break;
            nu[i] = v;
            rec(i + 1, left - (mu[i] - v));
        }
    };
    rec(0, r);
    return count;
}

// number of matrices with row sums mu and column sums lambda, entries restricted by basis
Integer matrix_count(Basis b, const Partition& mu, const Partition& lambda) {
    std::vector<int> col(lambda.begin(), lambda.end());
    Integer count = 0;
    std::function<void(std::size_t)> row;
    std::function<void(std::size_t, std::size_t, int)> fill = [&](std::size_t i, std::size_t j, int left) {
        if (left == 0) {
            row(i + 1);
            return;
        }
        if (j == col.size())
            return;
        int cap = std::min(left, col[j]);
        if (b == Basis::e)
            cap = std::min(cap, 1);
        for (int a = cap; a >= 0; --a) {
            if (b == Basis::p && a != 0 && a != left)
                continue;
            col[j] -= a;
            fill(i, j + 1, left - a);
            col[j] += a;
        }
    };
    row = [&](std::size_t i) {
        if (i == mu.size()) {
            if (std::all_of(col.begin(), col.end(), [](int c) { return c == 0; }))
                ++count;
            return;
        }
        fill(i, 0, mu[i]);
    };
    row(0);
    return count;
}

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(Matrix a) {
    const std::size_t n = a.size();
    Matrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0)
            ++piv;
        if (piv == n)
            fail(ErrorKind::PreconditionViolated, "singular transition matrix");
        std::swap(a[piv], a[c]);
        std::swap(inv[piv], inv[c]);
        Rational d = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= d;
            inv[c][j] /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rational f = a[r][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

struct InverseTable {
    std::vector<Partition> parts;
    Matrix inv; // inv[mu][lambda]: coefficient of b_mu in m_lambda
};

const InverseTable& inverse_table(Basis b, int n) {
    static std::mutex mu;
    static std::map<std::pair<Basis, int>, InverseTable> cache;
    std::lock_guard lock(mu);
    auto it = cache.find({b, n});
    if (it != cache.end())
        return it->second;
    InverseTable t;
    t.parts = partitions_of(n, n);
    Matrix a(t.parts.size(), std::vector<Rational>(t.parts.size()));
    for (std::size_t l = 0; l < t.parts.size(); ++l)
        for (std::size_t m = 0; m < t.parts.size(); ++m)
            a[l][m] = Rational(monomial_coefficient(b, t.parts[m], t.parts[l]));
    t.inv = invert(std::move(a));
    return cache.emplace(std::make_pair(b, n), std::move(t)).first->second;
}

} // namespace

SymFunc eval_basis(Basis b, const Partition& lambda, int k) {
    int n = std::accumulate(lambda.begin(), lambda.end(), 0);
    switch (b) {
    case Basis::s: return schur(lambda, k);
    case Basis::m: return monomial(lambda, k);
    default: {
        SymFunc f(k, 0);
        f.add_term(Exponent(k, 0), 1);
        for (int part : lambda)
            f = multiply(f, generator(b, part, k));
        if (f.degree() != n)
            fail(ErrorKind::PreconditionViolated, "degree mismatch in basis evaluation");
        return f;
    }
    }
}

Integer monomial_coefficient(Basis b, const Partition& mu, const Partition& lambda) {
    switch (b) {
    case Basis::m: return mu == lambda ? 1 : 0;
    case Basis::s: return kostka(mu, lambda);
    default: return matrix_count(b, mu, lambda);
    }
}

BasisExpansion to_basis(const SymFunc& f, Basis b) {
    if (!f.is_symmetric())
        fail(ErrorKind::NotSymmetric, "function is not symmetric");
    const int n = f.degree();
    if ((b == Basis::h || b == Basis::e || b == Basis::p) && f.k() < n)
        fail(ErrorKind::InsufficientVariables,
             std::string("expansion in ") + basis_char(b) + " needs at least " + std::to_string(n) + " variables");

    BasisExpansion out;
    out.basis = b;
    out.degree = n;
    const std::vector<Partition> parts = partitions_of(n, f.k());

    if (b == Basis::m) {
        for (const auto& l : parts)
            out.add(l, f.monomial_coeff(l));
        return out;
    }
    if (b == Basis::s) {
        // unitriangular in decreasing lexicographic order
        for (const auto& lam : parts) {
            QPoly c = f.monomial_coeff(lam);
            for (const auto& [mu, cm] : out.coeffs) {
                Integer kk = kostka(mu, lam);
                if (kk != 0)
                    c -= cm * QPoly(kk);
            }
            out.add(lam, c);
        }
        return out;
    }

    const InverseTable& t = inverse_table(b, n);
    int maxdeg = -1;
    std::vector<QPoly> fm;
    for (const auto& l : t.parts) {
        fm.push_back(f.monomial_coeff(l));
        maxdeg = std::max(maxdeg, fm.back().degree());
    }
    std::vector<std::vector<Rational>> rat(t.parts.size(), std::vector<Rational>(maxdeg + 1));
    Integer lcm = 1;
    for (std::size_t m = 0; m < t.parts.size(); ++m) {
        for (std::size_t l = 0; l < t.parts.size(); ++l) {
            if (t.inv[m][l] == 0)
                continue;
            for (int e = 0; e <= fm[l].degree(); ++e)
                rat[m][e] += t.inv[m][l] * Rational(fm[l].coeff(e));
        }
        for (auto& r : rat[m]) {
            r.canonicalize();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.get_den_mpz_t());
        }
    }
    out.denominator = lcm;
    for (std::size_t m = 0; m < t.parts.size(); ++m) {
        std::vector<Integer> num(maxdeg + 1);
        for (int e = 0; e <= maxdeg; ++e) {
            Rational v = rat[m][e] * Rational(lcm);
            v.canonicalize();
            num[e] = v.get_num();
        }
        out.add(t.parts[m], QPoly(std::move(num)));
    }
    out.normalize();
    return out;
}

SymFunc evaluate(const BasisExpansion& e, int k) {
    SymFunc f(k, e.degree);
    for (const auto& [l, c] : e.coeffs)
        f += eval_basis(e.basis, l, k) * c;
    if (e.denominator == 1)
        return f;
    SymFunc out(k, e.degree);
    for (const auto& [x, c] : f.terms()) {
        auto q = c.divide_exact(e.denominator);
        if (!q)
            fail(ErrorKind::InexactDivision, "expansion does not evaluate to an integral polynomial");
        out.add_term(x, *q);
    }
    return out;
}

BasisExpansion ribbon_expansion(const Composition& alpha) {
    BasisExpansion r;
    r.basis = Basis::h;
    r.degree = alpha.size();
    for (const auto& beta : coarsenings(alpha)) {
        long sign = (alpha.length() - beta.length()) % 2 == 0 ? 1 : -1;
        r.add(sorted_partition(beta.parts()), QPoly(sign));
    }
    return r;
}

SymFunc ribbon(const Composition& alpha, int k) { return evaluate(ribbon_expansion(alpha), k); }

BasisExpansion plethystic_q_substitute(const BasisExpansion& e) {
    if (e.basis != Basis::p)
        fail(ErrorKind::PreconditionViolated, "plethystic substitution is defined on the power-sum basis");
    BasisExpansion out = e;
    for (auto& [l, c] : out.coeffs)
        for (int part : l)
            c *= QPoly::q_power(part) - QPoly(1);
    out.normalize();
    return out;
}

BasisExpansion divide_qpoly(const BasisExpansion& e, const QPoly& d) {
    BasisExpansion out = e;
    for (auto& [l, c] : out.coeffs) {
        auto q = c.divide_exact(d);
        if (!q)
            fail(ErrorKind::InexactDivision, "coefficient of " + partition_string(l) + " is not divisible by " + d.str());
        c = *q;
    }
    out.normalize();
    return out;
}

std::string to_text(const BasisExpansion& e) {
    std::string s;
    for (auto it = e.coeffs.rbegin(); it != e.coeffs.rend(); ++it) {
        if (!s.empty())
            s += " + ";
        s += "(" + it->second.str() + ")" + basis_char(e.basis) + partition_string(it->first);
    }
    if (s.empty())
        s = "0";
    if (e.denominator != 1)
        s = "(" + s + ")/" + e.denominator.get_str();
    return s;
}

} // namespace sllt
