#include "workbench/unipoly.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "workbench/errors.hpp"

namespace workbench {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) {
    UniPoly p;
    if (c != 0) {
        p.c_.push_back(c);
    }
    return p;
}

UniPoly UniPoly::x() {
    UniPoly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

UniPoly UniPoly::from_multi(const MultiPoly& p, int var) {
    UniPoly out;
    for (const auto& [e, coeff] : p.terms()) {
        for (int v = 0; v < kMaxVars; ++v) {
            if (v != var && e[static_cast<std::size_t>(v)] != 0) {
                throw Error("polynomial is not univariate in the requested variable");
            }
        }
        int d = e[static_cast<std::size_t>(var)];
        if (static_cast<int>(out.c_.size()) <= d) {
            out.c_.resize(static_cast<std::size_t>(d) + 1, Rational(0));
        }
        out.c_[static_cast<std::size_t>(d)] = coeff;
    }
    out.trim();
    return out;
}

MultiPoly UniPoly::to_multi(int var) const {
    MultiPoly out;
    Exponents e{0, 0, 0, 0};
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        e[static_cast<std::size_t>(var)] = static_cast<int>(i);
        out.add_term(e, c_[i]);
    }
    return out;
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) {
        return Rational(0);
    }
    return c_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const {
    if (c_.empty()) {
        return Rational(0);
    }
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly out(*this);
    for (auto& c : out.c_) {
        c = -c;
    }
    return out;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    UniPoly out;
    out.c_.resize(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        out.c_[i] += c_[i];
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        out.c_[i] += o.c_[i];
    }
    out.trim();
    return out;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) {
        return UniPoly();
    }
    UniPoly out;
    out.c_.assign(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            out.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    out.trim();
    return out;
}

UniPoly UniPoly::operator*(const Rational& s) const {
    if (s == 0) {
        return UniPoly();
    }
    UniPoly out(*this);
    for (auto& c : out.c_) {
        c *= s;
    }
    return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& g) const {
    if (g.is_zero()) {
        throw ZeroPolynomialError("division by the zero polynomial");
    }
    UniPoly q;
    UniPoly r(*this);
    int dg = g.degree();
    if (r.degree() >= dg) {
        q.c_.assign(static_cast<std::size_t>(r.degree() - dg) + 1, Rational(0));
    }
    while (!r.is_zero() && r.degree() >= dg) {
        int shift = r.degree() - dg;
        Rational factor = r.leading() / g.leading();
        q.c_[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= dg; ++i) {
            r.c_[static_cast<std::size_t>(i + shift)] -= factor * g.c_[static_cast<std::size_t>(i)];
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::derivative() const {
    UniPoly out;
    if (c_.size() <= 1) {
        return out;
    }
    out.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        out.c_[i - 1] = c_[i] * Rational(static_cast<long>(i));
    }
    out.trim();
    return out;
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = acc * x + c_[i];
    }
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) {
        return *this;
    }
    return *this * (Rational(1) / leading());
}

UniPoly UniPoly::normalized() const {
    if (is_zero()) {
        return *this;
    }
    Integer den_lcm(1);
    for (const auto& c : c_) {
        if (c != 0) {
            Integer d = c.get_den();
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        }
    }
    Integer num_gcd(0);
    for (const auto& c : c_) {
        if (c != 0) {
            Integer n = c.get_num() * (den_lcm / c.get_den());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
    }
    Rational scale(den_lcm);
    scale /= Rational(num_gcd);
    UniPoly out = *this * scale;
    if (out.leading() < 0) {
        out = -out;
    }
    return out;
}

std::string UniPoly::str(char var) const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c == 0) {
            continue;
        }
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) {
                os << "-";
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = abs_c == 1;
        if (i == 0 || !unit) {
            os << to_string(abs_c);
        }
        if (i > 0) {
            if (!unit) {
                os << "*";
            }
            os << var;
            if (i > 1) {
                os << "^" << i;
            }
        }
    }
    return os.str();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

UniPoly uni_gcd(const UniPoly& f, const UniPoly& g) {
    UniPoly a = f;
    UniPoly b = g;
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) {
        return a;
    }
    return a.normalized();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
    if (f.is_zero()) {
        throw ZeroPolynomialError("squarefree decomposition of the zero polynomial");
    }
    std::vector<std::pair<UniPoly, int>> out;
    if (f.degree() == 0) {
        return out;
    }
    UniPoly fp = f.derivative();
    UniPoly a0 = uni_gcd(f, fp);
    UniPoly b = f.divmod(a0).first;
    UniPoly c = fp.divmod(a0).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly ai = uni_gcd(b, d);
        if (ai.degree() > 0) {
            out.emplace_back(ai.normalized(), i);
        }
        if (ai.is_zero()) {
            throw Error("squarefree decomposition lost the input polynomial");
        }
        b = b.divmod(ai).first;
        c = d.divmod(ai).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

UniPoly squarefree_part(const UniPoly& f) {
    auto parts = squarefree_decomposition(f);
    UniPoly out = UniPoly::constant(Rational(1));
    for (const auto& [p, mult] : parts) {
        out = out * p;
    }
    return out.normalized();
}

bool is_perfect_square(const UniPoly& f) {
    auto parts = squarefree_decomposition(f);
    for (const auto& [p, mult] : parts) {
        if (mult % 2 != 0) {
            return false;
        }
    }
    return true;
}

namespace {

// Positive rescaling to primitive integer coefficients; keeps every sign.
UniPoly positive_primitive(const UniPoly& p) {
    if (p.is_zero()) {
        return p;
    }
    UniPoly n = p.normalized();
    return p.leading() < 0 ? -n : n;
}

std::vector<UniPoly> sturm_chain(const UniPoly& f) {
    std::vector<UniPoly> chain;
    chain.push_back(positive_primitive(f));
    UniPoly d = f.derivative();
    if (d.is_zero()) {
        return chain;
    }
    chain.push_back(positive_primitive(d));
    for (;;) {
        const UniPoly& prev = chain[chain.size() - 2];
        const UniPoly& last = chain[chain.size() - 1];
        UniPoly r = prev.divmod(last).second;
        if (r.is_zero()) {
            break;
        }
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) {
            continue;
        }
        if (prev != 0 && s != prev) {
            ++count;
        }
        prev = s;
    }
    return count;
}

int sign_of(const Rational& x) {
    if (x > 0) {
        return 1;
    }
    if (x < 0) {
        return -1;
    }
    return 0;
}

void require_squarefree(const UniPoly& f) {
    if (f.is_zero() || f.degree() < 1) {
        throw NotSquarefreeError("real root counting requires a nonconstant polynomial");
    }
    if (uni_gcd(f, f.derivative()).degree() > 0) {
        throw NotSquarefreeError("real root counting requires a squarefree polynomial");
    }
}

}  // namespace

int sturm_real_roots(const UniPoly& f) {
    require_squarefree(f);
    auto chain = sturm_chain(f);
    std::vector<int> at_minus;
    std::vector<int> at_plus;
    for (const auto& p : chain) {
        int lead = sign_of(p.leading());
        at_plus.push_back(lead);
        at_minus.push_back(p.degree() % 2 == 0 ? lead : -lead);
    }
    return variations(at_minus) - variations(at_plus);
}

int sturm_real_roots_between(const UniPoly& f, const Rational& lo, const Rational& hi) {
    require_squarefree(f);
    if (lo >= hi) {
        return 0;
    }
    auto chain = sturm_chain(f);
    std::vector<int> at_lo;
    std::vector<int> at_hi;
    for (const auto& p : chain) {
        at_lo.push_back(sign_of(p.evaluate(lo)));
        at_hi.push_back(sign_of(p.evaluate(hi)));
    }
    return variations(at_lo) - variations(at_hi);
}

namespace {

Integer pollard_rho(const Integer& n) {
    for (long c = 1;; ++c) {
        Integer x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Integer diff = x > y ? x - y : y - x;
            if (diff == 0) {
                break;
            }
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) {
            return d;
        }
    }
}

void factor_integer(Integer n, std::map<Integer, int>& out) {
    while (n % 2 == 0) {
        ++out[Integer(2)];
        n /= 2;
    }
    for (long d = 3; d <= 10000 && Integer(d) * d <= n; d += 2) {
        while (n % d == 0) {
            ++out[Integer(d)];
            n /= d;
        }
    }
    if (n == 1) {
        return;
    }
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_integer(d, out);
    factor_integer(n / d, out);
}

std::vector<Integer> divisors_of(const Integer& n) {
    std::map<Integer, int> primes;
    factor_integer(n < 0 ? Integer(-n) : n, primes);
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, e] : primes) {
        std::size_t base = out.size();
        Integer power(1);
        for (int i = 1; i <= e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * power);
            }
        }
    }
    return out;
}

// Distinct rational roots of f (any multiplicities, constants have none).
std::vector<Rational> rational_roots(const UniPoly& f) {
    if (f.is_zero()) {
        throw ZeroPolynomialError("rational roots of the zero polynomial");
    }
    std::vector<Rational> out;
    UniPoly g = f;
    bool zero_root = false;
    while (g.degree() >= 1 && g.coeff(0) == 0) {
        zero_root = true;
        g = g.divmod(UniPoly::x()).first;
    }
    if (zero_root) {
        out.push_back(Rational(0));
    }
    if (g.degree() < 1) {
        return out;
    }
    g = g.normalized();
    Integer a0 = g.coeff(0).get_num();
    Integer an = g.leading().get_num();
    auto ps = divisors_of(a0);
    auto qs = divisors_of(an);
    for (const Integer& p : ps) {
        for (const Integer& q : qs) {
            Integer common;
            mpz_gcd(common.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
            if (common != 1) {
                continue;
            }
            Rational r(p, q);
            r.canonicalize();
            if (g.evaluate(r) == 0) {
                out.push_back(r);
            }
            Rational neg = -r;
            if (g.evaluate(neg) == 0) {
                out.push_back(neg);
            }
        }
    }
    return out;
}

// Candidate generation for the factor searches: eliminate variable elim from
// the system, keeping every polynomial consequence that survives. Resultants
// that collapse to zero are retried once against the gcd and the cofactors.
std::vector<MultiPoly> eliminate_variable(const std::vector<MultiPoly>& polys, int elim) {
    std::vector<MultiPoly> out;
    std::vector<MultiPoly> active;
    for (const auto& p : polys) {
        if (p.is_zero()) {
            continue;
        }
        if (p.degree_in(elim) == 0) {
            out.push_back(p);
        } else {
            active.push_back(p);
        }
    }
    auto consume = [&](const MultiPoly& p, const MultiPoly& q) {
        if (p.is_zero() || q.is_zero()) {
            return;
        }
        if (p.degree_in(elim) == 0) {
            out.push_back(p);
            return;
        }
        if (q.degree_in(elim) == 0) {
            out.push_back(q);
            return;
        }
        MultiPoly r = resultant(p, q, elim);
        if (!r.is_zero()) {
            out.push_back(r);
        }
    };
    for (std::size_t i = 0; i < active.size(); ++i) {
        for (std::size_t j = i + 1; j < active.size(); ++j) {
            MultiPoly r = resultant(active[i], active[j], elim);
            if (!r.is_zero()) {
                out.push_back(r);
                continue;
            }
            // Shared component: split it off and keep eliminating.
            MultiPoly g = poly_gcd(active[i], active[j]);
            for (std::size_t k = 0; k < active.size(); ++k) {
                if (k != i && k != j) {
                    consume(g, active[k]);
                }
            }
            consume(divide_exact(active[i], g), divide_exact(active[j], g));
        }
    }
    return out;
}

std::vector<Rational> roots_in_single_variable(const std::vector<MultiPoly>& polys, int var) {
    std::vector<Rational> out;
    for (const auto& p : polys) {
        if (p.is_zero() || p.degree_in(var) == 0) {
            continue;
        }
        for (const auto& r : rational_roots(UniPoly::from_multi(p, var))) {
            if (std::find(out.begin(), out.end(), r) == out.end()) {
                out.push_back(r);
            }
        }
    }
    return out;
}

// Remainder coefficients of f modulo the monic quadratic x^2 + u*x + v with
// u, v carried symbolically in variables 0 and 1: f === A*x + B.
void quadratic_remainder(const UniPoly& f, MultiPoly* A, MultiPoly* B) {
    MultiPoly u = MultiPoly::variable(0);
    MultiPoly v = MultiPoly::variable(1);
    std::vector<MultiPoly> alpha(static_cast<std::size_t>(f.degree()) + 1);
    std::vector<MultiPoly> beta(alpha.size());
    alpha[0] = MultiPoly();
    beta[0] = MultiPoly(1);
    if (f.degree() >= 1) {
        alpha[1] = MultiPoly(1);
        beta[1] = MultiPoly();
    }
    for (std::size_t k = 2; k < alpha.size(); ++k) {
        alpha[k] = beta[k - 1] - u * alpha[k - 1];
        beta[k] = -(v * alpha[k - 1]);
    }
    *A = MultiPoly();
    *B = MultiPoly();
    for (int k = 0; k <= f.degree(); ++k) {
        Rational c = f.coeff(k);
        if (c == 0) {
            continue;
        }
        *A += alpha[static_cast<std::size_t>(k)] * c;
        *B += beta[static_cast<std::size_t>(k)] * c;
    }
}

// Remainder coefficients of f modulo the monic cubic x^3 + u*x^2 + v*x + w
// with u, v, w in variables 0, 1, 2: f === A*x^2 + B*x + C.
void cubic_remainder(const UniPoly& f, MultiPoly* A, MultiPoly* B, MultiPoly* C) {
    MultiPoly u = MultiPoly::variable(0);
    MultiPoly v = MultiPoly::variable(1);
    MultiPoly w = MultiPoly::variable(2);
    std::size_t n = static_cast<std::size_t>(f.degree()) + 1;
    std::vector<MultiPoly> alpha(n), beta(n), gamma(n);
    gamma[0] = MultiPoly(1);
    if (n > 1) {
        beta[1] = MultiPoly(1);
    }
    if (n > 2) {
        alpha[2] = MultiPoly(1);
    }
    for (std::size_t k = 3; k < n; ++k) {
        alpha[k] = beta[k - 1] - u * alpha[k - 1];
        beta[k] = gamma[k - 1] - v * alpha[k - 1];
        gamma[k] = -(w * alpha[k - 1]);
    }
    *A = MultiPoly();
    *B = MultiPoly();
    *C = MultiPoly();
    for (int k = 0; k <= f.degree(); ++k) {
        Rational c = f.coeff(k);
        if (c == 0) {
            continue;
        }
        *A += alpha[static_cast<std::size_t>(k)] * c;
        *B += beta[static_cast<std::size_t>(k)] * c;
        *C += gamma[static_cast<std::size_t>(k)] * c;
    }
}

std::optional<UniPoly> find_quadratic_factor(const UniPoly& f) {
    MultiPoly A, B;
    quadratic_remainder(f, &A, &B);
    if (A.is_zero() || B.is_zero()) {
        throw Error("quadratic factor search degenerated");
    }
    auto pool = eliminate_variable({A, B}, 1);
    for (const Rational& u : roots_in_single_variable(pool, 0)) {
        MultiPoly Au = A.substitute(0, MultiPoly(u));
        MultiPoly Bu = B.substitute(0, MultiPoly(u));
        if (Au.is_zero() && Bu.is_zero()) {
            throw Error("quadratic factor search degenerated");
        }
        UniPoly g;
        if (Au.is_zero()) {
            g = UniPoly::from_multi(Bu, 1);
        } else if (Bu.is_zero()) {
            g = UniPoly::from_multi(Au, 1);
        } else {
            g = uni_gcd(UniPoly::from_multi(Au, 1), UniPoly::from_multi(Bu, 1));
        }
        if (g.degree() < 1) {
            continue;
        }
        for (const Rational& v : rational_roots(g)) {
            UniPoly candidate({v, u, Rational(1)});
            if (f.divmod(candidate).second.is_zero()) {
                return candidate;
            }
        }
    }
    return std::nullopt;
}

std::optional<UniPoly> find_cubic_factor(const UniPoly& f) {
    MultiPoly A, B, C;
    cubic_remainder(f, &A, &B, &C);
    std::vector<MultiPoly> system{A, B, C};
    auto uv_pool = eliminate_variable(system, 2);
    auto u_pool = eliminate_variable(uv_pool, 1);
    for (const Rational& u : roots_in_single_variable(u_pool, 0)) {
        std::vector<MultiPoly> at_u;
        for (const auto& p : system) {
            MultiPoly s = p.substitute(0, MultiPoly(u));
            if (!s.is_zero()) {
                at_u.push_back(s);
            }
        }
        if (at_u.empty()) {
            throw Error("cubic factor search degenerated");
        }
        auto v_pool = eliminate_variable(at_u, 2);
        for (const Rational& v : roots_in_single_variable(v_pool, 1)) {
            UniPoly g;
            bool any = false;
            for (const auto& p : at_u) {
                MultiPoly s = p.substitute(1, MultiPoly(v));
                if (s.is_zero()) {
                    continue;
                }
                UniPoly pw = UniPoly::from_multi(s, 2);
                g = any ? uni_gcd(g, pw) : pw;
                any = true;
            }
            if (!any) {
                throw Error("cubic factor search degenerated");
            }
            if (g.degree() < 1) {
                continue;
            }
            for (const Rational& w : rational_roots(g)) {
                UniPoly candidate({w, v, u, Rational(1)});
                if (f.divmod(candidate).second.is_zero()) {
                    return candidate;
                }
            }
        }
    }
    return std::nullopt;
}

// Factors a squarefree nonconstant polynomial of degree <= 6 into irreducible
// normalized factors.
std::vector<UniPoly> factor_squarefree(UniPoly f) {
    std::vector<UniPoly> out;
    if (f.degree() >= 1 && f.coeff(0) == 0) {
        out.push_back(UniPoly::x());
        f = f.divmod(UniPoly::x()).first;
    }
    if (f.degree() >= 1) {
        for (const Rational& r : rational_roots(f)) {
            UniPoly linear({-r, Rational(1)});
            out.push_back(linear.normalized());
            f = f.divmod(linear).first;
        }
    }
    while (f.degree() >= 4) {
        if (auto q = find_quadratic_factor(f)) {
            out.push_back(q->normalized());
            f = f.divmod(*q).first;
            continue;
        }
        if (f.degree() == 6) {
            if (auto c = find_cubic_factor(f)) {
                out.push_back(c->normalized());
                f = f.divmod(*c).first;
                continue;
            }
        }
        break;
    }
    if (f.degree() >= 1) {
        out.push_back(f.normalized());
    }
    return out;
}

}  // namespace

Factorization factor_small(const UniPoly& f) {
    if (f.is_zero()) {
        throw ZeroPolynomialError("factorization of the zero polynomial");
    }
    if (f.degree() > 6) {
        throw DegreeTooHighError("complete factorization is limited to degree 6");
    }
    Factorization out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& irreducible : factor_squarefree(part)) {
            out.factors.emplace_back(irreducible, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const std::pair<UniPoly, int>& x, const std::pair<UniPoly, int>& y) {
                  if (x.first.degree() != y.first.degree()) {
                      return x.first.degree() < y.first.degree();
                  }
                  std::string xs = x.first.str('x');
                  std::string ys = y.first.str('x');
                  if (xs != ys) {
                      return xs < ys;
                  }
                  return x.second < y.second;
              });
    return out;
}

}  // namespace workbench
