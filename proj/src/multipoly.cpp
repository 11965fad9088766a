#include "workbench/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "workbench/errors.hpp"

namespace workbench {

int var_index(char v) {
  if (v < 'a' || v > 'd') throw Error(std::string("unknown variable: ") + v);
  return v - 'a';
}

char var_name(int idx) {
  if (idx < 0 || idx >= kMaxVars) throw Error("variable index out of range");
  return static_cast<char>('a' + idx);
}

bool GrlexGreater::operator()(const Exponents& x, const Exponents& y) const {
  int dx = 0, dy = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    dx += x[i];
    dy += y[i];
  }
  if (dx != dy) return dx > dy;
  for (int i = 0; i < kMaxVars; ++i)
    if (x[i] != y[i]) return x[i] > y[i];
  return false;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) terms_[{0, 0, 0, 0}] = c;
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly MultiPoly::variable(int var) {
  if (var < 0 || var >= kMaxVars) throw Error("variable index out of range");
  MultiPoly p;
  Exponents e{0, 0, 0, 0};
  e[var] = 1;
  p.terms_[e] = 1;
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0};
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw Error("constant_value on nonconstant polynomial");
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponents& e = terms_.begin()->first;  // leading term has max degree
  return e[0] + e[1] + e[2] + e[3];
}

int MultiPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::vector<int> MultiPoly::variables() const {
  std::vector<int> out;
  for (int v = 0; v < kMaxVars; ++v)
    if (degree_in(v) > 0) out.push_back(v);
  return out;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

MultiPoly MultiPoly::coefficient_of(int var, int power) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[var] != power) continue;
    Exponents r = e;
    r[var] = 0;
    out.terms_[r] = c;
  }
  return out;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly out = *this;
  out += o;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly out = *this;
  out -= o;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]};
      out.add_term(e, c1 * c2);
    }
  return out;
}

MultiPoly MultiPoly::operator*(const Rational& s) const {
  MultiPoly out;
  if (s == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_[e] = c * s;
  return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) { return p * s; }

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw Error("negative exponent");
  MultiPoly out{Rational(1)};
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

MultiPoly MultiPoly::derivative(int var) const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents r = e;
    r[var] -= 1;
    out.add_term(r, c * e[var]);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::array<Rational, kMaxVars>& point) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < kMaxVars; ++v)
      for (int i = 0; i < e[v]; ++i) t *= point[v];
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(int var, const MultiPoly& value) const {
  int d = degree_in(var);
  // Horner evaluation in var.
  MultiPoly out = coefficient_of(var, d);
  for (int i = d - 1; i >= 0; --i) out = out * value + coefficient_of(var, i);
  return out;
}

MultiPoly MultiPoly::substitute_cleared(int var, const MultiPoly& num,
                                        const MultiPoly& den) const {
  int d = degree_in(var);
  if (d == 0) return *this;
  MultiPoly out = coefficient_of(var, d);
  for (int i = d - 1; i >= 0; --i)
    out = out * num + coefficient_of(var, i) * den.pow(d - i);
  return out;
}

MultiPoly MultiPoly::rename(int var_from, int var_to) const {
  if (var_from == var_to) return *this;
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    Exponents r = e;
    std::swap(r[var_from], r[var_to]);
    out.add_term(r, c);
  }
  return out;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) throw ZeroPolynomialError("content of zero polynomial");
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (content < 0) content = -content;
  return content;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (leading_coefficient() < 0) c = -c;
  MultiPoly out;
  for (const auto& [e, q] : terms_) out.terms_[e] = q / c;
  return out;
}

// --- printing / parsing ------------------------------------------------------

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational abs_c = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) out += "-";
      first = false;
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (int v = 0; v < kMaxVars; ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(v);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += to_string(abs_c);
    } else if (abs_c == 1) {
      out += mono;
    } else {
      out += to_string(abs_c) + "*" + mono;
    }
  }
  return out;
}

namespace {

struct Scanner {
  const std::string& s;
  size_t i = 0;
  explicit Scanner(const std::string& text) : s(text) {}
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
};

Rational scan_rational(Scanner& sc) {
  sc.skip_ws();
  std::string digits;
  while (sc.i < sc.s.size() &&
         std::isdigit(static_cast<unsigned char>(sc.s[sc.i])))
    digits += sc.s[sc.i++];
  if (digits.empty()) throw Error("expected number in polynomial literal");
  if (sc.peek() == '/') {
    sc.take();
    std::string den;
    sc.skip_ws();
    while (sc.i < sc.s.size() &&
           std::isdigit(static_cast<unsigned char>(sc.s[sc.i])))
      den += sc.s[sc.i++];
    if (den.empty()) throw Error("expected denominator in polynomial literal");
    digits += "/" + den;
  }
  return rational_from_string(digits);
}

}  // namespace

MultiPoly MultiPoly::from_string(const std::string& text) {
  Scanner sc(text);
  MultiPoly out;
  bool any = false;
  while (!sc.done()) {
    int sign = 1;
    while (sc.peek() == '+' || sc.peek() == '-') {
      if (sc.take() == '-') sign = -sign;
    }
    if (sc.done()) throw Error("dangling sign in polynomial literal: " + text);
    Rational coeff(sign);
    Exponents e{0, 0, 0, 0};
    bool expects_factor = true;
    while (expects_factor) {
      char c = sc.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= scan_rational(sc);
      } else if (c >= 'a' && c <= 'd') {
        sc.take();
        int exp = 1;
        if (sc.peek() == '^') {
          sc.take();
          Rational r = scan_rational(sc);
          if (r.get_den() != 1 || r < 0) throw Error("bad exponent in: " + text);
          exp = static_cast<int>(r.get_num().get_si());
        }
        e[var_index(c)] += exp;
      } else {
        throw Error("unexpected character in polynomial literal: " + text);
      }
      if (sc.peek() == '*') {
        sc.take();
      } else {
        expects_factor = false;
      }
    }
    out.add_term(e, coeff);
    any = true;
    char nxt = sc.peek();
    if (nxt != '\0' && nxt != '+' && nxt != '-')
      throw Error("expected + or - in polynomial literal: " + text);
  }
  if (!any && !text.empty()) {
    // Accept the canonical "0".
    std::string trimmed;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed != "0") throw Error("empty polynomial literal");
  }
  return out;
}

// --- division / gcd ----------------------------------------------------------

bool divides(const MultiPoly& g, const MultiPoly& f, MultiPoly* quotient) {
  if (g.is_zero()) {
    if (!f.is_zero()) return false;
    if (quotient) *quotient = MultiPoly();
    return true;
  }
  MultiPoly q, r = f;
  const Exponents& lg = g.terms().begin()->first;
  const Rational lgc = g.leading_coefficient();
  while (!r.is_zero()) {
    const Exponents& lr = r.terms().begin()->first;
    Exponents d;
    for (int v = 0; v < kMaxVars; ++v) {
      d[v] = lr[v] - lg[v];
      // If g divides f, the leading term of each intermediate remainder is
      // divisible by the leading term of g (the monomial order is
      // multiplicative), so a failure here settles the question.
      if (d[v] < 0) return false;
    }
    MultiPoly t;
    t.add_term(d, r.leading_coefficient() / lgc);
    q += t;
    r -= t * g;
  }
  if (quotient) *quotient = q;
  return true;
}

MultiPoly divide_exact(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly q;
  if (!divides(g, f, &q)) throw Error("divide_exact: not divisible");
  return q;
}

namespace {

std::vector<MultiPoly> univariate_coeffs(const MultiPoly& p, int var) {
  std::vector<MultiPoly> coeffs(p.degree_in(var) + 1);
  for (size_t i = 0; i < coeffs.size(); ++i)
    coeffs[i] = p.coefficient_of(var, static_cast<int>(i));
  return coeffs;
}

int main_variable(const MultiPoly& f, const MultiPoly& g) {
  for (int v = kMaxVars - 1; v >= 0; --v)
    if (f.uses(v) || g.uses(v)) return v;
  return -1;
}

// Content of p viewed as a univariate polynomial in var, i.e. the gcd of its
// coefficient polynomials.
MultiPoly content_in(const MultiPoly& p, int var) {
  MultiPoly c;
  for (const MultiPoly& q : univariate_coeffs(p, var)) {
    if (q.is_zero()) continue;
    c = poly_gcd(c, q);
    if (c.is_constant()) break;
  }
  return c;
}

// Pseudo-remainder of f by g in var: repeatedly scales by lc(g) and subtracts,
// so no fractions appear. Requires deg_var(g) >= 1.
MultiPoly pseudo_remainder(const MultiPoly& f, const MultiPoly& g, int var) {
  const int dg = g.degree_in(var);
  const MultiPoly lg = g.coefficient_of(var, dg);
  MultiPoly r = f;
  while (!r.is_zero() && r.degree_in(var) >= dg) {
    const int dr = r.degree_in(var);
    const MultiPoly lr = r.coefficient_of(var, dr);
    MultiPoly shift = MultiPoly::variable(var).pow(dr - dg);
    r = r * lg - g * (lr * shift);
  }
  return r;
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero()) return g.is_zero() ? g : g.normalized();
  if (g.is_zero()) return f.normalized();
  int v = main_variable(f, g);
  if (v < 0) return MultiPoly{Rational(1)};  // two nonzero constants
  if (!f.uses(v)) return poly_gcd(f, content_in(g, v));
  if (!g.uses(v)) return poly_gcd(content_in(f, v), g);

  const MultiPoly cf = content_in(f, v);
  const MultiPoly cg = content_in(g, v);
  MultiPoly fp = divide_exact(f, cf);
  MultiPoly gp = divide_exact(g, cg);
  const MultiPoly c = poly_gcd(cf, cg);

  if (fp.degree_in(v) < gp.degree_in(v)) std::swap(fp, gp);
  MultiPoly result_pp;
  while (true) {
    if (gp.is_zero()) {
      result_pp = divide_exact(fp, content_in(fp, v));
      break;
    }
    if (gp.degree_in(v) == 0) {
      // Both primitive in v and one is v-free: their gcd is v-free and
      // divides a content of 1.
      result_pp = MultiPoly{Rational(1)};
      break;
    }
    MultiPoly r = pseudo_remainder(fp, gp, v);
    fp = gp;
    gp = r.is_zero() ? r : divide_exact(r, content_in(r, v));
  }
  return (c * result_pp).normalized();
}

bool is_square_over_C(const MultiPoly& p) {
  if (p.is_zero() || p.is_constant()) return true;
  int v = kMaxVars - 1;
  while (!p.uses(v)) --v;
  const MultiPoly cont = content_in(p, v);
  const MultiPoly pp = divide_exact(p, cont);
  if (!is_square_over_C(cont)) return false;

  // Yun squarefree decomposition of pp in v; pp is a square over C iff every
  // odd-multiplicity part is trivial. pp is primitive in v, so a
  // multiplicity part with no v cannot occur except as a rational unit.
  const MultiPoly g = poly_gcd(pp, pp.derivative(v));
  if (g.is_constant()) return pp.degree_in(v) == 0;
  MultiPoly ci = divide_exact(pp, g);
  MultiPoly di = divide_exact(pp.derivative(v), g) - ci.derivative(v);
  int i = 1;
  while (!ci.is_constant()) {
    MultiPoly ai = poly_gcd(ci, di);
    if (i % 2 == 1 && !ai.is_constant()) return false;
    ci = divide_exact(ci, ai);
    di = divide_exact(di, ai) - ci.derivative(v);
    ++i;
  }
  return true;
}

}  // namespace workbench
