#include "tka/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "tka/error.hpp"

namespace tka {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw DomainError("exponent overflow");
  return r;
}

bool exps_less(const Exponent* a, const Exponent* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool exps_equal(const Exponent* a, const Exponent* b, std::size_t n) {
  return std::equal(a, a + n, b);
}

Rational pow_rational(const Rational& base, Exponent e) {
  if (e == 0) return Rational(1);
  Integer num = base.get_num();
  Integer den = base.get_den();
  if (e < 0) {
    std::swap(num, den);
    e = -e;
  }
  Integer pn, pd;
  mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(e));
  Rational r(pn, pd);
  r.canonicalize();
  return r;
}

}  // namespace

// ---------------------------------------------------------------- UnitMonomial

UnitMonomial::UnitMonomial(int sign, std::vector<Exponent> exps)
    : sign_(sign < 0 ? -1 : 1), exps_(std::move(exps)) {}

UnitMonomial UnitMonomial::one(std::size_t nvars) {
  return UnitMonomial(1, std::vector<Exponent>(nvars, 0));
}

bool UnitMonomial::is_one() const noexcept {
  return sign_ == 1 && std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

UnitMonomial UnitMonomial::operator*(const UnitMonomial& other) const {
  if (exps_.size() != other.exps_.size()) throw ContextMismatch("unit monomials from different rings");
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(exps_[i], other.exps_[i]);
  return UnitMonomial(sign_ * other.sign_, std::move(e));
}

UnitMonomial UnitMonomial::inverse() const {
  std::vector<Exponent> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = -exps_[i];
  return UnitMonomial(sign_, std::move(e));
}

// ----------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(int genus) : genus_(genus) {
  if (genus < 0) throw DomainError("negative genus");
}

LaurentPoly LaurentPoly::constant(int genus, const Integer& c) {
  LaurentPoly p(genus);
  if (c != 0) {
    p.exps_.assign(p.nvars(), 0);
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::monomial(int genus, const Integer& c, std::span<const Exponent> exps) {
  LaurentPoly p(genus);
  if (exps.size() != p.nvars()) throw ContextMismatch("exponent vector has wrong length");
  if (c != 0) {
    p.exps_.assign(exps.begin(), exps.end());
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_unit(int genus, const UnitMonomial& u) {
  return monomial(genus, Integer(u.sign()), u.exps());
}

LaurentPoly LaurentPoly::variable(int genus, std::size_t var) {
  LaurentPoly p(genus);
  if (var >= p.nvars()) throw DomainError("variable index out of range for genus");
  std::vector<Exponent> e(p.nvars(), 0);
  e[var] = 1;
  return monomial(genus, Integer(1), e);
}

LaurentPoly LaurentPoly::from_terms(int genus, std::vector<Exponent> flat, std::vector<Integer> coeffs) {
  LaurentPoly p(genus);
  const std::size_t n = p.nvars();
  if (flat.size() != coeffs.size() * n) throw ContextMismatch("term data has wrong shape");
  std::vector<std::size_t> order(coeffs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return exps_less(flat.data() + a * n, flat.data() + b * n, n);
  });
  p.exps_.reserve(flat.size());
  p.coeffs_.reserve(coeffs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    const Exponent* e = flat.data() + order[i] * n;
    Integer sum = std::move(coeffs[order[i]]);
    std::size_t j = i + 1;
    while (j < order.size() && exps_equal(e, flat.data() + order[j] * n, n)) {
      sum += coeffs[order[j]];
      ++j;
    }
    if (sum != 0) {
      p.exps_.insert(p.exps_.end(), e, e + n);
      p.coeffs_.push_back(std::move(sum));
    }
    i = j;
  }
  return p;
}

bool LaurentPoly::is_constant() const noexcept {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() != 1) return false;
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool LaurentPoly::is_one() const noexcept { return is_constant() && !is_zero() && coeffs_[0] == 1; }

const Integer& LaurentPoly::leading_coeff() const {
  if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

std::span<const Exponent> LaurentPoly::leading_exponents() const {
  if (is_zero()) throw DomainError("leading exponents of zero polynomial");
  return exponents(size() - 1);
}

Integer LaurentPoly::coeff_of(std::span<const Exponent> exps) const {
  const std::size_t n = nvars();
  if (exps.size() != n) throw ContextMismatch("exponent vector has wrong length");
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (exps_less(exps_.data() + mid * n, exps.data(), n)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && exps_equal(exps_.data() + lo * n, exps.data(), n)) return coeffs_[lo];
  return Integer(0);
}

bool LaurentPoly::involves(std::size_t var) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (exponent(i, var) != 0) return true;
  }
  return false;
}

Exponent LaurentPoly::min_degree(std::size_t var) const {
  if (is_zero()) throw DomainError("degree of zero polynomial");
  Exponent m = exponent(0, var);
  for (std::size_t i = 1; i < size(); ++i) m = std::min(m, exponent(i, var));
  return m;
}

Exponent LaurentPoly::max_degree(std::size_t var) const {
  if (is_zero()) throw DomainError("degree of zero polynomial");
  Exponent m = exponent(0, var);
  for (std::size_t i = 1; i < size(); ++i) m = std::max(m, exponent(i, var));
  return m;
}

Exponent LaurentPoly::total_degree() const {
  if (is_zero()) throw DomainError("degree of zero polynomial");
  Exponent best = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    Exponent s = 0;
    for (std::size_t v = 0; v < nvars(); ++v) s = checked_add(s, exponent(i, v));
    if (i == 0 || s > best) best = s;
  }
  return best;
}

void LaurentPoly::check_context(const LaurentPoly& other) const {
  if (genus_ != other.genus_) {
    throw ContextMismatch("polynomials from rings of genus " + std::to_string(genus_) + " and " +
                          std::to_string(other.genus_));
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_context(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  const std::size_t n = nvars();
  std::vector<Exponent> e;
  std::vector<Integer> c;
  e.reserve(exps_.size() + other.exps_.size());
  c.reserve(size() + other.size());
  std::size_t i = 0, j = 0;
  auto push = [&](const Exponent* src, Integer v) {
    if (v == 0) return;
    e.insert(e.end(), src, src + n);
    c.push_back(std::move(v));
  };
  while (i < size() || j < other.size()) {
    if (j == other.size() ||
        (i < size() && exps_less(exps_.data() + i * n, other.exps_.data() + j * n, n))) {
      push(exps_.data() + i * n, coeffs_[i]);
      ++i;
    } else if (i == size() || exps_less(other.exps_.data() + j * n, exps_.data() + i * n, n)) {
      push(other.exps_.data() + j * n, other.coeffs_[j]);
      ++j;
    } else {
      push(exps_.data() + i * n, coeffs_[i] + other.coeffs_[j]);
      ++i;
      ++j;
    }
  }
  exps_ = std::move(e);
  coeffs_ = std::move(c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  a.check_context(b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.genus_);
  const std::size_t n = a.nvars();
  if (b.size() == 1) {
    UnitMonomial shift(1, std::vector<Exponent>(b.exps_.begin(), b.exps_.end()));
    LaurentPoly r = a.times(shift);
    r *= b.coeffs_[0];
    return r;
  }
  if (a.size() == 1) return b * a;
  std::vector<Exponent> e(a.size() * b.size() * n);
  std::vector<Integer> c(a.size() * b.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j, ++k) {
      for (std::size_t v = 0; v < n; ++v) {
        e[k * n + v] = checked_add(a.exps_[i * n + v], b.exps_[j * n + v]);
      }
      mpz_mul(c[k].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return LaurentPoly::from_terms(a.genus_, std::move(e), std::move(c));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    exps_.clear();
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

LaurentPoly LaurentPoly::times(const UnitMonomial& u) const {
  if (u.nvars() != nvars()) throw ContextMismatch("unit from a different ring");
  LaurentPoly r = *this;
  const std::size_t n = nvars();
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t v = 0; v < n; ++v) r.exps_[i * n + v] = checked_add(r.exps_[i * n + v], u.exps()[v]);
  }
  if (u.sign() < 0) {
    for (auto& c : r.coeffs_) c = -c;
  }
  return r;  // a uniform shift preserves the lexicographic order
}

LaurentPoly LaurentPoly::divided_by(const Integer& c) const {
  if (c == 0) throw DomainError("division by zero");
  LaurentPoly r = *this;
  for (auto& x : r.coeffs_) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t())) throw DomainError("inexact integer division");
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.genus_ == b.genus_ && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
}

LaurentPoly LaurentPoly::with_genus(int genus) const {
  if (genus < genus_) throw ContextMismatch("cannot shrink the ring context");
  if (genus == genus_) return *this;
  LaurentPoly r(genus);
  const std::size_t n = nvars();
  const std::size_t m = r.nvars();
  r.exps_.assign(size() * m, 0);
  for (std::size_t i = 0; i < size(); ++i) {
    std::copy_n(exps_.data() + i * n, n, r.exps_.data() + i * m);
  }
  r.coeffs_ = coeffs_;
  // Appending zero coordinates preserves the lexicographic order.
  return r;
}

// ------------------------------------------------------------ free functions

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result = LaurentPoly::constant(p.genus(), Integer(1));
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly conj(const LaurentPoly& p) {
  std::vector<Exponent> e;
  std::vector<Integer> c;
  e.reserve(p.size() * p.nvars());
  c.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (Exponent x : p.exponents(i)) e.push_back(-x);
    c.push_back(p.coeff(i));
  }
  return LaurentPoly::from_terms(p.genus(), std::move(e), std::move(c));
}

Rational evaluate(const LaurentPoly& p, const Rational& t_val, std::span<const Rational> x_vals) {
  if (x_vals.size() + 1 != p.nvars()) {
    throw DomainError("expected " + std::to_string(p.nvars() - 1) + " x values, got " +
                      std::to_string(x_vals.size()));
  }
  std::vector<Rational> vals;
  vals.reserve(p.nvars());
  vals.push_back(t_val);
  vals.insert(vals.end(), x_vals.begin(), x_vals.end());
  Rational sum(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational term(p.coeff(i));
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      Exponent e = p.exponent(i, v);
      if (e == 0) continue;
      if (vals[v] == 0) {
        if (e < 0) throw DomainError("zero substituted for " + variable_name(v) + " with negative exponent");
        term = 0;
        break;
      }
      term *= pow_rational(vals[v], e);
    }
    sum += term;
  }
  return sum;
}

LaurentPoly specialize_x_to_one(const LaurentPoly& p) {
  std::vector<Exponent> e;
  std::vector<Integer> c;
  const std::size_t n = p.nvars();
  e.reserve(p.size() * n);
  for (std::size_t i = 0; i < p.size(); ++i) {
    e.push_back(p.exponent(i, 0));
    e.insert(e.end(), n - 1, 0);
    c.push_back(p.coeff(i));
  }
  return LaurentPoly::from_terms(p.genus(), std::move(e), std::move(c));
}

std::pair<LaurentPoly, UnitMonomial> normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("normalize_unit of zero");
  std::vector<Exponent> mins(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) mins[v] = p.min_degree(v);
  UnitMonomial u(p.leading_coeff() < 0 ? -1 : 1, mins);
  return {p.times(u.inverse()), u};
}

std::pair<Integer, LaurentPoly> content_and_primitive(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("content of zero");
  Integer g = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.coeff(i).get_mpz_t());
    if (g == 1) break;
  }
  return {g, g == 1 ? p : p.divided_by(g)};
}

namespace {

struct ExpsGreater {
  bool operator()(const std::vector<Exponent>& a, const std::vector<Exponent>& b) const {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

// Division of polynomials with nonnegative exponents in lex order.
std::optional<LaurentPoly> divide_polynomial(const LaurentPoly& a, const LaurentPoly& b) {
  const std::size_t n = a.nvars();
  for (std::size_t v = 0; v < n; ++v) {
    if (a.max_degree(v) < b.max_degree(v)) return std::nullopt;
  }
  std::map<std::vector<Exponent>, Integer, ExpsGreater> rem;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto e = a.exponents(i);
    rem.emplace(std::vector<Exponent>(e.begin(), e.end()), a.coeff(i));
  }
  const auto lb = b.leading_exponents();
  const Integer& lc = b.leading_coeff();
  std::vector<Exponent> q_exps;
  std::vector<Integer> q_coeffs;
  std::vector<Exponent> key(n);
  while (!rem.empty()) {
    auto it = rem.begin();
    const auto& le = it->first;
    std::vector<Exponent> qe(n);
    for (std::size_t v = 0; v < n; ++v) {
      qe[v] = le[v] - lb[v];
      if (qe[v] < 0) return std::nullopt;
    }
    if (!mpz_divisible_p(it->second.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
    Integer qc;
    mpz_divexact(qc.get_mpz_t(), it->second.get_mpz_t(), lc.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto be = b.exponents(j);
      for (std::size_t v = 0; v < n; ++v) key[v] = qe[v] + be[v];
      auto [slot, inserted] = rem.try_emplace(key, 0);
      slot->second -= qc * b.coeff(j);
      if (slot->second == 0) rem.erase(slot);
    }
    q_exps.insert(q_exps.end(), qe.begin(), qe.end());
    q_coeffs.push_back(std::move(qc));
  }
  return LaurentPoly::from_terms(a.genus(), std::move(q_exps), std::move(q_coeffs));
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.genus() != b.genus()) throw ContextMismatch("divide_exact across rings");
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly(a.genus());
  if (b.size() == 1) {
    const Integer& c = b.coeff(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!mpz_divisible_p(a.coeff(i).get_mpz_t(), c.get_mpz_t())) return std::nullopt;
    }
    auto e = b.exponents(0);
    UnitMonomial shift(1, std::vector<Exponent>(e.begin(), e.end()));
    return a.times(shift.inverse()).divided_by(c);
  }
  const std::size_t n = a.nvars();
  std::vector<Exponent> amin(n), bmin(n);
  for (std::size_t v = 0; v < n; ++v) {
    amin[v] = a.min_degree(v);
    bmin[v] = b.min_degree(v);
  }
  UnitMonomial ua(1, amin), ub(1, bmin);
  auto q = divide_polynomial(a.times(ua.inverse()), b.times(ub.inverse()));
  if (!q) return std::nullopt;
  return q->times(ua * ub.inverse());
}

LaurentPoly derivative(const LaurentPoly& p, std::size_t var) {
  if (var >= p.nvars()) throw DomainError("variable index out of range");
  std::vector<Exponent> e;
  std::vector<Integer> c;
  const std::size_t n = p.nvars();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Exponent k = p.exponent(i, var);
    if (k == 0) continue;
    auto src = p.exponents(i);
    std::size_t base = e.size();
    e.insert(e.end(), src.begin(), src.end());
    e[base + var] = k - 1;
    c.push_back(p.coeff(i) * Integer(static_cast<long>(k)));
  }
  (void)n;
  return LaurentPoly::from_terms(p.genus(), std::move(e), std::move(c));
}

bool canonical_less(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.genus() != b.genus()) return a.genus() < b.genus();
  const bool ac = a.is_constant(), bc = b.is_constant();
  if (ac != bc) return ac;
  if (a.size() != b.size()) return a.size() < b.size();
  const std::size_t n = a.nvars();
  for (std::size_t k = a.size(); k-- > 0;) {
    auto ea = a.exponents(k), eb = b.exponents(k);
    if (!std::equal(ea.begin(), ea.end(), eb.begin())) {
      return exps_less(ea.data(), eb.data(), n);
    }
    if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
  }
  return false;
}

// --------------------------------------------------------------- text format

std::string variable_name(std::size_t var) {
  return var == 0 ? std::string("t") : "x" + std::to_string(var);
}

namespace {

void append_monomial(std::string& out, std::span<const Exponent> exps) {
  bool first = true;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (!first) out += '*';
    first = false;
    out += variable_name(v);
    if (exps[v] != 1) out += "^" + std::to_string(exps[v]);
  }
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = p.size(); k-- > 0;) {
    Integer c = p.coeff(k);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (k + 1 == p.size()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    auto e = p.exponents(k);
    const bool constant_term = std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
    if (constant_term) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + "*";
      append_monomial(out, e);
    }
  }
  return out;
}

std::string to_string(const UnitMonomial& u) {
  std::string m;
  append_monomial(m, u.exps());
  if (m.empty()) return u.sign() < 0 ? "-1" : "1";
  return u.sign() < 0 ? "-" + m : m;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << to_string(p); }

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, int genus) : text_(text), genus_(genus) {}

  LaurentPoly parse() {
    LaurentPoly result(genus_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      result += parse_term(sign);
      skip_ws();
      if (at_end()) break;
    }
    return result;
  }

 private:
  LaurentPoly parse_term(int sign) {
    skip_ws();
    Integer coeff(sign);
    bool have_any = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= parse_unsigned();
      have_any = true;
    }
    std::vector<Exponent> exps(2 * static_cast<std::size_t>(genus_) + 1, 0);
    while (true) {
      skip_ws();
      if (at_end()) break;
      bool star = false;
      if (peek() == '*') {
        if (!have_any) fail("term cannot start with '*'");
        star = true;
        ++pos_;
        skip_ws();
      }
      if (!at_end() && (peek() == 't' || peek() == 'x')) {
        parse_atom(exps);
        have_any = true;
      } else if (star) {
        fail("expected 't' or 'x' after '*'");
      } else {
        break;
      }
    }
    if (!have_any) fail("expected a term");
    return LaurentPoly::monomial(genus_, coeff, exps);
  }

  void parse_atom(std::vector<Exponent>& exps) {
    std::size_t var = 0;
    if (peek() == 't') {
      ++pos_;
    } else {
      ++pos_;  // 'x'
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected index after 'x'");
      Integer idx = parse_unsigned();
      if (idx < 1) fail("x index must be at least 1");
      if (idx > 2 * genus_) fail("x index " + idx.get_str() + " exceeds 2g = " + std::to_string(2 * genus_));
      var = idx.get_ui();
    }
    Exponent e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      bool neg = false;
      if (!at_end() && (peek() == '-' || peek() == '+')) {
        neg = peek() == '-';
        ++pos_;
      }
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      Integer v = parse_unsigned();
      if (!v.fits_slong_p()) fail("exponent out of range");
      e = v.get_si();
      if (neg) e = -e;
    }
    exps[var] = checked_add(exps[var], e);
  }

  Integer parse_unsigned() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  std::string_view text_;
  int genus_;
  std::size_t pos_ = 0;
};

}  // namespace

int genus_needed(std::string_view text) {
  std::size_t max_index = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    std::size_t idx = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      idx = idx * 10 + static_cast<std::size_t>(text[j] - '0');
      if (idx > 1'000'000) throw ParseError("x index too large", 1, i + 1);
      ++j;
    }
    max_index = std::max(max_index, idx);
  }
  return static_cast<int>((max_index + 1) / 2);
}

LaurentPoly parse_laurent(std::string_view text, std::optional<int> genus) {
  int g = genus ? *genus : genus_needed(text);
  return PolyParser(text, g).parse();
}

}  // namespace tka
