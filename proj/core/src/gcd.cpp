// Multivariate gcd. Both arguments are first shifted to ordinary polynomials
// (minimal exponent 0 in every variable); monomial factors are units and do
// not matter.
//
// The heuristic method of Char, Geddes and Gonnet is tried first: substitute
// a large integer xi for the top variable, take the gcd of the images
// recursively, rebuild a candidate from its xi-adic digits, and accept it
// only if it divides both inputs. When that fails a few times the fallback is
// the recursive primitive pseudo-remainder sequence over Z[lower][v].

#include <algorithm>
#include <optional>
#include <vector>

#include "tka/error.hpp"
#include "tka/laurent.hpp"

namespace tka {

namespace {

using Coeffs = std::vector<LaurentPoly>;  // index = degree in the main variable

std::size_t top_variable(const LaurentPoly& p) {
  for (std::size_t v = p.nvars(); v-- > 0;) {
    if (p.involves(v)) return v;
  }
  return p.nvars();  // constant
}

// Splits p (nonnegative exponents) into coefficients of powers of var.
Coeffs split(const LaurentPoly& p, std::size_t var) {
  const std::size_t n = p.nvars();
  const auto deg = static_cast<std::size_t>(p.max_degree(var));
  std::vector<std::vector<Exponent>> exps(deg + 1);
  std::vector<std::vector<Integer>> coeffs(deg + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto e = p.exponents(i);
    auto k = static_cast<std::size_t>(e[var]);
    auto& dst = exps[k];
    std::size_t base = dst.size();
    dst.insert(dst.end(), e.begin(), e.end());
    dst[base + var] = 0;
    coeffs[k].push_back(p.coeff(i));
  }
  Coeffs out;
  out.reserve(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    out.push_back(LaurentPoly::from_terms(p.genus(), std::move(exps[k]), std::move(coeffs[k])));
  }
  (void)n;
  return out;
}

LaurentPoly join(const Coeffs& c, std::size_t var, int genus) {
  std::vector<Exponent> exps;
  std::vector<Integer> coeffs;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (std::size_t i = 0; i < c[k].size(); ++i) {
      auto e = c[k].exponents(i);
      std::size_t base = exps.size();
      exps.insert(exps.end(), e.begin(), e.end());
      exps[base + var] = static_cast<Exponent>(k);
      coeffs.push_back(c[k].coeff(i));
    }
  }
  return LaurentPoly::from_terms(genus, std::move(exps), std::move(coeffs));
}

void trim(Coeffs& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

LaurentPoly shift_to_polynomial(const LaurentPoly& p) {
  std::vector<Exponent> mins(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) mins[v] = p.min_degree(v);
  return p.times(UnitMonomial(1, std::move(mins)).inverse());
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly prs_gcd(const LaurentPoly& a, const LaurentPoly& b);

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("gcd: expected exact division failed");
  return *std::move(q);
}

// gcd of the coefficients; result does not involve var.
LaurentPoly content_of(const Coeffs& c) {
  LaurentPoly g(c.front().genus());
  for (const auto& x : c) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? shift_to_polynomial(x) : poly_gcd(g, x);
    if (g.is_constant() && (g.leading_coeff() == 1 || g.leading_coeff() == -1)) break;
  }
  return g;
}

void make_primitive(Coeffs& c) {
  LaurentPoly g = content_of(c);
  if (g.is_one()) return;
  for (auto& x : c) {
    if (!x.is_zero()) x = exact(x, g);
  }
}

// Pseudo-remainder of a by b in the main variable; b nonzero.
Coeffs pseudo_remainder(Coeffs a, const Coeffs& b) {
  const LaurentPoly& lb = b.back();
  const std::size_t db = b.size() - 1;
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    LaurentPoly la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
  }
  return a;
}

Integer max_norm(const LaurentPoly& p) {
  Integer m = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (abs(p.coeff(i)) > m) m = abs(p.coeff(i));
  }
  return m;
}

Integer integer_content(const LaurentPoly& p) {
  Integer g = 0;
  for (std::size_t i = 0; i < p.size() && g != 1; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.coeff(i).get_mpz_t());
  return g;
}

// p with xi substituted for variable v.
LaurentPoly eval_var(const LaurentPoly& p, std::size_t v, const Integer& xi) {
  const std::size_t n = p.nvars();
  std::vector<Integer> powers(static_cast<std::size_t>(p.max_degree(v)) + 1);
  powers[0] = 1;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * xi;
  std::vector<Exponent> exps;
  std::vector<Integer> coeffs;
  exps.reserve(p.size() * n);
  coeffs.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto e = p.exponents(i);
    std::size_t base = exps.size();
    exps.insert(exps.end(), e.begin(), e.end());
    exps[base + v] = 0;
    coeffs.push_back(p.coeff(i) * powers[static_cast<std::size_t>(e[v])]);
  }
  return LaurentPoly::from_terms(p.genus(), std::move(exps), std::move(coeffs));
}

// Inverse of eval_var through symmetric xi-adic digits.
LaurentPoly xi_adic_lift(LaurentPoly gamma, std::size_t v, const Integer& xi) {
  std::vector<Exponent> exps;
  std::vector<Integer> coeffs;
  const Integer half = xi / 2;
  for (Exponent k = 0; !gamma.is_zero(); ++k) {
    std::vector<Exponent> dexps;
    std::vector<Integer> dcoeffs;
    for (std::size_t i = 0; i < gamma.size(); ++i) {
      Integer r;
      mpz_mod(r.get_mpz_t(), gamma.coeff(i).get_mpz_t(), xi.get_mpz_t());
      if (r > half) r -= xi;
      if (r == 0) continue;
      auto e = gamma.exponents(i);
      dexps.insert(dexps.end(), e.begin(), e.end());
      dcoeffs.push_back(r);
      std::size_t base = exps.size();
      exps.insert(exps.end(), e.begin(), e.end());
      exps[base + v] = k;
      coeffs.push_back(r);
    }
    LaurentPoly digit = LaurentPoly::from_terms(gamma.genus(), std::move(dexps), std::move(dcoeffs));
    gamma = (gamma - digit).divided_by(xi);
  }
  return LaurentPoly::from_terms(gamma.genus(), std::move(exps), std::move(coeffs));
}

constexpr std::size_t kHeuristicBitLimit = 200000;

// gcd up to sign, or nullopt when the heuristic gives up.
std::optional<LaurentPoly> heuristic_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_constant() || b.is_constant()) {
    Integer g = integer_content(a);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), integer_content(b).get_mpz_t());
    return LaurentPoly::constant(a.genus(), g);
  }
  const Integer ca = integer_content(a), cb = integer_content(b);
  Integer cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  const LaurentPoly pa = a.divided_by(ca), pb = b.divided_by(cb);
  const std::size_t v = std::max(top_variable(pa), top_variable(pb));
  const Exponent deg = std::max(pa.max_degree(v), pb.max_degree(v));
  Integer xi = 2 * std::min(max_norm(pa), max_norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * static_cast<std::size_t>(deg + 1) > kHeuristicBitLimit) {
      return std::nullopt;
    }
    LaurentPoly ea = eval_var(pa, v, xi), eb = eval_var(pb, v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      auto gamma = heuristic_gcd(ea, eb);
      if (!gamma) return std::nullopt;
      LaurentPoly cand = xi_adic_lift(*gamma, v, xi);
      if (!cand.is_zero()) {
        cand = cand.divided_by(integer_content(cand));
        if (divide_exact(pa, cand) && divide_exact(pb, cand)) return cand * LaurentPoly::constant(a.genus(), cg);
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// gcd of two nonzero ordinary polynomials, up to sign.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (!a.is_constant() && !b.is_constant()) {
    if (auto g = heuristic_gcd(a, b)) return *std::move(g);
  }
  return prs_gcd(a, b);
}

LaurentPoly prs_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_constant() || b.is_constant()) {
    LaurentPoly c = a.is_constant() ? a : b;
    LaurentPoly other = a.is_constant() ? b : a;
    Integer g = c.coeff(0);
    for (std::size_t i = 0; i < other.size() && g != 1 && g != -1; ++i) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), other.coeff(i).get_mpz_t());
    }
    return LaurentPoly::constant(a.genus(), abs(g));
  }
  // Cheap divisibility shortcut, common in factor bookkeeping.
  if (a.size() <= b.size()) {
    if (divide_exact(b, a)) return a;
  } else if (divide_exact(a, b)) {
    return b;
  }
  const std::size_t va = top_variable(a), vb = top_variable(b);
  const std::size_t v = std::max(va, vb);
  if (va != vb) {
    const LaurentPoly& hi = va > vb ? a : b;
    const LaurentPoly& lo = va > vb ? b : a;
    return poly_gcd(lo, content_of(split(hi, v)));
  }
  Coeffs ca = split(a, v), cb = split(b, v);
  LaurentPoly conta = content_of(ca), contb = content_of(cb);
  LaurentPoly g_content = poly_gcd(conta, contb);
  make_primitive(ca);
  make_primitive(cb);
  if (ca.size() < cb.size()) std::swap(ca, cb);
  while (true) {
    Coeffs r = pseudo_remainder(ca, cb);
    if (r.empty()) break;
    if (r.size() == 1) {
      cb = {LaurentPoly::constant(a.genus(), Integer(1))};
      break;
    }
    make_primitive(r);
    ca = std::move(cb);
    cb = std::move(r);
  }
  return g_content * join(cb, v, a.genus());
}

}  // namespace

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.genus() != b.genus()) throw ContextMismatch("gcd across rings");
  if (a.is_zero() && b.is_zero()) return LaurentPoly(a.genus());
  if (a.is_zero()) return normalize_unit(b).first;
  if (b.is_zero()) return normalize_unit(a).first;
  return normalize_unit(poly_gcd(shift_to_polynomial(a), shift_to_polynomial(b))).first;
}

}  // namespace tka
