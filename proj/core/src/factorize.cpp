#include "tka/factorize.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "tka/error.hpp"
#include "tka/upoly.hpp"

namespace tka {

// ------------------------------------------------------------ integers

namespace {

Integer pollard_rho(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return Integer(2);
  for (unsigned long c = 1;; ++c) {
    Integer x = 2, y = 2, d = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    while (d == 1) {
      step(x);
      step(y);
      step(y);
      Integer diff = abs(x - y);
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n) return d;
  }
}

void split_integer(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_rho(n);
  split_integer(d, out);
  split_integer(n / d, out);
}

}  // namespace

std::vector<Integer> factor_integer(const Integer& n_in) {
  Integer n = abs(n_in);
  if (n == 0) throw DomainError("factorization of zero");
  std::vector<Integer> out;
  for (unsigned long d = 2; d < 10000 && d * d <= n; d += (d == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out.emplace_back(d);
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), d);
    }
  }
  split_integer(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

// ------------------------------------------------------------ polynomials

namespace {

using FactorList = std::vector<std::pair<LaurentPoly, int>>;

std::vector<std::size_t> involved(const LaurentPoly& p) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    if (p.involves(v)) vars.push_back(v);
  }
  return vars;
}

// gcd of the coefficients of p viewed as a polynomial in var.
LaurentPoly content_in(const LaurentPoly& p, std::size_t var) {
  std::map<Exponent, std::pair<std::vector<Exponent>, std::vector<Integer>>> groups;
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto e = p.exponents(i);
    auto& [exps, coeffs] = groups[e[var]];
    std::size_t base = exps.size();
    exps.insert(exps.end(), e.begin(), e.end());
    exps[base + var] = 0;
    coeffs.push_back(p.coeff(i));
  }
  LaurentPoly g(p.genus());
  for (auto& [k, group] : groups) {
    g = gcd(g, LaurentPoly::from_terms(p.genus(), std::move(group.first), std::move(group.second)));
    if (g.is_one()) break;
  }
  return g;
}

LaurentPoly exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) throw InternalError("factor: expected exact division failed");
  return *std::move(q);
}

// Kronecker substitution data for a fixed polynomial.
struct Kronecker {
  std::vector<std::size_t> vars;
  std::vector<Exponent> radix;   // deg + 1 per variable
  std::vector<Exponent> weight;  // mixed-radix place values
  Exponent span = 1;             // product of radices

  upoly::ZPoly encode(const LaurentPoly& p) const {
    upoly::ZPoly out(static_cast<std::size_t>(span));
    for (std::size_t i = 0; i < p.size(); ++i) {
      Exponent e = 0;
      for (std::size_t k = 0; k < vars.size(); ++k) e += p.exponent(i, vars[k]) * weight[k];
      out[static_cast<std::size_t>(e)] += p.coeff(i);
    }
    upoly::trim(out);
    return out;
  }

  LaurentPoly decode(const upoly::ZPoly& a, int genus) const {
    const std::size_t n = static_cast<std::size_t>(2 * genus + 1);
    std::vector<Exponent> exps;
    std::vector<Integer> coeffs;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      auto rest = static_cast<Exponent>(i);
      std::vector<Exponent> e(n, 0);
      for (std::size_t k = 0; k < vars.size(); ++k) {
        e[vars[k]] = rest % radix[k];
        rest /= radix[k];
      }
      if (rest != 0) return LaurentPoly(genus);  // outside the box: not an image
      exps.insert(exps.end(), e.begin(), e.end());
      coeffs.push_back(a[i]);
    }
    return LaurentPoly::from_terms(genus, std::move(exps), std::move(coeffs));
  }
};

constexpr Exponent kMaxKroneckerDegree = 1 << 16;

// Values of p at two fixed integer points, used to discard candidate factors
// before trial division. Exponents must be nonnegative.
std::array<Integer, 2> screen_values(const LaurentPoly& p) {
  std::array<Integer, 2> out{Integer(0), Integer(0)};
  for (int k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      Integer term = p.coeff(i);
      for (std::size_t v = 0; v < p.nvars(); ++v) {
        const Exponent e = p.exponent(i, v);
        if (e == 0) continue;
        Integer base(static_cast<long>(2 * v + 3 + k)), pw;
        mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
        term *= pw;
      }
      out[static_cast<std::size_t>(k)] += term;
    }
  }
  return out;
}

bool may_divide(const std::array<Integer, 2>& cand, const std::array<Integer, 2>& whole) {
  for (std::size_t k = 0; k < 2; ++k) {
    if (cand[k] == 0) return whole[k] == 0;
    if (whole[k] != 0 && mpz_divisible_p(whole[k].get_mpz_t(), cand[k].get_mpz_t()) == 0) return false;
  }
  return true;
}

// q with x_v replaced by x_v + c_v for each listed variable. Exponents must
// be nonnegative.
LaurentPoly shift_vars(const LaurentPoly& q, const std::vector<std::size_t>& vars, const std::vector<Integer>& by) {
  const int g = q.genus();
  std::vector<std::vector<LaurentPoly>> powers(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) {
    const LaurentPoly base = LaurentPoly::variable(g, vars[k]) + LaurentPoly::constant(g, by[k]);
    powers[k].push_back(LaurentPoly::constant(g, Integer(1)));
    for (Exponent e = 1; e <= q.max_degree(vars[k]); ++e) powers[k].push_back(powers[k].back() * base);
  }
  LaurentPoly out(g);
  for (std::size_t i = 0; i < q.size(); ++i) {
    LaurentPoly term = LaurentPoly::constant(g, q.coeff(i));
    for (std::size_t v = 0; v < q.nvars(); ++v) {
      if (q.exponent(i, v) != 0 && std::find(vars.begin(), vars.end(), v) == vars.end()) {
        throw InternalError("shift_vars: unlisted variable in use");
      }
    }
    for (std::size_t k = 0; k < vars.size(); ++k) term *= powers[k][static_cast<std::size_t>(q.exponent(i, vars[k]))];
    out += term;
  }
  return out;
}

// Irreducible factors of q: squarefree, primitive in every variable, with
// nonnegative exponents, at least two variables.
std::vector<LaurentPoly> kronecker_split(const LaurentPoly& q) {
  Kronecker kr;
  kr.vars = involved(q);
  for (std::size_t v : kr.vars) {
    kr.weight.push_back(kr.span);
    kr.radix.push_back(q.max_degree(v) + 1);
    kr.span *= kr.radix.back();
    if (kr.span > kMaxKroneckerDegree) throw DomainError("polynomial too large to factor");
  }
  // The image usually carries a power of the variable even though q has no
  // monomial factor; it is split off and shared out among the candidates.
  upoly::ZPoly image = kr.encode(q);
  std::size_t shift = 0;
  while (image[shift] == 0) ++shift;
  image.erase(image.begin(), image.begin() + static_cast<std::ptrdiff_t>(shift));
  upoly::Factorization uf = upoly::factor(image);
  std::vector<upoly::ZPoly> pieces;
  for (const auto& f : uf.factors) {
    for (int m = 0; m < f.multiplicity; ++m) pieces.push_back(f.poly);
  }

  std::vector<LaurentPoly> result;
  LaurentPoly rest = q;
  std::array<Integer, 2> rest_values = screen_values(rest);
  std::size_t s = 1;
  while (2 * s <= pieces.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (!found) {
      upoly::ZPoly prod{Integer(1)};
      for (std::size_t i : pick) prod = upoly::mul(prod, pieces[i]);
      for (std::size_t k = 0; k <= shift && !found; ++k) {
        upoly::ZPoly shifted(k, Integer(0));
        shifted.insert(shifted.end(), prod.begin(), prod.end());
        LaurentPoly cand = kr.decode(shifted, q.genus());
        if (cand.is_zero() || cand.size() < 2 || !may_divide(screen_values(cand), rest_values)) continue;
        auto quot = divide_exact(rest, cand);
        if (!quot) continue;
        result.push_back(normalize_unit(cand).first);
        rest = *std::move(quot);
        rest_values = screen_values(rest);
        shift -= k;
        std::vector<upoly::ZPoly> left;
        for (std::size_t j = 0; j < pieces.size(); ++j) {
          if (std::find(pick.begin(), pick.end(), j) == pick.end()) left.push_back(pieces[j]);
        }
        pieces = std::move(left);
        found = true;
      }
      if (found) break;
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == pieces.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (!(rest.is_constant())) result.push_back(normalize_unit(rest).first);
  return result;
}

// Sparse polynomials have sparse substitution images with many modular
// factors, which makes recombination exponential. Shifting every variable by
// a small constant first gives a dense image with few.
std::vector<LaurentPoly> kronecker_factor(const LaurentPoly& q) {
  const std::vector<std::size_t> vars = involved(q);
  std::vector<Integer> up, down;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    up.emplace_back(static_cast<long>(k + 1));
    down.emplace_back(-static_cast<long>(k + 1));
  }
  std::vector<LaurentPoly> out;
  for (const LaurentPoly& f : kronecker_split(shift_vars(q, vars, up))) {
    out.push_back(normalize_unit(shift_vars(f, vars, down)).first);
  }
  return out;
}

// Yun's algorithm in var over Z[other variables]; q primitive in var.
std::vector<std::pair<LaurentPoly, int>> squarefree_decomposition(const LaurentPoly& q, std::size_t var) {
  std::vector<std::pair<LaurentPoly, int>> parts;
  LaurentPoly qd = derivative(q, var);
  LaurentPoly a0 = gcd(q, qd);
  LaurentPoly b = exact(q, a0);
  LaurentPoly c = exact(qd, a0);
  LaurentPoly d = c - derivative(b, var);
  for (int i = 1; !b.is_constant(); ++i) {
    LaurentPoly a = gcd(b, d);
    LaurentPoly nb = exact(b, a);
    LaurentPoly nc = d.is_zero() ? LaurentPoly(q.genus()) : exact(d, a);
    if (!a.is_constant()) parts.emplace_back(a, i);
    b = std::move(nb);
    d = nc - derivative(b, var);
  }
  return parts;
}

// q: nonnegative exponents, minimal exponent 0 in every variable, primitive.
void factor_primitive(const LaurentPoly& q, int mult, FactorList& out) {
  if (q.is_constant()) return;
  const auto vars = involved(q);
  for (std::size_t v : vars) {
    LaurentPoly c = content_in(q, v);
    if (!c.is_constant()) {
      factor_primitive(c, mult, out);
      factor_primitive(normalize_unit(exact(q, c)).first, mult, out);
      return;
    }
  }
  if (vars.size() == 1) {
    upoly::Factorization uf = upoly::factor(upoly::from_laurent(q, vars[0]));
    for (const auto& f : uf.factors) {
      out.emplace_back(normalize_unit(upoly::to_laurent(f.poly, q.genus(), vars[0])).first,
                       mult * f.multiplicity);
    }
    return;
  }
  auto parts = squarefree_decomposition(q, vars[0]);
  if (parts.size() == 1 && parts[0].second == 1) {
    for (auto& f : kronecker_factor(q)) out.emplace_back(std::move(f), mult);
    return;
  }
  for (const auto& [part, m] : parts) {
    factor_primitive(normalize_unit(part).first, mult * m, out);
  }
}

}  // namespace

Factorization factor(const LaurentPoly& p) {
  if (p.is_zero()) throw DomainError("factorization of zero");
  Factorization result;
  result.genus = p.genus();
  auto [p0, unit] = normalize_unit(p);
  result.unit = unit;
  auto [content, prim] = content_and_primitive(p0);
  FactorList list;
  for (const auto& prime : factor_integer(content)) {
    list.emplace_back(LaurentPoly::constant(p.genus(), prime), 1);
  }
  factor_primitive(prim, 1, list);

  std::map<std::string, std::size_t> seen;
  for (auto& [f, m] : list) {
    auto key = to_string(f);
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, result.factors.size());
      result.factors.emplace_back(std::move(f), m);
    } else {
      result.factors[it->second].second += m;
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  if (expand(result) != p) throw InternalError("factorization does not reproduce its input");
  return result;
}

Factorization factor_univariate(const LaurentPoly& p) {
  if (involved(p).size() > 1) throw DomainError("factor_univariate: more than one variable occurs");
  return factor(p);
}

LaurentPoly squarefree_part(const LaurentPoly& p) {
  Factorization f = factor(p);
  LaurentPoly r = LaurentPoly::constant(p.genus(), Integer(1));
  for (const auto& [g, m] : f.factors) r *= g;
  return r;
}

bool is_associate(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.genus() != q.genus()) throw ContextMismatch("is_associate across rings");
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return normalize_unit(p).first == normalize_unit(q).first;
}

LaurentPoly expand(const Factorization& f) {
  LaurentPoly r = LaurentPoly::from_unit(f.genus, f.unit);
  for (const auto& [g, m] : f.factors) r *= pow(g, static_cast<unsigned>(m));
  return r;
}

std::string to_string(const Factorization& f) {
  std::string out = to_string(f.unit);
  for (const auto& [g, m] : f.factors) {
    out += " * (" + to_string(g) + ")";
    if (m != 1) out += "^" + std::to_string(m);
  }
  return out;
}

}  // namespace tka
