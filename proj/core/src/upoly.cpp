#include "tka/upoly.hpp"

#include <algorithm>
#include <random>

#include "tka/error.hpp"

namespace tka::upoly {

// ------------------------------------------------------------------ over Z

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

ZPoly derivative(const ZPoly& a) {
  if (a.size() <= 1) return {};
  ZPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool divide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient) {
  if (b.empty()) throw DomainError("division by zero polynomial");
  quotient.clear();
  if (a.empty()) return true;
  if (a.size() < b.size()) return false;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1);
  const Integer& lb = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer& top = r[k + b.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  for (const auto& c : r) {
    if (c != 0) return false;
  }
  trim(q);
  quotient = std::move(q);
  return true;
}

ZPoly from_laurent(const LaurentPoly& p, std::size_t var) {
  ZPoly r;
  if (p.is_zero()) return r;
  const Exponent lo = p.min_degree(var);
  if (lo < 0) throw DomainError("negative exponent in dense conversion");
  r.resize(static_cast<std::size_t>(p.max_degree(var)) + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t v = 0; v < p.nvars(); ++v) {
      if (v != var && p.exponent(i, v) != 0) throw DomainError("polynomial is not univariate");
    }
    r[static_cast<std::size_t>(p.exponent(i, var))] = p.coeff(i);
  }
  return r;
}

LaurentPoly to_laurent(const ZPoly& a, int genus, std::size_t var) {
  const std::size_t n = static_cast<std::size_t>(2 * genus + 1);
  std::vector<Exponent> exps;
  std::vector<Integer> coeffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::vector<Exponent> e(n, 0);
    e[var] = static_cast<Exponent>(i);
    exps.insert(exps.end(), e.begin(), e.end());
    coeffs.push_back(a[i]);
  }
  return LaurentPoly::from_terms(genus, std::move(exps), std::move(coeffs));
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  // The Laurent gcd discards powers of the variable; restore them here.
  auto low = [](const ZPoly& p) {
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    return k;
  };
  if (a.empty() && b.empty()) return {};
  std::size_t k = a.empty() ? low(b) : b.empty() ? low(a) : std::min(low(a), low(b));
  LaurentPoly g = tka::gcd(to_laurent(a, 0, 0), to_laurent(b, 0, 0));
  ZPoly r = from_laurent(g, 0);
  r.insert(r.begin(), k, Integer(0));
  return r;
}

// ---------------------------------------------------------------- over Z/p

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  if (p <= 0xffffffffULL) return a * b % p;
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1U;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw InternalError("inverse of zero modulo p");
  return powmod(a, p - 2, p);
}

void zp_trim(ZpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  ZpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  zp_trim(r);
  return r;
}

ZpPoly zp_monic(ZpPoly a, std::uint64_t p) {
  if (a.empty()) return a;
  std::uint64_t inv = invmod(a.back(), p);
  for (auto& c : a) c = mulmod(c, inv, p);
  return a;
}

ZpPoly zp_mod(const ZpPoly& a, const ZpPoly& m, std::uint64_t p) {
  ZpPoly q, r;
  zp_divmod(a, m, p, q, r);
  return r;
}

ZpPoly zp_derivative(const ZpPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  ZpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  zp_trim(r);
  return r;
}

// base^e mod m, with e a big integer.
ZpPoly zp_powmod(const ZpPoly& base, const Integer& e, const ZpPoly& m, std::uint64_t p) {
  ZpPoly result{1};
  result = zp_mod(result, m, p);
  ZpPoly b = zp_mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = zp_mod(zp_mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = zp_mod(zp_mul(result, b, p), m, p);
  }
  return result;
}

// s*a + t*b = 1 for coprime a, b.
void zp_ext_gcd(const ZpPoly& a, const ZpPoly& b, std::uint64_t p, ZpPoly& s, ZpPoly& t) {
  ZpPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    ZpPoly q, r;
    zp_divmod(r0, r1, p, q, r);
    ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
    ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) throw InternalError("extended gcd of non-coprime polynomials");
  std::uint64_t inv = invmod(r0[0], p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  s = std::move(s0);
  t = std::move(t0);
}

bool zp_less(const ZpPoly& a, const ZpPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
}

void equal_degree_split(const ZpPoly& g, std::size_t d, std::uint64_t p, std::mt19937_64& rng,
                        std::vector<ZpPoly>& out) {
  if (g.size() - 1 == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> cd(0, p - 1);
  while (true) {
    ZpPoly a(g.size() - 1);
    for (auto& c : a) c = cd(rng);
    zp_trim(a);
    if (a.size() <= 1) continue;
    ZpPoly b = zp_powmod(a, e, g, p);
    b = zp_sub(b, ZpPoly{1}, p);
    ZpPoly h = zp_gcd(b, g, p);
    if (h.size() > 1 && h.size() < g.size()) {
      ZpPoly q, r;
      zp_divmod(g, h, p, q, r);
      equal_degree_split(h, d, p, rng, out);
      equal_degree_split(zp_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

ZpPoly reduce(const ZPoly& a, std::uint64_t p) {
  ZpPoly r(a.size());
  Integer m(static_cast<unsigned long>(p)), t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(t.get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    r[i] = t.get_ui();
  }
  zp_trim(r);
  return r;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  if (p > 0xffffffffULL) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  } else {
    // Products fit in 64 bits; sum them in 128 and reduce once.
    for (std::size_t k = 0; k < r.size(); ++k) {
      unsigned __int128 acc = 0;
      const std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
      const std::size_t hi = std::min(k, a.size() - 1);
      for (std::size_t i = lo; i <= hi; ++i) acc += a[i] * b[k - i];
      r[k] = static_cast<std::uint64_t>(acc % p);
    }
  }
  zp_trim(r);
  return r;
}

void zp_divmod(const ZpPoly& a, const ZpPoly& b, std::uint64_t p, ZpPoly& q, ZpPoly& r) {
  if (b.empty()) throw DomainError("division by zero polynomial mod p");
  r = a;
  zp_trim(r);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, 0);
  const std::uint64_t inv = invmod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint64_t c = mulmod(r[k + b.size() - 1], inv, p);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[k + j] = (r[k + j] + p - mulmod(c, b[j], p)) % p;
    }
  }
  zp_trim(q);
  zp_trim(r);
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

std::vector<ZpPoly> factor_mod_p(const ZpPoly& f_in, std::uint64_t p) {
  ZpPoly f = zp_monic(f_in, p);
  std::vector<ZpPoly> out;
  if (f.size() <= 1) return out;
  std::vector<std::pair<ZpPoly, std::size_t>> ddf;
  ZpPoly x{0, 1};
  ZpPoly h = zp_mod(x, f, p);
  // frob[j] = x^(p j) mod f, so that h^p mod f = sum_j h_j frob[j]. Rows
  // stay valid modulo any divisor of f.
  std::vector<ZpPoly> frob;
  {
    const ZpPoly xp = zp_powmod(x, Integer(static_cast<unsigned long>(p)), f, p);
    ZpPoly row{1};
    for (std::size_t j = 0; j + 1 < f.size(); ++j) {
      frob.push_back(row);
      row = zp_mod(zp_mul(row, xp, p), f, p);
    }
  }
  auto apply_frobenius = [&](const ZpPoly& a) {
    const std::size_t n = f.size() - 1;
    std::vector<unsigned __int128> acc(n, 0);
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (a[j] == 0) continue;
      for (std::size_t i = 0; i < frob[j].size(); ++i) acc[i] += static_cast<unsigned __int128>(a[j]) * frob[j][i];
    }
    ZpPoly r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<std::uint64_t>(acc[i] % p);
    zp_trim(r);
    return r;
  };
  for (std::size_t d = 1; f.size() > 1; ++d) {
    if (2 * d > f.size() - 1) {
      ddf.emplace_back(f, f.size() - 1);
      break;
    }
    h = apply_frobenius(h);
    ZpPoly g = zp_gcd(zp_sub(h, x, p), f, p);
    if (g.size() > 1) {
      ddf.emplace_back(g, d);
      ZpPoly q, r;
      zp_divmod(f, g, p, q, r);
      f = zp_monic(q, p);
      h = zp_mod(h, f, p);
      frob.resize(f.size() - 1);
      for (auto& row : frob) row = zp_mod(row, f, p);
    }
  }
  std::mt19937_64 rng(0x5eed);
  for (const auto& [g, d] : ddf) equal_degree_split(g, d, p, rng, out);
  std::sort(out.begin(), out.end(), zp_less);
  return out;
}

// ------------------------------------------------------------ Hensel lifting

namespace {

void mod_reduce(ZPoly& a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r = mul(a, b);
  mod_reduce(r, m);
  return r;
}

// Division by a monic b modulo m.
void divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
  r = a;
  mod_reduce(r, m);
  q.clear();
  if (r.size() < b.size()) return;
  q.assign(r.size() - b.size() + 1, Integer(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Integer c = r[k + b.size() - 1];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k] = c;
    if (c == 0) continue;
    // Entries are reduced lazily; only the next pivot needs its residue.
    for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  mod_reduce(q, m);
  mod_reduce(r, m);
}

ZPoly lift_zp(const ZpPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// One quadratic Hensel step from modulus m to m^2: f = g h, s g + t h = 1.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Integer& mm) {
  ZPoly e = sub(f, mul(g, h));
  mod_reduce(e, mm);
  ZPoly q, r;
  divmod_monic(mul_mod(s, e, mm), h, mm, q, r);
  ZPoly g2 = add(g, add(mul(t, e), mul(q, g)));
  mod_reduce(g2, mm);
  ZPoly h2 = add(h, r);
  mod_reduce(h2, mm);
  ZPoly b = sub(add(mul(s, g2), mul(t, h2)), ZPoly{Integer(1)});
  mod_reduce(b, mm);
  ZPoly c, d;
  divmod_monic(mul_mod(s, b, mm), h2, mm, c, d);
  ZPoly s2 = sub(s, d);
  mod_reduce(s2, mm);
  ZPoly t2 = sub(t, add(mul(t, b), mul(c, g2)));
  mod_reduce(t2, mm);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

void multilift(const ZPoly& f, const std::vector<ZpPoly>& facs, std::size_t lo, std::size_t hi,
               std::uint64_t p, unsigned steps, const Integer& modulus, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    // monic representative of f modulo the final modulus
    Integer inv;
    Integer lc = f.back();
    if (mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t()) == 0) {
      throw InternalError("leading coefficient not invertible during lifting");
    }
    ZPoly g = f;
    for (auto& c : g) c *= inv;
    mod_reduce(g, modulus);
    out[lo] = std::move(g);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  ZpPoly gp{reduce(ZPoly{f.back()}, p)};
  for (std::size_t i = lo; i < mid; ++i) gp = zp_mul(gp, facs[i], p);
  ZpPoly hp{1};
  for (std::size_t i = mid; i < hi; ++i) hp = zp_mul(hp, facs[i], p);
  ZpPoly sp, tp;
  zp_ext_gcd(gp, hp, p, sp, tp);
  ZPoly g = lift_zp(gp), h = lift_zp(hp), s = lift_zp(sp), t = lift_zp(tp);
  Integer m(static_cast<unsigned long>(p));
  for (unsigned k = 0; k < steps; ++k) {
    m *= m;
    hensel_step(f, g, h, s, t, m);
  }
  multilift(g, facs, lo, mid, p, steps, modulus, out);
  multilift(h, facs, mid, hi, p, steps, modulus, out);
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

ZPoly primitive_positive(ZPoly a) {
  Integer c = content(a);
  if (a.back() < 0) c = -c;
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return a;
}

bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

Integer factor_bound(const ZPoly& f) {
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer b = abs(f.back()) * root;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(degree(f)));
  return b;
}

std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<ZpPoly>& factors, std::uint64_t p,
                               const Integer& target, Integer& modulus) {
  if (factors.empty()) throw DomainError("nothing to lift");
  unsigned steps = 0;
  modulus = static_cast<unsigned long>(p);
  while (modulus < target) {
    modulus *= modulus;
    ++steps;
  }
  std::vector<ZPoly> out(factors.size());
  multilift(f, factors, 0, factors.size(), p, steps, modulus, out);
  return out;
}

std::vector<ZPoly> zassenhaus(const ZPoly& f_in) {
  ZPoly f = f_in;
  if (degree(f) <= 1) return {f};
  // Odd primes not dividing lc(f) for which f stays squarefree, i.e. p
  // divides neither lc(f) nor the discriminant. Of the first few such primes
  // the one giving the fewest modular factors is used.
  constexpr int kPrimeTrials = 4;
  std::uint64_t p = 0;
  std::vector<ZpPoly> modp;
  int tried = 0;
  for (std::uint64_t cand = 3; tried < kPrimeTrials; cand += 2) {
    if (cand > (1ULL << 31)) throw InternalError("no suitable prime found");
    if (!is_small_prime(cand)) continue;
    if (mpz_divisible_ui_p(f.back().get_mpz_t(), cand)) continue;
    ZpPoly fp = reduce(f, cand);
    if (zp_gcd(fp, zp_derivative(fp, cand), cand).size() != 1) continue;
    ++tried;
    std::vector<ZpPoly> fs = factor_mod_p(fp, cand);
    if (p == 0 || fs.size() < modp.size()) {
      p = cand;
      modp = std::move(fs);
    }
    if (modp.size() == 1) break;
  }
  if (modp.size() == 1) return {f};

  const Integer bound = factor_bound(f);
  Integer modulus;
  std::vector<ZPoly> lifted = hensel_lift(f, modp, p, 2 * bound + 1, modulus);

  std::vector<ZPoly> result;
  std::vector<std::size_t> alive(lifted.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::size_t s = 1;
  while (2 * s <= alive.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    while (true) {
      const Integer& lc = f.back();
      // Constant-term screen before forming the full product.
      Integer c0 = lc;
      for (std::size_t i : pick) {
        const ZPoly& F = lifted[alive[i]];
        c0 *= F.empty() ? Integer(0) : F[0];
        mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), modulus.get_mpz_t());
      }
      if (c0 > modulus / 2) c0 -= modulus;
      Integer lcf0 = lc * f[0];
      bool plausible = c0 == 0 ? f[0] == 0 : mpz_divisible_p(lcf0.get_mpz_t(), c0.get_mpz_t()) != 0;
      if (plausible) {
        ZPoly G{lc};
        for (std::size_t i : pick) G = mul_mod(G, lifted[alive[i]], modulus);
        G = symmetric(G, modulus);
        if (!G.empty()) {
          G = primitive_positive(G);
          ZPoly q;
          if (degree(G) > 0 && divide_exact(f, G, q)) {
            result.push_back(G);
            f = std::move(q);
            std::vector<std::size_t> rest;
            for (std::size_t k = 0; k < alive.size(); ++k) {
              if (std::find(pick.begin(), pick.end(), k) == pick.end()) rest.push_back(alive[k]);
            }
            alive = std::move(rest);
            found = true;
            break;
          }
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == alive.size() - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (degree(f) > 0) result.push_back(primitive_positive(f));
  std::sort(result.begin(), result.end(), zpoly_less);
  return result;
}

Factorization factor(const ZPoly& f_in) {
  ZPoly f = f_in;
  trim(f);
  if (f.empty()) throw DomainError("factorization of zero");
  Factorization out;
  out.content = content(f);
  if (f.back() < 0) out.content = -out.content;
  for (auto& c : f) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), out.content.get_mpz_t());
  std::size_t low = 0;
  while (f[low] == 0) ++low;
  if (low > 0) {
    out.factors.push_back({ZPoly{Integer(0), Integer(1)}, static_cast<int>(low)});
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (degree(f) == 0) return out;

  // Yun's squarefree decomposition.
  std::vector<std::pair<ZPoly, int>> parts;
  ZPoly fd = derivative(f);
  ZPoly a0 = gcd(f, fd);
  ZPoly b, c, d;
  if (!divide_exact(f, a0, b) || !divide_exact(fd, a0, c)) throw InternalError("squarefree split");
  d = sub(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    ZPoly a = d.empty() ? b : gcd(b, d);
    ZPoly nb, nc;
    if (!divide_exact(b, a, nb)) throw InternalError("squarefree split");
    if (!d.empty() && !divide_exact(d, a, nc)) throw InternalError("squarefree split");
    if (degree(a) > 0) parts.emplace_back(primitive_positive(a), i);
    b = std::move(nb);
    d = sub(nc, derivative(b));
  }
  for (const auto& [part, mult] : parts) {
    for (auto& g : zassenhaus(part)) out.factors.push_back({std::move(g), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& x, const Factor& y) {
    if (x.poly != y.poly) return zpoly_less(x.poly, y.poly);
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

}  // namespace tka::upoly
