#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace oracle {

LaurentPoly random_poly(std::mt19937_64& rng, int genus, int terms, int lo, int hi, int cmax,
                        int var_limit) {
  const std::size_t n = static_cast<std::size_t>(2 * genus + 1);
  const std::size_t used = var_limit < 0 ? n : std::min<std::size_t>(n, static_cast<std::size_t>(var_limit));
  std::uniform_int_distribution<int> ed(lo, hi), cd(-cmax, cmax);
  std::vector<tka::Exponent> exps;
  std::vector<Integer> coeffs;
  for (int k = 0; k < terms; ++k) {
    for (std::size_t v = 0; v < n; ++v) exps.push_back(v < used ? ed(rng) : 0);
    coeffs.emplace_back(cd(rng));
  }
  return LaurentPoly::from_terms(genus, std::move(exps), std::move(coeffs));
}

tka::UnitMonomial random_unit(std::mt19937_64& rng, int genus) {
  std::uniform_int_distribution<int> ed(-3, 3), sd(0, 1);
  std::vector<tka::Exponent> e(static_cast<std::size_t>(2 * genus + 1));
  for (auto& x : e) x = ed(rng);
  return tka::UnitMonomial(sd(rng) ? 1 : -1, e);
}

namespace {

void trim(std::vector<Rational>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

std::vector<Rational> rational_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a mod b
    while (a.size() >= b.size() && !a.empty()) {
      Rational f = a.back() / b.back();
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
      trim(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    Rational lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

std::vector<Rational> dense_in_t(const LaurentPoly& p) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t v = 1; v < p.nvars(); ++v) {
      if (p.exponent(i, v) != 0) throw std::invalid_argument("dense_in_t: x variable present");
    }
    auto e = p.exponent(i, 0);
    if (e < 0) throw std::invalid_argument("dense_in_t: negative exponent");
    if (out.size() <= static_cast<std::size_t>(e)) out.resize(static_cast<std::size_t>(e) + 1);
    out[static_cast<std::size_t>(e)] = Rational(p.coeff(i));
  }
  return out;
}

LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("cofactor_det of empty matrix");
  if (n == 1) return m[0][0];
  LaurentPoly sum(m[0][0].genus());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    LaurentPoly term = m[0][j] * cofactor_det(minor);
    if (j % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

LaurentPoly brute_delta0(const std::vector<std::vector<LaurentPoly>>& m, int genus) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  if (cols == 0) return LaurentPoly::constant(genus, Integer(1));
  if (rows < cols) return LaurentPoly(genus);
  LaurentPoly g(genus);
  std::vector<bool> pick(rows, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(cols), true);
  do {
    std::vector<std::vector<LaurentPoly>> sub;
    for (std::size_t i = 0; i < rows; ++i) {
      if (pick[i]) sub.push_back(m[i]);
    }
    g = tka::gcd(g, cofactor_det(sub));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

// ------------------------------------------------------------ divisor search
//
// Kronecker's method: a divisor f of total degree <= d is determined by its
// values on a unisolvent point set, and each value f(P) divides p(P). All
// sign/divisor choices are enumerated and the interpolant is tested.

namespace {

using i128 = __int128;

std::int64_t eval_small(const LaurentPoly& p, const std::vector<std::size_t>& vars,
                        const std::vector<int>& pt) {
  Integer s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Integer term = p.coeff(i);
    for (std::size_t k = 0; k < vars.size(); ++k) {
      auto e = p.exponent(i, vars[k]);
      for (tka::Exponent r = 0; r < e; ++r) term *= pt[k];
    }
    s += term;
  }
  if (!s.fits_slong_p()) return 0;  // treat as unusable
  return s.get_si();
}

std::vector<std::int64_t> divisors(std::int64_t v) {
  v = v < 0 ? -v : v;
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Monomials (exponent tuples over k variables) of total degree <= d.
std::vector<std::vector<int>> monomials(std::size_t k, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(k, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == k) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(0, d);
  return out;
}

Integer mono_value(const std::vector<int>& mono, const std::vector<int>& pt) {
  Integer v = 1;
  for (std::size_t k = 0; k < mono.size(); ++k) {
    for (int r = 0; r < mono[k]; ++r) v *= pt[k];
  }
  return v;
}

// Rank of integer rows over Q.
std::size_t rank_q(std::vector<std::vector<Rational>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Inverse of a square integer matrix as (adjugate-like integer matrix, den).
std::pair<std::vector<std::vector<Integer>>, Integer> integer_inverse(
    const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (m[piv][c] == 0) ++piv;
    std::swap(m[piv], m[c]);
    Rational inv = 1 / m[c][c];
    for (auto& x : m[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  Integer den = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) den = lcm(den, m[i][n + j].get_den());
  }
  std::vector<std::vector<Integer>> out(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = m[i][n + j] * den;
      out[i][j] = v.get_num();
    }
  }
  return {out, den};
}

LaurentPoly search_degree(const LaurentPoly& p, const std::vector<std::size_t>& vars, int d) {
  const std::size_t k = vars.size();
  auto monos = monomials(k, d);
  const std::size_t N = monos.size();

  // Candidate points, ordered by how few divisor choices they offer.
  struct Cand {
    std::vector<int> pt;
    std::int64_t value;
    std::size_t ndiv;
  };
  std::vector<Cand> cands;
  for (int radius = 2; radius <= 6 && cands.size() < 4 * N + 40; ++radius) {
    cands.clear();
    std::vector<int> pt(k, -radius);
    while (true) {
      std::int64_t v = eval_small(p, vars, pt);
      if (v != 0 && (v < 0 ? -v : v) < (std::int64_t{1} << 40)) {
        cands.push_back({pt, v, divisors(v).size()});
      }
      std::size_t i = 0;
      while (i < k && pt[i] == radius) pt[i++] = -radius;
      if (i == k) break;
      ++pt[i];
    }
  }
  std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.ndiv != b.ndiv) return a.ndiv < b.ndiv;
    return (a.value < 0 ? -a.value : a.value) < (b.value < 0 ? -b.value : b.value);
  });
  std::vector<Cand> chosen;
  std::vector<std::vector<Rational>> rows;
  for (const auto& c : cands) {
    std::vector<Rational> row;
    for (const auto& m : monos) row.emplace_back(mono_value(m, c.pt));
    rows.push_back(row);
    if (rank_q(rows) == rows.size()) {
      chosen.push_back(c);
      if (chosen.size() == N) break;
    } else {
      rows.pop_back();
    }
  }
  if (chosen.size() < N) throw std::runtime_error("find_divisor: no unisolvent point set");

  std::vector<std::vector<Integer>> vand(N, std::vector<Integer>(N));
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) vand[i][j] = mono_value(monos[j], chosen[i].pt);
  }
  auto [inv, den] = integer_inverse(vand);
  // coefficient_j = sum_i inv[j][i] * f(P_i) / den
  std::vector<std::vector<i128>> invs(N, std::vector<i128>(N));
  for (std::size_t j = 0; j < N; ++j) {
    for (std::size_t i = 0; i < N; ++i) {
      if (!inv[j][i].fits_slong_p()) throw std::runtime_error("find_divisor: inverse too large");
      invs[j][i] = inv[j][i].get_si();
    }
  }
  if (!den.fits_slong_p()) throw std::runtime_error("find_divisor: denominator too large");
  const i128 D = den.get_si();

  std::vector<std::vector<std::int64_t>> choices(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (auto dv : divisors(chosen[i].value)) {
      choices[i].push_back(dv);
      if (i > 0) choices[i].push_back(-dv);  // f fixed up to sign by f(P_0) > 0
    }
  }
  std::vector<std::vector<i128>> acc(N + 1, std::vector<i128>(N, 0));
  std::vector<std::size_t> idx(N, 0);
  const int genus = p.genus();
  const std::size_t nv = p.nvars();

  std::function<LaurentPoly(std::size_t)> rec = [&](std::size_t level) -> LaurentPoly {
    if (level == N) {
      std::vector<tka::Exponent> exps;
      std::vector<Integer> coeffs;
      bool nonconstant = false;
      std::size_t nterms = 0;
      for (std::size_t j = 0; j < N; ++j) {
        i128 s = acc[N][j];
        if (s % D != 0) return LaurentPoly(genus);
        i128 c = s / D;
        if (c == 0) continue;
        ++nterms;
        std::vector<tka::Exponent> e(nv, 0);
        int tot = 0;
        for (std::size_t q = 0; q < k; ++q) {
          e[vars[q]] = monos[j][q];
          tot += monos[j][q];
        }
        if (tot > 0) nonconstant = true;
        exps.insert(exps.end(), e.begin(), e.end());
        coeffs.emplace_back(static_cast<long>(c));
      }
      if (!nonconstant || nterms < 2) return LaurentPoly(genus);
      LaurentPoly f = LaurentPoly::from_terms(genus, std::move(exps), std::move(coeffs));
      if (tka::divide_exact(p, f)) return f;
      return LaurentPoly(genus);
    }
    for (std::int64_t v : choices[level]) {
      for (std::size_t j = 0; j < N; ++j) acc[level + 1][j] = acc[level][j] + invs[j][level] * v;
      LaurentPoly f = rec(level + 1);
      if (!f.is_zero()) return f;
    }
    return LaurentPoly(genus);
  };
  return rec(0);
}

}  // namespace

LaurentPoly find_divisor(const LaurentPoly& p) {
  std::vector<std::size_t> vars;
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    if (p.involves(v)) {
      if (p.min_degree(v) < 0) throw std::invalid_argument("find_divisor: negative exponent");
      vars.push_back(v);
    }
  }
  if (vars.empty()) return LaurentPoly(p.genus());
  const auto total = p.total_degree();
  if (total > 4) throw std::invalid_argument("find_divisor: total degree above 4");
  for (int d = 1; 2 * d <= total; ++d) {
    LaurentPoly f = search_degree(p, vars, d);
    if (!f.is_zero()) return f;
  }
  return LaurentPoly(p.genus());
}

}  // namespace oracle

namespace oracle {

LaurentPoly random_irreducible(std::mt19937_64& rng, int genus) {
  const std::size_t n = static_cast<std::size_t>(2 * genus + 1);
  std::uniform_int_distribution<int> nv(1, 3), terms(2, 4), cd(-3, 3), deg(1, 4);
  while (true) {
    std::vector<std::size_t> vars(n);
    std::iota(vars.begin(), vars.end(), std::size_t{0});
    std::shuffle(vars.begin(), vars.end(), rng);
    vars.resize(std::min<std::size_t>(n, static_cast<std::size_t>(nv(rng))));
    const int total = deg(rng);
    std::vector<tka::Exponent> exps;
    std::vector<Integer> coeffs;
    const int nt = terms(rng);
    for (int k = 0; k < nt; ++k) {
      std::vector<tka::Exponent> e(n, 0);
      int left = std::uniform_int_distribution<int>(0, total)(rng);
      for (std::size_t v : vars) {
        int x = std::uniform_int_distribution<int>(0, left)(rng);
        e[v] = x;
        left -= x;
      }
      exps.insert(exps.end(), e.begin(), e.end());
      int c = cd(rng);
      coeffs.emplace_back(c == 0 ? 1 : c);
    }
    LaurentPoly p = LaurentPoly::from_terms(genus, std::move(exps), std::move(coeffs));
    if (p.size() < 2) continue;
    p = tka::normalize_unit(p).first;
    if (tka::content_and_primitive(p).first != 1) continue;
    if (p.total_degree() > 4) continue;
    if (!find_divisor(p).is_zero()) continue;
    return p;
  }
}

std::vector<std::vector<LaurentPoly>> virtual_trefoil_hand_jacobian() {
  auto P = [](const char* s) { return tka::parse_laurent(s, 1); };
  return {{P("-t^-1*x1^-1"), P("1 + t^-1*x1^-1*x2^-1 - x1^-1*x2^-1")},
          {P("1"), P("-t^-1*x1^-1*x2^-1 + t^-1 - 1")}};
}

}  // namespace oracle
