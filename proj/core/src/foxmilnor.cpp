#include "tka/foxmilnor.hpp"

#include <algorithm>
#include <future>

#include "tka/alexander.hpp"
#include "tka/error.hpp"
#include "tka/factorize.hpp"

namespace tka {

const char* to_string(FMStatus s) {
  switch (s) {
    case FMStatus::Pass: return "pass";
    case FMStatus::Fail: return "fail";
    case FMStatus::Vacuous: return "vacuous";
  }
  return "?";
}

const char* to_string(FMReason r) {
  switch (r) {
    case FMReason::OddSelfConjugate: return "odd-self-conjugate";
    case FMReason::ConjugateMismatch: return "conjugate-mismatch";
    case FMReason::ZeroMismatch: return "zero-mismatch";
  }
  return "?";
}

namespace {

std::pair<LaurentPoly, LaurentPoly> common_ring(const LaurentPoly& a, const LaurentPoly& b) {
  const int g = std::max(a.genus(), b.genus());
  return {a.with_genus(g), b.with_genus(g)};
}

Integer value_at_minus_one(const LaurentPoly& p) {
  std::vector<Rational> xs(p.nvars() - 1, Rational(1));
  Rational v = evaluate(p, Rational(-1), xs);
  return v.get_num();
}

std::pair<Factorization, Factorization> factor_both(const LaurentPoly& a, const LaurentPoly& b) {
  if (worker_threads() > 1) {
    auto fa = std::async(std::launch::async, [&] { return factor(a); });
    Factorization fb = factor(b);
    return {fa.get(), std::move(fb)};
  }
  return {factor(a), factor(b)};
}

int lookup(const std::vector<std::pair<LaurentPoly, int>>& net, const LaurentPoly& f) {
  auto it = std::lower_bound(net.begin(), net.end(), f,
                             [](const auto& e, const LaurentPoly& key) { return canonical_less(e.first, key); });
  return it != net.end() && it->first == f ? it->second : 0;
}

}  // namespace

bool square_pretest(const LaurentPoly& d0, const LaurentPoly& d1) {
  if (d0.is_zero() || d1.is_zero()) throw DomainError("square pretest needs nonzero polynomials");
  Integer v = abs(value_at_minus_one(d0) * value_at_minus_one(d1));
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

std::vector<std::pair<LaurentPoly, int>> net_exponents(const LaurentPoly& d0, const LaurentPoly& d1) {
  if (d0.is_zero() || d1.is_zero()) throw DomainError("net exponents need nonzero polynomials");
  auto [a, b] = common_ring(d0, d1);
  auto [fa, fb] = factor_both(a, b);
  // Both factor lists are sorted by canonical_less: merge.
  std::vector<std::pair<LaurentPoly, int>> out;
  std::size_t i = 0, j = 0;
  while (i < fa.factors.size() || j < fb.factors.size()) {
    if (j == fb.factors.size() || (i < fa.factors.size() && canonical_less(fa.factors[i].first, fb.factors[j].first))) {
      out.push_back(fa.factors[i++]);
    } else if (i == fa.factors.size() || canonical_less(fb.factors[j].first, fa.factors[i].first)) {
      out.emplace_back(fb.factors[j].first, -fb.factors[j].second);
      ++j;
    } else {
      const int n = fa.factors[i].second - fb.factors[j].second;
      if (n != 0) out.emplace_back(fa.factors[i].first, n);
      ++i;
      ++j;
    }
  }
  return out;
}

FMVerdict fm_check(const LaurentPoly& d0_in, const LaurentPoly& d1_in) {
  auto [d0, d1] = common_ring(d0_in, d1_in);
  const int g = d0.genus();
  const LaurentPoly one = LaurentPoly::constant(g, Integer(1));
  FMVerdict v;
  if (d0.is_zero() && d1.is_zero()) {
    v.status = FMStatus::Vacuous;
    v.witness = FMWitness{one, one};
    return v;
  }
  if (d0.is_zero() || d1.is_zero()) {
    v.status = FMStatus::Fail;
    v.certificate = FMCertificate{LaurentPoly(g), 0, FMReason::ZeroMismatch};
    return v;
  }
  v.pretest = square_pretest(d0, d1);

  const std::vector<std::pair<LaurentPoly, int>> net = net_exponents(d0, d1);
  LaurentPoly p = one, q = one;
  for (const auto& [f, n] : net) {
    const LaurentPoly fc = normalize_unit(conj(f)).first;
    if (fc == f) {
      if (n % 2 != 0) {
        v.certificate = FMCertificate{f, n, FMReason::OddSelfConjugate};
        break;
      }
      (n > 0 ? p : q) *= pow(f, static_cast<unsigned>(std::abs(n) / 2));
      continue;
    }
    if (lookup(net, fc) != n) {
      v.certificate = FMCertificate{f, n, FMReason::ConjugateMismatch};
      break;
    }
    // Each conjugate pair contributes once, through its smaller member.
    if (canonical_less(f, fc)) (n > 0 ? p : q) *= pow(f, static_cast<unsigned>(std::abs(n)));
  }
  if (v.certificate) {
    v.status = FMStatus::Fail;
    return v;
  }
  if (!is_associate(d0 * q * conj(q), d1 * p * conj(p))) {
    throw InternalError("Fox-Milnor witness does not satisfy the identity");
  }
  if (!*v.pretest) throw InternalError("square pretest rejected a passing pair");
  v.status = FMStatus::Pass;
  v.witness = FMWitness{normalize_unit(p).first, normalize_unit(q).first};
  return v;
}

FMVerdict fm_check_diagrams(const MarkedDiagram& a, const MarkedDiagram& b) {
  if (a.genus != b.genus) {
    throw ContextMismatch("diagrams on surfaces of genus " + std::to_string(a.genus) + " and " +
                          std::to_string(b.genus));
  }
  return fm_check(alexander_poly(a), alexander_poly(b));
}

}  // namespace tka
