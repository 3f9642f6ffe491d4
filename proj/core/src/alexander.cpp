#include "tka/alexander.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace tka {

unsigned worker_threads() {
  const char* env = std::getenv("TKA_THREADS");
  if (!env) return 1;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == env || *end != '\0' || v < 1) return 1;
  return static_cast<unsigned>(std::min(v, 256L));
}

namespace {

std::vector<std::vector<std::size_t>> row_subsets(std::size_t rows, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == rows - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

}  // namespace

ElementaryIdealResult delta0(const AlexMatrix& m) {
  const int g = m.genus();
  ElementaryIdealResult res{LaurentPoly(g), UnitMonomial::one(static_cast<std::size_t>(2 * g + 1)), 0};
  const std::size_t cols = m.cols();
  if (cols == 0) {
    res.delta0 = LaurentPoly::constant(g, Integer(1));
    return res;
  }
  if (m.rows() == cols) {
    LaurentPoly det = determinant(m);
    if (det.is_zero()) {
      res.rank = rank(m);
      return res;
    }
    res.rank = cols;
    auto [p, u] = normalize_unit(det);
    res.unit = u;
    res.delta0 = std::move(p);
    return res;
  }
  res.rank = rank(m);
  if (res.rank < cols) return res;

  const auto subsets = row_subsets(m.rows(), cols);
  std::vector<LaurentPoly> minors(subsets.size(), LaurentPoly(g));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < subsets.size(); i = next++) {
      minors[i] = determinant(m.select_rows(subsets[i]));
    }
  };
  const unsigned nt = std::min<std::size_t>(worker_threads(), subsets.size());
  if (nt <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nt; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  LaurentPoly acc(g);
  for (const LaurentPoly& d : minors) {
    acc = gcd(acc, d);
    if (acc.is_one()) break;
  }
  res.delta0 = std::move(acc);
  return res;
}

LaurentPoly alexander_poly(const MarkedDiagram& d) { return delta0(jacobian(wirtinger(d))).delta0; }

SanityReport sanity_specializations(const MarkedDiagram& d) {
  SanityReport r;
  const std::size_t n = d.crossing_count();
  if (n == 0) return r;
  r.applicable = true;
  PolyMatrix j = jacobian(wirtinger(d));
  std::vector<Rational> ones(static_cast<std::size_t>(2 * d.genus), Rational(1));
  r.corank_at_one = n - rank_at(j, Rational(1), ones);
  r.corank_one = r.corank_at_one == 1;
  if (!r.corank_one) r.failures.push_back("J(1,1) has corank " + std::to_string(r.corank_at_one) + ", expected 1");
  r.det_x_one_zero = determinant(specialize_x_to_one(j)).is_zero();
  if (!r.det_x_one_zero) r.failures.push_back("det J(t, x:=1) is not identically zero");
  r.delta_x_one_zero = specialize_x_to_one(delta0(j).delta0).is_zero();
  if (!r.delta_x_one_zero) r.failures.push_back("Delta(t, x:=1) is not zero");
  return r;
}

}  // namespace tka
