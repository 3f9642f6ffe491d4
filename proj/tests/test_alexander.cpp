#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "tka/alexander.hpp"
#include "tka/factorize.hpp"

using namespace tka;

namespace {

LaurentPoly P(const char* s, int g = 1) { return parse_laurent(s, g); }

const char* kVirtualTrefoilDelta = "t^2*x1^2*x2 - t^2*x1 - t*x1*x2 + t*x1 + x1*x2 - 1";

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::vector<std::vector<LaurentPoly>> rows(r);
  std::uniform_int_distribution<int> td(0, 3);
  for (auto& row : rows) {
    for (std::size_t j = 0; j < c; ++j) row.push_back(oracle::random_poly(rng, 1, td(rng), -1, 1, 3, 3));
  }
  return PolyMatrix::from_rows(1, rows);
}

}  // namespace

TEST_CASE("delta0 examples") {
  ElementaryIdealResult u = delta0(PolyMatrix(1, 0, 1));
  CHECK(u.delta0.is_zero());
  CHECK(u.rank == 0);
  CHECK(delta0(PolyMatrix::identity(1, 2)).delta0.is_one());
  PolyMatrix d = PolyMatrix::from_rows(1, {{P("t - 1"), P("0")}, {P("0"), P("x1 - 1")}});
  CHECK(delta0(d).delta0 == P("t*x1 - t - x1 + 1"));
  CHECK(delta0(PolyMatrix(1, 3, 0)).delta0.is_one());
  PolyMatrix neg = PolyMatrix::from_rows(1, {{P("-t^-2 + t^-3")}});
  ElementaryIdealResult n = delta0(neg);
  CHECK(n.delta0 == P("t - 1"));
  CHECK(LaurentPoly::from_unit(1, n.unit) * n.delta0 == neg.at(0, 0));
}

TEST_CASE("delta0 agrees with the cofactor oracle") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 80; ++it) {
    std::size_t c = 1 + it % 4;
    std::size_t r = c + (it / 4) % 2;
    PolyMatrix m = random_matrix(rng, r, c);
    ElementaryIdealResult got = delta0(m);
    LaurentPoly want = oracle::brute_delta0(m.to_rows(), 1);
    CHECK(got.delta0 == want);
    CHECK(got.delta0.is_zero() == (got.rank < c));
  }
  for (int it = 0; it < 10; ++it) {
    PolyMatrix m = random_matrix(rng, 5, 5);
    CHECK(delta0(m).delta0 == oracle::brute_delta0(m.to_rows(), 1));
  }
}

TEST_CASE("rank deficiency gives zero") {
  PolyMatrix m = PolyMatrix::from_rows(1, {{P("t"), P("t*x1")}, {P("1"), P("x1")}, {P("x2"), P("x1*x2")}});
  ElementaryIdealResult r = delta0(m);
  CHECK(r.delta0.is_zero());
  CHECK(r.rank == 1);
  CHECK(delta0(PolyMatrix(1, 1, 2)).delta0.is_zero());
}

TEST_CASE("minor fold does not depend on the thread count") {
  std::mt19937_64 rng(32);
  PolyMatrix m = random_matrix(rng, 6, 3);
  LaurentPoly one_thread = delta0(m).delta0;
  setenv("TKA_THREADS", "4", 1);
  CHECK(worker_threads() == 4);
  LaurentPoly four = delta0(m).delta0;
  unsetenv("TKA_THREADS");
  CHECK(worker_threads() == 1);
  CHECK(one_thread == four);
}

TEST_CASE("virtual trefoil regression") {
  LaurentPoly oracle_det = oracle::cofactor_det(oracle::virtual_trefoil_hand_jacobian());
  CHECK(is_associate(oracle_det, P(kVirtualTrefoilDelta)));
  LaurentPoly d = alexander_poly(corpus_diagram("virtual_trefoil"));
  CHECK(d == P(kVirtualTrefoilDelta));
  CHECK(jacobian(wirtinger(corpus_diagram("virtual_trefoil"))).to_rows() == oracle::virtual_trefoil_hand_jacobian());
}

TEST_CASE("classical diagrams have vanishing delta") {
  int count = 0;
  for (const CorpusEntry& e : corpus()) {
    if (!e.diagram.is_classical()) continue;
    CAPTURE(e.name);
    CHECK(alexander_poly(e.diagram).is_zero());
    ++count;
  }
  CHECK(count >= 5);
}

TEST_CASE("sanity specializations on the corpus") {
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.name);
    SanityReport r = sanity_specializations(e.diagram);
    CHECK(r.applicable == (e.diagram.crossing_count() > 0));
    CHECK(r.ok());
    CHECK(specialize_x_to_one(alexander_poly(e.diagram)).is_zero());
  }
  SanityReport kink = sanity_specializations(corpus_diagram("unknot_r1"));
  CHECK(kink.corank_at_one == 1);
  CHECK(!sanity_specializations(corpus_diagram("unknot")).applicable);
}

TEST_CASE("move invariance") {
  CHECK(reidemeister_pairs().size() >= 6);
  int nonzero = 0;
  for (const CorpusPair& p : reidemeister_pairs()) {
    CAPTURE(p.name);
    LaurentPoly a = alexander_poly(corpus_diagram(p.first));
    LaurentPoly b = alexander_poly(corpus_diagram(p.second));
    CHECK(is_associate(a, b));
    nonzero += !a.is_zero();
  }
  CHECK(nonzero >= 6);
}

TEST_CASE("genus relabeling moves the polynomial into other variables") {
  LaurentPoly d = alexander_poly(corpus_diagram("virtual_trefoil_g2"));
  CHECK(d == P("t^2*x3^2*x4 - t^2*x3 - t*x3*x4 + t*x3 + x3*x4 - 1", 2));
}
