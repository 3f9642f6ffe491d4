#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tka/error.hpp"
#include "tka/fox.hpp"

using namespace tka;

namespace {

Word W(const char* s) { return parse_word(s); }
LaurentPoly P(const char* s, int g = 1) { return parse_laurent(s, g); }

Word random_word(std::mt19937_64& rng, int arcs, int surf, int len) {
  std::uniform_int_distribution<int> kd(0, arcs + surf - 1), ed(0, 1);
  std::vector<Letter> raw;
  for (int i = 0; i < len; ++i) {
    int k = kd(rng);
    Generator g = k < arcs ? Generator::arc(k + 1) : Generator::surface(k - arcs + 1);
    raw.push_back({g, ed(rng) ? 1 : -1});
  }
  return Word(raw);
}

// Raw sequence with cancelling pairs spliced in at random places.
std::vector<Letter> padded(std::mt19937_64& rng, const Word& w, int arcs) {
  std::vector<Letter> raw = w.letters();
  std::uniform_int_distribution<int> kd(1, arcs);
  for (int k = 0; k < 4; ++k) {
    std::uniform_int_distribution<std::size_t> pd(0, raw.size());
    Letter l{Generator::arc(kd(rng)), 1};
    auto pos = raw.begin() + static_cast<std::ptrdiff_t>(pd(rng));
    pos = raw.insert(pos, l.inverse());
    raw.insert(pos, l);
  }
  return raw;
}

}  // namespace

TEST_CASE("free reduction") {
  const Generator a1 = Generator::arc(1), a2 = Generator::arc(2), s1 = Generator::surface(1);
  CHECK(free_reduce({{a1, 1}, {a1, -1}}).empty());
  CHECK(free_reduce({{a1, 1}, {s1, 1}, {s1, -1}, {a2, 1}}) == W("a1 a2"));
  CHECK(free_reduce(W("a1 s2 A3").letters()) == W("a1 s2 A3"));
  CHECK(W("a1 a2 A2 A1").empty());
  CHECK(W("1").empty());
  CHECK(W("").empty());
  CHECK(to_string(W("a1 S2")) == "a1 S2");
  CHECK(to_string(Word()) == "1");
  CHECK_THROWS_AS(W("b1"), ParseError);
  CHECK_THROWS_AS(W("a"), ParseError);
  CHECK_THROWS_AS(W("a0"), ParseError);
}

TEST_CASE("fox derivative rules") {
  const Generator a1 = Generator::arc(1);
  WordCombination one;
  one.add(Word(), 1);
  CHECK(fox_derivative(W("a1 a2"), a1) == one);

  WordCombination inv;
  inv.add(W("A1"), -1);
  CHECK(fox_derivative(W("A1"), a1) == inv);

  WordCombination comm;
  comm.add(Word(), 1);
  comm.add(W("a1 a2 A1"), -1);
  CHECK(fox_derivative(W("a1 a2 A1 A2"), a1) == comm);

  CHECK(fox_derivative(W("a2 s1"), a1).is_zero());
}

TEST_CASE("phi on words and combinations") {
  CHECK(apply_phi(W("a1 s2"), 1) == UnitMonomial(1, {1, 0, 1}));
  WordCombination c;
  c.add(Word(), 1);
  c.add(W("a1 a2 A1"), -1);
  CHECK(apply_phi(c, 1) == P("1 - t"));
  WordCombination d;
  d.add(W("A1 S1"), -1);
  CHECK(apply_phi(d, 1) == P("-t^-1*x1^-1"));
  CHECK_THROWS_AS(apply_phi(W("s3"), 1), DomainError);
}

TEST_CASE("jacobian examples") {
  // a2 (s1 a1 S1)^-1: d/da1 = -a2 s1 A1, which phi sends to -t x1 t^-1.
  Presentation p{2, 1, {W("a2 s1 A1 S1")}};
  PolyMatrix j = jacobian(p);
  REQUIRE(j.rows() == 1);
  REQUIRE(j.cols() == 2);
  CHECK(j.at(0, 0) == P("-x1"));
  CHECK(j.at(0, 1) == P("1"));

  Presentation q{2, 1, {W("s1 s2 S1 S2")}};
  CHECK(jacobian(q).is_zero());
  CHECK(jacobian(q).cols() == 2);

  Presentation e{3, 1, {}};
  CHECK(jacobian(e).rows() == 0);
  CHECK(jacobian(e).cols() == 3);

  PolyMatrix full = jacobian(p, false);
  CHECK(full.cols() == 4);
  CHECK(full.at(0, 2) == P("t - 1"));
}

TEST_CASE("presentation validation and text round trip") {
  CHECK_THROWS_AS((Presentation{1, 1, {W("a2")}}).validate(), ValidationError);
  CHECK_THROWS_AS((Presentation{1, 1, {W("s3")}}).validate(), ValidationError);
  Presentation p = parse_presentation("# comment\ngens 2 1\na2 s1 A1 S1\n\na1 A2\n");
  CHECK(p.arcs == 2);
  CHECK(p.genus == 1);
  CHECK(p.relators.size() == 2);
  CHECK(parse_presentation(to_string(p)).relators == p.relators);
  CHECK_THROWS_AS(parse_presentation("gens 2\n"), ParseError);
  CHECK_THROWS_AS(parse_presentation("gens 1 1\na1 q\n"), ParseError);
}

TEST_CASE("product rule holds on random words") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    Word u = random_word(rng, 3, 2, 8);
    Word v = random_word(rng, 3, 2, 8);
    for (int k = 1; k <= 3; ++k) {
      Generator a = Generator::arc(k);
      WordCombination lhs = fox_derivative(u * v, a);
      WordCombination rhs = fox_derivative(u, a);
      rhs += fox_derivative(v, a).left_multiply(u);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("derivative depends only on the reduced word") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    Word w = random_word(rng, 3, 2, 10);
    std::vector<Letter> raw = padded(rng, w, 3);
    // The derivative of the unreduced letter sequence, summed letter by letter.
    for (int k = 1; k <= 3; ++k) {
      Generator a = Generator::arc(k);
      WordCombination direct;
      std::vector<Letter> prefix;
      for (const Letter& l : raw) {
        if (l.gen == a) {
          std::vector<Letter> p = prefix;
          if (l.exp < 0) p.push_back(l);
          direct.add(Word(p), l.exp > 0 ? 1 : -1);
        }
        prefix.push_back(l);
      }
      CHECK(direct == fox_derivative(w, a));
    }
  }
}

TEST_CASE("fundamental identity on random relators") {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    Presentation p{3, 2, {}};
    for (int r = 0; r < 3; ++r) p.relators.push_back(random_word(rng, 3, 4, 12));
    for (const LaurentPoly& res : fox_identity_residuals(p)) CHECK(res.is_zero());
  }
}
