#include <doctest.h>

#include "tka/diagram.hpp"
#include "tka/error.hpp"

using namespace tka;

namespace {

Word W(const char* s) { return parse_word(s); }

const char* kUnknot =
    "tkadiag 1\n"
    "genus 1\n"
    "arcs 1\n"
    "arc 1 : -\n";

const char* kVirtualTrefoil =
    "# virtual trefoil on the torus\n"
    "tkadiag 1\n"
    "genus 1\n"
    "arcs 2\n"
    "arc 1 : x1\n"
    "arc 2 : x2 x1\n"
    "crossing 1 : sign +1 over 2 in 1 out 2 transport X1 X2\n"
    "crossing 2 : sign +1 over 2 in 2 out 1 transport -\n";

}  // namespace

TEST_CASE("parse the crossingless unknot") {
  MarkedDiagram d = parse_diagram(kUnknot);
  CHECK(d.crossing_count() == 0);
  CHECK(d.arc_count() == 1);
  CHECK(d.is_classical());
  Presentation p = wirtinger(d);
  CHECK(p.arcs == 1);
  CHECK(p.genus == 1);
  CHECK(p.relators.empty());
}

TEST_CASE("parse the virtual trefoil") {
  MarkedDiagram d = parse_diagram(kVirtualTrefoil);
  CHECK(d.crossing_count() == 2);
  CHECK(d.decorations[1] == parse_surface_word("x2 x1"));
  CHECK(d.crossings[0].transport == parse_surface_word("X1 X2"));
  CHECK(d == corpus_diagram("virtual_trefoil"));
  CHECK(to_string(d) == std::string(kVirtualTrefoil).substr(std::string(kVirtualTrefoil).find('\n') + 1));
}

TEST_CASE("validation errors") {
  const char* bad_over =
      "tkadiag 1\ngenus 1\narcs 3\narc 1 : -\narc 2 : -\narc 3 : -\n"
      "crossing 1 : sign +1 over 9 in 3 out 1 transport -\n"
      "crossing 2 : sign +1 over 1 in 1 out 2 transport -\n"
      "crossing 3 : sign +1 over 2 in 2 out 3 transport -\n";
  CHECK_THROWS_AS(parse_diagram(bad_over), ValidationError);

  const char* two_cycles =
      "tkadiag 1\ngenus 1\narcs 2\narc 1 : -\narc 2 : -\n"
      "crossing 1 : sign +1 over 2 in 1 out 1 transport -\n"
      "crossing 2 : sign +1 over 1 in 2 out 2 transport -\n";
  CHECK_THROWS_AS(parse_diagram(two_cycles), ValidationError);

  CHECK_THROWS_AS(parse_diagram("tkadiag 1\ngenus 0\narcs 1\narc 1 : -\n"), ValidationError);
  CHECK_THROWS_AS(parse_diagram("tkadiag 1\ngenus 1\narcs 1\narc 1 : x3\n"), ValidationError);
  CHECK_THROWS_AS(parse_diagram("tkadiag 1\ngenus 1\narcs 2\narc 1 : -\narc 2 : -\n"), ValidationError);
  CHECK_THROWS_AS(parse_diagram("tkadiag 1\ngenus 1\narcs 1\n"), ValidationError);

  MarkedDiagram d = corpus_diagram("virtual_trefoil");
  d.crossings[0].sign = 2;
  CHECK_THROWS_AS(d.validate(), ValidationError);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_diagram("tkadiag 1\ngenus 1\narcs 1\narc 1 : x1 y2\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(parse_diagram("tkadiag 2\ngenus 1\narcs 1\narc 1 : -\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("tkadiag 1\ngenus one\narcs 1\narc 1 : -\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("tkadiag 1\ngenus 1\narcs 1\nloop 1 : -\n"), ParseError);
  CHECK_THROWS_AS(parse_diagram("tkadiag 1\ngenus 1\narcs 1\narc 1 : \n"), ParseError);
}

TEST_CASE("wirtinger relators") {
  // Classical crossing: a_j a_o^-1 a_i^-1 a_o.
  MarkedDiagram classical = corpus_diagram("trefoil");
  Presentation p = wirtinger(classical);
  for (std::size_t c = 0; c < classical.crossing_count(); ++c) {
    const Crossing& x = classical.crossings[c];
    CHECK(x.sign == 1);
    Word expect = Word::letter(Generator::arc(x.out)) * Word::letter(Generator::arc(x.over), -1) *
                  Word::letter(Generator::arc(x.in), -1) * Word::letter(Generator::arc(x.over));
    CHECK(p.relators[c] == expect);
  }

  // Transport u = s1 on an undecorated incoming arc.
  MarkedDiagram d;
  d.genus = 1;
  d.decorations = {Word(), Word()};
  d.crossings = {{1, 2, 1, 2, W("s1")}, {1, 1, 2, 1, Word()}};
  Presentation q = wirtinger(d);
  CHECK(q.relators[0] == W("a2 s1 A2 S1 A1 s1 a2 S1"));

  // A decorated incoming arc is conjugated to the crossing.
  MarkedDiagram vt = corpus_diagram("virtual_trefoil");
  Presentation r = wirtinger(vt);
  CHECK(r.relators[0] == W("a2 S1 S2 A2 s2 A1 S2 a2 s2 s1"));
  CHECK(r.relators[1] == W("a1 A2 S1 S2 A2 s2 s1 a2"));
}

TEST_CASE("crossingless curves close up") {
  const MarkedDiagram& d = corpus_diagram("torus_curve");
  CHECK(d.crossing_count() == 0);
  CHECK(d.decorations[0] == W("s1 s2 s1"));
  Presentation p = wirtinger(d);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == W("a1 S1 S2 S1 A1 s1 s2 s1"));
}

TEST_CASE("gauss builder") {
  GaussCode vt = braid_closure(2, "s1 s1 t", true);
  CHECK(from_gauss(vt) == corpus_diagram("virtual_trefoil"));
  CHECK(vt.events.size() == 7);
  CHECK_THROWS_AS(braid_closure(2, "s1 s1", false), DomainError);
  CHECK_THROWS_AS(braid_closure(2, "s2", false), DomainError);
  CHECK_THROWS_AS(braid_closure(2, "q1", false), DomainError);

  MarkedDiagram kink = from_gauss(add_kink(vt, 0, -1, true));
  CHECK(kink.crossing_count() == 3);
  CHECK(kink.crossings[2].sign == -1);

  // Rotation only renumbers arcs.
  MarkedDiagram r = from_gauss(rotate(vt, 3));
  CHECK(r.crossing_count() == 2);
  CHECK(r.decorations[0] == corpus_diagram("virtual_trefoil").decorations[1]);

  GaussCode missing{1, {{GaussEvent::Over, 1, 1}}, {1}};
  CHECK_THROWS_AS(from_gauss(missing), DomainError);
}

TEST_CASE("corpus round trip and fox identity") {
  CHECK(corpus().size() >= 20);
  for (const CorpusEntry& e : corpus()) {
    CAPTURE(e.name);
    CHECK_NOTHROW(e.diagram.validate());
    CHECK(parse_diagram(to_string(e.diagram)) == e.diagram);
    Presentation p = wirtinger(e.diagram);
    for (const LaurentPoly& res : fox_identity_residuals(p)) CHECK(res.is_zero());
    for (const LaurentPoly& img : relator_images(p)) CHECK(img.is_zero());
  }
  for (const CorpusPair& pr : reidemeister_pairs()) {
    CHECK_NOTHROW(corpus_diagram(pr.first));
    CHECK_NOTHROW(corpus_diagram(pr.second));
  }
  CHECK_THROWS_AS(corpus_diagram("nope"), DomainError);
}
