#include <algorithm>

#include "tka/diagram.hpp"
#include "tka/error.hpp"

namespace tka {

namespace {

GaussEvent O(int c) { return {GaussEvent::Over, c, 1}; }
GaussEvent U(int c) { return {GaussEvent::Under, c, 1}; }
GaussEvent H(int l, int e = 1) { return {GaussEvent::Handle, l, e}; }

// The virtual trefoil on the torus: two positive crossings, the strand
// passing the handle curves x1, x2, x1 once around.
GaussCode virtual_trefoil_code() { return {1, {O(1), U(2), H(1), U(1), O(2), H(2), H(1)}, {1, 1}}; }

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> c;
  auto add = [&](std::string name, const GaussCode& code) { c.push_back({std::move(name), from_gauss(code)}); };
  auto planar = [&](std::string name, int strands, const char* w) {
    add(std::move(name), braid_closure(strands, w, false));
  };
  auto toroidal = [&](std::string name, int strands, const char* w) {
    add(std::move(name), braid_closure(strands, w, true));
  };

  const GaussCode unknot{1, {}, {}};
  add("unknot", unknot);
  add("unknot_r1", add_kink(unknot, 0, 1, true));
  add("unknot_r2", GaussCode{1, {O(1), O(2), U(2), U(1)}, {1, -1}});

  planar("trefoil", 2, "s1 s1 s1");
  planar("figure_eight", 3, "s1 S2 s1 S2");
  planar("cinquefoil", 2, "s1 s1 s1 s1 s1");
  planar("three_twist", 3, "s1 s1 s1 s2 S1 s2");
  planar("stevedore", 4, "s1 s1 s2 S1 S3 s2 S3");
  planar("septafoil", 2, "s1 s1 s1 s1 s1 s1 s1");

  const GaussCode vt = virtual_trefoil_code();
  add("virtual_trefoil", vt);
  add("virtual_trefoil_r1", add_kink(vt, 3, -1, false));
  add("virtual_trefoil_r1b", add_kink(vt, 0, 1, true));
  toroidal("virtual_trefoil_r2", 2, "s1 s1 S1 s1 t");
  toroidal("virtual_trefoil_shift", 2, "s1 t s1");
  toroidal("virtual_trefoil_shift2", 2, "t s1 s1");
  add("virtual_trefoil_g2", relabel_handles(vt, 2, {3, 4}));
  add("virtual_trefoil_g3", relabel_handles(vt, 3, {5, 6}));

  toroidal("torus_curve", 2, "t");
  toroidal("torus_curve_r2", 2, "s1 S1 t");
  toroidal("twisted_r3a", 3, "s1 s2 s1 S2 t");
  toroidal("twisted_r3b", 3, "s2 s1 s2 S2 t");
  toroidal("twisted_r3c", 3, "S1 S2 S1 s2 t");
  toroidal("twisted_r3d", 3, "S2 S1 S2 s2 t");
  toroidal("slide_a", 3, "t s1 T s1");
  toroidal("slide_b", 3, "s2 s1");
  toroidal("double_twist", 3, "s1 s1 s2 s2 t");
  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

const MarkedDiagram& corpus_diagram(std::string_view name) {
  for (const CorpusEntry& e : corpus()) {
    if (e.name == name) return e.diagram;
  }
  throw DomainError("no corpus diagram named '" + std::string(name) + "'");
}

const std::vector<CorpusPair>& reidemeister_pairs() {
  static const std::vector<CorpusPair> pairs = {
      {"unknot kink", "R1", "unknot", "unknot_r1"},
      {"unknot finger move", "R2", "unknot", "unknot_r2"},
      {"virtual trefoil kink", "R1", "virtual_trefoil", "virtual_trefoil_r1"},
      {"virtual trefoil kink, other handedness", "R1", "virtual_trefoil", "virtual_trefoil_r1b"},
      {"virtual trefoil finger move", "R2", "virtual_trefoil", "virtual_trefoil_r2"},
      {"torus curve finger move", "R2", "torus_curve", "torus_curve_r2"},
      {"positive triangle", "R3", "twisted_r3a", "twisted_r3b"},
      {"negative triangle", "R3", "twisted_r3c", "twisted_r3d"},
      {"virtual trefoil, x1 slid across a crossing", "shift", "virtual_trefoil", "virtual_trefoil_shift"},
      {"virtual trefoil, x1 slid across both crossings", "shift", "virtual_trefoil", "virtual_trefoil_shift2"},
      {"x2 slid across a crossing", "shift", "slide_a", "slide_b"},
  };
  return pairs;
}

}  // namespace tka
