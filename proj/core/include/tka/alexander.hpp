#pragma once

// Order of the Alexander module of a knot in a thickened surface relative to
// the bottom surface, and the checks it must satisfy at x = 1.

#include <string>
#include <vector>

#include "tka/diagram.hpp"
#include "tka/matrix.hpp"

namespace tka {

struct ElementaryIdealResult {
  LaurentPoly delta0;  // unit-normalized, possibly zero
  UnitMonomial unit;   // raw gcd = unit * delta0 (debugging aid)
  std::size_t rank = 0;
};

/// gcd of all maximal (cols x cols) minors; zero when rows < cols or the rank
/// is deficient; one for a matrix without columns. Minors are evaluated on up
/// to worker_threads() threads and folded in subset order.
ElementaryIdealResult delta0(const AlexMatrix& m);

/// Delta of the diagram: wirtinger, arc-column Jacobian, delta0.
LaurentPoly alexander_poly(const MarkedDiagram& d);

struct SanityReport {
  bool applicable = false;  // false for crossingless diagrams
  std::size_t corank_at_one = 0;
  bool corank_one = false;      // J(t=1, x=1) has corank 1
  bool det_x_one_zero = false;  // det J(t, x:=1) == 0
  bool delta_x_one_zero = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

SanityReport sanity_specializations(const MarkedDiagram& d);

/// Bound on worker threads, from TKA_THREADS (default 1).
unsigned worker_threads();

}  // namespace tka
