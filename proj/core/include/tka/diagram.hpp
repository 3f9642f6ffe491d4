#pragma once

// Marked diagrams of knots in a thickened surface: arcs carry decoration
// words (the handle curves crossed along the arc), crossings carry a sign and
// a transport word from the over arc's start to the crossing.

#include <string>
#include <string_view>
#include <vector>

#include "tka/fox.hpp"

namespace tka {

struct Crossing {
  int sign = 1;  // +1 or -1
  int over = 1;  // arc indices, 1-based
  int in = 1;
  int out = 1;
  Word transport;  // surface letters only

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

struct MarkedDiagram {
  int genus = 1;
  std::vector<Word> decorations;  // one per arc; surface letters only
  std::vector<Crossing> crossings;

  std::size_t arc_count() const noexcept { return decorations.size(); }
  std::size_t crossing_count() const noexcept { return crossings.size(); }
  /// No decorations and no transports.
  bool is_classical() const;
  /// Throws ValidationError naming the violated invariant.
  void validate() const;

  friend bool operator==(const MarkedDiagram&, const MarkedDiagram&) = default;
};

/// Reads the "tkadiag 1" format and validates the result.
MarkedDiagram parse_diagram(std::string_view text);
std::string to_string(const MarkedDiagram& d);

/// Surface words in the diagram format: "x1 X2" (uppercase is the inverse)
/// or "-" for the empty word.
Word parse_surface_word(std::string_view text);
std::string surface_word_to_string(const Word& w);

/// One relator per crossing c:
///   a_out w^-1 (d_in^-1 a_in d_in)^-1 w,   w = (u a_over u^-1)^sign,
/// where d_in is the decoration of the incoming under arc. A crossingless
/// diagram gives one generator and the single relator a_1 (d^-1 a_1 d)^-1,
/// dropped when it reduces to the empty word (decoration d trivial).
Presentation wirtinger(const MarkedDiagram& d);

// ------------------------------------------------------------- builders

struct GaussEvent {
  enum Kind { Over, Under, Handle };
  Kind kind = Over;
  int index = 1;  // crossing number, or surface letter index for Handle
  int exp = 1;    // direction a handle curve is crossed

  friend bool operator==(const GaussEvent&, const GaussEvent&) = default;
};

/// Cyclic sequence of events met while traversing the knot once.
struct GaussCode {
  int genus = 1;
  std::vector<GaussEvent> events;
  std::vector<int> signs;  // signs[c-1] for crossing c

  friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

/// Arcs run from one under-passage to the next, numbered from the first
/// Under event; decorations and transports are read off the handle events.
MarkedDiagram from_gauss(const GaussCode& code);

/// Closure of a braid on a torus. Tokens: "s<k>" and "S<k>" for sigma_k and
/// its inverse (the lower strand passes over for sigma_k), "t" and "T" for
/// the shear moving every strand up (down) one position, the wrapping strand
/// crossing handle curve x2. With `toroidal`, each strand crosses x1 when it
/// returns to the start of the word; otherwise the closure stays in an
/// annulus. Throws DomainError unless the closure is a knot.
GaussCode braid_closure(int strands, std::string_view word, bool toroidal);

/// Inserts a kink at event position `pos`: a new crossing met twice in a row.
GaussCode add_kink(const GaussCode& code, std::size_t pos, int sign, bool over_first);

/// Renames surface letter l to map[l-1] in every handle event.
GaussCode relabel_handles(const GaussCode& code, int genus, const std::vector<int>& map);

/// Starts the traversal `shift` events later (relabels arcs only).
GaussCode rotate(const GaussCode& code, std::size_t shift);

// --------------------------------------------------------------- corpus

struct CorpusEntry {
  std::string name;
  MarkedDiagram diagram;
};

struct CorpusPair {
  std::string name;
  std::string move;
  std::string first;   // corpus entry names
  std::string second;
};

/// Built-in diagrams, in a fixed order. Names are file stems.
const std::vector<CorpusEntry>& corpus();
const MarkedDiagram& corpus_diagram(std::string_view name);

/// Pairs of corpus diagrams of the same knot related by R1, R2, R3 or a
/// decoration shift.
const std::vector<CorpusPair>& reidemeister_pairs();

}  // namespace tka
