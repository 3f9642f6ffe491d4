#pragma once

// Free groups on arc generators a_1..a_n and surface generators s_1..s_2g,
// formal integer combinations of words, Fox derivatives, and the coefficient
// map phi: a_k -> t, s_l -> x_l.

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tka/laurent.hpp"
#include "tka/matrix.hpp"

namespace tka {

enum class GenKind { Arc, Surface };

struct Generator {
  GenKind kind = GenKind::Arc;
  int index = 1;  // 1-based

  static Generator arc(int k) { return {GenKind::Arc, k}; }
  static Generator surface(int l) { return {GenKind::Surface, l}; }

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct Letter {
  Generator gen;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word.
class Word {
 public:
  Word() = default;
  /// Reduces the raw letter sequence.
  explicit Word(const std::vector<Letter>& raw);

  static Word letter(Generator g, int exp = 1) { return Word({Letter{g, exp}}); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  std::size_t size() const noexcept { return letters_.size(); }

  Word inverse() const;
  friend Word operator*(const Word& a, const Word& b);

  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const std::vector<Letter>& raw);

/// Letters "a3", "A1" (inverse), "s2", "S2" separated by whitespace; "1" or
/// an empty string is the empty word.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Element of the integral group ring of the free group.
class WordCombination {
 public:
  void add(const Word& w, const Integer& c);
  WordCombination& operator+=(const WordCombination& other);
  /// Left multiplication by a group element.
  WordCombination left_multiply(const Word& u) const;

  const std::map<Word, Integer>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  friend bool operator==(const WordCombination&, const WordCombination&) = default;

 private:
  std::map<Word, Integer> terms_;  // no zero coefficients
};

WordCombination fox_derivative(const Word& w, const Generator& gen);

/// phi on a single word as a unit of the ring of the given genus.
UnitMonomial apply_phi(const Word& w, int genus);
LaurentPoly apply_phi(const WordCombination& c, int genus);
/// phi of a generator as a polynomial: t for arcs, x_l for surface letters.
LaurentPoly phi_generator(const Generator& g, int genus);

struct Presentation {
  int arcs = 0;
  int genus = 0;
  std::vector<Word> relators;

  /// Throws ValidationError when a relator uses an out-of-range generator.
  void validate() const;
  std::vector<Generator> generators() const;
};

/// Rows are relators; columns are the arc generators, followed by the surface
/// generators when arcs_only is false.
PolyMatrix jacobian(const Presentation& p, bool arcs_only = true);

/// For each relator r: sum over all generators of phi(dr/dg) (phi(g) - 1)
/// minus (phi(r) - 1). Zero for every relator by the fundamental formula.
std::vector<LaurentPoly> fox_identity_residuals(const Presentation& p);

/// phi(r) - 1 for each relator; zero when phi kills the relators.
std::vector<LaurentPoly> relator_images(const Presentation& p);

Presentation parse_presentation(std::string_view text);
std::string to_string(const Presentation& p);

}  // namespace tka
