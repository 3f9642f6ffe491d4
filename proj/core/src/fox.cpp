#include "tka/fox.hpp"

#include <cctype>
#include <sstream>

#include "tka/error.hpp"

namespace tka {

// ---------------------------------------------------------------- words

Word free_reduce(const std::vector<Letter>& raw) { return Word(raw); }

Word::Word(const std::vector<Letter>& raw) {
  letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.exp != 1 && l.exp != -1) throw DomainError("letter exponent must be +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

Word Word::inverse() const {
  std::vector<Letter> r;
  r.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back(it->inverse());
  Word w;
  w.letters_ = std::move(r);
  return w;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> raw = a.letters_;
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return Word(raw);
}

Word parse_word(std::string_view text) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip();
    if (i != text.size()) throw ParseError("unexpected text after identity word", 1, i + 1);
    return Word();
  }
  while (i < text.size()) {
    const std::size_t start = i;
    char c = text[i];
    GenKind kind;
    int exp;
    switch (c) {
      case 'a': kind = GenKind::Arc; exp = 1; break;
      case 'A': kind = GenKind::Arc; exp = -1; break;
      case 's': kind = GenKind::Surface; exp = 1; break;
      case 'S': kind = GenKind::Surface; exp = -1; break;
      default: throw ParseError(std::string("unexpected character '") + c + "' in word", 1, i + 1);
    }
    ++i;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("expected generator index", 1, i + 1);
    }
    long idx = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      idx = idx * 10 + (text[i] - '0');
      if (idx > 1'000'000) throw ParseError("generator index too large", 1, start + 1);
      ++i;
    }
    if (idx < 1) throw ParseError("generator index must be at least 1", 1, start + 1);
    raw.push_back({Generator{kind, static_cast<int>(idx)}, exp});
    skip();
  }
  return Word(raw);
}

std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    char c = l.gen.kind == GenKind::Arc ? 'a' : 's';
    if (l.exp < 0) c = static_cast<char>(std::toupper(c));
    out += c;
    out += std::to_string(l.gen.index);
  }
  return out;
}

// ------------------------------------------------------- group ring

void WordCombination::add(const Word& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

WordCombination& WordCombination::operator+=(const WordCombination& other) {
  for (const auto& [w, c] : other.terms_) add(w, c);
  return *this;
}

WordCombination WordCombination::left_multiply(const Word& u) const {
  WordCombination r;
  for (const auto& [w, c] : terms_) r.add(u * w, c);
  return r;
}

WordCombination fox_derivative(const Word& w, const Generator& gen) {
  // d(l_1 ... l_k) = sum_i l_1 ... l_{i-1} d(l_i), with da = 1 and
  // d(a^-1) = -a^-1.
  WordCombination r;
  std::vector<Letter> prefix;
  for (const Letter& l : w.letters()) {
    if (l.gen == gen) {
      if (l.exp > 0) {
        r.add(Word(prefix), Integer(1));
      } else {
        std::vector<Letter> p = prefix;
        p.push_back(l);
        r.add(Word(p), Integer(-1));
      }
    }
    prefix.push_back(l);
  }
  return r;
}

// ---------------------------------------------------------------- phi

UnitMonomial apply_phi(const Word& w, int genus) {
  std::vector<Exponent> e(static_cast<std::size_t>(2 * genus + 1), 0);
  for (const Letter& l : w.letters()) {
    if (l.gen.kind == GenKind::Arc) {
      e[0] += l.exp;
    } else {
      if (l.gen.index > 2 * genus) throw DomainError("surface generator out of range for genus");
      e[static_cast<std::size_t>(l.gen.index)] += l.exp;
    }
  }
  return UnitMonomial(1, std::move(e));
}

LaurentPoly apply_phi(const WordCombination& c, int genus) {
  const std::size_t n = static_cast<std::size_t>(2 * genus + 1);
  std::vector<Exponent> exps;
  std::vector<Integer> coeffs;
  exps.reserve(c.terms().size() * n);
  for (const auto& [w, k] : c.terms()) {
    UnitMonomial u = apply_phi(w, genus);
    exps.insert(exps.end(), u.exps().begin(), u.exps().end());
    coeffs.push_back(k);
  }
  return LaurentPoly::from_terms(genus, std::move(exps), std::move(coeffs));
}

LaurentPoly phi_generator(const Generator& g, int genus) {
  return LaurentPoly::from_unit(genus, apply_phi(Word::letter(g), genus));
}

// --------------------------------------------------------- presentations

void Presentation::validate() const {
  if (arcs < 0) throw ValidationError("negative generator count");
  if (genus < 0) throw ValidationError("negative genus");
  for (std::size_t r = 0; r < relators.size(); ++r) {
    for (const Letter& l : relators[r].letters()) {
      const int limit = l.gen.kind == GenKind::Arc ? arcs : 2 * genus;
      if (l.gen.index < 1 || l.gen.index > limit) {
        throw ValidationError("relator " + std::to_string(r + 1) + " uses generator " +
                              to_string(Word::letter(l.gen)) + " outside the presentation");
      }
    }
  }
}

std::vector<Generator> Presentation::generators() const {
  std::vector<Generator> g;
  for (int k = 1; k <= arcs; ++k) g.push_back(Generator::arc(k));
  for (int l = 1; l <= 2 * genus; ++l) g.push_back(Generator::surface(l));
  return g;
}

PolyMatrix jacobian(const Presentation& p, bool arcs_only) {
  p.validate();
  std::vector<Generator> cols = p.generators();
  if (arcs_only) cols.resize(static_cast<std::size_t>(p.arcs));
  PolyMatrix m(p.genus, p.relators.size(), cols.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      m.at(i, j) = apply_phi(fox_derivative(p.relators[i], cols[j]), p.genus);
    }
  }
  return m;
}

std::vector<LaurentPoly> relator_images(const Presentation& p) {
  std::vector<LaurentPoly> out;
  const LaurentPoly one = LaurentPoly::constant(p.genus, Integer(1));
  for (const Word& r : p.relators) out.push_back(LaurentPoly::from_unit(p.genus, apply_phi(r, p.genus)) - one);
  return out;
}

std::vector<LaurentPoly> fox_identity_residuals(const Presentation& p) {
  PolyMatrix full = jacobian(p, false);
  const auto gens = p.generators();
  const LaurentPoly one = LaurentPoly::constant(p.genus, Integer(1));
  auto images = relator_images(p);
  std::vector<LaurentPoly> out;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    LaurentPoly s(p.genus);
    for (std::size_t j = 0; j < gens.size(); ++j) s += full.at(i, j) * (phi_generator(gens[j], p.genus) - one);
    out.push_back(s - images[i]);
  }
  return out;
}

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (!header) {
      std::istringstream ls(line);
      std::string kw;
      long n = -1, g = -1;
      std::string extra;
      if (!(ls >> kw >> n >> g) || kw != "gens" || (ls >> extra)) {
        throw ParseError("expected header 'gens <n> <g>'", lineno, first + 1);
      }
      if (n < 0 || g < 0) throw ParseError("negative count in header", lineno, first + 1);
      p.arcs = static_cast<int>(n);
      p.genus = static_cast<int>(g);
      header = true;
      continue;
    }
    try {
      p.relators.push_back(parse_word(line));
    } catch (const ParseError& e) {
      throw ParseError(e.message(), lineno, e.column());
    }
  }
  if (!header) throw ParseError("missing 'gens' header", lineno, 0);
  p.validate();
  return p;
}

std::string to_string(const Presentation& p) {
  std::string out = "gens " + std::to_string(p.arcs) + " " + std::to_string(p.genus) + "\n";
  for (const Word& r : p.relators) out += to_string(r) + "\n";
  return out;
}

}  // namespace tka
