#include "tka/diagram.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <optional>
#include <sstream>

#include "tka/error.hpp"

namespace tka {

// ------------------------------------------------------------ validation

bool MarkedDiagram::is_classical() const {
  for (const Word& w : decorations) {
    if (!w.empty()) return false;
  }
  for (const Crossing& c : crossings) {
    if (!c.transport.empty()) return false;
  }
  return true;
}

namespace {

void check_surface_word(const Word& w, int genus, const std::string& where) {
  for (const Letter& l : w.letters()) {
    if (l.gen.kind != GenKind::Surface) throw ValidationError(where + " contains an arc letter");
    if (l.gen.index < 1 || l.gen.index > 2 * genus) {
      throw ValidationError(where + " uses x" + std::to_string(l.gen.index) + " but genus " +
                            std::to_string(genus) + " has only x1..x" + std::to_string(2 * genus));
    }
  }
}

}  // namespace

void MarkedDiagram::validate() const {
  if (genus < 1) throw ValidationError("genus must be at least 1");
  const std::size_t n = crossings.size();
  const std::size_t arcs = decorations.size();
  if (arcs != (n == 0 ? 1 : n)) {
    throw ValidationError("a diagram with " + std::to_string(n) + " crossings has " +
                          std::to_string(n == 0 ? 1 : n) + " arcs, not " + std::to_string(arcs));
  }
  for (std::size_t k = 0; k < arcs; ++k) {
    check_surface_word(decorations[k], genus, "decoration of arc " + std::to_string(k + 1));
  }
  std::vector<int> in_of(arcs + 1, 0), out_of(arcs + 1, 0);
  for (std::size_t c = 0; c < n; ++c) {
    const Crossing& x = crossings[c];
    const std::string name = "crossing " + std::to_string(c + 1);
    if (x.sign != 1 && x.sign != -1) throw ValidationError(name + ": sign must be +1 or -1");
    for (int a : {x.over, x.in, x.out}) {
      if (a < 1 || static_cast<std::size_t>(a) > arcs) {
        throw ValidationError(name + ": arc index " + std::to_string(a) + " out of range 1.." +
                              std::to_string(arcs));
      }
    }
    check_surface_word(x.transport, genus, name + " transport");
    if (in_of[static_cast<std::size_t>(x.in)] != 0) {
      throw ValidationError("arc " + std::to_string(x.in) + " ends at more than one under-crossing");
    }
    if (out_of[static_cast<std::size_t>(x.out)] != 0) {
      throw ValidationError("arc " + std::to_string(x.out) + " starts at more than one under-crossing");
    }
    in_of[static_cast<std::size_t>(x.in)] = static_cast<int>(c + 1);
    out_of[static_cast<std::size_t>(x.out)] = static_cast<int>(c + 1);
  }
  if (n == 0) return;
  // Following arc -> crossing where it ends -> outgoing arc must visit every
  // arc in one cycle.
  std::size_t arc = 1, steps = 0;
  do {
    arc = static_cast<std::size_t>(crossings[static_cast<std::size_t>(in_of[arc] - 1)].out);
    ++steps;
  } while (arc != 1 && steps <= n);
  if (steps != n) throw ValidationError("arcs do not form a single cycle (the diagram is not a knot)");
}

// ------------------------------------------------------------- text form

Word parse_surface_word(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '-') {
    ++i;
    skip();
    if (i != text.size()) throw ParseError("unexpected text after '-'", 1, i + 1);
    return Word();
  }
  std::vector<Letter> raw;
  while (i < text.size()) {
    const std::size_t start = i;
    const char c = text[i];
    if (c != 'x' && c != 'X') throw ParseError(std::string("expected x or X, found '") + c + "'", 1, i + 1);
    ++i;
    int idx = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), idx);
    if (ec != std::errc() || idx < 1) throw ParseError("expected a positive handle index", 1, i + 1);
    i = static_cast<std::size_t>(ptr - text.data());
    if (idx > 1'000'000) throw ParseError("handle index too large", 1, start + 1);
    raw.push_back({Generator::surface(idx), c == 'x' ? 1 : -1});
    skip();
  }
  if (raw.empty()) throw ParseError("empty word (write '-')", 1, 1);
  return Word(raw);
}

std::string surface_word_to_string(const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.exp > 0 ? 'x' : 'X';
    out += std::to_string(l.gen.index);
  }
  return out;
}

namespace {

class LineReader {
 public:
  LineReader(std::string line, std::size_t lineno) : line_(std::move(line)), lineno_(lineno) {}

  std::size_t lineno() const { return lineno_; }

  [[noreturn]] void fail(const std::string& what, std::size_t col) const { throw ParseError(what, lineno_, col); }

  void skip() {
    while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
  }

  std::string token() {
    skip();
    std::size_t start = pos_;
    while (pos_ < line_.size() && !std::isspace(static_cast<unsigned char>(line_[pos_]))) ++pos_;
    return line_.substr(start, pos_ - start);
  }

  void expect(std::string_view kw) {
    skip();
    std::size_t col = pos_ + 1;
    std::string t = token();
    if (t != kw) fail("expected '" + std::string(kw) + "'", col);
  }

  long integer() {
    skip();
    std::size_t col = pos_ + 1;
    std::string t = token();
    long v = 0;
    const char* b = t.data();
    if (!t.empty() && t[0] == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) fail("expected an integer", col);
    return v;
  }

  // The rest of the line as a surface word.
  Word rest_as_word() {
    skip();
    const std::size_t start = pos_;
    const std::size_t end = line_.size();
    pos_ = end;
    try {
      return parse_surface_word(std::string_view(line_).substr(start, end - start));
    } catch (const ParseError& e) {
      fail(e.message(), start + e.column());
    }
  }

  void finish() {
    skip();
    if (pos_ != line_.size()) fail("unexpected trailing text", pos_ + 1);
  }

 private:
  std::string line_;
  std::size_t lineno_;
  std::size_t pos_ = 0;
};

}  // namespace

MarkedDiagram parse_diagram(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::vector<LineReader> lines;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    lines.emplace_back(raw, lineno);
  }
  if (lines.size() < 3) throw ParseError("expected 'tkadiag 1', 'genus', and 'arcs' lines", lineno, 0);

  LineReader& magic = lines[0];
  magic.expect("tkadiag");
  if (magic.integer() != 1) magic.fail("unsupported format version", 1);
  magic.finish();

  MarkedDiagram d;
  LineReader& gl = lines[1];
  gl.expect("genus");
  long g = gl.integer();
  gl.finish();
  if (g < 1 || g > 1000) throw ValidationError("genus must be at least 1");
  d.genus = static_cast<int>(g);

  LineReader& al = lines[2];
  al.expect("arcs");
  long arcs = al.integer();
  al.finish();
  if (arcs < 1 || arcs > 1'000'000) throw ValidationError("arc count must be positive");

  std::map<long, Word> decorations;
  std::map<long, Crossing> crossings;
  for (std::size_t k = 3; k < lines.size(); ++k) {
    LineReader& l = lines[k];
    std::string kw = l.token();
    if (kw == "arc") {
      long idx = l.integer();
      l.expect(":");
      Word w = l.rest_as_word();
      if (!decorations.emplace(idx, std::move(w)).second) l.fail("arc " + std::to_string(idx) + " given twice", 1);
    } else if (kw == "crossing") {
      long idx = l.integer();
      l.expect(":");
      Crossing c;
      l.expect("sign");
      c.sign = static_cast<int>(l.integer());
      l.expect("over");
      c.over = static_cast<int>(l.integer());
      l.expect("in");
      c.in = static_cast<int>(l.integer());
      l.expect("out");
      c.out = static_cast<int>(l.integer());
      l.expect("transport");
      c.transport = l.rest_as_word();
      if (!crossings.emplace(idx, std::move(c)).second) {
        l.fail("crossing " + std::to_string(idx) + " given twice", 1);
      }
    } else {
      l.fail("expected 'arc' or 'crossing'", 1);
    }
  }
  for (long k = 1; k <= arcs; ++k) {
    auto it = decorations.find(k);
    if (it == decorations.end()) throw ValidationError("arc " + std::to_string(k) + " is missing");
    d.decorations.push_back(it->second);
  }
  if (decorations.size() != static_cast<std::size_t>(arcs)) {
    throw ValidationError("arc index out of range 1.." + std::to_string(arcs));
  }
  for (long k = 1; k <= static_cast<long>(crossings.size()); ++k) {
    auto it = crossings.find(k);
    if (it == crossings.end()) throw ValidationError("crossings must be numbered 1.." + std::to_string(crossings.size()));
    d.crossings.push_back(it->second);
  }
  d.validate();
  return d;
}

std::string to_string(const MarkedDiagram& d) {
  std::string out = "tkadiag 1\ngenus " + std::to_string(d.genus) + "\narcs " +
                    std::to_string(d.decorations.size()) + "\n";
  for (std::size_t k = 0; k < d.decorations.size(); ++k) {
    out += "arc " + std::to_string(k + 1) + " : " + surface_word_to_string(d.decorations[k]) + "\n";
  }
  for (std::size_t c = 0; c < d.crossings.size(); ++c) {
    const Crossing& x = d.crossings[c];
    out += "crossing " + std::to_string(c + 1) + " : sign " + (x.sign > 0 ? "+1" : "-1") + " over " +
           std::to_string(x.over) + " in " + std::to_string(x.in) + " out " + std::to_string(x.out) +
           " transport " + surface_word_to_string(x.transport) + "\n";
  }
  return out;
}

// -------------------------------------------------------------- wirtinger

Presentation wirtinger(const MarkedDiagram& d) {
  d.validate();
  Presentation p;
  p.arcs = static_cast<int>(d.arc_count());
  p.genus = d.genus;
  if (d.crossings.empty()) {
    // The lone arc closes up on itself after crossing its decoration.
    const Word& dec = d.decorations[0];
    const Word a = Word::letter(Generator::arc(1));
    Word r = a * (dec.inverse() * a * dec).inverse();
    if (!r.empty()) p.relators.push_back(r);
    return p;
  }
  for (const Crossing& c : d.crossings) {
    const Word& u = c.transport;
    const Word& dec = d.decorations[static_cast<std::size_t>(c.in - 1)];
    Word over = u * Word::letter(Generator::arc(c.over)) * u.inverse();
    Word w = c.sign > 0 ? over : over.inverse();
    Word in_at_crossing = dec.inverse() * Word::letter(Generator::arc(c.in)) * dec;
    p.relators.push_back(Word::letter(Generator::arc(c.out)) * w.inverse() * in_at_crossing.inverse() * w);
  }
  return p;
}

// --------------------------------------------------------------- builders

MarkedDiagram from_gauss(const GaussCode& code) {
  const std::size_t n = code.signs.size();
  std::vector<int> over_seen(n + 1, 0), under_seen(n + 1, 0);
  std::vector<std::size_t> unders;
  for (std::size_t k = 0; k < code.events.size(); ++k) {
    const GaussEvent& e = code.events[k];
    if (e.kind == GaussEvent::Handle) {
      if (e.index < 1 || e.index > 2 * code.genus || (e.exp != 1 && e.exp != -1)) {
        throw DomainError("bad handle event");
      }
      continue;
    }
    if (e.index < 1 || static_cast<std::size_t>(e.index) > n) throw DomainError("crossing number out of range");
    auto& seen = e.kind == GaussEvent::Over ? over_seen : under_seen;
    if (seen[static_cast<std::size_t>(e.index)]++) throw DomainError("crossing met twice on the same level");
    if (e.kind == GaussEvent::Under) unders.push_back(k);
  }
  for (std::size_t c = 1; c <= n; ++c) {
    if (!over_seen[c] || !under_seen[c]) throw DomainError("crossing " + std::to_string(c) + " not met twice");
  }

  MarkedDiagram d;
  d.genus = code.genus;
  if (n == 0) {
    std::vector<Letter> raw;
    for (const GaussEvent& e : code.events) raw.push_back({Generator::surface(e.index), e.exp});
    d.decorations.push_back(Word(raw));
    d.validate();
    return d;
  }
  d.crossings.resize(n);
  d.decorations.resize(n);
  const std::size_t len = code.events.size();
  for (std::size_t a = 0; a < n; ++a) {
    // Arc a+1 runs from unders[a] to the next Under, cyclically.
    std::vector<Letter> prefix;
    const GaussEvent& start = code.events[unders[a]];
    Crossing& cs = d.crossings[static_cast<std::size_t>(start.index - 1)];
    cs.out = static_cast<int>(a + 1);
    for (std::size_t k = (unders[a] + 1) % len;; k = (k + 1) % len) {
      const GaussEvent& e = code.events[k];
      if (e.kind == GaussEvent::Under) {
        d.crossings[static_cast<std::size_t>(e.index - 1)].in = static_cast<int>(a + 1);
        break;
      }
      if (e.kind == GaussEvent::Handle) {
        prefix.push_back({Generator::surface(e.index), e.exp});
      } else {
        Crossing& c = d.crossings[static_cast<std::size_t>(e.index - 1)];
        c.over = static_cast<int>(a + 1);
        c.transport = Word(prefix).inverse();
      }
    }
    d.decorations[a] = Word(prefix);
  }
  for (std::size_t c = 0; c < n; ++c) d.crossings[c].sign = code.signs[c];
  d.validate();
  return d;
}

GaussCode braid_closure(int strands, std::string_view word, bool toroidal) {
  struct Tok {
    bool shear;
    int k;
    int e;
  };
  std::vector<Tok> toks;
  std::istringstream in{std::string(word)};
  std::string t;
  while (in >> t) {
    if (t == "t" || t == "T") {
      toks.push_back({true, 0, t == "t" ? 1 : -1});
      continue;
    }
    if (t.size() < 2 || (t[0] != 's' && t[0] != 'S')) throw DomainError("bad braid token '" + t + "'");
    int k = 0;
    auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), k);
    if (ec != std::errc() || ptr != t.data() + t.size() || k < 1 || k >= strands) {
      throw DomainError("bad braid token '" + t + "'");
    }
    toks.push_back({false, k, t[0] == 's' ? 1 : -1});
  }

  GaussCode code;
  code.genus = 1;
  std::vector<int> ids(toks.size(), 0);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (!toks[i].shear) {
      code.signs.push_back(toks[i].e);
      ids[i] = static_cast<int>(code.signs.size());
    }
  }
  int p = 1;
  do {
    for (std::size_t i = 0; i < toks.size(); ++i) {
      const Tok& tk = toks[i];
      if (tk.shear) {
        if (tk.e > 0) {
          if (p == strands) {
            code.events.push_back({GaussEvent::Handle, 2, 1});
            p = 1;
          } else {
            ++p;
          }
        } else {
          if (p == 1) {
            code.events.push_back({GaussEvent::Handle, 2, -1});
            p = strands;
          } else {
            --p;
          }
        }
        continue;
      }
      if (p == tk.k) {
        code.events.push_back({tk.e > 0 ? GaussEvent::Over : GaussEvent::Under, ids[i], 1});
        p = tk.k + 1;
      } else if (p == tk.k + 1) {
        code.events.push_back({tk.e > 0 ? GaussEvent::Under : GaussEvent::Over, ids[i], 1});
        p = tk.k;
      }
    }
    if (toroidal) code.events.push_back({GaussEvent::Handle, 1, 1});
  } while (p != 1);
  std::size_t crossings_met = 0;
  for (const GaussEvent& e : code.events) crossings_met += e.kind != GaussEvent::Handle;
  if (crossings_met != 2 * code.signs.size()) throw DomainError("braid closure is not a knot");
  return code;
}

GaussCode add_kink(const GaussCode& code, std::size_t pos, int sign, bool over_first) {
  if (pos > code.events.size()) throw DomainError("kink position out of range");
  GaussCode r = code;
  r.signs.push_back(sign);
  const int c = static_cast<int>(r.signs.size());
  GaussEvent a{over_first ? GaussEvent::Over : GaussEvent::Under, c, 1};
  GaussEvent b{over_first ? GaussEvent::Under : GaussEvent::Over, c, 1};
  auto it = r.events.insert(r.events.begin() + static_cast<std::ptrdiff_t>(pos), b);
  r.events.insert(it, a);
  return r;
}

GaussCode relabel_handles(const GaussCode& code, int genus, const std::vector<int>& map) {
  GaussCode r = code;
  r.genus = genus;
  for (GaussEvent& e : r.events) {
    if (e.kind == GaussEvent::Handle) e.index = map.at(static_cast<std::size_t>(e.index - 1));
  }
  return r;
}

GaussCode rotate(const GaussCode& code, std::size_t shift) {
  GaussCode r = code;
  if (!r.events.empty()) {
    std::rotate(r.events.begin(), r.events.begin() + static_cast<std::ptrdiff_t>(shift % r.events.size()),
                r.events.end());
  }
  return r;
}

}  // namespace tka
