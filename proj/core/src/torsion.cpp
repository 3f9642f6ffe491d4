#include "tka/torsion.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>

#include "tka/alexander.hpp"
#include "tka/error.hpp"

namespace tka {

// ---------------------------------------------------------------- values

TorsionValue TorsionValue::make(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DomainError("torsion value with zero denominator");
  if (num.genus() != den.genus()) throw ContextMismatch("torsion value across rings");
  if (num.is_zero()) return {num, LaurentPoly::constant(num.genus(), Integer(1))};
  LaurentPoly g = gcd(num, den);
  LaurentPoly n = *divide_exact(num, g);
  LaurentPoly d = *divide_exact(den, g);
  return {normalize_unit(n).first, normalize_unit(d).first};
}

TorsionValue TorsionValue::one(int genus) {
  return {LaurentPoly::constant(genus, Integer(1)), LaurentPoly::constant(genus, Integer(1))};
}

TorsionValue operator*(const TorsionValue& a, const TorsionValue& b) {
  return TorsionValue::make(a.num * b.num, a.den * b.den);
}

std::string to_string(const TorsionValue& v) { return to_string(v.num) + " / " + to_string(v.den); }

TorsionValue dual_conj(const TorsionValue& v, int n) {
  TorsionValue c = TorsionValue::make(conj(v.num), conj(v.den));
  return n % 2 == 0 ? c.inverse() : c;
}

// ------------------------------------------------------------- complexes

void BasedComplex::validate() const {
  if (ranks.empty()) throw ValidationError("complex without any chain group");
  if (boundaries.size() != ranks.size() - 1) {
    throw ValidationError("a complex of length " + std::to_string(ranks.size() - 1) + " needs " +
                          std::to_string(ranks.size() - 1) + " boundary maps");
  }
  for (std::size_t k = 1; k <= top(); ++k) {
    const PolyMatrix& m = d(k);
    if (m.genus() != genus) throw ContextMismatch("boundary map from a different ring");
    if (m.rows() != ranks[k] || m.cols() != ranks[k - 1]) {
      throw ValidationError("boundary " + std::to_string(k) + " has shape " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", expected " + std::to_string(ranks[k]) + "x" +
                            std::to_string(ranks[k - 1]));
    }
  }
  for (std::size_t k = 1; k < top(); ++k) {
    if (!(d(k + 1) * d(k)).is_zero()) {
      throw ValidationError("boundary composite d" + std::to_string(k + 1) + " d" + std::to_string(k) + " is not zero");
    }
  }
}

namespace {

// Lexicographically first set of independent rows of m, scanning in `order`.
std::vector<std::size_t> independent_rows(const PolyMatrix& m, const std::vector<std::size_t>& order,
                                          std::size_t want) {
  std::vector<std::size_t> chosen;
  for (std::size_t i : order) {
    if (chosen.size() == want) break;
    chosen.push_back(i);
    if (rank(m.select_rows(chosen)) < chosen.size()) chosen.pop_back();
  }
  return chosen;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& s) {
  std::vector<bool> in(n, false);
  for (std::size_t i : s) in[i] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!in[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> identity_order(std::size_t n) {
  std::vector<std::size_t> o(n);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

}  // namespace

TorsionValue torsion(const BasedComplex& c) {
  std::vector<std::vector<std::size_t>> orders;
  for (std::size_t r : c.ranks) orders.push_back(identity_order(r));
  return torsion(c, orders);
}

TorsionValue torsion(const BasedComplex& c, const std::vector<std::vector<std::size_t>>& row_orders) {
  c.validate();
  const std::size_t m = c.top();
  if (row_orders.size() != m + 1) throw DomainError("one row order per chain group is required");
  std::vector<std::size_t> r(m + 2, 0);  // r[k] = rank of d_k; r[0] = r[m+1] = 0
  for (std::size_t k = 1; k <= m; ++k) r[k] = rank(c.d(k));
  for (std::size_t k = 0; k <= m; ++k) {
    if (c.ranks[k] != r[k] + r[k + 1]) {
      throw NotAcyclic("complex is not acyclic in degree " + std::to_string(k), static_cast<int>(k));
    }
  }
  TorsionValue tau = TorsionValue::one(c.genus);
  std::vector<std::size_t> prev_chosen;  // S_{k-1}; S_0 is empty
  for (std::size_t k = 1; k <= m; ++k) {
    const PolyMatrix& dk = c.d(k);
    std::vector<std::size_t> chosen = independent_rows(dk, row_orders[k], r[k]);
    if (chosen.size() != r[k]) throw InternalError("torsion: row selection fell short of the rank");
    const std::vector<std::size_t> cols = complement(c.ranks[k - 1], prev_chosen);
    LaurentPoly det = determinant(dk.select_rows(chosen).select_cols(cols));
    if (det.is_zero()) throw InternalError("torsion: selected block is singular");
    const LaurentPoly one = LaurentPoly::constant(c.genus, Integer(1));
    tau = tau * (k % 2 == 1 ? TorsionValue::make(det, one) : TorsionValue::make(one, det));
    prev_chosen = std::move(chosen);
  }
  return tau;
}

LaurentPoly alexander_function(const AlexMatrix& m) {
  const int g = m.genus();
  if (m.cols() == 0) return LaurentPoly::constant(g, Integer(1));
  if (rank(m) < m.cols()) return LaurentPoly(g);
  if (m.rows() == m.cols()) {
    // Injective square boundary C_1 -> C_0: the order is the torsion.
    BasedComplex c{g, {m.cols(), m.rows()}, {m}};
    return torsion(c).num;
  }
  return delta0(m).delta0;
}

// ------------------------------------------------------ multiplicativity

bool check_multiplicativity(const ShortExactSequence& s) {
  s.sub.validate();
  s.total.validate();
  s.quotient.validate();
  const std::size_t m = s.total.top();
  if (s.sub.top() != m || s.quotient.top() != m) throw NotExact("complexes of different lengths");
  if (s.incl.size() != m + 1 || s.proj.size() != m + 1) throw NotExact("one inclusion and projection per degree");
  for (std::size_t k = 0; k <= m; ++k) {
    const PolyMatrix& i = s.incl[k];
    const PolyMatrix& p = s.proj[k];
    const std::string deg = " in degree " + std::to_string(k);
    if (i.rows() != s.sub.ranks[k] || i.cols() != s.total.ranks[k]) throw NotExact("inclusion has the wrong shape" + deg);
    if (p.rows() != s.total.ranks[k] || p.cols() != s.quotient.ranks[k]) {
      throw NotExact("projection has the wrong shape" + deg);
    }
    if (s.sub.ranks[k] + s.quotient.ranks[k] != s.total.ranks[k]) throw NotExact("ranks do not add up" + deg);
    if (!(i * p).is_zero()) throw NotExact("projection does not kill the image of the inclusion" + deg);
    if (rank(i) != i.rows()) throw NotExact("inclusion is not injective" + deg);
    if (rank(p) != p.cols()) throw NotExact("projection is not surjective" + deg);
    if (k >= 1) {
      if (s.sub.d(k) * s.incl[k - 1] != s.incl[k] * s.total.d(k)) {
        throw NotExact("inclusion does not commute with the boundary" + deg);
      }
      if (s.total.d(k) * s.proj[k - 1] != s.proj[k] * s.quotient.d(k)) {
        throw NotExact("projection does not commute with the boundary" + deg);
      }
    }
    // Basis compatibility: with rows R of p forming a basis of the
    // quotient, the change of basis from (incl, lifts) to the total basis has
    // determinant det(i[:, not R]) / det(p[R, :]), which must be a unit.
    std::vector<std::size_t> rows = independent_rows(p, identity_order(p.rows()), p.cols());
    std::vector<std::size_t> rest = complement(p.rows(), rows);
    LaurentPoly dp = determinant(p.select_rows(rows));
    LaurentPoly di = determinant(i.select_cols(rest));
    if (di.is_zero() || !TorsionValue::make(di, dp).is_unit()) {
      throw NotExact("bases of the sequence are not compatible" + deg);
    }
  }
  TorsionValue lhs = torsion(s.total);
  TorsionValue rhs = torsion(s.sub) * torsion(s.quotient);
  return lhs.associate(rhs);
}

// ------------------------------------------------------------- text form

BasedComplex parse_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  struct Line {
    std::string text;
    std::size_t no;
  };
  std::vector<Line> lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.back() == '\r') line.pop_back();
    lines.push_back({line, lineno});
  }
  std::size_t at = 0;
  auto need = [&](const char* what) -> const Line& {
    if (at >= lines.size()) throw ParseError(std::string("expected ") + what, lineno + 1, 1);
    return lines[at++];
  };
  {
    const Line& l = need("'tkacplx 1'");
    std::istringstream ls(l.text);
    std::string kw, extra;
    int v = 0;
    if (!(ls >> kw >> v) || kw != "tkacplx" || v != 1 || (ls >> extra)) {
      throw ParseError("expected 'tkacplx 1'", l.no, 1);
    }
  }
  std::optional<int> genus;
  std::vector<std::size_t> ranks_desc;
  {
    const Line& l = need("'ranks'");
    std::istringstream ls(l.text);
    std::string kw;
    ls >> kw;
    if (kw == "genus") {
      int g = 0;
      std::string extra;
      if (!(ls >> g) || g < 1 || (ls >> extra)) throw ParseError("expected 'genus <g>' with g >= 1", l.no, 1);
      genus = g;
      const Line& l2 = need("'ranks'");
      ls = std::istringstream(l2.text);
      ls >> kw;
      if (kw != "ranks") throw ParseError("expected 'ranks'", l2.no, 1);
    } else if (kw != "ranks") {
      throw ParseError("expected 'ranks'", l.no, 1);
    }
    long r = 0;
    while (ls >> r) {
      if (r < 0) throw ParseError("negative rank", lines[at - 1].no, 1);
      ranks_desc.push_back(static_cast<std::size_t>(r));
    }
    if (!ls.eof()) throw ParseError("ranks must be nonnegative integers", lines[at - 1].no, 1);
    if (ranks_desc.empty()) throw ParseError("at least one rank is required", lines[at - 1].no, 1);
  }
  BasedComplex c;
  c.ranks.assign(ranks_desc.rbegin(), ranks_desc.rend());
  const std::size_t m = c.top();
  std::vector<std::vector<std::vector<std::string>>> raw(m + 1);
  std::vector<bool> seen(m + 1, false);
  std::vector<std::vector<std::size_t>> raw_lines(m + 1);
  while (at < lines.size()) {
    const Line& l = lines[at++];
    std::istringstream ls(l.text);
    std::string kw, extra;
    long k = 0;
    if (!(ls >> kw >> k) || kw != "boundary" || (ls >> extra)) throw ParseError("expected 'boundary <k>'", l.no, 1);
    if (k < 1 || static_cast<std::size_t>(k) > m) {
      throw ParseError("boundary index out of range 1.." + std::to_string(m), l.no, 1);
    }
    if (seen[static_cast<std::size_t>(k)]) throw ParseError("boundary " + std::to_string(k) + " given twice", l.no, 1);
    seen[static_cast<std::size_t>(k)] = true;
    for (std::size_t row = 0; row < c.ranks[static_cast<std::size_t>(k)]; ++row) {
      const Line& rl = need("a matrix row");
      std::vector<std::string> entries;
      std::string t = rl.text;
      std::size_t first = t.find_first_not_of(" \t");
      if (t.compare(first, std::string::npos, "-") != 0 &&
          t.substr(first).find_first_not_of(" \t-") != std::string::npos) {
        std::size_t start = 0;
        while (true) {
          std::size_t semi = t.find(';', start);
          entries.push_back(t.substr(start, semi == std::string::npos ? std::string::npos : semi - start));
          if (semi == std::string::npos) break;
          start = semi + 1;
        }
      }
      raw[static_cast<std::size_t>(k)].push_back(std::move(entries));
      raw_lines[static_cast<std::size_t>(k)].push_back(rl.no);
    }
  }
  for (std::size_t k = 1; k <= m; ++k) {
    if (!seen[k]) throw ParseError("boundary " + std::to_string(k) + " is missing", lineno, 0);
  }
  if (!genus) {
    int g = 1;
    for (const auto& b : raw) {
      for (const auto& row : b) {
        for (const auto& e : row) g = std::max(g, genus_needed(e));
      }
    }
    genus = g;
  }
  c.genus = *genus;
  for (std::size_t k = 1; k <= m; ++k) {
    PolyMatrix mat(c.genus, c.ranks[k], c.ranks[k - 1]);
    for (std::size_t i = 0; i < raw[k].size(); ++i) {
      const auto& row = raw[k][i];
      if (row.size() != c.ranks[k - 1]) {
        throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                             std::to_string(c.ranks[k - 1]),
                         raw_lines[k][i], 1);
      }
      for (std::size_t j = 0; j < row.size(); ++j) {
        try {
          mat.at(i, j) = parse_laurent(row[j], c.genus);
        } catch (const ParseError& e) {
          throw ParseError(e.message(), raw_lines[k][i], e.column());
        }
      }
    }
    c.boundaries.push_back(std::move(mat));
  }
  c.validate();
  return c;
}

std::string to_string(const BasedComplex& c) {
  std::string out = "tkacplx 1\ngenus " + std::to_string(c.genus) + "\nranks";
  for (auto it = c.ranks.rbegin(); it != c.ranks.rend(); ++it) out += " " + std::to_string(*it);
  out += "\n";
  for (std::size_t k = c.top(); k >= 1; --k) {
    out += "boundary " + std::to_string(k) + "\n";
    const PolyMatrix& m = c.d(k);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (m.cols() == 0) out += "-";
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (j > 0) out += " ; ";
        out += to_string(m.at(i, j));
      }
      out += "\n";
    }
  }
  return out;
}

// ------------------------------------------------------------ generators

namespace {

LaurentPoly small_poly(std::mt19937_64& rng, int genus) {
  const std::size_t n = static_cast<std::size_t>(2 * genus + 1);
  const std::size_t used = std::min<std::size_t>(n, 3);
  std::uniform_int_distribution<int> td(1, 2), ed(-1, 1), cd(1, 2), sd(0, 1);
  const int terms = td(rng);
  std::vector<Exponent> exps;
  std::vector<Integer> coeffs;
  for (int k = 0; k < terms; ++k) {
    for (std::size_t v = 0; v < n; ++v) exps.push_back(v < used ? ed(rng) : 0);
    coeffs.emplace_back(sd(rng) ? cd(rng) : -cd(rng));
  }
  return LaurentPoly::from_terms(genus, std::move(exps), std::move(coeffs));
}

PolyMatrix random_matrix(std::mt19937_64& rng, int genus, std::size_t r, std::size_t c, double density) {
  PolyMatrix m(genus, r, c);
  std::bernoulli_distribution fill(density);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (fill(rng)) m.at(i, j) = small_poly(rng, genus);
    }
  }
  return m;
}

PolyMatrix random_nonsingular(std::mt19937_64& rng, int genus, std::size_t n) {
  while (true) {
    PolyMatrix m = random_matrix(rng, genus, n, n, 0.7);
    if (!determinant(m).is_zero()) return m;
  }
}

// Unipotent lower triangular matrix and its inverse.
std::pair<PolyMatrix, PolyMatrix> random_unipotent(std::mt19937_64& rng, int genus, std::size_t n) {
  PolyMatrix l = PolyMatrix::identity(genus, n);
  std::bernoulli_distribution fill(0.4);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (fill(rng)) l.at(i, j) = small_poly(rng, genus);
    }
  }
  // (I + N)^-1 = I - N + N^2 - ... with N nilpotent.
  PolyMatrix nil = l - PolyMatrix::identity(genus, n);
  PolyMatrix inv = PolyMatrix::identity(genus, n);
  PolyMatrix power = PolyMatrix::identity(genus, n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * nil;
    inv = k % 2 == 1 ? inv - power : inv + power;
  }
  return {l, inv};
}

// Block matrix [[a, b], [c, d]].
PolyMatrix blocks(const PolyMatrix& a, const PolyMatrix& b, const PolyMatrix& c, const PolyMatrix& d, int genus) {
  PolyMatrix m(genus, a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&](const PolyMatrix& x, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < x.rows(); ++i) {
      for (std::size_t j = 0; j < x.cols(); ++j) m.at(r0 + i, c0 + j) = x.at(i, j);
    }
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return m;
}

}  // namespace

BasedComplex random_acyclic_complex(std::mt19937_64& rng, int genus, std::size_t length) {
  std::uniform_int_distribution<std::size_t> sz(1, 2);
  if (length == 1) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    return {genus, {r, r}, {random_nonsingular(rng, genus, r)}};
  }
  if (length != 2) throw DomainError("random complexes have length 1 or 2");
  // d2 = [A | A X], d1 = [[-X B], [B]].
  const std::size_t a = sz(rng), b = sz(rng);
  PolyMatrix A = random_nonsingular(rng, genus, a);
  PolyMatrix B = random_nonsingular(rng, genus, b);
  PolyMatrix X = random_matrix(rng, genus, a, b, 0.6);
  PolyMatrix d2(genus, a, a + b), d1(genus, a + b, b);
  PolyMatrix AX = A * X, XB = X * B;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) d2.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < b; ++j) d2.at(i, a + j) = AX.at(i, j);
    for (std::size_t j = 0; j < b; ++j) d1.at(i, j) = -XB.at(i, j);
  }
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) d1.at(a + i, j) = B.at(i, j);
  }
  return {genus, {b, a + b, a}, {d1, d2}};
}

ShortExactSequence split_sequence(const BasedComplex& sub, const BasedComplex& quotient) {
  ShortExactSequence s;
  s.sub = sub;
  s.quotient = quotient;
  s.total = direct_sum(sub, quotient);
  const int g = sub.genus;
  for (std::size_t k = 0; k <= sub.top(); ++k) {
    const std::size_t a = sub.ranks[k], b = quotient.ranks[k];
    s.incl.push_back(blocks(PolyMatrix::identity(g, a), PolyMatrix(g, a, b), PolyMatrix(g, 0, a), PolyMatrix(g, 0, b), g));
    s.proj.push_back(blocks(PolyMatrix(g, a, b), PolyMatrix(g, a, 0), PolyMatrix::identity(g, b), PolyMatrix(g, b, 0), g));
  }
  return s;
}

ShortExactSequence random_extension(std::mt19937_64& rng, const BasedComplex& sub, const BasedComplex& quotient) {
  if (sub.top() != quotient.top()) throw DomainError("extension of complexes of different lengths");
  if (sub.genus != quotient.genus) throw ContextMismatch("extension across rings");
  const int g = sub.genus;
  const std::size_t m = sub.top();
  ShortExactSequence s = split_sequence(sub, quotient);
  // h_k : quotient_k -> sub_k; e_k = h_k d'_k - d''_k h_{k-1}.
  std::vector<PolyMatrix> h;
  for (std::size_t k = 0; k <= m; ++k) h.push_back(random_matrix(rng, g, quotient.ranks[k], sub.ranks[k], 0.5));
  for (std::size_t k = 1; k <= m; ++k) {
    PolyMatrix e = h[k] * sub.d(k) - quotient.d(k) * h[k - 1];
    s.total.boundaries[k - 1] = blocks(sub.d(k), PolyMatrix(g, sub.ranks[k], quotient.ranks[k - 1]), e, quotient.d(k), g);
  }
  // New coordinates v -> v G_k: d_k -> G_k^-1 d_k G_{k-1}, i_k -> i_k G_k,
  // p_k -> G_k^-1 p_k. det G_k = 1 keeps the bases compatible.
  std::vector<std::pair<PolyMatrix, PolyMatrix>> gs;
  for (std::size_t k = 0; k <= m; ++k) gs.push_back(random_unipotent(rng, g, s.total.ranks[k]));
  for (std::size_t k = 1; k <= m; ++k) {
    s.total.boundaries[k - 1] = gs[k].second * s.total.boundaries[k - 1] * gs[k - 1].first;
  }
  for (std::size_t k = 0; k <= m; ++k) {
    s.incl[k] = s.incl[k] * gs[k].first;
    s.proj[k] = gs[k].second * s.proj[k];
  }
  return s;
}

BasedComplex direct_sum(const BasedComplex& a, const BasedComplex& b) {
  if (a.top() != b.top()) throw DomainError("direct sum of complexes of different lengths");
  if (a.genus != b.genus) throw ContextMismatch("direct sum across rings");
  const int g = a.genus;
  BasedComplex c{g, {}, {}};
  for (std::size_t k = 0; k <= a.top(); ++k) c.ranks.push_back(a.ranks[k] + b.ranks[k]);
  for (std::size_t k = 1; k <= a.top(); ++k) {
    c.boundaries.push_back(blocks(a.d(k), PolyMatrix(g, a.ranks[k], b.ranks[k - 1]),
                                  PolyMatrix(g, b.ranks[k], a.ranks[k - 1]), b.d(k), g));
  }
  return c;
}

BasedComplex acyclic_extension(const BasedComplex& c, std::size_t k) {
  if (k < 1 || k > c.top()) throw DomainError("extension degree out of range");
  const int g = c.genus;
  BasedComplex e{g, std::vector<std::size_t>(c.ranks.size(), 0), {}};
  e.ranks[k] = 1;
  e.ranks[k - 1] = 1;
  for (std::size_t j = 1; j <= c.top(); ++j) {
    e.boundaries.push_back(j == k ? PolyMatrix::identity(g, 1) : PolyMatrix(g, e.ranks[j], e.ranks[j - 1]));
  }
  return direct_sum(c, e);
}

}  // namespace tka
