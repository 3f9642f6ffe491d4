#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tka/alexander.hpp"
#include "tka/error.hpp"
#include "tka/factorize.hpp"
#include "tka/foxmilnor.hpp"
#include "tka/torsion.hpp"

namespace tka::cli {

namespace {

enum Exit { kOk = 0, kFail = 1, kInput = 2, kSanity = 3 };

// Ordered key/value report. Plain mode aligns the keys; machine mode prints
// key=value with timing appended.
class Report {
 public:
  explicit Report(bool machine) : machine_(machine), start_(std::chrono::steady_clock::now()) {}

  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void blank() { rows_.emplace_back("", ""); }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& [k, v] = rows_[i];
      if (k.empty()) {
        if (!machine_ && i + 1 < rows_.size()) out << "\n";
        continue;
      }
      if (machine_) {
        out << k << "=" << v << "\n";
      } else {
        out << k << std::string(width - k.size() + 2, ' ') << v << "\n";
      }
    }
    if (machine_) {
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      out << "time_ms=" << buf << "\n";
    }
  }

 private:
  bool machine_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::pair<std::string, std::string>> rows_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MarkedDiagram load_diagram(const std::string& path) {
  try {
    return parse_diagram(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.message(), e.line(), e.column());
  }
}

std::string sanity_summary(const SanityReport& r) {
  if (!r.applicable) return "n/a";
  if (r.ok()) return "ok";
  std::string s = "FAILED:";
  for (const auto& f : r.failures) s += " " + f + ";";
  s.pop_back();
  return s;
}

int do_compute(const std::vector<std::string>& files, bool machine, std::ostream& out, std::ostream& err) {
  Report rep(machine);
  rep.add("command", "compute");
  int code = kOk;
  for (const std::string& path : files) {
    rep.add("input", path);
    try {
      MarkedDiagram d = load_diagram(path);
      LaurentPoly delta = alexander_poly(d);
      SanityReport s = sanity_specializations(d);
      rep.add("genus", std::to_string(d.genus));
      rep.add("crossings", std::to_string(d.crossing_count()));
      rep.add("delta", to_string(delta));
      if (s.applicable) rep.add("corank_at_one", std::to_string(s.corank_at_one));
      rep.add("sanity", sanity_summary(s));
      if (!s.ok() && code == kOk) code = kSanity;
    } catch (const Error& e) {
      rep.add("error", e.what());
      err << "tka: " << path << ": " << e.what() << "\n";
      code = kInput;
    }
    rep.blank();
  }
  rep.print(out);
  return code;
}

int do_validate(const std::vector<std::string>& files, bool machine, std::ostream& out, std::ostream& err) {
  Report rep(machine);
  rep.add("command", "validate");
  int code = kOk;
  for (const std::string& path : files) {
    rep.add("input", path);
    try {
      MarkedDiagram d = load_diagram(path);
      rep.add("status", "ok");
      rep.add("arcs", std::to_string(d.arc_count()));
    } catch (const Error& e) {
      rep.add("status", "invalid");
      rep.add("error", e.what());
      err << "tka: " << path << ": " << e.what() << "\n";
      code = kInput;
    }
    rep.blank();
  }
  rep.print(out);
  return code;
}

void add_verdict(Report& rep, const FMVerdict& v) {
  rep.add("verdict", to_string(v.status));
  rep.add("pretest", v.pretest ? (*v.pretest ? "pass" : "fail") : "n/a");
  if (v.witness) {
    rep.add("witness_p", to_string(v.witness->p));
    rep.add("witness_q", to_string(v.witness->q));
  }
  if (v.certificate) {
    rep.add("reason", to_string(v.certificate->reason));
    if (v.certificate->reason != FMReason::ZeroMismatch) {
      rep.add("factor", to_string(v.certificate->factor));
      rep.add("net_exponent", std::to_string(v.certificate->net_exponent));
    }
  }
}

int do_concordance(const std::string& a, const std::string& b, bool poly, bool machine, std::ostream& out,
                   std::ostream& err) {
  Report rep(machine);
  rep.add("command", "check-concordance");
  FMVerdict v;
  try {
    if (poly) {
      const int g = std::max({1, genus_needed(a), genus_needed(b)});
      LaurentPoly d0 = parse_laurent(a, g), d1 = parse_laurent(b, g);
      rep.add("delta0", to_string(d0));
      rep.add("delta1", to_string(d1));
      v = fm_check(d0, d1);
    } else {
      MarkedDiagram da = load_diagram(a), db = load_diagram(b);
      rep.add("input", a);
      rep.add("input", b);
      if (da.genus != db.genus) {
        throw ContextMismatch("genus " + std::to_string(da.genus) + " and " + std::to_string(db.genus) +
                              " differ; concordance is within one surface");
      }
      LaurentPoly d0 = alexander_poly(da), d1 = alexander_poly(db);
      rep.add("delta0", to_string(d0));
      rep.add("delta1", to_string(d1));
      v = fm_check(d0, d1);
    }
  } catch (const Error& e) {
    err << "tka: " << e.what() << "\n";
    return kInput;
  }
  add_verdict(rep, v);
  rep.print(out);
  return v.holds() ? kOk : kFail;
}

int do_factor(const std::string& text, int genus, bool machine, std::ostream& out, std::ostream& err) {
  Report rep(machine);
  rep.add("command", "factor");
  try {
    const int g = std::max({1, genus, genus_needed(text)});
    LaurentPoly p = parse_laurent(text, g);
    rep.add("input", to_string(p));
    Factorization f = factor(p);
    rep.add("factorization", to_string(f));
    for (const auto& [q, m] : f.factors) rep.add("factor", to_string(q) + (m > 1 ? " ^" + std::to_string(m) : ""));
  } catch (const Error& e) {
    err << "tka: " << e.what() << "\n";
    return kInput;
  }
  rep.print(out);
  return kOk;
}

int do_torsion(const std::string& path, bool machine, std::ostream& out, std::ostream& err) {
  Report rep(machine);
  rep.add("command", "torsion");
  rep.add("input", path);
  try {
    BasedComplex c;
    try {
      c = parse_complex(read_file(path));
    } catch (const ParseError& e) {
      throw ParseError(path + ": " + e.message(), e.line(), e.column());
    }
    TorsionValue t = torsion(c);
    rep.add("numerator", to_string(t.num));
    rep.add("denominator", to_string(t.den));
  } catch (const NotAcyclic& e) {
    rep.add("status", "not-acyclic");
    rep.add("degree", std::to_string(e.degree()));
    rep.print(out);
    return kFail;
  } catch (const Error& e) {
    err << "tka: " << e.what() << "\n";
    return kInput;
  }
  rep.print(out);
  return kOk;
}

int do_corpus(const std::string& emit, bool pairs, bool machine, std::ostream& out, std::ostream& err) {
  Report rep(machine);
  rep.add("command", "corpus");
  if (!emit.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(emit, ec);
    if (ec) {
      err << "tka: cannot create " << emit << ": " << ec.message() << "\n";
      return kInput;
    }
  }
  for (const CorpusEntry& e : corpus()) {
    if (emit.empty()) {
      rep.add("diagram", e.name);
      continue;
    }
    const std::filesystem::path file = std::filesystem::path(emit) / (e.name + ".tkd");
    std::ofstream f(file, std::ios::binary);
    f << "# " << e.name << "\n" << to_string(e.diagram);
    if (!f) {
      err << "tka: cannot write " << file.string() << "\n";
      return kInput;
    }
    rep.add("wrote", file.string());
  }
  if (pairs) {
    for (const CorpusPair& p : reidemeister_pairs()) rep.add("pair", p.move + " " + p.first + " " + p.second);
  }
  rep.print(out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alexander polynomials and concordance checks for knots in thickened surfaces", "tka"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "Print key=value lines (with timing)");

  std::vector<std::string> files;
  auto* compute = app.add_subcommand("compute", "Alexander polynomial and sanity checks of diagram files");
  compute->add_option("files", files, "Diagram files (.tkd)")->required();

  auto* validate = app.add_subcommand("validate", "Parse and validate diagram files");
  validate->add_option("files", files, "Diagram files (.tkd)")->required();

  std::string first, second;
  bool poly = false;
  auto* conc = app.add_subcommand("check-concordance", "Fox-Milnor condition for two diagrams or polynomials");
  conc->add_option("first", first, "Diagram file or polynomial")->required();
  conc->add_option("second", second, "Diagram file or polynomial")->required();
  conc->add_flag("--poly", poly, "Arguments are Laurent polynomials");

  std::string text;
  int genus = 1;
  auto* fac = app.add_subcommand("factor", "Factor a Laurent polynomial");
  fac->add_option("polynomial", text, "e.g. \"t^2 - t + 1\"")->required();
  fac->add_option("--genus", genus, "Ring genus (at least what the input uses)")->check(CLI::Range(1, 64));

  std::string complex_path;
  auto* tor = app.add_subcommand("torsion", "Torsion of a based chain complex file");
  tor->add_option("file", complex_path, "Complex file (.tkc)")->required();

  std::string emit;
  bool pairs = false;
  auto* corp = app.add_subcommand("corpus", "List or write the built-in diagrams");
  corp->add_option("--emit", emit, "Directory to write NAME.tkd files into");
  corp->add_flag("--pairs", pairs, "Also list the move pairs");

  for (auto* sub : {compute, validate, conc, fac, tor, corp}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tka: " << e.what() << "\n\n" << app.help();
    return kInput;
  }

  if (compute->parsed()) return do_compute(files, machine, out, err);
  if (validate->parsed()) return do_validate(files, machine, out, err);
  if (conc->parsed()) return do_concordance(first, second, poly, machine, out, err);
  if (fac->parsed()) return do_factor(text, genus, machine, out, err);
  if (tor->parsed()) return do_torsion(complex_path, machine, out, err);
  return do_corpus(emit, pairs, machine, out, err);
}

}  // namespace tka::cli
