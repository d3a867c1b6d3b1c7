#include "qcover/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "qcover/congruence.hpp"
#include "qcover/error.hpp"
#include "qcover/invariants.hpp"
#include "qcover/linkform.hpp"
#include "qcover/serialize.hpp"
#include "qcover/skein.hpp"

namespace qcover {

namespace {

enum class Format { Text, Json };

struct Options {
  long p = 5;
  long n = 2;
  bool json_flag = false;
  std::string format;
  std::string matrix;
  std::string form;
  std::string character;
  std::int64_t order = 0;
  std::vector<std::string> curves;
  int colors = 2;
  std::uint64_t seed = 1;
  int instances = 1;
  bool ones = false;
};

Format resolve_format(const Options& o) {
  if (o.json_flag) return Format::Json;
  std::string f = o.format;
  if (f.empty()) {
    const char* env = std::getenv("QCOVER_FORMAT");
    f = env ? env : "text";
  }
  if (f == "json") return Format::Json;
  if (f == "text") return Format::Text;
  throw ParseError("unknown output format '" + f + "'");
}

void require_quantum_prime(long p) {
  if (!is_odd_prime(p)) throw InvalidPrime(p);
  if (p < 5) throw ParseError("quantum computations need p >= 5, got " + std::to_string(p));
}

std::string ring_text(long p) {
  const int n = ring_modulus(p);
  const int s = a_step(p);
  const long k = kappa_root_exponent(p);
  std::string out = "Z[ζ" + std::to_string(n) + "], A = ζ" + std::to_string(n);
  if (s != 1) out += "^" + std::to_string(s);
  out += ", κ = ζ" + std::to_string(n) + "^" + std::to_string(k);
  if (!phase_pinned(p)) out += " (phase choice not pinned by reference values)";
  return out;
}

std::string valuation_text(long v) {
  return v == kInfiniteValuation ? "infinity" : std::to_string(v);
}

json valuation_json(long v) { return v == kInfiniteValuation ? json("infinity") : json(v); }

IntMatrix parse_matrix(const std::string& literal) {
  std::vector<std::vector<long>> rows;
  std::istringstream rows_in(literal);
  std::string row;
  while (std::getline(rows_in, row, ';')) {
    std::vector<long> r;
    std::istringstream cols_in(row);
    std::string cell;
    while (std::getline(cols_in, cell, ',')) {
      std::size_t used = 0;
      long v = 0;
      try {
        v = std::stol(cell, &used);
      } catch (const std::exception&) {
        throw ParseError("bad matrix entry '" + cell + "'");
      }
      if (cell.find_first_not_of(" \t", used) != std::string::npos)
        throw ParseError("bad matrix entry '" + cell + "'");
      r.push_back(v);
    }
    rows.push_back(std::move(r));
  }
  if (rows.empty()) throw ParseError("empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.front().size() || r.empty()) throw ParseError("matrix rows must have equal nonzero length");
  return IntMatrix::from_rows(rows);
}

void cmd_invariant(const Options& o, Format fmt, std::ostream& out) {
  require_quantum_prime(o.p);
  const long p = o.p;
  const CycNum value = invariant_Mtilde(p);
  const CongruenceVerdict verdict = check_kappa_congruence(value);
  const long v = valuation(value);
  const AbelianGroup h = homology_from_matrix(linking_matrix_Mp(p));
  if (fmt == Format::Json) {
    out << json{{"p", p},
                {"value", to_json(value)},
                {"valuation", valuation_json(v)},
                {"homology", to_json(h)},
                {"congruence", to_json(verdict)}}
               .dump()
        << "\n";
    return;
  }
  out << "p = " << p << "\n";
  out << "ring: " << ring_text(p) << "\n";
  out << "<M~_" << p << ">_" << p << " = " << to_text(value) << "\n";
  out << "residue: " << to_text(mod_p(value.num(), p)) << "\n";
  if (verdict.congruent)
    out << "congruent to κ^m·n mod " << p << " (m = " << verdict.witness->m << ", n = " << verdict.witness->n
        << ")";
  else
    out << "NOT congruent to κ^m·n mod " << p;
  out << "; " << verdict.candidates_checked << " candidates checked\n";
  if (verdict.kappa_orbit_congruent != verdict.congruent)
    out << "warning: verdict depends on the choice of κ\n";
  out << "valuation at (1-ζ" << p << "): " << valuation_text(v) << "\n";
  out << "H_1(M_" << p << ") = " << to_text(h) << "\n";
}

void cmd_hopf(const Options& o, Format fmt, std::ostream& out) {
  if (!is_odd_prime(o.p)) throw InvalidPrime(o.p);
  if (o.n < 0) throw ParseError("--n must be >= 0");
  const CycInt h = hopf_bracket(o.p, o.n);
  if (fmt == Format::Json)
    out << json{{"p", o.p}, {"n", o.n}, {"value", to_json(h)}}.dump() << "\n";
  else
    out << "H_" << o.n << " = " << to_text(h) << "   [" << ring_text(o.p) << "]\n";
}

void cmd_valuation(const Options& o, Format fmt, std::ostream& out) {
  require_quantum_prime(o.p);
  const long p = o.p;
  const long v = invariant_valuation(p);
  const long bound = cm_bound(p);
  const bool meets_bound = v >= bound;
  const bool in_p_ring = v >= p - 1;
  if (fmt == Format::Json) {
    out << json{{"p", p},
                {"valuation", valuation_json(v)},
                {"cm_bound", bound},
                {"p_minus_1", p - 1},
                {"meets_cm_bound", meets_bound},
                {"in_p_O", in_p_ring}}
               .dump()
        << "\n";
    return;
  }
  out << "p = " << p << "\n";
  out << "valuation of <M~_" << p << ">_" << p << " at (1-ζ" << p << "): " << valuation_text(v) << "\n";
  out << "Chen-Murakami bound ceil((p^2-7p+12)/6) = " << bound << (meets_bound ? " (met)" : " (VIOLATED)")
      << "\n";
  out << "p-1 = " << p - 1 << (in_p_ring ? ": value lies in p·O_p" : ": value not forced into p·O_p") << "\n";
}

void cmd_homology(const Options& o, Format fmt, std::ostream& out) {
  const AbelianGroup g = homology_from_matrix(parse_matrix(o.matrix));
  if (fmt == Format::Json)
    out << to_json(g).dump() << "\n";
  else
    out << to_text(g) << "\n";
}

json curves_json(const std::vector<CurveChoice>& curves) {
  json arr = json::array();
  for (const auto& c : curves)
    arr.push_back({{"summand", c.summand}, {"x", c.x}, {"pairing", c.pairing.str()}, {"chi_value", c.chi_value}});
  return arr;
}

void cmd_cover(const Options& o, Format fmt, std::ostream& out) {
  const WallForm form = WallForm::parse(o.form);
  const long p = form.prime();
  std::optional<std::int64_t> order;
  if (o.order > 0) order = o.order;
  Character chi = Character::parse(o.character, order);
  if (!chi.order) {
    std::int64_t k = p;
    for (const auto& v : chi.torsion_values) k = std::max(k, v.den());
    for (const auto& v : chi.free_values) k = std::max(k, v.den());
    chi.order = k;
  }
  const Homology1 h{static_cast<int>(chi.free_values.size()), form};
  validate(h, chi);
  const bool simple = is_simple(h, chi);
  const TorsionElement dual = dual_element(form, chi.torsion_values);

  std::optional<std::vector<CurveChoice>> scc, scc2;
  std::string scc_note;
  if (*chi.order == p) {
    if (chi.is_zero()) scc_note = "zero character: no curves needed";
    else scc = scc_curves(h, chi);
  } else if (*chi.order == static_cast<std::int64_t>(p) * p) {
    try {
      scc2 = scc2_curves(h, chi);
    } catch (const DomainError& e) {
      scc_note = e.what();
    }
  }

  std::vector<H1Class> curves;
  for (const auto& c : o.curves) {
    H1Class cls = H1Class::parse(c);
    if (cls.free.empty()) cls.free.assign(h.free_rank, 0);
    curves.push_back(std::move(cls));
  }
  std::optional<bool> complement;
  std::vector<QZ> curve_values;
  if (!curves.empty()) {
    complement = complement_simple(h, chi, curves);
    for (const auto& c : curves) curve_values.push_back(evaluate(chi, c));
  }

  if (fmt == Format::Json) {
    json j{{"form", form.str()},
           {"character", chi.str()},
           {"order", *chi.order},
           {"simple", simple},
           {"bockstein_dual", dual}};
    if (scc) j["scc"] = curves_json(*scc);
    if (scc2) j["scc2"] = curves_json(*scc2);
    if (!scc_note.empty()) j["note"] = scc_note;
    if (complement) {
      json vals = json::array();
      for (const auto& v : curve_values) vals.push_back(v.str());
      j["complement"] = {{"simple", *complement}, {"chi_values", vals}};
    }
    out << j.dump() << "\n";
    return;
  }
  auto element_text = [](const TorsionElement& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
  };
  out << "form: " << form.str() << "\n";
  out << "character: " << chi.str() << " into Z_" << *chi.order << "\n";
  out << "Bockstein dual: " << element_text(dual) << "\n";
  out << "simple cover: " << (simple ? "yes" : "no") << "\n";
  auto print_curves = [&](const char* label, const std::vector<CurveChoice>& cs) {
    out << label << ": " << cs.size() << " curve(s)\n";
    for (const auto& c : cs)
      out << "  summand " << c.summand << ": x = " << element_text(c.x) << ", pairing " << c.pairing.str()
          << ", χ = " << c.chi_value << "\n";
  };
  if (scc) print_curves("scc", *scc);
  if (scc2) print_curves("scc2", *scc2);
  if (!scc_note.empty()) out << "note: " << scc_note << "\n";
  if (complement) {
    out << "complement of given curves simple: " << (*complement ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < curve_values.size(); ++i)
      out << "  χ(curve " << i << ") = " << curve_values[i].str() << "\n";
  }
}

void cmd_orbit(const Options& o, Format fmt, std::ostream& out) {
  if (!is_odd_prime(o.p)) throw InvalidPrime(o.p);
  if (o.colors < 1) throw ParseError("--colors must be >= 1");
  if (o.instances < 1) throw ParseError("--instances must be >= 1");
  const int modulus = ring_modulus(o.p);
  std::mt19937_64 rng(o.seed);
  json reports = json::array();
  bool all_ok = true;
  for (int i = 0; i < o.instances; ++i) {
    OrbitInstance inst = random_orbit_instance(modulus, o.p, o.colors, rng);
    if (o.ones) {
      for (auto& w : inst.weights) w = CycInt::one(modulus);
      for (auto& [k, v] : inst.orbit_values) v = CycInt::one(modulus);
    }
    const OrbitReport r = orbit_congruence_check(inst);
    all_ok = all_ok && r.congruent;
    if (fmt == Format::Json) {
      reports.push_back(
          {{"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}, {"congruent", r.congruent}, {"terms", r.terms}});
    } else {
      out << "instance " << i << ": LHS = " << to_text(r.lhs) << ", RHS = " << to_text(r.rhs) << " ("
          << r.terms << " sequences) -> " << (r.congruent ? "congruent" : "NOT congruent") << " mod " << o.p
          << "\n";
    }
  }
  if (fmt == Format::Json)
    out << json{{"p", o.p}, {"colors", o.colors}, {"seed", o.seed}, {"all_congruent", all_ok}, {"instances", reports}}
               .dump()
        << "\n";
  else
    out << (all_ok ? "all instances congruent" : "SOME INSTANCE FAILED") << "\n";
  if (!all_ok) throw InternalInconsistency("orbit congruence failed");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact quantum-invariant and linking-form calculator for cyclic covers", "qcover"};
  app.require_subcommand(1);
  Options o;
  auto add_format = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json_flag, "JSON output");
    sub->add_option("--format", o.format, "text or json (default: $QCOVER_FORMAT or text)");
  };

  auto* inv = app.add_subcommand("invariant", "<M~_p>_p, its residue verdict and valuation (p = 5, 7)");
  inv->add_option("--p", o.p, "odd prime")->required();
  add_format(inv);

  auto* hopf = app.add_subcommand("hopf", "bracket H_n of the n-component +1-framed Hopf link");
  hopf->add_option("--p", o.p, "odd prime")->required();
  hopf->add_option("--n", o.n, "component count")->required();
  add_format(hopf);

  auto* val = app.add_subcommand("valuation", "valuation of <M~_p>_p against the CM bound and p-1");
  val->add_option("--p", o.p, "odd prime >= 5")->required();
  add_format(val);

  auto* hom = app.add_subcommand("homology", "cokernel of an integer matrix");
  hom->add_option("--matrix", o.matrix, "rows separated by ';', entries by ','")->required();
  add_format(hom);

  auto* cover = app.add_subcommand("cover", "cyclic covers and linking forms");
  cover->require_subcommand(1);
  auto* analyze = cover->add_subcommand("analyze", "simplicity, Bockstein dual and curve selection");
  analyze->add_option("--form", o.form, "Wall form, e.g. A25+A5+B5[2]")->required();
  analyze->add_option("--char", o.character, "character, e.g. free:0;tors:1/5,0")->required();
  analyze->add_option("--order", o.order, "character order k (power of p)");
  analyze->add_option("--curve", o.curves, "curve class, e.g. tors:5,0 (repeatable)");
  add_format(analyze);

  auto* orbit = app.add_subcommand("orbit-check", "orbit-collapse congruence on random instances");
  orbit->add_option("--p", o.p, "sequence length (odd prime)")->required();
  orbit->add_option("--colors", o.colors, "number of colors")->required();
  orbit->add_option("--seed", o.seed, "random seed");
  orbit->add_option("--instances", o.instances, "number of random instances");
  orbit->add_flag("--ones", o.ones, "set every weight and orbit value to 1");
  add_format(orbit);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Format fmt = [&] {
      for (auto* sub : {inv, hopf, val, hom, analyze, orbit})
        if (sub->parsed()) return resolve_format(o);
      return Format::Text;
    }();
    if (inv->parsed()) cmd_invariant(o, fmt, out);
    else if (hopf->parsed()) cmd_hopf(o, fmt, out);
    else if (val->parsed()) cmd_valuation(o, fmt, out);
    else if (hom->parsed()) cmd_homology(o, fmt, out);
    else if (analyze->parsed()) cmd_cover(o, fmt, out);
    else if (orbit->parsed()) cmd_orbit(o, fmt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidPrime& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace qcover
