#include "qcover/serialize.hpp"

#include "qcover/error.hpp"

namespace qcover {

namespace {

json coeff_to_json(const mpz_class& c) {
  if (mpz_fits_slong_p(c.get_mpz_t())) return c.get_si();
  return c.get_str();
}

mpz_class coeff_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw ParseError("coefficient must be an integer or a decimal string");
}

std::string zeta(int modulus, int i) {
  if (i == 0) return "";
  std::string s = "ζ" + std::to_string(modulus);
  if (i > 1) s += "^" + std::to_string(i);
  return s;
}

}  // namespace

std::string to_text(const CycInt& x) {
  std::string out;
  for (int i = 0; i < x.degree(); ++i) {
    const mpz_class& c = x[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    const mpz_class mag = abs(c);
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (i == 0 || mag != 1) out += mag.get_str();
    out += zeta(x.modulus(), i);
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const CycNum& x) {
  if (x.denominator_exponent() == 0) return to_text(x.num());
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), x.prime(), x.denominator_exponent());
  return "(1/" + den.get_str() + ")(" + to_text(x.num()) + ")";
}

std::string to_text(const SkeinElem& x) {
  std::string out;
  for (int j = 0; j <= x.degree(); ++j) {
    const CycNum& c = x.coeffs()[j];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string body = to_text(c);
    if (j == 0) {
      out += body;
      continue;
    }
    if (body != "1") out += "(" + body + ")·";
    out += j == 1 ? "z" : "z^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const ResidueClass& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.coeffs().size(); ++i) out += (i ? "," : "") + std::to_string(r.coeffs()[i]);
  return out + ") mod " + std::to_string(r.prime());
}

std::string to_text(const AbelianGroup& g) {
  std::string out;
  if (g.free_rank == 1) out = "Z";
  else if (g.free_rank > 1) out = "Z^" + std::to_string(g.free_rank);
  for (const auto& t : g.torsion) out += (out.empty() ? "" : " ⊕ ") + ("Z_" + t.get_str());
  return out.empty() ? "0" : out;
}

json to_json(const CycInt& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(coeff_to_json(c));
  return json{{"modulus", x.modulus()}, {"coeffs", coeffs}};
}

json to_json(const CycNum& x) {
  json j = to_json(x.num());
  j["p"] = x.prime();
  j["k"] = x.denominator_exponent();
  return j;
}

json to_json(const SkeinElem& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return json{{"p", x.prime()}, {"coeffs", coeffs}};
}

json to_json(const AbelianGroup& g) {
  json t = json::array();
  for (const auto& d : g.torsion) t.push_back(coeff_to_json(d));
  return json{{"free_rank", g.free_rank}, {"torsion", t}};
}

json to_json(const CongruenceVerdict& v) {
  json j{{"congruent", v.congruent},
         {"witness", nullptr},
         {"candidates_checked", v.candidates_checked},
         {"kappa_orbit_congruent", v.kappa_orbit_congruent},
         {"phase_pinned", v.phase_pinned}};
  if (v.witness) j["witness"] = json{{"m", v.witness->m}, {"n", v.witness->n}};
  return j;
}

json to_json(const ResidueClass& r) {
  return json{{"modulus", r.modulus()}, {"p", r.prime()},
              {"coeffs", std::vector<long>(r.coeffs().begin(), r.coeffs().end())}};
}

json to_json(const QZ& q) { return q.str(); }

CycInt cycint_from_json(const json& j) {
  try {
    const int modulus = j.at("modulus").get<int>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array()) throw ParseError("coeffs must be an array");
    std::vector<mpz_class> c;
    for (const auto& v : arr) c.push_back(coeff_from_json(v));
    return CycInt(modulus, std::move(c));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed cyclotomic integer: ") + e.what());
  }
}

CycNum cycnum_from_json(const json& j) {
  try {
    return CycNum(cycint_from_json(j), j.at("p").get<long>(), j.value("k", 0L));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed cyclotomic number: ") + e.what());
  }
}

SkeinElem skein_from_json(const json& j) {
  try {
    std::vector<CycNum> c;
    for (const auto& v : j.at("coeffs")) c.push_back(cycnum_from_json(v));
    return SkeinElem(j.at("p").get<long>(), std::move(c));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed skein element: ") + e.what());
  }
}

AbelianGroup group_from_json(const json& j) {
  try {
    AbelianGroup g;
    g.free_rank = j.at("free_rank").get<std::size_t>();
    for (const auto& t : j.at("torsion")) g.torsion.push_back(coeff_from_json(t));
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed group: ") + e.what());
  }
}

CongruenceVerdict verdict_from_json(const json& j) {
  try {
    CongruenceVerdict v;
    v.congruent = j.at("congruent").get<bool>();
    v.candidates_checked = j.at("candidates_checked").get<long>();
    v.kappa_orbit_congruent = j.value("kappa_orbit_congruent", v.congruent);
    v.phase_pinned = j.value("phase_pinned", false);
    if (!j.at("witness").is_null())
      v.witness = KappaWitness{j["witness"].at("m").get<long>(), j["witness"].at("n").get<long>()};
    return v;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed verdict: ") + e.what());
  }
}

}  // namespace qcover
