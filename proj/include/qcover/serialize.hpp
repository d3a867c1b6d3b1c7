#pragma once

// Text and JSON forms of the library's values.
//
// CycInt  {"modulus":20,"coeffs":[...]}
// CycNum  {"modulus":20,"coeffs":[...],"p":5,"k":1}   (value = coeffs / p^k)
// SkeinElem {"p":5,"coeffs":[<CycNum>, ...]}
// Coefficients outside the int64 range are written as decimal strings.

#include <json.hpp>
#include <string>

#include "qcover/congruence.hpp"
#include "qcover/cyclotomic.hpp"
#include "qcover/invariants.hpp"
#include "qcover/linkform.hpp"
#include "qcover/skein.hpp"

namespace qcover {

using nlohmann::json;

// "-2ζ20 + 4ζ20^3 - ζ20^5 - 2ζ20^7"
std::string to_text(const CycInt& x);
// "(1/5)(2ζ20 + ζ20^3 + ζ20^5 - 3ζ20^7)"
std::string to_text(const CycNum& x);
// "1 + (δ-coefficient)·z + ..." with coefficients in ζ notation
std::string to_text(const SkeinElem& x);
std::string to_text(const ResidueClass& r);
// "Z_5 ⊕ Z_5", "Z^2 ⊕ Z_3", "0"
std::string to_text(const AbelianGroup& g);

json to_json(const CycInt& x);
json to_json(const CycNum& x);
json to_json(const SkeinElem& x);
json to_json(const AbelianGroup& g);
json to_json(const CongruenceVerdict& v);
json to_json(const ResidueClass& r);
json to_json(const QZ& q);

CycInt cycint_from_json(const json& j);
CycNum cycnum_from_json(const json& j);
SkeinElem skein_from_json(const json& j);
AbelianGroup group_from_json(const json& j);
CongruenceVerdict verdict_from_json(const json& j);

}  // namespace qcover
