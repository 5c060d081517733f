#pragma once

// JSON views of the domain types. All integers serialize as decimal strings
// (values routinely exceed 64 bits and the double-safe range); keys come out
// in canonical (lexicographic) order, so parse + re-serialize is
// byte-identical.

#include "tg/arith.hpp"
#include "tg/constructions.hpp"
#include "tg/forms.hpp"
#include "tg/paperverify.hpp"
#include "tg/totient.hpp"

#include <json.hpp>

#include <string>

namespace tg::json_io {

using nlohmann::json;

inline std::string dec(const Integer& v) { return v.get_str(); }

json to_json(const arith::Factorization& f);
json to_json(const totient::TotientPreimages& t);
json to_json(const forms::FormSystem& s);
json to_json(const forms::AdmissibilityReport& r);
json to_json(const constructions::Lemma31Witness& w);
json to_json(const constructions::ApWitness& w);
json to_json(const constructions::ApModulus& m);
json to_json(const paperverify::VerificationReport& r);

// Parses "[[a, b], ...]"; entries may be JSON integers or decimal strings.
forms::FormSystem form_system_from_json(const json& j);

// Parses a decimal-string or integer JSON value into an Integer.
Integer integer_from_json(const json& j);

}  // namespace tg::json_io
