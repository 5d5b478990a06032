#pragma once

// JSON input/output: exact scalars, the shared matrix-model file format,
// and the report documents emitted by the command-line tools. Integer
// payloads travel as decimal strings so round trips are bit-exact at any
// magnitude, and report keys are emitted in a fixed order so identical
// inputs produce identical bytes.

#include <nlohmann/json.hpp>

#include "reflie/classify.hpp"
#include "reflie/hecke.hpp"
#include "reflie/representation.hpp"
#include "reflie/verify.hpp"

namespace reflie {

using Json = nlohmann::ordered_json;

// Rational as ["num", "den"] decimal strings.
Json rational_json(const Rational& a);
Rational rational_of_json(const Json& j);

// Cyclotomic as {"n": conductor, "c": [["num","den"], ...]} with phi(n)
// power-basis coordinates.
Json cyc_json(const Cyc& a);
Cyc cyc_of_json(const Json& j);

// Rational function as {"num": [...], "den": [...]}, coefficients low to
// high; reading re-canonicalizes (gcd 1, monic denominator).
Json rf_json(const RF& f);
RF rf_of_json(const Json& j);

Json params_json(const GroupParams& p);
GroupParams params_of_json(const Json& j);

// Shared matrix-model document: {"field": {"cyclotomic": n} |
// {"function_field": true}, "dim": N, "generators": [{"name": str,
// "matrix": [[scalar, ...], ...]}, ...], "group"?: params, "label": str}.
Json rep_json(const Rep& rho);
// Requires the optional "group" member; rebuilds the group, checks that
// the images are consistent across the whole multiplication table (the
// Cayley-graph test, equivalent to being a homomorphism) and returns a Rep
// whose evaluator multiplies generator images along words.
Rep rep_of_json(const Json& j, unsigned long long cap = 10000);

Json hecke_json(const HeckeModel& m);
HeckeModel hecke_of_json(const Json& j);

// Report documents, schema version 1.
Json classification_json(const Classification& cls);
Json verify_json(const VerifyReport& report);
// Bare array [{"from": x0, "to": x1, "signature": [plus, minus]}, ...].
Json scan_json(const SignatureScan& scan);

Json read_json_file(const std::string& path);
void write_json_file(const Json& j, const std::string& path);

}  // namespace reflie
