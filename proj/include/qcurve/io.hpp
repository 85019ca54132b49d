#pragma once

#include <string>

#include <json.hpp>

#include "qcurve/cohomology.hpp"
#include "qcurve/descent.hpp"
#include "qcurve/multiquadratic.hpp"
#include "qcurve/pipeline.hpp"
#include "qcurve/traces.hpp"

// JSON documents. Rationals are "a/b" strings, group elements exponent
// tuples. Schema violations throw ParseError; well-formed documents whose
// values are mathematically invalid throw the corresponding domain error.
namespace qcurve::io {

using Json = nlohmann::json;

Json readJsonFile(const std::string& path);
void writeJsonFile(const std::string& path, const Json& doc, bool pretty);
/// Deterministic text: sorted keys, compact unless pretty.
std::string dump(const Json& doc, bool pretty);

Json toJson(const Rational& q);
Rational rationalFromJson(const Json& j);

/// {"torsion": "a/b", "exponents": {"p": "a/b"}}; a bare "a/b" string is
/// read as a rational number.
Json toJson(const RadicalElement& x);
RadicalElement radicalFromJson(const Json& j);

/// {"d": "a/b", ...} keyed by squarefree d, or a bare "a/b" rational.
Json toJson(const FieldElement& x);
FieldElement fieldElementFromJson(const Json& j);

Json elementToJson(const FiniteAbelianGroup& g, std::size_t index);
std::size_t elementFromJson(const FiniteAbelianGroup& g, const Json& j);
FiniteAbelianGroup groupFromJson(const Json& doc);

/// {"cyclic_orders": [...], "values": [[g, h, radical], ...]}; missing
/// entries are 1.
TwoCocycle cocycleFromJson(const Json& doc);
TwoCocycle cocycleFromJson(const FiniteAbelianGroup& g, const Json& values);
Json toJson(const TwoCocycle& c);
/// [[g, radical], ...]
Json toJson(const OneCochain& a);
Json toJson(const GroupCharacter& chi);

/// Squarefree representatives of the reduced square-class basis.
Json toJson(const MultiquadraticField& f);
MultiquadraticField fieldFromJson(const Json& generators);

/// {"cyclic_orders", "degrees": [[g, deg], ...], "cocycle": [...] or
/// {"values": [...]}}. Missing degrees default to 1.
QCurveDatum datumFromJson(const Json& doc);
/// [{"p", "frob": g, "a_p", "good"}, ...]
FrobeniusAssignment frobeniusFromJson(const FiniteAbelianGroup& g, const Json& entries);
Json toJson(const GL2TypeDescriptor& d);

Json toJson(const RationalMatrix& m);
RationalMatrix matrixFromJson(const Json& rows);
/// {"cyclic_orders", "block_rank", "mu": [[g, rows], ...]}; missing mu are
/// the identity.
DescentDatum descentFromJson(const Json& doc);

/// {"modulus", "values": [[residue, torsion], ...], "at_minus_one"}
DirichletCharacterData characterFromJson(const Json& j);
Json toJson(const DirichletCharacterData& eps);
/// {"E_generators", "epsilon", "entries": [{"p", "a_p", "good"}], "bad_primes"}
TraceTable traceTableFromJson(const Json& doc);

}  // namespace qcurve::io
