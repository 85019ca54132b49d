#include "qcurve/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <iostream>

#include "qcurve/errors.hpp"
#include "qcurve/quadratic.hpp"
#include "qcurve/twisted_algebra.hpp"

namespace qcurve::cli {

using io::Json;
using io::toJson;

namespace {

Json polynomialJson(const std::vector<Rational>& coeffs) {
  Json out = Json::array();
  for (const auto& q : coeffs) out.push_back(toJson(q));
  return out;
}

Json algebraElementJson(const FiniteAbelianGroup& g, const AlgebraElement& x) {
  Json out = Json::array();
  for (const auto& [s, q] : x.coefficients()) out.push_back({io::elementToJson(g, s), toJson(q)});
  return out;
}

Json fieldJson(const MultiquadraticField& f) {
  return {{"generators", toJson(f)}, {"degree", f.degree()}, {"totally_real", f.isTotallyReal()}};
}

const char* verdictName(CongruenceVerdict v) {
  switch (v) {
    case CongruenceVerdict::Holds: return "holds";
    case CongruenceVerdict::Fails: return "fails";
    case CongruenceVerdict::Skipped: return "skipped";
  }
  return "";
}

}  // namespace

CommandResult validateCocycleCommand(const Json& doc) {
  const TwoCocycle c = io::cocycleFromJson(doc);
  CommandResult r;
  r.report = {{"command", "validate-cocycle"}, {"symmetric", c.isSymmetric()}, {"rational", c.isRational()}};
  if (auto v = validateCocycle(c)) {
    const auto& G = c.group();
    r.exitCode = kDomainFailure;
    r.report["status"] = "violation";
    r.report["violation"] = {io::elementToJson(G, v->g), io::elementToJson(G, v->h), io::elementToJson(G, v->k)};
  } else {
    r.report["status"] = "valid";
  }
  return r;
}

CommandResult splitCommand(const Json& doc) {
  const TwoCocycle c = io::cocycleFromJson(doc);
  const SplitResult s = splitCocycle(c);
  CommandResult r;
  r.report = {{"command", "split"}};
  if (s.isSplit()) {
    r.report["status"] = "split";
    r.report["alpha"] = toJson(*s.splitting);
    r.report["coboundary_matches"] = coboundaryOf(*s.splitting) == c;
  } else {
    const auto& G = c.group();
    Json pairing = Json::array();
    for (std::size_t a = 0; a < G.order(); ++a) {
      for (std::size_t b = 0; b < G.order(); ++b) {
        if (!(*s.obstruction)(a, b).isOne()) {
          pairing.push_back({io::elementToJson(G, a), io::elementToJson(G, b), toJson((*s.obstruction)(a, b))});
        }
      }
    }
    r.exitCode = kDomainFailure;
    r.report["status"] = "obstructed";
    r.report["pairing"] = pairing;
  }
  return r;
}

CommandResult algebraCommand(const Json& doc) {
  const TwoCocycle c = io::cocycleFromJson(doc);
  const TwistedGroupAlgebra R(c);
  const auto& G = R.group();
  CommandResult r;
  r.report = {{"command", "algebra"},
              {"dimension", R.dimension()},
              {"associative", R.isAssociative()},
              {"commutative", R.isCommutative()}};
  if (!R.isAssociative()) {
    r.exitCode = kDomainFailure;
    r.report["status"] = "not-associative";
    return r;
  }
  Json minpolys = Json::array();
  for (std::size_t s = 0; s < G.order(); ++s) {
    minpolys.push_back({io::elementToJson(G, s), polynomialJson(minimalPolynomial(AlgebraElement::basis(s), R))});
  }
  r.report["minimal_polynomials"] = minpolys;

  const SplitResult s = splitCocycle(c);
  if (s.isSplit()) {
    const AlgebraHom omega = homFromSplitting(R, *s.splitting);
    const AlgebraElement pi = kernelProjector(R, omega);
    r.report["splitting"] = {{"alpha", toJson(*s.splitting)},
                             {"image_field", fieldJson(omega.target())},
                             {"multiplicative", omega.isMultiplicative()},
                             {"projector", algebraElementJson(G, pi)},
                             {"projector_idempotent", algebraMultiply(pi, pi, R) == pi}};
  } else {
    r.report["splitting"] = nullptr;
  }

  if (doc.contains("end_algebra")) {
    const Json& e = doc["end_algebra"];
    auto get = [&](const char* key) -> std::uint64_t {
      if (!e.contains(key) || !e[key].is_number_unsigned()) throw ParseError(std::string("end_algebra needs a positive \"") + key + "\"");
      return e[key].get<std::uint64_t>();
    };
    const EndAlgebraClass k = classifyEndAlgebra({get("n"), get("division_degree"), get("center_degree"),
                                                  get("maximal_field_degree"), get("abelian_variety_dim")});
    r.report["end_algebra"] = {{"primitive", k.primitive},
                               {"n", k.n},
                               {"division", k.division == DivisionType::Quaternionic ? "quaternionic" : "field"}};
  }
  r.report["status"] = "ok";
  return r;
}

CommandResult constructCommand(const Json& doc) {
  const QCurveDatum d = io::datumFromJson(doc);
  const auto& G = d.group;
  CommandResult r;
  r.report = {{"command", "construct"}};

  const DatumCheck check = validateQCurveDatum(d);
  if (!check.isValid()) {
    r.exitCode = kDomainFailure;
    r.report["status"] = "invalid";
    if (check.kind == DatumCheck::Kind::CocycleViolation) {
      r.report["violation"] = {{"kind", "cocycle"},
                               {"triple", {io::elementToJson(G, check.g), io::elementToJson(G, check.h), io::elementToJson(G, check.k)}}};
    } else {
      r.report["violation"] = {{"kind", "degree-identity"},
                               {"pair", {io::elementToJson(G, check.g), io::elementToJson(G, check.h)}}};
    }
    return r;
  }

  const GL2TypeConstruction built = constructGL2Type(d);
  const bool congruence = checkAlphaEpsilonCongruence(built.descriptor);
  r.report["descriptor"] = toJson(built.descriptor);
  r.report["projector"] = algebraElementJson(G, built.projector);
  r.report["alpha_epsilon_congruence"] = congruence;
  r.report["brauer_order"] = brauerOrderReport(d) == BrauerOrder::OrderOne ? 1 : 2;

  const IotaModel iota = iotaModel(d);
  const bool equivariant = !verifyIotaEquivariance(iota).has_value();
  r.report["iota_equivariant"] = equivariant;
  r.report["lie_orbit_rank"] = orbitSpanRank(iota.bAction, 0);

  bool frobeniusOk = true;
  if (doc.contains("frobenius")) {
    Json rows = Json::array();
    for (const auto& e : checkFrobeniusCongruence(built.descriptor, io::frobeniusFromJson(G, doc["frobenius"]))) {
      rows.push_back({{"p", e.p}, {"verdict", verdictName(e.verdict)}});
      frobeniusOk = frobeniusOk && e.verdict != CongruenceVerdict::Fails;
    }
    r.report["frobenius"] = rows;
  }
  const bool ok = congruence && equivariant && frobeniusOk;
  r.exitCode = ok ? kOk : kDomainFailure;
  r.report["status"] = ok ? "ok" : "failed";
  return r;
}

CommandResult quadraticCommand(std::int64_t m, const std::string& kSignature) {
  if (m == 0) throw ParseError("m must be nonzero");
  if (kSignature != "real" && kSignature != "imaginary") throw ParseError("--k-signature must be real or imaginary");
  const QuadraticQCurveInput in{m, kSignature == "real" ? FieldSignature::Real : FieldSignature::Imaginary};
  const QuadraticReport q = classifyQuadratic(in);
  auto order = [](CharacterOrder o) { return o == CharacterOrder::Trivial ? "trivial" : "order-two"; };
  const char* esig = q.eSignature == ESignature::Rational ? "rational" : q.eSignature == ESignature::Real ? "real" : "imaginary";

  CommandResult r;
  r.report = {{"command", "quadratic"},
              {"m", m},
              {"k_signature", kSignature},
              {"algebra_shape", q.algebraShape.splitQxQ ? Json("QxQ") : Json({{"field", q.algebraShape.d}})},
              {"theta", order(q.theta)},
              {"epsilon", order(q.epsilon)},
              {"E_signature", esig},
              {"model_over_Q", q.modelOverQ},
              {"serre_constraint", q.serreConstraintOk ? "ok" : "violation"}};
  r.exitCode = q.serreConstraintOk ? kOk : kDomainFailure;
  r.report["status"] = q.serreConstraintOk ? "ok" : "violation";
  return r;
}

CommandResult descentCommand(const Json& doc) {
  const DescentDatum d = io::descentFromJson(doc);
  const auto& G = d.group();
  CommandResult r;
  r.report = {{"command", "descent"}, {"block_rank", d.blockRank()}};
  if (auto v = verifyCompatibility81(d)) {
    r.exitCode = kDomainFailure;
    r.report["status"] = "violation";
    r.report["violation"] = {io::elementToJson(G, v->sigma), io::elementToJson(G, v->tau)};
    return r;
  }
  const auto ops = buildRestriction(d);
  bool groupLaw = true;
  for (std::size_t s = 0; s < G.order(); ++s) {
    for (std::size_t t = 0; t < G.order(); ++t) groupLaw = groupLaw && ops[s] * ops[t] == ops[G.multiply(s, t)];
  }
  const DescentReport e = etaDescent(d);
  const bool equivariant = !verifyIotaEquivariance(iotaModel(d)).has_value();
  r.report["group_law"] = groupLaw;
  r.report["eta"] = {{"matrix", toJson(e.eta.matrix())},
                     {"rank", e.rank},
                     {"fixed_by_group", e.fixedByGroup},
                     {"scaled_idempotent", e.scaledIdempotent},
                     {"slot_ranks", e.slotRanks},
                     {"diagonal_image", e.diagonalImage}};
  r.report["iota_equivariant"] = equivariant;
  const bool ok = groupLaw && e.ok() && equivariant;
  r.exitCode = ok ? kOk : kDomainFailure;
  r.report["status"] = ok ? "ok" : "failed";
  return r;
}

CommandResult tracesCommand(const Json& doc) {
  const TraceTable t = io::traceTableFromJson(doc);
  CommandResult r;
  r.report = {{"command", "traces"}};
  bool ok = true;

  Json symmetry = Json::array();
  for (const auto& e : checkConjugationSymmetry(t)) {
    symmetry.push_back({{"p", e.p}, {"holds", e.holds}});
    ok = ok && e.holds;
  }
  r.report["conjugation_symmetry"] = symmetry;

  const GeneratedField E = generatedFieldE(t);
  r.report["E"] = fieldJson(E.field);
  r.report["E"]["empty_generators"] = E.emptyGenerators;
  r.report["E"]["matches_declared"] = E.field.sameField(t.fieldE);

  try {
    const InnerFieldReport F = generatedFieldF(t);
    r.report["F"] = fieldJson(F.F);
    r.report["F"]["inside_E"] = F.insideE;
    r.report["F"]["witness"] = toJson(F.witness);
    r.report["F"]["abelian_containment"] = F.abelianContainment;
    ok = ok && F.insideE && F.abelianContainment;
  } catch (const NotTotallyReal& e) {
    r.report["F"] = {{"error", e.what()}};
    ok = false;
  }

  const bool even = checkEvenness(t.epsilon);
  r.report["epsilon_even"] = even;
  ok = ok && even;

  Json polys = Json::array();
  for (const auto& e : t.entries) {
    if (!t.isUsed(e)) continue;
    const FrobeniusCharpoly c = frobeniusCharpoly(e, t.epsilon);
    Json coeffs = Json::array();
    for (const auto& x : c.coefficients) coeffs.push_back(toJson(x));
    polys.push_back({{"p", c.p}, {"coefficients", coeffs}, {"weil_advisory_ok", c.weilBoundOk}});
  }
  std::sort(polys.begin(), polys.end(), [](const Json& a, const Json& b) { return a["p"] < b["p"]; });
  r.report["charpolys"] = polys;

  r.exitCode = ok ? kOk : kDomainFailure;
  r.report["status"] = ok ? "ok" : "failed";
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Q-curve and GL2-type toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string outputPath;
  bool pretty = false;
  app.add_option("-o,--output", outputPath, "Write the report here instead of standard output");
  app.add_flag("--pretty", pretty, "Indent the report");

  std::string input;
  std::function<CommandResult()> action;
  auto fileCommand = [&](const char* name, const char* help, CommandResult (*fn)(const Json&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "Input document")->required();
    sub->callback([&, fn] { action = [&, fn] { return fn(io::readJsonFile(input)); }; });
  };
  fileCommand("validate-cocycle", "Check the cocycle identity", validateCocycleCommand);
  fileCommand("split", "Split a cocycle or report its obstruction", splitCommand);
  fileCommand("algebra", "Twisted group algebra structure", algebraCommand);
  fileCommand("construct", "GL2-type descriptor from Q-curve data", constructCommand);
  fileCommand("descent", "Descent datum checks", descentCommand);
  fileCommand("traces", "Frobenius trace table checks", tracesCommand);

  std::int64_t m = 0;
  std::string kSignature;
  CLI::App* quad = app.add_subcommand("quadratic", "Q-curve over a quadratic field");
  quad->add_option("-m", m, "The integer m with mu o sigma(mu) = m")->required()->allow_extra_args(false);
  quad->add_option("--k-signature", kSignature, "Signature of K")->required()->check(CLI::IsMember({"real", "imaginary"}));
  quad->callback([&] { action = [&] { return quadraticCommand(m, kSignature); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  CommandResult result;
  try {
    result = action();
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    result.exitCode = kDomainFailure;
    result.report = {{"status", "error"}, {"error", e.what()}};
    err << e.what() << "\n";
  }
  try {
    if (outputPath.empty()) {
      out << io::dump(result.report, pretty);
    } else {
      io::writeJsonFile(outputPath, result.report, pretty);
    }
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }
  return result.exitCode;
}

}  // namespace qcurve::cli
