#include "qcurve/io.hpp"

#include <fstream>
#include <sstream>

#include "qcurve/errors.hpp"

namespace qcurve::io {

namespace {

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError(std::string("expected an object holding \"") + key + "\"");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t integerKey(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw ParseError("\"" + s + "\" is not an integer key");
  return v;
}

}  // namespace

Json readJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string dump(const Json& doc, bool pretty) { return doc.dump(pretty ? 2 : -1) + "\n"; }

void writeJsonFile(const std::string& path, const Json& doc, bool pretty) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << dump(doc, pretty);
  if (!out) throw ParseError("write failed for " + path);
}

Json toJson(const Rational& q) { return q.str(); }

Rational rationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be an \"a/b\" string");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

Json toJson(const RadicalElement& x) {
  Json exps = Json::object();
  for (const auto& [p, r] : x.exponents()) exps[std::to_string(p)] = toJson(r);
  return {{"torsion", toJson(x.torsion())}, {"exponents", exps}};
}

RadicalElement radicalFromJson(const Json& j) {
  if (j.is_string() || j.is_number_integer()) {
    const Rational q = rationalFromJson(j);
    if (q.isZero()) throw ParseError("radical value must be nonzero");
    return RadicalElement::fromRational(q);
  }
  if (!j.is_object()) throw ParseError("radical must be an object or a rational string");
  const Rational torsion = j.contains("torsion") ? rationalFromJson(j["torsion"]) : Rational(0);
  std::map<Prime, Rational> exps;
  if (j.contains("exponents")) {
    const Json& e = j["exponents"];
    if (!e.is_object()) throw ParseError("exponents must be an object");
    for (const auto& [key, value] : e.items()) {
      const std::int64_t p = integerKey(key);
      if (p < 2) throw ParseError("exponent key " + key + " is not a prime");
      exps[static_cast<Prime>(p)] = rationalFromJson(value);
    }
  }
  try {
    return RadicalElement(torsion, std::move(exps));
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

Json toJson(const FieldElement& x) {
  Json out = Json::object();
  for (const auto& [cls, q] : x.terms()) out[std::to_string(cls.squarefree())] = toJson(q);
  return out;
}

FieldElement fieldElementFromJson(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return FieldElement(rationalFromJson(j));
  if (!j.is_object()) throw ParseError("field element must be an object or a rational string");
  FieldElement x;
  for (const auto& [key, value] : j.items()) {
    const std::int64_t d = integerKey(key);
    if (d == 0) throw ParseError("square-class key must be nonzero");
    x += FieldElement(SquareClass::ofInteger(d), rationalFromJson(value));
  }
  return x;
}

Json elementToJson(const FiniteAbelianGroup& g, std::size_t index) { return g.element(index); }

std::size_t elementFromJson(const FiniteAbelianGroup& g, const Json& j) {
  if (!j.is_array() || j.size() != g.rank()) {
    throw ParseError("group element must be a tuple of length " + std::to_string(g.rank()));
  }
  GroupElement e;
  for (const auto& x : j) e.push_back(static_cast<long>(integer(x, "group element entry")));
  return g.index(e);
}

FiniteAbelianGroup groupFromJson(const Json& doc) {
  std::vector<long> orders;
  for (const auto& n : array(member(doc, "cyclic_orders"), "cyclic_orders")) {
    orders.push_back(static_cast<long>(integer(n, "cyclic order")));
  }
  return FiniteAbelianGroup(std::move(orders));
}

TwoCocycle cocycleFromJson(const FiniteAbelianGroup& g, const Json& values) {
  std::vector<RadicalElement> table(g.order() * g.order());
  for (const auto& row : array(values, "cocycle values")) {
    if (!row.is_array() || row.size() != 3) throw ParseError("cocycle entry must be [g, h, value]");
    const std::size_t a = elementFromJson(g, row[0]);
    const std::size_t b = elementFromJson(g, row[1]);
    table[a * g.order() + b] = radicalFromJson(row[2]);
  }
  return TwoCocycle(g, std::move(table));
}

TwoCocycle cocycleFromJson(const Json& doc) { return cocycleFromJson(groupFromJson(doc), member(doc, "values")); }

Json toJson(const TwoCocycle& c) {
  const auto& G = c.group();
  Json values = Json::array();
  for (std::size_t a = 0; a < G.order(); ++a) {
    for (std::size_t b = 0; b < G.order(); ++b) {
      values.push_back({elementToJson(G, a), elementToJson(G, b), toJson(c(a, b))});
    }
  }
  return {{"cyclic_orders", G.cyclicOrders()}, {"values", values}};
}

Json toJson(const OneCochain& a) {
  Json out = Json::array();
  for (std::size_t g = 0; g < a.group().order(); ++g) out.push_back({elementToJson(a.group(), g), toJson(a(g))});
  return out;
}

Json toJson(const GroupCharacter& chi) {
  Json out = Json::array();
  for (std::size_t g = 0; g < chi.group().order(); ++g) {
    out.push_back({elementToJson(chi.group(), g), toJson(chi(g).torsion())});
  }
  return out;
}

Json toJson(const MultiquadraticField& f) {
  Json out = Json::array();
  for (const auto& cls : f.squareClasses().basis()) out.push_back(cls.squarefree());
  return out;
}

MultiquadraticField fieldFromJson(const Json& generators) {
  std::vector<SquareClass> classes;
  for (const auto& d : array(generators, "field generators")) {
    const std::int64_t v = integer(d, "field generator");
    if (v == 0) throw ParseError("field generator must be nonzero");
    classes.push_back(SquareClass::ofInteger(v));
  }
  return MultiquadraticField::fromSquareClasses(classes);
}

QCurveDatum datumFromJson(const Json& doc) {
  const FiniteAbelianGroup G = groupFromJson(doc);
  std::vector<std::uint64_t> degrees(G.order(), 1);
  if (doc.contains("degrees")) {
    for (const auto& row : array(doc["degrees"], "degrees")) {
      if (!row.is_array() || row.size() != 2) throw ParseError("degree entry must be [g, degree]");
      const std::int64_t d = integer(row[1], "degree");
      if (d < 1) throw ParseError("degrees must be positive");
      degrees[elementFromJson(G, row[0])] = static_cast<std::uint64_t>(d);
    }
  }
  const Json& c = member(doc, "cocycle");
  TwoCocycle cocycle = cocycleFromJson(G, c.is_object() ? member(c, "values") : c);
  return {G, std::move(degrees), std::move(cocycle)};
}

FrobeniusAssignment frobeniusFromJson(const FiniteAbelianGroup& g, const Json& entries) {
  FrobeniusAssignment f;
  for (const auto& e : array(entries, "frobenius")) {
    FrobeniusEntry x;
    const std::int64_t p = integer(member(e, "p"), "p");
    if (p < 2) throw ParseError("p must be a prime");
    x.p = static_cast<Prime>(p);
    x.frobClass = elementFromJson(g, member(e, "frob"));
    x.ap = fieldElementFromJson(member(e, "a_p"));
    if (e.contains("good")) {
      if (!e["good"].is_boolean()) throw ParseError("good must be a boolean");
      x.goodReduction = e["good"].get<bool>();
    }
    f.entries.push_back(std::move(x));
  }
  return f;
}

Json toJson(const GL2TypeDescriptor& d) {
  return {{"E_generators", toJson(d.E)},
          {"F_generators", toJson(d.F)},
          {"epsilon", toJson(d.epsilon)},
          {"epsilon_order", d.epsilon.order()},
          {"epsilon_inversion_ambiguous", d.epsilonInversionAmbiguous},
          {"dimension", d.dimension},
          {"alpha", toJson(d.alpha)}};
}

Json toJson(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toJson(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrixFromJson(const Json& rows) {
  array(rows, "matrix");
  const std::size_t nr = rows.size();
  const std::size_t nc = nr == 0 ? 0 : array(rows[0], "matrix row").size();
  std::vector<Rational> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != nc) throw ParseError("matrix rows must have equal length");
    for (const auto& x : row) entries.push_back(rationalFromJson(x));
  }
  return RationalMatrix(nr, nc, std::move(entries));
}

DescentDatum descentFromJson(const Json& doc) {
  const FiniteAbelianGroup G = groupFromJson(doc);
  const std::int64_t n = integer(member(doc, "block_rank"), "block_rank");
  if (n < 1) throw ParseError("block_rank must be positive");
  std::vector<RationalMatrix> mu(G.order(), RationalMatrix::identity(static_cast<std::size_t>(n)));
  for (const auto& row : array(member(doc, "mu"), "mu")) {
    if (!row.is_array() || row.size() != 2) throw ParseError("mu entry must be [g, matrix]");
    mu[elementFromJson(G, row[0])] = matrixFromJson(row[1]);
  }
  return DescentDatum(G, static_cast<std::size_t>(n), std::move(mu));
}

DirichletCharacterData characterFromJson(const Json& j) {
  const std::int64_t N = integer(member(j, "modulus"), "modulus");
  std::map<std::int64_t, RootOfUnity> values;
  for (const auto& row : array(member(j, "values"), "epsilon values")) {
    if (!row.is_array() || row.size() != 2) throw ParseError("epsilon value must be [residue, torsion]");
    values[integer(row[0], "residue")] = RootOfUnity(rationalFromJson(row[1]));
  }
  return DirichletCharacterData(N, std::move(values), RootOfUnity(rationalFromJson(member(j, "at_minus_one"))));
}

Json toJson(const DirichletCharacterData& eps) {
  Json values = Json::array();
  for (const auto& [r, z] : eps.values()) values.push_back({r, toJson(z.torsion())});
  return {{"modulus", eps.modulus()}, {"values", values}, {"at_minus_one", toJson(eps.valueAtMinusOne().torsion())}};
}

TraceTable traceTableFromJson(const Json& doc) {
  TraceTable t;
  t.fieldE = fieldFromJson(member(doc, "E_generators"));
  t.epsilon = characterFromJson(member(doc, "epsilon"));
  for (const auto& e : array(member(doc, "entries"), "entries")) {
    TraceEntry x;
    const std::int64_t p = integer(member(e, "p"), "p");
    if (p < 2) throw ParseError("p must be a prime");
    x.p = static_cast<Prime>(p);
    x.ap = fieldElementFromJson(member(e, "a_p"));
    if (e.contains("good")) {
      if (!e["good"].is_boolean()) throw ParseError("good must be a boolean");
      x.good = e["good"].get<bool>();
    }
    t.entries.push_back(std::move(x));
  }
  if (doc.contains("bad_primes")) {
    for (const auto& p : array(doc["bad_primes"], "bad_primes")) {
      const std::int64_t v = integer(p, "bad prime");
      if (v < 2) throw ParseError("bad prime must be at least 2");
      t.badPrimes.insert(static_cast<Prime>(v));
    }
  }
  return t;
}

}  // namespace qcurve::io
