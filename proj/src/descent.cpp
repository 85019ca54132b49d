#include "qcurve/descent.hpp"

#include <algorithm>
#include <string>

#include "qcurve/errors.hpp"

namespace qcurve {

FactorProduct FactorProduct::standard(const FiniteAbelianGroup& g, std::size_t blockRank) {
  if (blockRank == 0) throw InvalidInput("block rank must be positive");
  FactorProduct p;
  p.labels.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) p.labels[i] = i;
  p.blockRank = blockRank;
  return p;
}

std::size_t FactorProduct::slotOf(std::size_t label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InvalidInput("no factor labelled " + std::to_string(label));
  return static_cast<std::size_t>(it - labels.begin());
}

namespace {

void checkProduct(const FactorProduct& p) {
  if (p.blockRank == 0) throw InvalidInput("block rank must be positive");
  std::vector<std::size_t> sorted = p.labels;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw InvalidInput("factor labels must enumerate the group once");
  }
}

}  // namespace

IsogenyBlockMap::IsogenyBlockMap(FactorProduct source, FactorProduct target)
    : IsogenyBlockMap(source, target, RationalMatrix(target.dimension(), source.dimension())) {}

IsogenyBlockMap::IsogenyBlockMap(FactorProduct source, FactorProduct target, RationalMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  checkProduct(source_);
  checkProduct(target_);
  if (source_.blockRank != target_.blockRank) throw InvalidInput("block ranks differ");
  if (matrix_.rows() != target_.dimension() || matrix_.cols() != source_.dimension()) {
    throw InvalidInput("block map has the wrong shape");
  }
}

IsogenyBlockMap IsogenyBlockMap::identity(const FactorProduct& p) {
  return IsogenyBlockMap(p, p, RationalMatrix::identity(p.dimension()));
}

RationalMatrix IsogenyBlockMap::block(std::size_t targetSlot, std::size_t sourceSlot) const {
  const std::size_t n = source_.blockRank;
  return matrix_.block(targetSlot * n, sourceSlot * n, n, n);
}

void IsogenyBlockMap::setBlock(std::size_t targetSlot, std::size_t sourceSlot, const RationalMatrix& m) {
  const std::size_t n = source_.blockRank;
  if (m.rows() != n || m.cols() != n) throw InvalidInput("block has the wrong size");
  matrix_.setBlock(targetSlot * n, sourceSlot * n, m);
}

IsogenyBlockMap operator*(const IsogenyBlockMap& a, const IsogenyBlockMap& b) {
  if (!(b.target_ == a.source_)) throw InvalidInput("block maps are not composable");
  return IsogenyBlockMap(b.source_, a.target_, a.matrix_ * b.matrix_);
}

IsogenyBlockMap operator*(const Rational& s, const IsogenyBlockMap& m) {
  return IsogenyBlockMap(m.source_, m.target_, s * m.matrix_);
}

IsogenyBlockMap operator+(const IsogenyBlockMap& a, const IsogenyBlockMap& b) {
  if (!(a.source_ == b.source_) || !(a.target_ == b.target_)) throw InvalidInput("block maps have different shapes");
  return IsogenyBlockMap(a.source_, a.target_, a.matrix_ + b.matrix_);
}

DescentDatum::DescentDatum(FiniteAbelianGroup group, std::size_t blockRank, std::vector<RationalMatrix> mu)
    : group_(std::move(group)), blockRank_(blockRank), mu_(std::move(mu)) {
  if (blockRank_ == 0) throw InvalidInput("block rank must be positive");
  if (mu_.size() != group_.order()) throw InvalidInput("need one isogeny per group element");
  for (std::size_t s = 0; s < mu_.size(); ++s) {
    if (mu_[s].rows() != blockRank_ || mu_[s].cols() != blockRank_) {
      throw InvalidInput("mu at " + group_.format(s) + " is not " + std::to_string(blockRank_) + "x" + std::to_string(blockRank_));
    }
    if (!mu_[s].isInvertible()) throw InvalidInput("mu at " + group_.format(s) + " is not invertible");
  }
  if (!(mu_[group_.identity()] == RationalMatrix::identity(blockRank_))) throw InvalidInput("mu at the identity must be 1");
}

DescentDatum DescentDatum::trivial(const FiniteAbelianGroup& group, std::size_t blockRank) {
  return DescentDatum(group, blockRank, std::vector<RationalMatrix>(group.order(), RationalMatrix::identity(blockRank)));
}

TransportedIsogeny DescentDatum::transport(std::size_t g, std::size_t tau) const {
  return {group_.multiply(g, tau), g, mu_.at(tau)};
}

DescentDatum pointwiseProduct(const DescentDatum& a, const DescentDatum& b) {
  if (!(a.group() == b.group()) || a.blockRank() != b.blockRank()) throw InvalidInput("descent data have different shapes");
  std::vector<RationalMatrix> mu;
  for (std::size_t s = 0; s < a.group().order(); ++s) mu.push_back(a.mu(s) * b.mu(s));
  return DescentDatum(a.group(), a.blockRank(), std::move(mu));
}

std::optional<CompatibilityViolation> verifyCompatibility81(const DescentDatum& d) {
  const auto& G = d.group();
  for (std::size_t s = 0; s < G.order(); ++s) {
    for (std::size_t t = 0; t < G.order(); ++t) {
      if (!(d.mu(s) * d.transport(s, t).matrix == d.mu(G.multiply(s, t)))) return CompatibilityViolation{s, t};
    }
  }
  return std::nullopt;
}

std::vector<IsogenyBlockMap> buildRestriction(const DescentDatum& d) {
  if (auto v = verifyCompatibility81(d)) {
    throw CompatibilityRequired("mu_s s(mu_t) != mu_st at s = " + d.group().format(v->sigma) + ", t = " + d.group().format(v->tau));
  }
  const auto& G = d.group();
  const FactorProduct X = FactorProduct::standard(G, d.blockRank());
  std::vector<IsogenyBlockMap> ops;
  ops.reserve(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    IsogenyBlockMap op(X, X);
    for (std::size_t t = 0; t < G.order(); ++t) {
      // t(mu_g) has the entries of mu_g.
      op.setBlock(X.slotOf(t), X.slotOf(G.multiply(t, g)), d.mu(g));
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

IsogenyBlockMap blockwiseProduct(const IsogenyBlockMap& a, const IsogenyBlockMap& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) throw InvalidInput("block maps have different shapes");
  IsogenyBlockMap out(a.source(), a.target());
  for (std::size_t t = 0; t < a.target().slots(); ++t) {
    for (std::size_t s = 0; s < a.source().slots(); ++s) out.setBlock(t, s, a.block(t, s) * b.block(t, s));
  }
  return out;
}

DescentReport etaDescent(const DescentDatum& d) {
  const std::vector<IsogenyBlockMap> ops = buildRestriction(d);
  const auto& G = d.group();
  const std::size_t n = d.blockRank();

  DescentReport r;
  r.eta = ops[0];
  for (std::size_t g = 1; g < ops.size(); ++g) r.eta = r.eta + ops[g];

  r.fixedByGroup = std::all_of(ops.begin(), ops.end(), [&](const IsogenyBlockMap& op) {
    return op * r.eta == r.eta && r.eta * op == r.eta;
  });
  const IsogenyBlockMap e = Rational(1) / Rational(static_cast<long>(G.order())) * r.eta;
  r.scaledIdempotent = e * e == e;
  r.rank = r.eta.matrix().rank();
  r.rankMatches = r.rank == n;
  for (std::size_t t = 0; t < G.order(); ++t) {
    r.slotRanks.push_back(r.eta.matrix().block(t * n, 0, n, r.eta.matrix().cols()).rank());
  }
  r.diagonalImage = std::all_of(r.slotRanks.begin(), r.slotRanks.end(), [&](std::size_t k) { return k == n; });
  return r;
}

IotaModel iotaModel(const DescentDatum& d) {
  IotaModel m;
  m.group = d.group();
  m.blockRank = d.blockRank();
  m.bAction = buildRestriction(d);
  const auto& G = d.group();
  const std::size_t n = d.blockRank();
  const FactorProduct X = FactorProduct::standard(G, n);
  const RationalMatrix one = RationalMatrix::identity(n);

  for (std::size_t g = 0; g < G.order(); ++g) {
    IsogenyBlockMap op(X, X);
    for (std::size_t s = 0; s < G.order(); ++s) op.setBlock(G.multiply(g, s), s, one);
    m.tAction.push_back(std::move(op));
  }
  m.iota = IsogenyBlockMap(X, X);
  for (std::size_t s = 0; s < G.order(); ++s) {
    const std::size_t si = G.inverse(s);
    m.iota.setBlock(si, s, d.transport(si, s).matrix);
  }
  return m;
}

IotaModel iotaModel(const QCurveDatum& d) {
  if (!validateQCurveDatum(d).isValid()) throw InvalidInput("invalid Q-curve datum");
  const auto& G = d.group;
  const FactorProduct X = FactorProduct::standard(G, 1);
  auto c = [&](std::size_t g, std::size_t h) { return RationalMatrix::scalar(1, *d.cocycle(g, h).toRational()); };

  IotaModel m;
  m.group = G;
  m.blockRank = 1;
  for (std::size_t g = 0; g < G.order(); ++g) {
    IsogenyBlockMap t(X, X);
    IsogenyBlockMap b(X, X);
    for (std::size_t s = 0; s < G.order(); ++s) {
      t.setBlock(G.multiply(g, s), s, c(g, s));
      b.setBlock(s, G.multiply(s, g), c(s, g));
    }
    m.tAction.push_back(std::move(t));
    m.bAction.push_back(std::move(b));
  }
  m.iota = IsogenyBlockMap(X, X);
  for (std::size_t s = 0; s < G.order(); ++s) m.iota.setBlock(G.inverse(s), s, c(G.inverse(s), s));
  return m;
}

std::optional<EquivarianceCounterexample> verifyIotaEquivariance(const IotaModel& m) {
  if (m.tAction.size() != m.group.order() || m.bAction.size() != m.group.order()) {
    throw InvalidInput("need one action operator per group element");
  }
  for (std::size_t g = 0; g < m.group.order(); ++g) {
    const RationalMatrix lhs = (m.iota * m.tAction[g]).matrix();
    const RationalMatrix rhs = (m.bAction[g] * m.iota).matrix();
    for (std::size_t col = 0; col < lhs.cols(); ++col) {
      for (std::size_t row = 0; row < lhs.rows(); ++row) {
        if (lhs(row, col) != rhs(row, col)) return EquivarianceCounterexample{g, col};
      }
    }
  }
  return std::nullopt;
}

std::size_t orbitSpanRank(const std::vector<IsogenyBlockMap>& ops, std::size_t basisIndex) {
  if (ops.empty()) return 0;
  const std::size_t dim = ops.front().matrix().rows();
  RationalMatrix span(dim, ops.size());
  for (std::size_t j = 0; j < ops.size(); ++j) {
    const RationalMatrix& a = ops[j].matrix();
    if (basisIndex >= a.cols()) throw InvalidInput("basis index out of range");
    for (std::size_t i = 0; i < dim; ++i) span(i, j) = a(i, basisIndex);
  }
  return span.rank();
}

}  // namespace qcurve
