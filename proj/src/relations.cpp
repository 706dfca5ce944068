#include "lexraf/relations.hpp"

#include <algorithm>
#include <numeric>

namespace lexraf {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::FirstPreferred: return "FirstPreferred";
    case Outcome::SecondPreferred: return "SecondPreferred";
    case Outcome::Indifferent: return "Indifferent";
  }
  return "?";
}

namespace {

Outcome from_ordering(std::strong_ordering c) {
  if (c > 0) return Outcome::FirstPreferred;
  if (c < 0) return Outcome::SecondPreferred;
  return Outcome::Indifferent;
}

}  // namespace

Outcome lex_compare(const Raf& a, const Raf& b) {
  auto k = first_difference(a, b);
  if (!k) return Outcome::Indifferent;
  return from_ordering(a[*k - 1] <=> b[*k - 1]);
}

LexRelation::LexRelation(std::vector<std::size_t> order) : order_(std::move(order)) {
  std::vector<std::size_t> sorted = order_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) {
      throw Error(ErrorKind::InvalidArgument, "lexicographic scan order must be a permutation");
    }
  }
}

LexRelation LexRelation::reversed(std::size_t arity) {
  std::vector<std::size_t> order(arity);
  std::iota(order.rbegin(), order.rend(), std::size_t{0});
  return LexRelation(std::move(order));
}

Outcome LexRelation::compare(const Raf& a, const Raf& b) const {
  if (order_.empty()) return lex_compare(a, b);
  require_same_context(a, b);
  if (order_.size() != a.size()) {
    throw Error(ErrorKind::ArityMismatch, "scan order length does not match the RAF arity");
  }
  for (auto i : order_) {
    if (a[i] != b[i]) return from_ordering(a[i] <=> b[i]);
  }
  return Outcome::Indifferent;
}

std::string LexRelation::name() const {
  if (order_.empty()) return "lex";
  std::string out = "lex[";
  for (std::size_t i = 0; i < order_.size(); ++i) {
    out += (i ? "," : "") + std::to_string(order_[i] + 1);
  }
  return out + "]";
}

Rational mep_utility(const Raf& a) {
  const auto& payoffs = a.context()->payoffs();
  if (!payoffs) throw Error(ErrorKind::MissingPayoffs, "the context has no pay-offs");
  Rational best = (*payoffs)[0] * a[0];
  for (std::size_t i = 1; i < a.size(); ++i) {
    best = std::max(best, (*payoffs)[i] * a[i]);
  }
  return best;
}

Outcome utility_compare(const Raf& a, const Raf& b, const UtilityFunction& u) {
  return from_ordering(u(a) <=> u(b));
}

UtilityRelation::UtilityRelation(UtilityFunction u, std::string name)
    : u_(std::move(u)), name_(std::move(name)) {
  if (!u_) throw Error(ErrorKind::InvalidArgument, "empty utility function");
}

Outcome UtilityRelation::compare(const Raf& a, const Raf& b) const {
  require_same_context(a, b);
  return utility_compare(a, b, u_);
}

UtilityRelation make_mep_relation() { return UtilityRelation(mep_utility, "mep"); }

WeightVector::WeightVector(std::vector<unsigned> weights) : weights_(std::move(weights)) {
  for (auto w : weights_) {
    if (w < 1) throw Error(ErrorKind::InvalidArgument, "weights must be positive integers");
  }
}

Outcome wlog_compare(const Raf& a, const Raf& b, const WeightVector& w) {
  require_same_context(a, b);
  if (w.size() != a.size()) {
    throw Error(ErrorKind::WeightArityMismatch, "expected one weight per alternative");
  }
  auto has_zero = [](const Raf& r) {
    return std::any_of(r.values().begin(), r.values().end(),
                       [](const Rational& v) { return v.is_zero(); });
  };
  const bool a_bottom = has_zero(a);
  const bool b_bottom = has_zero(b);
  if (a_bottom || b_bottom) {
    if (a_bottom && b_bottom) return Outcome::Indifferent;
    return a_bottom ? Outcome::SecondPreferred : Outcome::FirstPreferred;
  }

  // prod (p_i/q_i)^w_i compared by cross-multiplying the integer products
  BigInt a_num = 1, a_den = 1, b_num = 1, b_den = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const unsigned e = w.values()[i];
    a_num *= boost::multiprecision::pow(a[i].numerator(), e);
    a_den *= boost::multiprecision::pow(a[i].denominator(), e);
    b_num *= boost::multiprecision::pow(b[i].numerator(), e);
    b_den *= boost::multiprecision::pow(b[i].denominator(), e);
  }
  BigInt lhs = a_num * b_den;
  BigInt rhs = b_num * a_den;
  return from_ordering(lhs.compare(rhs) <=> 0);
}

PointSet::PointSet(std::vector<Raf> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (i > 0) require_same_context(points_[0], points_[i]);
    if (!index_.emplace(points_[i], i).second) {
      throw Error(ErrorKind::InvalidArgument,
                  "duplicate point " + to_string(points_[i]) + " in domain");
    }
  }
}

std::optional<std::size_t> PointSet::index_of(const Raf& raf) const {
  auto it = index_.find(raf);
  if (it == index_.end()) return std::nullopt;
  if (!points_.empty()) require_same_context(points_[0], raf);
  return it->second;
}

RankedRelation::RankedRelation(PointSetPtr domain, std::vector<unsigned> ranks)
    : domain_(std::move(domain)), ranks_(std::move(ranks)) {
  if (!domain_ || ranks_.size() != domain_->size()) {
    throw Error(ErrorKind::InvalidArgument, "expected exactly one rank per domain point");
  }
  if (ranks_.empty()) return;
  const unsigned top = *std::max_element(ranks_.begin(), ranks_.end());
  std::vector<bool> used(top + 1, false);
  for (auto r : ranks_) used[r] = true;
  if (std::find(used.begin(), used.end(), false) != used.end()) {
    throw Error(ErrorKind::NonContiguousRanks, "ranks must cover 0.." + std::to_string(top));
  }
  blocks_ = top + 1;
}

unsigned RankedRelation::rank_of(const Raf& raf) const {
  auto idx = domain_->index_of(raf);
  if (!idx) throw Error(ErrorKind::UnknownPoint, to_string(raf) + " is not in the table domain");
  return ranks_[*idx];
}

std::string RankedRelation::chain() const {
  std::string out;
  for (unsigned block = 0; block < blocks_; ++block) {
    bool first_in_block = true;
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      if (ranks_[i] != block) continue;
      if (!out.empty()) out += first_in_block ? " ≻ " : " ∼ ";
      out += to_string((*domain_)[i]);
      first_in_block = false;
    }
  }
  return out;
}

Outcome TableRelation::compare(const Raf& a, const Raf& b) const {
  const unsigned ra = ranks_.rank_of(a);
  const unsigned rb = ranks_.rank_of(b);
  if (ra < rb) return Outcome::FirstPreferred;
  if (ra > rb) return Outcome::SecondPreferred;
  return Outcome::Indifferent;
}

TableRelation table_relation(RankedRelation ranks) { return TableRelation(std::move(ranks)); }

}  // namespace lexraf
