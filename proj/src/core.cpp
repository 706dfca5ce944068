#include "lexraf/core.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace lexraf {

std::shared_ptr<const PriorityContext> PriorityContext::create(
    std::vector<std::string> labels, std::optional<std::vector<Rational>> payoffs) {
  if (labels.size() < 2) {
    throw Error(ErrorKind::InvalidContext, "a context needs at least two alternatives");
  }
  std::set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) {
      throw Error(ErrorKind::InvalidContext, "duplicate alternative label '" + label + "'");
    }
  }
  if (payoffs) {
    if (payoffs->size() != labels.size()) {
      throw Error(ErrorKind::InvalidContext, "expected one pay-off per alternative");
    }
    for (std::size_t i = 0; i < payoffs->size(); ++i) {
      if ((*payoffs)[i].sign() < 0) {
        throw Error(ErrorKind::InvalidContext,
                    "pay-off for '" + labels[i] + "' must be non-negative");
      }
    }
  }
  auto ctx = std::shared_ptr<PriorityContext>(new PriorityContext());
  ctx->labels_ = std::move(labels);
  ctx->payoffs_ = std::move(payoffs);
  return ctx;
}

std::shared_ptr<const PriorityContext> PriorityContext::numbered(
    std::size_t arity, std::optional<std::vector<Rational>> payoffs) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= arity; ++i) labels.push_back("x" + std::to_string(i));
  return create(std::move(labels), std::move(payoffs));
}

std::optional<std::size_t> PriorityContext::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Raf::Raf(std::vector<Rational> values, ContextPtr ctx)
    : values_(std::move(values)), ctx_(std::move(ctx)) {
  if (!ctx_) throw Error(ErrorKind::InvalidContext, "RAF without a context");
  if (values_.size() != ctx_->size()) {
    throw Error(ErrorKind::ArityMismatch, "RAF has " + std::to_string(values_.size()) +
                                              " values but the context has " +
                                              std::to_string(ctx_->size()) + " alternatives");
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i].sign() < 0 || values_[i] > Rational(1)) {
      throw Error(ErrorKind::OutOfRange, "availability of '" + ctx_->labels()[i] + "' is " +
                                             values_[i].to_string() + ", outside [0,1]");
    }
  }
}

void require_same_context(const Raf& a, const Raf& b) {
  if (a.context() == b.context()) return;
  if (*a.context() == *b.context()) return;
  throw Error(ErrorKind::ContextMismatch, "RAFs belong to different priority contexts");
}

bool operator==(const Raf& a, const Raf& b) {
  require_same_context(a, b);
  return a.values_ == b.values_;
}

std::string to_string(const Raf& raf) {
  std::string out = "(";
  for (std::size_t i = 0; i < raf.size(); ++i) {
    if (i) out += ", ";
    out += raf[i].to_string();
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Raf& raf) { return os << to_string(raf); }

Raf make_raf(std::vector<Rational> values, const ContextPtr& ctx) {
  return Raf(std::move(values), ctx);
}

std::optional<std::size_t> first_difference(const Raf& a, const Raf& b) {
  require_same_context(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return i + 1;
  }
  return std::nullopt;
}

bool strictly_dominates(const Raf& a, const Raf& b) {
  require_same_context(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] > b[i])) return false;
  }
  return true;
}

bool pointwise_geq(const Raf& a, const Raf& b) {
  require_same_context(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

GridSpec::GridSpec(std::vector<Rational> levels, std::size_t arity)
    : levels_(std::move(levels)), arity_(arity) {
  if (levels_.empty()) throw Error(ErrorKind::InvalidArgument, "grid needs at least one level");
  if (arity_ < 2) throw Error(ErrorKind::InvalidArgument, "grid arity must be at least 2");
  std::sort(levels_.begin(), levels_.end());
  if (std::adjacent_find(levels_.begin(), levels_.end()) != levels_.end()) {
    throw Error(ErrorKind::InvalidArgument, "grid levels must be distinct");
  }
  if (levels_.front().sign() < 0 || levels_.back() > Rational(1)) {
    throw Error(ErrorKind::OutOfRange, "grid levels must lie in [0,1]");
  }
}

std::size_t GridSpec::point_count() const noexcept {
  std::size_t count = 1;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (count > std::numeric_limits<std::size_t>::max() / levels_.size()) {
      return std::numeric_limits<std::size_t>::max();
    }
    count *= levels_.size();
  }
  return count;
}

std::string GridSpec::describe() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < levels_.size(); ++i) os << (i ? ", " : "") << levels_[i];
  os << "}^" << arity_;
  return os.str();
}

std::vector<Raf> grid_points(const GridSpec& spec, const ContextPtr& ctx) {
  if (ctx->size() != spec.arity()) {
    throw Error(ErrorKind::ArityMismatch, "grid arity does not match the context");
  }
  const std::size_t levels = spec.levels().size();
  std::vector<Raf> points;
  points.reserve(spec.point_count());
  std::vector<std::size_t> digits(spec.arity(), 0);
  while (true) {
    std::vector<Rational> values;
    values.reserve(digits.size());
    for (auto d : digits) values.push_back(spec.levels()[d]);
    points.emplace_back(std::move(values), ctx);

    // odometer, last coordinate fastest
    std::size_t pos = digits.size();
    while (pos > 0) {
      --pos;
      if (++digits[pos] < levels) break;
      digits[pos] = 0;
      if (pos == 0) return points;
    }
  }
}

}  // namespace lexraf
