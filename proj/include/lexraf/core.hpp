#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lexraf/rational.hpp"

namespace lexraf {

/// Alternatives x_1, ..., x_K in priority order (position 0 is the most
/// important alternative), plus optional non-negative pay-offs aligned to
/// that order.
class PriorityContext {
 public:
  /// Throws InvalidContext when K < 2, labels repeat, or pay-offs are the
  /// wrong length or negative.
  static std::shared_ptr<const PriorityContext> create(
      std::vector<std::string> labels,
      std::optional<std::vector<Rational>> payoffs = std::nullopt);

  /// Labels "x1", ..., "xK".
  static std::shared_ptr<const PriorityContext> numbered(
      std::size_t arity, std::optional<std::vector<Rational>> payoffs = std::nullopt);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::optional<std::vector<Rational>>& payoffs() const noexcept { return payoffs_; }

  /// Zero-based priority position of `label`, if present.
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const PriorityContext&, const PriorityContext&) = default;

 private:
  PriorityContext() = default;

  std::vector<std::string> labels_;
  std::optional<std::vector<Rational>> payoffs_;
};

using ContextPtr = std::shared_ptr<const PriorityContext>;

/// A random availability function: values()[i] is the probability that the
/// i-th alternative in priority order is available.
class Raf {
 public:
  Raf(std::vector<Rational> values, ContextPtr ctx);

  const std::vector<Rational>& values() const noexcept { return values_; }
  const Rational& operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }
  const ContextPtr& context() const noexcept { return ctx_; }

  /// Exact equality of values; comparing RAFs from different contexts throws.
  friend bool operator==(const Raf& a, const Raf& b);

 private:
  std::vector<Rational> values_;
  ContextPtr ctx_;
};

/// Strict weak ordering on raw values, for use as a map key. This is a
/// storage order, not a preference.
struct RafValueLess {
  bool operator()(const Raf& a, const Raf& b) const { return a.values() < b.values(); }
};

/// "(1/5, 4/5)"
std::string to_string(const Raf& raf);
std::ostream& operator<<(std::ostream& os, const Raf& raf);

Raf make_raf(std::vector<Rational> values, const ContextPtr& ctx);

/// Throws ContextMismatch unless both RAFs live in equal contexts.
void require_same_context(const Raf& a, const Raf& b);

/// 1-based least index where a and b differ, or nullopt when a == b.
std::optional<std::size_t> first_difference(const Raf& a, const Raf& b);

bool strictly_dominates(const Raf& a, const Raf& b);
bool pointwise_geq(const Raf& a, const Raf& b);

/// Discretization of [0,1]^K: every combination of `levels` across K
/// coordinates.
class GridSpec {
 public:
  /// Sorts the levels; throws on duplicates, values outside [0,1], an empty
  /// level list, or arity < 2.
  GridSpec(std::vector<Rational> levels, std::size_t arity);

  const std::vector<Rational>& levels() const noexcept { return levels_; }
  std::size_t arity() const noexcept { return arity_; }

  /// levels^arity, saturating at SIZE_MAX.
  std::size_t point_count() const noexcept;

  /// "{0, 1/2, 1}^2"
  std::string describe() const;

 private:
  std::vector<Rational> levels_;
  std::size_t arity_;
};

/// All grid points, first coordinate most significant, levels ascending.
std::vector<Raf> grid_points(const GridSpec& spec, const ContextPtr& ctx);

}  // namespace lexraf
