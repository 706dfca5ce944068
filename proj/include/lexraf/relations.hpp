#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lexraf/core.hpp"

namespace lexraf {

enum class Outcome { FirstPreferred, SecondPreferred, Indifferent };

std::string_view to_string(Outcome outcome);

/// Outcome of compare(b, a) given the outcome of compare(a, b).
constexpr Outcome mirror(Outcome o) noexcept {
  switch (o) {
    case Outcome::FirstPreferred: return Outcome::SecondPreferred;
    case Outcome::SecondPreferred: return Outcome::FirstPreferred;
    case Outcome::Indifferent: return Outcome::Indifferent;
  }
  return o;
}

/// The weak relation "first is at least as good as second".
constexpr bool at_least_as_good(Outcome o) noexcept { return o != Outcome::SecondPreferred; }

/// Comparator contract shared by every relation. Reflexivity and mirror
/// consistency are expected of conforming relations; transitivity is not
/// promised and is left for the axiom checkers to audit.
class PreferenceRelation {
 public:
  virtual ~PreferenceRelation() = default;
  virtual Outcome compare(const Raf& a, const Raf& b) const = 0;
  virtual std::string name() const = 0;
};

Outcome lex_compare(const Raf& a, const Raf& b);

/// Lexicographic relation scanning coordinates in `order` (0-based priority
/// positions). The default order is the context's own priority order.
class LexRelation final : public PreferenceRelation {
 public:
  LexRelation() = default;
  explicit LexRelation(std::vector<std::size_t> order);

  /// Scans x_K first and x_1 last.
  static LexRelation reversed(std::size_t arity);

  Outcome compare(const Raf& a, const Raf& b) const override;
  std::string name() const override;

 private:
  std::vector<std::size_t> order_;
};

/// max over alternatives of payoff(x) * A(x). Throws MissingPayoffs when the
/// context carries no pay-offs.
Rational mep_utility(const Raf& a);

using UtilityFunction = std::function<Rational(const Raf&)>;

/// Exact comparison of u(a) and u(b); ties are Indifferent.
Outcome utility_compare(const Raf& a, const Raf& b, const UtilityFunction& u);

class UtilityRelation final : public PreferenceRelation {
 public:
  UtilityRelation(UtilityFunction u, std::string name);

  Outcome compare(const Raf& a, const Raf& b) const override;
  std::string name() const override { return name_; }

 private:
  UtilityFunction u_;
  std::string name_;
};

/// Maximum expected pay-off relation.
UtilityRelation make_mep_relation();

/// One positive integer weight per alternative, in priority order.
class WeightVector {
 public:
  explicit WeightVector(std::vector<unsigned> weights);
  const std::vector<unsigned>& values() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }

 private:
  std::vector<unsigned> weights_;
};

/// Orders RAFs by sum of w_i * ln A(x_i), evaluated as an exact comparison of
/// prod A(x_i)^w_i. RAFs with any zero coordinate share the bottom class.
Outcome wlog_compare(const Raf& a, const Raf& b, const WeightVector& w);

class WlogRelation final : public PreferenceRelation {
 public:
  explicit WlogRelation(WeightVector w) : w_(std::move(w)) {}
  Outcome compare(const Raf& a, const Raf& b) const override { return wlog_compare(a, b, w_); }
  std::string name() const override { return "wlog"; }

 private:
  WeightVector w_;
};

/// Arbitrary comparator, mostly for building deliberately broken relations.
class FunctionRelation final : public PreferenceRelation {
 public:
  using Fn = std::function<Outcome(const Raf&, const Raf&)>;
  FunctionRelation(Fn fn, std::string name) : fn_(std::move(fn)), name_(std::move(name)) {}
  Outcome compare(const Raf& a, const Raf& b) const override { return fn_(a, b); }
  std::string name() const override { return name_; }

 private:
  Fn fn_;
  std::string name_;
};

/// A finite set of distinct RAFs in a fixed canonical order.
class PointSet {
 public:
  explicit PointSet(std::vector<Raf> points);

  const std::vector<Raf>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  const Raf& operator[](std::size_t i) const { return points_[i]; }
  std::optional<std::size_t> index_of(const Raf& raf) const;

 private:
  std::vector<Raf> points_;
  std::map<Raf, std::size_t, RafValueLess> index_;
};

using PointSetPtr = std::shared_ptr<const PointSet>;

/// A total preorder on a finite domain, stored as one rank per point
/// (0 = most preferred block). Ranks must cover 0..m contiguously.
class RankedRelation {
 public:
  RankedRelation(PointSetPtr domain, std::vector<unsigned> ranks);

  const PointSetPtr& domain() const noexcept { return domain_; }
  const std::vector<unsigned>& ranks() const noexcept { return ranks_; }
  unsigned block_count() const noexcept { return blocks_; }

  /// Throws UnknownPoint for RAFs outside the domain.
  unsigned rank_of(const Raf& raf) const;

  /// Best-to-worst chain such as "(1, 1) ≻ (1, 0) ∼ (0, 1) ≻ (0, 0)".
  std::string chain() const;

  friend bool operator==(const RankedRelation& a, const RankedRelation& b) {
    return a.domain_ == b.domain_ && a.ranks_ == b.ranks_;
  }

 private:
  PointSetPtr domain_;
  std::vector<unsigned> ranks_;
  unsigned blocks_ = 0;
};

class TableRelation final : public PreferenceRelation {
 public:
  explicit TableRelation(RankedRelation ranks, std::string name = "table")
      : ranks_(std::move(ranks)), name_(std::move(name)) {}

  Outcome compare(const Raf& a, const Raf& b) const override;
  std::string name() const override { return name_; }
  const RankedRelation& table() const noexcept { return ranks_; }

 private:
  RankedRelation ranks_;
  std::string name_;
};

TableRelation table_relation(RankedRelation ranks);

}  // namespace lexraf
