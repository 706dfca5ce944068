#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lexraf/relations.hpp"

namespace lexraf {

enum class AxiomId {
  Reflexive,
  MirrorConsistent,
  Connected,
  Transitive,
  WeakDominance,
  StrongMonotonicity,
  StrongDominance,
  NonCompensation,
  Axiom2MS,
  IWA,
  WeakIWA,
};

std::string_view to_string(AxiomId id);

/// Accepts the stable names above plus the short aliases SM, SD, WD and NC.
std::optional<AxiomId> parse_axiom(std::string_view name);

/// Every axiom, in declaration order.
std::span<const AxiomId> all_axioms();

/// The four axioms covered by check_order_axioms.
std::span<const AxiomId> order_axioms();

enum class CheckMode { Exhaustive, Sampled };

std::string_view to_string(CheckMode mode);

/// A concrete counterexample. `witness` holds the offending RAFs in the
/// order the axiom names them (A, B[, C[, D]]); `observed` holds the
/// outcomes the check consulted:
///
///   Reflexive                      compare(A,A)
///   MirrorConsistent, Connected    compare(A,B), compare(B,A)
///   Transitive                     compare(A,B), compare(B,C), compare(A,C)
///   pairwise dominance axioms      compare(A,B)
///   quadruple axioms               compare(A,B), compare(C,D)
struct AxiomViolation {
  AxiomId axiom;
  std::vector<Raf> witness;
  std::vector<std::size_t> sample_indices;  // 0-based positions in the sample
  std::optional<std::size_t> k;             // 1-based priority index, when relevant
  std::vector<Outcome> observed;
};

/// Re-runs the relation on the witness; true iff the violation still occurs.
bool replay_violation(const PreferenceRelation& rel, const AxiomViolation& violation);

struct AxiomResult {
  AxiomId axiom;
  CheckMode mode = CheckMode::Exhaustive;
  /// Tuples visited: n points, n(n-1) ordered distinct pairs, n^3 triples or
  /// n^4 quadruples in exhaustive mode; the draw count in sampled mode.
  std::uint64_t tuples_examined = 0;
  /// Tuples satisfying the axiom's hypothesis. For IWA a quadruple counts
  /// once per qualifying k.
  std::uint64_t qualifying = 0;
  std::uint64_t violation_count = 0;
  /// The first violation in enumeration order, or all of them in
  /// all-violations mode.
  std::vector<AxiomViolation> violations;

  bool passed() const noexcept { return violation_count == 0; }
  bool vacuous() const noexcept { return qualifying == 0; }
};

struct AxiomReport {
  std::size_t sample_size = 0;
  std::vector<AxiomResult> results;

  bool passed() const noexcept;
  const AxiomResult* find(AxiomId id) const noexcept;
  /// Throws InvalidArgument when the axiom was not checked.
  const AxiomResult& at(AxiomId id) const;
  void append(AxiomReport other);
};

struct CheckConfig {
  /// Quadruple axioms run exhaustively up to this many points (12^4 = 20736
  /// quadruples) and switch to seeded random draws above it.
  std::size_t quadruple_cap = 12;
  /// Same switch for transitivity triples.
  std::size_t triple_cap = 200;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  bool all_violations = false;
};

using Sample = std::span<const Raf>;

AxiomReport check_order_axioms(const PreferenceRelation& rel, Sample sample,
                               const CheckConfig& cfg = {});
AxiomReport check_weak_dominance(const PreferenceRelation& rel, Sample sample,
                                 const CheckConfig& cfg = {});
AxiomReport check_strong_monotonicity(const PreferenceRelation& rel, Sample sample,
                                      const CheckConfig& cfg = {});
AxiomReport check_strong_dominance(const PreferenceRelation& rel, Sample sample,
                                   const CheckConfig& cfg = {});
AxiomReport check_non_compensation(const PreferenceRelation& rel, Sample sample,
                                   const CheckConfig& cfg = {});
AxiomReport check_axiom2_ms(const PreferenceRelation& rel, Sample sample,
                            const CheckConfig& cfg = {});
AxiomReport check_iwa(const PreferenceRelation& rel, Sample sample, const CheckConfig& cfg = {});
AxiomReport check_weak_iwa(const PreferenceRelation& rel, Sample sample,
                           const CheckConfig& cfg = {});

/// Runs the named checks in the given order. The order axioms are checked
/// individually when listed individually.
AxiomReport check_axioms(const PreferenceRelation& rel, Sample sample,
                         std::span<const AxiomId> axioms, const CheckConfig& cfg = {});

// Hypotheses of the quadruple axioms, exposed so implications between them
// can be tested directly.

/// {x : A(x) > B(x)} = {x : C(x) > D(x)} and likewise for <.
bool qualifies_non_compensation(const Raf& a, const Raf& b, const Raf& c, const Raf& d);

/// A != B differ only at some y, C and D differ at most at y, A(y) = C(y)
/// and B(y) = D(y). Returns the 1-based y.
std::optional<std::size_t> qualifies_axiom2(const Raf& a, const Raf& b, const Raf& c,
                                             const Raf& d);

/// A(x_k) != B(x_k) and the difference signs agree on every i <= k.
/// `k` is 1-based.
bool qualifies_iwa(const Raf& a, const Raf& b, const Raf& c, const Raf& d, std::size_t k);

/// A != B, both pairs first differ at the same k, and the differences at k
/// have the same sign. Returns that k (1-based).
std::optional<std::size_t> qualifies_weak_iwa(const Raf& a, const Raf& b, const Raf& c,
                                               const Raf& d);

}  // namespace lexraf
