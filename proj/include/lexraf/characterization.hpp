#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexraf/axioms.hpp"
#include "lexraf/relations.hpp"

namespace lexraf {

inline constexpr std::size_t kDefaultMaxPoints = 9;

// ---------------------------------------------------------------------------
// Proof witness and trace

/// The hybrid RAF C with C(x_i) = B(x_i) for i <= k and C(x_i) = A(x_i) for
/// i > k, where k = first_difference(A, B). Throws EqualInputs when A == B.
Raf construct_proof_witness(const Raf& a, const Raf& b);

/// Result of replaying the characterization argument on one pair.
struct ProofTrace {
  std::size_t k = 0;  // 1-based
  Raf witness;        // C

  /// (i) C against A must be strict in the direction of C(x_k) vs A(x_k).
  Outcome c_vs_a;
  Outcome predicted_c_vs_a;
  bool monotonicity_step = false;

  /// (ii) A >= B and A >= C must agree.
  Outcome a_vs_b;
  Outcome a_vs_c;
  bool independence_step = false;

  /// (iii) The relation's verdict on (A, B) must equal the lexicographic one.
  Outcome lex_a_vs_b;
  bool conclusion_step = false;

  bool passed() const noexcept {
    return monotonicity_step && independence_step && conclusion_step;
  }
};

ProofTrace proof_trace_check(const PreferenceRelation& rel, const Raf& a, const Raf& b);

// ---------------------------------------------------------------------------
// Weak-order enumeration

/// Every total preorder on n points, as rank vectors (0 = best block).
///
/// Candidates are generated set partition by set partition (restricted
/// growth strings in lexicographic order), and within a partition by every
/// permutation of block ranks in std::next_permutation order. The global
/// index of a candidate is its position in that sequence, so contiguous
/// partition ranges map to contiguous index ranges.
class WeakOrderEnumerator {
 public:
  using Rank = std::uint8_t;

  /// Throws TooManyPoints when n > max_points, InvalidArgument when n == 0.
  explicit WeakOrderEnumerator(std::size_t n, std::size_t max_points = kDefaultMaxPoints);

  std::size_t points() const noexcept { return n_; }
  std::size_t partition_count() const noexcept { return blocks_.size(); }

  /// Total number of weak orders (the n-th Fubini number).
  std::uint64_t size() const noexcept { return offsets_.back(); }

  /// Global index of the first candidate generated from `partition`.
  std::uint64_t offset(std::size_t partition) const { return offsets_[partition]; }

  /// Calls fn(index, ranks) for every candidate from partitions [first, last).
  template <typename Fn>
  void for_each_in(std::size_t first, std::size_t last, Fn&& fn) const {
    std::vector<Rank> ranks(n_);
    std::vector<Rank> perm;
    std::uint64_t index = offsets_[first];
    for (std::size_t p = first; p < last; ++p) {
      const Rank* rgs = &rgs_[p * n_];
      perm.resize(blocks_[p]);
      std::iota(perm.begin(), perm.end(), Rank{0});
      do {
        for (std::size_t i = 0; i < n_; ++i) ranks[i] = perm[rgs[i]];
        fn(index++, std::span<const Rank>(ranks));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for_each_in(0, partition_count(), std::forward<Fn>(fn));
  }

 private:
  std::size_t n_;
  std::vector<Rank> rgs_;            // partition_count() rows of n entries
  std::vector<Rank> blocks_;         // block count per partition
  std::vector<std::uint64_t> offsets_;  // prefix sums of blocks!, one extra
};

/// Streams every weak order on `domain` as a RankedRelation.
template <typename Fn>
void enumerate_weak_orders(const PointSetPtr& domain, Fn&& fn,
                           std::size_t max_points = kDefaultMaxPoints) {
  WeakOrderEnumerator e(domain->size(), max_points);
  e.for_each([&](std::uint64_t, std::span<const WeakOrderEnumerator::Rank> ranks) {
    fn(RankedRelation(domain, std::vector<unsigned>(ranks.begin(), ranks.end())));
  });
}

// ---------------------------------------------------------------------------
// Axioms compiled against a fixed point set

/// Precomputed hypotheses of the axioms over a fixed point set, evaluated
/// directly on rank vectors.
///
/// Pairwise axioms become lists of pairs that must be strictly ordered.
/// Each quadruple axiom's hypothesis is an equivalence relation on ordered
/// pairs, so the biconditional over all qualifying quadruples holds iff the
/// weak relation is constant on every equivalence class; the classes are
/// stored flat.
class GridAxioms {
 public:
  using Rank = WeakOrderEnumerator::Rank;

  /// Supported: WeakDominance, StrongMonotonicity, StrongDominance,
  /// NonCompensation, Axiom2MS, IWA, WeakIWA.
  static bool supports(AxiomId id) noexcept;

  explicit GridAxioms(const PointSet& points);

  bool holds(AxiomId id, std::span<const Rank> ranks) const;

  std::size_t forced_pairs(AxiomId id) const;
  std::size_t class_count(AxiomId id) const;

 private:
  using Pair = std::pair<std::uint16_t, std::uint16_t>;

  struct Strict {
    std::vector<Pair> pairs;
  };
  struct Classes {
    std::vector<Pair> pairs;
    std::vector<std::uint32_t> starts;  // class c spans [starts[c], starts[c+1])
  };

  static bool strict_holds(const Strict& s, std::span<const Rank> ranks);
  static bool classes_hold(const Classes& c, std::span<const Rank> ranks);

  Strict weak_dominance_, strong_monotonicity_, strong_dominance_;
  Classes non_compensation_, axiom2_, iwa_, weak_iwa_;
};

// ---------------------------------------------------------------------------
// Characterization verifier

struct VerifyOptions {
  /// Reject candidates violating a strong-monotonicity pair before running
  /// the remaining checks. Only applied when StrongMonotonicity is in the
  /// axiom set.
  bool prune = true;
  unsigned workers = 1;
  std::size_t max_points = kDefaultMaxPoints;
  /// Survivors retained in the report; the count is always exact.
  std::size_t survivor_store_limit = 1000;
};

struct Survivor {
  std::uint64_t index;  // position in the enumeration
  RankedRelation relation;
  bool equals_lex;
};

struct CharacterizationReport {
  std::string grid;
  std::size_t points = 0;
  std::vector<AxiomId> axiom_set;
  bool pruned = false;

  std::uint64_t enumerated = 0;
  std::uint64_t rejected_by_prune = 0;
  /// Candidates evaluated by the checkers (enumerated - rejected_by_prune).
  std::uint64_t reached = 0;

  /// Among reached candidates: how many satisfy each axiom subset.
  std::uint64_t count_sm = 0;
  std::uint64_t count_weak_iwa = 0;
  std::uint64_t count_sm_weak_iwa = 0;
  std::uint64_t count_sm_iwa = 0;
  /// Per requested axiom, in axiom_set order.
  std::vector<std::pair<AxiomId, std::uint64_t>> axiom_pass_counts;

  std::uint64_t survivor_count = 0;
  std::vector<Survivor> survivors;
  bool lex_survives = false;

  double elapsed_ms = 0;

  /// Survivor set is exactly {lex}.
  bool unique_lex() const noexcept { return survivor_count == 1 && lex_survives; }
};

/// Enumerates every weak order on the grid and keeps those satisfying every
/// axiom in `axiom_set`. Throws TooManyPoints when the grid exceeds
/// options.max_points and InvalidArgument for unsupported axioms.
CharacterizationReport verify_characterization(const GridSpec& spec,
                                               std::span<const AxiomId> axiom_set,
                                               const VerifyOptions& options = {});

/// Lexicographic ranks of `points` (every point in its own block).
std::vector<unsigned> lex_ranks(const PointSet& points);

}  // namespace lexraf
