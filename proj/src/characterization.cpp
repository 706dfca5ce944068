#include "lexraf/characterization.hpp"

#include <chrono>
#include <map>
#include <thread>
#include <tuple>

namespace lexraf {

Raf construct_proof_witness(const Raf& a, const Raf& b) {
  auto k = first_difference(a, b);
  if (!k) throw Error(ErrorKind::EqualInputs, "the proof witness needs A != B");
  std::vector<Rational> values = a.values();
  for (std::size_t i = 0; i < *k; ++i) values[i] = b[i];
  return Raf(std::move(values), a.context());
}

ProofTrace proof_trace_check(const PreferenceRelation& rel, const Raf& a, const Raf& b) {
  Raf c = construct_proof_witness(a, b);
  const std::size_t k = *first_difference(a, b);
  const Outcome predicted =
      c[k - 1] > a[k - 1] ? Outcome::FirstPreferred : Outcome::SecondPreferred;

  ProofTrace t{k, c, rel.compare(c, a), predicted, false,
               rel.compare(a, b), rel.compare(a, c), false,
               lex_compare(a, b), false};
  t.monotonicity_step = t.c_vs_a == t.predicted_c_vs_a;
  t.independence_step = at_least_as_good(t.a_vs_b) == at_least_as_good(t.a_vs_c);
  t.conclusion_step = t.a_vs_b == t.lex_a_vs_b;
  return t;
}

WeakOrderEnumerator::WeakOrderEnumerator(std::size_t n, std::size_t max_points) : n_(n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cannot enumerate weak orders on 0 points");
  if (n > max_points) {
    throw Error(ErrorKind::TooManyPoints, std::to_string(n) + " points exceeds the bound of " +
                                              std::to_string(max_points));
  }
  if (n > 20) throw Error(ErrorKind::TooManyPoints, "weak-order count overflows 64 bits");

  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i)).
  std::vector<Rank> a(n, 0);
  std::vector<Rank> prefix_max(n, 0);
  auto emit = [&] {
    rgs_.insert(rgs_.end(), a.begin(), a.end());
    blocks_.push_back(static_cast<Rank>(prefix_max[n - 1] + 1));
  };
  std::size_t i = n - 1;
  while (true) {
    emit();
    // advance to the next string in lexicographic order
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = prefix_max[j - 1];
    }
    i = n - 1;
  }

  offsets_.assign(1, 0);
  for (auto m : blocks_) {
    std::uint64_t factorial = 1;
    for (Rank f = 2; f <= m; ++f) factorial *= f;
    offsets_.push_back(offsets_.back() + factorial);
  }
}

bool GridAxioms::supports(AxiomId id) noexcept {
  switch (id) {
    case AxiomId::WeakDominance:
    case AxiomId::StrongMonotonicity:
    case AxiomId::StrongDominance:
    case AxiomId::NonCompensation:
    case AxiomId::Axiom2MS:
    case AxiomId::IWA:
    case AxiomId::WeakIWA:
      return true;
    default:
      return false;
  }
}

namespace {

template <typename Key>
void flatten(const std::map<Key, std::vector<std::pair<std::uint16_t, std::uint16_t>>>& groups,
             std::vector<std::pair<std::uint16_t, std::uint16_t>>& pairs,
             std::vector<std::uint32_t>& starts) {
  starts.assign(1, 0);
  for (const auto& [key, members] : groups) {
    if (members.size() < 2) continue;  // a singleton class constrains nothing
    pairs.insert(pairs.end(), members.begin(), members.end());
    starts.push_back(static_cast<std::uint32_t>(pairs.size()));
  }
}

}  // namespace

GridAxioms::GridAxioms(const PointSet& points) {
  const std::size_t n = points.size();
  if (n > 0xFFFF) throw Error(ErrorKind::TooManyPoints, "grid too large to compile");
  const std::size_t arity = n ? points[0].size() : 0;

  using P = std::pair<std::uint16_t, std::uint16_t>;
  std::map<std::vector<std::int8_t>, std::vector<P>> nc;
  std::map<std::tuple<std::size_t, Rational, Rational>, std::vector<P>> ax2;
  std::map<std::pair<std::size_t, std::vector<std::int8_t>>, std::vector<P>> iwa;
  std::map<std::pair<std::size_t, std::int8_t>, std::vector<P>> wiwa;

  std::vector<std::int8_t> s(arity);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Raf& a = points[i];
      const Raf& b = points[j];
      std::size_t up = 0, down = 0;
      for (std::size_t c = 0; c < arity; ++c) {
        auto o = a[c] <=> b[c];
        s[c] = o > 0 ? 1 : (o < 0 ? -1 : 0);
        up += s[c] > 0;
        down += s[c] < 0;
      }
      const P pair{static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(j)};

      if (up == arity) weak_dominance_.pairs.push_back(pair);
      if (down == 0) strong_dominance_.pairs.push_back(pair);  // i != j, so up > 0
      if (up == 1 && down == 0) strong_monotonicity_.pairs.push_back(pair);

      nc[s].push_back(pair);

      std::size_t k0 = 0;
      while (s[k0] == 0) ++k0;
      wiwa[{k0, s[k0]}].push_back(pair);
      if (up + down == 1) ax2[{k0, a[k0], b[k0]}].push_back(pair);
      for (std::size_t k = k0; k < arity; ++k) {
        if (s[k] != 0) iwa[{k, std::vector<std::int8_t>(s.begin(), s.begin() + k + 1)}].push_back(pair);
      }
    }
  }

  flatten(nc, non_compensation_.pairs, non_compensation_.starts);
  flatten(ax2, axiom2_.pairs, axiom2_.starts);
  flatten(iwa, iwa_.pairs, iwa_.starts);
  flatten(wiwa, weak_iwa_.pairs, weak_iwa_.starts);
}

bool GridAxioms::strict_holds(const Strict& s, std::span<const Rank> ranks) {
  for (const auto& [a, b] : s.pairs) {
    if (ranks[a] >= ranks[b]) return false;
  }
  return true;
}

bool GridAxioms::classes_hold(const Classes& c, std::span<const Rank> ranks) {
  for (std::size_t cls = 0; cls + 1 < c.starts.size(); ++cls) {
    const auto begin = c.starts[cls];
    const auto end = c.starts[cls + 1];
    const bool geq = ranks[c.pairs[begin].first] <= ranks[c.pairs[begin].second];
    for (auto p = begin + 1; p < end; ++p) {
      if ((ranks[c.pairs[p].first] <= ranks[c.pairs[p].second]) != geq) return false;
    }
  }
  return true;
}

bool GridAxioms::holds(AxiomId id, std::span<const Rank> ranks) const {
  switch (id) {
    case AxiomId::WeakDominance: return strict_holds(weak_dominance_, ranks);
    case AxiomId::StrongMonotonicity: return strict_holds(strong_monotonicity_, ranks);
    case AxiomId::StrongDominance: return strict_holds(strong_dominance_, ranks);
    case AxiomId::NonCompensation: return classes_hold(non_compensation_, ranks);
    case AxiomId::Axiom2MS: return classes_hold(axiom2_, ranks);
    case AxiomId::IWA: return classes_hold(iwa_, ranks);
    case AxiomId::WeakIWA: return classes_hold(weak_iwa_, ranks);
    default:
      throw Error(ErrorKind::InvalidArgument,
                  std::string(to_string(id)) + " is not supported on rank vectors");
  }
}

std::size_t GridAxioms::forced_pairs(AxiomId id) const {
  switch (id) {
    case AxiomId::WeakDominance: return weak_dominance_.pairs.size();
    case AxiomId::StrongMonotonicity: return strong_monotonicity_.pairs.size();
    case AxiomId::StrongDominance: return strong_dominance_.pairs.size();
    default: return 0;
  }
}

std::size_t GridAxioms::class_count(AxiomId id) const {
  auto count = [](const Classes& c) { return c.starts.size() - 1; };
  switch (id) {
    case AxiomId::NonCompensation: return count(non_compensation_);
    case AxiomId::Axiom2MS: return count(axiom2_);
    case AxiomId::IWA: return count(iwa_);
    case AxiomId::WeakIWA: return count(weak_iwa_);
    default: return 0;
  }
}

std::vector<unsigned> lex_ranks(const PointSet& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return lex_compare(points[x], points[y]) == Outcome::FirstPreferred;
  });
  std::vector<unsigned> ranks(points.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<unsigned>(r);
  return ranks;
}

namespace {

struct PartialResult {
  std::uint64_t enumerated = 0;
  std::uint64_t rejected = 0;
  std::uint64_t reached = 0;
  std::uint64_t sm = 0, wiwa = 0, sm_wiwa = 0, sm_iwa = 0;
  std::vector<std::uint64_t> per_axiom;
  std::uint64_t survivor_count = 0;
  std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> survivors;
  bool lex_survives = false;
};

}  // namespace

CharacterizationReport verify_characterization(const GridSpec& spec,
                                               std::span<const AxiomId> axiom_set,
                                               const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();

  if (axiom_set.empty()) throw Error(ErrorKind::InvalidArgument, "empty axiom set");
  for (auto id : axiom_set) {
    if (!GridAxioms::supports(id)) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string(to_string(id)) + " cannot be used for characterization runs");
    }
  }
  if (spec.point_count() > options.max_points) {
    throw Error(ErrorKind::TooManyPoints,
                "grid " + spec.describe() + " has " + std::to_string(spec.point_count()) +
                    " points, exceeding the enumeration bound of " +
                    std::to_string(options.max_points));
  }

  auto ctx = PriorityContext::numbered(spec.arity());
  auto domain = std::make_shared<const PointSet>(grid_points(spec, ctx));
  const std::size_t n = domain->size();
  const GridAxioms grid(*domain);
  const WeakOrderEnumerator enumerator(n, options.max_points);

  std::vector<Outcome> lex_matrix(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) lex_matrix[i * n + j] = lex_compare((*domain)[i], (*domain)[j]);
  }
  auto agrees_with_lex = [&](std::span<const WeakOrderEnumerator::Rank> ranks) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Outcome o = ranks[i] < ranks[j]   ? Outcome::FirstPreferred
                          : ranks[i] > ranks[j] ? Outcome::SecondPreferred
                                                : Outcome::Indifferent;
        if (o != lex_matrix[i * n + j]) return false;
      }
    }
    return true;
  };

  const bool prune =
      options.prune && std::find(axiom_set.begin(), axiom_set.end(),
                                 AxiomId::StrongMonotonicity) != axiom_set.end();

  auto run_range = [&](std::size_t first, std::size_t last, PartialResult& out) {
    out.per_axiom.assign(axiom_set.size(), 0);
    enumerator.for_each_in(first, last, [&](std::uint64_t index,
                                            std::span<const WeakOrderEnumerator::Rank> ranks) {
      ++out.enumerated;
      const bool sm = grid.holds(AxiomId::StrongMonotonicity, ranks);
      if (prune && !sm) {
        ++out.rejected;
        return;
      }
      ++out.reached;
      const bool wiwa = grid.holds(AxiomId::WeakIWA, ranks);
      const bool iwa = grid.holds(AxiomId::IWA, ranks);
      out.sm += sm;
      out.wiwa += wiwa;
      out.sm_wiwa += sm && wiwa;
      out.sm_iwa += sm && iwa;

      bool all = true;
      for (std::size_t a = 0; a < axiom_set.size(); ++a) {
        bool ok;
        switch (axiom_set[a]) {
          case AxiomId::StrongMonotonicity: ok = sm; break;
          case AxiomId::WeakIWA: ok = wiwa; break;
          case AxiomId::IWA: ok = iwa; break;
          default: ok = grid.holds(axiom_set[a], ranks); break;
        }
        out.per_axiom[a] += ok;
        all = all && ok;
      }
      if (!all) return;

      ++out.survivor_count;
      if (agrees_with_lex(ranks)) out.lex_survives = true;
      if (out.survivors.size() < options.survivor_store_limit) {
        out.survivors.emplace_back(index, std::vector<unsigned>(ranks.begin(), ranks.end()));
      }
    });
  };

  // Contiguous partition ranges of roughly equal candidate counts; merged in
  // range order so the report does not depend on the worker count.
  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::size_t> bounds{0};
  for (unsigned w = 1; w < workers; ++w) {
    const std::uint64_t target = enumerator.size() * w / workers;
    std::size_t p = bounds.back();
    while (p < enumerator.partition_count() && enumerator.offset(p) < target) ++p;
    bounds.push_back(p);
  }
  bounds.push_back(enumerator.partition_count());

  std::vector<PartialResult> parts(bounds.size() - 1);
  if (parts.size() == 1) {
    run_range(bounds[0], bounds[1], parts[0]);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < parts.size(); ++w) {
      threads.emplace_back(run_range, bounds[w], bounds[w + 1], std::ref(parts[w]));
    }
    for (auto& t : threads) t.join();
  }

  CharacterizationReport report;
  report.grid = spec.describe();
  report.points = n;
  report.axiom_set.assign(axiom_set.begin(), axiom_set.end());
  report.pruned = prune;
  for (auto id : axiom_set) report.axiom_pass_counts.emplace_back(id, 0);

  for (auto& part : parts) {
    report.enumerated += part.enumerated;
    report.rejected_by_prune += part.rejected;
    report.reached += part.reached;
    report.count_sm += part.sm;
    report.count_weak_iwa += part.wiwa;
    report.count_sm_weak_iwa += part.sm_wiwa;
    report.count_sm_iwa += part.sm_iwa;
    for (std::size_t a = 0; a < axiom_set.size(); ++a) {
      report.axiom_pass_counts[a].second += part.per_axiom[a];
    }
    report.survivor_count += part.survivor_count;
    report.lex_survives = report.lex_survives || part.lex_survives;
    for (auto& [index, ranks] : part.survivors) {
      if (report.survivors.size() >= options.survivor_store_limit) break;
      RankedRelation rel(domain, std::move(ranks));
      const bool lex = agrees_with_lex(std::vector<WeakOrderEnumerator::Rank>(
          rel.ranks().begin(), rel.ranks().end()));
      report.survivors.push_back(Survivor{index, std::move(rel), lex});
    }
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace lexraf
