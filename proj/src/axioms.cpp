#include "lexraf/axioms.hpp"

#include <array>
#include <random>

namespace lexraf {

namespace {

constexpr std::array kAllAxioms = {
    AxiomId::Reflexive,       AxiomId::MirrorConsistent,   AxiomId::Connected,
    AxiomId::Transitive,      AxiomId::WeakDominance,      AxiomId::StrongMonotonicity,
    AxiomId::StrongDominance, AxiomId::NonCompensation,    AxiomId::Axiom2MS,
    AxiomId::IWA,             AxiomId::WeakIWA,
};

constexpr std::array kOrderAxioms = {
    AxiomId::Reflexive,
    AxiomId::MirrorConsistent,
    AxiomId::Connected,
    AxiomId::Transitive,
};

using SignPattern = std::vector<std::int8_t>;

SignPattern sign_pattern(const Raf& a, const Raf& b) {
  SignPattern p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto c = a[i] <=> b[i];
    p[i] = c > 0 ? 1 : (c < 0 ? -1 : 0);
  }
  return p;
}

// 0-based index of the first non-zero entry, or size() when all zero.
std::size_t first_nonzero(const SignPattern& p) {
  std::size_t i = 0;
  while (i < p.size() && p[i] == 0) ++i;
  return i;
}

bool iwa_hypothesis(const SignPattern& ab, const SignPattern& cd, std::size_t k0) {
  if (ab[k0] == 0) return false;
  for (std::size_t i = 0; i <= k0; ++i) {
    if (ab[i] != cd[i]) return false;
  }
  return true;
}

std::optional<std::size_t> weak_iwa_hypothesis(const SignPattern& ab, const SignPattern& cd) {
  const std::size_t k0 = first_nonzero(ab);
  if (k0 == ab.size()) return std::nullopt;
  if (first_nonzero(cd) != k0 || ab[k0] != cd[k0]) return std::nullopt;
  return k0;
}

// The single differing coordinate of (a,b), when there is exactly one.
std::optional<std::size_t> single_difference(const SignPattern& p) {
  std::optional<std::size_t> y;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (y) return std::nullopt;
    y = i;
  }
  return y;
}

std::optional<std::size_t> axiom2_hypothesis(const Raf& a, const Raf& b, const Raf& c,
                                             const Raf& d, const SignPattern& ab,
                                             const SignPattern& cd) {
  auto y = single_difference(ab);
  if (!y) return std::nullopt;
  for (std::size_t i = 0; i < cd.size(); ++i) {
    if (i != *y && cd[i] != 0) return std::nullopt;
  }
  if (a[*y] != c[*y] || b[*y] != d[*y]) return std::nullopt;
  return y;
}

// Memoizes relation outcomes and difference patterns for small samples.
class SampleView {
 public:
  static constexpr std::size_t kMemoLimit = 256;

  SampleView(const PreferenceRelation& rel, Sample sample) : rel_(rel), sample_(sample) {
    if (sample_.empty()) throw Error(ErrorKind::InvalidArgument, "axiom sample is empty");
    for (const auto& raf : sample_) require_same_context(sample_[0], raf);
    if (n() <= kMemoLimit) {
      outcomes_.assign(n() * n(), -1);
      patterns_.resize(n() * n());
    }
  }

  std::size_t n() const { return sample_.size(); }
  const Raf& operator[](std::size_t i) const { return sample_[i]; }

  Outcome outcome(std::size_t i, std::size_t j) {
    if (outcomes_.empty()) return rel_.compare(sample_[i], sample_[j]);
    auto& slot = outcomes_[i * n() + j];
    if (slot < 0) slot = static_cast<std::int8_t>(rel_.compare(sample_[i], sample_[j]));
    return static_cast<Outcome>(slot);
  }

  bool geq(std::size_t i, std::size_t j) { return at_least_as_good(outcome(i, j)); }

  // Without memoization the pattern is written into `buf`.
  const SignPattern& pattern(std::size_t i, std::size_t j, SignPattern& buf) {
    if (patterns_.empty()) {
      buf = sign_pattern(sample_[i], sample_[j]);
      return buf;
    }
    auto& slot = patterns_[i * n() + j];
    if (slot.empty()) slot = sign_pattern(sample_[i], sample_[j]);
    return slot;
  }

 private:
  const PreferenceRelation& rel_;
  Sample sample_;
  std::vector<std::int8_t> outcomes_;
  std::vector<SignPattern> patterns_;
};

class Recorder {
 public:
  Recorder(AxiomId id, const CheckConfig& cfg) : cfg_(cfg) { result_.axiom = id; }

  void examined() { ++result_.tuples_examined; }
  void qualified() { ++result_.qualifying; }

  template <std::size_t N>
  void violation(SampleView& view, const std::array<std::size_t, N>& idx,
                 std::vector<Outcome> observed, std::optional<std::size_t> k = std::nullopt) {
    ++result_.violation_count;
    if (!cfg_.all_violations && !result_.violations.empty()) return;
    AxiomViolation v{result_.axiom, {}, {}, k, std::move(observed)};
    for (auto i : idx) {
      v.witness.push_back(view[i]);
      v.sample_indices.push_back(i);
    }
    result_.violations.push_back(std::move(v));
  }

  AxiomResult& result() { return result_; }

  AxiomReport report(std::size_t n) && { return AxiomReport{n, {std::move(result_)}}; }

 private:
  const CheckConfig& cfg_;
  AxiomResult result_;
};

// Visits n^N index tuples (with repetition) in odometer order, or `samples`
// seeded uniform draws when n exceeds `cap`.
template <std::size_t N, typename Fn>
CheckMode for_each_tuple(std::size_t n, std::size_t cap, const CheckConfig& cfg, Fn&& fn) {
  std::array<std::size_t, N> idx{};
  if (n > cap) {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t s = 0; s < cfg.samples; ++s) {
      for (auto& i : idx) i = pick(rng);
      fn(idx);
    }
    return CheckMode::Sampled;
  }
  while (true) {
    fn(idx);
    std::size_t pos = N;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < n) break;
      idx[pos] = 0;
      if (pos == 0) return CheckMode::Exhaustive;
    }
  }
}

// Ordered pairs of distinct indices, always exhaustive.
template <typename Fn>
void for_each_distinct_pair(std::size_t n, Fn&& fn) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) fn(std::array<std::size_t, 2>{i, j});
    }
  }
}

// Shared body of the three pairwise dominance axioms: every qualifying pair
// must be strictly preferred.
template <typename Pred>
AxiomReport check_pairwise_strict(AxiomId id, const PreferenceRelation& rel, Sample sample,
                                  const CheckConfig& cfg, Pred&& qualifies) {
  SampleView view(rel, sample);
  Recorder rec(id, cfg);
  SignPattern buf;
  for_each_distinct_pair(view.n(), [&](const std::array<std::size_t, 2>& p) {
    rec.examined();
    if (!qualifies(view[p[0]], view[p[1]], view.pattern(p[0], p[1], buf))) return;
    rec.qualified();
    auto o = view.outcome(p[0], p[1]);
    if (o != Outcome::FirstPreferred) rec.violation(view, p, {o});
  });
  return std::move(rec).report(view.n());
}

// Shared body of the quadruple axioms. `hypothesis` calls its callback once
// per way the quadruple qualifies, passing the 1-based index involved.
template <typename Hyp>
AxiomReport check_quadruples(AxiomId id, const PreferenceRelation& rel, Sample sample,
                             const CheckConfig& cfg, Hyp&& hypothesis) {
  SampleView view(rel, sample);
  Recorder rec(id, cfg);
  SignPattern ab_buf, cd_buf;
  rec.result().mode = for_each_tuple<4>(
      view.n(), cfg.quadruple_cap, cfg, [&](const std::array<std::size_t, 4>& q) {
        rec.examined();
        const auto& ab = view.pattern(q[0], q[1], ab_buf);
        const auto& cd = view.pattern(q[2], q[3], cd_buf);
        hypothesis(view, q, ab, cd, [&](std::optional<std::size_t> k) {
          rec.qualified();
          if (view.geq(q[0], q[1]) != view.geq(q[2], q[3])) {
            rec.violation(view, q, {view.outcome(q[0], q[1]), view.outcome(q[2], q[3])}, k);
          }
        });
      });
  return std::move(rec).report(view.n());
}

}  // namespace

std::string_view to_string(AxiomId id) {
  switch (id) {
    case AxiomId::Reflexive: return "Reflexive";
    case AxiomId::MirrorConsistent: return "MirrorConsistent";
    case AxiomId::Connected: return "Connected";
    case AxiomId::Transitive: return "Transitive";
    case AxiomId::WeakDominance: return "WeakDominance";
    case AxiomId::StrongMonotonicity: return "StrongMonotonicity";
    case AxiomId::StrongDominance: return "StrongDominance";
    case AxiomId::NonCompensation: return "NonCompensation";
    case AxiomId::Axiom2MS: return "Axiom2MS";
    case AxiomId::IWA: return "IWA";
    case AxiomId::WeakIWA: return "WeakIWA";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view name) {
  for (auto id : kAllAxioms) {
    if (name == to_string(id)) return id;
  }
  if (name == "SM") return AxiomId::StrongMonotonicity;
  if (name == "SD") return AxiomId::StrongDominance;
  if (name == "WD") return AxiomId::WeakDominance;
  if (name == "NC") return AxiomId::NonCompensation;
  return std::nullopt;
}

std::span<const AxiomId> all_axioms() { return kAllAxioms; }
std::span<const AxiomId> order_axioms() { return kOrderAxioms; }

std::string_view to_string(CheckMode mode) {
  return mode == CheckMode::Exhaustive ? "exhaustive" : "sampled";
}

bool AxiomReport::passed() const noexcept {
  for (const auto& r : results) {
    if (!r.passed()) return false;
  }
  return true;
}

const AxiomResult* AxiomReport::find(AxiomId id) const noexcept {
  for (const auto& r : results) {
    if (r.axiom == id) return &r;
  }
  return nullptr;
}

const AxiomResult& AxiomReport::at(AxiomId id) const {
  if (const auto* r = find(id)) return *r;
  throw Error(ErrorKind::InvalidArgument, std::string(to_string(id)) + " was not checked");
}

void AxiomReport::append(AxiomReport other) {
  sample_size = other.sample_size;
  for (auto& r : other.results) results.push_back(std::move(r));
}

AxiomReport check_order_axioms(const PreferenceRelation& rel, Sample sample,
                               const CheckConfig& cfg) {
  SampleView view(rel, sample);
  const std::size_t n = view.n();

  Recorder reflexive(AxiomId::Reflexive, cfg);
  for (std::size_t i = 0; i < n; ++i) {
    reflexive.examined();
    reflexive.qualified();
    auto o = view.outcome(i, i);
    if (o != Outcome::Indifferent) reflexive.violation(view, std::array{i}, {o});
  }

  Recorder mirror_rec(AxiomId::MirrorConsistent, cfg);
  Recorder connected(AxiomId::Connected, cfg);
  for_each_distinct_pair(n, [&](const std::array<std::size_t, 2>& p) {
    auto ab = view.outcome(p[0], p[1]);
    auto ba = view.outcome(p[1], p[0]);
    mirror_rec.examined();
    mirror_rec.qualified();
    if (ba != mirror(ab)) mirror_rec.violation(view, p, {ab, ba});
    connected.examined();
    connected.qualified();
    if (!at_least_as_good(ab) && !at_least_as_good(ba)) connected.violation(view, p, {ab, ba});
  });

  Recorder transitive(AxiomId::Transitive, cfg);
  transitive.result().mode =
      for_each_tuple<3>(n, cfg.triple_cap, cfg, [&](const std::array<std::size_t, 3>& t) {
        transitive.examined();
        if (!view.geq(t[0], t[1]) || !view.geq(t[1], t[2])) return;
        transitive.qualified();
        if (!view.geq(t[0], t[2])) {
          transitive.violation(view, t,
                               {view.outcome(t[0], t[1]), view.outcome(t[1], t[2]),
                                view.outcome(t[0], t[2])});
        }
      });

  AxiomReport report{n, {}};
  report.results.push_back(std::move(reflexive.result()));
  report.results.push_back(std::move(mirror_rec.result()));
  report.results.push_back(std::move(connected.result()));
  report.results.push_back(std::move(transitive.result()));
  return report;
}

AxiomReport check_weak_dominance(const PreferenceRelation& rel, Sample sample,
                                 const CheckConfig& cfg) {
  return check_pairwise_strict(AxiomId::WeakDominance, rel, sample, cfg,
                               [](const Raf&, const Raf&, const SignPattern& p) {
                                 for (auto s : p) {
                                   if (s <= 0) return false;
                                 }
                                 return true;
                               });
}

AxiomReport check_strong_monotonicity(const PreferenceRelation& rel, Sample sample,
                                      const CheckConfig& cfg) {
  return check_pairwise_strict(AxiomId::StrongMonotonicity, rel, sample, cfg,
                               [](const Raf&, const Raf&, const SignPattern& p) {
                                 auto y = single_difference(p);
                                 return y && p[*y] > 0;
                               });
}

AxiomReport check_strong_dominance(const PreferenceRelation& rel, Sample sample,
                                   const CheckConfig& cfg) {
  return check_pairwise_strict(AxiomId::StrongDominance, rel, sample, cfg,
                               [](const Raf&, const Raf&, const SignPattern& p) {
                                 bool some_strict = false;
                                 for (auto s : p) {
                                   if (s < 0) return false;
                                   some_strict |= s > 0;
                                 }
                                 return some_strict;
                               });
}

AxiomReport check_non_compensation(const PreferenceRelation& rel, Sample sample,
                                   const CheckConfig& cfg) {
  return check_quadruples(AxiomId::NonCompensation, rel, sample, cfg,
                          [](SampleView&, const auto&, const SignPattern& ab,
                             const SignPattern& cd, auto&& on_qualify) {
                            if (ab == cd) on_qualify(std::nullopt);
                          });
}

AxiomReport check_axiom2_ms(const PreferenceRelation& rel, Sample sample,
                            const CheckConfig& cfg) {
  return check_quadruples(
      AxiomId::Axiom2MS, rel, sample, cfg,
      [](SampleView& view, const std::array<std::size_t, 4>& q, const SignPattern& ab,
         const SignPattern& cd, auto&& on_qualify) {
        if (auto y = axiom2_hypothesis(view[q[0]], view[q[1]], view[q[2]], view[q[3]], ab, cd)) {
          on_qualify(*y + 1);
        }
      });
}

AxiomReport check_iwa(const PreferenceRelation& rel, Sample sample, const CheckConfig& cfg) {
  return check_quadruples(AxiomId::IWA, rel, sample, cfg,
                          [](SampleView&, const auto&, const SignPattern& ab,
                             const SignPattern& cd, auto&& on_qualify) {
                            for (std::size_t k0 = 0; k0 < ab.size(); ++k0) {
                              if (iwa_hypothesis(ab, cd, k0)) on_qualify(k0 + 1);
                            }
                          });
}

AxiomReport check_weak_iwa(const PreferenceRelation& rel, Sample sample,
                           const CheckConfig& cfg) {
  return check_quadruples(AxiomId::WeakIWA, rel, sample, cfg,
                          [](SampleView&, const auto&, const SignPattern& ab,
                             const SignPattern& cd, auto&& on_qualify) {
                            if (auto k0 = weak_iwa_hypothesis(ab, cd)) on_qualify(*k0 + 1);
                          });
}

AxiomReport check_axioms(const PreferenceRelation& rel, Sample sample,
                         std::span<const AxiomId> axioms, const CheckConfig& cfg) {
  AxiomReport report{sample.size(), {}};
  std::optional<AxiomReport> order;
  for (auto id : axioms) {
    switch (id) {
      case AxiomId::Reflexive:
      case AxiomId::MirrorConsistent:
      case AxiomId::Connected:
      case AxiomId::Transitive: {
        if (!order) order = check_order_axioms(rel, sample, cfg);
        report.results.push_back(order->at(id));
        break;
      }
      case AxiomId::WeakDominance: report.append(check_weak_dominance(rel, sample, cfg)); break;
      case AxiomId::StrongMonotonicity:
        report.append(check_strong_monotonicity(rel, sample, cfg));
        break;
      case AxiomId::StrongDominance:
        report.append(check_strong_dominance(rel, sample, cfg));
        break;
      case AxiomId::NonCompensation:
        report.append(check_non_compensation(rel, sample, cfg));
        break;
      case AxiomId::Axiom2MS: report.append(check_axiom2_ms(rel, sample, cfg)); break;
      case AxiomId::IWA: report.append(check_iwa(rel, sample, cfg)); break;
      case AxiomId::WeakIWA: report.append(check_weak_iwa(rel, sample, cfg)); break;
    }
  }
  return report;
}

bool qualifies_non_compensation(const Raf& a, const Raf& b, const Raf& c, const Raf& d) {
  require_same_context(a, c);
  return sign_pattern(a, b) == sign_pattern(c, d);
}

std::optional<std::size_t> qualifies_axiom2(const Raf& a, const Raf& b, const Raf& c,
                                             const Raf& d) {
  require_same_context(a, c);
  auto y = axiom2_hypothesis(a, b, c, d, sign_pattern(a, b), sign_pattern(c, d));
  if (!y) return std::nullopt;
  return *y + 1;
}

bool qualifies_iwa(const Raf& a, const Raf& b, const Raf& c, const Raf& d, std::size_t k) {
  require_same_context(a, c);
  if (k < 1 || k > a.size()) throw Error(ErrorKind::InvalidArgument, "k out of range");
  return iwa_hypothesis(sign_pattern(a, b), sign_pattern(c, d), k - 1);
}

std::optional<std::size_t> qualifies_weak_iwa(const Raf& a, const Raf& b, const Raf& c,
                                               const Raf& d) {
  require_same_context(a, c);
  auto k0 = weak_iwa_hypothesis(sign_pattern(a, b), sign_pattern(c, d));
  if (!k0) return std::nullopt;
  return *k0 + 1;
}

bool replay_violation(const PreferenceRelation& rel, const AxiomViolation& v) {
  const auto& w = v.witness;
  auto cmp = [&](std::size_t i, std::size_t j) { return rel.compare(w[i], w[j]); };
  auto geq = [&](std::size_t i, std::size_t j) { return at_least_as_good(cmp(i, j)); };
  auto quad_broken = [&] { return geq(0, 1) != geq(2, 3); };

  switch (v.axiom) {
    case AxiomId::Reflexive:
      return w.size() == 1 && cmp(0, 0) != Outcome::Indifferent;
    case AxiomId::MirrorConsistent:
      return w.size() == 2 && cmp(1, 0) != mirror(cmp(0, 1));
    case AxiomId::Connected:
      return w.size() == 2 && !geq(0, 1) && !geq(1, 0);
    case AxiomId::Transitive:
      return w.size() == 3 && geq(0, 1) && geq(1, 2) && !geq(0, 2);
    case AxiomId::WeakDominance:
      return w.size() == 2 && strictly_dominates(w[0], w[1]) &&
             cmp(0, 1) != Outcome::FirstPreferred;
    case AxiomId::StrongMonotonicity: {
      if (w.size() != 2) return false;
      auto p = sign_pattern(w[0], w[1]);
      auto y = single_difference(p);
      return y && p[*y] > 0 && cmp(0, 1) != Outcome::FirstPreferred;
    }
    case AxiomId::StrongDominance:
      return w.size() == 2 && w[0] != w[1] && pointwise_geq(w[0], w[1]) &&
             cmp(0, 1) != Outcome::FirstPreferred;
    case AxiomId::NonCompensation:
      return w.size() == 4 && qualifies_non_compensation(w[0], w[1], w[2], w[3]) &&
             quad_broken();
    case AxiomId::Axiom2MS:
      return w.size() == 4 && qualifies_axiom2(w[0], w[1], w[2], w[3]) && quad_broken();
    case AxiomId::IWA:
      return w.size() == 4 && v.k && qualifies_iwa(w[0], w[1], w[2], w[3], *v.k) &&
             quad_broken();
    case AxiomId::WeakIWA:
      return w.size() == 4 && qualifies_weak_iwa(w[0], w[1], w[2], w[3]) && quad_broken();
  }
  return false;
}

}  // namespace lexraf
