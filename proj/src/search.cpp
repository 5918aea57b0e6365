#include "hamtpath/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "hamtpath/rng.hpp"

namespace hamtpath {

const char* to_string(DiscrepancyKind k) {
  switch (k) {
    case DiscrepancyKind::ConjectureCounterexample:
      return "conjecture_counterexample";
    case DiscrepancyKind::SoundnessBug:
      return "soundness_bug";
    case DiscrepancyKind::UselessEdgeBug:
      return "useless_edge_bug";
  }
  return "?";
}

bool CampaignReport::has_bug() const {
  return std::any_of(discrepancies.begin(), discrepancies.end(),
                     [](const Discrepancy& d) {
                       return d.kind != DiscrepancyKind::ConjectureCounterexample;
                     });
}

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("edge probability must lie in [0,1]");
  }
}

}  // namespace

TimeGraph random_subgraph(int n, double p, std::uint64_t seed) {
  require_probability(p);
  SplitMix64 rng(seed);
  const TimeGraph full = complete_time_graph(n);
  std::vector<EdgeId> kept;
  for (const EdgeId& e : full.edges()) {
    if (rng.bernoulli(p)) kept.push_back(e);
  }
  return TimeGraph(n, std::move(kept));
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  require_probability(p);
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  // Candidate order: (S,j), then inner (i,j), then (i,T). (S,T) is legal
  // input but inert under the reduction, so it is never generated.
  for (int j = 1; j <= n; ++j) {
    if (rng.bernoulli(p)) edges.emplace_back(0, j);
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j && rng.bernoulli(p)) edges.emplace_back(i, j);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (rng.bernoulli(p)) edges.emplace_back(i, n + 1);
  }
  return Digraph(n, std::move(edges));
}

namespace {

bool viable(const TimeGraph& g) {
  bool has_source = false;
  bool has_sink = false;
  for (const EdgeId& e : g.edges()) {
    if (e.layer == 0) has_source = true;
    if (e.layer == g.order()) has_sink = true;
  }
  return has_source && has_sink;
}

std::vector<Discrepancy> classify_results(const TimeGraph& g,
                                          const PruneReport& pr,
                                          const OracleResult& orr) {
  std::vector<Discrepancy> found;
  if (pr.decision == PruneDecision::Hamiltonian && orr.htp_count == 0) {
    found.push_back({DiscrepancyKind::ConjectureCounterexample, g, pr, orr,
                     std::nullopt, -1});
  }
  if (pr.decision == PruneDecision::NotHamiltonian && orr.htp_count > 0) {
    found.push_back(
        {DiscrepancyKind::SoundnessBug, g, pr, orr, std::nullopt, -1});
  }
  for (const PruneRemoval& rem : pr.removals) {
    if (std::binary_search(orr.edges_on_htps.begin(), orr.edges_on_htps.end(),
                           rem.edge)) {
      found.push_back(
          {DiscrepancyKind::UselessEdgeBug, g, pr, orr, rem.edge, -1});
      break;  // one offending edge identifies the defect
    }
  }
  return found;
}

struct InstanceOutcome {
  bool viable = false;
  PruneDecision decision = PruneDecision::NotHamiltonian;
  std::vector<Discrepancy> discrepancies;
};

InstanceOutcome evaluate_instance(const TimeGraph& g, int index,
                                  const OracleOptions& oracle) {
  InstanceOutcome out;
  out.viable = viable(g);
  // Non-viable graphs have no time path at all; prune still runs (every
  // LP is infeasible via its empty source or sink row) so the report
  // invariants hold uniformly, at negligible cost.
  PruneReport pr = prune(g);
  OracleResult orr = enumerate_htps(g, oracle);
  out.decision = pr.decision;
  out.discrepancies = classify_results(g, pr, orr);
  for (auto& d : out.discrepancies) d.instance_index = index;
  return out;
}

TimeGraph generate_instance(const GeneratorSpec& spec, int index) {
  switch (spec.kind) {
    case GeneratorKind::RandomSubgraph:
      return random_subgraph(spec.n, spec.p, instance_seed(spec.seed, index));
    case GeneratorKind::RandomDigraphReduction:
      return reduce_hampath(
          random_digraph(spec.n, spec.p, instance_seed(spec.seed, index)));
    case GeneratorKind::ExhaustiveTiny: {
      const TimeGraph full = complete_time_graph(spec.n);
      std::vector<EdgeId> subset;
      for (std::size_t b = 0; b < full.edge_count(); ++b) {
        if ((index >> b) & 1) subset.push_back(full.edges()[b]);
      }
      return TimeGraph(spec.n, std::move(subset));
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

int instance_count(const GeneratorSpec& spec) {
  if (spec.kind == GeneratorKind::ExhaustiveTiny) {
    return 1 << complete_time_graph(spec.n).edge_count();
  }
  return spec.count;
}

void validate_spec(const GeneratorSpec& spec, const CampaignOptions& opts) {
  if (spec.n < 1) throw std::invalid_argument("generator order must be >= 1");
  if (spec.n > opts.oracle.order_cap) {
    throw InstanceTooLarge("generator order " + std::to_string(spec.n) +
                           " exceeds oracle cap " +
                           std::to_string(opts.oracle.order_cap));
  }
  if (spec.kind == GeneratorKind::ExhaustiveTiny) {
    if (spec.n > 2) {
      throw std::invalid_argument(
          "exhaustive generation is limited to n <= 2");
    }
  } else {
    require_probability(spec.p);
    if (spec.count < 0) throw std::invalid_argument("count must be >= 0");
  }
}

}  // namespace

std::vector<Discrepancy> classify_graph(const TimeGraph& g,
                                        const OracleOptions& oracle) {
  return classify_results(g, prune(g), enumerate_htps(g, oracle));
}

CampaignReport run_campaign(const GeneratorSpec& spec,
                            const CampaignOptions& opts) {
  validate_spec(spec, opts);
  const auto t0 = std::chrono::steady_clock::now();
  const int count = instance_count(spec);

  CampaignReport report;
  report.spec = spec;
  report.instances_run = count;

  std::vector<InstanceOutcome> outcomes(count);
  const int threads =
      std::max(1, std::min(opts.threads, std::max(count, 1)));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) {
      outcomes[i] = evaluate_instance(generate_instance(spec, i), i, opts.oracle);
    }
  } else {
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        try {
          for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            outcomes[i] =
                evaluate_instance(generate_instance(spec, i), i, opts.oracle);
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);  // wind down the other workers
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Merge in instance order so the report does not depend on scheduling.
  for (int i = 0; i < count; ++i) {
    InstanceOutcome& out = outcomes[i];
    if (!out.viable) {
      ++report.tallies.nonviable;
    }
    if (out.decision == PruneDecision::Hamiltonian) {
      ++report.tallies.hamiltonian;
    } else {
      ++report.tallies.not_hamiltonian;
    }
    for (auto& d : out.discrepancies) {
      report.discrepancies.push_back(std::move(d));
    }
  }
  report.wall_time_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

TimeGraph minimize_graph(const TimeGraph& g,
                         const std::function<bool(const TimeGraph&)>& keep) {
  TimeGraph current = g;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (const EdgeId& e : current.edges()) {
      TimeGraph candidate = current.without(e);
      if (keep(candidate)) {
        current = std::move(candidate);
        shrunk = true;
        break;
      }
    }
  }
  return current;
}

Discrepancy minimize_discrepancy(const Discrepancy& d,
                                 const OracleOptions& oracle) {
  auto exhibits = [&](const TimeGraph& g,
                      DiscrepancyKind kind) -> std::optional<Discrepancy> {
    for (auto& found : classify_graph(g, oracle)) {
      if (found.kind == kind) return found;
    }
    return std::nullopt;
  };
  if (!exhibits(d.graph, d.kind)) {
    throw StaleDiscrepancy(std::string("discrepancy of kind ") +
                           to_string(d.kind) + " does not reproduce");
  }
  TimeGraph minimal = minimize_graph(d.graph, [&](const TimeGraph& g) {
    return exhibits(g, d.kind).has_value();
  });
  Discrepancy out = *exhibits(minimal, d.kind);
  out.instance_index = d.instance_index;
  return out;
}

}  // namespace hamtpath
