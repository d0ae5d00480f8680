// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "compnet/edge_audit.hpp"
#include "compnet/edge_budget.hpp"
#include "compnet/generators.hpp"
#include "compnet/metrics.hpp"
#include "compnet/records_io.hpp"
#include "compnet/sweep.hpp"
#include "oracles.hpp"

namespace {

using namespace compnet;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  double time_limit_s;  // 0 = no limit stated
  std::function<Outcome()> run;
};

constexpr double kTol = 1e-9;

std::vector<std::uint64_t> desk_n_values() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 100; n <= 1000; n += 100) out.push_back(n);
  return out;
}

const std::vector<double> kAlphas = {1.5, 1.75, 2, 2.25, 2.5, 2.75, 3, 3.25, 3.5};
const std::vector<double> kPs = {0.3, 0.4, 0.5, 0.6, 0.7};
constexpr std::uint64_t kBaseSeed = 20190601;

std::string fmt(const char* pattern, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

Graph mixed_graph(std::uint64_t seed, std::size_t max_n) {
  RngStream rng(seed);
  const std::size_t n = 1 + rng.uniform_below(max_n);
  const double p = rng.uniform_real() * (rng.bernoulli(0.5) ? 0.1 : 0.6);
  return oracle::random_gnp(n, p, rng);
}

// --- 1 ----------------------------------------------------------------------
Outcome edge_count_table() {
  const std::uint64_t ns[] = {100,  200,  300,  400,  500,  600,  700,  800,  900, 1000,
                              2000, 3000, 4000, 5000, 6000, 7000, 8000, 9000, 10000};
  const std::map<std::uint64_t, std::vector<std::uint64_t>> table = {
      {2, {197, 397, 597, 797, 997, 1197, 1397, 1597, 1797, 1997, 3997, 5997, 7997, 9997, 11997,
           13997, 15997, 17997, 19997}},
      {4, {390, 790, 1190, 1590, 1990, 2390, 2790, 3190, 3590, 3990, 7990, 11990, 15990, 19990,
           23990, 27990, 31990, 35990, 39990}},
      {8, {764, 1564, 2364, 3164, 3964, 4764, 5564, 6364, 7164, 7964, 15964, 23964, 31964, 39964,
           47964, 55964, 63964, 71964, 79964}},
      {16, {1464, 3064, 4664, 6264, 7864, 9464, 11064, 12664, 14264, 15864, 31864, 47864, 63864,
            79864, 95864, 111864, 127864, 143864, 159864}},
  };
  int cells = 0;
  int matched = 0;
  for (const auto& [s, row] : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      ++cells;
      matched += scale_free_edge_count(ns[i], s) == row[i];
    }
  }
  return {cells == 76 && matched == cells, fmt("%d/%d cells exact", matched, cells)};
}

// --- 2 ----------------------------------------------------------------------
Outcome cross_model_identity() {
  SweepConfig c;
  c.n_values = desk_n_values();
  c.s_values = {2, 4, 8, 16};
  c.alpha_values = kAlphas;
  c.p_values = kPs;
  c.base_seed = kBaseSeed;
  const EdgeAuditResult audit = audit_edge_identity(c);

  // Every model at a given (n, S) must report one shared (n, m).
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::set<std::pair<std::uint64_t, std::uint64_t>>>
      cells;
  for (const auto& row : audit.rows) cells[{row.spec.n, row.spec.s}].insert({row.vertices, row.edges});
  std::size_t overlapping = 0;
  for (const auto& [cell, counts] : cells) overlapping += counts.size() == 1;
  return {audit.ok() && overlapping == cells.size() && cells.size() == 40,
          fmt("%zu specs, %zu/%zu (n,S) cells with identical (n,m), %zu mismatches",
              audit.rows.size(), overlapping, cells.size(), audit.mismatches().size())};
}

// --- 3 ----------------------------------------------------------------------
Outcome metric_oracles() {
  double worst_bc = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = mixed_graph(10'000 + seed, 12);
    worst_bc = std::max(worst_bc, std::abs(mean_betweenness(g) - oracle::mean_betweenness(g)));
    const auto fast = betweenness(g);
    const auto slow = oracle::betweenness(g);
    for (std::size_t v = 0; v < fast.size(); ++v)
      worst_bc = std::max(worst_bc, std::abs(fast[v] - slow[v]));
  }
  double worst_asp = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RngStream rng(20'000 + seed);
    const std::size_t n = 2 + rng.uniform_below(49);
    const Graph g = oracle::random_connected(n, rng.uniform_real() * 0.2, rng);
    worst_asp = std::max(worst_asp, std::abs(average_shortest_path(g) - oracle::asp(g)));
  }
  return {worst_bc <= kTol && worst_asp <= kTol,
          fmt("max |brandes - enumeration| = %.3g over 100 graphs; max |ASP - Floyd-Warshall| = "
              "%.3g over 50 connected graphs",
              worst_bc, worst_asp)};
}

// --- 4 ----------------------------------------------------------------------
Outcome sum_identity() {
  double worst = 0.0;
  int disconnected = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = mixed_graph(30'000 + seed, 60);
    const auto d = oracle::floyd_warshall(g);
    double expected = 0.0;
    bool any_unreachable = false;
    for (std::size_t s = 0; s < d.size(); ++s)
      for (std::size_t t = s + 1; t < d.size(); ++t) {
        if (d[s][t] < oracle::kInf) {
          expected += static_cast<double>(d[s][t]) - 1.0;
        } else {
          any_unreachable = true;
        }
      }
    disconnected += any_unreachable;
    double total = 0.0;
    for (double b : betweenness(g)) total += b;
    worst = std::max(worst, std::abs(total - expected));
  }
  return {worst <= kTol && disconnected > 0,
          fmt("max |sum BC - sum(d-1)| = %.3g over 200 graphs (%d disconnected)", worst, disconnected)};
}

// --- 5 ----------------------------------------------------------------------
Outcome lattice_clustering() {
  const Graph g = generate_ring_lattice(20, 2);
  const double brute = oracle::clustering(g);
  const double fast = global_clustering(g);
  return {brute == 0.5 && fast == 0.5, fmt("brute force %.12g, library %.12g", brute, fast)};
}

// --- 6 ----------------------------------------------------------------------
// Aggregates of the S=2 desk sweep with 10 samples, shared by 6a, 6b and 6d.
const SweepResult& s2_sweep() {
  static const SweepResult result = [] {
    SweepConfig c;
    c.n_values = desk_n_values();
    c.s_values = {2};
    c.alpha_values = kAlphas;
    c.p_values = kPs;
    c.samples = 10;
    c.base_seed = kBaseSeed;
    return execute_sweep(c);
  }();
  return result;
}

std::map<std::uint64_t, std::vector<const AggregateRecord*>> by_n(Model model) {
  std::map<std::uint64_t, std::vector<const AggregateRecord*>> out;
  for (const auto& a : s2_sweep().aggregates)
    if (a.spec.model == model) out[a.spec.n].push_back(&a);
  return out;
}

const AggregateRecord& find_aggregate(Model model, std::uint64_t n, std::optional<double> param) {
  for (const auto& a : s2_sweep().aggregates) {
    if (a.spec.model != model || a.spec.n != n) continue;
    if (!param || a.spec.alpha == param || a.spec.p == param) return a;
  }
  throw std::logic_error("aggregate not found");
}

Outcome betweenness_clusters() {
  const auto sf = by_n(Model::kScaleFree);
  const auto sw = by_n(Model::kSmallWorld);
  const auto rnd = by_n(Model::kRandom);
  int separated = 0;
  double min_gap = INFINITY;
  for (std::uint64_t n : desk_n_values()) {
    double sf_max = 0.0;
    for (const auto* a : sf.at(n)) sf_max = std::max(sf_max, a->mean_betweenness.mean);
    double other_min = INFINITY;
    for (const auto* a : sw.at(n)) other_min = std::min(other_min, a->mean_betweenness.mean);
    for (const auto* a : rnd.at(n)) other_min = std::min(other_min, a->mean_betweenness.mean);
    separated += sf_max < other_min;
    min_gap = std::min(min_gap, other_min / sf_max);
  }
  return {separated == 10,
          fmt("%d/10 sizes with every scale-free mean below every other model; smallest "
              "ratio other/scale-free = %.3f",
              separated, min_gap)};
}

Outcome asp_stability() {
  auto rel_change = [](Model model, double param) {
    const double lo = find_aggregate(model, 100, param).avg_shortest_path.mean;
    const double hi = find_aggregate(model, 1000, param).avg_shortest_path.mean;
    return std::abs(hi - lo) / lo;
  };
  const double sf = rel_change(Model::kScaleFree, 2.5);
  const double sw = rel_change(Model::kSmallWorld, 0.3);
  return {sf < sw, fmt("relative ASP change n=100->1000: scale-free alpha=2.5 %.4f, "
                       "small-world p=0.3 %.4f",
                       sf, sw)};
}

Outcome small_world_clustering_order() {
  int points = 0;
  int ordered = 0;
  for (std::uint64_t s : {2u, 4u, 8u, 16u}) {
    for (std::uint64_t n : desk_n_values()) {
      double mean[2] = {0.0, 0.0};
      const double ps[2] = {0.3, 0.7};
      for (int k = 0; k < 2; ++k) {
        const ModelSpec spec = ModelSpec::small_world(n, s, ps[k]);
        std::vector<MetricRecord> samples;
        for (std::uint64_t i = 0; i < 10; ++i) {
          MetricRecord r;
          r.spec = spec;
          RngStream rng(sample_seed(spec, kBaseSeed, i));
          r.metrics.global_clustering = global_clustering(generate(spec, rng));
          samples.push_back(r);
        }
        mean[k] = aggregate(samples).global_clustering.mean;
      }
      ++points;
      ordered += mean[0] > mean[1];
    }
  }
  const double fraction = static_cast<double>(ordered) / points;
  return {fraction >= 0.95,
          fmt("clustering(p=0.3) > clustering(p=0.7) at %d/%d grid points (%.1f%%, need >= 95%%)",
              ordered, points, 100.0 * fraction)};
}

Outcome random_lowest_closeness() {
  int points = 0;
  int lowest = 0;
  std::string worst;
  for (std::uint64_t n : desk_n_values()) {
    if (n < 500) continue;
    ++points;
    const double random = find_aggregate(Model::kRandom, n, std::nullopt).mean_closeness.mean;
    double others = INFINITY;
    for (Model m : {Model::kScaleFree, Model::kSmallWorld}) {
      const auto groups = by_n(m);
      for (const auto* a : groups.at(n)) others = std::min(others, a->mean_closeness.mean);
    }
    if (random < others) {
      ++lowest;
    } else if (worst.empty()) {
      worst = fmt("; e.g. n=%llu random %.3g vs lowest other %.3g",
                  static_cast<unsigned long long>(n), random, others);
    }
  }
  const double fraction = static_cast<double>(lowest) / points;
  return {fraction >= 0.90, fmt("random lowest at %d/%d sizes n>=500 (%.1f%%, need >= 90%%)",
                                lowest, points, 100.0 * fraction) + worst};
}

// --- 7 ----------------------------------------------------------------------
Outcome determinism() {
  SweepConfig c;
  c.n_values = {100, 200, 300};
  c.s_values = {2, 4};
  c.alpha_values = {1.5, 2.5, 3.5};
  c.p_values = {0.3, 0.7};
  c.samples = 3;
  c.base_seed = kBaseSeed;
  auto serialize = [&](unsigned workers) {
    const SweepResult r = execute_sweep(c, workers);
    std::ostringstream records, aggregates;
    write_records(records, r.records);
    write_aggregates(aggregates, r.aggregates);
    return std::pair{records.str(), aggregates.str()};
  };
  const auto serial = serialize(1);
  const auto parallel = serialize(4);
  const bool same = serial == parallel;
  return {same, fmt("1 vs 4 workers: records %s, aggregates %s (%zu bytes)",
                    serial.first == parallel.first ? "identical" : "DIFFER",
                    serial.second == parallel.second ? "identical" : "DIFFER",
                    serial.first.size() + serial.second.size())};
}

// --- 8 ----------------------------------------------------------------------
Outcome gnm_uniformity() {
  std::map<std::vector<Edge>, int> counts;
  const int trials = 10000;
  for (std::uint64_t seed = 0; seed < trials; ++seed) {
    RngStream rng(seed);
    ++counts[generate_random_gnm(4, 3, rng).edges()];
  }
  double worst_stated = 0.0;
  double worst_exact = 0.0;
  for (const auto& [edges, count] : counts) {
    const double f = count / static_cast<double>(trials);
    worst_stated = std::max(worst_stated, std::abs(f - 1.0 / 16.0));
    worst_exact = std::max(worst_exact, std::abs(f - 1.0 / 20.0));
  }
  return {worst_stated <= 0.02 && worst_exact <= 0.02 && counts.size() == 20,
          fmt("%zu distinct graphs; max |f - 1/16| = %.4f, max |f - 1/20| = %.4f (tol 0.02)",
              counts.size(), worst_stated, worst_exact)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"1", "scale-free edge-count table", 1.0, edge_count_table},
      {"2", "cross-model (n, m) identity on desk grid", 60.0, cross_model_identity},
      {"3", "metric oracle equivalence", 60.0, metric_oracles},
      {"4", "betweenness sum identity", 0.0, sum_identity},
      {"5", "ring lattice clustering", 0.0, lattice_clustering},
      {"6a", "scale-free betweenness cluster separation (S=2)", 600.0, betweenness_clusters},
      {"6b", "scale-free ASP stability vs small-world p=0.3", 0.0, asp_stability},
      {"6c", "small-world clustering p=0.3 > p=0.7", 0.0, small_world_clustering_order},
      {"6d", "random graph lowest mean closeness (S=2, n>=500)", 0.0, random_lowest_closeness},
      {"7", "sweep determinism across worker counts", 0.0, determinism},
      {"8", "G(n,m) uniformity", 0.0, gnm_uniformity},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = outcome.pass;
    std::string timing = fmt("%.2fs", elapsed);
    if (c.time_limit_s > 0.0) {
      timing += fmt(" (limit %.0fs)", c.time_limit_s);
      if (elapsed > c.time_limit_s) pass = false;
    }
    std::printf("[%s] AC%-3s %s: %s [%s]\n", pass ? "PASS" : "FAIL", c.id.c_str(), c.title.c_str(),
                outcome.detail.c_str(), timing.c_str());
    std::fflush(stdout);
    failures += !pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
