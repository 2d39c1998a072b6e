#include "catalab/catalysts.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "catalab/error.hpp"
#include "catalab/random.hpp"

namespace catalab {

namespace {

int internal_edges(const WeightedGraph& graph, const Subset& s) {
  int count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) count += graph.adjacent(s[i], s[j]);
  return count;
}

void check_locality(int n) {
  if (n != 2 && n != 3) throw Error(ErrorKind::InvalidRange, "edge and complement sets are defined for n = 2 or 3");
}

}  // namespace

std::vector<Subset> all_sets(int n_vertices, int n) {
  if (n < 1 || n > n_vertices) throw Error(ErrorKind::InvalidRange, "subset size must lie in [1, L]");
  std::vector<Subset> out;
  Subset s(n);
  for (int i = 0; i < n; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    int i = n - 1;
    while (i >= 0 && s[i] == n_vertices - n + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < n; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::vector<Subset> edge_sets(const WeightedGraph& graph, int n) {
  check_locality(n);
  std::vector<Subset> out;
  for (Subset& s : all_sets(graph.size(), n))
    if (internal_edges(graph, s) >= n - 1) out.push_back(std::move(s));
  return out;
}

std::vector<Subset> complement_sets(const WeightedGraph& graph, int n) {
  check_locality(n);
  std::vector<Subset> out;
  for (Subset& s : all_sets(graph.size(), n))
    if (internal_edges(graph, s) == 0) out.push_back(std::move(s));
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw Error(ErrorKind::TooLarge, "binomial coefficient exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

PlacementEnumerator::PlacementEnumerator(std::vector<Subset> candidates, int m, int sign)
    : candidates_(std::move(candidates)), m_(m), sign_(sign) {
  if (m < 0 || static_cast<std::size_t>(m) > candidates_.size())
    throw Error(ErrorKind::InvalidRange, "m must lie in [0, number of candidates]");
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidSpec, "catalyst sign must be +1 or -1");
  count_ = binomial(candidates_.size(), static_cast<std::uint64_t>(m));
}

std::vector<int> PlacementEnumerator::indices_at(std::uint64_t rank) const {
  if (rank >= count_) throw Error(ErrorKind::InvalidRange, "placement rank out of range");
  const int n = static_cast<int>(candidates_.size());
  std::vector<int> out;
  out.reserve(m_);
  int next = 0;
  for (int pos = 0; pos < m_; ++pos) {
    // Skip whole blocks of combinations that start with a smaller value.
    for (int v = next;; ++v) {
      const std::uint64_t block = binomial(n - v - 1, m_ - pos - 1);
      if (rank < block) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

std::uint64_t PlacementEnumerator::rank_of(const std::vector<int>& indices) const {
  if (static_cast<int>(indices.size()) != m_) throw Error(ErrorKind::InvalidRange, "wrong number of indices");
  const int n = static_cast<int>(candidates_.size());
  std::uint64_t rank = 0;
  int next = 0;
  for (int pos = 0; pos < m_; ++pos) {
    if (indices[pos] < next || indices[pos] >= n) throw Error(ErrorKind::InvalidRange, "indices are not a combination");
    for (int v = next; v < indices[pos]; ++v) rank += binomial(n - v - 1, m_ - pos - 1);
    next = indices[pos] + 1;
  }
  return rank;
}

CatalystConfig PlacementEnumerator::make(const std::vector<int>& indices) const {
  CatalystConfig c;
  c.sign = sign_;
  c.subsets.reserve(indices.size());
  for (int i : indices) c.subsets.push_back(candidates_[i]);
  return c;
}

CatalystConfig PlacementEnumerator::at(std::uint64_t rank) const { return make(indices_at(rank)); }

void PlacementEnumerator::advance(std::vector<int>& idx) const {
  const int n = static_cast<int>(candidates_.size());
  int i = m_ - 1;
  while (i >= 0 && idx[i] == n - m_ + i) --i;
  if (i < 0) return;
  ++idx[i];
  for (int j = i + 1; j < m_; ++j) idx[j] = idx[j - 1] + 1;
}

FilterResult hierarchy_filter(const WeightedGraph& graph, const std::vector<Subset>& subsets) {
  FilterResult out;
  for (const Subset& s : subsets) (induced_bipartite(graph, s) ? out.allowed : out.rejected).push_back(s);
  return out;
}

std::vector<double> evaluate_placements(const WeightedGraph& graph, const PlacementEnumerator& placements,
                                        const std::vector<std::uint64_t>& ranks, const Partition& partition,
                                        const ScanOptions& options) {
  std::vector<double> out(ranks.size());
  std::vector<std::exception_ptr> errors(ranks.size());
  ScanOptions inner = options;
  inner.parallel = false;
  const auto n = static_cast<std::ptrdiff_t>(ranks.size());
#pragma omp parallel for schedule(dynamic, 1) if (options.parallel && n > 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      const CatalystConfig c = placements.at(ranks[i]);
      out[i] = gap_scan(graph, c, partition, inner).delta_min;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::uint64_t> sample_ranks(std::uint64_t count, std::uint64_t budget, std::uint64_t seed) {
  if (budget == 0) throw Error(ErrorKind::InvalidRange, "budget must be at least 1");
  std::vector<std::uint64_t> ranks;
  if (count <= budget) {
    ranks.resize(count);
    for (std::uint64_t r = 0; r < count; ++r) ranks[r] = r;
    return ranks;
  }
  Rng rng(seed);
  std::unordered_set<std::uint64_t> seen;
  while (ranks.size() < budget) {
    const std::uint64_t r = rng.below(count);
    if (seen.insert(r).second) ranks.push_back(r);
  }
  return ranks;
}

SearchResult optimal_search(const WeightedGraph& graph, const std::vector<Subset>& candidates, int m,
                            std::uint64_t budget, std::uint64_t seed, const Partition& partition,
                            const ScanOptions& options, int sign) {
  const PlacementEnumerator placements(candidates, m, sign);
  SearchResult result;
  result.exhaustive = placements.count() <= budget;
  result.ranks = sample_ranks(placements.count(), budget, seed);
  result.delta_mins = evaluate_placements(graph, placements, result.ranks, partition, options);
  std::size_t best = 0;
  for (std::size_t i = 1; i < result.ranks.size(); ++i) {
    const double d = result.delta_mins[i], b = result.delta_mins[best];
    if (d > b || (d == b && result.ranks[i] < result.ranks[best])) best = i;
  }
  result.best_rank = result.ranks[best];
  result.delta_min = result.delta_mins[best];
  result.best = placements.at(result.best_rank);
  return result;
}

void write_enumeration_csv(std::ostream& out, const std::vector<EnumerationRow>& rows) {
  const auto old = out.precision(17);
  out << "m,config_index,delta_min\n";
  for (const EnumerationRow& r : rows) out << r.m << ',' << r.config_index << ',' << r.delta_min << '\n';
  out.precision(old);
}

}  // namespace catalab
