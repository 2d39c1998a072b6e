#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "catalab/catalyst_config.hpp"
#include "catalab/gap_scan.hpp"
#include "catalab/graph.hpp"

namespace catalab {

/// n = 2: the edges. n = 3: vertex triples spanning at least two edges.
std::vector<Subset> edge_sets(const WeightedGraph& graph, int n);
/// n-subsets with no internal edge (n = 2 or 3).
std::vector<Subset> complement_sets(const WeightedGraph& graph, int n);
/// All C(L, n) subsets in lexicographic order.
std::vector<Subset> all_sets(int n_vertices, int n);

/// C(n, k); throws too-large when the value does not fit 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// The C(N, m) ways to pick m of N candidate subsets, in lexicographic order
/// of the chosen candidate indices. Ranks index that order.
class PlacementEnumerator {
 public:
  PlacementEnumerator(std::vector<Subset> candidates, int m, int sign = +1);

  std::uint64_t count() const { return count_; }
  int m() const { return m_; }
  const std::vector<Subset>& candidates() const { return candidates_; }

  std::vector<int> indices_at(std::uint64_t rank) const;
  std::uint64_t rank_of(const std::vector<int>& indices) const;
  CatalystConfig at(std::uint64_t rank) const;

  /// Visits ranks start, start + stride, ... in order; fn(rank, config).
  template <typename Fn>
  void for_each(Fn&& fn, std::uint64_t start = 0, std::uint64_t stride = 1) const {
    if (stride == 0 || start >= count_) return;
    std::vector<int> idx = indices_at(start);
    for (std::uint64_t rank = start;;) {
      fn(rank, make(idx));
      if (count_ - rank <= stride) return;
      for (std::uint64_t step = 0; step < stride; ++step) advance(idx);
      rank += stride;
    }
  }

 private:
  CatalystConfig make(const std::vector<int>& indices) const;
  void advance(std::vector<int>& indices) const;

  std::vector<Subset> candidates_;
  int m_;
  int sign_;
  std::uint64_t count_;
};

struct FilterResult {
  std::vector<Subset> allowed;
  std::vector<Subset> rejected;
};

/// Rejects every subset whose induced subgraph contains an odd cycle.
FilterResult hierarchy_filter(const WeightedGraph& graph, const std::vector<Subset>& subsets);

/// Delta_min of each listed rank, evaluated concurrently; result order follows `ranks`.
std::vector<double> evaluate_placements(const WeightedGraph& graph, const PlacementEnumerator& placements,
                                        const std::vector<std::uint64_t>& ranks, const Partition& partition,
                                        const ScanOptions& options);

/// `budget` distinct ranks: all of them when C(N, m) <= budget, else uniform
/// draws without replacement. A larger budget extends the same sequence.
std::vector<std::uint64_t> sample_ranks(std::uint64_t count, std::uint64_t budget, std::uint64_t seed);

struct SearchResult {
  CatalystConfig best;
  std::uint64_t best_rank = 0;
  double delta_min = 0.0;
  bool exhaustive = false;
  std::vector<std::uint64_t> ranks;
  std::vector<double> delta_mins;
};

/// Placement of m candidate subsets maximizing delta_min; ties go to the
/// lowest rank.
SearchResult optimal_search(const WeightedGraph& graph, const std::vector<Subset>& candidates, int m,
                            std::uint64_t budget, std::uint64_t seed, const Partition& partition,
                            const ScanOptions& options, int sign = +1);

struct EnumerationRow {
  int m = 0;
  std::uint64_t config_index = 0;
  double delta_min = 0.0;
};

void write_enumeration_csv(std::ostream& out, const std::vector<EnumerationRow>& rows);

}  // namespace catalab
