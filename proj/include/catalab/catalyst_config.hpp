#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace catalab {

using Subset = std::vector<int>;

/// A catalyst placement: each subset is a group of qubits flipped jointly by
/// one -sign * X...X term. sign = +1 is stoquastic.
struct CatalystConfig {
  std::vector<Subset> subsets;
  int sign = +1;
  std::string label;

  /// Sorts each subset, sorts and deduplicates the list, and checks every
  /// subset has >= 2 distinct members in [0, n_qubits).
  void normalize(int n_qubits);

  bool empty() const { return subsets.empty(); }
};

nlohmann::json to_json(const CatalystConfig& config);
CatalystConfig catalyst_from_json(const nlohmann::json& j);

}  // namespace catalab
