#include "catalab/catalyst_config.hpp"

#include <algorithm>

#include "catalab/error.hpp"

namespace catalab {

void CatalystConfig::normalize(int n_qubits) {
  if (sign != 1 && sign != -1) throw Error(ErrorKind::InvalidSpec, "catalyst sign must be +1 or -1");
  for (Subset& subset : subsets) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (subset.size() < 2) throw Error(ErrorKind::InvalidSubset, "catalyst subset needs at least two qubits");
    if (subset.front() < 0 || subset.back() >= n_qubits)
      throw Error(ErrorKind::InvalidSubset, "catalyst subset index out of range");
  }
  std::sort(subsets.begin(), subsets.end());
  subsets.erase(std::unique(subsets.begin(), subsets.end()), subsets.end());
}

nlohmann::json to_json(const CatalystConfig& config) {
  return {{"sign", config.sign}, {"subsets", config.subsets}, {"label", config.label}};
}

CatalystConfig catalyst_from_json(const nlohmann::json& j) {
  try {
    CatalystConfig config;
    config.sign = j.value("sign", 1);
    config.subsets = j.at("subsets").get<std::vector<Subset>>();
    config.label = j.value("label", std::string{});
    return config;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidSpec, std::string("malformed catalyst config: ") + e.what());
  }
}

}  // namespace catalab
