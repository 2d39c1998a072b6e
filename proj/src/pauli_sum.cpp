#include "catalab/pauli_sum.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "catalab/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace catalab {

namespace {

double phase(std::uint64_t b, std::uint64_t z_mask) { return (std::popcount(b & z_mask) & 1) ? -1.0 : 1.0; }

}  // namespace

PauliTermSum::PauliTermSum(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1) throw Error(ErrorKind::InvalidSpec, "operator needs at least one qubit");
  if (n_qubits > kMaxQubits) throw Error(ErrorKind::TooLarge, "more than 30 qubits");
}

PauliTermSum::PauliTermSum(int n_qubits, std::span<const PauliTerm> terms) : PauliTermSum(n_qubits) {
  for (const PauliTerm& t : terms) add(t.coeff, t.z_mask, t.x_mask);
}

void PauliTermSum::add(double coeff, std::uint64_t z_mask, std::uint64_t x_mask) {
  const std::uint64_t full = (std::uint64_t{1} << n_qubits_) - 1;
  if ((z_mask | x_mask) & ~full) throw Error(ErrorKind::InvalidSpec, "term acts outside the register");
  // Z and X on the same qubit would give a Y-like, non-symmetric factor.
  if (z_mask & x_mask) throw Error(ErrorKind::InvalidSpec, "term has both X and Z on one qubit");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), std::pair{x_mask, z_mask},
                             [](const PauliTerm& t, const std::pair<std::uint64_t, std::uint64_t>& key) {
                               return std::pair{t.x_mask, t.z_mask} < key;
                             });
  if (it != terms_.end() && it->x_mask == x_mask && it->z_mask == z_mask) {
    it->coeff += coeff;
    if (it->coeff == 0.0) terms_.erase(it);
  } else if (coeff != 0.0) {
    terms_.insert(it, PauliTerm{coeff, z_mask, x_mask});
  }
}

void PauliTermSum::add(const PauliTermSum& other, double scale) {
  if (other.n_qubits_ != n_qubits_) throw Error(ErrorKind::DimensionMismatch, "operators act on different registers");
  if (scale == 0.0) return;
  for (const PauliTerm& t : other.terms_) add(scale * t.coeff, t.z_mask, t.x_mask);
}

bool PauliTermSum::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const PauliTerm& t) { return t.x_mask == 0; });
}

bool PauliTermSum::is_stoquastic() const {
  // Group off-diagonal terms by flip mask; each group must be <= 0 on every column.
  std::map<std::uint64_t, std::vector<const PauliTerm*>> groups;
  for (const PauliTerm& t : terms_)
    if (t.x_mask) groups[t.x_mask].push_back(&t);
  const std::size_t n = dim();
  for (const auto& [x, group] : groups) {
    if (group.size() == 1 && group.front()->z_mask == 0) {
      if (group.front()->coeff > 0.0) return false;
      continue;
    }
    for (std::size_t b = 0; b < n; ++b) {
      double v = 0.0;
      for (const PauliTerm* t : group) v += t->coeff * phase(b, t->z_mask);
      if (v > 0.0) return false;
    }
  }
  return true;
}

void apply_reference(const PauliTermSum& op, std::span<const double> in, std::span<double> out) {
  const std::size_t n = op.dim();
  if (in.size() != n || out.size() != n) throw Error(ErrorKind::LengthMismatch, "state length does not match 2^n");
  std::fill(out.begin(), out.end(), 0.0);
  for (const PauliTerm& t : op.terms())
    for (std::size_t b = 0; b < n; ++b) out[b ^ t.x_mask] += t.coeff * phase(b, t.z_mask) * in[b];
}

CompiledOperator::CompiledOperator(const PauliTermSum& op) : n_qubits_(op.n_qubits()), diagonal_(op.dim(), 0.0) {
  const std::size_t n = op.dim();
  for (const PauliTerm& t : op.terms()) {
    if (t.x_mask == 0) {
      for (std::size_t b = 0; b < n; ++b) diagonal_[b] += t.coeff * phase(b, t.z_mask);
      continue;
    }
    // Terms arrive sorted by x_mask, so a group is always the last entry.
    if (flips_.empty() || flips_.back().x_mask != t.x_mask) flips_.push_back({t.x_mask, {}});
    flips_.back().phases.emplace_back(t.z_mask, t.coeff);
  }
  std::erase_if(flips_, [&](const Flip& f) {
    if (f.phases.size() != 1 || f.phases[0].first != 0) return false;
    plain_masks_.push_back(f.x_mask);
    plain_coeffs_.push_back(f.phases[0].second);
    return true;
  });
}

double CompiledOperator::gather(std::size_t c, std::span<const double> in) const {
  double acc = diagonal_[c] * in[c];
  const std::size_t n_plain = plain_masks_.size();
  for (std::size_t f = 0; f < n_plain; ++f) acc += plain_coeffs_[f] * in[c ^ plain_masks_[f]];
  for (const Flip& f : flips_) {
    const std::size_t b = c ^ f.x_mask;
    double coeff = 0.0;
    // Element (c, b) = sum coeff * (-1)^popcount(b & z).
    for (const auto& [z, k] : f.phases) coeff += z ? k * phase(b, z) : k;
    acc += coeff * in[b];
  }
  return acc;
}

void CompiledOperator::check(std::span<const double> in, std::span<double> out) const {
  if (in.size() != dim() || out.size() != dim())
    throw Error(ErrorKind::LengthMismatch, "state length does not match 2^n");
  if (in.data() == out.data()) throw Error(ErrorKind::LengthMismatch, "input and output must not alias");
}

void CompiledOperator::apply(std::span<const double> in, std::span<double> out) const {
  check(in, out);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(dim());
#pragma omp parallel for schedule(static) if (n >= 4096 && !omp_in_parallel())
  for (std::ptrdiff_t c = 0; c < n; ++c) out[c] = gather(static_cast<std::size_t>(c), in);
}

void CompiledOperator::apply_serial(std::span<const double> in, std::span<double> out) const {
  check(in, out);
  const std::size_t n = dim();
  for (std::size_t c = 0; c < n; ++c) out[c] = gather(c, in);
}

std::vector<std::pair<std::size_t, double>> CompiledOperator::column(std::size_t col) const {
  std::vector<std::pair<std::size_t, double>> out;
  if (diagonal_[col] != 0.0) out.emplace_back(col, diagonal_[col]);
  for (std::size_t f = 0; f < plain_masks_.size(); ++f) out.emplace_back(col ^ plain_masks_[f], plain_coeffs_[f]);
  for (const Flip& f : flips_) {
    double coeff = 0.0;
    for (const auto& [z, k] : f.phases) coeff += z ? k * phase(col, z) : k;
    if (coeff != 0.0) out.emplace_back(col ^ f.x_mask, coeff);
  }
  return out;
}

std::vector<double> apply(const PauliTermSum& op, std::span<const double> state) {
  std::vector<double> out(op.dim());
  apply_reference(op, state, out);
  return out;
}

nlohmann::json to_json(const PauliTermSum& op) {
  nlohmann::json terms = nlohmann::json::array();
  for (const PauliTerm& t : op.terms()) terms.push_back({{"coeff", t.coeff}, {"z_mask", t.z_mask}, {"x_mask", t.x_mask}});
  return terms;
}

}  // namespace catalab
