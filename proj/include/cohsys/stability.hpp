#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cohsys/alpha_interval.hpp"
#include "cohsys/bundles.hpp"
#include "cohsys/rational.hpp"

namespace cohsys {

/// A coherent system (E, V) on P^1 over F_q: E = sum O(a_i), V spanned by
/// linearly independent sections.
struct SystemInstance {
  PrimeField field;
  SplittingType type;
  std::vector<Section> sections;

  int n() const { return type.rank(); }
  std::int64_t d() const { return type.degree(); }
  int k() const { return static_cast<int>(sections.size()); }
};

/// Throws std::invalid_argument on a malformed degree profile or dependent sections.
void validate(const SystemInstance& inst);

/// sum_l coords[l] * sections[l].
Section combine(const PrimeField& F, const SplittingType& type, const std::vector<Section>& sections,
                const std::vector<Residue>& coords);

/// Generic splitting type of rank n and degree d with k sections whose
/// coefficients are uniform in F_q, redrawn until independent. Deterministic in
/// (n, d, k, q, seed). Throws std::invalid_argument if k > h^0(E).
SystemInstance sample_instance(int n, int d, int k, std::uint32_t q, std::uint64_t seed);

/// As sample_instance, redrawn until V generates E. Throws std::runtime_error
/// after max_attempts failures.
SystemInstance sample_generating_instance(int n, int d, int k, std::uint32_t q, std::uint64_t seed,
                                          int max_attempts = 1000);

/// A coherent subsystem (E', V') given by its numerical invariants.
/// `extension_degree` is 1 when the subsystem is defined over F_q. When it is
/// larger, the subsystem only exists after extending scalars: (E, V) has that
/// many independent endomorphisms, the basis is empty, and rank 0 means the
/// summand invariants could not be pinned down.
struct SubsystemWitness {
  int rank = 0;
  std::int64_t degree = 0;
  int dimension = 0;
  Rational alpha_slope;
  std::vector<std::vector<Residue>> subspace_basis;
  int extension_degree = 1;
};

struct StabilityReport {
  Rational alpha;
  bool stable = false;
  bool semistable = false;
  Rational total_slope;
  std::optional<SubsystemWitness> witness;
};

/// Raised when the subspace count would exceed the desk-scale budget.
class CostGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CheckerOptions {
  /// Allow k > 3 at q > 31.
  bool force_large = false;
};

/// Best subsystem degree for a given rank r and subspace dimension w.
struct Candidate {
  int rank = 0;
  int dimension = 0;
  std::int64_t degree = 0;
  std::vector<std::vector<Residue>> subspace_basis;
};

/// The alpha-independent part of the stability test: for every (r, w) the
/// largest degree of a rank-r subbundle carrying a w-dimensional subspace of V,
/// plus dim End(E, V).
struct SubsystemCandidates {
  int n = 0;
  std::int64_t d = 0;
  int k = 0;
  std::vector<Candidate> best;
  std::size_t endomorphism_dimension = 1;
};

/// Whether a k-dimensional V over F_q is refused: k > 3 at q > 31 without the override.
bool exceeds_cost_guard(std::uint32_t q, int k, const CheckerOptions& options);

/// Throws CostGuardError when exceeds_cost_guard holds.
SubsystemCandidates enumerate_candidates(const SystemInstance& inst, const CheckerOptions& options = {});

/// Throws std::invalid_argument if alpha < 0.
StabilityReport is_alpha_stable(const SubsystemCandidates& cands, const Rational& alpha);
StabilityReport is_alpha_stable(const SystemInstance& inst, const Rational& alpha, const CheckerOptions& options = {});

/// Sorted distinct alpha >= 0 at which some candidate slope meets the total slope.
std::vector<Rational> critical_alphas(const SubsystemCandidates& cands);
std::vector<Rational> critical_alphas(const SystemInstance& inst, const CheckerOptions& options = {});

/// The set of alpha > 0 where the instance is stable. Throws std::logic_error
/// if the stable cells do not form a single interval.
AlphaInterval stability_interval(const SubsystemCandidates& cands);
AlphaInterval stability_interval(const SystemInstance& inst, const CheckerOptions& options = {});

/// Dimension over F_q of the endomorphisms phi of E with phi(V) inside V.
std::size_t endomorphism_dimension(const SystemInstance& inst);

/// Whether V (x) O -> E is surjective, i.e. the image sheaf has rank n and degree d.
bool check_global_generation(const SystemInstance& inst);

/// Rank of the k x n matrix of section values at (b : c). Throws
/// std::invalid_argument at (0, 0).
int evaluation_rank_at_point(const SystemInstance& inst, Residue b, Residue c);

}  // namespace cohsys
