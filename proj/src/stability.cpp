#include "cohsys/stability.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>

#include "cohsys/subspaces.hpp"

namespace cohsys {

namespace {

/// Number of coefficients of H^0(O(a)).
std::size_t slot_size(int a) { return a < 0 ? 0 : static_cast<std::size_t>(a) + 1; }

FieldMatrix flatten(const SystemInstance& inst) {
  std::size_t cols = 0;
  for (int a : inst.type.degrees()) cols += slot_size(a);
  FieldMatrix m(inst.field, inst.sections.size(), cols);
  for (std::size_t l = 0; l < inst.sections.size(); ++l) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(inst.n()); ++i) {
      const BinaryForm& f = inst.sections[l][i];
      const std::size_t len = slot_size(inst.type[i]);
      if (!f.is_sentinel()) {
        for (std::size_t j = 0; j < len; ++j) m(l, c + j) = f.coefficient(static_cast<int>(j));
      }
      c += len;
    }
  }
  return m;
}

Section random_section(const PrimeField& F, const SplittingType& type, std::mt19937_64& rng) {
  Section s;
  for (int a : type.degrees()) {
    if (a < 0) {
      s.emplace_back();
      continue;
    }
    std::vector<Residue> c(slot_size(a));
    for (auto& x : c) x = static_cast<Residue>(rng() % F.modulus());
    s.emplace_back(a, std::move(c));
  }
  return s;
}

Rational slope(std::int64_t degree, int dimension, int rank, const Rational& alpha) {
  return (Rational(degree) + Rational(dimension) * alpha) / Rational(rank);
}

std::vector<std::vector<Residue>> rows_of(const FieldMatrix& m) {
  std::vector<std::vector<Residue>> out(m.rows(), std::vector<Residue>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  }
  return out;
}

}  // namespace

bool exceeds_cost_guard(std::uint32_t q, int k, const CheckerOptions& options) {
  return k > 3 && q > 31 && !options.force_large;
}

void validate(const SystemInstance& inst) {
  for (const Section& s : inst.sections) validate_section(inst.type, s);
  if (inst.type.rank() < 1) throw std::invalid_argument("instance needs a bundle of rank >= 1");
  if (!inst.sections.empty() && rank(flatten(inst)) != inst.sections.size()) {
    throw std::invalid_argument("instance sections are linearly dependent");
  }
}

Section combine(const PrimeField& F, const SplittingType& type, const std::vector<Section>& sections,
                const std::vector<Residue>& coords) {
  Section out;
  for (int a : type.degrees()) out.push_back(a < 0 ? BinaryForm() : BinaryForm::zero(a));
  for (std::size_t l = 0; l < sections.size(); ++l) {
    if (coords[l] == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (sections[l][i].is_sentinel()) continue;
      out[i] = add(F, out[i], scale(F, sections[l][i], coords[l]));
    }
  }
  return out;
}

SystemInstance sample_instance(int n, int d, int k, std::uint32_t q, std::uint64_t seed) {
  if (k < 0) throw std::invalid_argument("number of sections must be non-negative");
  SystemInstance inst{PrimeField(q), generic_splitting(n, d), {}};
  if (k > cohomology(inst.type, 0).h0) {
    throw std::invalid_argument("k = " + std::to_string(k) + " exceeds h^0(E) for type " + inst.type.to_string());
  }
  std::mt19937_64 rng(seed);
  while (true) {
    inst.sections.clear();
    for (int l = 0; l < k; ++l) inst.sections.push_back(random_section(inst.field, inst.type, rng));
    if (rank(flatten(inst)) == static_cast<std::size_t>(k)) return inst;
  }
}

SystemInstance sample_generating_instance(int n, int d, int k, std::uint32_t q, std::uint64_t seed,
                                          int max_attempts) {
  std::uint64_t s = seed;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SystemInstance inst = sample_instance(n, d, k, q, s);
    if (check_global_generation(inst)) return inst;
    s = s * 6364136223846793005ULL + 1442695040888963407ULL;
  }
  throw std::runtime_error("no generating instance found in " + std::to_string(max_attempts) + " attempts");
}

// Searching only F_q-rational subspaces is complete. If (E, V) is not
// alpha-semistable, its maximal destabilizing subsystem is unique, hence fixed
// by Galois, hence defined over F_q. If it is semistable but not stable, the
// socle (sum of stable subsystems of the same slope) is Galois-fixed too: when
// it is proper it is a rational subsystem of equal slope, and when it is all of
// (E, V) the system is polystable with at least two summands, so End(E, V) has
// dimension > 1. The endomorphism count settles that last case.
SubsystemCandidates enumerate_candidates(const SystemInstance& inst, const CheckerOptions& options) {
  validate(inst);
  const PrimeField& F = inst.field;
  const int n = inst.n();
  const int k = inst.k();
  if (exceeds_cost_guard(F.modulus(), k, options)) {
    throw CostGuardError("k = " + std::to_string(k) + " at q = " + std::to_string(F.modulus()) +
                         " exceeds the subspace budget (k > 3 needs q <= 31 or the force-large override)");
  }
  std::map<std::pair<int, int>, Candidate> best;
  auto offer = [&](int r, int w, std::int64_t e, const FieldMatrix& basis) {
    auto [it, inserted] = best.try_emplace({r, w});
    if (inserted || e > it->second.degree) it->second = Candidate{r, w, e, rows_of(basis)};
  };
  for (int w = 0; w <= k; ++w) {
    for_each_subspace(F, k, w, [&](const FieldMatrix& basis) {
      std::vector<Section> span;
      for (std::size_t row = 0; row < basis.rows(); ++row) {
        std::vector<Residue> coords(static_cast<std::size_t>(k));
        for (std::size_t c = 0; c < coords.size(); ++c) coords[c] = basis(row, c);
        span.push_back(combine(F, inst.type, inst.sections, coords));
      }
      const SaturationResult sat = saturate(F, inst.type, span);
      for (int r = std::max(sat.rank, 1); r <= n; ++r) {
        if (r == n && w == k) continue;
        offer(r, w, sat.degree + max_subbundle_degree(sat.quotient, r - sat.rank), basis);
      }
      return false;
    });
  }
  SubsystemCandidates out;
  out.n = n;
  out.d = inst.d();
  out.k = k;
  for (auto& [key, c] : best) out.best.push_back(std::move(c));
  out.endomorphism_dimension = endomorphism_dimension(inst);
  return out;
}

StabilityReport is_alpha_stable(const SubsystemCandidates& cands, const Rational& alpha) {
  if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
  StabilityReport report;
  report.alpha = alpha;
  report.total_slope = slope(cands.d, cands.k, cands.n, alpha);
  const Candidate* worst = nullptr;
  Rational worst_slope;
  for (const Candidate& c : cands.best) {
    Rational s = slope(c.degree, c.dimension, c.rank, alpha);
    if (worst == nullptr || s > worst_slope) {
      worst = &c;
      worst_slope = std::move(s);
    }
  }
  const bool below = worst == nullptr || worst_slope < report.total_slope;
  report.semistable = worst == nullptr || worst_slope <= report.total_slope;
  report.stable = below && cands.endomorphism_dimension == 1;
  if (!below) {
    report.witness = SubsystemWitness{worst->rank, worst->degree, worst->dimension, worst_slope, worst->subspace_basis, 1};
  } else if (!report.stable) {
    // Polystable over an extension of F_q. At non-critical alpha the summands
    // have invariants proportional to (n, d, k).
    const auto m = static_cast<std::int64_t>(cands.endomorphism_dimension);
    std::int64_t g = std::gcd(std::gcd<std::int64_t>(cands.n, cands.d), cands.k);
    if (std::gcd(g, m) > 1) g = std::gcd(g, m);
    SubsystemWitness w;
    w.alpha_slope = report.total_slope;
    w.extension_degree = static_cast<int>(m);
    if (g > 1) {
      w.rank = static_cast<int>(cands.n / g);
      w.degree = cands.d / g;
      w.dimension = static_cast<int>(cands.k / g);
    }
    report.witness = std::move(w);
  }
  return report;
}

StabilityReport is_alpha_stable(const SystemInstance& inst, const Rational& alpha, const CheckerOptions& options) {
  if (alpha < 0) throw std::invalid_argument("alpha must be non-negative");
  return is_alpha_stable(enumerate_candidates(inst, options), alpha);
}

std::vector<Rational> critical_alphas(const SubsystemCandidates& cands) {
  std::vector<Rational> out;
  for (const Candidate& c : cands.best) {
    const std::int64_t den = static_cast<std::int64_t>(c.rank) * cands.k - static_cast<std::int64_t>(cands.n) * c.dimension;
    if (den == 0) continue;
    Rational alpha = Rational(static_cast<std::int64_t>(cands.n) * c.degree - c.rank * cands.d) / Rational(den);
    if (alpha >= 0) out.push_back(std::move(alpha));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Rational> critical_alphas(const SystemInstance& inst, const CheckerOptions& options) {
  return critical_alphas(enumerate_candidates(inst, options));
}

AlphaInterval stability_interval(const SubsystemCandidates& cands) {
  std::vector<Rational> cuts{Rational(0)};
  for (const Rational& c : critical_alphas(cands)) {
    if (c > 0) cuts.push_back(c);
  }
  // Cell i is (cuts[i], cuts[i+1]), the last one unbounded.
  std::vector<bool> stable(cuts.size());
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    const Rational sample = i + 1 < cuts.size() ? Rational((cuts[i] + cuts[i + 1]) / 2) : Rational(cuts[i] + 1);
    stable[i] = is_alpha_stable(cands, sample).stable;
  }
  const auto first = std::find(stable.begin(), stable.end(), true);
  if (first == stable.end()) return AlphaInterval::empty();
  const auto lo = static_cast<std::size_t>(first - stable.begin());
  std::size_t hi = lo;
  while (hi + 1 < stable.size() && stable[hi + 1]) {
    if (!is_alpha_stable(cands, cuts[hi + 1]).stable) {
      throw std::logic_error("stable cells are separated by an unstable critical value");
    }
    ++hi;
  }
  if (std::find(stable.begin() + static_cast<std::ptrdiff_t>(hi) + 1, stable.end(), true) != stable.end()) {
    throw std::logic_error("stable alpha do not form a single interval");
  }
  AlphaInterval::Bound upper;
  if (hi + 1 < cuts.size()) upper = cuts[hi + 1];
  return AlphaInterval::open(cuts[lo], upper);
}

AlphaInterval stability_interval(const SystemInstance& inst, const CheckerOptions& options) {
  return stability_interval(enumerate_candidates(inst, options));
}

std::size_t endomorphism_dimension(const SystemInstance& inst) {
  validate(inst);
  const PrimeField& F = inst.field;
  const auto n = static_cast<std::size_t>(inst.n());
  const auto k = static_cast<std::size_t>(inst.k());
  const auto deg = [&](std::size_t i) { return inst.type[i]; };

  // Unknowns: coefficients of phi_ij : O(a_j) -> O(a_i), then the k x k matrix c
  // with phi(s_l) = sum_m c_lm s_m.
  std::vector<std::size_t> phi_offset(n * n);
  std::size_t unknowns = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      phi_offset[i * n + j] = unknowns;
      unknowns += slot_size(deg(i) - deg(j));
    }
  }
  const std::size_t c_offset = unknowns;
  unknowns += k * k;

  std::size_t equations = 0;
  for (std::size_t i = 0; i < n; ++i) equations += k * slot_size(deg(i));
  FieldMatrix sys(F, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t p = 0; p < slot_size(deg(i)); ++p, ++row) {
        for (std::size_t j = 0; j < n; ++j) {
          const BinaryForm& s = inst.sections[l][j];
          if (s.is_sentinel()) continue;
          const std::size_t len = slot_size(deg(i) - deg(j));
          // coefficient p of phi_ij * s: sum over u + v = p.
          for (std::size_t u = 0; u < len && u <= p; ++u) {
            const std::size_t v = p - u;
            if (v > static_cast<std::size_t>(s.degree())) continue;
            Residue& e = sys(row, phi_offset[i * n + j] + u);
            e = F.add(e, s.coefficient(static_cast<int>(v)));
          }
        }
        for (std::size_t m = 0; m < k; ++m) {
          const BinaryForm& s = inst.sections[m][i];
          if (s.is_sentinel()) continue;
          sys(row, c_offset + l * k + m) = F.neg(s.coefficient(static_cast<int>(p)));
        }
      }
    }
  }
  return kernel_dimension(sys);
}

bool check_global_generation(const SystemInstance& inst) {
  validate(inst);
  const std::size_t n = static_cast<std::size_t>(inst.n());
  const std::size_t k = inst.sections.size();
  if (k == 0) return false;
  FormMatrix m(n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) m(i, l) = inst.sections[l][i];
  }
  const std::vector<int> source(k, 0);
  const std::vector<int> target(inst.type.degrees().begin(), inst.type.degrees().end());
  const SplittingType kernel = kernel_splitting(inst.field, source, target, m);
  return static_cast<int>(k) - kernel.rank() == inst.n() && -kernel.degree() == inst.d();
}

int evaluation_rank_at_point(const SystemInstance& inst, Residue b, Residue c) {
  validate(inst);
  const PrimeField& F = inst.field;
  if (F.reduce(b) == 0 && F.reduce(c) == 0) throw std::invalid_argument("(0 : 0) is not a point of P^1");
  FieldMatrix m(F, inst.sections.size(), static_cast<std::size_t>(inst.n()));
  for (std::size_t l = 0; l < inst.sections.size(); ++l) {
    for (std::size_t i = 0; i < m.cols(); ++i) {
      const BinaryForm& f = inst.sections[l][i];
      m(l, i) = f.is_sentinel() ? 0 : evaluate(F, f, F.reduce(b), F.reduce(c));
    }
  }
  return static_cast<int>(rank(m));
}

}  // namespace cohsys
