#pragma once

// Synthetic project traces for dynamic verification: conformant traces
// generated from per-family templates, and single-edit mutations of them
// that must be caught by the conformance check.

#include "setheory/ontology.hpp"
#include "setheory/process.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace setheory {

/// SplitMix64. State advances by 0x9E3779B97F4A7C15 per draw; the output is
/// the state passed through the standard 30/27/31 xor-shift-multiply mix.
/// Reproducible across platforms and implementations.
class SplitMix64
{
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [lo, hi] (inclusive) by modulo reduction; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den);

private:
  std::uint64_t state_;
};

/// 64-bit FNV-1a, used to fold process names into generator seeds.
std::uint64_t fnv1a64(std::string_view text);

struct GenParams
{
  std::uint64_t seed = 1;
  int n_products = 3;    ///< 1..50
  int n_milestones = 2;  ///< 1..20
  int phase_gap_max = 5; ///< 0..1000 ticks between consecutive phases/sprints
  int sprint_count = 3;  ///< 0..100

  /// Throws std::invalid_argument naming the first out-of-range field.
  void validate() const;
};

class GenerationError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxGenerationAttempts = 100;

/// A trace that satisfies every invariant and every mandatory rule of
/// `process`. Deterministic in (process.name, params). The template is
/// chosen by the process family (root of its lineage): "waterfall" lays
/// out the process's phase bindings back to back, "scrum" builds a sprint
/// ladder with daily and retrospective meetings. Each attempt is checked
/// with evaluate_process; after kMaxGenerationAttempts failures a
/// GenerationError ("unsatisfiable under template") is thrown.
Project generate_trace(const Process& process, const GenParams& params);

enum class MutationKind {
  shift_phase_start,
  delete_retrospective,
  retarget_increment,
  undelivered_work,
  swap_milestone_due,
};

inline constexpr MutationKind kMutationCatalog[] = {
    MutationKind::shift_phase_start,  MutationKind::delete_retrospective, MutationKind::retarget_increment,
    MutationKind::undelivered_work,   MutationKind::swap_milestone_due,
};

std::string_view to_string(MutationKind kind);
std::optional<MutationKind> mutation_from_name(std::string_view name);

/// What a mutation is expected to break: a named rule or an invariant.
struct ExpectedTarget
{
  enum class Kind { rule, invariant } kind;
  std::string rule_name;                              ///< when kind == rule
  InvariantCode code = InvariantCode::id_unique;      ///< when kind == invariant

  std::string describe() const;
  friend bool operator==(const ExpectedTarget&, const ExpectedTarget&) = default;
};

struct MutatedTrace
{
  Project project;
  MutationKind kind;
  ExpectedTarget expected;
  std::string description;
};

class MutationError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// Applies one edit from the mutation catalog, chosen with `seed` among the
/// applicable ones (or restricted to `only`). `project` must conform to
/// `process`. Throws MutationError when nothing applies.
MutatedTrace mutate_trace(const Project& project, const Process& process, std::uint64_t seed,
                          std::optional<MutationKind> only = std::nullopt);

/// Rule name the delete_retrospective mutation targets.
inline constexpr std::string_view kRetrospectiveRule = "retrospective_each_sprint";

} // namespace setheory
