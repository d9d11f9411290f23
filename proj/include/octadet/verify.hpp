#ifndef OCTADET_VERIFY_HPP
#define OCTADET_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "octadet/freeconv.hpp"
#include "octadet/json_io.hpp"

namespace octadet {

inline constexpr const char* kVersion = "0.1.0";

/// Fixed 64-bit generator (splitmix64); part of the external contract
/// so reports are comparable across platforms.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);  // unbiased via rejection
};

/// Integers entries uniform in [-9, 9]; IntegersMod uniform residues;
/// Poly entries of degree <= 1 with recursively random coefficients.
Element random_element(const RingPtr& ring, SplitMix64& rng);
Matrix random_matrix(const RingPtr& ring, int rows, int cols, SplitMix64& rng);

/// Deliberate sabotage of one closed-form constant (+1), used to show
/// the harness actually distinguishes right from wrong.
enum class Mutation { None, MultConstant, AddConstant, RectConstant };

std::string mutation_name(Mutation m);
Mutation mutation_from_name(const std::string& name);
const ConvConstants& constants_for(Mutation m);

struct SuiteConfig {
  std::vector<std::string> rings{"int", "mod:6", "mod:2"};
  int max_n = 3;
  int max_m = 3;
  int trials = 25;
  std::uint64_t seed = 42;
  std::vector<std::string> identities;  // empty selects all
  int jobs = 1;
  Mutation mutation = Mutation::None;
};

struct IdentityStats {
  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  json counterexample = nullptr;  // first failure, replayable
};

struct Report {
  std::uint64_t seed = 0;
  std::string version = kVersion;
  std::vector<std::pair<std::string, IdentityStats>> results;
  std::vector<std::string> coverage;
  std::uint64_t wall_ms = 0;

  std::uint64_t total_failed() const;
  /// Stable-field-order JSON. Timing is emitted as 0 unless requested,
  /// keeping reports byte-identical across runs.
  json to_json(bool include_timing = false) const;
};

const std::vector<std::string>& all_identities();

Report run_suite(const SuiteConfig& config);

/// Re-evaluates a recorded counterexample; true iff the failure
/// reproduces bit-for-bit.
bool replay_counterexample(const json& cx);

}  // namespace octadet

#endif
