#pragma once

// Exhaustive sweeps over finite weight grids. Each suite checks a fixed list
// of named claims on every grid weight and collects counterexamples. Sweeps
// run in chunks of the canonical weight order; a chunk is split into
// contiguous ranges across workers and merged in range order, so results do
// not depend on the worker count. A checkpoint is written after every chunk.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sppq/grid.hpp"
#include "sppq/weights.hpp"

namespace sppq {

struct Counterexample {
  std::uint64_t weight_index;  ///< position in the canonical order; 0 for shape-level claims
  BlockVector weight;
  std::string claim;
  nlohmann::json details;
};

struct ClaimTally {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;

  friend bool operator==(const ClaimTally&, const ClaimTally&) = default;
};

struct VerificationReport {
  std::string suite;
  SweepGrid grid;
  std::vector<ClaimTally> claims;
  std::uint64_t weights_scanned = 0;
  std::uint64_t total_weights = 0;
  std::vector<Counterexample> counterexamples;
  std::chrono::duration<double> wall_time{0};
  /// Next unprocessed weight index when the sweep stopped early.
  std::optional<std::uint64_t> checkpoint;

  bool complete() const { return !checkpoint.has_value(); }
  bool verified() const { return complete() && counterexamples.empty(); }
  /// "verified", "violated" or "incomplete".
  std::string verdict() const;

  nlohmann::json to_json(bool include_wall_time = true) const;
};

nlohmann::json to_json(const Counterexample& c);

struct SweepOptions {
  unsigned jobs = 1;
  std::optional<std::filesystem::path> checkpoint_file;
  /// Continue from checkpoint_file if it exists.
  bool resume = false;
  std::uint64_t checkpoint_every = 100000;
  /// Stop once this many weights (counted from index 0) are done; simulates
  /// an interruption.
  std::optional<std::uint64_t> stop_after;
  /// Called as soon as a counterexample is found; calls are serialized.
  std::function<void(const Counterexample&)> on_counterexample;
};

/// ||mu||_spin > ||mu - beta||_spin for every u-large grid weight with
/// mu - beta dominant.
VerificationReport verify_theorem(const SweepGrid& grid, const SweepOptions& options = {});

/// For boundary (dR/dL) weights every deficient index has k-value strictly
/// above the spin norm; for weights with b_1 >= 2p+1 or a_1 >= 2q+1 no
/// deficient index attains the spin norm.
VerificationReport verify_prop_boundary(const SweepGrid& grid, const SweepOptions& options = {});

/// Head (resp. tail) descent witnesses for boundary weights.
VerificationReport verify_lemma_down(const SweepGrid& grid, const SweepOptions& options = {});

/// Omega structure for the shape plus every per-weight module property.
VerificationReport verify_all_properties(const SweepGrid& grid, const SweepOptions& options = {});

/// Shape-level Omega/Weyl claims only (no weight sweep).
VerificationReport verify_omega_shape(const GroupShape& shape);

/// Single-coordinate steps {v +- e_s} >> {v} and the strict k-value increase
/// under normalized domination, for every vector with block lengths
/// 1..max_block and entries in [-range, range].
VerificationReport verify_normalize_steps(int max_block, Int range);

/// Reads a checkpoint file into a partial report. Throws std::runtime_error on
/// a malformed or unsupported document.
VerificationReport load_checkpoint(const std::filesystem::path& path);

}  // namespace sppq
