#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expose/env.hpp"
#include "expose/rng.hpp"

namespace expose::gridnav {

/// Grid coordinates, (row, col).
struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

/// 2D navigation instance: obstacle map plus start/goal. The generator
/// guarantees start != goal, both free, goal reachable.
struct GridInstance {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> obstacles;  // row-major, 1 = blocked
  Cell start;
  Cell goal;
  uint64_t seed = 0;

  bool obstacle(int r, int c) const { return obstacles[static_cast<size_t>(r) * width + c] != 0; }
  bool in_bounds(int r, int c) const { return r >= 0 && r < height && c >= 0 && c < width; }
};

// Fixed action order; tie-breaks everywhere use this index order.
enum Action : int { kUp = 0, kDown = 1, kLeft = 2, kRight = 3 };
constexpr int kNumActions = 4;
constexpr int kRowDelta[kNumActions] = {-1, 1, 0, 0};
constexpr int kColDelta[kNumActions] = {0, 0, -1, 0 + 1};

// Reward scheme: every move costs kStepPenalty; the move that lands on the
// goal additionally pays kGoalReward, so an expert trajectory of length L
// returns kGoalReward + kStepPenalty * L exactly.
constexpr double kStepPenalty = -0.01;
constexpr double kGoalReward = 1.0;

/// Rejection-sampled instance generation: obstacles occupy each cell
/// independently with obstacle_prob; start/goal resampled until the BFS
/// distance is at least min_shortest and the Manhattan distance at least
/// min_manhattan. Pure function of the seed.
/// Throws GenerationExhaustedError after max_attempts rejections.
GridInstance generate_instance(int width, int height, double obstacle_prob, int min_shortest,
                               int min_manhattan, uint64_t seed, int max_attempts = 10000);

/// Exact 4-connected BFS distance start -> goal; nullopt when unreachable.
std::optional<int> shortest_path(const GridInstance& inst);

/// Full BFS distance field from the goal (distance to goal per cell; -1
/// unreachable). Used by the expert and by tests as an oracle.
std::vector<int> distance_to_goal(const GridInstance& inst);

class GridNavEnv : public Environment {
 public:
  explicit GridNavEnv(GridInstance inst);

  std::string name() const override { return "gridnav"; }
  int max_actions() const override { return kNumActions; }
  int feature_count() const override;
  StateKey initial_state() const override { return encode(inst_.start); }
  bool is_terminal(const StateKey& s) const override;
  bool is_success(const StateKey& s) const override;
  ActionSet legal_actions(const StateKey& s) const override;
  Transition step(const StateKey& s, int action) const override;
  Features features(const StateKey& s) const override;
  double heuristic_value(const StateKey& s) const override;
  int default_horizon() const override { return 4 * (inst_.width + inst_.height); }

  const GridInstance& instance() const { return inst_; }
  uint64_t instance_hash() const { return hash_; }

  StateKey encode(Cell agent) const;
  Cell decode(const StateKey& s) const;

  /// Next action on some shortest path to the goal, ties broken by action
  /// index. Throws TerminalStateError at the goal; returns nullopt when the
  /// goal is unreachable from the state.
  std::optional<int> expert_action(const StateKey& s) const;

 private:
  GridInstance inst_;
  uint64_t hash_;
  std::vector<int> dist_to_goal_;  // computed lazily is not worth it; small grids
};

// JSONL instance files: one object per line,
// {"w","h","obstacles":[row-major 0/1],"start":[r,c],"goal":[r,c],"seed"}.
std::string to_json_line(const GridInstance& inst);
GridInstance from_json_line(const std::string& line);
std::vector<GridInstance> load_jsonl(const std::string& path);
void save_jsonl(const std::string& path, const std::vector<GridInstance>& instances);

}  // namespace expose::gridnav
