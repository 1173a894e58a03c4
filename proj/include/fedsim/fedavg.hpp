#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fedsim/client.hpp"
#include "fedsim/model.hpp"
#include "fedsim/schedule.hpp"

namespace fedsim {

// Mean: every selected client weighs 1/N. Weighted: proportional to the
// client's dataset size, renormalized over the selected set.
enum class WeightingScheme { Mean, Weighted };

struct SelectionPolicy {
  enum class Mode { All, RandomN };

  Mode mode = Mode::All;
  int n = 0;                 // RandomN sample size
  std::uint64_t seed = 0;

  void validate() const;
  bool operator==(const SelectionPolicy&) const = default;
};

// Averaging weights for the selected clients' dataset sizes; nonnegative,
// summing to 1.
std::vector<double> compute_weights(WeightingScheme scheme,
                                    const std::vector<std::size_t>& dataset_sizes);

// Weighted average of the models. Weights must sum to 1 within 1e-9 and the
// layouts must match. The sum is accumulated as corrections against the first
// model so that averaging identical models reproduces them bit for bit.
ParameterVector fedavg(const std::vector<const ParameterVector*>& models,
                       const std::vector<double>& weights);
ParameterVector fedavg(const std::vector<ParameterVector>& models,
                       const std::vector<double>& weights);

// prev_global + sum of weighted deltas; the update form of the same average.
// Kept as an independent route for checking the averaging identity.
ParameterVector delta_form_average(const ParameterVector& prev_global,
                                   const std::vector<ParameterVector>& deltas,
                                   const std::vector<double>& weights);

// Deterministic in (policy.seed, round); output sorted by client_id, so the
// result is independent of the declaration order of `clients`.
std::vector<ClientState*> select_clients(std::vector<ClientState>& clients,
                                         const SelectionPolicy& policy, std::size_t round);

// True once the best value lies more than `patience` entries before the end.
// Improvement is strictly greater; ties do not reset the counter.
bool early_stop_check(const std::vector<double>& history, int patience);

struct RoundResult {
  bool skipped = false;                   // nobody had data; round did not count
  std::vector<std::string> participants;  // id-sorted
};

// One federated round: select, reset to the incoming global, train each
// client on its schedule subset, average the participants. Clients whose
// subset is empty drop out and the weights renormalize over the rest.
RoundResult run_round(GlobalState& global, std::vector<ClientState>& clients,
                      const SelectionPolicy& policy, WeightingScheme scheme,
                      const SchedulePlan& plan, const ModelSpec& spec,
                      const TrainConfig& train, CostLedger& ledger,
                      std::size_t batch_epoch = 0,
                      std::optional<long> steps_per_round = std::nullopt);

struct FederatedOptions {
  SelectionPolicy policy;
  WeightingScheme scheme = WeightingScheme::Mean;
  SchedulePlan plan;
  ModelSpec model;
  TrainConfig train;
  std::uint64_t model_bytes = 0;             // 0: size of a serialized model
  bool count_downlink = false;
  const LabeledDataset* round_eval = nullptr; // optional per-round metrics source
  std::optional<long> steps_per_round;        // testing hook
};

struct RoundLog {
  std::size_t round = 0;
  std::size_t participants = 0;
};

struct FederatedResult {
  GlobalState state;
  std::vector<RoundLog> rounds;
  CostLedger ledger;
};

using RoundObserver = std::function<void(const GlobalState& global,
                                         const std::vector<std::string>& participants,
                                         const CostLedger& ledger)>;

// The outer loop: rounds until the schedule's budget is spent (B/E) or the
// single convergence-level round completed. Bitwise reproducible for a fixed
// config, and invariant under permutations of `clients`.
FederatedResult run_federated(const ParameterVector& initial, std::vector<ClientState> clients,
                              const FederatedOptions& options,
                              const RoundObserver& observer = {});

// Serialized size of a model: the payload one transfer moves.
std::uint64_t serialized_model_bytes(const ParameterVector& params);

}  // namespace fedsim
