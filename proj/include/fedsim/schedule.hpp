#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fedsim/client.hpp"

namespace fedsim {

// When clients communicate. Batch level talks after every k minibatches,
// epoch level after period_chunks data chunks (period < chunks_per_epoch gives
// fractional epochs, period > chunks_per_epoch multi-epoch periods), and
// convergence level exactly once, after each client trained to a local
// early-stopping plateau.
struct SchedulePlan {
  enum class Level { Batch, Epoch, Convergence };

  Level level = Level::Epoch;
  int batch_k = 1;             // B: minibatches between communications
  int period_chunks = 8;       // E: chunks between communications
  int chunks_per_epoch = 8;    // E: chunk granularity of one epoch
  int patience = 10;           // C: local early-stopping patience
  int max_epochs = 60;         // C: hard cap on local epochs
  int epoch_budget = 12;       // B/E: total data epochs; 0 means no rounds

  void validate() const;
  bool operator==(const SchedulePlan&) const = default;
};

// One epoch's shuffled index order split into near-equal contiguous chunks.
// Leading chunks take the remainder; at most size difference 1.
struct ChunkPlan {
  std::vector<std::size_t> order;
  std::vector<std::pair<std::size_t, std::size_t>> bounds;  // [begin, end) into order

  std::size_t chunk_count() const { return bounds.size(); }
  std::size_t chunk_size(std::size_t i) const { return bounds[i].second - bounds[i].first; }
};

ChunkPlan make_chunks(std::size_t dataset_size, int n_chunks, std::uint64_t seed);

// What one client trains in one round. Empty indices mean the client sits the
// round out (batch-level exhaustion or spent epoch budget).
struct RoundSubset {
  std::string client_id;
  std::vector<std::size_t> indices;
  std::vector<int> batch_sizes;   // sums to indices.size()

  bool empty() const { return indices.empty(); }
};

// Batch sizes for up to k minibatches from `remaining` untrained examples.
// Plenty of data: k full batches. Short of k*batch_size but at least k: k
// shrunken batches splitting the remainder evenly (leading batches take the
// extra). Fewer than k left: one example per batch. Nothing left: empty.
std::vector<int> b_level_batching(std::size_t remaining, int k, int batch_size);

// Computes the client's next round subset and advances its cursor.
// batch_epoch is the shared batch-level epoch counter (ignored for E/C).
RoundSubset next_subset(ClientState& client, const SchedulePlan& plan,
                        std::uint64_t shuffle_seed, int batch_size,
                        std::size_t batch_epoch = 0);

// Drops all batches past the first `max_batches` (testing hook).
void truncate_subset(RoundSubset& subset, long max_batches);

enum class Direction { Up, Down };

struct CostEntry {
  std::size_t round;
  std::string client_id;
  Direction direction;
  std::uint64_t bytes;
};

// Append-only record of model transfers. Total bytes always equal the sum of
// the entries; downlink transfers are recorded only when counting them.
class CostLedger {
 public:
  CostLedger() = default;
  CostLedger(std::uint64_t model_bytes, bool count_downlink)
      : model_bytes_(model_bytes), count_downlink_(count_downlink) {}

  void record_transfer(std::size_t round, const std::string& client_id, Direction direction);

  const std::vector<CostEntry>& entries() const { return entries_; }
  std::uint64_t total_bytes() const { return total_bytes_; }
  double total_gb() const { return static_cast<double>(total_bytes_) / 1e9; }
  std::size_t uplink_count() const { return uplinks_; }
  std::uint64_t model_bytes() const { return model_bytes_; }
  bool count_downlink() const { return count_downlink_; }

  // round,client_id,direction,bytes
  void export_csv(std::ostream& out) const;

 private:
  std::uint64_t model_bytes_ = 0;
  bool count_downlink_ = false;
  std::vector<CostEntry> entries_;
  std::uint64_t total_bytes_ = 0;
  std::size_t uplinks_ = 0;
};

// Closed-form participation count assuming uniformly sized client data.
// nullopt when the count depends on the actual data (batch level, chunk
// periods that do not divide the budget); the ledger is authoritative then.
std::optional<long long> communication_events(const SchedulePlan& plan, int clients);

}  // namespace fedsim
