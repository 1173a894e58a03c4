#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fedsim {

enum class SourceSplit { Train, Dev, Test };

std::string to_string(SourceSplit split);

struct ManifestRecord {
  std::string utterance_id;
  std::string speaker_id;
  double duration_seconds = 0.0;
  SourceSplit source_split = SourceSplit::Train;

  bool operator==(const ManifestRecord&) const = default;
};

using RecordSet = std::vector<ManifestRecord>;

struct Manifest {
  RecordSet records;

  std::size_t size() const { return records.size(); }
  bool operator==(const Manifest&) const = default;
};

// Line format: utterance_id<TAB>speaker_id<TAB>duration_seconds<TAB>split.
// Malformed lines and duplicate utterance ids raise DataError.
Manifest load_manifest(std::istream& in);
void write_manifest(const RecordSet& records, std::ostream& out);

// Stable-order concatenation; colliding utterance ids raise DataError.
Manifest merge_supersets(const std::vector<Manifest>& parts);

struct PartitionConfig {
  int fl_threshold = 116;          // speakers above this become clients
  double train_ratio = 0.6;
  double test_ratio = 0.2;
  double dev_ratio = 0.2;
  double initial_fraction = 1.0 / 3.0;
  std::uint64_t seed = 0;

  void validate() const;
  bool operator==(const PartitionConfig&) const = default;
};

struct ClientSplit {
  RecordSet train, test, dev;
};

// The pooled evaluation sets carved out at the end of the pipeline.
struct FinalSets {
  RecordSet unseen_dev, unseen_test;  // one utterance per leftover dev/test speaker
  RecordSet pre_dev, pre_test;        // one per initial-train speaker, alternating
  RecordSet fl_dev, fl_test;          // one per client train split, alternating
};

// Records the pipeline does not place in any training or evaluation set.
// Kept so that every input utterance lands in exactly one output set.
struct Leftovers {
  RecordSet server_dev, server_test;  // non-client dev/test after carving
  RecordSet unused_train;             // train records not picked for initial
};

struct PartitionResult {
  RecordSet initial_train;
  std::map<std::string, ClientSplit> fl_clients;  // client id = speaker id
  FinalSets final_sets;
  Leftovers leftovers;
  RecordSet complete_train;   // initial_train plus every client train set
};

// Speakers with strictly more than `threshold` utterances across all source
// splits become clients; everything else stays in the remainder.
std::pair<std::vector<std::string>, Manifest> split_fl_speakers(const Manifest& manifest,
                                                                int threshold);

// One speaker's records into train/test/dev. Shuffle keyed by (seed,
// speaker_id); test and dev take floor(ratio*n) each, train the rest.
ClientSplit split_client(const RecordSet& records, const PartitionConfig& config);

// Picks whole speakers from the remainder train records, in seeded-shuffled
// speaker order, stopping before the selection would exceed
// round(fraction * fl_train_total) by more than 5%.
RecordSet reduce_initial(const RecordSet& remainder_train, std::size_t fl_train_total,
                         double fraction, std::uint64_t seed);

// Moves one utterance per eligible speaker into the final sets: leftover
// dev/test speakers feed the unseen sets, initial-train speakers alternate
// into pre-dev/pre-test, client train splits alternate into fl-dev/fl-test.
// Speakers whose train split would drop to zero are skipped.
void carve_final_sets(PartitionResult& result, std::uint64_t seed);

// Exact union; any utterance overlap raises DataError.
RecordSet build_complete(const RecordSet& initial_train,
                         const std::map<std::string, ClientSplit>& fl_clients);

// The whole pipeline on a merged manifest.
PartitionResult run_partition(const Manifest& manifest, const PartitionConfig& config);

// Deterministic synthetic manifest: one speaker per entry of
// utterances_per_speaker, source splits drawn with the given weights,
// durations uniform in [1, 15] seconds.
struct SynthManifestSpec {
  std::vector<int> utterances_per_speaker;
  double train_weight = 0.8;
  double dev_weight = 0.1;
  double test_weight = 0.1;
};

Manifest synth_manifest(const SynthManifestSpec& spec, std::uint64_t seed);

// Checks every PartitionResult invariant; returns human-readable violations
// (empty = valid). With `source`, also checks that every input utterance
// landed in exactly one output set.
std::vector<std::string> validate_partition(const PartitionResult& result,
                                            const Manifest* source = nullptr);

}  // namespace fedsim
