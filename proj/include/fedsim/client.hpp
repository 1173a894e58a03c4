#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fedsim/model.hpp"

namespace fedsim {

// One simulated participant. chunk_cursor counts schedule units consumed so
// far: data chunks at epoch level, examples at batch level. The scheduler owns
// its advancement; nothing else may touch it.
struct ClientState {
  std::string client_id;
  LabeledDataset dataset;
  std::size_t dataset_size = 0;   // |D_n|, drives weighted averaging
  ParameterVector local_params;
  std::size_t chunk_cursor = 0;
};

ClientState make_client(std::string id, LabeledDataset dataset);

struct GlobalState {
  std::size_t round_index = 0;          // completed rounds
  ParameterVector global_params;        // model entering the next round
  std::vector<std::pair<std::size_t, EvalMetrics>> history;
};

}  // namespace fedsim
