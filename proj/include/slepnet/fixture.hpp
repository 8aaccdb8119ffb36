#pragma once

#include <cstdint>
#include <string>

#include "slepnet/graph.hpp"

namespace slepnet {

// Synthetic connectome-style graph: sensory, inter and motor neurons (plus a
// few polymodal sensory/motor ones) in left/right pairs, wired by a block
// model with a sensory -> inter -> motor bias and integer synapse counts.
struct ConnectomeFixture {
  std::string edge_list;  // src,dst,weight
  std::string metadata;   // id,categories,display_name
};

inline constexpr std::uint64_t kDefaultFixtureSeed = 2017;

// Output depends only on (seed, num_nodes); num_nodes must be at least 8.
ConnectomeFixture generate_connectome_fixture(std::uint64_t seed = kDefaultFixtureSeed,
                                              Index num_nodes = 60);

}  // namespace slepnet
