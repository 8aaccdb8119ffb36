#include "slepnet/fixture.hpp"

#include <array>
#include <cstdio>
#include <random>
#include <vector>

#include "slepnet/dataio.hpp"
#include "slepnet/error.hpp"

namespace slepnet {

namespace {

enum Group { kSensory = 0, kPolymodal = 1, kInter = 2, kMotor = 3 };

// Connection probability between groups (symmetric).
constexpr std::array<std::array<double, 4>, 4> kWiring = {{
    {0.16, 0.14, 0.26, 0.04},
    {0.14, 0.10, 0.22, 0.12},
    {0.26, 0.22, 0.20, 0.22},
    {0.04, 0.12, 0.22, 0.14},
}};
constexpr double kSameSideBoost = 1.5;

class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  Index below(Index n) { return static_cast<Index>((*this)() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

ConnectomeFixture generate_connectome_fixture(std::uint64_t seed, Index num_nodes) {
  if (num_nodes < 8) throw Error(ErrorKind::InvalidArgument, "fixture needs at least 8 nodes");
  Uniform rng(seed);

  // Group sizes in neuron pairs: ~23% sensory, ~7% polymodal, ~30% inter, rest motor.
  const Index pairs = num_nodes / 2;
  const Index sensory = std::max<Index>(1, pairs * 7 / 30);
  const Index polymodal = std::max<Index>(1, pairs * 2 / 30);
  const Index inter = std::max<Index>(1, pairs * 9 / 30);
  std::vector<Group> group;
  std::vector<char> side;
  std::vector<std::string> ids;
  const auto add_pairs = [&](Group g, Index count, const char* prefix) {
    for (Index k = 0; k < count; ++k) {
      for (const char s : {'L', 'R'}) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%s%02zu%c", prefix, k + 1, s);
        ids.emplace_back(buf);
        group.push_back(g);
        side.push_back(s);
      }
    }
  };
  add_pairs(kSensory, sensory, "SEN");
  add_pairs(kPolymodal, polymodal, "PLY");
  add_pairs(kInter, inter, "INT");
  add_pairs(kMotor, pairs - sensory - polymodal - inter, "MOT");
  if (ids.size() < num_nodes) {  // odd count: one unpaired motor neuron
    ids.emplace_back("MOT00");
    group.push_back(kMotor);
    side.push_back('C');
  }

  std::vector<Edge> edges;
  for (Index i = 0; i < num_nodes; ++i) {
    for (Index j = i + 1; j < num_nodes; ++j) {
      double p = kWiring[group[i]][group[j]];
      if (side[i] == side[j]) p *= kSameSideBoost;
      if (rng() < p) {
        // Synapse count: 1 + geometric(1/2), capped.
        double w = 1.0;
        while (w < 8.0 && rng() < 0.5) w += 1.0;
        edges.push_back({i, j, w});
      }
    }
  }

  // Join stray components to the first one.
  {
    const Graph g = build_graph(edges, num_nodes);
    const auto comps = connected_components(g);
    for (std::size_t c = 1; c < comps.size(); ++c) {
      const Index anchor = comps[0][rng.below(comps[0].size())];
      edges.push_back({std::min(anchor, comps[c][0]), std::max(anchor, comps[c][0]), 1.0});
    }
  }

  ConnectomeFixture out;
  out.edge_list = "# synthetic connectome fixture, seed " + std::to_string(seed) + "\n";
  for (const auto& e : edges) {
    out.edge_list += ids[e.source] + "," + ids[e.target] + "," + format_real(e.weight) + "\n";
  }
  static const char* const kTags[] = {"sensory", "sensory;motor", "inter", "motor"};
  out.metadata = "id,categories,display_name\n";
  for (Index i = 0; i < num_nodes; ++i) {
    out.metadata += ids[i] + "," + kTags[group[i]] + "," + ids[i] + "\n";
  }
  return out;
}

}  // namespace slepnet
