#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "gd/graph.hpp"

namespace gd {

struct ExactCaps {
  int vertices = 16;
  int edges = 32;
};

struct ExactResult {
  int value = 0;
  Decomposition witness;
};

// Minimum path decomposition by branch and bound. Throws CapExceeded.
ExactResult exact_path_number(const Graph& g, ExactCaps caps = {});
// Minimum cycle decomposition. Throws NotEvenGraph, CapExceeded.
ExactResult exact_cycle_number(const Graph& g, ExactCaps caps = {});
// Some path decomposition with at most k paths, if one exists.
std::optional<Decomposition> paths_within(const Graph& g, int k, ExactCaps caps = {});

// Seeded source used by every generator: std::mt19937_64 with bounded draws
// by rejection sampling, so streams are reproducible across platforms.
class Rng {
 public:
  static constexpr const char* algorithm = "mt19937_64+rejection";
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  int range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1))); }
  // True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

enum class Family {
  ThreeTree,
  PartialThreeTree,
  EulerianPartialThreeTree,  // largest component of a random even subgraph of a 3-tree
  MaxDeg4,
  EulerianMaxDeg4,
  HexGridFragment,
  DoubleCentered,
  Special,
};

struct GenSpec {
  Family family = Family::ThreeTree;
  int n = 10;
  std::uint64_t seed = 1;
  double keep = 0.7;     // PartialThreeTree edge-keep probability
  std::string special;   // K3, K4, K5, K5minus, K44_minus_PM, K6_minus_PM, octahedron, Petersen
};

const char* to_string(Family f);
std::optional<Family> parse_family(const std::string& name);

// Same spec, same graph. Throws InvalidSpec.
Graph generate(const GenSpec& spec);

Graph special_graph(const std::string& name);

}  // namespace gd
