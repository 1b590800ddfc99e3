#pragma once

// Certificate types: one structural decomposition per class, or a wheel
// witness when the graph is not (wheel, antiwheel)-free.

#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wheelfree/graph.hpp"
#include "wheelfree/oracle.hpp"

namespace wheelfree {

struct FiveHole {
  std::vector<Vertex> cycle;
  bool operator==(const FiveHole&) const = default;
};

struct SixHole {
  std::vector<Vertex> cycle;
  bool operator==(const SixHole&) const = default;
};

struct SplitPartition {
  VertexSet clique;
  VertexSet stable;
  bool operator==(const SplitPartition&) const = default;
};

/// 4-hole a-b-c-d-a, clique X complete to {c,d}, apex e complete to X with
/// at most one neighbor in {c,d}; a and b see nothing outside the hole.
struct ClassADecomposition {
  Vertex a = 0, b = 0, c = 0, d = 0, e = 0;
  VertexSet X;
  bool operator==(const ClassADecomposition&) const = default;
};

/// Connected chain bipartite X ∪ Y with dominating x ∈ X and y ∈ Y, a
/// stable set Z seeing exactly {x, y}, and isolated vertices W.
struct ClassBDecomposition {
  VertexSet X, Y, Z, W;
  Vertex x = 0, y = 0;
  bool operator==(const ClassBDecomposition&) const = default;
};

/// Two cliques joined by exactly two disjoint cross edges (X end first).
struct ClassCDecomposition {
  VertexSet X, Y;
  Edge m1{}, m2{};
  bool operator==(const ClassCDecomposition&) const = default;
};

using Certificate = std::variant<FiveHole, SixHole, SplitPartition, ClassADecomposition, ClassBDecomposition,
                                 ClassCDecomposition, WheelWitness>;

struct Classification {
  Certificate certificate;
  /// Structural certificate describes complement(g). Ignored for wheel witnesses.
  bool complemented = false;

  bool is_free() const { return !std::holds_alternative<WheelWitness>(certificate); }

  std::string_view verdict() const {
    return std::visit(
        [](const auto& c) -> std::string_view {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, FiveHole>) return "FiveHole";
          else if constexpr (std::is_same_v<T, SixHole>) return "SixHole";
          else if constexpr (std::is_same_v<T, SplitPartition>) return "Split";
          else if constexpr (std::is_same_v<T, ClassADecomposition>) return "ClassA";
          else if constexpr (std::is_same_v<T, ClassBDecomposition>) return "ClassB";
          else if constexpr (std::is_same_v<T, ClassCDecomposition>) return "ClassC";
          else return "NotFree";
        },
        certificate);
  }

  bool operator==(const Classification&) const = default;
};

}  // namespace wheelfree
