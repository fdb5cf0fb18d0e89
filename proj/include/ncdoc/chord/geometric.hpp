#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ncdoc/chord/diagram.hpp"

namespace ncdoc::chord {

/// Straight chords between boundary points 1..points in cyclic order.
/// `fuse` lists pairs of chord indices (0-based) joined at a trivalent node.
struct GeometricChords {
  int points = 0;
  std::vector<std::pair<int, int>> chords;
  std::vector<std::pair<int, int>> fuse;
  std::vector<std::string> labels;

  /// Throws std::invalid_argument unless every point is used by exactly one
  /// chord and fuse indices name existing, distinct chords.
  void validate() const;
};

/// Two chords cross once iff their endpoints interleave.
bool chords_cross(std::pair<int, int> a, std::pair<int, int> b);

/// Fused chords form one web; crossings between webs are summed and
/// crossings inside a web become its self crossings.
Diagram from_geometric(const GeometricChords& g);

nlohmann::json to_json(const GeometricChords& g);
GeometricChords geometric_from_json(const nlohmann::json& j);

}  // namespace ncdoc::chord
