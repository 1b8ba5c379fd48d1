#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chaintrace/chain.hpp"
#include "chaintrace/coloring.hpp"

namespace chaintrace {

struct RenderInput {
  std::optional<Coloring> coloring;
  std::vector<Chain> chains;
};

struct RenderOptions {
  int cell = 40;
  int margin = 20;
  std::string negative = "#d62728";
  std::string positive = "#1f77b4";
  std::string neutral = "#7f7f7f";
  std::string shade = "#ffe08a";
};

// Static SVG 1.1 drawing. Vertices are filled circles colored by sign; gates
// are thin strokes, the other faces of chain simplexes thick ones; chain
// simplexes are shaded and seam crossings of torus chains get a marker.
// Element classes: grid, simplex, gate, wall, seam, vertex (neg/pos).
// Deterministic: equal input gives byte-identical output. Throws BadInput.
std::string render_svg(const RenderInput& input, const RenderOptions& opts = {});

}  // namespace chaintrace
