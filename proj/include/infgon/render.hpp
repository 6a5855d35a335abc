#pragma once

#include <string>
#include <vector>

#include "infgon/triangulation.hpp"

namespace infgon {

struct RenderSpec {
  /// Regular points with |pos| <= radius are drawn.
  Index radius = 6;
  std::vector<Arc> highlight;
};

/// SVG 1.1 chord diagram. Families are cut to the window and their open ends
/// are drawn as dashed truncation marks. Throws DomainError when radius < 2.
std::string render_svg(const Triangulation& t, const RenderSpec& spec);
std::string render_svg(const Surface& s, const std::vector<Arc>& arcs, const RenderSpec& spec);

}  // namespace infgon
