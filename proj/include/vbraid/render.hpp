#ifndef VBRAID_RENDER_HPP_
#define VBRAID_RENDER_HPP_

#include <string>

#include "vbraid/word.hpp"

namespace vbraid {

  struct RenderOptions {
    // Label every arc with its integer number.
    bool numbers = false;
  };

  // Fixed-grid SVG of the braid diagram, read bottom to top: 80 units per
  // strand horizontally, one 60-unit row per letter. Classical crossings break
  // the under-strand; virtual crossings are drawn as two full lines with a
  // small circle at the intersection.
  std::string render_svg(BraidWord const& w, RenderOptions const& opts = {});

}  // namespace vbraid

#endif  // VBRAID_RENDER_HPP_
