#pragma once

// SVG 1.1 output. Pictures are floating point; anything combinatorial drawn on
// them (crossing markers, wiring) comes from the exact computations.

#include <cstdint>
#include <string>

#include "cak/geometry.hpp"
#include "cak/types.hpp"

namespace cak {

struct RenderSpec {
    int width = 640;
    int height = 480;
    int margin = 24;
    std::uint32_t color_seed = 1;
    bool show_labels = true;
};

/// The bodies of the arrangement.
std::string render_arrangement(const Arrangement& arrangement, const RenderSpec& spec = {});

/// Support curves over 720 samples of (0, 2*pi], with the exact crossings marked.
std::string render_dual(const Arrangement& arrangement, const RenderSpec& spec = {});

/// Wiring diagram of one sweep of the swap pair.
std::string render_wiring(const SwapPair& sp, const RenderSpec& spec = {});

}  // namespace cak
