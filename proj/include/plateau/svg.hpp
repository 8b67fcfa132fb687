#pragma once

#include "plateau/boxes.hpp"

#include <string>

namespace plateau {

// Renders the box tree into a 1000x1000 viewport. The b-axis is inverted
// so the parameter plane reads with b increasing upward. Coordinates are
// printed with 12 significant digits.
std::string boxes_svg(const DoubleCover& cover, const BoxTree& tree);

}  // namespace plateau
