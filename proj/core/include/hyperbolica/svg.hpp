#pragma once

#include <string>

#include "hyperbolica/partition.hpp"
#include "hyperbolica/variation.hpp"

namespace hyperbolica {

// Static diagrams on a fixed 512x512 canvas with the e1 axis horizontal and
// the e2 axis vertical.  Output is byte-deterministic for equal inputs.
std::string render_svg(const HInterval& interval);
std::string render_svg(const StrongPartition& partition);
std::string render_svg(const WeakPartition& partition);
std::string render_svg(const RegularPartition& partition);
std::string render_svg(const DiscontinuityLines& lines, const HInterval& frame);

}  // namespace hyperbolica
