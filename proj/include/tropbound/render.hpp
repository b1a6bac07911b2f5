#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tropbound/tropical.hpp"

namespace tropbound {

/// SVG drawing of one tropical curve: bounded edges as segments, legs as
/// rays of fixed length, point constraints as red crosses. Edges of weight
/// w > 1 get a stroke proportional to w. Coordinates are converted from
/// the exact rationals here and nowhere upstream.
std::string svg_document(const TropicalSolution &solution);

/// Writes svg_document to `out`; throws std::runtime_error if unwritable.
void render_svg(const TropicalSolution &solution,
                const std::filesystem::path &out);

/// One file per solution, `<stem>_<index>.svg` under `dir`. Returns the
/// paths written (none for an empty list).
std::vector<std::filesystem::path>
render_all(const std::vector<TropicalSolution> &solutions,
           const std::filesystem::path &dir, const std::string &stem = "curve");

} // namespace tropbound
