#pragma once

#include <string>

#include "strgraph/convex_rep.hpp"
#include "strgraph/koebe.hpp"

namespace strgraph {

/// SVG documents with one <g> layer per kind of object. Output depends only on
/// the input; exact coordinates are rounded for display.
std::string svg_packing(const CirclePacking& p);
/// Layers: disks, arcs, points, hulls.
std::string svg_representation(const ConvexRepresentation& rep);
std::string svg_strings(const StringRepresentation& s);

/// Writes text to path; throws std::runtime_error on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace strgraph
