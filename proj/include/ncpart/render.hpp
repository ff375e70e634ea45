#pragma once

#include <string>

#include "ncpart/bijection.hpp"
#include "ncpart/partition.hpp"

namespace ncpart {

enum class ArcStyle { Semicircle };

struct RenderSpec {
    double spacing = 40.0;  // px between neighbouring points, > 0
    double margin = 20.0;
    bool labels = true;
    ArcStyle style = ArcStyle::Semicircle;
};

/// Arc rows above a numbered baseline. An arc sits one row above every arc it
/// contains and, at a shared endpoint, one row above a shorter neighbour.
/// LF line endings, no trailing spaces.
std::string render_ascii(const ArcDiagram& d);

/// Number of arc rows render_ascii draws for d.
int ascii_row_count(const ArcDiagram& d);

/// Standalone SVG 1.1 document: baseline, one semicircular path per arc, one
/// circle (and optional label) per point. Byte-identical for equal inputs.
/// Throws std::invalid_argument if spacing <= 0.
std::string render_svg(const ArcDiagram& d, const RenderSpec& spec = {});

/// One panel per distinct diagram of the trace, stacked top to bottom with a
/// caption naming the diagrams and the step that produced them.
std::string render_trace(const ConstructionTrace& t, const RenderSpec& spec = {});

}  // namespace ncpart
