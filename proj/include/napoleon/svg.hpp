#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "napoleon/records.hpp"
#include "napoleon/types.hpp"

namespace napoleon {

// Which constructions to overlay on each input triangle.
struct PlotSelection {
    bool torricelli_inner = false;
    bool torricelli_outer = false;
    bool napoleon_inner = false;
    bool napoleon_outer = false;
    bool double_outer = false;
    bool fermat = false;

    // Comma-separated tokens: torricelli+, torricelli-, napoleon+,
    // napoleon-, double, fermat, all. Throws std::invalid_argument on an
    // unknown token.
    static PlotSelection parse(const std::string& tokens);
    bool any() const;
};

// Renders the records and the selected constructions as a single SVG 1.1
// document: one polygon per triangle, centroid dot and vertex labels per
// record, Fermat point as a circled marker (plus its three cevian lines
// when the point is interior). Inputs with d > 2 are drawn in their own
// plane frame coordinates. The y axis is flipped so counter-clockwise
// triples render counter-clockwise on screen; the viewBox fits everything
// drawn with a 5% margin. Trivial records are skipped with a warning line
// on `warnings`; returns the number of records drawn.
std::size_t render_svg(std::ostream& out,
                       const std::vector<TripleRecord>& records,
                       const PlotSelection& selection, std::ostream& warnings);

std::size_t render_svg(const std::string& path,
                       const std::vector<TripleRecord>& records,
                       const PlotSelection& selection, std::ostream& warnings);

}  // namespace napoleon
