#pragma once

#include <string>

#include "qsdiag/diagram.hpp"

namespace qsd {

/// Layout constants for render_svg, in SVG user units.
struct SvgLayout {
  int margin = 20;
  int header = 44;
  int label_width = 90;
  int segment_width = 50;
  int layer_width = 110;
  int line_pitch = 40;
  int font_size = 11;
  double active_stroke = 4.0;
  double inactive_stroke = 1.0;
  double active_edge_stroke = 1.8;
  double inactive_edge_stroke = 0.6;
};

/// Fixed-width text rendering: one row per basis line, `=` for active and
/// `-` for inactive segments, a connector column per layer (`o` diagonal
/// edges only, `x` crossing edges, `:` no edges), then the labeled edge list.
std::string render_text(const StateDiagram& diagram);

/// Standalone SVG 1.1 document; thick strokes for active lines, thin for
/// inactive ones, edge labels with 3 significant digits.
std::string render_svg(const StateDiagram& diagram, const SvgLayout& layout = {});

/// Amplitude label with 3 significant digits, e.g. "0.707", "-0.5i",
/// "0.5+0.5i".
std::string amplitude_label(cplx a);

}  // namespace qsd
