#include "qsdiag/render.hpp"

#include <cstdio>
#include <map>

namespace qsd {

namespace {

std::string fmt3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x + 0.0);
  return buf;
}

std::string fmt_num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x + 0.0);
  return buf;
}

std::string ket(std::size_t line, int n_qubits) {
  std::string s = "|";
  for (int q = n_qubits - 1; q >= 0; --q) s += ((line >> q) & 1U) ? '1' : '0';
  return s + ">";
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string pad_right(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string pad_left(std::string s, std::size_t w) {
  if (s.size() < w) s.insert(0, w - s.size(), ' ');
  return s;
}

// Lines that coincide once the traced qubits are summed over.
std::vector<std::vector<std::size_t>> traced_groups(const StateDiagram& d) {
  std::size_t mask = 0;
  for (int q : d.traced) mask |= std::size_t{1} << q;
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < d.n_lines; ++i) groups[i & ~mask].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [key, lines] : groups) out.push_back(std::move(lines));
  return out;
}

std::string join_lines(const std::vector<std::size_t>& lines) {
  std::string s = "{";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(lines[i]);
  }
  return s + "}";
}

std::string traced_note(const StateDiagram& d) {
  std::string s = "trace over qubit(s)";
  for (int q : d.traced) s += " " + std::to_string(q);
  s += ": merged lines";
  for (const auto& g : traced_groups(d)) s += " " + join_lines(g);
  return s;
}

}  // namespace

std::string amplitude_label(cplx a) {
  constexpr double tiny = 5e-13;
  const double re = std::abs(a.real()) < tiny ? 0.0 : a.real();
  const double im = std::abs(a.imag()) < tiny ? 0.0 : a.imag();
  if (im == 0.0) return fmt3(re);
  if (re == 0.0) return fmt3(im) + "i";
  return fmt3(re) + (im < 0 ? "" : "+") + fmt3(im) + "i";
}

std::string render_text(const StateDiagram& d) {
  const std::size_t n_layers = d.layers.size();
  std::string out = "state diagram (" + std::string(mode_name(d.mode)) + "): " +
                    std::to_string(d.n_qubits) + " qubit(s), " + std::to_string(d.n_lines) +
                    " lines, " + std::to_string(n_layers) + " layer(s)\n";
  for (std::size_t k = 0; k < n_layers; ++k)
    out += "L" + std::to_string(k + 1) + ": " + d.layers[k].label + "\n";
  out += "\n";

  const std::size_t label_w = static_cast<std::size_t>(d.n_qubits) + 2 + 1 +
                              std::to_string(d.n_lines - 1).size() + 2;
  std::string header = pad_right("line", label_w) + "in  ";
  for (std::size_t k = 0; k < n_layers; ++k) header += pad_right("L" + std::to_string(k + 1), 5);
  while (!header.empty() && header.back() == ' ') header.pop_back();
  out += header + "\n";

  for (std::size_t i = 0; i < d.n_lines; ++i) {
    std::string row = pad_right(ket(i, d.n_qubits) + " " + std::to_string(i), label_w);
    for (std::size_t t = 0; t <= n_layers; ++t) {
      row += d.active[t][i] ? "====" : "----";
      if (t == n_layers) break;
      bool diag = false, cross = false;
      for (const auto& e : d.layers[t].edges) {
        if (e.from == i && e.to == i) diag = true;
        else if (e.from == i || e.to == i) cross = true;
      }
      row += cross ? 'x' : diag ? 'o' : ':';
    }
    out += row + "\n";
  }

  out += "\nactive:";
  for (std::size_t t = 0; t <= n_layers; ++t)
    out += std::string(t ? " -> " : " ") + join_lines(d.active_lines(t));
  out += "\n";
  if (!d.traced.empty()) out += traced_note(d) + "\n";

  out += "\nedges:\n";
  for (std::size_t k = 0; k < n_layers; ++k) {
    std::size_t idx = 0;
    for (const auto& e : d.layers[k].edges) {
      const std::string tag = "L" + std::to_string(k + 1) + "." + std::to_string(++idx);
      out += "  " + pad_right(tag, 8) + pad_left(std::to_string(e.from), 4) + " -> " +
             pad_right(std::to_string(e.to), 4) + " " + amplitude_label(e.amplitude) +
             (e.from == e.to ? "" : "  (crossing)") + "\n";
    }
  }
  return out;
}

std::string render_svg(const StateDiagram& d, const SvgLayout& L) {
  const std::size_t n_layers = d.layers.size();
  auto seg_x = [&](std::size_t t) {
    return L.margin + L.label_width + static_cast<int>(t) * (L.segment_width + L.layer_width);
  };
  auto line_y = [&](std::size_t i) {
    return L.header + static_cast<int>(i) * L.line_pitch + L.line_pitch / 2;
  };
  const int footer = d.traced.empty() ? 0 : 2 * L.font_size;
  const int width = seg_x(n_layers) + L.segment_width + L.margin;
  const int height = L.header + static_cast<int>(d.n_lines) * L.line_pitch + footer + L.margin;

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
       std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
       std::to_string(width) + " " + std::to_string(height) + "\">\n";
  s += "  <title>state diagram (" + std::string(mode_name(d.mode)) + "), " +
       std::to_string(d.n_qubits) + " qubit(s)</title>\n";
  s += "  <rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
       std::to_string(height) + "\" fill=\"white\"/>\n";

  const std::string font = "font-family=\"monospace\" font-size=\"" +
                           std::to_string(L.font_size) + "\"";
  s += "  <g id=\"labels\" " + font + " text-anchor=\"end\">\n";
  for (std::size_t i = 0; i < d.n_lines; ++i)
    s += "    <text x=\"" + std::to_string(L.margin + L.label_width - 8) + "\" y=\"" +
         std::to_string(line_y(i) + L.font_size / 3) + "\">" +
         xml_escape(ket(i, d.n_qubits)) + "</text>\n";
  s += "  </g>\n";

  s += "  <g id=\"lines\" stroke-linecap=\"butt\">\n";
  for (std::size_t t = 0; t <= n_layers; ++t) {
    // Segments join the layer gaps so active lines read as continuous.
    const int x1 = t == 0 ? seg_x(0) : seg_x(t) - L.layer_width / 2;
    const int x2 = t == n_layers ? seg_x(t) + L.segment_width
                                 : seg_x(t) + L.segment_width + L.layer_width / 2;
    for (std::size_t i = 0; i < d.n_lines; ++i) {
      const bool on = d.active[t][i];
      const std::string y = std::to_string(line_y(i));
      s += "    <line x1=\"" + std::to_string(x1) + "\" y1=\"" + y + "\" x2=\"" +
           std::to_string(x2) + "\" y2=\"" + y + "\" stroke=\"" + (on ? "black" : "#9a9a9a") +
           "\" stroke-width=\"" + fmt_num(on ? L.active_stroke : L.inactive_stroke) + "\"/>\n";
    }
  }
  s += "  </g>\n";

  for (std::size_t k = 0; k < n_layers; ++k) {
    const int xa = seg_x(k) + L.segment_width;
    const int xb = seg_x(k + 1);
    const int xm = (xa + xb) / 2;
    s += "  <g id=\"layer-" + std::to_string(k + 1) + "\" " + font + ">\n";
    s += "    <text x=\"" + std::to_string(xm) + "\" y=\"" + std::to_string(L.header / 2) +
         "\" text-anchor=\"middle\">" + xml_escape("L" + std::to_string(k + 1)) + "</text>\n";
    s += "    <rect x=\"" + std::to_string(xa) + "\" y=\"" + std::to_string(L.header - 4) +
         "\" width=\"" + std::to_string(xb - xa) + "\" height=\"" +
         std::to_string(static_cast<int>(d.n_lines) * L.line_pitch + 8) +
         "\" fill=\"#f2f2f2\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
    for (const auto& e : d.layers[k].edges) {
      const bool on = d.active[k][e.from];
      const int y1 = line_y(e.from);
      const int y2 = line_y(e.to);
      s += "    <line x1=\"" + std::to_string(xa) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
           std::to_string(xb) + "\" y2=\"" + std::to_string(y2) + "\" stroke=\"" +
           (on ? "black" : "#9a9a9a") + "\" stroke-width=\"" +
           fmt_num(on ? L.active_edge_stroke : L.inactive_edge_stroke) + "\"/>\n";
      // Labels sit near the source end so fans of crossing edges stay legible.
      const double lx = xa + 0.3 * (xb - xa);
      const double ly = y1 + 0.3 * (y2 - y1) - 3.0;
      s += "    <text x=\"" + fmt_num(lx) + "\" y=\"" + fmt_num(ly) +
           "\" text-anchor=\"middle\" fill=\"" + (on ? "#b00000" : "#9a9a9a") + "\">" +
           xml_escape(amplitude_label(e.amplitude)) + "</text>\n";
    }
    s += "  </g>\n";
  }

  if (!d.traced.empty())
    s += "  <text x=\"" + std::to_string(L.margin) + "\" y=\"" +
         std::to_string(height - L.margin) + "\" " + font + ">" + xml_escape(traced_note(d)) +
         "</text>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace qsd
