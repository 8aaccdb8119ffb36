#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "slepnet/dataio.hpp"
#include "slepnet/error.hpp"

namespace slepnet {

const std::vector<std::string>& category_palette() {
  static const std::vector<std::string> kPalette = {
      "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a",
  };
  return kPalette;
}

namespace {

constexpr const char* kDefaultColor = "#4c72b0";

std::string fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  // Avoid "-0.00".
  std::string s(buf);
  if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
  return s;
}

std::string tick_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape_xml(std::string_view s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

// Data extent with 5% margins; a zero-width extent is widened by +-1.
Range fit_range(const Eigen::VectorXd& v) {
  double lo = v.size() ? v.minCoeff() : 0.0;
  double hi = v.size() ? v.maxCoeff() : 0.0;
  if (!(hi > lo)) {
    lo -= 1.0;
    hi += 1.0;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

struct Frame {
  double left, top, width, height;
  Range x, y;

  double px(double v) const { return left + (v - x.lo) / (x.hi - x.lo) * width; }
  double py(double v) const { return top + height - (v - y.lo) / (y.hi - y.lo) * height; }
};

void open_svg(std::string& out, int width, int height) {
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
         "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
         " " + std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(width) + "\" height=\"" +
         std::to_string(height) + "\" fill=\"#ffffff\"/>\n";
}

void draw_axes(std::string& out, const Frame& f, const std::string& xlabel,
               const std::string& ylabel, const std::string& title) {
  out += "<rect x=\"" + fixed(f.left) + "\" y=\"" + fixed(f.top) + "\" width=\"" +
         fixed(f.width) + "\" height=\"" + fixed(f.height) +
         "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  constexpr int kTicks = 5;
  for (int t = 0; t < kTicks; ++t) {
    const double xv = f.x.lo + (f.x.hi - f.x.lo) * t / (kTicks - 1);
    const double yv = f.y.lo + (f.y.hi - f.y.lo) * t / (kTicks - 1);
    const double xp = f.px(xv);
    const double yp = f.py(yv);
    const double bottom = f.top + f.height;
    out += "<line x1=\"" + fixed(xp) + "\" y1=\"" + fixed(bottom) + "\" x2=\"" + fixed(xp) +
           "\" y2=\"" + fixed(bottom + 5) + "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + fixed(xp) + "\" y=\"" + fixed(bottom + 18) +
           "\" text-anchor=\"middle\">" + tick_label(xv) + "</text>\n";
    out += "<line x1=\"" + fixed(f.left - 5) + "\" y1=\"" + fixed(yp) + "\" x2=\"" +
           fixed(f.left) + "\" y2=\"" + fixed(yp) + "\" stroke=\"#333333\"/>\n";
    out += "<text x=\"" + fixed(f.left - 8) + "\" y=\"" + fixed(yp + 4) +
           "\" text-anchor=\"end\">" + tick_label(yv) + "</text>\n";
  }
  out += "<text x=\"" + fixed(f.left + f.width / 2) + "\" y=\"" + fixed(f.top + f.height + 40) +
         "\" text-anchor=\"middle\">" + escape_xml(xlabel) + "</text>\n";
  const double ymid = f.top + f.height / 2;
  out += "<text x=\"" + fixed(f.left - 48) + "\" y=\"" + fixed(ymid) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 " + fixed(f.left - 48) + " " +
         fixed(ymid) + ")\">" + escape_xml(ylabel) + "</text>\n";
  if (!title.empty()) {
    out += "<text x=\"" + fixed(f.left + f.width / 2) + "\" y=\"" + fixed(f.top - 14) +
           "\" text-anchor=\"middle\" font-size=\"14\">" + escape_xml(title) + "</text>\n";
  }
}

}  // namespace

std::string format_scatter_svg(const EmbeddingCoords& coords, const CoordsContext& ctx,
                               const ScatterOptions& options) {
  if (coords.dims() != 2) {
    throw Error(ErrorKind::NotTwoDimensional,
                "scatter plot needs 2-D coordinates, got " + std::to_string(coords.dims()));
  }
  if (ctx.ids == nullptr || ctx.ids->size() != coords.num_nodes()) {
    throw Error(ErrorKind::DimensionMismatch, "coordinate rows and node ids disagree");
  }
  const Index n = coords.num_nodes();

  // Category of each node is its first tag; colors follow sorted names.
  std::vector<std::string> category(n);
  std::set<std::string> names;
  if (ctx.meta != nullptr && !ctx.meta->empty()) {
    for (Index i = 0; i < n; ++i) {
      const NodeRecord* rec = ctx.meta->find((*ctx.ids)[i]);
      if (rec != nullptr && !rec->tags.empty()) {
        category[i] = rec->tags.front();
        names.insert(category[i]);
      }
    }
  }
  std::map<std::string, std::string> color;
  {
    const auto& palette = category_palette();
    std::size_t k = 0;
    for (const auto& name : names) color[name] = palette[k++ % palette.size()];
  }

  const double legend_width = names.empty() && ctx.selection == nullptr ? 20.0 : 150.0;
  Frame f{70.0, 40.0, options.width - 70.0 - 20.0 - legend_width, options.height - 40.0 - 60.0,
          fit_range(coords.coords.col(0)), fit_range(coords.coords.col(1))};

  std::string out;
  open_svg(out, options.width, options.height);
  const auto label = [&](std::size_t k) {
    return k < coords.axis_labels.size() ? coords.axis_labels[k] : std::string();
  };
  draw_axes(out, f, label(0), label(1), options.title);

  const auto draw = [&](Index i) {
    const auto r = static_cast<Eigen::Index>(i);
    const std::string fill = category[i].empty() ? kDefaultColor : color[category[i]];
    out += "<circle cx=\"" + fixed(f.px(coords.coords(r, 0))) + "\" cy=\"" +
           fixed(f.py(coords.coords(r, 1))) + "\" r=\"" + fixed(options.radius) + "\" fill=\"" +
           fill + "\"";
    if (ctx.selection && ctx.selection->contains(i)) {
      out += " stroke=\"#000000\" stroke-width=\"1.5\"";
    }
    out += "><title>" + escape_xml((*ctx.ids)[i]) + "</title></circle>\n";
  };
  // Selected nodes are drawn last so their rings stay visible.
  for (Index i = 0; i < n; ++i) {
    if (!(ctx.selection && ctx.selection->contains(i))) draw(i);
  }
  if (ctx.selection) {
    for (Index i = 0; i < n; ++i) {
      if (ctx.selection->contains(i)) draw(i);
    }
  }

  double ly = f.top + 10;
  const double lx = f.left + f.width + 20;
  for (const auto& name : names) {
    out += "<g class=\"legend\"><rect x=\"" + fixed(lx) + "\" y=\"" + fixed(ly - 9) +
           "\" width=\"10\" height=\"10\" fill=\"" + color[name] + "\"/><text x=\"" +
           fixed(lx + 16) + "\" y=\"" + fixed(ly) + "\">" + escape_xml(name) + "</text></g>\n";
    ly += 18;
  }
  if (ctx.selection) {
    out += "<g class=\"legend-selection\"><circle cx=\"" + fixed(lx + 5) + "\" cy=\"" +
           fixed(ly - 4) + "\" r=\"" + fixed(options.radius) +
           "\" fill=\"#ffffff\" stroke=\"#000000\" stroke-width=\"1.5\"/><text x=\"" +
           fixed(lx + 16) + "\" y=\"" + fixed(ly) + "\">selected</text></g>\n";
  }
  out += "</svg>\n";
  return out;
}

void render_scatter_svg(const EmbeddingCoords& coords, const CoordsContext& ctx,
                        const std::filesystem::path& path, const ScatterOptions& options) {
  write_text_file(path, format_scatter_svg(coords, ctx, options));
}

std::string format_sweep_svg(const std::vector<SweepRow>& rows, const std::string& title) {
  if (rows.empty()) throw Error(ErrorKind::InvalidArgument, "empty sweep");
  const auto m = static_cast<Eigen::Index>(rows.size());
  Eigen::VectorXd xs(m);
  Eigen::VectorXd all(3 * m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    xs[i] = static_cast<double>(r.bandwidth);
    all[3 * i] = r.shannon;
    all[3 * i + 1] = r.sum_mu_concentration;
    all[3 * i + 2] = r.sum_mu_embedded;
  }
  constexpr int kWidth = 720;
  constexpr int kHeight = 480;
  Frame f{70.0, 40.0, kWidth - 70.0 - 20.0 - 200.0, kHeight - 40.0 - 60.0, fit_range(xs),
          fit_range(all)};

  std::string out;
  open_svg(out, kWidth, kHeight);
  draw_axes(out, f, "bandwidth N_W", "value", title);

  struct Series {
    const char* name;
    const char* color;
    const char* dash;
    double SweepRow::*field;
  };
  const Series series[] = {
      {"K = N_W N_S / N", "#333333", "4 3", &SweepRow::shannon},
      {"sum mu (concentration)", "#1f77b4", "", &SweepRow::sum_mu_concentration},
      {"sum mu (embedded)", "#d62728", "", &SweepRow::sum_mu_embedded},
  };
  double ly = f.top + 10;
  const double lx = f.left + f.width + 20;
  for (const auto& s : series) {
    std::string points;
    for (const auto& r : rows) {
      if (!points.empty()) points += ' ';
      points += fixed(f.px(static_cast<double>(r.bandwidth))) + "," + fixed(f.py(r.*s.field));
    }
    out += "<polyline fill=\"none\" stroke=\"" + std::string(s.color) +
           "\" stroke-width=\"1.5\"" +
           (*s.dash ? " stroke-dasharray=\"" + std::string(s.dash) + "\"" : std::string()) +
           " points=\"" + points + "\"/>\n";
    out += "<g class=\"legend\"><line x1=\"" + fixed(lx) + "\" y1=\"" + fixed(ly - 4) +
           "\" x2=\"" + fixed(lx + 20) + "\" y2=\"" + fixed(ly - 4) + "\" stroke=\"" + s.color +
           "\" stroke-width=\"1.5\"" +
           (*s.dash ? " stroke-dasharray=\"" + std::string(s.dash) + "\"" : std::string()) +
           "/><text x=\"" + fixed(lx + 26) + "\" y=\"" + fixed(ly) + "\">" + escape_xml(s.name) +
           "</text></g>\n";
    ly += 18;
  }
  out += "</svg>\n";
  return out;
}

}  // namespace slepnet
