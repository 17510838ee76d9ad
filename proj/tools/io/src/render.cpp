#include "tlimm/io/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace tlimm::io {

namespace {

class Canvas {
 public:
  Canvas(int width, int height) : rows_(static_cast<std::size_t>(height), std::string(static_cast<std::size_t>(width), ' ')) {}

  void put(int x, int y, char ch) { rows_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = ch; }
  void text(int x, int y, const std::string& s) {
    for (std::size_t k = 0; k < s.size(); ++k) put(x + static_cast<int>(k), y, s[k]);
  }
  void hline(int y, int x0, int x1) {
    for (int x = std::min(x0, x1) + 1; x < std::max(x0, x1); ++x) fill(x, y, '-');
  }
  void vline(int x, int y0, int y1) {
    for (int y = std::min(y0, y1) + 1; y < std::max(y0, y1); ++y) fill(x, y, '|');
  }

  std::string str() const {
    std::string out;
    for (auto row : rows_) {
      row.erase(row.find_last_not_of(' ') + 1);
      out += row + '\n';
    }
    return out;
  }

 private:
  void fill(int x, int y, char ch) {
    auto& cell = rows_[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    if (cell == ' ') cell = ch;
  }
  std::vector<std::string> rows_;
};

struct Arc {
  int lo, hi, depth = 1;
};

// Nesting depth: an arc sits one lane outside everything it encloses.
std::vector<Arc> nest(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.hi - x.lo < y.hi - y.lo; });
  for (std::size_t k = 0; k < arcs.size(); ++k)
    for (std::size_t m = 0; m < k; ++m)
      if (arcs[k].lo < arcs[m].lo && arcs[m].hi < arcs[k].hi) arcs[k].depth = std::max(arcs[k].depth, arcs[m].depth + 1);
  return arcs;
}

struct Layout {
  std::vector<Arc> left, right;
  std::vector<std::pair<int, int>> through;  // (unprimed, primed), ordered by unprimed label
};

Layout layout(const NonCrossingMatching& m) {
  Layout out;
  std::vector<Arc> left, right;
  for (const auto& [x, y] : m.pairs()) {
    if (!x.primed && !y.primed) left.push_back({std::min(x.label, y.label), std::max(x.label, y.label)});
    else if (x.primed && y.primed) right.push_back({std::min(x.label, y.label), std::max(x.label, y.label)});
    else out.through.emplace_back(x.primed ? y.label : x.label, x.primed ? x.label : y.label);
  }
  std::sort(out.through.begin(), out.through.end());
  out.left = nest(std::move(left));
  out.right = nest(std::move(right));
  return out;
}

int max_depth(const std::vector<Arc>& arcs) {
  int d = 0;
  for (const auto& a : arcs) d = std::max(d, a.depth);
  return d;
}

}  // namespace

std::string render_ascii(const NonCrossingMatching& m) {
  const int n = m.size();
  const auto lay = layout(m);
  const int label_width = static_cast<int>(std::to_string(n).size());
  const int left_depth = max_depth(lay.left);
  const int right_depth = max_depth(lay.right);
  const int strands = static_cast<int>(lay.through.size());

  const int x_left = label_width + 1;
  const int mid_start = x_left + 2 * left_depth + 2;
  const int x_right = mid_start + 2 * std::max(strands, 1) + 2 * right_depth;
  Canvas canvas(x_right + label_width + 3, 2 * n - 1);
  auto row = [](int label) { return 2 * (label - 1); };

  // Downward strands take columns right to left, upward strands left to
  // right; with that order no horizontal run meets another strand's vertical.
  std::vector<int> order;
  for (int k = strands - 1; k >= 0; --k)
    if (lay.through[static_cast<std::size_t>(k)].second > lay.through[static_cast<std::size_t>(k)].first) order.push_back(k);
  for (int k = 0; k < strands; ++k)
    if (lay.through[static_cast<std::size_t>(k)].second <= lay.through[static_cast<std::size_t>(k)].first) order.push_back(k);
  for (std::size_t slot = 0; slot < order.size(); ++slot) {
    const auto [from, to] = lay.through[static_cast<std::size_t>(order[slot])];
    if (from == to) {
      canvas.hline(row(from), x_left, x_right);
      continue;
    }
    const int x = mid_start + 2 * static_cast<int>(slot);
    canvas.hline(row(from), x_left, x);
    canvas.vline(x, row(from), row(to));
    canvas.hline(row(to), x, x_right);
    canvas.put(x, row(from), '+');
    canvas.put(x, row(to), '+');
  }
  for (const auto& a : lay.left) {
    const int x = x_left + 2 * a.depth;
    canvas.hline(row(a.lo), x_left, x);
    canvas.hline(row(a.hi), x_left, x);
    canvas.vline(x, row(a.lo), row(a.hi));
    canvas.put(x, row(a.lo), '+');
    canvas.put(x, row(a.hi), '+');
  }
  for (const auto& a : lay.right) {
    const int x = x_right - 2 * a.depth;
    canvas.hline(row(a.lo), x, x_right);
    canvas.hline(row(a.hi), x, x_right);
    canvas.vline(x, row(a.lo), row(a.hi));
    canvas.put(x, row(a.lo), '+');
    canvas.put(x, row(a.hi), '+');
  }
  for (int i = 1; i <= n; ++i) {
    auto label = std::to_string(i);
    canvas.text(label_width - static_cast<int>(label.size()), row(i), label);
    canvas.put(x_left, row(i), 'o');
    canvas.put(x_right, row(i), 'o');
    canvas.text(x_right + 2, row(i), label + "'");
  }
  return canvas.str();
}

std::string render_svg(const NonCrossingMatching& m) {
  const int n = m.size();
  const auto lay = layout(m);
  constexpr int kGap = 40, kTop = 30, kLeft = 50, kRight = 210;
  auto y = [&](int label) { return kTop + kGap * (label - 1); };
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"260\" height=\"" << kTop * 2 + kGap * (n - 1)
      << "\" font-family=\"sans-serif\" font-size=\"14\">\n";
  svg << "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& a : lay.left)
    svg << "<path d=\"M " << kLeft << ' ' << y(a.lo) << " C " << kLeft + 25 * a.depth << ' ' << y(a.lo) << ", "
        << kLeft + 25 * a.depth << ' ' << y(a.hi) << ", " << kLeft << ' ' << y(a.hi) << "\"/>\n";
  for (const auto& a : lay.right)
    svg << "<path d=\"M " << kRight << ' ' << y(a.lo) << " C " << kRight - 25 * a.depth << ' ' << y(a.lo) << ", "
        << kRight - 25 * a.depth << ' ' << y(a.hi) << ", " << kRight << ' ' << y(a.hi) << "\"/>\n";
  constexpr int kMid = (kLeft + kRight) / 2;
  for (const auto& [from, to] : lay.through)
    svg << "<path d=\"M " << kLeft << ' ' << y(from) << " C " << kMid << ' ' << y(from) << ", " << kMid << ' '
        << y(to) << ", " << kRight << ' ' << y(to) << "\"/>\n";
  svg << "</g>\n";
  for (int i = 1; i <= n; ++i) {
    svg << "<circle cx=\"" << kLeft << "\" cy=\"" << y(i) << "\" r=\"4\"/>"
        << "<circle cx=\"" << kRight << "\" cy=\"" << y(i) << "\" r=\"4\"/>\n";
    svg << "<text x=\"" << kLeft - 25 << "\" y=\"" << y(i) + 5 << "\">" << i << "</text>"
        << "<text x=\"" << kRight + 12 << "\" y=\"" << y(i) + 5 << "\">" << i << "'</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string render_ascii(const SkewShape& s, const std::optional<Permutation>& points) {
  const int n = s.size();
  std::string out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      char ch = s.contains(i, j) ? '#' : '.';
      if (points && (*points)(i) == j) ch = '*';
      if (j > 1) out += ' ';
      out += ch;
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const SkewShape& s, const std::optional<Permutation>& points) {
  const int n = s.size();
  constexpr int kCell = 24, kMargin = 10;
  const int side = 2 * kMargin + n * kCell;
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side << "\">\n";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      svg << "<rect x=\"" << kMargin + (j - 1) * kCell << "\" y=\"" << kMargin + (i - 1) * kCell << "\" width=\""
          << kCell << "\" height=\"" << kCell << "\" fill=\"" << (s.contains(i, j) ? "#bbbbbb" : "white")
          << "\" stroke=\"black\"/>\n";
  if (points)
    for (int i = 1; i <= n; ++i)
      svg << "<circle cx=\"" << kMargin + ((*points)(i) - 1) * kCell + kCell / 2 << "\" cy=\""
          << kMargin + (i - 1) * kCell + kCell / 2 << "\" r=\"5\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace tlimm::io
