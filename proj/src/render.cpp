#include "envymin/render.hpp"

#include <algorithm>
#include <sstream>

namespace envymin {

namespace {

int column(const Rational& v, const Rational& lo, const Rational& span, int width) {
  if (span == 0) return 0;
  Rational t = (v - lo) * (width - 1) / span;
  return static_cast<int>(numerator(t) / denominator(t));  // t >= 0, truncation is floor
}

std::string padded(const std::string& s, std::size_t w) {
  std::string out = s;
  out.resize(std::max(w, out.size()), ' ');
  return out;
}

}  // namespace

std::string render_allocation(const Graph& g, const ValueProfile& p, const Allocation& alloc,
                              int width) {
  require_allocation(alloc, g.n);
  if (width < 2) throw input_error("render width must be at least 2");
  const Rational lo = p.values.front();
  const Rational span = p.values.back() - lo;

  std::vector<std::string> labels;
  for (int v = 0; v < g.n; ++v)
    labels.push_back("vertex " + std::to_string(v + 1) + " <- house " +
                     std::to_string(p.input_index[alloc[v]] + 1));
  for (auto [u, v] : g.edges)
    labels.push_back("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
  std::size_t label_width = 0;
  for (const std::string& s : labels) label_width = std::max(label_width, s.size());
  label_width += 2;

  std::ostringstream out;
  out << "values " << format_rational(lo) << " .. " << format_rational(p.values.back()) << " ("
      << g.n << " houses)\n";
  std::size_t row = 0;
  for (int v = 0; v < g.n; ++v, ++row) {
    std::string bar(width, ' ');
    bar[column(p.values[alloc[v]], lo, span, width)] = '#';
    out << padded(labels[row], label_width) << bar << "  " << format_rational(p.values[alloc[v]])
        << "\n";
  }
  for (auto [u, v] : g.edges) {
    int a = column(p.values[alloc[u]], lo, span, width);
    int b = column(p.values[alloc[v]], lo, span, width);
    if (a > b) std::swap(a, b);
    std::string bar(width, ' ');
    bar[a] = '|';
    bar[b] = '|';
    for (int c = a + 1; c < b; ++c) bar[c] = '=';
    out << padded(labels[row++], label_width) << bar << "  envy "
        << format_rational(edge_envy(p, alloc, u, v)) << "\n";
  }
  out << "total " << format_rational(total_envy(g, p, alloc)) << "\n";
  return out.str();
}

}  // namespace envymin
