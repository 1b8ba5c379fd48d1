#include "chaintrace/svg.hpp"

#include <cstdio>
#include <set>
#include <sstream>

#include "chaintrace/error.hpp"

namespace chaintrace {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

bool on_seam(const Face& f, int k) {
  if (f.kind == FaceKind::Vertical) return f.origin.i == 0 || f.origin.i == k;
  if (f.kind == FaceKind::Horizontal) return f.origin.j == 0 || f.origin.j == k;
  return false;
}

// The face and, on the torus, its copy on the opposite seam.
std::vector<Face> seam_images(const Face& f, int k, Surface surface) {
  std::vector<Face> out{f};
  if (surface != Surface::Torus) return out;
  if (f.kind == FaceKind::Vertical && f.origin.i == 0) out.push_back(f.translated(k, 0));
  if (f.kind == FaceKind::Vertical && f.origin.i == k) out.push_back(f.translated(-k, 0));
  if (f.kind == FaceKind::Horizontal && f.origin.j == 0) out.push_back(f.translated(0, k));
  if (f.kind == FaceKind::Horizontal && f.origin.j == k) out.push_back(f.translated(0, -k));
  return out;
}

}  // namespace

std::string render_svg(const RenderInput& input, const RenderOptions& opts) {
  if (opts.cell < 2 || opts.margin < 0) throw Error(Errc::BadInput, "cell size must be at least 2 pixels");
  int k = 0;
  if (input.coloring) k = input.coloring->k();
  for (const Chain& chain : input.chains) {
    if (k != 0 && chain.k != k) throw Error(Errc::BadInput, "inputs have different resolutions");
    k = chain.k;
  }
  if (k < 2) throw Error(Errc::BadInput, "nothing to render");
  const CombinatorialSquare sq(k);
  for (const Chain& chain : input.chains) {
    for (const Simplex& s : chain.simplexes)
      if (!sq.contains(s)) throw Error(Errc::BadInput, "chain simplex outside the grid");
    for (const Face& f : chain.gates)
      if (!sq.contains(f)) throw Error(Errc::BadInput, "chain gate outside the grid");
  }

  auto X = [&](int i) { return static_cast<double>(opts.margin + i * opts.cell); };
  auto Y = [&](int j) { return static_cast<double>(opts.margin + (k - j) * opts.cell); };
  const int extent = 2 * opts.margin + k * opts.cell;

  std::set<Face> gates;
  std::set<Face> walls;
  std::set<Face> seams;
  if (input.coloring) {
    for (const Face& f : sq.faces())
      if (input.coloring->is_gate(f)) gates.insert(f);
  }
  for (const Chain& chain : input.chains) {
    std::set<Face> chain_gates;
    for (const Face& g : chain.gates) {
      for (const Face& f : seam_images(g, k, chain.surface)) chain_gates.insert(f);
      if (chain.surface == Surface::Torus && on_seam(g, k)) seams.insert(g);
    }
    gates.insert(chain_gates.begin(), chain_gates.end());
    for (const Simplex& s : chain.simplexes) {
      for (const Face& f : s.faces()) {
        const bool gate = input.coloring ? input.coloring->is_gate(f) : chain_gates.contains(f);
        if (!gate) walls.insert(f);
      }
    }
  }

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << extent << "\" height=\"" << extent
      << "\" viewBox=\"0 0 " << extent << ' ' << extent << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << extent << "\" height=\"" << extent << "\" fill=\"white\"/>\n";

  auto line = [&](const Face& f, const char* cls, const std::string& stroke, double width) {
    out << "<line class=\"" << cls << "\" x1=\"" << num(X(f.first().i)) << "\" y1=\"" << num(Y(f.first().j))
        << "\" x2=\"" << num(X(f.second().i)) << "\" y2=\"" << num(Y(f.second().j)) << "\" stroke=\"" << stroke
        << "\" stroke-width=\"" << num(width) << "\"/>\n";
  };

  out << "<g id=\"grid\">\n";
  for (const Face& f : sq.faces()) line(f, "grid", "#dddddd", 0.5);
  out << "</g>\n";

  out << "<g id=\"chains\">\n";
  for (std::size_t c = 0; c < input.chains.size(); ++c) {
    const Chain& chain = input.chains[c];
    out << "<g class=\"chain\" data-index=\"" << c << "\" data-surface=\""
        << (chain.surface == Surface::Square ? "square" : "torus") << "\">\n";
    for (const Simplex& s : chain.simplexes) {
      const auto v = s.vertices();
      out << "<polygon class=\"simplex\" points=\"";
      for (std::size_t n = 0; n < 3; ++n) out << (n ? " " : "") << num(X(v[n].i)) << ',' << num(Y(v[n].j));
      out << "\" fill=\"" << opts.shade << "\" fill-opacity=\"0.7\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</g>\n";

  out << "<g id=\"faces\">\n";
  for (const Face& f : walls) line(f, "wall", "#222222", 3.0);
  for (const Face& f : gates) line(f, "gate", "#222222", 1.0);
  out << "</g>\n";

  if (!seams.empty()) {
    out << "<g id=\"seams\">\n";
    for (const Face& f : seams) {
      const double cx = (X(f.first().i) + X(f.second().i)) / 2.0;
      const double cy = (Y(f.first().j) + Y(f.second().j)) / 2.0;
      out << "<circle class=\"seam\" cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\""
          << num(opts.cell / 6.0) << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\"/>\n";
    }
    out << "</g>\n";
  }

  out << "<g id=\"vertices\">\n";
  const double radius = opts.cell / 8.0;
  for (const GridPoint& p : sq.vertices()) {
    std::string cls = "vertex";
    std::string fill = opts.neutral;
    if (input.coloring) {
      const bool neg = input.coloring->at(p) < 0;
      cls += neg ? " neg" : " pos";
      fill = neg ? opts.negative : opts.positive;
    }
    out << "<circle class=\"" << cls << "\" cx=\"" << num(X(p.i)) << "\" cy=\"" << num(Y(p.j)) << "\" r=\""
        << num(radius) << "\" fill=\"" << fill << "\"/>\n";
  }
  out << "</g>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace chaintrace
