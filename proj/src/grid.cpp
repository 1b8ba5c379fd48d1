#include "chaintrace/grid.hpp"

#include <algorithm>
#include <string>

#include "chaintrace/error.hpp"

namespace chaintrace {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::KTooSmall: return "KTooSmall";
    case Errc::FaceOutOfRange: return "FaceOutOfRange";
    case Errc::DegenerateRectangle: return "DegenerateRectangle";
    case Errc::NotACorner: return "NotACorner";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::BadValue: return "BadValue";
    case Errc::EvaluationFailure: return "EvaluationFailure";
    case Errc::NotAGate: return "NotAGate";
    case Errc::NotOnBoundary: return "NotOnBoundary";
    case Errc::MissingChain: return "MissingChain";
    case Errc::SameColor: return "SameColor";
    case Errc::NotPeriodic: return "NotPeriodic";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::BadEpsilon: return "BadEpsilon";
    case Errc::EmptySet: return "EmptySet";
    case Errc::UnknownCandidate: return "UnknownCandidate";
    case Errc::BadParams: return "BadParams";
    case Errc::NotBoundaryValued: return "NotBoundaryValued";
    case Errc::BoundaryNotIdentity: return "BoundaryNotIdentity";
    case Errc::BadInput: return "BadInput";
  }
  return "Unknown";
}

namespace {

std::string show(GridPoint p) {
  return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

}  // namespace

Face Face::between(GridPoint a, GridPoint b) {
  if (b < a) std::swap(a, b);
  const int di = b.i - a.i;
  const int dj = b.j - a.j;
  if (di == 1 && dj == 0) return {a, FaceKind::Horizontal};
  if (di == 0 && dj == 1) return {a, FaceKind::Vertical};
  if (di == 1 && dj == 1) return {a, FaceKind::Diagonal};
  throw Error(Errc::BadInput, show(a) + " and " + show(b) + " are not joined by a face");
}

GridPoint Face::second() const {
  switch (kind) {
    case FaceKind::Horizontal: return {origin.i + 1, origin.j};
    case FaceKind::Vertical: return {origin.i, origin.j + 1};
    case FaceKind::Diagonal: return {origin.i + 1, origin.j + 1};
  }
  return origin;
}

std::array<GridPoint, 3> Simplex::vertices() const {
  const GridPoint z0 = base;
  const GridPoint z1 = orientation == 0 ? GridPoint{z0.i + 1, z0.j} : GridPoint{z0.i, z0.j + 1};
  const GridPoint z2{z0.i + 1, z0.j + 1};
  return {z0, z1, z2};
}

std::array<Face, 3> Simplex::faces() const {
  const auto v = vertices();
  return {Face::between(v[0], v[1]), Face::between(v[1], v[2]), Face::between(v[2], v[0])};
}

bool Simplex::has_face(const Face& f) const {
  const auto fs = faces();
  return std::find(fs.begin(), fs.end(), f) != fs.end();
}

std::array<Simplex, 2> lattice_cofaces(const Face& f) {
  const GridPoint o = f.origin;
  switch (f.kind) {
    case FaceKind::Horizontal:
      return {Simplex{{o.i, o.j - 1}, 1}, Simplex{o, 0}};
    case FaceKind::Vertical:
      return {Simplex{{o.i - 1, o.j}, 0}, Simplex{o, 1}};
    case FaceKind::Diagonal:
      return {Simplex{o, 0}, Simplex{o, 1}};
  }
  return {};
}

Rectangle Rectangle::spanning(GridPoint a, GridPoint b) {
  if (a == b) throw Error(Errc::NotACorner, "rectangle corners must differ");
  if (a.i == b.i || a.j == b.j) {
    throw Error(Errc::DegenerateRectangle, show(a) + " and " + show(b) + " share a coordinate");
  }
  return {{std::min(a.i, b.i), std::min(a.j, b.j)}, {std::max(a.i, b.i), std::max(a.j, b.j)}};
}

bool Rectangle::on_boundary(const Face& f) const {
  if (!contains(f)) return false;
  switch (f.kind) {
    case FaceKind::Horizontal: return f.origin.j == lo.j || f.origin.j == hi.j;
    case FaceKind::Vertical: return f.origin.i == lo.i || f.origin.i == hi.i;
    case FaceKind::Diagonal: return false;
  }
  return false;
}

std::vector<GridPoint> Rectangle::boundary_cycle() const {
  std::vector<GridPoint> out;
  out.reserve(2 * (width() + height()));
  for (int i = lo.i; i < hi.i; ++i) out.push_back({i, lo.j});
  for (int j = lo.j; j < hi.j; ++j) out.push_back({hi.i, j});
  for (int i = hi.i; i > lo.i; --i) out.push_back({i, hi.j});
  for (int j = hi.j; j > lo.j; --j) out.push_back({lo.i, j});
  return out;
}

CombinatorialSquare::CombinatorialSquare(int k) : k_(k) {
  if (k < 2) throw Error(Errc::KTooSmall, "k = " + std::to_string(k) + " but k > 1 is required");
}

std::vector<GridPoint> CombinatorialSquare::vertices() const {
  std::vector<GridPoint> out;
  out.reserve(vertex_count());
  for (int i = 0; i <= k_; ++i)
    for (int j = 0; j <= k_; ++j) out.push_back({i, j});
  return out;
}

std::vector<Simplex> CombinatorialSquare::simplexes() const {
  std::vector<Simplex> out;
  out.reserve(simplex_count());
  for (std::size_t n = 0; n < simplex_count(); ++n) out.push_back(simplex_at(n));
  return out;
}

std::vector<Face> CombinatorialSquare::faces() const {
  std::vector<Face> out;
  for (int i = 0; i <= k_; ++i) {
    for (int j = 0; j <= k_; ++j) {
      if (i < k_) out.push_back({{i, j}, FaceKind::Horizontal});
      if (j < k_) out.push_back({{i, j}, FaceKind::Vertical});
      if (i < k_ && j < k_) out.push_back({{i, j}, FaceKind::Diagonal});
    }
  }
  return out;
}

CombinatorialSquare build_square(int k) { return CombinatorialSquare(k); }

InlineVec<Simplex, 2> face_cofaces(const Rectangle& region, const Face& f) {
  if (!region.contains(f)) {
    throw Error(Errc::FaceOutOfRange,
                "face " + show(f.first()) + "-" + show(f.second()) + " is outside the region");
  }
  InlineVec<Simplex, 2> out;
  for (const Simplex& s : lattice_cofaces(f))
    if (region.contains(s)) out.push_back(s);
  return out;
}

InlineVec<Simplex, 2> face_cofaces(const CombinatorialSquare& sq, const Face& f) {
  return face_cofaces(sq.bounds(), f);
}

std::vector<GridPoint> boundary_path(const Rectangle& r, GridPoint a, GridPoint b) {
  if (a == b) throw Error(Errc::NotACorner, "arc endpoints must differ");
  if (a.i == b.i || a.j == b.j) {
    throw Error(Errc::DegenerateRectangle, show(a) + " and " + show(b) + " share a coordinate");
  }
  if (!r.is_corner(a) || !r.is_corner(b) || !r.contains(a) || !r.contains(b)) {
    throw Error(Errc::NotACorner, show(a) + " and " + show(b) + " are not opposite corners");
  }
  const auto cycle = r.boundary_cycle();
  const auto n = cycle.size();
  const auto start = static_cast<std::size_t>(std::find(cycle.begin(), cycle.end(), a) - cycle.begin());
  std::vector<GridPoint> path;
  for (std::size_t step = 0; step <= n; ++step) {
    const GridPoint p = cycle[(start + step) % n];
    path.push_back(p);
    if (p == b) break;
  }
  return path;
}

}  // namespace chaintrace
