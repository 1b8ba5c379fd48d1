#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace chaintrace {

// Fixed-capacity vector for the tiny result sets of the grid (cofaces, gates).
template <typename T, std::size_t N>
class InlineVec {
 public:
  void push_back(const T& v) { data_[size_++] = v; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const T& operator[](std::size_t n) const { return data_[n]; }
  const T* begin() const { return data_.data(); }
  const T* end() const { return data_.data() + size_; }

 private:
  std::array<T, N> data_{};
  std::size_t size_ = 0;
};

// Lattice vertex (i, j) of D^2(k); its real position is (i/k, j/k).
struct GridPoint {
  int i = 0;
  int j = 0;

  friend constexpr auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

enum class FaceKind : std::uint8_t { Horizontal, Vertical, Diagonal };

// An unordered lattice edge, stored by its lower endpoint and direction.
// Horizontal: origin -- origin+e0; Vertical: origin -- origin+e1;
// Diagonal: origin -- origin+e0+e1. There are no anti-diagonal faces.
struct Face {
  GridPoint origin;
  FaceKind kind = FaceKind::Horizontal;

  // Throws BadInput unless a and b are the endpoints of a lattice face.
  static Face between(GridPoint a, GridPoint b);

  GridPoint first() const { return origin; }
  GridPoint second() const;
  Face translated(int di, int dj) const { return {{origin.i + di, origin.j + dj}, kind}; }

  friend constexpr auto operator<=>(const Face&, const Face&) = default;
};

// One of the two triangles of the unit cell at `base`.
// orientation 0: [z0, z0+e0, z0+e0+e1] (below the diagonal)
// orientation 1: [z0, z0+e1, z0+e0+e1] (above the diagonal)
struct Simplex {
  GridPoint base;
  int orientation = 0;

  std::array<GridPoint, 3> vertices() const;
  // Faces in the order [z0,z1], [z1,z2], [z2,z0].
  std::array<Face, 3> faces() const;
  bool has_face(const Face& f) const;

  friend constexpr auto operator<=>(const Simplex&, const Simplex&) = default;
};

// The two simplexes of the infinite lattice triangulation sharing `f`.
std::array<Simplex, 2> lattice_cofaces(const Face& f);

// Axis-aligned lattice rectangle with lo < hi componentwise.
struct Rectangle {
  GridPoint lo;
  GridPoint hi;

  // Rectangle with a and b as opposite corners (in any order).
  static Rectangle spanning(GridPoint a, GridPoint b);

  bool contains(GridPoint p) const {
    return p.i >= lo.i && p.i <= hi.i && p.j >= lo.j && p.j <= hi.j;
  }
  bool contains(const Simplex& s) const {
    return s.base.i >= lo.i && s.base.i < hi.i && s.base.j >= lo.j && s.base.j < hi.j;
  }
  bool contains(const Face& f) const { return contains(f.first()) && contains(f.second()); }
  bool on_boundary(GridPoint p) const {
    return contains(p) && (p.i == lo.i || p.i == hi.i || p.j == lo.j || p.j == hi.j);
  }
  // True when f is an edge of the boundary cycle of the rectangle.
  bool on_boundary(const Face& f) const;
  bool is_corner(GridPoint p) const {
    return (p.i == lo.i || p.i == hi.i) && (p.j == lo.j || p.j == hi.j);
  }

  int width() const { return hi.i - lo.i; }
  int height() const { return hi.j - lo.j; }

  // Boundary vertices counterclockwise from lo, lo listed once.
  std::vector<GridPoint> boundary_cycle() const;

  friend constexpr bool operator==(const Rectangle&, const Rectangle&) = default;
};

class CombinatorialSquare {
 public:
  // Throws KTooSmall for k < 2.
  explicit CombinatorialSquare(int k);

  int k() const { return k_; }
  std::size_t vertex_count() const { return static_cast<std::size_t>(k_ + 1) * (k_ + 1); }
  std::size_t simplex_count() const { return 2 * static_cast<std::size_t>(k_) * k_; }
  Rectangle bounds() const { return {{0, 0}, {k_, k_}}; }

  bool contains(GridPoint p) const { return bounds().contains(p); }
  bool contains(const Simplex& s) const { return bounds().contains(s); }
  bool contains(const Face& f) const { return bounds().contains(f); }
  bool is_boundary(const Face& f) const { return bounds().on_boundary(f); }

  std::vector<GridPoint> vertices() const;
  std::vector<Simplex> simplexes() const;
  std::vector<Face> faces() const;

  // Dense index in [0, simplex_count()), increasing in (base.i, base.j, orientation).
  std::size_t simplex_index(const Simplex& s) const {
    return (static_cast<std::size_t>(s.base.i) * k_ + s.base.j) * 2 + s.orientation;
  }
  Simplex simplex_at(std::size_t index) const {
    const int o = static_cast<int>(index % 2);
    const auto cell = index / 2;
    return {{static_cast<int>(cell / k_), static_cast<int>(cell % k_)}, o};
  }

 private:
  int k_;
};

CombinatorialSquare build_square(int k);

// Cofaces of f among the simplexes of the region (1 on the region boundary, 2 inside).
// Throws FaceOutOfRange if f does not lie in the region.
InlineVec<Simplex, 2> face_cofaces(const Rectangle& region, const Face& f);
InlineVec<Simplex, 2> face_cofaces(const CombinatorialSquare& sq, const Face& f);

// Vertices of the boundary of r walked counterclockwise from a to b, inclusive.
std::vector<GridPoint> boundary_path(const Rectangle& r, GridPoint a, GridPoint b);

}  // namespace chaintrace
