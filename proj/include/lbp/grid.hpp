#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown by parsers; `position` is the offset of the offending character.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos) : Error(what), position(pos) {}
  std::size_t position;
};

/// Lattice position. (0,0) is the bottom-left corner, (0,N+1) the top-left.
struct Coord {
  int a = 0;  // column, 0 .. N+1
  int b = 0;  // row, 0 .. N+1
  auto operator<=>(const Coord&) const = default;
};

inline Coord operator+(Coord u, Coord v) { return {u.a + v.a, u.b + v.b}; }
inline Coord operator-(Coord u, Coord v) { return {u.a - v.a, u.b - v.b}; }

std::string to_string(Coord c);

enum class Direction : std::uint8_t { North, South, East, West };

inline constexpr std::array<Direction, 4> kDirections = {
    Direction::North, Direction::South, Direction::East, Direction::West};

constexpr Coord direction_vector(Direction d) {
  switch (d) {
    case Direction::North: return {0, 1};
    case Direction::South: return {0, -1};
    case Direction::East: return {1, 0};
    case Direction::West: return {-1, 0};
  }
  return {0, 0};
}

constexpr Direction opposite(Direction d) {
  switch (d) {
    case Direction::North: return Direction::South;
    case Direction::South: return Direction::North;
    case Direction::East: return Direction::West;
    case Direction::West: return Direction::East;
  }
  return d;
}

/// Two directions are adjacent when their vectors are orthogonal.
constexpr bool directions_adjacent(Direction d1, Direction d2) {
  Coord u = direction_vector(d1);
  Coord v = direction_vector(d2);
  return u.a * v.a + u.b * v.b == 0;
}

char direction_letter(Direction d);

/// Directed lattice edge; from and to are grid neighbors (distance 1).
struct DirectedEdge {
  Coord from;
  Coord to;
  auto operator<=>(const DirectedEdge&) const = default;
};

/// The edge (a,b) -> (a,b)+v(D).
inline DirectedEdge directed_edge(Coord c, Direction d) { return {c, c + direction_vector(d)}; }

/// The (N+2)x(N+2) grid graph with 4-neighbor topology. The interior B is the
/// set of sites with four neighbors, i.e. {1..N}^2; everything else is the
/// boundary ring.
class GridInstance {
 public:
  explicit GridInstance(int n);

  int n() const { return n_; }
  int side() const { return n_ + 2; }
  int vertex_count() const { return side() * side(); }
  int interior_count() const { return n_ * n_; }
  int ring_length() const { return 4 * n_ + 4; }

  bool contains(Coord c) const {
    return c.a >= 0 && c.a <= n_ + 1 && c.b >= 0 && c.b <= n_ + 1;
  }
  bool in_interior(Coord c) const {
    return c.a >= 1 && c.a <= n_ && c.b >= 1 && c.b <= n_;
  }
  bool on_boundary(Coord c) const { return contains(c) && !in_interior(c); }

  /// The D neighbor of c, or nullopt when it falls off the grid.
  std::optional<Coord> neighbor(Coord c, Direction d) const;

  /// All grid neighbors of c (2..4 of them).
  std::vector<Coord> neighbors(Coord c) const;

  /// Boundary ring in counter-clockwise order starting at (0,0), east along
  /// the bottom edge first.
  const std::vector<Coord>& ring() const { return ring_; }

  /// Position of a boundary coord in ring order; -1 for non-boundary coords.
  int ring_index(Coord c) const;

  /// Interior corner sites in the order sw=(1,1), se=(N,1), ne=(N,N), nw=(1,N).
  std::array<Coord, 4> interior_corners() const {
    return {Coord{1, 1}, Coord{n_, 1}, Coord{n_, n_}, Coord{1, n_}};
  }

  /// Row-major index of an interior site, (1,1) -> 0, (2,1) -> 1, ...
  int interior_index(Coord c) const { return (c.b - 1) * n_ + (c.a - 1); }
  Coord interior_coord(int idx) const { return {idx % n_ + 1, idx / n_ + 1}; }

 private:
  int n_;
  std::vector<Coord> ring_;
  std::vector<int> ring_index_;  // indexed by b * side + a
};

/// A +-1 assignment to the boundary ring, stored in ring order.
class BoundaryConfig {
 public:
  BoundaryConfig(int n, std::vector<std::int8_t> ring_values);

  /// Builds from an explicit coord map; the domain must be exactly the ring.
  static BoundaryConfig from_values(const GridInstance& g, const std::map<Coord, int>& values);

  /// Parses the wire format "B<N>:" followed by 4N+4 chars from {+,-}.
  static BoundaryConfig parse(const std::string& wire);

  int n() const { return n_; }
  int ring_length() const { return static_cast<int>(values_.size()); }
  int value_at(int ring_idx) const { return values_[ring_idx]; }
  int value(Coord c) const;
  bool is_boundary_coord(Coord c) const;

  std::string wire() const;

  BoundaryConfig color_flipped() const;

  bool operator==(const BoundaryConfig&) const = default;

 private:
  int n_ = 0;
  std::vector<std::int8_t> values_;  // ring order, entries +-1
  std::vector<int> ring_index_;      // b * (n+2) + a -> ring position, -1 elsewhere
};

/// One maximal constant-sign arc of the ring. `start` is a ring index and the
/// arc may wrap past position 0.
struct BoundaryRun {
  int start = 0;
  int length = 0;
  int sign = 0;
};

struct RunStructure {
  bool uniform = false;
  bool one_run = false;
  int sign_changes = 0;  // odd bonds among ring edges
  std::vector<BoundaryRun> runs;  // the run covering ring position 0 comes first

  const BoundaryRun* run_of_sign(int sign) const;
};

/// Splits the ring into runs and decides whether the configuration is one-run:
/// both signs present and all +1 sites forming a single arc. A uniform
/// boundary is flagged `uniform` and is not one-run.
RunStructure classify_boundary(const GridInstance& g, const BoundaryConfig& x);

/// First and last coord of a run, in ring order.
std::pair<Coord, Coord> run_endpoints(const GridInstance& g, const BoundaryRun& run);

/// Element of the dihedral symmetry group of the square lattice, optionally
/// composed with a global color flip. Acts as rotation^rotation o reflect,
/// where reflect is the transpose (a,b) -> (b,a) and one rotation step maps
/// (a,b) -> (N+1-b, a) (a 90-degree counter-clockwise turn).
struct SymmetryTransform {
  int rotation = 0;  // 0..3 quarter turns, applied after the reflection
  bool reflect = false;
  bool color_flip = false;

  Coord apply(int n, Coord c) const;
  Direction apply(Direction d) const;
  int apply_sign(int v) const { return color_flip ? -v : v; }

  SymmetryTransform inverse() const;
  /// Composition: (t2.then_after(t1)) acts as t2 o t1.
  SymmetryTransform compose_after(const SymmetryTransform& first) const;

  BoundaryConfig apply(const GridInstance& g, const BoundaryConfig& x) const;

  bool is_identity() const { return rotation == 0 && !reflect && !color_flip; }
  bool operator==(const SymmetryTransform&) const = default;

  /// The 8 spatial transforms, identity first.
  static std::array<SymmetryTransform, 8> spatial_group();
  /// The 16 transforms including color flips.
  static std::array<SymmetryTransform, 16> full_group();
};

struct NormalizedBoundary {
  BoundaryConfig config;
  /// Maps results computed on `config` back to the original input (here only
  /// ever a color flip; coordinates are untouched).
  SymmetryTransform back_transform;
};

/// Normalization used by the corner-case analysis: every degree-2 ring corner
/// whose two ring neighbors disagree is forced to -1, and colors are flipped
/// if needed so that |R+| <= |R-|. Requires a one-run input.
NormalizedBoundary normalize_one_run(const GridInstance& g, const BoundaryConfig& x);

/// All one-run boundaries: every ring arc of +1 with length in [1, 4N+3],
/// ordered by (start, length). With dedup_symmetry, only configurations whose
/// wire string is minimal over the 16-element symmetry orbit are kept.
std::vector<BoundaryConfig> enumerate_one_run_boundaries(const GridInstance& g,
                                                         bool dedup_symmetry = false);

/// Interior corners whose two boundary neighbors are both +1.
std::vector<Coord> corner_set(const GridInstance& g, const BoundaryConfig& x);

}  // namespace lbp
