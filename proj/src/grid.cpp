#include "lbp/grid.hpp"

#include <algorithm>
#include <charconv>

namespace lbp {

std::string to_string(Coord c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

char direction_letter(Direction d) {
  switch (d) {
    case Direction::North: return 'N';
    case Direction::South: return 'S';
    case Direction::East: return 'E';
    case Direction::West: return 'W';
  }
  return '?';
}

GridInstance::GridInstance(int n) : n_(n) {
  if (n < 1) throw Error("grid size must be >= 1, got " + std::to_string(n));
  // Ring order: bottom west->east, east side south->north, top east->west,
  // west side north->south. Closes back at (0,1) -> (0,0).
  ring_.reserve(ring_length());
  for (int a = 0; a <= n_ + 1; ++a) ring_.push_back({a, 0});
  for (int b = 1; b <= n_ + 1; ++b) ring_.push_back({n_ + 1, b});
  for (int a = n_; a >= 0; --a) ring_.push_back({a, n_ + 1});
  for (int b = n_; b >= 1; --b) ring_.push_back({0, b});
  ring_index_.assign(side() * side(), -1);
  for (int i = 0; i < static_cast<int>(ring_.size()); ++i)
    ring_index_[ring_[i].b * side() + ring_[i].a] = i;
}

std::optional<Coord> GridInstance::neighbor(Coord c, Direction d) const {
  Coord out = c + direction_vector(d);
  if (!contains(out)) return std::nullopt;
  return out;
}

std::vector<Coord> GridInstance::neighbors(Coord c) const {
  std::vector<Coord> out;
  out.reserve(4);
  for (Direction d : kDirections)
    if (auto nb = neighbor(c, d)) out.push_back(*nb);
  return out;
}

int GridInstance::ring_index(Coord c) const {
  if (!contains(c)) return -1;
  return ring_index_[c.b * side() + c.a];
}

BoundaryConfig::BoundaryConfig(int n, std::vector<std::int8_t> ring_values)
    : n_(n), values_(std::move(ring_values)) {
  if (n_ < 1) throw Error("boundary config needs n >= 1");
  if (static_cast<int>(values_.size()) != 4 * n_ + 4)
    throw Error("boundary config for n=" + std::to_string(n_) + " needs " +
                std::to_string(4 * n_ + 4) + " values, got " + std::to_string(values_.size()));
  for (auto v : values_)
    if (v != 1 && v != -1) throw Error("boundary values must be +-1");
  GridInstance g(n_);
  ring_index_.assign(g.side() * g.side(), -1);
  for (int i = 0; i < g.ring_length(); ++i) {
    Coord c = g.ring()[i];
    ring_index_[c.b * g.side() + c.a] = i;
  }
}

BoundaryConfig BoundaryConfig::from_values(const GridInstance& g,
                                           const std::map<Coord, int>& values) {
  std::vector<std::int8_t> ring_values(g.ring_length(), 0);
  for (const auto& [c, v] : values) {
    int idx = g.ring_index(c);
    if (idx < 0) throw Error("coord " + to_string(c) + " is not on the boundary ring");
    if (v != 1 && v != -1) throw Error("boundary value at " + to_string(c) + " must be +-1");
    ring_values[idx] = static_cast<std::int8_t>(v);
  }
  for (int i = 0; i < g.ring_length(); ++i)
    if (ring_values[i] == 0)
      throw Error("missing boundary value at " + to_string(g.ring()[i]));
  return BoundaryConfig(g.n(), std::move(ring_values));
}

BoundaryConfig BoundaryConfig::parse(const std::string& wire) {
  if (wire.empty() || wire[0] != 'B') throw ParseError("boundary string must start with 'B'", 0);
  std::size_t colon = wire.find(':');
  if (colon == std::string::npos) throw ParseError("boundary string is missing ':'", wire.size());
  int n = 0;
  auto [ptr, ec] = std::from_chars(wire.data() + 1, wire.data() + colon, n);
  if (ec != std::errc() || ptr != wire.data() + colon || n < 1)
    throw ParseError("bad grid size in boundary string", 1);
  std::size_t expect = static_cast<std::size_t>(4 * n + 4);
  if (wire.size() - colon - 1 != expect)
    throw ParseError("boundary string for N=" + std::to_string(n) + " needs " +
                         std::to_string(expect) + " signs, got " +
                         std::to_string(wire.size() - colon - 1),
                     wire.size());
  std::vector<std::int8_t> values(expect);
  for (std::size_t i = 0; i < expect; ++i) {
    char ch = wire[colon + 1 + i];
    if (ch == '+') values[i] = 1;
    else if (ch == '-') values[i] = -1;
    else
      throw ParseError(std::string("bad boundary character '") + ch + "' at position " +
                           std::to_string(colon + 1 + i),
                       colon + 1 + i);
  }
  return BoundaryConfig(n, std::move(values));
}

int BoundaryConfig::value(Coord c) const {
  int side = n_ + 2;
  if (c.a < 0 || c.a >= side || c.b < 0 || c.b >= side)
    throw Error("coord " + to_string(c) + " is off-grid");
  int idx = ring_index_[c.b * side + c.a];
  if (idx < 0) throw Error("coord " + to_string(c) + " is not on the boundary ring");
  return values_[idx];
}

bool BoundaryConfig::is_boundary_coord(Coord c) const {
  int side = n_ + 2;
  if (c.a < 0 || c.a >= side || c.b < 0 || c.b >= side) return false;
  return ring_index_[c.b * side + c.a] >= 0;
}

std::string BoundaryConfig::wire() const {
  std::string out = "B" + std::to_string(n_) + ":";
  for (auto v : values_) out += (v > 0 ? '+' : '-');
  return out;
}

BoundaryConfig BoundaryConfig::color_flipped() const {
  std::vector<std::int8_t> values(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    values[i] = static_cast<std::int8_t>(-values_[i]);
  return BoundaryConfig(n_, std::move(values));
}

const BoundaryRun* RunStructure::run_of_sign(int sign) const {
  for (const auto& r : runs)
    if (r.sign == sign) return &r;
  return nullptr;
}

RunStructure classify_boundary(const GridInstance& g, const BoundaryConfig& x) {
  if (x.n() != g.n()) throw Error("boundary config size does not match grid");
  int len = x.ring_length();
  RunStructure out;
  for (int i = 0; i < len; ++i)
    if (x.value_at(i) != x.value_at((i + 1) % len)) ++out.sign_changes;
  if (out.sign_changes == 0) {
    out.uniform = true;
    out.runs.push_back({0, len, x.value_at(0)});
    return out;
  }
  // Scan from the first position after a sign change so no run wraps mid-scan,
  // then rotate the list so the run covering ring position 0 comes first.
  int first = 0;
  while (x.value_at((first + len - 1) % len) == x.value_at(first)) ++first;
  int pos = first;
  for (int seen = 0; seen < len;) {
    int run_len = 1;
    while (run_len < len && x.value_at((pos + run_len) % len) == x.value_at(pos)) ++run_len;
    out.runs.push_back({pos, run_len, x.value_at(pos)});
    pos = (pos + run_len) % len;
    seen += run_len;
  }
  std::rotate(out.runs.begin(),
              std::find_if(out.runs.begin(), out.runs.end(),
                           [len](const BoundaryRun& r) {
                             return r.start + r.length > len || r.start == 0;
                           }),
              out.runs.end());
  // One-run: exactly one positive and one negative arc.
  out.one_run = out.runs.size() == 2;
  return out;
}

std::pair<Coord, Coord> run_endpoints(const GridInstance& g, const BoundaryRun& run) {
  int len = g.ring_length();
  Coord first = g.ring()[run.start % len];
  Coord last = g.ring()[(run.start + run.length - 1) % len];
  return {first, last};
}

Coord SymmetryTransform::apply(int n, Coord c) const {
  Coord out = c;
  if (reflect) out = {out.b, out.a};
  for (int i = 0; i < rotation; ++i) out = {n + 1 - out.b, out.a};
  return out;
}

Direction SymmetryTransform::apply(Direction d) const {
  Direction out = d;
  if (reflect) {
    switch (out) {
      case Direction::East: out = Direction::North; break;
      case Direction::North: out = Direction::East; break;
      case Direction::West: out = Direction::South; break;
      case Direction::South: out = Direction::West; break;
    }
  }
  for (int i = 0; i < rotation; ++i) {
    switch (out) {
      case Direction::East: out = Direction::North; break;
      case Direction::North: out = Direction::West; break;
      case Direction::West: out = Direction::South; break;
      case Direction::South: out = Direction::East; break;
    }
  }
  return out;
}

SymmetryTransform SymmetryTransform::inverse() const {
  // reflect conjugates a rotation to its inverse, so (r, f)^-1 is (r, f) when
  // f is set and (-r, f) otherwise; the color flip is its own inverse.
  if (reflect) return {rotation, true, color_flip};
  return {(4 - rotation) % 4, false, color_flip};
}

SymmetryTransform SymmetryTransform::compose_after(const SymmetryTransform& first) const {
  // this o first. Moving first.rotation past this->reflect inverts it.
  int r1 = first.rotation;
  if (reflect) r1 = (4 - r1) % 4;
  return {(rotation + r1) % 4, reflect != first.reflect, color_flip != first.color_flip};
}

BoundaryConfig SymmetryTransform::apply(const GridInstance& g, const BoundaryConfig& x) const {
  std::vector<std::int8_t> values(g.ring_length());
  for (int i = 0; i < g.ring_length(); ++i) {
    Coord c = g.ring()[i];
    Coord image = apply(g.n(), c);
    values[g.ring_index(image)] = static_cast<std::int8_t>(apply_sign(x.value_at(i)));
  }
  return BoundaryConfig(g.n(), std::move(values));
}

std::array<SymmetryTransform, 8> SymmetryTransform::spatial_group() {
  return {SymmetryTransform{0, false, false}, SymmetryTransform{1, false, false},
          SymmetryTransform{2, false, false}, SymmetryTransform{3, false, false},
          SymmetryTransform{0, true, false},  SymmetryTransform{1, true, false},
          SymmetryTransform{2, true, false},  SymmetryTransform{3, true, false}};
}

std::array<SymmetryTransform, 16> SymmetryTransform::full_group() {
  std::array<SymmetryTransform, 16> out;
  auto spatial = spatial_group();
  for (int i = 0; i < 8; ++i) {
    out[i] = spatial[i];
    out[8 + i] = spatial[i];
    out[8 + i].color_flip = true;
  }
  return out;
}

namespace {

// Forces every degree-2 ring corner with disagreeing ring neighbors to -1.
// Such a corner has no interior neighbor, so messages are unaffected.
BoundaryConfig contract_corners(const GridInstance& g, const BoundaryConfig& x) {
  std::vector<std::int8_t> values(g.ring_length());
  for (int i = 0; i < g.ring_length(); ++i)
    values[i] = static_cast<std::int8_t>(x.value_at(i));
  int len = g.ring_length();
  for (Coord corner : {Coord{0, 0}, Coord{g.n() + 1, 0}, Coord{g.n() + 1, g.n() + 1},
                       Coord{0, g.n() + 1}}) {
    int idx = g.ring_index(corner);
    int prev = (idx + len - 1) % len;
    int next = (idx + 1) % len;
    if (values[prev] != values[next]) values[idx] = -1;
  }
  return BoundaryConfig(g.n(), std::move(values));
}

}  // namespace

NormalizedBoundary normalize_one_run(const GridInstance& g, const BoundaryConfig& x) {
  RunStructure rs = classify_boundary(g, x);
  if (!rs.one_run) throw Error("normalize_one_run requires a one-run boundary");
  BoundaryConfig cur = contract_corners(g, x);
  rs = classify_boundary(g, cur);
  bool flipped = false;
  if (rs.one_run) {
    const BoundaryRun* plus = rs.run_of_sign(1);
    if (2 * plus->length > g.ring_length()) {
      cur = contract_corners(g, cur.color_flipped());
      flipped = true;
    }
  }
  return {cur, SymmetryTransform{0, false, flipped}};
}

std::vector<BoundaryConfig> enumerate_one_run_boundaries(const GridInstance& g,
                                                         bool dedup_symmetry) {
  int len = g.ring_length();
  std::vector<BoundaryConfig> out;
  auto group = SymmetryTransform::full_group();
  for (int start = 0; start < len; ++start) {
    for (int run_len = 1; run_len < len; ++run_len) {
      std::vector<std::int8_t> values(len, -1);
      for (int i = 0; i < run_len; ++i) values[(start + i) % len] = 1;
      BoundaryConfig cfg(g.n(), std::move(values));
      if (dedup_symmetry) {
        std::string wire = cfg.wire();
        bool minimal = true;
        for (const auto& t : group) {
          if (t.is_identity()) continue;
          if (t.apply(g, cfg).wire() < wire) {
            minimal = false;
            break;
          }
        }
        if (!minimal) continue;
      }
      out.push_back(std::move(cfg));
    }
  }
  return out;
}

std::vector<Coord> corner_set(const GridInstance& g, const BoundaryConfig& x) {
  int n = g.n();
  // each corner role pairs an interior corner with its two flanking boundary
  // sites; at N=1 one site fills all four roles and is reported at most once
  const Coord roles[4][3] = {
      {{1, 1}, {1, 0}, {0, 1}},
      {{n, 1}, {n, 0}, {n + 1, 1}},
      {{n, n}, {n + 1, n}, {n, n + 1}},
      {{1, n}, {1, n + 1}, {0, n}},
  };
  std::vector<Coord> out;
  for (const auto& role : roles) {
    if (x.value(role[1]) != 1 || x.value(role[2]) != 1) continue;
    if (std::find(out.begin(), out.end(), role[0]) == out.end()) out.push_back(role[0]);
  }
  return out;
}

}  // namespace lbp
