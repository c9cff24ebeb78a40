#ifndef VERONESE_PROJGEOM_HPP
#define VERONESE_PROJGEOM_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "veronese/gf2e.hpp"

namespace vrn {

/// Homogeneous point of PG(2,q), normalized so the first nonzero coordinate is 1.
struct Pt3 {
  std::array<fe, 3> c{};
  friend bool operator==(const Pt3&, const Pt3&) = default;
  friend auto operator<=>(const Pt3&, const Pt3&) = default;
};

/// Homogeneous point of PG(5,q), normalized likewise.
struct Pt6 {
  std::array<fe, 6> c{};
  friend bool operator==(const Pt6&, const Pt6&) = default;
  friend auto operator<=>(const Pt6&, const Pt6&) = default;
};

/// Line of PG(2,q) as a normalized dual coefficient vector.
struct Ln3 {
  std::array<fe, 3> d{};
  friend bool operator==(const Ln3&, const Ln3&) = default;
  friend auto operator<=>(const Ln3&, const Ln3&) = default;
};

Pt3 normalize(const Gf2e& F, Pt3 p);
Pt6 normalize(const Gf2e& F, Pt6 p);
Ln3 normalize(const Gf2e& F, Ln3 l);

bool on_line(const Gf2e& F, const Ln3& l, const Pt3& p);
Ln3 line_through(const Gf2e& F, const Pt3& p, const Pt3& q);  // distinct points
bool collinear(const Gf2e& F, const Pt3& a, const Pt3& b, const Pt3& c);

/// Line of PG(5,q): canonical 2x6 reduced-row-echelon generator matrix.
struct Line5 {
  std::array<std::array<fe, 6>, 2> m{};
  friend bool operator==(const Line5&, const Line5&) = default;
  friend auto operator<=>(const Line5&, const Line5&) = default;
};

/// Plane of PG(5,q): canonical 3x6 reduced-row-echelon generator matrix.
struct Plane5 {
  std::array<std::array<fe, 6>, 3> m{};
  friend bool operator==(const Plane5&, const Plane5&) = default;
  friend auto operator<=>(const Plane5&, const Plane5&) = default;
};

// Row reduction in place; returns the rank. Rows are length N spans.
int rref(const Gf2e& F, fe* rows, int nrows, int ncols);

/// Spans throw dependence_error (carrying the actual rank) on dependent input.
Line5 span_line(const Gf2e& F, const Pt6& a, const Pt6& b);
Plane5 span_plane(const Gf2e& F, const Pt6& a, const Pt6& b, const Pt6& c);
Plane5 plane_from_rows(const Gf2e& F, const std::array<std::array<fe, 6>, 3>& rows);

bool contains(const Gf2e& F, const Line5& l, const Pt6& p);
bool contains(const Gf2e& F, const Plane5& pl, const Pt6& p);

/// Enumerate PG(2,q) in a fixed global order: (1,y,z), (0,1,z), (0,0,1).
std::uint32_t pg2_size(const Gf2e& F);
Pt3 pg2_point(const Gf2e& F, std::uint32_t index);
std::uint32_t pg2_index(const Gf2e& F, const Pt3& p);

void for_each_point(const Gf2e& F, const Line5& l,
                    const std::function<void(const Pt3&, const Pt6&)>& fn);
void for_each_point(const Gf2e& F, const Plane5& pl,
                    const std::function<void(const Pt3&, const Pt6&)>& fn);
std::vector<Pt6> points_of(const Gf2e& F, const Line5& l);
std::vector<Pt6> points_of(const Gf2e& F, const Plane5& pl);

/// The q+1 lines of PG(2,q) through p, then the qq remaining ones are not needed;
/// enumerate all q^2+q+1 lines of PG(2,q).
std::vector<Ln3> all_pg2_lines(const Gf2e& F);
std::vector<Pt3> points_on_line(const Gf2e& F, const Ln3& l);

struct NucleusMeet {
  int dim = -1;                // -1 empty, 0 point, 1 line, 2 whole plane
  std::vector<Pt3> params;     // parameter points of the meet, (q^dim... ) entries
  std::vector<Pt6> points;
};
/// Intersection with the nucleus plane Z(Y0, Y3, Y5).
NucleusMeet meet_nucleus_plane(const Gf2e& F, const Plane5& pl);

/// Every plane of PG(5,q) through P, each exactly once (lines of the quotient).
void planes_through(const Gf2e& F, const Pt6& P,
                    const std::function<void(const Plane5&)>& fn);

/// Every plane / line of PG(5,q), by canonical RREF enumeration.
void all_planes(const Gf2e& F, const std::function<void(const Plane5&)>& fn);
void all_lines(const Gf2e& F, const std::function<void(const Line5&)>& fn);

// Hyperplanes containing a plane: the q^2+q+1 dual vectors, normalized.
std::vector<std::array<fe, 6>> hyperplanes_through(const Gf2e& F, const Plane5& pl);

}  // namespace vrn

namespace std {
template <>
struct hash<vrn::Plane5> {
  size_t operator()(const vrn::Plane5& p) const noexcept {
    size_t h = 1469598103934665603ull;
    for (const auto& row : p.m)
      for (auto v : row) {
        h ^= v;
        h *= 1099511628211ull;
      }
    return h;
  }
};
template <>
struct hash<vrn::Line5> {
  size_t operator()(const vrn::Line5& l) const noexcept {
    size_t h = 1469598103934665603ull;
    for (const auto& row : l.m)
      for (auto v : row) {
        h ^= v;
        h *= 1099511628211ull;
      }
    return h;
  }
};
template <>
struct hash<vrn::Pt6> {
  size_t operator()(const vrn::Pt6& p) const noexcept {
    size_t h = 1469598103934665603ull;
    for (auto v : p.c) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace std

#endif
