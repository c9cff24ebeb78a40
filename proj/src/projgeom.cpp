#include "veronese/projgeom.hpp"

#include <algorithm>

namespace vrn {

namespace {

template <typename P>
P normalize_impl(const Gf2e& F, P p) {
  for (auto v : p.c)
    if (v != 0) {
      if (v != 1) {
        fe iv = F.inv(v);
        for (auto& w : p.c) w = F.mul(w, iv);
      }
      return p;
    }
  throw domain_error("normalize: zero vector");
}

}  // namespace

Pt3 normalize(const Gf2e& F, Pt3 p) { return normalize_impl(F, p); }
Pt6 normalize(const Gf2e& F, Pt6 p) { return normalize_impl(F, p); }
Ln3 normalize(const Gf2e& F, Ln3 l) {
  Pt3 p{l.d};
  p = normalize_impl(F, p);
  return Ln3{p.c};
}

bool on_line(const Gf2e& F, const Ln3& l, const Pt3& p) {
  fe s = 0;
  for (int i = 0; i < 3; ++i) s = F.add(s, F.mul(l.d[i], p.c[i]));
  return s == 0;
}

Ln3 line_through(const Gf2e& F, const Pt3& p, const Pt3& q) {
  // cross product; in characteristic 2 signs are immaterial
  Ln3 l;
  l.d[0] = F.add(F.mul(p.c[1], q.c[2]), F.mul(p.c[2], q.c[1]));
  l.d[1] = F.add(F.mul(p.c[2], q.c[0]), F.mul(p.c[0], q.c[2]));
  l.d[2] = F.add(F.mul(p.c[0], q.c[1]), F.mul(p.c[1], q.c[0]));
  if (l.d[0] == 0 && l.d[1] == 0 && l.d[2] == 0)
    throw domain_error("line_through: coincident points");
  return normalize(F, l);
}

bool collinear(const Gf2e& F, const Pt3& a, const Pt3& b, const Pt3& c) {
  fe det = 0;
  det = F.add(det, F.mul(a.c[0], F.add(F.mul(b.c[1], c.c[2]), F.mul(b.c[2], c.c[1]))));
  det = F.add(det, F.mul(a.c[1], F.add(F.mul(b.c[0], c.c[2]), F.mul(b.c[2], c.c[0]))));
  det = F.add(det, F.mul(a.c[2], F.add(F.mul(b.c[0], c.c[1]), F.mul(b.c[1], c.c[0]))));
  return det == 0;
}

int rref(const Gf2e& F, fe* rows, int nrows, int ncols) {
  int rank = 0;
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int r = rank; r < nrows; ++r)
      if (rows[r * ncols + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < ncols; ++j) std::swap(rows[pivot * ncols + j], rows[rank * ncols + j]);
    fe iv = F.inv(rows[rank * ncols + col]);
    for (int j = 0; j < ncols; ++j) rows[rank * ncols + j] = F.mul(rows[rank * ncols + j], iv);
    for (int r = 0; r < nrows; ++r) {
      if (r == rank) continue;
      fe f = rows[r * ncols + col];
      if (f == 0) continue;
      for (int j = 0; j < ncols; ++j)
        rows[r * ncols + j] = F.add(rows[r * ncols + j], F.mul(f, rows[rank * ncols + j]));
    }
    ++rank;
  }
  return rank;
}

Line5 span_line(const Gf2e& F, const Pt6& a, const Pt6& b) {
  fe rows[12];
  for (int i = 0; i < 6; ++i) {
    rows[i] = a.c[i];
    rows[6 + i] = b.c[i];
  }
  int rank = rref(F, rows, 2, 6);
  if (rank != 2) throw dependence_error("span_line: dependent generators", rank);
  Line5 l;
  for (int i = 0; i < 6; ++i) {
    l.m[0][i] = rows[i];
    l.m[1][i] = rows[6 + i];
  }
  return l;
}

Plane5 span_plane(const Gf2e& F, const Pt6& a, const Pt6& b, const Pt6& c) {
  return plane_from_rows(F, {a.c, b.c, c.c});
}

Plane5 plane_from_rows(const Gf2e& F, const std::array<std::array<fe, 6>, 3>& rows_in) {
  fe rows[18];
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < 6; ++i) rows[r * 6 + i] = rows_in[r][i];
  int rank = rref(F, rows, 3, 6);
  if (rank != 3) throw dependence_error("span_plane: dependent generators", rank);
  Plane5 p;
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < 6; ++i) p.m[r][i] = rows[r * 6 + i];
  return p;
}

bool contains(const Gf2e& F, const Line5& l, const Pt6& p) {
  fe rows[18];
  for (int i = 0; i < 6; ++i) {
    rows[i] = l.m[0][i];
    rows[6 + i] = l.m[1][i];
    rows[12 + i] = p.c[i];
  }
  return rref(F, rows, 3, 6) == 2;
}

bool contains(const Gf2e& F, const Plane5& pl, const Pt6& p) {
  fe rows[24];
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < 6; ++i) rows[r * 6 + i] = pl.m[r][i];
  for (int i = 0; i < 6; ++i) rows[18 + i] = p.c[i];
  return rref(F, rows, 4, 6) == 3;
}

std::uint32_t pg2_size(const Gf2e& F) { return F.q() * F.q() + F.q() + 1; }

Pt3 pg2_point(const Gf2e& F, std::uint32_t index) {
  const std::uint32_t q = F.q();
  if (index < q * q) return Pt3{{1, static_cast<fe>(index / q), static_cast<fe>(index % q)}};
  index -= q * q;
  if (index < q) return Pt3{{0, 1, static_cast<fe>(index)}};
  return Pt3{{0, 0, 1}};
}

std::uint32_t pg2_index(const Gf2e& F, const Pt3& p) {
  const std::uint32_t q = F.q();
  Pt3 n = normalize(F, p);
  if (n.c[0] == 1) return static_cast<std::uint32_t>(n.c[1]) * q + n.c[2];
  if (n.c[1] == 1) return q * q + n.c[2];
  return q * q + q;
}

namespace {

Pt6 combine2(const Gf2e& F, const std::array<std::array<fe, 6>, 2>& m, fe s, fe t) {
  Pt6 p;
  for (int i = 0; i < 6; ++i) p.c[i] = F.add(F.mul(s, m[0][i]), F.mul(t, m[1][i]));
  return p;
}

Pt6 combine3(const Gf2e& F, const std::array<std::array<fe, 6>, 3>& m, const Pt3& x) {
  Pt6 p;
  for (int i = 0; i < 6; ++i)
    p.c[i] =
        F.add(F.add(F.mul(x.c[0], m[0][i]), F.mul(x.c[1], m[1][i])), F.mul(x.c[2], m[2][i]));
  return p;
}

}  // namespace

void for_each_point(const Gf2e& F, const Line5& l,
                    const std::function<void(const Pt3&, const Pt6&)>& fn) {
  const std::uint32_t q = F.q();
  for (std::uint32_t t = 0; t < q; ++t) {
    Pt3 par{{1, static_cast<fe>(t), 0}};
    fn(par, normalize(F, combine2(F, l.m, 1, static_cast<fe>(t))));
  }
  Pt3 par{{0, 1, 0}};
  fn(par, normalize(F, combine2(F, l.m, 0, 1)));
}

void for_each_point(const Gf2e& F, const Plane5& pl,
                    const std::function<void(const Pt3&, const Pt6&)>& fn) {
  const std::uint32_t n = pg2_size(F);
  for (std::uint32_t i = 0; i < n; ++i) {
    Pt3 par = pg2_point(F, i);
    fn(par, normalize(F, combine3(F, pl.m, par)));
  }
}

std::vector<Pt6> points_of(const Gf2e& F, const Line5& l) {
  std::vector<Pt6> out;
  out.reserve(F.q() + 1);
  for_each_point(F, l, [&](const Pt3&, const Pt6& p) { out.push_back(p); });
  return out;
}

std::vector<Pt6> points_of(const Gf2e& F, const Plane5& pl) {
  std::vector<Pt6> out;
  out.reserve(pg2_size(F));
  for_each_point(F, pl, [&](const Pt3&, const Pt6& p) { out.push_back(p); });
  return out;
}

std::vector<Ln3> all_pg2_lines(const Gf2e& F) {
  std::vector<Ln3> out;
  out.reserve(pg2_size(F));
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) {
    Pt3 d = pg2_point(F, i);
    out.push_back(Ln3{d.c});
  }
  return out;
}

std::vector<Pt3> points_on_line(const Gf2e& F, const Ln3& l) {
  std::vector<Pt3> out;
  out.reserve(F.q() + 1);
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) {
    Pt3 p = pg2_point(F, i);
    if (on_line(F, l, p)) out.push_back(p);
  }
  return out;
}

NucleusMeet meet_nucleus_plane(const Gf2e& F, const Plane5& pl) {
  // Parameters (x,y,z) whose combined point has Y0 = Y3 = Y5 = 0:
  // a homogeneous 3x3 system in (x,y,z).
  fe rows[9];
  const int idx[3] = {0, 3, 5};
  for (int r = 0; r < 3; ++r)
    for (int j = 0; j < 3; ++j) rows[r * 3 + j] = pl.m[j][idx[r]];
  fe work[9];
  std::copy(rows, rows + 9, work);
  int rank = rref(F, work, 3, 3);
  NucleusMeet out;
  if (rank == 3) {
    out.dim = -1;
    return out;
  }
  out.dim = 2 - rank;
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) {
    Pt3 x = pg2_point(F, i);
    bool ok = true;
    for (int r = 0; r < 3 && ok; ++r) {
      fe s = 0;
      for (int j = 0; j < 3; ++j) s = F.add(s, F.mul(rows[r * 3 + j], x.c[j]));
      ok = s == 0;
    }
    if (ok) {
      out.params.push_back(x);
      out.points.push_back(normalize(F, combine3(F, pl.m, x)));
    }
  }
  return out;
}

void planes_through(const Gf2e& F, const Pt6& P,
                    const std::function<void(const Plane5&)>& fn) {
  const std::uint32_t q = F.q();
  Pt6 p = normalize(F, P);
  int pivot = 0;
  while (p.c[pivot] == 0) ++pivot;
  // Complement coordinates: the five slots other than the pivot. Planes through
  // P correspond to lines of the quotient, i.e. 2x5 RREF matrices.
  int slots[5], ns = 0;
  for (int i = 0; i < 6; ++i)
    if (i != pivot) slots[ns++] = i;

  for (int p1 = 0; p1 < 5; ++p1) {
    for (int p2 = p1 + 1; p2 < 5; ++p2) {
      int free0[5], nf0 = 0, free1[5], nf1 = 0;
      for (int j = p1 + 1; j < 5; ++j)
        if (j != p2) free0[nf0++] = j;
      for (int j = p2 + 1; j < 5; ++j) free1[nf1++] = j;
      std::uint64_t count0 = 1, count1 = 1;
      for (int i = 0; i < nf0; ++i) count0 *= q;
      for (int i = 0; i < nf1; ++i) count1 *= q;
      for (std::uint64_t a = 0; a < count0; ++a) {
        fe row0[5] = {0, 0, 0, 0, 0};
        row0[p1] = 1;
        std::uint64_t aa = a;
        for (int i = 0; i < nf0; ++i) {
          row0[free0[i]] = static_cast<fe>(aa % q);
          aa /= q;
        }
        for (std::uint64_t b = 0; b < count1; ++b) {
          fe row1[5] = {0, 0, 0, 0, 0};
          row1[p2] = 1;
          std::uint64_t bb = b;
          for (int i = 0; i < nf1; ++i) {
            row1[free1[i]] = static_cast<fe>(bb % q);
            bb /= q;
          }
          std::array<std::array<fe, 6>, 3> rows{};
          rows[0] = p.c;
          for (int i = 0; i < 5; ++i) {
            rows[1][slots[i]] = row0[i];
            rows[2][slots[i]] = row1[i];
          }
          fn(plane_from_rows(F, rows));
        }
      }
    }
  }
}

namespace {

// All k x n RREF matrices over F, reported through cb(rows).
void enumerate_rref(const Gf2e& F, int k, int n,
                    const std::function<void(const fe*)>& cb) {
  const std::uint32_t q = F.q();
  std::vector<int> piv(k);
  std::vector<fe> rows(static_cast<std::size_t>(k) * n);
  std::function<void(int, int)> choose = [&](int r, int from) {
    if (r == k) {
      std::vector<std::pair<int, int>> free_cells;
      for (int i = 0; i < k; ++i)
        for (int j = piv[i] + 1; j < n; ++j) {
          bool is_pivot = false;
          for (int t = 0; t < k; ++t)
            if (piv[t] == j) is_pivot = true;
          if (!is_pivot) free_cells.emplace_back(i, j);
        }
      std::fill(rows.begin(), rows.end(), 0);
      for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i) * n + piv[i]] = 1;
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < free_cells.size(); ++i) total *= q;
      for (std::uint64_t a = 0; a < total; ++a) {
        std::uint64_t aa = a;
        for (auto [i, j] : free_cells) {
          rows[static_cast<std::size_t>(i) * n + j] = static_cast<fe>(aa % q);
          aa /= q;
        }
        cb(rows.data());
      }
      return;
    }
    for (int c = from; c <= n - (k - r); ++c) {
      piv[r] = c;
      choose(r + 1, c + 1);
    }
  };
  choose(0, 0);
}

}  // namespace

void all_planes(const Gf2e& F, const std::function<void(const Plane5&)>& fn) {
  enumerate_rref(F, 3, 6, [&](const fe* rows) {
    Plane5 p;
    for (int r = 0; r < 3; ++r)
      for (int i = 0; i < 6; ++i) p.m[r][i] = rows[r * 6 + i];
    fn(p);
  });
}

void all_lines(const Gf2e& F, const std::function<void(const Line5&)>& fn) {
  enumerate_rref(F, 2, 6, [&](const fe* rows) {
    Line5 l;
    for (int r = 0; r < 2; ++r)
      for (int i = 0; i < 6; ++i) l.m[r][i] = rows[r * 6 + i];
    fn(l);
  });
}

std::vector<std::array<fe, 6>> hyperplanes_through(const Gf2e& F, const Plane5& pl) {
  // Dual vectors h with pl.m * h = 0: the kernel of the 3x6 generator matrix.
  fe rows[18];
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < 6; ++i) rows[r * 6 + i] = pl.m[r][i];
  int rank = rref(F, rows, 3, 6);
  if (rank != 3) throw internal_error("hyperplanes_through: degenerate plane");
  int piv[3];
  bool is_piv[6] = {false, false, false, false, false, false};
  for (int r = 0; r < 3; ++r) {
    int c = 0;
    while (rows[r * 6 + c] == 0) ++c;
    piv[r] = c;
    is_piv[c] = true;
  }
  std::array<std::array<fe, 6>, 3> basis{};
  int nb = 0;
  for (int j = 0; j < 6; ++j) {
    if (is_piv[j]) continue;
    std::array<fe, 6> v{};
    v[j] = 1;
    for (int r = 0; r < 3; ++r) v[piv[r]] = rows[r * 6 + j];
    basis[nb++] = v;
  }
  std::vector<std::array<fe, 6>> out;
  out.reserve(pg2_size(F));
  for (std::uint32_t i = 0; i < pg2_size(F); ++i) {
    Pt3 x = pg2_point(F, i);
    std::array<fe, 6> h{};
    for (int j = 0; j < 6; ++j)
      h[j] = F.add(F.add(F.mul(x.c[0], basis[0][j]), F.mul(x.c[1], basis[1][j])),
                   F.mul(x.c[2], basis[2][j]));
    Pt6 hp{h};
    out.push_back(normalize(F, hp).c);
  }
  return out;
}

}  // namespace vrn
