#include "spcol/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace spcol {

namespace {

double cross2(const Vec2& u, const Vec2& v) { return u.x() * v.y() - u.y() * v.x(); }

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * cross2(b - a, c - a);
}

Eigen::Vector3d barycentric_of(const std::array<Vec2, 3>& v, const Vec2& p) {
  const double det = cross2(v[1] - v[0], v[2] - v[0]);
  Eigen::Vector3d b;
  b[0] = cross2(v[1] - p, v[2] - p) / det;
  b[1] = cross2(v[2] - p, v[0] - p) / det;
  b[2] = cross2(v[0] - p, v[1] - p) / det;
  return b;
}

} // namespace

double Triangulation::signed_area(int t) const {
  const auto c = corners(t);
  return spcol::signed_area(c[0], c[1], c[2]);
}

double Triangulation::total_area() const {
  double s = 0.0;
  for (int t = 0; t < nt(); ++t) s += signed_area(t);
  return s;
}

Triangulation Triangulation::build(std::vector<Vec2> vertices,
                                   std::vector<std::array<int, 3>> triangles) {
  Triangulation m;
  m.vertices = std::move(vertices);
  m.triangles = std::move(triangles);
  const int nv = m.nv();
  const int nt = m.nt();
  if (nv < 3) throw MeshError("mesh has fewer than 3 vertices");
  if (nt < 1) throw MeshError("mesh has no triangles");

  double scale = 0.0;
  Vec2 lo = m.vertices[0], hi = m.vertices[0];
  for (const auto& v : m.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  scale = std::max((hi - lo).norm(), 1e-30);

  std::set<std::array<int, 3>> seen;
  for (int t = 0; t < nt; ++t) {
    auto& tri = m.triangles[static_cast<size_t>(t)];
    for (int v : tri) {
      if (v < 0 || v >= nv)
        throw MeshError("triangle " + std::to_string(t) + ": vertex index " +
                        std::to_string(v) + " out of range [0," + std::to_string(nv) + ")");
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw MeshError("triangle " + std::to_string(t) + ": repeated vertex index");
    std::array<int, 3> key = tri;
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second)
      throw MeshError("duplicate triangle " + std::to_string(t));

    // Clockwise input is silently reordered to counterclockwise.
    const auto c = m.corners(t);
    double area = spcol::signed_area(c[0], c[1], c[2]);
    if (area < 0.0) {
      std::swap(tri[1], tri[2]);
      area = -area;
    }
    if (area <= 1e-14 * scale * scale)
      throw MeshError("triangle " + std::to_string(t) + " has zero area");
  }

  // Edge adjacency, deterministic order: scan triangles, local edges 0,1,2.
  std::map<std::pair<int, int>, int> edge_of;
  for (int t = 0; t < nt; ++t) {
    const auto& tri = m.triangles[static_cast<size_t>(t)];
    for (int e = 0; e < 3; ++e) {
      int u = tri[(e + 1) % 3], w = tri[(e + 2) % 3];
      auto key = std::minmax(u, w);
      auto it = edge_of.find(key);
      if (it == edge_of.end()) {
        Edge ed;
        ed.a = key.first;
        ed.b = key.second;
        ed.tri[0] = t;
        ed.local[0] = e;
        edge_of.emplace(key, static_cast<int>(m.edges.size()));
        m.edges.push_back(ed);
      } else {
        Edge& ed = m.edges[static_cast<size_t>(it->second)];
        if (ed.tri[1] >= 0)
          throw MeshError("edge (" + std::to_string(key.first) + "," +
                          std::to_string(key.second) + ") shared by more than two triangles");
        ed.tri[1] = t;
        ed.local[1] = e;
      }
    }
  }
  m.boundary_vertex.assign(static_cast<size_t>(nv), false);
  for (int e = 0; e < static_cast<int>(m.edges.size()); ++e) {
    if (m.edges[static_cast<size_t>(e)].interior())
      m.interior_edges.push_back(e);
    else {
      m.boundary_edges.push_back(e);
      m.boundary_vertex[static_cast<size_t>(m.edges[static_cast<size_t>(e)].a)] = true;
      m.boundary_vertex[static_cast<size_t>(m.edges[static_cast<size_t>(e)].b)] = true;
    }
  }

  m.vertex_owner.assign(static_cast<size_t>(nv), -1);
  for (int t = 0; t < nt; ++t)
    for (int v : m.triangles[static_cast<size_t>(t)])
      if (m.vertex_owner[static_cast<size_t>(v)] < 0) m.vertex_owner[static_cast<size_t>(v)] = t;

  // Hanging vertex: a vertex in the strict interior of some other edge.
  for (const Edge& ed : m.edges) {
    const Vec2& a = m.vertices[static_cast<size_t>(ed.a)];
    const Vec2& b = m.vertices[static_cast<size_t>(ed.b)];
    const double len2 = (b - a).squaredNorm();
    for (int v = 0; v < nv; ++v) {
      if (v == ed.a || v == ed.b) continue;
      const Vec2& p = m.vertices[static_cast<size_t>(v)];
      const double t = (p - a).dot(b - a) / len2;
      if (t <= 1e-12 || t >= 1.0 - 1e-12) continue;
      const Vec2 foot = a + t * (b - a);
      if ((p - foot).norm() <= 1e-12 * scale)
        throw MeshError("hanging vertex " + std::to_string(v) + " on edge (" +
                        std::to_string(ed.a) + "," + std::to_string(ed.b) + ")");
    }
  }

  m.h = 0.0;
  m.shape_constant = 0.0;
  for (int t = 0; t < nt; ++t) {
    const auto c = m.corners(t);
    const double e0 = (c[1] - c[2]).norm();
    const double e1 = (c[2] - c[0]).norm();
    const double e2 = (c[0] - c[1]).norm();
    const double longest = std::max({e0, e1, e2});
    const double area = m.signed_area(t);
    const double inradius = area / (0.5 * (e0 + e1 + e2));
    m.h = std::max(m.h, longest);
    m.shape_constant = std::max(m.shape_constant, longest / inradius);
  }
  return m;
}

Triangulation parse_mesh(std::istream& in, const std::string& origin) {
  std::string text, line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    text += line;
    text += '\n';
  }
  std::istringstream s(text);
  s.imbue(std::locale::classic());
  long nv = 0, nt = 0, base = 0;
  if (!(s >> nv >> nt >> base))
    throw MeshError(origin + ": parse failure in header (expected 'nv nt base')");
  if (nv < 3 || nt < 1 || (base != 0 && base != 1))
    throw MeshError(origin + ": invalid header values");
  std::vector<Vec2> verts(static_cast<size_t>(nv));
  for (long i = 0; i < nv; ++i) {
    if (!(s >> verts[static_cast<size_t>(i)].x() >> verts[static_cast<size_t>(i)].y()))
      throw MeshError(origin + ": parse failure at vertex " + std::to_string(i));
  }
  std::vector<std::array<int, 3>> tris(static_cast<size_t>(nt));
  for (long t = 0; t < nt; ++t) {
    long i, j, k;
    if (!(s >> i >> j >> k))
      throw MeshError(origin + ": parse failure at triangle " + std::to_string(t));
    tris[static_cast<size_t>(t)] = {static_cast<int>(i - base), static_cast<int>(j - base),
                                    static_cast<int>(k - base)};
  }
  return Triangulation::build(std::move(verts), std::move(tris));
}

Triangulation load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MeshError("cannot open mesh file: " + path);
  return parse_mesh(in, path);
}

Triangulation uniform_refine(const Triangulation& tri) {
  std::vector<Vec2> verts = tri.vertices;
  verts.reserve(verts.size() + tri.edges.size());
  std::vector<int> midpoint(tri.edges.size());
  for (size_t e = 0; e < tri.edges.size(); ++e) {
    const Edge& ed = tri.edges[e];
    midpoint[e] = static_cast<int>(verts.size());
    verts.push_back(0.5 * (tri.vertices[static_cast<size_t>(ed.a)] +
                           tri.vertices[static_cast<size_t>(ed.b)]));
  }

  // Midpoint of the edge opposite local vertex e of triangle t.
  std::map<std::pair<int, int>, int> edge_index;
  for (size_t e = 0; e < tri.edges.size(); ++e) {
    const Edge& ed = tri.edges[e];
    edge_index[{ed.a, ed.b}] = static_cast<int>(e);
  }
  auto mid = [&](int t, int e) {
    const auto& tv = tri.triangles[static_cast<size_t>(t)];
    auto key = std::minmax(tv[(e + 1) % 3], tv[(e + 2) % 3]);
    return midpoint[static_cast<size_t>(edge_index.at(key))];
  };

  std::vector<std::array<int, 3>> tris;
  tris.reserve(4 * tri.triangles.size());
  for (int t = 0; t < tri.nt(); ++t) {
    const auto& tv = tri.triangles[static_cast<size_t>(t)];
    const int m0 = mid(t, 0), m1 = mid(t, 1), m2 = mid(t, 2);
    // m0 is opposite tv[0], i.e. the midpoint of (tv[1],tv[2]), etc.
    tris.push_back({tv[0], m2, m1});
    tris.push_back({m2, tv[1], m0});
    tris.push_back({m1, m0, tv[2]});
    tris.push_back({m2, m0, m1});
  }
  return Triangulation::build(std::move(verts), std::move(tris));
}

Triangulation generate_square_mesh(int n, Vec2 lo, Vec2 hi) {
  if (n < 1) throw std::invalid_argument("generate_square_mesh: n must be >= 1");
  std::vector<Vec2> verts;
  verts.reserve(static_cast<size_t>((n + 1) * (n + 1)));
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      verts.emplace_back(lo.x() + (hi.x() - lo.x()) * i / n, lo.y() + (hi.y() - lo.y()) * j / n);
  auto id = [n](int i, int j) { return j * (n + 1) + i; };
  std::vector<std::array<int, 3>> tris;
  tris.reserve(static_cast<size_t>(2 * n * n));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      tris.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      tris.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  return Triangulation::build(std::move(verts), std::move(tris));
}

std::optional<LocateResult> locate_point(const Triangulation& tri, const Vec2& p) {
  for (int t = 0; t < tri.nt(); ++t) {
    const Eigen::Vector3d b = barycentric_of(tri.corners(t), p);
    if (b.minCoeff() >= -kLocateTol) return LocateResult{t, b};
  }
  return std::nullopt;
}

PointLocator::PointLocator(const Triangulation& tri) : tri_(&tri) {
  Vec2 lo = tri.vertices[0], hi = tri.vertices[0];
  for (const auto& v : tri.vertices) {
    lo = lo.cwiseMin(v);
    hi = hi.cwiseMax(v);
  }
  const double pad = 1e-9 * std::max((hi - lo).norm(), 1e-30);
  lo_ = lo - Vec2(pad, pad);
  const Vec2 span = (hi - lo) + 2 * Vec2(pad, pad);
  const int target = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(tri.nt()))));
  nx_ = ny_ = target;
  cell_ = Vec2(span.x() / nx_, span.y() / ny_);
  buckets_.assign(static_cast<size_t>(nx_ * ny_), {});
  for (int t = 0; t < tri.nt(); ++t) {
    const auto c = tri.corners(t);
    Vec2 tlo = c[0].cwiseMin(c[1]).cwiseMin(c[2]) - Vec2(pad, pad);
    Vec2 thi = c[0].cwiseMax(c[1]).cwiseMax(c[2]) + Vec2(pad, pad);
    int ix0 = std::clamp(static_cast<int>((tlo.x() - lo_.x()) / cell_.x()), 0, nx_ - 1);
    int ix1 = std::clamp(static_cast<int>((thi.x() - lo_.x()) / cell_.x()), 0, nx_ - 1);
    int iy0 = std::clamp(static_cast<int>((tlo.y() - lo_.y()) / cell_.y()), 0, ny_ - 1);
    int iy1 = std::clamp(static_cast<int>((thi.y() - lo_.y()) / cell_.y()), 0, ny_ - 1);
    for (int iy = iy0; iy <= iy1; ++iy)
      for (int ix = ix0; ix <= ix1; ++ix)
        buckets_[static_cast<size_t>(iy * nx_ + ix)].push_back(t);
  }
}

std::optional<LocateResult> PointLocator::locate(const Vec2& p) const {
  const int ix = static_cast<int>((p.x() - lo_.x()) / cell_.x());
  const int iy = static_cast<int>((p.y() - lo_.y()) / cell_.y());
  if (ix < 0 || ix >= nx_ || iy < 0 || iy >= ny_) return std::nullopt;
  for (int t : buckets_[static_cast<size_t>(iy * nx_ + ix)]) {
    const Eigen::Vector3d b = barycentric_of(tri_->corners(t), p);
    if (b.minCoeff() >= -kLocateTol) return LocateResult{t, b};
  }
  return std::nullopt;
}

} // namespace spcol
