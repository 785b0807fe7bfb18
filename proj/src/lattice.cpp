#include "tqd/lattice.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace tqd {

int Lattice::wrap(int c) const {
  int m = c % L;
  return m < 0 ? m + L : m;
}

int Lattice::vertex(int x, int y) const {
  if (geometry == Geometry::torus) return wrap(x) + L * wrap(y);
  if (x < 0 || x >= L || y < 0 || y >= L) return -1;
  return x + L * y;
}

int Lattice::h_edge(int x, int y) const {
  if (geometry == Geometry::torus) return 2 * (wrap(x) + L * wrap(y));
  if (x < 0 || x >= L - 1 || y < 0 || y >= L) return -1;
  return x + (L - 1) * y;
}

int Lattice::v_edge(int x, int y) const {
  if (geometry == Geometry::torus) return 2 * (wrap(x) + L * wrap(y)) + 1;
  if (x < 0 || x >= L || y < 0 || y >= L - 1) return -1;
  return L * (L - 1) + x + L * y;
}

int Lattice::face(int x, int y) const {
  if (geometry == Geometry::torus) return wrap(x) + L * wrap(y);
  if (x < 0 || x >= L - 1 || y < 0 || y >= L - 1) return -1;
  return x + (L - 1) * y;
}

std::array<int, 2> Lattice::vertex_xy(int v) const { return {v % L, v / L}; }

std::array<int, 2> Lattice::face_xy(int f) const {
  if (geometry == Geometry::torus) return {f % L, f / L};
  return {f % (L - 1), f / (L - 1)};
}

std::array<int, 3> Lattice::edge_desc(int e) const {
  if (geometry == Geometry::torus) {
    int idx = e / 2;
    return {e & 1, idx % L, idx / L};
  }
  int nh = L * (L - 1);
  if (e < nh) return {0, e % (L - 1), e / (L - 1)};
  int t = e - nh;
  return {1, t % L, t / L};
}

std::array<int, 2> Lattice::edge_endpoints(int e) const {
  auto d = edge_desc(e);
  int x = d[1], y = d[2];
  if (d[0] == 0) return {vertex(x, y), vertex(x + 1, y)};
  return {vertex(x, y), vertex(x, y + 1)};
}

std::vector<int> Lattice::star_edges(int v) const {
  auto [x, y] = vertex_xy(v);
  std::vector<int> out;
  for (int e : {h_edge(x, y), h_edge(x - 1, y), v_edge(x, y), v_edge(x, y - 1)})
    if (e >= 0) out.push_back(e);
  return out;
}

std::vector<int> Lattice::plaquette_edges(int f) const {
  auto [x, y] = face_xy(f);
  std::vector<int> out;
  for (int e : {h_edge(x, y), h_edge(x, y + 1), v_edge(x, y), v_edge(x + 1, y)})
    if (e >= 0) out.push_back(e);
  return out;
}

int Lattice::vertex_distance(int a, int b) const {
  auto [ax, ay] = vertex_xy(a);
  auto [bx, by] = vertex_xy(b);
  int dx = std::abs(ax - bx), dy = std::abs(ay - by);
  if (geometry == Geometry::torus) {
    dx = std::min(dx, L - dx);
    dy = std::min(dy, L - dy);
  }
  return dx + dy;
}

Lattice build_lattice(Geometry g, int L) {
  if (L < 2) throw std::invalid_argument("lattice needs L >= 2");
  Lattice lat;
  lat.geometry = g;
  lat.L = L;
  lat.n_vertices = L * L;
  if (g == Geometry::torus) {
    lat.n_edges = 2 * L * L;
    lat.n_faces = L * L;
  } else {
    lat.n_edges = 2 * L * (L - 1);
    lat.n_faces = (L - 1) * (L - 1);
  }
  return lat;
}

int Region::count() const {
  int c = 0;
  for (auto b : mask) c += b;
  return c;
}

std::vector<int> Region::edges() const {
  std::vector<int> out;
  for (std::size_t e = 0; e < mask.size(); ++e)
    if (mask[e]) out.push_back(static_cast<int>(e));
  return out;
}

Region region_union(const std::string& name, const Region& a, const Region& b) {
  if (a.mask.size() != b.mask.size())
    throw std::invalid_argument("region size mismatch");
  Region r(name, static_cast<int>(a.mask.size()));
  for (std::size_t e = 0; e < a.mask.size(); ++e)
    r.mask[e] = a.mask[e] | b.mask[e];
  return r;
}

Region region_complement(const std::string& name, const Region& a) {
  Region r(name, static_cast<int>(a.mask.size()));
  for (std::size_t e = 0; e < a.mask.size(); ++e) r.mask[e] = a.mask[e] ? 0 : 1;
  return r;
}

bool regions_disjoint(const Region& a, const Region& b) {
  for (std::size_t e = 0; e < a.mask.size(); ++e)
    if (a.mask[e] && b.mask[e]) return false;
  return true;
}

namespace {

bool straddles(const Region& r, const std::vector<int>& edges) {
  bool in = false, out = false;
  for (int e : edges) (r.contains(e) ? in : out) = true;
  return in && out;
}

}  // namespace

int boundary_size(const Lattice& lat, const Region& r) {
  int c = 0;
  for (int v = 0; v < lat.n_vertices; ++v)
    if (straddles(r, lat.star_edges(v))) ++c;
  for (int f = 0; f < lat.n_faces; ++f)
    if (straddles(r, lat.plaquette_edges(f))) ++c;
  return c;
}

int boundary_components(const Lattice& lat, const Region& r) {
  // Nodes: cut generators. Two nodes touch when their edge sets intersect.
  std::vector<std::vector<int>> nodes;
  for (int v = 0; v < lat.n_vertices; ++v)
    if (straddles(r, lat.star_edges(v))) nodes.push_back(lat.star_edges(v));
  for (int f = 0; f < lat.n_faces; ++f)
    if (straddles(r, lat.plaquette_edges(f))) nodes.push_back(lat.plaquette_edges(f));
  int n = static_cast<int>(nodes.size());
  std::vector<std::vector<int>> by_edge(static_cast<std::size_t>(lat.n_edges));
  for (int i = 0; i < n; ++i)
    for (int e : nodes[static_cast<std::size_t>(i)])
      by_edge[static_cast<std::size_t>(e)].push_back(i);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int comps = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    ++comps;
    std::queue<int> q;
    q.push(s);
    seen[static_cast<std::size_t>(s)] = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int e : nodes[static_cast<std::size_t>(i)])
        for (int j : by_edge[static_cast<std::size_t>(e)])
          if (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = 1;
            q.push(j);
          }
    }
  }
  return comps;
}

Region face_block_edges(const Lattice& lat, const std::string& name,
                        int x0, int y0, int w, int h) {
  if (w < 1 || h < 1) throw std::invalid_argument("empty face block");
  if (lat.geometry == Geometry::torus) {
    if (w > lat.L || h > lat.L) throw std::invalid_argument("face block larger than torus");
  }
  Region r(name, lat.n_edges);
  for (int dy = 0; dy < h; ++dy)
    for (int dx = 0; dx < w; ++dx) {
      int f = lat.face(x0 + dx, y0 + dy);
      if (f < 0) throw std::invalid_argument("face block leaves the lattice");
      for (int e : lat.plaquette_edges(f)) r.add(e);
    }
  return r;
}

std::map<int, std::vector<int>> owned_edges(const Lattice& lat,
                                            const std::vector<int>& faces) {
  std::set<int> fset(faces.begin(), faces.end());
  std::map<int, std::vector<int>> owner;
  for (int f : faces) owner[f];  // keep empty entries for all faces
  std::set<int> assigned;
  for (int f : faces) {
    for (int e : lat.plaquette_edges(f)) {
      if (assigned.count(e)) continue;
      assigned.insert(e);
      auto d = lat.edge_desc(e);
      int x = d[1], y = d[2];
      // Prefer the face this edge is the bottom (h) or left (v) side of;
      // both cases name face(x,y).
      int pref = lat.face(x, y);
      int alt = (d[0] == 0) ? lat.face(x, y - 1) : lat.face(x - 1, y);
      int own = (pref >= 0 && fset.count(pref)) ? pref : alt;
      if (own < 0 || !fset.count(own))
        throw std::logic_error("edge owner not in face set");
      owner[own].push_back(e);
    }
  }
  return owner;
}

namespace {

bool touches_logical_support(const Lattice& lat, const Region& r) {
  if (lat.geometry != Geometry::torus) return false;
  for (int x = 0; x < lat.L; ++x)
    if (r.contains(lat.h_edge(x, 0))) return true;
  for (int y = 0; y < lat.L; ++y)
    if (r.contains(lat.v_edge(0, y))) return true;
  return false;
}

Region faces_to_closed_region(const Lattice& lat, const std::string& name,
                              const std::vector<int>& faces) {
  Region r(name, lat.n_edges);
  for (int f : faces)
    for (int e : lat.plaquette_edges(f)) r.add(e);
  return r;
}

}  // namespace

Region blob_region(const Lattice& lat, const std::string& name,
                   std::array<int, 2> center, int radius) {
  if (radius < 0) throw std::invalid_argument("negative blob radius");
  Region r(name, lat.n_edges);
  int c = lat.vertex(center[0], center[1]);
  if (c < 0) throw std::invalid_argument("blob center off the lattice");
  if (radius == 0) {
    // Site blob: one star and the plaquette to its upper right.
    for (int e : lat.star_edges(c)) r.add(e);
    int f = lat.face(center[0], center[1]);
    if (f < 0) throw std::invalid_argument("site blob face off the lattice");
    for (int e : lat.plaquette_edges(f)) r.add(e);
    return r;
  }
  for (int e = 0; e < lat.n_edges; ++e) {
    auto ep = lat.edge_endpoints(e);
    int d = std::min(lat.vertex_distance(ep[0], c), lat.vertex_distance(ep[1], c));
    if (d <= radius) r.add(e);
  }
  return r;
}

RegionLayout make_layout(const Lattice& lat, LayoutKind kind,
                         const LayoutParams& params) {
  RegionLayout lay;
  lay.kind = kind;
  lay.lat = lat;
  lay.params = params;
  const int L = lat.L;
  const int ax = params.anchor[0], ay = params.anchor[1];

  switch (kind) {
    case LayoutKind::two_blob: {
      LayoutParams p = params;
      if (p.center_b[0] < 0)
        p.center_b = {p.center_a[0] + L / 2, p.center_a[1] + L / 2};
      lay.params = p;
      Region a = blob_region(lat, "A", p.center_a, p.radius);
      Region b = blob_region(lat, "B", p.center_b, p.radius);
      if (!regions_disjoint(a, b)) throw std::invalid_argument("blobs overlap");
      // Distance between the generating vertex balls, not the edge hulls:
      // spoke edges poke one step further out than the ball itself.
      int cd = lat.vertex_distance(lat.vertex(p.center_a[0], p.center_a[1]),
                                   lat.vertex(p.center_b[0], p.center_b[1]));
      lay.separation = std::max(0, cd - 2 * p.radius);
      if (lay.separation < p.min_separation)
        throw std::invalid_argument("blobs closer than the required separation");
      lay.overlaps_logical =
          touches_logical_support(lat, a) || touches_logical_support(lat, b);
      Region e = region_complement("E", region_union("AB", a, b));
      lay.regions["A"] = std::move(a);
      lay.regions["B"] = std::move(b);
      lay.regions["E"] = std::move(e);
      break;
    }
    case LayoutKind::kitaev_preskill: {
      int r = params.disk_radius;
      if (r < 1) throw std::invalid_argument("disk radius must be >= 1");
      lay.thin = r < 2;
      if (lat.geometry == Geometry::torus) {
        if (2 * r > L - 2) throw std::invalid_argument("disk too large for the torus");
      } else if (ax < 0 || ay < 0 || ax + 2 * r > L - 1 || ay + 2 * r > L - 1) {
        throw std::invalid_argument("disk leaves the planar patch");
      }
      std::vector<int> disk;
      for (int dy = 0; dy < 2 * r; ++dy)
        for (int dx = 0; dx < 2 * r; ++dx)
          disk.push_back(lat.face(ax + dx, ay + dy));
      auto owner = owned_edges(lat, disk);
      Region A("A", lat.n_edges), B("B", lat.n_edges), C("C", lat.n_edges);
      for (int dy = 0; dy < 2 * r; ++dy)
        for (int dx = 0; dx < 2 * r; ++dx) {
          Region* tgt = (dx < r) ? &A : (dy >= r ? &B : &C);
          for (int e : owner[lat.face(ax + dx, ay + dy)]) tgt->add(e);
        }
      lay.regions["A"] = std::move(A);
      lay.regions["B"] = std::move(B);
      lay.regions["C"] = std::move(C);
      break;
    }
    case LayoutKind::levin_wen:
    case LayoutKind::annulus: {
      int ri = params.inner_radius, ro = params.outer_radius;
      if (ri < 1 || ro <= ri) throw std::invalid_argument("need 1 <= inner < outer radius");
      int m = ro - ri;
      lay.thin = (m < 2) || (ri < 1);
      if (lat.geometry == Geometry::torus) {
        if (2 * ro > L - 2) throw std::invalid_argument("ring too large for the torus");
      } else if (ax < 0 || ay < 0 || ax + 2 * ro > L - 1 || ay + 2 * ro > L - 1) {
        throw std::invalid_argument("ring leaves the planar patch");
      }
      auto in_hole = [&](int dx, int dy) {
        return dx >= m && dx < m + 2 * ri && dy >= m && dy < m + 2 * ri;
      };
      std::vector<int> ring;
      for (int dy = 0; dy < 2 * ro; ++dy)
        for (int dx = 0; dx < 2 * ro; ++dx)
          if (!in_hole(dx, dy)) ring.push_back(lat.face(ax + dx, ay + dy));
      if (kind == LayoutKind::annulus) {
        lay.regions["ann"] = faces_to_closed_region(lat, "ann", ring);
        break;
      }
      auto owner = owned_edges(lat, ring);
      Region left("left", lat.n_edges), right("right", lat.n_edges);
      Region top("top", lat.n_edges), bottom("bottom", lat.n_edges);
      for (int dy = 0; dy < 2 * ro; ++dy)
        for (int dx = 0; dx < 2 * ro; ++dx) {
          if (in_hole(dx, dy)) continue;
          Region* tgt = nullptr;
          if (dx < m) tgt = &left;
          else if (dx >= m + 2 * ri) tgt = &right;
          else if (dy < m) tgt = &bottom;
          else tgt = &top;
          for (int e : owner[lat.face(ax + dx, ay + dy)]) tgt->add(e);
        }
      lay.regions["left"] = std::move(left);
      lay.regions["right"] = std::move(right);
      lay.regions["top"] = std::move(top);
      lay.regions["bottom"] = std::move(bottom);
      break;
    }
    case LayoutKind::rectangle: {
      int w = params.rect_w, h = params.rect_h;
      if (w < 1 || h < 1) throw std::invalid_argument("empty rectangle");
      lay.thin = std::min(w, h) < 2;
      if (lat.geometry == Geometry::torus) {
        if (w > L - 2 || h > L - 2)
          throw std::invalid_argument("rectangle too large for the torus");
      }
      lay.regions["rect"] = face_block_edges(lat, "rect", ax, ay, w, h);
      break;
    }
  }
  return lay;
}

}  // namespace tqd
