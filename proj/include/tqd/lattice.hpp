#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tqd {

enum class Geometry { torus, planar };

// Square lattice with qubits on edges. Torus: L x L vertices, all
// coordinates wrap mod L. Planar: L x L vertices, open boundary, so
// horizontal edges need x < L-1 and vertical edges need y < L-1.
//
// Conventions used throughout:
//   h(x,y) joins vertices (x,y)-(x+1,y);  v(x,y) joins (x,y)-(x,y+1).
//   face(x,y) has corners (x,y),(x+1,y),(x,y+1),(x+1,y+1); its edge set is
//   bottom h(x,y), top h(x,y+1), left v(x,y), right v(x+1,y).
//   star(x,y) = { h(x,y), h(x-1,y), v(x,y), v(x,y-1) } clipped at a boundary.
struct Lattice {
  Geometry geometry = Geometry::torus;
  int L = 0;
  int n_edges = 0;
  int n_vertices = 0;
  int n_faces = 0;

  int vertex(int x, int y) const;
  int h_edge(int x, int y) const;
  int v_edge(int x, int y) const;
  int face(int x, int y) const;

  std::array<int, 2> vertex_xy(int v) const;
  std::array<int, 2> face_xy(int f) const;
  // (is_vertical, x, y)
  std::array<int, 3> edge_desc(int e) const;
  std::array<int, 2> edge_endpoints(int e) const;

  // Edges incident to the vertex / bounding the face. 3 or 2 of the four
  // may survive clipping on a planar boundary.
  std::vector<int> star_edges(int v) const;
  std::vector<int> plaquette_edges(int f) const;

  // Graph distance between vertices (Manhattan, wrapped on the torus).
  int vertex_distance(int a, int b) const;

 private:
  int wrap(int c) const;
};

Lattice build_lattice(Geometry g, int L);

// Subset of edges.
struct Region {
  std::string name;
  std::vector<std::uint8_t> mask;

  Region() = default;
  Region(std::string nm, int n_edges) : name(std::move(nm)), mask(n_edges, 0) {}

  bool contains(int e) const { return mask[static_cast<std::size_t>(e)] != 0; }
  void add(int e) { mask[static_cast<std::size_t>(e)] = 1; }
  int count() const;
  std::vector<int> edges() const;
};

Region region_union(const std::string& name, const Region& a, const Region& b);
Region region_complement(const std::string& name, const Region& a);
bool regions_disjoint(const Region& a, const Region& b);

// Number of star + plaquette generators whose edge set straddles the cut.
int boundary_size(const Lattice& lat, const Region& r);
// Connected components of the straddling generators (two cut generators are
// adjacent when their edge sets intersect). Distinguishes disk from annulus.
int boundary_components(const Lattice& lat, const Region& r);

// All edges of the w x h block of faces anchored at face (x0,y0): the
// closed edge set (interior plus perimeter).
Region face_block_edges(const Lattice& lat, const std::string& name,
                        int x0, int y0, int w, int h);

// Partition of the closed edge set of a face set among its faces. Each edge
// is owned by its upper / right face when that face is in the set, else by
// the lower / left one. Input and output are face-id keyed.
std::map<int, std::vector<int>> owned_edges(const Lattice& lat,
                                            const std::vector<int>& faces);

enum class LayoutKind { two_blob, kitaev_preskill, levin_wen, annulus, rectangle };

struct LayoutParams {
  // two_blob
  std::array<int, 2> center_a{2, 2};
  std::array<int, 2> center_b{-1, -1};  // default: opposite corner of the torus
  int radius = 1;                       // 0 selects the star+face site blob
  int min_separation = 4;

  // anchor of the face block for the disk / ring / rectangle layouts
  std::array<int, 2> anchor{1, 1};
  int disk_radius = 2;   // kitaev_preskill: disk is 2r x 2r faces
  int inner_radius = 1;  // levin_wen / annulus hole: 2*ri x 2*ri faces
  int outer_radius = 3;  // levin_wen / annulus outer block: 2*ro x 2*ro faces
  int rect_w = 4;
  int rect_h = 4;
};

struct RegionLayout {
  LayoutKind kind = LayoutKind::two_blob;
  Lattice lat;
  LayoutParams params;
  std::map<std::string, Region> regions;
  // two_blob: min vertex distance between the blobs' vertex sets
  int separation = -1;
  // two_blob on the torus: blob touches the row-0 / col-0 logical supports
  bool overlaps_logical = false;
  // any strip of the layout thinner than 2 faces
  bool thin = false;
};

// Constructs and validates one of the named layouts. Throws
// std::invalid_argument when the layout does not fit the lattice or the
// pieces collide.
RegionLayout make_layout(const Lattice& lat, LayoutKind kind,
                         const LayoutParams& params);

// Ball blob: edges with an endpoint within distance r of the center
// (r >= 1). r = 0 gives the site blob star(c) + plaquette(face at c).
Region blob_region(const Lattice& lat, const std::string& name,
                   std::array<int, 2> center, int radius);

}  // namespace tqd
