#pragma once

#include <optional>
#include <string>
#include <vector>

#include "critfix/algebra.hpp"
#include "critfix/planar_map.hpp"

namespace critfix {

// Rays from a base point b to every vertex, realized inside a refined map K.
// K contains G (edges subdivided where rays cross them), the base vertex b and the ray edges.
// G darts keep their ids in K; every other K dart is new.
struct RaySystem {
  PlanarMap graph;  // G
  int base_face = -1;
  int start_dart = -1;  // G dart naming the first corner visited on the base face

  PlanarMap K;
  int base_dart = -1;  // a K dart at b; the dart of ray 1

  // per ray, in counterclockwise order at b (ray i ends at vertex v_{i+1})
  std::vector<int> vertex;        // G vertex id
  std::vector<int> b_dart;        // K dart of the ray at b
  std::vector<int> end_dart;      // K dart of the ray at its vertex
  std::vector<int> corner;        // G dart following the ray counterclockwise at its vertex
  std::vector<std::vector<int>> crossed;     // G edge ids crossed, from b outward
  std::vector<std::vector<int>> crossing_vertex_dart;  // per crossing: the incoming ray dart at the crossing vertex

  // K dart annotations
  std::vector<int> k_edge;     // G edge id, or -1 on ray darts
  std::vector<int> k_segment;  // segment index along the G edge (from the origin of its least dart)
  std::vector<int> k_ray;      // ray index, or -1 on G segments
  std::vector<int> segments;   // per G edge: number of segments

  int ray_count() const { return static_cast<int>(vertex.size()); }
  // ray index of a G vertex
  int ray_of_vertex(int v) const;
};

// Faces of G considered for the base point: default picks the face with the most distinct
// vertices, ties broken by least dart.
int default_base_face(const PlanarMap& g);

RaySystem choose_rays(const PlanarMap& g, int base_face = -1, int start_dart = -1);

struct EdgeLabeling {
  std::vector<int> label;        // G edge id -> 2..d
  std::vector<int> edge_of;      // label -> G edge id (entries 0,1 unused, -1)
  int degree() const { return static_cast<int>(label.size()) + 1; }
};

EdgeLabeling label_preimages(const RaySystem& rays);

// one crossing of the generator loop with a G edge
struct Crossing {
  int label;    // 2..d
  int segment;  // segment index along the edge
};

// the G-edge crossings of the loop around v_{i+1}: out along the right side of the ray,
// counterclockwise around the vertex, back along the left side
std::vector<Crossing> loop_crossings(const RaySystem& rays, const EdgeLabeling& lab, int i);

// traced monodromy, one permutation per generator
std::vector<Perm> monodromy(const RaySystem& rays, const EdgeLabeling& lab);
// closed-form rule valid when every vertex lies on the base face; nullopt otherwise
std::optional<std::vector<Perm>> base_face_monodromy(const RaySystem& rays, const EdgeLabeling& lab);

struct WreathRecursion {
  int n = 0;
  int d = 0;
  std::vector<WreathElement> entries;  // Phi(g_1) ... Phi(g_n)
  std::string to_string(const std::string& alphabet = "") const;
};

WreathRecursion wreath_recursion(const RaySystem& rays, const EdgeLabeling& lab);
WreathRecursion wreath_recursion(const PlanarMap& g);

// word read from the loop around v_{i+1} itself (calibration: equals g_{i+1})
Word read_generator_loop(const RaySystem& rays, int i);

// violations of the two shortcut rules for trivial words
std::vector<std::string> shortcut_violations(const RaySystem& rays, const EdgeLabeling& lab,
                                             const WreathRecursion& rec);

// ordered product Phi(g_1)...Phi(g_n)
WreathElement recursion_product(const WreathRecursion& rec);
bool product_is_trivial(const WreathRecursion& rec);

// degree of the invariant curve around the simple edge uv
int invariant_curve_degree(const PlanarMap& g, int u, int v);
bool is_rational(const PlanarMap& g);

}  // namespace critfix
