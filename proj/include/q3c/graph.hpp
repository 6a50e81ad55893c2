#pragma once

/* The numerator graph: vertices are absolute values of cycle numerators,
 * and each map with a rational 3-cycle contributes the triangle of its three
 * numerator values.  Edges exist only inside triangles.  Components are
 * explored by solving t1 = a at each vertex (every triangle containing a
 * arises, in exactly one ordering, from a solution of that equation).
 */

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "q3c/forms.hpp"
#include "q3c/thue.hpp"

namespace q3c {

struct Triangle {
  std::array<BigInt, 3> vertices;  // sorted ascending; pairwise coprime
  ParamPair witness;               // canonical pair generating the triangle
  BigRat c;

  bool operator==(const Triangle& o) const { return vertices == o.vertices; }
  bool operator<(const Triangle& o) const { return vertices < o.vertices; }
};

Triangle triangle_of_pair(const ParamPair& p);

struct TriangleFan {
  BigInt a;
  std::vector<Triangle> triangles;  // sorted
  std::string status;               // propagated solver status
};

/* One triangle per solution of t1 = a.  Distinct solutions never repeat a
 * triangle (asserted). */
TriangleFan triangles_at(const BigInt& a, const RunConfig& cfg = {});

struct GammaGraph {
  std::set<BigInt> vertices;
  std::set<std::pair<BigInt, BigInt>> edges;  // (u,v) with u < v
  std::vector<Triangle> triangles;            // sorted, unique
  std::set<BigInt> frontier;                  // seen but not expanded
};

struct GraphLimits {
  std::size_t max_vertices = 500;
  unsigned max_bits = 256;
};

struct ComponentReport {
  BigInt root;
  std::size_t n_vertices = 0, n_edges = 0, n_triangles = 0;
  std::map<BigInt, std::size_t> tri_per_vertex;
  bool complete = false;      // false: truncated by a limit
  std::string limit_reason;   // "max_vertices" / "max_bits" when truncated
  bool certified = true;      // every expansion certified by the solver
};

/* Breadth-first closure from `a`, expanding vertices in ascending order. */
ComponentReport component_of(const BigInt& a, const GraphLimits& limits,
                             GammaGraph* out = nullptr,
                             const RunConfig& cfg = {});

struct SpecialVertex {
  BigInt a;
  std::array<ParamPair, 3> pairs;  // each satisfies t1(pair) = a
};

/* The two-parameter family of vertices meeting at least three triangles:
 * a = x^6 - 3x^5y + 5x^4y^2 - 5x^3y^3 + 5x^2y^4 - 3xy^5 + y^6
 *   = (x^2-xy+y^2)^3 - (xy(x-y))^2,
 * with witness pairs (-x^2, q), (-(x-y)^2, q), (-y^2, q) for
 * q = x^2 - xy + y^2.  Requires gcd(x,y) = 1 and xy(x-y) != 0. */
SpecialVertex special_vertex(const BigInt& x, const BigInt& y);

struct StarReport {
  BigInt a;
  std::size_t n_triangles = 0;
  std::size_t n_solutions = 0;   // orbit-merged solution count of t1 = a
  bool counts_match = false;     // conjecturally always true
  bool no_shared_edge = false;   // no two triangles at a share an edge
  /* 'y': 23 | a or some prime factor of a splits the cubic completely;
   * 'n': >= 3 triangles but no such factor; '-': < 3 triangles;
   * '?': factorization incomplete. */
  char splitting = '-';
  std::string status;
};

/* Checks the conjectured regularities of the star of a vertex. */
StarReport conjecture2_check(const BigInt& a, const RunConfig& cfg = {});

enum class GraphFormat { dot, json };
std::string export_graph(const GammaGraph& g, GraphFormat fmt);

}  // namespace q3c
