#include "q3c/graph.hpp"

#include <algorithm>
#include <sstream>

#include "q3c/errors.hpp"
#include "q3c/json_out.hpp"

namespace q3c {

Triangle triangle_of_pair(const ParamPair& p) {
  Triangle tri{{q3c::abs(eval_t(1, p)), q3c::abs(eval_t(2, p)),
                q3c::abs(eval_t(3, p))},
               canonical_pair(p), c_of_pair(p).c};
  std::sort(tri.vertices.begin(), tri.vertices.end());
  for (int i = 0; i < 3; ++i)
    invariant(gcd(tri.vertices[static_cast<size_t>(i)],
                  tri.vertices[static_cast<size_t>((i + 1) % 3)]) == 1,
              "triangle vertices must be pairwise coprime");
  return tri;
}

TriangleFan triangles_at(const BigInt& a, const RunConfig& cfg) {
  require(a > 0, "vertex must be positive");
  ThueResult res = solve_t1(a, cfg);
  TriangleFan fan;
  fan.a = a;
  fan.status = res.status;
  for (const ParamPair& p : res.solutions)
    fan.triangles.push_back(triangle_of_pair(p));
  std::sort(fan.triangles.begin(), fan.triangles.end());
  invariant(std::adjacent_find(fan.triangles.begin(), fan.triangles.end()) ==
                fan.triangles.end(),
            "distinct solutions repeated a triangle");
  for (const Triangle& t : fan.triangles)
    invariant(std::find(t.vertices.begin(), t.vertices.end(), a) !=
                  t.vertices.end(),
              "triangle does not contain its vertex");
  return fan;
}

ComponentReport component_of(const BigInt& a, const GraphLimits& limits,
                             GammaGraph* out, const RunConfig& cfg) {
  require(a > 0, "root must be positive");
  ComponentReport rep;
  rep.root = a;
  GammaGraph g;
  g.vertices.insert(a);
  std::set<BigInt> expanded;
  std::set<Triangle> triangles;
  rep.complete = true;
  while (true) {
    // Smallest vertex not yet expanded.
    const BigInt* next = nullptr;
    for (const BigInt& v : g.vertices) {
      if (expanded.find(v) == expanded.end()) { next = &v; break; }
    }
    if (!next) break;  // closure reached
    if (g.vertices.size() > limits.max_vertices) {
      rep.complete = false;
      rep.limit_reason = "max_vertices";
      break;
    }
    if (bit_length(*next) > limits.max_bits) {
      // Ascending order: every remaining vertex is at least this wide.
      rep.complete = false;
      rep.limit_reason = "max_bits";
      break;
    }
    BigInt v = *next;
    TriangleFan fan = triangles_at(v, cfg);
    if (fan.status != "certified") rep.certified = false;
    expanded.insert(v);
    for (const Triangle& t : fan.triangles) {
      triangles.insert(t);
      for (const BigInt& u : t.vertices) g.vertices.insert(u);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const BigInt& x = t.vertices[static_cast<size_t>(i)];
          const BigInt& y = t.vertices[static_cast<size_t>(j)];
          g.edges.emplace(std::min(x, y), std::max(x, y));
        }
    }
  }
  for (const BigInt& v : g.vertices)
    if (expanded.find(v) == expanded.end()) g.frontier.insert(v);
  g.triangles.assign(triangles.begin(), triangles.end());
  rep.n_vertices = g.vertices.size();
  rep.n_edges = g.edges.size();
  rep.n_triangles = g.triangles.size();
  for (const Triangle& t : g.triangles)
    for (const BigInt& u : t.vertices) ++rep.tri_per_vertex[u];
  if (out) *out = std::move(g);
  return rep;
}

SpecialVertex special_vertex(const BigInt& x, const BigInt& y) {
  require(gcd(x, y) == 1, "family parameters must be coprime");
  require(x != 0 && y != 0 && x != y, "family parameters must have x*y*(x-y) != 0");
  BigInt x2 = x * x, y2 = y * y;
  BigInt q = x2 - x * y + y2;
  BigInt w = x * y * (x - y);
  BigInt a = q * q * q - w * w;
  // Same value by the expanded sextic; both forms are kept as a cross-check.
  BigInt a2 = pow_ui(x, 6) - 3 * pow_ui(x, 5) * y + 5 * pow_ui(x, 4) * y2 -
              5 * x * x * x * y * y2 + 5 * x2 * y2 * y2 - 3 * x * pow_ui(y, 5) +
              pow_ui(y, 6);
  invariant(a == a2, "family value mismatch between product and sextic form");
  SpecialVertex sv{a,
                   {ParamPair(-x2, q), ParamPair(-(x - y) * (x - y), q),
                    ParamPair(-y2, q)}};
  for (const ParamPair& p : sv.pairs)
    invariant(eval_t(1, p) == a, "family witness does not solve t1 = a");
  return sv;
}

StarReport conjecture2_check(const BigInt& a, const RunConfig& cfg) {
  require(a > 0, "vertex must be positive");
  StarReport rep;
  rep.a = a;
  ThueResult res = solve_t1(a, cfg);
  rep.status = res.status;
  rep.n_solutions = res.solutions.size();
  std::set<Triangle> tris;
  for (const ParamPair& p : res.solutions) tris.insert(triangle_of_pair(p));
  rep.n_triangles = tris.size();
  rep.counts_match = rep.n_triangles == rep.n_solutions;
  rep.no_shared_edge = true;
  for (auto it = tris.begin(); it != tris.end(); ++it)
    for (auto jt = std::next(it); jt != tris.end(); ++jt) {
      int common = 0;
      for (const BigInt& u : it->vertices)
        for (const BigInt& v : jt->vertices)
          if (u == v) ++common;
      if (common >= 2) rep.no_shared_edge = false;
    }
  if (rep.n_triangles < 3) {
    rep.splitting = '-';
  } else {
    Factorization f = factorize(a, cfg.rho_budget);
    if (!f.complete) {
      rep.splitting = '?';
    } else {
      bool split = false;
      for (const auto& [q, e] : f.factors) {
        (void)e;
        if (q == 23 || cubic_root_count_mod(q) == 3) { split = true; break; }
      }
      rep.splitting = split ? 'y' : 'n';
    }
  }
  return rep;
}

std::string export_graph(const GammaGraph& g, GraphFormat fmt) {
  if (fmt == GraphFormat::dot) {
    std::ostringstream os;
    os << "graph numerators {\n";
    for (const BigInt& v : g.vertices) {
      if (g.frontier.count(v)) os << "  " << to_dec(v) << " [shape=box];\n";
      else os << "  " << to_dec(v) << ";\n";
    }
    for (const auto& [u, v] : g.edges)
      os << "  " << to_dec(u) << " -- " << to_dec(v) << ";\n";
    os << "}\n";
    return os.str();
  }
  ojson j;
  j["vertices"] = ojson::array();
  for (const BigInt& v : g.vertices) j["vertices"].push_back(to_dec(v));
  j["edges"] = ojson::array();
  for (const auto& [u, v] : g.edges)
    j["edges"].push_back(ojson::array({to_dec(u), to_dec(v)}));
  j["triangles"] = ojson::array();
  for (const Triangle& t : g.triangles) {
    ojson jt;
    jt["vertices"] = ojson::array();
    for (const BigInt& v : t.vertices) jt["vertices"].push_back(to_dec(v));
    jt["witness"] = ojson::array(
        {to_dec(t.witness.m), to_dec(t.witness.n)});
    jt["c"] = to_dec(t.c);
    j["triangles"].push_back(jt);
  }
  j["frontier"] = ojson::array();
  for (const BigInt& v : g.frontier) j["frontier"].push_back(to_dec(v));
  return j.dump(2) + "\n";
}

}  // namespace q3c
