#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "golden/golden_triangles.inc"
#include "q3c/errors.hpp"
#include "q3c/graph.hpp"
#include "test_support.hpp"

using namespace q3c;

namespace {

/* "a,b,c|d,e,f" -> sorted triangle vertex triples. */
std::vector<std::array<BigInt, 3>> parse_triangles(const std::string& s) {
  std::vector<std::array<BigInt, 3>> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, '|')) {
    auto v = q3c_test::parse_longs(item);
    REQUIRE(v.size() == 3);
    out.push_back({BigInt(static_cast<long>(v[0])),
                   BigInt(static_cast<long>(v[1])),
                   BigInt(static_cast<long>(v[2]))});
  }
  return out;
}

}  // namespace

TEST_CASE("triangle_of_pair") {
  Triangle t = triangle_of_pair(ParamPair(1, 1));
  CHECK(t.vertices == std::array<BigInt, 3>{1, 5, 7});
  CHECK(t.witness == ParamPair(1, 1));
  CHECK(to_dec(t.c) == "-29/16");

  // Any orbit member gives the same triangle.
  Triangle t2 = triangle_of_pair(ParamPair(-1, 2));
  CHECK(t2.vertices == t.vertices);
  CHECK(t2.witness == t.witness);

  std::mt19937_64 g(31);
  for (int i = 0; i < 300; ++i) {
    ParamPair p = q3c_test::random_pair(g, 60);
    Triangle tr = triangle_of_pair(p);
    CHECK(std::is_sorted(tr.vertices.begin(), tr.vertices.end()));
    for (int u = 0; u < 3; ++u) {
      CHECK(tr.vertices[u] > 0);
      for (int v = u + 1; v < 3; ++v)
        CHECK(gcd(tr.vertices[u], tr.vertices[v]) == 1);
    }
  }
}

TEST_CASE("triangles_at against the recorded fans") {
  for (const GoldenTriangles& row : kGoldenTriangles) {
    INFO("a = ", row.a);
    TriangleFan fan = triangles_at(big_from(row.a));
    auto expect = parse_triangles(row.tris);
    REQUIRE(fan.triangles.size() == expect.size());
    for (size_t i = 0; i < expect.size(); ++i)
      CHECK(fan.triangles[i].vertices == expect[i]);
    CHECK(fan.status == "certified");
  }
}

TEST_CASE("component of 11 is the closed triangle {11,17,25}") {
  GammaGraph g;
  ComponentReport rep = component_of(11, {}, &g);
  CHECK(rep.complete);
  CHECK(rep.certified);
  CHECK(rep.n_vertices == 3);
  CHECK(rep.n_edges == 3);
  CHECK(rep.n_triangles == 1);
  CHECK(g.vertices == std::set<BigInt>{11, 17, 25});
  CHECK(g.frontier.empty());
  CHECK(g.edges == std::set<std::pair<BigInt, BigInt>>{
                       {11, 17}, {11, 25}, {17, 25}});
  for (auto& [v, cnt] : rep.tri_per_vertex) CHECK(cnt == 1);
}

TEST_CASE("vertex limit truncates deterministically") {
  GraphLimits lim;
  lim.max_vertices = 4;
  GammaGraph g;
  ComponentReport rep = component_of(1, lim, &g);
  CHECK_FALSE(rep.complete);
  CHECK(rep.limit_reason == "max_vertices");
  CHECK(rep.n_vertices > 4);  // the offending expansion is kept
  CHECK(!g.frontier.empty());
}

TEST_CASE("bit limit stops before oversized vertices") {
  GraphLimits lim;
  lim.max_bits = 8;  // nothing above 255 may be expanded
  GammaGraph g;
  ComponentReport rep = component_of(1, lim, &g);
  CHECK_FALSE(rep.complete);
  CHECK(rep.limit_reason == "max_bits");
  // 223 and 295 are seen; 295 (9 bits) must stay frontier.
  CHECK(g.vertices.count(295) == 1);
  CHECK(g.frontier.count(295) == 1);
}

TEST_CASE("special_vertex") {
  SpecialVertex sv = special_vertex(2, 1);
  CHECK(sv.a == 23);
  CHECK(sv.pairs[0] == ParamPair(-4, 3));
  CHECK(sv.pairs[1] == ParamPair(-1, 3));
  CHECK(sv.pairs[2] == ParamPair(-1, 3));  // duplicates are expected
  for (const ParamPair& p : sv.pairs) CHECK(eval_t(1, p) == 23);

  // (3,1): q = 7, w = 6, a = 343 - 36 = 307 with all three witnesses.
  SpecialVertex sv307 = special_vertex(3, 1);
  CHECK(sv307.a == 307);
  CHECK(sv307.pairs[0] == ParamPair(-9, 7));
  CHECK(sv307.pairs[1] == ParamPair(-4, 7));
  CHECK(sv307.pairs[2] == ParamPair(-1, 7));

  CHECK_THROWS_AS(special_vertex(2, 4), domain_error);   // gcd != 1
  CHECK_THROWS_AS(special_vertex(0, 1), domain_error);   // xy(x-y) = 0
  CHECK_THROWS_AS(special_vertex(1, 1), domain_error);   // x = y
  CHECK_THROWS_AS(special_vertex(3, 0), domain_error);

  std::mt19937_64 g(32);
  for (int i = 0; i < 100; ++i) {
    long x = static_cast<long>(g() % 30) + 1;
    long y = static_cast<long>(g() % 30) + 1;
    if (x == y || gcd(BigInt(x), BigInt(y)) != 1) continue;
    SpecialVertex s = special_vertex(x, y);
    for (const ParamPair& p : s.pairs) CHECK(eval_t(1, p) == s.a);
  }
}

TEST_CASE("conjecture2_check on small stars") {
  StarReport r307 = conjecture2_check(307);
  CHECK(r307.a == 307);
  CHECK(r307.n_solutions == 4);
  CHECK(r307.n_triangles == 4);
  CHECK(r307.counts_match);
  CHECK(r307.no_shared_edge);
  CHECK(r307.splitting == 'y');

  StarReport r23 = conjecture2_check(23);
  CHECK(r23.n_triangles == 2);
  CHECK(r23.splitting == '-');  // below the three-triangle threshold
  CHECK(r23.no_shared_edge);

  StarReport r11 = conjecture2_check(11);
  CHECK(r11.n_triangles == 1);
  CHECK(r11.counts_match);
}

TEST_CASE("export formats") {
  GammaGraph g;
  component_of(11, {}, &g);

  std::string dot = export_graph(g, GraphFormat::dot);
  CHECK(dot.find("graph numerators {") != std::string::npos);
  CHECK(dot.find("11 -- 17;") != std::string::npos);
  CHECK(dot.find("11 -- 25;") != std::string::npos);
  CHECK(dot.find("17 -- 25;") != std::string::npos);

  std::string js = export_graph(g, GraphFormat::json);
  auto parsed = nlohmann::json::parse(js);
  CHECK(parsed["vertices"] == nlohmann::json::array({"11", "17", "25"}));
  CHECK(parsed["edges"].size() == 3);
  CHECK(parsed["triangles"].size() == 1);
  CHECK(parsed["triangles"][0]["vertices"] ==
        nlohmann::json::array({"11", "17", "25"}));
}
