#include "q3c/json_out.hpp"

namespace q3c {

namespace {

ojson pair_json(const ParamPair& p) {
  return ojson::array({to_dec(p.m), to_dec(p.n)});
}

ojson cycle_json(const FpCycle& c) {
  ojson j;
  j["elements"] = c.elements;
  j["m"] = c.m();
  j["mu"] = c.mu;
  j["r"] = c.r;
  return j;
}

}  // namespace

ojson json_cycle(const CycleData& cd) {
  CVal cv = c_of_pair(cd.pair);
  ojson j;
  j["m"] = to_dec(cd.pair.m);
  j["n"] = to_dec(cd.pair.n);
  j["c"] = to_dec(cd.c);
  j["A"] = to_dec(cv.A);
  j["B"] = to_dec(cv.B);
  j["C"] = to_dec(cv.C);
  j["t"] = ojson::array({to_dec(eval_t(1, cd.pair)), to_dec(eval_t(2, cd.pair)),
                         to_dec(eval_t(3, cd.pair))});
  j["xs"] = ojson::array();
  for (const BigRat& x : cd.xs) j["xs"].push_back(to_dec(x));
  return j;
}

ojson json_thue(const ThueResult& r) {
  ojson j;
  j["a"] = to_dec(r.a);
  j["solutions"] = ojson::array();
  for (const ParamPair& p : r.solutions) j["solutions"].push_back(pair_json(p));
  j["status"] = r.status;
  j["certificates"] = ojson::array();
  for (const MTCertificate& c : r.certificates) {
    ojson jc;
    jc["p"] = c.p;
    jc["S"] = c.S;
    jc["M"] = c.M;
    jc["roots"] = ojson::array();
    for (const BigInt& g : c.roots) jc["roots"].push_back(to_dec(g));
    jc["alphas"] = ojson::array();
    for (const BigInt& a : c.alphas) jc["alphas"].push_back(to_dec(a));
    jc["residues"] = ojson::object();
    for (const auto& [m, res] : c.residues_mod_p2)
      jc["residues"][std::to_string(m)] = to_dec(res);
    j["certificates"].push_back(jc);
  }
  return j;
}

ojson json_solve_A(const BigInt& k, const std::vector<ParamPair>& sols) {
  ojson j;
  j["k"] = to_dec(k);
  j["count"] = sols.size();
  j["solutions"] = ojson::array();
  for (const ParamPair& p : sols) j["solutions"].push_back(pair_json(p));
  return j;
}

ojson json_component(const ComponentReport& rep, const GammaGraph& g) {
  ojson j;
  j["root"] = to_dec(rep.root);
  j["vertices"] = ojson::array();
  for (const BigInt& v : g.vertices) j["vertices"].push_back(to_dec(v));
  j["triangles"] = ojson::array();
  for (const Triangle& t : g.triangles) {
    ojson jt;
    jt["vertices"] = ojson::array();
    for (const BigInt& v : t.vertices) jt["vertices"].push_back(to_dec(v));
    jt["witness"] = pair_json(t.witness);
    jt["c"] = to_dec(t.c);
    j["triangles"].push_back(jt);
  }
  std::string status;
  if (!rep.complete)
    status = "truncated-" + rep.limit_reason;
  else
    status = rep.certified ? "certified" : "window-heuristic";
  j["status"] = status;
  j["n_vertices"] = rep.n_vertices;
  j["n_edges"] = rep.n_edges;
  j["n_triangles"] = rep.n_triangles;
  return j;
}

ojson json_cycles_mod_p(std::uint64_t p, std::uint64_t c,
                        const std::vector<FpCycle>& cycles) {
  ojson j;
  j["p"] = p;
  j["c"] = c;
  j["cycles"] = ojson::array();
  for (const FpCycle& cyc : cycles) j["cycles"].push_back(cycle_json(cyc));
  return j;
}

ojson json_exclude(const ExcludeReport& rep) {
  ojson j;
  j["m"] = to_dec(rep.pair.m);
  j["n"] = to_dec(rep.pair.n);
  j["primes_used"] = rep.primes_used;
  j["primes_skipped"] = rep.primes_skipped;
  j["poonen"] = rep.poonen;
  j["remaining"] = rep.remaining;
  j["remaining_tails"] = ojson::array();
  for (const PeriodTail& t : rep.remaining_tails) {
    ojson jt;
    jt["base"] = t.base;
    jt["p"] = t.p;
    jt["capped"] = t.capped;
    j["remaining_tails"].push_back(jt);
  }
  j["only3"] = rep.only3;
  j["verdict"] = rep.only3 ? "only-3-proven" : "inconclusive";
  return j;
}

ojson json_table2(const std::vector<Table2Row>& rows) {
  ojson j;
  j["p"] = 29;
  j["rows"] = ojson::array();
  for (const Table2Row& r : rows) {
    ojson jr;
    jr["c"] = r.c;
    jr["cycle"] = cycle_json(r.cycle);
    jr["n_candidates"] = r.n_candidates;
    j["rows"].push_back(jr);
  }
  return j;
}

ojson json_shape(const ShapeDetail& d) {
  ojson j;
  j["p"] = d.p;
  j["N"] = d.N;
  j["cs"] = d.cs;
  j["bound"] = to_dec(d.bound);
  j["within"] = d.within;
  j["equality"] = d.equality;
  return j;
}

ojson json_star(const StarReport& rep) {
  ojson j;
  j["a"] = to_dec(rep.a);
  j["n_triangles"] = rep.n_triangles;
  j["n_solutions"] = rep.n_solutions;
  j["counts_match"] = rep.counts_match;
  j["no_shared_edge"] = rep.no_shared_edge;
  j["splitting"] = std::string(1, rep.splitting);
  j["status"] = rep.status;
  return j;
}

ojson json_special(const SpecialVertex& sv) {
  ojson j;
  j["a"] = to_dec(sv.a);
  j["pairs"] = ojson::array();
  for (const ParamPair& p : sv.pairs) j["pairs"].push_back(pair_json(p));
  return j;
}

ojson json_class_report(const ClassReport& rep) {
  ojson j;
  j["value"] = to_dec(rep.value);
  j["parts"] = ojson::array();
  for (const FactorClass& fc : rep.parts) {
    ojson jf;
    jf["value"] = to_dec(fc.value);
    jf["exp"] = fc.exp;
    jf["code"] = std::string(1, fc.code);
    j["parts"].push_back(jf);
  }
  j["conforms"] = rep.conforms;
  j["complete"] = rep.complete;
  return j;
}

}  // namespace q3c
