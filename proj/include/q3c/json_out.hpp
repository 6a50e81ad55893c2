#pragma once

/* JSON emission helpers.  Field order is fixed (ordered_json), integers that
 * may exceed word size are decimal strings, rationals are "num/den" with
 * den > 0.  Floats never appear. */

#include <json.hpp>

#include "q3c/cubic.hpp"
#include "q3c/forms.hpp"
#include "q3c/graph.hpp"
#include "q3c/padic.hpp"
#include "q3c/thue.hpp"

namespace q3c {

using ojson = nlohmann::ordered_json;

ojson json_cycle(const CycleData& cd);
ojson json_thue(const ThueResult& r);
ojson json_solve_A(const BigInt& k, const std::vector<ParamPair>& sols);
ojson json_component(const ComponentReport& rep, const GammaGraph& g);
ojson json_cycles_mod_p(std::uint64_t p, std::uint64_t c,
                        const std::vector<FpCycle>& cycles);
ojson json_exclude(const ExcludeReport& rep);
ojson json_table2(const std::vector<Table2Row>& rows);
ojson json_shape(const ShapeDetail& d);
ojson json_star(const StarReport& rep);
ojson json_special(const SpecialVertex& sv);
ojson json_class_report(const ClassReport& rep);

}  // namespace q3c
