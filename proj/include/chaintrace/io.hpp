#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "chaintrace/certify.hpp"
#include "chaintrace/chain.hpp"
#include "chaintrace/coloring.hpp"
#include "chaintrace/limits.hpp"
#include "chaintrace/torus.hpp"

namespace chaintrace::io {

using Json = nlohmann::ordered_json;

// Decimal value with 12 significant digits; all real output goes through it.
double round12(double v);

Json to_json(const Coloring& c);
Json to_json(const Chain& chain);
Json to_json(const PointSet& set);
Json to_json(const LsApprox& ls);
Json to_json(const CertificateReport& report);
Json to_json(const std::vector<TorusCycle>& cycles, const Coloring& c);

// Readers throw Error(BadInput) on schema violations, and the coloring
// constructor's errors on bad matrices.
Coloring coloring_from_json(const Json& j);
Chain chain_from_json(const Json& j);
PointSet point_set_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace chaintrace::io
