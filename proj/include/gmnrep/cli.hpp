#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "gmnrep/json_io.hpp"

namespace gmnrep {

/// Exit codes: 0 success, 1 a check failed, 2 bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Indented plain-text rendering of a JSON document.
std::string render_text(const json& doc);

/// Certificates for one (m, n). checks is a subset of
/// relations, jm, form, branching, idempotents, affine, intertwiners, completeness.
json verify_suite(int m, int n, const std::vector<std::string>& checks);

}  // namespace gmnrep
