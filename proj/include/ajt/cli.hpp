#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ajt/apsets.hpp"
#include "ajt/matrix.hpp"
#include "ajt/properties.hpp"
#include "json.hpp"

namespace ajt {

// Exit-code contract of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInput = 2, kExitBudget = 3 };

// args excludes the program name. Reports go to `out` unless --output is
// given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// {"p": int, "n": int, "rows": [[int, ...], ...]}. Throws InputError.
FpMatrix matrix_from_json(const nlohmann::json& j);
// {"p": int, "elements": [int, ...]}.
ResidueSet set_from_json(const nlohmann::json& j);
nlohmann::json set_json(const ResidueSet& s);
// {"c": [[...], ...], "d": [[...], ...]}.
ForbiddenSpec forbidden_from_json(const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

// CSV of the array at `key` (flat objects, one row each), or key,value rows
// for the top-level scalars when `key` is empty. `columns` fixes the column
// order; by default the keys of the first row are used.
std::string render_csv(const nlohmann::json& report, const std::string& key,
                       const std::vector<std::string>& columns = {});
// Same cells, space-aligned.
std::string render_table(const nlohmann::json& report, const std::string& key,
                         const std::vector<std::string>& columns = {});

}  // namespace ajt
