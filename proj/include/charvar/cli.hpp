#pragma once

// The `charvar` command line. Exit codes: 0 success, 1 internal check or
// assertion failure, 2 invalid input (an {"error": ...} document is printed),
// 64 usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include "charvar/charvar.hpp"
#include "charvar/serialize.hpp"

namespace charvar::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitUsage = 64;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Surface description from the --punctures document. `genus` and `rank`
/// come from the flags (-1 when absent).
SurfaceData parse_surface(const Json& punctures, int genus, int rank);

}  // namespace charvar::cli
