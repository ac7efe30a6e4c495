// cli.hpp - qbw command line front end
//
//   qbw steady  [params] [--json]
//   qbw evolve  [params] --t-end T --dt DT [--stride N] [--out FILE]
//   qbw sweep   [params] --sweep NAME --from A --to B --points N [--out FILE]
//   qbw figure  ID [--out FILE] | --list
//   qbw derive  --in FILE --column NAME [--threshold X]
//
// Exit codes: 0 success, 2 usage error, 3 numerical failure.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qbw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qbw::cli
