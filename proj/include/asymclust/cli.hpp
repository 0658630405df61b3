#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asymclust {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerification = 2;

// Subcommands: cluster, ingest, trust, verify, compare. Machine-readable
// output goes to out, diagnostics to err. args excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace asymclust
