// Subcommands; each writes a KEY = value report and returns the process exit status.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "noriq_cli/io.hpp"

namespace noriq::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitInput = 2;

int cmd_cohomology(const fs::path& pair, std::optional<int> degree, std::ostream& out);
// wedge/smash/cone/suspend take pair files, cylinder one map file, pushout two map files.
int cmd_build(const std::string& op, const std::vector<fs::path>& inputs, const std::optional<fs::path>& output,
              std::ostream& out);
int cmd_commutant(const fs::path& quiver, std::ostream& out);
int cmd_normalize(const fs::path& quiver, bool verify, std::ostream& out);
int cmd_present(const fs::path& quiver, const std::string& module, const std::string& mode, std::ostream& out);
// corpus is a directory holding manifest.json or the manifest itself; a missing manifest is an empty corpus.
int cmd_selftest(const fs::path& corpus, std::uint64_t seed, std::ostream& out);

// Parses argv and dispatches; input errors go to err with status 2.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace noriq::cli
