#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace twostep::cli {

/// Exit code contract: 0 success, 1 usage error, 2 parse or validation
/// error, 3 internal invariant violation.
enum ExitCode : int { kOk = 0, kUsage = 1, kBadInput = 2, kInternal = 3 };

struct GlobalOptions {
    bool machine = false;  ///< emit the machine-readable mirror only
    std::uint64_t seed = 0;
    std::optional<int> oracle_budget;
};

int cmd_validate(const std::string& path, const GlobalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_invariants(const std::string& path, const GlobalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_decompose(const std::string& path, const GlobalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_dual(int q, const std::string& relations, const std::optional<std::string>& out_path, bool primal,
             const GlobalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_catalog_list(const GlobalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_catalog_show(const std::string& id, const GlobalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_catalog_export(const std::string& dir, const GlobalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_classify(const std::string& path, const GlobalOptions& opt, std::ostream& out, std::ostream& err);

/// Full argv entry point used by main().
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace twostep::cli
