#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "tsunami/config.hpp"
#include "tsunami/shock.hpp"

namespace tsunami {

enum class Command { profile, shock, sweep, fvm, criterion, annex };

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitPartial = 4;

/// One summary row.
struct CaseSummary {
    double k = 0.0;
    double phi_deg = 0.0;
    ReferenceState reference;
    bool admissible = false;
    std::string outcome;          ///< surface, exhausted, time_limit, not_admissible, not_tracked
    double arrival_time = 0.0;    ///< meaningful for outcome == surface
    double exhaustion_depth = 0.0;///< meaningful for outcome == exhausted
    double min_lower_margin = 0.0;///< min over samples of speed - c(q0(z))
    double min_upper_margin = 0.0;///< min over samples of A - speed
    bool tracked = false;
    std::string status = "ok";
};

/// Runs a single (k, phi) case into `directory`. Files of a failed case are removed.
CaseSummary run_case(const RunConfig& config, double k, double phi_deg,
                     const std::filesystem::path& directory, bool track);

void write_summary(const std::vector<CaseSummary>& rows, const std::filesystem::path& file);

/// Executes a subcommand and returns the process exit status. Diagnostics go to `log`.
int run(const RunConfig& config, Command command, std::ostream& log);

} // namespace tsunami
