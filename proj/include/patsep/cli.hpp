#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace patsep::cli {

// Process exit codes. Verdict codes first so pipelines can branch on them.
inline constexpr int exit_yes = 0;
inline constexpr int exit_no = 1;
inline constexpr int exit_unknown = 2;
inline constexpr int exit_usage = 10;
inline constexpr int exit_input = 11;
inline constexpr int exit_resource = 12;
inline constexpr int exit_internal = 13;

/// Runs one command line. `args` excludes the program name. A FILE argument
/// of "-" reads from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// Regression tables behind `bench`. The figures suite is deterministic and
/// byte-stable.
std::string bench_figures();
std::string bench_random(std::size_t instances, unsigned long long first_seed);
std::string bench_reductions(std::size_t graphs, unsigned long long first_seed);

}  // namespace patsep::cli
