#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kstab/dfcalc.hpp"
#include "kstab/geometry.hpp"

namespace kstab::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kMathFailure = 1,  ///< verification failed, hypothesis not met, invalid subgroup
    kUsageError = 2,   ///< bad flags, unreadable or malformed input
};

struct SweepRequest {
    NormalForm nf;
    unsigned d_max;
    unsigned e_max;
};

struct SweepCell {
    unsigned d;
    unsigned e;
    Rational df;
};

/// DF of the destabilizer for every (d, e) in [1, d_max] x [1, e_max], row-major
/// in d then e. Each cell runs the full two-route pipeline. Cells are spread over
/// `workers` threads; the result order does not depend on the worker count.
/// Throws whatever decide_instability throws, or MethodInapplicable when it is inconclusive.
std::vector<SweepCell> sweep(const SweepRequest& request, std::size_t workers);

/// Reads a CSV matrix of rationals ("p/q" or integers), rows = x variables,
/// columns = y variables. Blank lines and lines starting with '#' are skipped.
BilinearForm parse_matrix_csv(std::string_view text);

/// Runs the kstab command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kstab::cli
