#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace casimir {

// Ordered table of sweep results plus the metadata needed to reproduce
// the run. Serialization is deterministic: fixed row order and fixed
// 17-significant-digit scientific formatting, independent of how many
// threads computed the rows.
struct SweepProfile {
    std::string parameter_name;
    std::vector<std::string> columns;  // first column is the swept parameter
    std::vector<std::vector<double>> rows;
    std::vector<bool> row_converged;   // one flag per row; failures are flagged, never dropped
    std::vector<std::pair<std::string, std::string>> metadata;  // emitted as "# key: value"

    bool all_converged() const;

    // '#'-prefixed metadata lines, a header line with a trailing status
    // column, then one line per row with status ok|nonconverged.
    std::string to_csv() const;
};

// 17 significant digits, scientific notation; round-trips any double.
std::string format_full(double value);

enum class ExecMode { Serial, Parallel };

// Runs body(i) for every i in [0, n). Parallel mode fans out across
// OpenMP threads when available (serial otherwise); results must be
// written through the index so the output is identical between modes.
// Exceptions from worker iterations are captured and rethrown on the
// calling thread.
void for_each_index(std::size_t n, ExecMode mode,
                    const std::function<void(std::size_t)>& body);

}  // namespace casimir
