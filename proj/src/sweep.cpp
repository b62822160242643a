#include "casimir/sweep.hpp"

#include <cstdio>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace casimir {

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", value);
    return buf;
}

bool SweepProfile::all_converged() const {
    for (bool ok : row_converged)
        if (!ok) return false;
    return true;
}

std::string SweepProfile::to_csv() const {
    std::string out;
    for (const auto& [key, value] : metadata) {
        out += "# ";
        out += key;
        out += ": ";
        out += value;
        out += "\n";
    }
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out += ',';
        out += columns[i];
    }
    out += ",status\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t i = 0; i < rows[r].size(); ++i) {
            if (i) out += ',';
            out += format_full(rows[r][i]);
        }
        out += ',';
        out += row_converged[r] ? "ok" : "nonconverged";
        out += "\n";
    }
    return out;
}

void for_each_index(std::size_t n, ExecMode mode,
                    const std::function<void(std::size_t)>& body) {
#ifdef _OPENMP
    if (mode == ExecMode::Parallel) {
        std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
        return;
    }
#else
    (void)mode;
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace casimir
