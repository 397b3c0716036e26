#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "gda/types.hpp"

namespace gda {

enum class TraceKind {
    pue,           // entries >= 1
    price_weight,  // entries >= 0
};

// One per-DC time series: row t holds the N values for slot t.
struct TraceSeries {
    TraceKind kind = TraceKind::pue;
    Matrix values;  // T x N
};

enum class TraceErrorKind {
    io,     // file missing or unreadable
    parse,  // a cell is not a number, or a header mismatch
    shape,  // wrong column count for the configured N
    range,  // a value violates the per-kind bound
    gap,    // slot indices not contiguous from 0
};

class TraceError : public std::runtime_error {
public:
    TraceError(TraceErrorKind kind, const std::string& message, long line = 0)
        : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ")"
                                      : message),
          kind_(kind),
          line_(line) {}

    TraceErrorKind kind() const { return kind_; }
    long line() const { return line_; }

private:
    TraceErrorKind kind_;
    long line_;
};

// CSV contract: UTF-8, comma-separated, header "slot,<dc_id_1>,...,<dc_id_N>",
// then one row per slot with slot indices contiguous from 0.
TraceSeries load_trace(const std::filesystem::path& path, TraceKind kind,
                       const SystemConfig& config);

void write_trace(const std::filesystem::path& path, const TraceSeries& series,
                 const std::vector<std::string>& dc_ids);

}  // namespace gda
