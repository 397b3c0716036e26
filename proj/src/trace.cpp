#include "gda/trace.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "gda/format.hpp"

namespace gda {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double parse_cell(const std::string& cell, long line) {
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    while (first < last && (*first == ' ' || *first == '\t')) ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    while (ptr < last && (*ptr == ' ' || *ptr == '\t' || *ptr == '\r')) ++ptr;
    if (ec != std::errc{} || ptr != last)
        throw TraceError(TraceErrorKind::parse, "cannot parse '" + cell + "' as a number", line);
    return value;
}

void check_range(TraceKind kind, double value, long line, std::size_t column) {
    const bool bad = kind == TraceKind::pue ? value < 1.0 : value < 0.0;
    if (bad)
        throw TraceError(TraceErrorKind::range,
                         std::string(kind == TraceKind::pue ? "pue" : "price_weight") +
                             " value " + format_double(value) + " out of range at column " +
                             std::to_string(column),
                         line);
}

}  // namespace

TraceSeries load_trace(const std::filesystem::path& path, TraceKind kind,
                       const SystemConfig& config) {
    std::ifstream in(path);
    if (!in)
        throw TraceError(TraceErrorKind::io, "cannot open trace file " + path.string());

    const auto n = static_cast<std::size_t>(config.num_dcs);
    std::string line;
    long line_no = 0;

    if (!std::getline(in, line))
        throw TraceError(TraceErrorKind::parse, "trace file is empty", 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv(line);
    if (header.empty() || header[0] != "slot")
        throw TraceError(TraceErrorKind::parse, "header must start with 'slot'", line_no);
    if (header.size() != n + 1)
        throw TraceError(TraceErrorKind::shape,
                         "header has " + std::to_string(header.size() - 1) +
                             " value columns, expected " + std::to_string(n),
                         line_no);

    std::vector<double> flat;
    std::int64_t expected_slot = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const auto cells = split_csv(line);
        if (cells.size() != n + 1)
            throw TraceError(TraceErrorKind::shape,
                             "row has " + std::to_string(cells.size() - 1) +
                                 " value columns, expected " + std::to_string(n),
                             line_no);

        const double slot = parse_cell(cells[0], line_no);
        if (slot != static_cast<double>(expected_slot))
            throw TraceError(TraceErrorKind::gap,
                             "slot index " + format_double(slot) + " breaks the contiguous " +
                                 "sequence, expected " + std::to_string(expected_slot),
                             line_no);
        ++expected_slot;

        for (std::size_t j = 0; j < n; ++j) {
            const double value = parse_cell(cells[j + 1], line_no);
            check_range(kind, value, line_no, j + 1);
            flat.push_back(value);
        }
    }

    const auto slots = static_cast<std::size_t>(expected_slot);
    TraceSeries series{kind, Matrix(slots, n)};
    for (std::size_t t = 0; t < slots; ++t)
        for (std::size_t j = 0; j < n; ++j) series.values(t, j) = flat[t * n + j];
    return series;
}

void write_trace(const std::filesystem::path& path, const TraceSeries& series,
                 const std::vector<std::string>& dc_ids) {
    if (dc_ids.size() != series.values.cols())
        throw TraceError(TraceErrorKind::shape, "dc_ids length does not match trace columns");

    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw TraceError(TraceErrorKind::io, "cannot open trace file for writing " + path.string());

    out << "slot";
    for (const auto& id : dc_ids) out << ',' << id;
    out << '\n';
    for (std::size_t t = 0; t < series.values.rows(); ++t) {
        out << t;
        for (std::size_t j = 0; j < series.values.cols(); ++j)
            out << ',' << format_double(series.values(t, j));
        out << '\n';
    }
    if (!out)
        throw TraceError(TraceErrorKind::io, "short write to " + path.string());
}

}  // namespace gda
