#include "mnlab/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mnlab {

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    // shortest representation that round-trips
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) return buf;
    }
    return buf;
}

namespace {

std::string timestamp_utc() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

}  // namespace

CsvReport::CsvReport(std::string command, nlohmann::json resolved_config,
                     std::vector<std::string> columns)
    : command_(std::move(command)),
      config_(std::move(resolved_config)),
      columns_(std::move(columns)) {}

void CsvReport::add_row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_.size())
        throw std::invalid_argument("CsvReport: row width mismatch");
    rows_.push_back(cells);
}

void CsvReport::add_comment(const std::string& line) {
    comments_.push_back(line);
}

std::string CsvReport::render(bool sort_rows) const {
    std::ostringstream os;
    os << "# mnlab " << command_ << " report (schema_version=1)\n";
    os << "# generated_at: " << timestamp_utc() << "\n";
    os << "# config: " << config_.dump() << "\n";
    for (const auto& c : comments_) os << "# " << c << "\n";
    for (std::size_t i = 0; i < columns_.size(); ++i)
        os << columns_[i] << (i + 1 < columns_.size() ? "," : "\n");
    auto rows = rows_;
    if (sort_rows) std::sort(rows.begin(), rows.end());
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i)
            os << r[i] << (i + 1 < r.size() ? "," : "\n");
    }
    return os.str();
}

void CsvReport::write(const std::string& path, bool sort_rows) const {
    write_text_file(path, render(sort_rows));
}

nlohmann::json json_report_skeleton(const std::string& command,
                                    const nlohmann::json& resolved_config) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["command"] = command;
    j["generated_at"] = timestamp_utc();
    j["config"] = resolved_config;
    return j;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace mnlab
