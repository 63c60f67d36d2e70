#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace mnlab {

/// Deterministic float formatting shared by every emitter: shortest
/// round-trip-exact representation so identical runs are byte-identical.
std::string format_double(double v);

/// CSV sweep writer. Output layout:
///   # mnlab <command> report
///   # generated_at: <timestamp>      <- excluded from reproducibility
///   # config: <resolved config JSON, one line>
///   header,...
///   rows...
class CsvReport {
  public:
    CsvReport(std::string command, nlohmann::json resolved_config,
              std::vector<std::string> columns);
    void add_row(const std::vector<std::string>& cells);
    void add_comment(const std::string& line);
    /// Sorts data rows lexicographically (schedule-independent output).
    std::string render(bool sort_rows = true) const;
    void write(const std::string& path, bool sort_rows = true) const;

  private:
    std::string command_;
    nlohmann::json config_;
    std::vector<std::string> columns_;
    std::vector<std::string> comments_;
    std::vector<std::vector<std::string>> rows_;
};

/// JSON single-object report with schema_version, command, resolved config
/// and a timestamp field the reproducibility contract excludes.
nlohmann::json json_report_skeleton(const std::string& command,
                                    const nlohmann::json& resolved_config);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace mnlab
