#pragma once

#include <fstream>
#include <string>

#include "topress/driver.hpp"

namespace topress::io {

inline constexpr const char* kHistoryHeader =
    "iter,compliance,compliance_normalized,volfrac,change,seconds";

/// One CSV row (no newline), full precision.
std::string history_row(const IterationRecord& rec);

/// Writes header plus one row per record. Throws IoError if the path is unwritable.
void write_history(const RunHistory& history, const std::string& path);

/// Parses a file written by write_history. Throws IoError on malformed input.
RunHistory read_history(const std::string& path);

/// Appends rows as they arrive and flushes after each, so an interrupted run
/// keeps its partial history.
class HistoryWriter {
 public:
  explicit HistoryWriter(const std::string& path);
  void append(const IterationRecord& rec);

 private:
  std::string path_;
  std::ofstream out_;
};

}  // namespace topress::io
