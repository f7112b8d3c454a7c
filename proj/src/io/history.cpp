#include "topress/io/history.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

namespace topress::io {

std::string history_row(const IterationRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g", r.iter, r.compliance,
                r.compliance_normalized, r.volfrac, r.change, r.seconds);
  return buf;
}

void write_history(const RunHistory& history, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open history file for writing: " + path);
  out << kHistoryHeader << '\n';
  for (const auto& r : history) out << history_row(r) << '\n';
  out.flush();
  if (!out) throw IoError("failed writing history file: " + path);
}

RunHistory read_history(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open history file: " + path);
  std::string line;
  if (!std::getline(in, line) || line != kHistoryHeader) {
    throw IoError("history file has an unexpected header: " + path);
  }
  RunHistory h;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) {
      throw IoError(path + ":" + std::to_string(lineno) + ": expected 6 columns");
    }
    try {
      IterationRecord r;
      r.iter = std::stoi(cells[0]);
      r.compliance = std::stod(cells[1]);
      r.compliance_normalized = std::stod(cells[2]);
      r.volfrac = std::stod(cells[3]);
      r.change = std::stod(cells[4]);
      r.seconds = std::stod(cells[5]);
      h.push_back(r);
    } catch (const std::exception&) {
      throw IoError(path + ":" + std::to_string(lineno) + ": malformed number");
    }
  }
  return h;
}

HistoryWriter::HistoryWriter(const std::string& path) : path_(path), out_(path) {
  if (!out_) throw IoError("cannot open history file for writing: " + path);
  out_ << kHistoryHeader << '\n';
  out_.flush();
}

void HistoryWriter::append(const IterationRecord& rec) {
  out_ << history_row(rec) << '\n';
  out_.flush();
  if (!out_) throw IoError("failed writing history file: " + path_);
}

}  // namespace topress::io
