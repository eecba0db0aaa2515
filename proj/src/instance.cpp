#include "examtt/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "examtt/error.hpp"

namespace examtt {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::io, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool parse_int_token(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Splits on spaces and tabs; '\r' is treated as trailing whitespace.
std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Instance parse_stu(std::string_view text, std::string name, int slot_count) {
  if (slot_count < 1) fail(ErrorCode::invalid_argument, "slot count must be positive");

  Instance inst;
  inst.name = std::move(name);
  inst.slot_count = slot_count;

  int line_no = 0;
  size_t pos = 0;
  long long max_exam = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;

    std::vector<int32_t> exams;
    exams.reserve(tokens.size());
    for (auto token : tokens) {
      long long value = 0;
      if (!parse_int_token(token, value) || value < 1) {
        fail(ErrorCode::parse, inst.name + ": line " + std::to_string(line_no) +
                                   ": bad exam index '" + std::string(token) + "'");
      }
      exams.push_back(static_cast<int32_t>(value));
      max_exam = std::max(max_exam, value);
    }
    std::sort(exams.begin(), exams.end());
    exams.erase(std::unique(exams.begin(), exams.end()), exams.end());
    for (auto& e : exams) --e;  // to 0-based
    inst.students.push_back(std::move(exams));
  }

  if (inst.students.empty()) fail(ErrorCode::parse, inst.name + ": no student lines");
  inst.exam_count = static_cast<int>(max_exam);
  return inst;
}

LoadReport load_instance(const std::string& stu_path, const std::string& crs_path,
                         std::string name, int slot_count) {
  LoadReport report;
  report.instance = parse_stu(read_file(stu_path), std::move(name), slot_count);
  if (crs_path.empty()) return report;

  const Instance& inst = report.instance;
  std::vector<int64_t> derived(inst.exam_count, 0);
  for (const auto& exams : inst.students)
    for (int32_t e : exams) ++derived[e];

  std::string text = read_file(crs_path);
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int listed = 0;
  int mismatched = 0;
  std::string first_mismatch;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    long long exam = 0, count = 0;
    if (tokens.size() != 2 || !parse_int_token(tokens[0], exam) ||
        !parse_int_token(tokens[1], count) || exam < 1) {
      fail(ErrorCode::parse, crs_path + ": line " + std::to_string(line_no) + ": bad exam record");
    }
    ++listed;
    int64_t expect = exam <= inst.exam_count ? derived[exam - 1] : -1;
    if (expect != count) {
      ++mismatched;
      if (first_mismatch.empty()) {
        first_mismatch = "exam " + std::to_string(exam) + " listed " + std::to_string(count) +
                         " vs derived " + std::to_string(expect);
      }
    }
  }
  if (listed != inst.exam_count) {
    report.warnings.push_back(inst.name + ": .crs lists " + std::to_string(listed) +
                              " exams, .stu implies " + std::to_string(inst.exam_count));
  }
  if (mismatched > 0) {
    report.warnings.push_back(inst.name + ": " + std::to_string(mismatched) +
                              " enrollment count mismatches vs .crs (" + first_mismatch + ")");
  }
  return report;
}

namespace {

template <typename T, typename Parse>
std::map<std::string, T> load_table(const std::string& path, Parse parse) {
  std::string text = read_file(path);
  std::istringstream in(text);
  std::map<std::string, T> table;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      fail(ErrorCode::parse, path + ": line " + std::to_string(line_no) + ": expected 'name value'");
    }
    T value;
    if (!parse(tokens[1], value)) {
      fail(ErrorCode::parse, path + ": line " + std::to_string(line_no) + ": bad value");
    }
    table[std::string(tokens[0])] = value;
  }
  return table;
}

}  // namespace

std::map<std::string, int> load_slot_table(const std::string& path) {
  return load_table<int>(path, [](std::string_view tok, int& out) {
    long long v = 0;
    if (!parse_int_token(tok, v) || v < 1) return false;
    out = static_cast<int>(v);
    return true;
  });
}

std::map<std::string, double> load_value_table(const std::string& path) {
  return load_table<double>(path, [](std::string_view tok, double& out) {
    try {
      size_t used = 0;
      out = std::stod(std::string(tok), &used);
      return used == tok.size();
    } catch (...) {
      return false;
    }
  });
}

}  // namespace examtt
