#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace examtt {

// One uncapacitated exam timetabling instance. Exams and slots are 0-based
// everywhere inside the library; files and user-facing output are 1-based.
struct Instance {
  std::string name;
  int exam_count = 0;
  int slot_count = 0;
  std::vector<std::vector<int32_t>> students;  // per student: sorted, deduplicated exam set

  int num_students() const { return static_cast<int>(students.size()); }
};

/// Parses .stu text: one student per line, whitespace-separated 1-based exam
/// indices. Blank lines are skipped, trailing CR is tolerated, duplicate
/// indices within a line collapse. The exam count is the largest index seen.
/// Malformed tokens raise Error{parse} carrying the 1-based line number.
Instance parse_stu(std::string_view text, std::string name, int slot_count);

struct LoadReport {
  Instance instance;
  std::vector<std::string> warnings;
};

/// Loads a .stu file and, when crs_path is non-empty, cross-checks the .crs
/// enrollment counts against the ones derived from the student lists.
/// Disagreements are reported as warnings, never as errors.
LoadReport load_instance(const std::string& stu_path, const std::string& crs_path,
                         std::string name, int slot_count);

// name -> value tables ("<name> <value>" lines, '#' comments). Used for the
// slot-count and best-known metadata files shipped under data/.
std::map<std::string, int> load_slot_table(const std::string& path);
std::map<std::string, double> load_value_table(const std::string& path);

}  // namespace examtt
