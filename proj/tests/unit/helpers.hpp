#pragma once

#include <cmath>
#include <cstdlib>
#include <string>

#include "examtt/instance.hpp"
#include "examtt/rng.hpp"
#include "examtt/timetable.hpp"

namespace testutil {

inline std::string data_path(const std::string& rel) {
  return std::string(EXAMTT_DATA_DIR) + "/" + rel;
}

inline examtt::Instance load_toy() {
  return examtt::load_instance(data_path("toy/toy-4x3.stu"), "", "toy-4x3", 3).instance;
}

inline examtt::Instance load_toronto(const std::string& name) {
  auto slots = examtt::load_slot_table(data_path("slots.txt"));
  return examtt::load_instance(data_path("toronto/" + name + ".stu"),
                               data_path("toronto/" + name + ".crs"), name, slots.at(name))
      .instance;
}

// From-scratch cost oracle straight off the student lists; shares no code
// with the library's evaluator.
struct NaiveCost {
  long long conflicts = 0;
  long long proximity_raw = 0;
};

inline NaiveCost naive_cost(const examtt::Instance& inst, const examtt::Timetable& tt) {
  static const long long weight[6] = {0, 16, 8, 4, 2, 1};
  NaiveCost cost;
  for (const auto& exams : inst.students)
    for (size_t i = 0; i < exams.size(); ++i)
      for (size_t j = i + 1; j < exams.size(); ++j) {
        int gap = std::abs(tt.slot[static_cast<size_t>(exams[i])] -
                           tt.slot[static_cast<size_t>(exams[j])]);
        if (gap == 0)
          ++cost.conflicts;
        else if (gap <= 5)
          cost.proximity_raw += weight[gap];
      }
  return cost;
}

inline examtt::Timetable random_complete(const examtt::Instance& inst, examtt::Rng& rng) {
  examtt::Timetable tt = examtt::Timetable::empty(inst.exam_count);
  for (int e = 0; e < inst.exam_count; ++e)
    tt.slot[static_cast<size_t>(e)] =
        static_cast<int32_t>(rng.uniform_index(static_cast<size_t>(inst.slot_count)));
  return tt;
}

}  // namespace testutil
