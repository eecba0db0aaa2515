#pragma once

#include <cmath>
#include <cstdint>

namespace examtt {

// Time budgets are enforced on a deterministic clock: components charge work
// units roughly proportional to the memory traffic they cause, and a fixed
// constant converts units to seconds. Two runs with the same (instance,
// config, seed) therefore stop after the same generation, which keeps result
// CSVs byte-identical, which an OS clock cannot guarantee. Measured
// wall time is still reported separately for transparency.
struct WorkMeter {
  uint64_t units = 0;

  void charge(uint64_t n) { units += n; }
};

// Calibrated on the reference machine (single core, -O2) so one virtual
// second is about one wall second on the Toronto instances.
inline constexpr double kWorkUnitsPerSecond = 350e6;

class WorkClock {
 public:
  WorkClock(const WorkMeter* meter, double seconds_budget, double units_per_second)
      : meter_(meter),
        units_per_second_(units_per_second),
        budget_units_(static_cast<uint64_t>(std::llround(seconds_budget * units_per_second))) {}

  bool expired() const { return meter_->units >= budget_units_; }

  double elapsed_seconds() const {
    return static_cast<double>(meter_->units) / units_per_second_;
  }

 private:
  const WorkMeter* meter_;
  double units_per_second_;
  uint64_t budget_units_;
};

}  // namespace examtt
