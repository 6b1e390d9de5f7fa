#pragma once

namespace opk {

enum class provider_mode { exact, heuristic };

struct kernel_config {
  provider_mode provider = provider_mode::exact;
  // Apply the component-compression rules whenever their preconditions hold
  // rather than only above the worst-case size thresholds.
  bool aggressive = true;
  // Guarantee factor of the modulator provider; enters the size formulas and
  // the early-reject branch only.
  int c = 1;
};

}  // namespace opk
