/*
 * Copyright 2026 nnoma-sim contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

namespace nnoma {

/// One measured quantity compared against its reference.
struct AcceptanceCheck {
  int criterion = 0;
  std::string check;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;  // pass iff |measured - expected| <= tolerance
  bool pass = false;
  std::string fingerprint;  // config the check ran on; empty for config-free checks
};

struct AcceptanceOptions {
  int threads = 1;
  double tolerance_scale = 1.0;  // multiplies every tolerance
  double trial_scale = 1.0;      // multiplies every Monte Carlo trial count
  std::set<int> criteria;        // empty runs all six
};

struct AcceptanceReport {
  std::vector<AcceptanceCheck> checks;
  std::vector<std::pair<int, double>> seconds;  // wall time per criterion

  bool all_passed() const;
  bool criterion_passed(int criterion) const;
};

inline constexpr int kAcceptanceCriteria = 6;

/// Short human-readable name of a criterion (1-based).
const char* acceptance_title(int criterion);

/// Runs the acceptance suite. `on_check` is called as each check completes.
AcceptanceReport run_acceptance(const AcceptanceOptions& opts = {},
                                const std::function<void(const AcceptanceCheck&)>& on_check = {});

/// RFC-4180 report: criterion,check,measured,expected,tolerance,pass,fingerprint.
void write_acceptance_csv(std::ostream& out, const AcceptanceReport& report);

}  // namespace nnoma
