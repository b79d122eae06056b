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

// Standalone acceptance runner: one line per check, then one PASS/FAIL line
// per criterion. Exit status 0 iff every criterion passes.

#include <cstdio>

#include "nnoma/acceptance.hpp"

int main() {
  const auto report = nnoma::run_acceptance({}, [](const nnoma::AcceptanceCheck& c) {
    std::printf("  %s %-48s measured=%.6g expected=%.6g tol=%.3g\n", c.pass ? "ok  " : "FAIL",
                c.check.c_str(), c.measured, c.expected, c.tolerance);
    std::fflush(stdout);
  });
  for (const auto& [criterion, seconds] : report.seconds) {
    std::printf("%s criterion %d: %s (%.1fs)\n", report.criterion_passed(criterion) ? "PASS" : "FAIL",
                criterion, nnoma::acceptance_title(criterion), seconds);
  }
  return report.all_passed() ? 0 : 1;
}
