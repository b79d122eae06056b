# Copyright 2026 nnoma-sim contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Network-NOMA CoMP uplink simulator and closed-form evaluator."""

from ._nnoma import (
    ConfigError,
    SystemConfig,
    config_keys,
    dbm_to_watts,
    disk_noma_sum_rate,
    laplace_inter,
    nearest_comp_outage,
    nearest_noma_outage,
    presets,
    run_preset,
    simulate_noma_outage,
    sweep,
    typical_noma_ergodic_rate,
    typical_noma_outage,
)

__all__ = [
    "ConfigError",
    "SystemConfig",
    "config_keys",
    "dbm_to_watts",
    "disk_noma_sum_rate",
    "laplace_inter",
    "nearest_comp_outage",
    "nearest_noma_outage",
    "presets",
    "run_preset",
    "simulate_noma_outage",
    "sweep",
    "typical_noma_ergodic_rate",
    "typical_noma_outage",
]
