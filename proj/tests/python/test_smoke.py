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
import math
import os
import subprocess

import pytest

import nnoma


def test_config_roundtrip_and_errors():
    cfg = nnoma.SystemConfig(lambda_c=3e-5, k_users=3)
    assert cfg.lambda_c == 3e-5
    assert cfg.k_users == 3
    assert len(cfg.fingerprint()) == 16
    assert cfg == nnoma.SystemConfig(lambda_c=3e-5, k_users=3)
    assert "lambda_c" in nnoma.config_keys()
    with pytest.raises(nnoma.ConfigError):
        nnoma.SystemConfig(radius_cluster=-1)
    with pytest.raises(ValueError):
        nnoma.SystemConfig(no_such_key=1)


def test_closed_form_against_simulation():
    cfg = nnoma.SystemConfig(k_users=1, rate_noma=1.0)
    analytic = nnoma.typical_noma_outage(cfg)
    assert 0.0 < analytic < 1.0
    est = nnoma.simulate_noma_outage(cfg, trials=20000, seed=3)
    assert abs(est["mean"] - analytic) < max(0.01, 4 * est["std_error"])
    rate = nnoma.typical_noma_ergodic_rate(cfg)
    assert rate > 0
    expected = rate * cfg.lambda_c * math.pi * cfg.radius_comp**2
    assert nnoma.disk_noma_sum_rate(cfg, rate) == pytest.approx(expected, rel=1e-12)


def test_nearest_ordering():
    cfg = nnoma.SystemConfig(k_users=3, radius_cluster=30, lambda_c=3e-5, rate_noma=0.5, rate_comp=0.5)
    assert nnoma.nearest_comp_outage(cfg) >= nnoma.nearest_noma_outage(cfg)


def test_sweep_and_preset_rows():
    rows = nnoma.sweep(nnoma.SystemConfig(), "rate_noma", [0.5, 1.0], ["noma_outage"], trials=200)
    assert [r["source"] for r in rows] == ["analytic", "mc", "analytic", "mc"]
    assert rows[0]["std_error"] is None
    assert rows[1]["std_error"] is not None
    assert rows[0]["fingerprint"] != rows[2]["fingerprint"]
    assert "fig8a" in nnoma.presets()
    preset_rows = nnoma.run_preset("fig8a", mode="analytic")
    assert preset_rows and all(r["source"] == "analytic" for r in preset_rows)


def test_cli_matches_module():
    cli = os.environ.get("NNOMA_CLI")
    if not cli:
        pytest.skip("NNOMA_CLI not set")
    out = subprocess.run([cli, "preset", "fig8a", "--mode", "analytic"], check=True,
                         capture_output=True, text=True).stdout
    lines = out.splitlines()
    assert lines[0].startswith("id,curve,parameter")
    assert len(lines) == 1 + len(nnoma.run_preset("fig8a", mode="analytic"))
