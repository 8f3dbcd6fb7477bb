"""Elastic distortion e12 of the relaxed and gauge models for growing g1."""

from pathlib import Path

from relaxed_green import cli
from relaxed_green.profiles import check_fig8

HERE = Path(__file__).parent

cli.main(["profile", "--figure", "8", "--out", str(HERE / "fig8_profiles.csv")])
_, d = check_fig8()
for g1, gap in zip(d["g1"], d["relative_gap"]):
    print(f"g1 = {g1:>4g}   sup |e12 relaxed - e12 gauge| / sup |e12 gauge| = {gap:.3f}")
