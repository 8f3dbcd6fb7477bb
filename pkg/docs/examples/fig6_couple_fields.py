"""Relaxed micromorphic response to a unit point couple, on a grid."""

from pathlib import Path

from relaxed_green import cli

HERE = Path(__file__).parent

cli.main(["eval", "--params", str(HERE / "fig6_params.json"), "--load", "couple",
          "--nx", "81", "--ny", "81", "--threads", "4",
          "--out", str(HERE / "fig6_couple_grid.csv")])
