"""|u| under a point couple along x1 for the reduced models.

The pure relaxed model coincides with the classical micro solution, and
both sit at mu_M/mu_m of the classical macro solution.
"""

from pathlib import Path

from relaxed_green import cli
from relaxed_green.profiles import check_fig7

HERE = Path(__file__).parent

cli.main(["profile", "--figure", "7", "--out", str(HERE / "fig7_profiles.csv")])
ok, d = check_fig7()
print(f"ClassicalMicro/ClassicalMacro = {d['ratio']:.12f} (mu_M/mu_m = {d['expected']:.12f})")
