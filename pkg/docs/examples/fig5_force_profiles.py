"""|u2| and micro-rotation along the positive x1 axis for every force model.

Also reports where the couple-stress <= micropolar <= classical ordering
of |u2| holds on this parameter set.
"""

from pathlib import Path

from relaxed_green import cli
from relaxed_green.profiles import check_fig5_ordering

HERE = Path(__file__).parent

cli.main(["profile", "--figure", "5", "--out", str(HERE / "fig5_profiles.csv")])
ok, detail = check_fig5_ordering()
print("ordering holds on [0.2, 2] ell_2" if ok else f"ordering breaks: {detail}")
