"""Draws an overlap region: shaded cells, members, choice-point rings.

Writes region.svg and region.csv next to this script (override with a
directory argument).  The CSV holds the exact rationals; the SVG is the
same scan quantized to pixels.
"""

import sys
from fractions import Fraction as F
from pathlib import Path

import minkbranch as mb
from minkbranch.oracle import GridSpec
from minkbranch.plotting import region_cells, render_csv, render_svg

out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).parent
model = mb.load(Path(__file__).parent / "models" / "harmonic.mbs")

grid = GridSpec(((F(-1, 2), F(1, 2)), (F(-1, 2), F(1, 2))), F(1, 16), truncate=1000)
cells = region_cells(model, "u", "v", grid)

svg_path = out_dir / "region.svg"
csv_path = out_dir / "region.csv"
svg_path.write_text(render_svg(model, "u", "v", grid, cells), encoding="utf-8")
csv_path.write_text(render_csv(cells), encoding="utf-8")

inside = sum(1 for c in cells if c.in_region)
marked = sum(1 for c in cells if c.choice_point)
print(f"scanned {len(cells)} cells: {inside} in the overlap, {marked} choice points")
print(f"wrote {svg_path}")
print(f"wrote {csv_path}")
