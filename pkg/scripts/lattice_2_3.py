"""Write the subquasivariety lattice of V(L_2, L_3) as DOT and JSON.

    python3 scripts/lattice_2_3.py [outdir]
"""

import json
import sys
from pathlib import Path

from mvq.quasivariety import enumerate_subquasivarieties


def main(outdir="."):
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    lat = enumerate_subquasivarieties([2, 3])
    (out / "lattice_2_3.dot").write_text(lat.to_dot(), encoding="utf-8")
    (out / "lattice_2_3.json").write_text(
        json.dumps(lat.to_json(), indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
    )
    print(f"{len(lat.nodes)} nodes, {len(lat.cover_edges)} covers")
    for i, node in enumerate(lat.nodes):
        print(f"{i:>3}  {node.label()}")


if __name__ == "__main__":
    main(*sys.argv[1:])
