#!/usr/bin/env python3
"""Write every export artifact (json + dot + adjacency table) to a directory."""

import argparse
import pathlib
import sys

from fanopencils import coxeter, digraph, voltage


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="artifacts")
    args = ap.parse_args()
    out = pathlib.Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    d = digraph.build_d()
    g = coxeter.build_coxeter()
    vg = voltage.quotient(d)

    (out / "digraph.json").write_text(digraph.to_json(d))
    (out / "digraph.dot").write_text(digraph.to_dot(d))
    (out / "coxeter.json").write_text(coxeter.to_json(g))
    (out / "coxeter.dot").write_text(coxeter.to_dot(g))
    (out / "quotient.json").write_text(voltage.to_json(vg))
    (out / "quotient.dot").write_text(voltage.to_dot(vg))
    (out / "table.txt").write_text(digraph.format_table(d) + "\n")
    print(f"wrote 7 artifacts to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
