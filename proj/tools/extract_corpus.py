#!/usr/bin/env python3
"""One-time extraction of figure coordinate data into segment files.

Reads the TikZ source of the figures (each ``\\draw`` block is one graph,
each ``(x1,y1) -- (x2,y2)`` line one edge) and writes ``corpus/<name>.seg``.
Coordinates are copied verbatim; no scaling or flipping is applied.

Usage: extract_corpus.py <source.tex|.md> <corpus-dir>
"""
import re
import sys
from pathlib import Path

# Figure order in the source, with the metadata each segment file carries.
FIGURES = [
    ("fig1a", 52, "4-regular", "rigid"),
    ("fig1b", 54, "4-regular", "rigid"),
    ("fig1c", 57, "4-regular", "rigid"),
    ("fig1d", 60, "4-regular", "flexible"),
    ("fig2a", 22, "(2,4)-regular", "rigid"),
    ("fig2b", 30, "(2,4)-regular", "rigid"),
    ("fig2c", 31, "(2,4)-regular", "rigid"),
    ("fig2d", 34, "(2,4)-regular", "rigid"),
    ("fig2e", 35, "(2,4)-regular", "rigid"),
    ("fig2f", 36, "(2,4)-regular", "rigid"),
    ("fig2g", 40, "(2,4)-regular", "rigid"),
    ("fig2h", 41, "(2,4)-regular", "rigid"),
    ("fig3a", 64, "4-regular", "rigid"),
    ("fig3b", 65, "4-regular", "flexible"),
    ("fig4a", 67, "4-regular", "flexible"),
    ("fig4b", 69, "4-regular", "rigid"),
    ("fig4c", 73, "4-regular", "rigid"),
    ("fig4d", 74, "4-regular", "rigid"),
    ("fig5a", 48, "(2,4)-regular", "flexible"),
    ("fig5b", 5, "(2,4)-regular", "flexible"),
    ("fig5c", 49, "(2,4)-regular", "flexible"),
]

SEGMENT = re.compile(
    r"\(\s*([-\d.]+)\s*,\s*([-\d.]+)\s*\)\s*--\s*\(\s*([-\d.]+)\s*,\s*([-\d.]+)\s*\)")


def blocks(lines):
    current = None
    for line in lines:
        if "\\draw" in line:
            current = []
            continue
        if current is None:
            continue
        m = SEGMENT.search(line)
        if m:
            current.append(m.groups())
            if line.rstrip().endswith(";"):
                yield current
                current = None
        elif "\\end{tikzpicture}" in line:
            yield current
            current = None


def main():
    src, out = Path(sys.argv[1]), Path(sys.argv[2])
    out.mkdir(parents=True, exist_ok=True)
    found = list(blocks(src.read_text(encoding="utf-8").splitlines()))
    if len(found) != len(FIGURES):
        sys.exit(f"expected {len(FIGURES)} drawings, found {len(found)}")
    for (name, nv, profile, rigidity), segs in zip(FIGURES, found):
        with open(out / f"{name}.seg", "w", encoding="utf-8") as f:
            f.write(f"# {name}: {nv} vertices, extracted from the figure drawing\n")
            f.write("# coordinates in drawing units, y axis pointing down\n")
            f.write(f"! name {name}\n")
            f.write(f"! claimed_vertices {nv}\n")
            f.write(f"! claimed_profile {profile}\n")
            f.write(f"! claimed_rigidity {rigidity}\n")
            for s in segs:
                f.write(" ".join(s) + "\n")


if __name__ == "__main__":
    main()
