"""Sanity checker for the dot rendering of a map ball, fed via stdin.

Expects the radius-2 ball of the classic map: 10 triangle nodes, three
"slope=value" label lines per node, and 9 directed tree edges.
"""
import re
import sys

text = sys.stdin.read()

labels = re.findall(r'label="([^"]*)"', text)
nodes = [l for l in labels if "=" in l]
if len(nodes) != 10:
    sys.exit(f"expected 10 labeled nodes, found {len(nodes)}")

for label in nodes:
    entries = label.split("\\n")
    if len(entries) != 3:
        sys.exit(f"expected 3 regions per node, got {entries!r}")
    for entry in entries:
        if not re.fullmatch(r"(inf|-?\d+(/\d+)?)=-?[\d.e+-]+", entry):
            sys.exit(f"unparseable region entry {entry!r}")

edges = re.findall(r"\bn\d+\s*->\s*n\d+", text)
if len(edges) != 9:
    sys.exit(f"expected 9 directed edges, found {len(edges)}")

print("ok")
