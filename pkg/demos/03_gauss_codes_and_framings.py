"""Signed Gauss codes: the diagram input format.

Components are ';'-separated, passes ','-separated, each pass O or U plus
a crossing id plus a sign.  Virtual crossings are never recorded, so any
pairing is legal (virtual links are first-class inputs).  The writhe
vector holds per-component self-crossing sign sums -- the framing data.
"""

import json

from biracks import parse_gauss, unlink, with_framing

trefoil = parse_gauss("O1+,U2+,O3+,U1+,O2+,U3+")
print("trefoil:", trefoil.serialize())
print("  components:", len(trefoil.components))
print("  crossings: ", len(trefoil.crossings))
print("  semiarcs:  ", trefoil.semiarc_count)
print("  writhe:    ", trefoil.writhe_vector)
print()

hopf = parse_gauss("O1+,U2+;U1+,O2+")
print("hopf link:", hopf.serialize())
print("  writhe:", hopf.writhe_vector, "(crossings between components do not count)")
print()

circle = parse_gauss("")
print("the empty code is a crossing-free circle with one semiarc:",
      circle.semiarc_count)
print("unlink(2) ==", unlink(2).serialize() or "';' (two empty components)")
print()

# Framing: append positive kinks until each component's writhe hits the
# target mod N.  A kink is a fresh crossing passed O-then-U, so a strand
# running through it picks up one application of the birack kink map.
framed = with_framing(hopf, (1, 1), 2)
print("hopf framed to (1,1) mod 2:", framed.serialize())
print("  writhe now:", framed.writhe_vector)
print("the original crossings are untouched:",
      all(framed.crossings[c].sign == hopf.crossings[c].sign for c in hopf.crossings))
print()

print("JSON export of the trefoil diagram:")
print(json.dumps(trefoil.to_json_dict(), indent=2)[:400], "...")
