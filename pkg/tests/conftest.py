"""Shared fixtures, reference data and independent oracles.

The oracles here deliberately avoid the library's derived machinery:
brute_force_labelings filters raw assignments through the bare crossing
rule (forward B only), and rack_counting_oracle implements the classical
arc-labeling rack count from scratch.  Acceptance and property tests
compare the production code against these.
"""

from __future__ import annotations

from itertools import product

import pytest

from biracks import (
    FiniteBirack,
    Diagram,
    Pass,
    from_matrix,
    tsr_birack,
)

# ---------------------------------------------------------------------------
# Reference biracks
# ---------------------------------------------------------------------------

TWO_ELEMENT_MATRIX = [
    [1, 1, 2, 2],
    [2, 2, 1, 1],
]

CONSTANT_ACTION_4_MATRIX = [
    [2, 2, 2, 2, 1, 1, 1, 1],
    [1, 1, 1, 1, 2, 2, 2, 2],
    [3, 3, 3, 3, 4, 4, 4, 4],
    [4, 4, 4, 4, 3, 3, 3, 3],
]

TWO_ORBIT_4_MATRIX = [
    [2, 2, 1, 1, 2, 2, 1, 1],
    [1, 1, 2, 2, 1, 1, 2, 2],
    [3, 4, 3, 3, 4, 3, 4, 4],
    [4, 3, 4, 4, 3, 4, 3, 3],
]

TEN_ELEMENT_MATRIX = [
    [1, 3, 5, 2, 4, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [5, 2, 4, 1, 3, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2],
    [4, 1, 3, 5, 2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3],
    [3, 5, 2, 4, 1, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4, 4],
    [2, 4, 1, 3, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5],
    [7, 7, 7, 7, 7, 6, 10, 9, 8, 7, 8, 8, 8, 8, 8, 6, 6, 6, 6, 6],
    [9, 9, 9, 9, 9, 8, 7, 6, 10, 9, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7],
    [6, 6, 6, 6, 6, 10, 9, 8, 7, 6, 9, 9, 9, 9, 9, 8, 8, 8, 8, 8],
    [8, 8, 8, 8, 8, 7, 6, 10, 9, 8, 7, 7, 7, 7, 7, 9, 9, 9, 9, 9],
    [10, 10, 10, 10, 10, 9, 8, 7, 6, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10, 10],
]

# ---------------------------------------------------------------------------
# Reference Gauss codes (classical diagrams from standard tables)
# ---------------------------------------------------------------------------

UNKNOT = ""
TREFOIL = "O1+,U2+,O3+,U1+,O2+,U3+"
FIGURE_EIGHT = "O1+,U2-,O4-,U1+,O3+,U4-,O2-,U3+"       # closure of (s1 s2^-1)^2
CINQUEFOIL = "O1+,U2+,O3+,U4+,O5+,U1+,O2+,U3+,O4+,U5+"  # (2,5) torus knot
STEVEDORE = "O1+,U2+,U4-,O6+,U7-,O5-,U6+,U1+,O2+,O3+,U5-,O7-,U3+,O4-"  # 6_1
HOPF = "O1+,U2+;U1+,O2+"

KNOT_CODES = {
    "unknot": UNKNOT,
    "trefoil": TREFOIL,
    "figure_eight": FIGURE_EIGHT,
    "cinquefoil": CINQUEFOIL,
    "stevedore": STEVEDORE,
}


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------

@pytest.fixture(scope="session")
def two_element() -> FiniteBirack:
    """Smallest birack that is neither a biquandle nor a rack."""
    return from_matrix(2, TWO_ELEMENT_MATRIX)


@pytest.fixture(scope="session")
def constant4() -> FiniteBirack:
    return from_matrix(4, CONSTANT_ACTION_4_MATRIX)


@pytest.fixture(scope="session")
def two_orbit4() -> FiniteBirack:
    """Rank-2 birack on 4 elements with two proper subbiracks."""
    return from_matrix(4, TWO_ORBIT_4_MATRIX)


@pytest.fixture(scope="session")
def ten_element() -> FiniteBirack:
    return from_matrix(10, TEN_ELEMENT_MATRIX)


@pytest.fixture(scope="session")
def trefoil_birack() -> FiniteBirack:
    """tsr(3,1,2,2): B(x,y) = (y+2x, 2x) on Z_3, a rank-1 biquandle."""
    return tsr_birack(3, 1, 2, 2)


@pytest.fixture(scope="session")
def test_biracks(two_element, two_orbit4, trefoil_birack) -> dict[str, FiniteBirack]:
    """A spread of small biracks: ranks 1/2/2/2, with and without subbiracks."""
    return {
        "two_element": two_element,
        "two_orbit4": two_orbit4,
        "tsr3122": trefoil_birack,
        "tsr4323": tsr_birack(4, 3, 2, 3),
        "ts_rack_z4": tsr_birack(4, 1, 2, 1),      # rank-2 rack
        "dihedral3": tsr_birack(3, 2, 2, 1),       # Fox 3-coloring quandle
    }


# ---------------------------------------------------------------------------
# Independent oracles
# ---------------------------------------------------------------------------

def brute_force_labelings(d: Diagram, b: FiniteBirack) -> list[tuple[int, ...]]:
    """Filter every raw assignment through the bare crossing rule.

    Positive crossing: under-out = B1(over-in, under-in) and
    over-out = B2(over-in, under-in).  Negative crossing: the same rule
    read backwards, B(over-out, under-out) = (under-in, over-in).
    No derived tables (S, inverses) are consulted.
    """
    out = []
    for assign in product(range(b.n), repeat=d.semiarc_count):
        ok = True
        for cid, cr in d.crossings.items():
            oi, ui, uo, oo = d.crossing_semiarcs(cid)
            if cr.sign > 0:
                if (assign[uo] != b.b1[assign[oi]][assign[ui]]
                        or assign[oo] != b.b2[assign[oi]][assign[ui]]):
                    ok = False
                    break
            else:
                if (assign[ui] != b.b1[assign[oo]][assign[uo]]
                        or assign[oi] != b.b2[assign[oo]][assign[uo]]):
                    ok = False
                    break
        if ok:
            out.append(assign)
    return out


def rack_counting_oracle(d: Diagram, b: FiniteBirack) -> int:
    """Classical rack counting invariant via arc labelings.

    Valid only for racks (B2(x, y) = x): over-strand labels never change,
    so semiarcs merge into arcs split at under-passes, and each crossing
    imposes out-arc = B1(over-arc, in-arc).  Summed over writhe framings
    mod the rack rank, realized by adding k extra self-kinks worth of
    constraints pi^k; here instead we reuse kinked diagrams, keeping the
    oracle purely combinatorial.
    """
    from biracks import with_framing

    assert b.is_rack()
    N = b.rank
    total = 0
    for w in product(range(N), repeat=len(d.components)):
        framed = with_framing(d, w, N)
        total += _rack_arc_count(framed, b)
    return total


def _rack_arc_count(d: Diagram, b: FiniteBirack) -> int:
    # Arc id per semiarc: semiarcs between consecutive under-passes share one arc.
    arc_of_semiarc: dict[int, int] = {}
    next_arc = 0
    for ci, comp in enumerate(d.components):
        k = len(comp)
        if k == 0:
            arc_of_semiarc[d.semiarc_after(ci, 0)] = next_arc
            next_arc += 1
            continue
        under_positions = [pi for pi, p in enumerate(comp) if p.role == "U"]
        if not under_positions:
            arc = next_arc
            next_arc += 1
            for pi in range(k):
                arc_of_semiarc[d.semiarc_after(ci, pi)] = arc
            continue
        # semiarcs after an under-pass start a new arc
        start_arcs = {pos: next_arc + i for i, pos in enumerate(under_positions)}
        next_arc += len(under_positions)
        for pi in range(k):
            # walk back to the most recent under-pass at or before pi
            q = pi
            while comp[q].role != "U":
                q = (q - 1) % k
            arc_of_semiarc[d.semiarc_after(ci, pi)] = start_arcs[q]

    count = 0
    for assign in product(range(b.n), repeat=next_arc):
        ok = True
        for cid, cr in d.crossings.items():
            oi, ui, uo, oo = d.crossing_semiarcs(cid)
            over = assign[arc_of_semiarc[oi]]
            a_in = assign[arc_of_semiarc[ui]]
            a_out = assign[arc_of_semiarc[uo]]
            if cr.sign > 0:
                if a_out != b.b1[over][a_in]:
                    ok = False
                    break
            else:
                if a_in != b.b1[over][a_out]:
                    ok = False
                    break
        if ok:
            count += 1
    return count


def braid_closure(n_strands: int, word: list[int]) -> Diagram:
    """Signed Gauss code of a braid closure.

    Letter +j is a positive crossing of strand positions j, j+1 with the
    strand from position j passing over; -j is its negative mirror.
    """
    seen: set[int] = set()
    comps = []
    for start in range(1, n_strands + 1):
        if start in seen:
            continue
        passes, p = [], start
        while True:
            seen.add(p)
            for li, letter in enumerate(word):
                j, sgn = abs(letter), (1 if letter > 0 else -1)
                if p == j:
                    passes.append(Pass(li + 1, "O" if sgn > 0 else "U", sgn))
                    p = j + 1
                elif p == j + 1:
                    passes.append(Pass(li + 1, "U" if sgn > 0 else "O", sgn))
                    p = j
            if p == start:
                break
        comps.append(passes)
    return Diagram(comps)
