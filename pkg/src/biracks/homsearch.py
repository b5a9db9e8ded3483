"""Enumerate birack labelings of a diagram by propagation + backtracking.

A labeling assigns a birack element to every semiarc so that at each
positive crossing with over-input o, under-input u, over-output o' and
under-output u':

    u' = B1(o, u)    and    o' = B2(o, u)

and at each negative crossing (o', u') = (B1^-1(u, o), B2^-1(u, o)),
equivalently B(o', u') = (u, o).  Each valid labeling is one birack
homomorphism from the diagram's fundamental structure into the birack.

Internally every crossing is normalized to a quadruple (x, y, z, w) of
semiarc indices satisfying B(x, y) = (z, w): a positive crossing is
(o, u, u', o'), a negative one (o', u', u, o).  Four exact determinations
then drive propagation:

    (x, y) known -> (z, w) = B(x, y)
    (z, w) known -> (x, y) = B^-1(z, w)
    (z, x) known -> (w, y) = S(z, x)
    (w, y) known -> (z, x) = S^-1(w, y)

The aliased pairs (x, w) and (y, z) do not determine the rest and only
get checked once more slots fill in.  The search branches on the
smallest-index unassigned semiarc with values in increasing order, which
yields labelings in lexicographic order of the assignment vector.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteBirack, subbirack_closure
from .diagram import Diagram


@dataclass(frozen=True)
class Labeling:
    """One semiarc assignment satisfying every crossing condition."""

    assignment: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.assignment)

    def __getitem__(self, semiarc: int) -> int:
        return self.assignment[semiarc]


def _crossing_quads(d: Diagram) -> list[tuple[int, int, int, int]]:
    quads = []
    for cid in sorted(d.crossings):
        oi, ui, uo, oo = d.crossing_semiarcs(cid)
        if d.crossings[cid].sign > 0:
            quads.append((oi, ui, uo, oo))
        else:
            quads.append((oo, uo, ui, oi))
    return quads


def enumerate_labelings(d: Diagram, b: FiniteBirack) -> list[Labeling]:
    """All labelings of d by b, duplicate-free, in lexicographic order."""
    quads = _crossing_quads(d)
    size = d.semiarc_count
    touching: list[list[int]] = [[] for _ in range(size)]
    for qi, quad in enumerate(quads):
        for sm in set(quad):
            touching[sm].append(qi)

    assign: list[int | None] = [None] * size
    trail: list[int] = []
    results: list[tuple[int, ...]] = []

    def set_value(sm: int, value: int, queue: list[int]) -> bool:
        current = assign[sm]
        if current is not None:
            return current == value
        assign[sm] = value
        trail.append(sm)
        queue.extend(touching[sm])
        return True

    def propagate(queue: list[int]) -> bool:
        while queue:
            x, y, z, w = quads[queue.pop()]
            vx, vy, vz, vw = assign[x], assign[y], assign[z], assign[w]
            if vx is not None and vy is not None:
                if not (set_value(z, b.b1[vx][vy], queue)
                        and set_value(w, b.b2[vx][vy], queue)):
                    return False
            elif vz is not None and vw is not None:
                if not (set_value(x, b.b1inv[vz][vw], queue)
                        and set_value(y, b.b2inv[vz][vw], queue)):
                    return False
            elif vz is not None and vx is not None:
                if not (set_value(w, b.s1[vz][vx], queue)
                        and set_value(y, b.s2[vz][vx], queue)):
                    return False
            elif vw is not None and vy is not None:
                if not (set_value(z, b.s1inv[vw][vy], queue)
                        and set_value(x, b.s2inv[vw][vy], queue)):
                    return False
        return True

    def search() -> None:
        branch = next((i for i, v in enumerate(assign) if v is None), None)
        if branch is None:
            results.append(tuple(assign))  # propagation kept every crossing consistent
            return
        mark = len(trail)
        for value in range(b.n):
            queue: list[int] = []
            ok = set_value(branch, value, queue) and propagate(queue)
            if ok:
                search()
            while len(trail) > mark:
                assign[trail.pop()] = None

    search()
    results.sort()
    return [Labeling(r) for r in results]


def count_labelings(d: Diagram, b: FiniteBirack) -> int:
    """|Hom| for one framed diagram; same semantics as enumerate_labelings."""
    return len(enumerate_labelings(d, b))


def labeling_image(labeling: Labeling, b: FiniteBirack) -> frozenset[int]:
    """The subbirack generated by the labels a labeling uses."""
    return subbirack_closure(b, set(labeling.assignment))
