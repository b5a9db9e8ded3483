"""Counting invariants of links from finite biracks, with enhancements.

Labeling counts of a framed diagram are periodic in each component's
writhe with period N, the birack rank.  Summing over one full framing
period (Z_N)^c therefore gives invariants of the unframed link:

* integral: total number of labelings over all framings.
* writhe-enhanced: the generating polynomial sum count(w) * q1^w1...qc^wc.
* image-enhanced: each labeling contributes z^(size of its image
  subbirack).
* polynomial-enhanced: each labeling contributes z^P where P is the
  subbirack polynomial of its image -- a four-variable fingerprint in
  s1, s2, t1, t2 recording how the image sits inside the whole birack.

The element statistics behind the four-variable fingerprint count
trivial actions:

    c1(x) = #{y : B1(x, y) = y}   labels unchanged passing under x
    c2(x) = #{y : B2(y, x) = y}   labels unchanged passing over x
    r1(x) = #{y : B1(y, x) = x}   over-labels under which x is unchanged
    r2(x) = #{y : B2(x, y) = x}   under-labels over which x is unchanged

and each element contributes s1^c1 s2^c2 t1^r1 t2^r2.  In matrix-block
terms c_i(x) counts fixed points down column x of block i and r_i(x)
counts occurrences of x along row x of block i.

normalize() subtracts the same invariant of the crossing-free unlink
with the same number of components, so unlinks normalize to zero.

Framing vectors are always enumerated in lexicographic order, making
multiset forms and per-framing counts deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .core import FiniteBirack, is_subbirack
from .diagram import Diagram, unlink, with_framing
from .errors import KindMismatch, NotASubbirack
from .homsearch import Labeling, enumerate_labelings, labeling_image
from .poly import MultiPoly, NestedPoly

KINDS = ("integral", "writhe", "image", "rho")


# ---------------------------------------------------------------------------
# Birack polynomials
# ---------------------------------------------------------------------------

def _element_statistics(b: FiniteBirack, x: int) -> tuple[int, int, int, int]:
    rng = range(b.n)
    c1 = sum(1 for y in rng if b.b1[x][y] == y)
    c2 = sum(1 for y in rng if b.b2[y][x] == y)
    r1 = sum(1 for y in rng if b.b1[y][x] == x)
    r2 = sum(1 for y in rng if b.b2[x][y] == x)
    return c1, c2, r1, r2


def _statistics_monomial(b: FiniteBirack, x: int) -> MultiPoly:
    c1, c2, r1, r2 = _element_statistics(b, x)
    return MultiPoly.monomial({"s1": c1, "s2": c2, "t1": r1, "t2": r2})


def birack_polynomial(b: FiniteBirack) -> MultiPoly:
    """Sum of s1^c1 s2^c2 t1^r1 t2^r2 over every element."""
    out = MultiPoly.zero()
    for x in range(b.n):
        out = out + _statistics_monomial(b, x)
    return out


def subbirack_polynomial(b: FiniteBirack, subset) -> MultiPoly:
    """The same sum restricted to a subbirack Y, statistics still taken
    against all of X (the polynomial records how Y embeds in X)."""
    sub = frozenset(subset)
    if not is_subbirack(b, sub):
        raise NotASubbirack(f"{sorted(sub)} is not closed under B and S")
    out = MultiPoly.zero()
    for x in sorted(sub):
        out = out + _statistics_monomial(b, x)
    return out


# ---------------------------------------------------------------------------
# Framing-period labeling survey
# ---------------------------------------------------------------------------

def labelings_by_framing(
    d: Diagram, b: FiniteBirack
) -> list[tuple[tuple[int, ...], list[Labeling]]]:
    """(framing vector, labelings) over (Z_N)^c in lexicographic order."""
    N = b.rank
    c = len(d.components)
    out = []
    for w in product(range(N), repeat=c):
        out.append((w, enumerate_labelings(with_framing(d, w, N), b)))
    return out


# ---------------------------------------------------------------------------
# The four invariants
# ---------------------------------------------------------------------------

def phi_integral(d: Diagram, b: FiniteBirack) -> int:
    """Total labelings over one full framing period."""
    return sum(len(labs) for _, labs in labelings_by_framing(d, b))


def phi_writhe(d: Diagram, b: FiniteBirack) -> MultiPoly:
    """Sum of count(w) * q^w over the framing period."""
    out = MultiPoly.zero()
    for w, labs in labelings_by_framing(d, b):
        if labs:
            exps = {f"q{i + 1}": wi for i, wi in enumerate(w)}
            out = out + MultiPoly.monomial(exps, len(labs))
    return out


def phi_image(d: Diagram, b: FiniteBirack) -> MultiPoly:
    """Sum of z^(image size) over every labeling in the framing period."""
    out = MultiPoly.zero()
    for _, labs in labelings_by_framing(d, b):
        for lab in labs:
            out = out + MultiPoly.monomial({"z": len(labeling_image(lab, b))})
    return out


def phi_rho(d: Diagram, b: FiniteBirack) -> NestedPoly:
    """Sum of z^(subbirack polynomial of the image) over every labeling."""
    out = NestedPoly.zero()
    cache: dict[frozenset[int], str] = {}
    for _, labs in labelings_by_framing(d, b):
        for lab in labs:
            image = labeling_image(lab, b)
            key = cache.get(image)
            if key is None:
                key = subbirack_polynomial(b, image).canonical_string()
                cache[image] = key
            out = out + NestedPoly.single(key)
    return out


# ---------------------------------------------------------------------------
# Packaged values (multiset forms, per-framing counts, normalization)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class InvariantValue:
    """An invariant value with its multiset form and per-framing counts.

    kind: "integral" | "writhe" | "image" | "rho"
    value: int (integral), MultiPoly (writhe/image) or NestedPoly (rho)
    multiset: (signature, multiplicity) pairs; signatures are framing
      vectors (writhe), image sizes (image) or canonical subbirack
      polynomial strings (rho).  The integral invariant, having no
      signature, uses the single pair ((), total).
    per_framing: (framing vector, labeling count) pairs in lexicographic
      order; for normalized values these are count differences.
    normalized: True when an unlink value has been subtracted.
    """

    kind: str
    value: int | MultiPoly | NestedPoly
    multiset: tuple[tuple[object, int], ...]
    per_framing: tuple[tuple[tuple[int, ...], int], ...] | None
    normalized: bool = False

    def value_string(self) -> str:
        if isinstance(self.value, int):
            return str(self.value)
        return self.value.canonical_string()


def _multiset_for(kind: str, surveys, b: FiniteBirack):
    if kind == "integral":
        total = sum(len(labs) for _, labs in surveys)
        return ((tuple(), total),) if total else tuple()
    if kind == "writhe":
        return tuple((w, len(labs)) for w, labs in surveys if labs)
    counts: dict[object, int] = {}
    if kind == "image":
        for _, labs in surveys:
            for lab in labs:
                k = len(labeling_image(lab, b))
                counts[k] = counts.get(k, 0) + 1
        return tuple(sorted(counts.items()))
    if kind == "rho":
        cache: dict[frozenset[int], str] = {}
        for _, labs in surveys:
            for lab in labs:
                image = labeling_image(lab, b)
                key = cache.get(image)
                if key is None:
                    key = subbirack_polynomial(b, image).canonical_string()
                    cache[image] = key
                counts[key] = counts.get(key, 0) + 1
        return tuple(sorted(counts.items()))
    raise KindMismatch(f"unknown invariant kind {kind!r}")


def compute_invariant(d: Diagram, b: FiniteBirack, kind: str) -> InvariantValue:
    """Compute one invariant with multiset and per-framing bookkeeping."""
    if kind not in KINDS:
        raise KindMismatch(f"unknown invariant kind {kind!r}")
    surveys = labelings_by_framing(d, b)
    per_framing = tuple((w, len(labs)) for w, labs in surveys)
    multiset = _multiset_for(kind, surveys, b)
    value: int | MultiPoly | NestedPoly
    if kind == "integral":
        value = sum(m for _, m in multiset)
    elif kind == "writhe":
        value = MultiPoly.zero()
        for w, m in multiset:
            value = value + MultiPoly.monomial(
                {f"q{i + 1}": wi for i, wi in enumerate(w)}, m
            )
    elif kind == "image":
        value = MultiPoly.zero()
        for size, m in multiset:
            value = value + MultiPoly.monomial({"z": size}, m)
    else:
        value = NestedPoly({key: m for key, m in multiset})
    return InvariantValue(kind, value, multiset, per_framing)


def _merge_multisets(a, bneg):
    counts: dict[object, int] = {}
    for key, m in a:
        counts[key] = counts.get(key, 0) + m
    for key, m in bneg:
        counts[key] = counts.get(key, 0) - m
        if counts[key] == 0:
            del counts[key]
    return tuple(sorted(counts.items(), key=lambda km: (repr(km[0]), km[1])))


def normalize(v: InvariantValue, d: Diagram, b: FiniteBirack) -> InvariantValue:
    """Subtract the invariant of the unlink with d's component count."""
    if v.kind not in KINDS:
        raise KindMismatch(f"unknown invariant kind {v.kind!r}")
    base = compute_invariant(unlink(len(d.components)), b, v.kind)
    value = v.value - base.value
    per_framing = None
    if v.per_framing is not None and len(v.per_framing) == len(base.per_framing):
        per_framing = tuple(
            (w, m - bm)
            for (w, m), (_, bm) in zip(v.per_framing, base.per_framing)
        )
    return InvariantValue(
        v.kind,
        value,
        _merge_multisets(v.multiset, base.multiset),
        per_framing,
        normalized=True,
    )
