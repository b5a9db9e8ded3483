"""Finite biracks: verification, derived structure, matrix I/O.

A birack is a set X = {0, ..., n-1} with an invertible map
B(x, y) = (B1(x, y), B2(x, y)) on X x X satisfying:

  * sideways invertibility: there is a unique invertible S with
    S(B1(x, y), x) = (B2(x, y), y) -- equivalent to every row
    y -> B1(x, y) and every column x -> B2(x, y) being bijections;
  * diagonal bijectivity: x -> S1(x, x), x -> S2(x, x) and the same for
    S^-1 are bijections of X;
  * the set-theoretic Yang-Baxter equation, written componentwise as
      B1(x, B1(y, z)) = B1(B1(x, y), B1(B2(x, y), z))
      B1(B2(x, B1(y, z)), B2(y, z)) = B2(B1(x, y), B1(B2(x, y), z))
      B2(B2(x, B1(y, z)), B2(y, z)) = B2(B2(x, y), z)

In diagram language B1(o, u) gives the new under-strand label and
B2(o, u) the new over-strand label when the strand labeled u passes
under the strand labeled o at a positive crossing.

From S the kink structure is derived: with D(x) = (x, x),

  alpha = (S2^-1 o D)^-1        pi = (S1^-1 o D) o alpha

pi is the label change through a positive kink and its order N (the
birack rank) is the framing period of labeling counts.

Matrix file convention
----------------------
An n-element birack is stored as the block matrix [B1 | B2]: n rows of
2n entries, 1-indexed.  Row i, column j of the left block holds
B1(x_j, x_i) (note the transposition: the row is the *second* argument)
and row i, column j of the right block holds B2(x_i, x_j).  This is the
convention the worked example tables in the biquandle literature follow,
and it is pinned by this package's acceptance tests.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import lcm

from .errors import AxiomViolation, ParseError, SizeTooLarge

Perm = tuple[int, ...]
Table = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# Permutation helpers
# ---------------------------------------------------------------------------

def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def invert_perm(p) -> Perm:
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


def compose_perms(p, q) -> Perm:
    """(p o q)(x) = p(q(x))."""
    return tuple(p[q[x]] for x in range(len(q)))


def perm_cycles(p) -> list[list[int]]:
    """Disjoint cycles (including fixed points), each starting at its min."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = p[x]
        cycles.append(cyc)
    return cycles


def perm_order(p) -> int:
    return lcm(*(len(c) for c in perm_cycles(p))) if p else 1


def cycle_string(p) -> str:
    """1-indexed cycle notation, fixed points omitted; identity is '()'."""
    parts = [
        "(" + " ".join(str(x + 1) for x in cyc) + ")"
        for cyc in perm_cycles(p)
        if len(cyc) > 1
    ]
    return "".join(parts) if parts else "()"


def parse_cycles(text: str, n: int) -> Perm:
    """Parse 1-indexed cycle notation like "(1 2)(3 4)" on {1..n}.

    Commas or spaces separate entries; points not mentioned are fixed.
    """
    perm = list(range(n))
    body = text.strip()
    if body in ("", "()", "id"):
        return tuple(perm)
    if not re.fullmatch(r"\s*(\([^()]*\)\s*)+", body):
        raise ParseError(f"bad cycle notation {text!r}")
    chunks = re.findall(r"\(([^()]*)\)", body)
    touched: set[int] = set()
    for chunk in chunks:
        entries = [e for e in chunk.replace(",", " ").split() if e]
        try:
            points = [int(e) - 1 for e in entries]
        except ValueError:
            raise ParseError(f"bad cycle entry in {text!r}") from None
        if any(not 0 <= x < n for x in points):
            raise ParseError(f"cycle entry out of range 1..{n} in {text!r}")
        if len(set(points)) != len(points) or touched & set(points):
            raise ParseError(f"repeated point in cycle notation {text!r}")
        touched |= set(points)
        for i, x in enumerate(points):
            perm[x] = points[(i + 1) % len(points)]
    return tuple(perm)


# ---------------------------------------------------------------------------
# Axiom verification
# ---------------------------------------------------------------------------

AXIOM_PAIR = "NotPairBijective"
AXIOM_SIDEWAYS = "SidewaysNotUnique"
AXIOM_DIAGONAL = "DiagonalNotBijective"
AXIOM_YBE = "YangBaxterFails"

_CHECK_ORDER = (AXIOM_PAIR, AXIOM_SIDEWAYS, AXIOM_DIAGONAL, AXIOM_YBE)


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "skipped"
    witness: tuple | None = None
    detail: str = ""

    def describe(self) -> str:
        line = f"{self.name}: {self.status}"
        if self.detail:
            line += f" ({self.detail})"
        return line


@dataclass(frozen=True)
class ValidationReport:
    n: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if c.status == "fail":
                return c
        return None

    def describe(self) -> str:
        head = f"candidate on {self.n} element(s): " + (
            "valid birack" if self.ok else "NOT a birack"
        )
        return "\n".join([head] + ["  " + c.describe() for c in self.checks])


def _as_table(rows) -> Table:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _check_shape(b1, b2) -> int:
    n = len(b1)
    if n == 0 or len(b2) != n:
        raise ValueError("tables must be non-empty and of equal size")
    for t in (b1, b2):
        for row in t:
            if len(row) != n:
                raise ValueError("tables must be square")
            for v in row:
                if not 0 <= v < n:
                    raise ValueError(f"table entry {v} out of range 0..{n - 1}")
    return n


def _analyze(b1: Table, b2: Table):
    """Run every axiom check; return (report, derived-or-None).

    Later checks that depend on structure a failed check was meant to
    provide are reported as skipped.
    """
    n = _check_shape(b1, b2)
    rng = range(n)
    checks: list[CheckResult] = []

    # (x, y) -> (B1, B2) bijective on pairs.
    seen: dict[tuple[int, int], tuple[int, int]] = {}
    pair_witness = None
    for x in rng:
        for y in rng:
            img = (b1[x][y], b2[x][y])
            if img in seen and pair_witness is None:
                pair_witness = (seen[img], (x, y))
            seen.setdefault(img, (x, y))
    if pair_witness is None:
        checks.append(CheckResult(AXIOM_PAIR, "pass"))
    else:
        checks.append(
            CheckResult(
                AXIOM_PAIR,
                "fail",
                pair_witness,
                f"B{pair_witness[0]} = B{pair_witness[1]}",
            )
        )

    # Sideways map existence/uniqueness: B1 rows and B2 columns bijective.
    sideways_witness = None
    for x in rng:
        if len(set(b1[x])) != n:
            sideways_witness = ("B1-row", x)
            break
    if sideways_witness is None:
        for y in rng:
            if len({b2[x][y] for x in rng}) != n:
                sideways_witness = ("B2-column", y)
                break
    if sideways_witness is None:
        checks.append(CheckResult(AXIOM_SIDEWAYS, "pass"))
    else:
        kind, idx = sideways_witness
        checks.append(
            CheckResult(
                AXIOM_SIDEWAYS,
                "fail",
                sideways_witness,
                f"{kind} {idx} is not a bijection",
            )
        )
        checks.append(CheckResult(AXIOM_DIAGONAL, "skipped"))
        checks.append(CheckResult(AXIOM_YBE, "skipped"))
        return ValidationReport(n, tuple(checks)), None

    # Derive S: S(B1(x,y), x) = (B2(x,y), y).
    s1 = [[0] * n for _ in rng]
    s2 = [[0] * n for _ in rng]
    for x in rng:
        for y in rng:
            a = b1[x][y]
            s1[a][x] = b2[x][y]
            s2[a][x] = y
    # S is invertible because B2 columns are bijections; invert it.
    s1inv = [[0] * n for _ in rng]
    s2inv = [[0] * n for _ in rng]
    for a in rng:
        for x in rng:
            u, v = s1[a][x], s2[a][x]
            s1inv[u][v] = a
            s2inv[u][v] = x

    # Diagonal bijectivity of S and S^-1.
    diag = {
        "S1 o diag": tuple(s1[x][x] for x in rng),
        "S2 o diag": tuple(s2[x][x] for x in rng),
        "S1^-1 o diag": tuple(s1inv[x][x] for x in rng),
        "S2^-1 o diag": tuple(s2inv[x][x] for x in rng),
    }
    diag_witness = None
    for name, mapping in diag.items():
        if len(set(mapping)) != n:
            diag_witness = (name,)
            break
    if diag_witness is None:
        checks.append(CheckResult(AXIOM_DIAGONAL, "pass"))
    else:
        checks.append(
            CheckResult(
                AXIOM_DIAGONAL,
                "fail",
                diag_witness,
                f"{diag_witness[0]} is not a bijection",
            )
        )
        checks.append(CheckResult(AXIOM_YBE, "skipped"))
        return ValidationReport(n, tuple(checks)), None

    # Set-theoretic Yang-Baxter equation, componentwise on all triples.
    ybe_witness = None
    ybe_detail = ""
    for x in rng:
        for y in rng:
            b1xy = b1[x][y]
            b2xy = b2[x][y]
            for z in rng:
                m = b1[y][z]
                inner = b1[b2xy][z]
                if b1[x][m] != b1[b1xy][inner]:
                    ybe_witness, ybe_detail = (x, y, z), "component equation 1"
                    break
                lhs_mid = b2[x][m]
                b2yz = b2[y][z]
                if b1[lhs_mid][b2yz] != b2[b1xy][inner]:
                    ybe_witness, ybe_detail = (x, y, z), "component equation 2"
                    break
                if b2[lhs_mid][b2yz] != b2[b2xy][z]:
                    ybe_witness, ybe_detail = (x, y, z), "component equation 3"
                    break
            if ybe_witness:
                break
        if ybe_witness:
            break
    if ybe_witness is None:
        checks.append(CheckResult(AXIOM_YBE, "pass"))
    else:
        checks.append(CheckResult(AXIOM_YBE, "fail", ybe_witness, ybe_detail))

    report = ValidationReport(n, tuple(checks))
    if not report.ok:
        return report, None

    derived = (
        _as_table(s1),
        _as_table(s2),
        _as_table(s1inv),
        _as_table(s2inv),
    )
    return report, derived


def verify_axioms(b1, b2) -> ValidationReport:
    """Check candidate tables against every birack axiom.

    Failures are data, not errors: the report carries pass/fail per axiom
    with the first witness.  The report passes exactly when FiniteBirack
    would construct successfully from the same tables.
    """
    report, _ = _analyze(_as_table(b1), _as_table(b2))
    return report


# ---------------------------------------------------------------------------
# FiniteBirack
# ---------------------------------------------------------------------------

class FiniteBirack:
    """A verified finite birack with all derived structure.

    Tables use natural indexing: b1[x][y] = B1(x, y), b2[x][y] = B2(x, y),
    with elements 0-indexed (the file format is 1-indexed and transposes
    the B1 block; see the module docstring).  Instances are immutable and
    safe to share between threads.
    """

    __slots__ = (
        "n", "b1", "b2", "b1inv", "b2inv",
        "s1", "s2", "s1inv", "s2inv",
        "alpha", "pi", "rank",
    )

    def __init__(self, b1, b2):
        b1 = _as_table(b1)
        b2 = _as_table(b2)
        report, derived = _analyze(b1, b2)
        if not report.ok:
            bad = report.first_failure
            raise AxiomViolation(bad.name, bad.witness, bad.detail)
        self.n = report.n
        self.b1 = b1
        self.b2 = b2
        self.s1, self.s2, self.s1inv, self.s2inv = derived

        n = self.n
        rng = range(n)
        b1inv = [[0] * n for _ in rng]
        b2inv = [[0] * n for _ in rng]
        for x in rng:
            for y in rng:
                u, v = b1[x][y], b2[x][y]
                b1inv[u][v] = x
                b2inv[u][v] = y
        self.b1inv = _as_table(b1inv)
        self.b2inv = _as_table(b2inv)

        # Kink structure: alpha = (S2^-1 o diag)^-1, pi = (S1^-1 o diag) o alpha.
        d1i = tuple(self.s1inv[x][x] for x in rng)
        d2i = tuple(self.s2inv[x][x] for x in rng)
        self.alpha = invert_perm(d2i)
        self.pi = compose_perms(d1i, self.alpha)
        self.rank = perm_order(self.pi)

        # Internal consistency guaranteed by the axioms; cheap to assert.
        d1 = tuple(self.s1[x][x] for x in rng)
        d2 = tuple(self.s2[x][x] for x in rng)
        phi = compose_perms(d1, invert_perm(d2))
        assert phi == self.pi, "double-kink maps disagree"
        for x in rng:
            a = self.alpha[x]
            assert self.s1[self.pi[x]][x] == a and self.s2[self.pi[x]][x] == a, (
                "kink relation S(pi(x), x) = (alpha(x), alpha(x)) failed"
            )

    # ---------- maps ----------

    def apply(self, x: int, y: int) -> tuple[int, int]:
        """B(x, y)."""
        return self.b1[x][y], self.b2[x][y]

    def apply_inverse(self, u: int, v: int) -> tuple[int, int]:
        """B^-1(u, v)."""
        return self.b1inv[u][v], self.b2inv[u][v]

    def sideways(self, u: int, v: int) -> tuple[int, int]:
        """S(u, v)."""
        return self.s1[u][v], self.s2[u][v]

    def sideways_inverse(self, u: int, v: int) -> tuple[int, int]:
        """S^-1(u, v)."""
        return self.s1inv[u][v], self.s2inv[u][v]

    @property
    def kink_map(self) -> Perm:
        return self.pi

    def is_biquandle(self) -> bool:
        return self.pi == identity_perm(self.n)

    def is_rack(self) -> bool:
        return all(self.b2[x][y] == x for x in range(self.n) for y in range(self.n))

    # ---------- equality / hashing ----------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteBirack)
            and self.b1 == other.b1
            and self.b2 == other.b2
        )

    def __hash__(self) -> int:
        return hash((self.b1, self.b2))

    def __repr__(self) -> str:
        return f"FiniteBirack(n={self.n}, rank={self.rank})"


# ---------------------------------------------------------------------------
# Matrix I/O
# ---------------------------------------------------------------------------

def from_matrix(n: int, block) -> FiniteBirack:
    """Build a birack from an n x 2n block matrix [B1 | B2] of 1-indexed labels.

    Raises AxiomViolation (with the first witness) if the tables fail any
    axiom, ValueError on malformed input.
    """
    if n <= 0:
        raise ValueError("n must be positive")
    rows = [list(r) for r in block]
    if len(rows) != n or any(len(r) != 2 * n for r in rows):
        raise ValueError(f"expected {n} rows of {2 * n} entries")
    for r in rows:
        for v in r:
            if not 1 <= int(v) <= n:
                raise ValueError(f"entry {v} out of range 1..{n}")
    # Left block: row i, col j = B1(x_j, x_i); right: row i, col j = B2(x_i, x_j).
    b1 = [[rows[y][x] - 1 for y in range(n)] for x in range(n)]
    b2 = [[rows[x][n + y] - 1 for y in range(n)] for x in range(n)]
    return FiniteBirack(b1, b2)


def to_matrix(b: FiniteBirack) -> list[list[int]]:
    """The n x 2n block matrix [B1 | B2], 1-indexed (inverse of from_matrix)."""
    n = b.n
    return [
        [b.b1[x][y] + 1 for x in range(n)] + [b.b2[y][x] + 1 for x in range(n)]
        for y in range(n)
    ]


def format_matrix(b: FiniteBirack) -> str:
    """Matrix file text: first line n, then the block matrix rows."""
    width = len(str(b.n))
    lines = [str(b.n)]
    for row in to_matrix(b):
        lines.append(" ".join(str(v).rjust(width) for v in row))
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> tuple[int, list[list[int]]]:
    """Parse matrix file text -> (n, block rows); '#' lines are comments."""
    lines = [
        ln.strip() for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise ParseError("empty matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the element count, got {lines[0]!r}") from None
    if n <= 0:
        raise ParseError("element count must be positive")
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} matrix rows, found {len(lines) - 1}")
    block = []
    for ln in lines[1:]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise ParseError(f"non-integer entry in row {ln!r}") from None
        if len(row) != 2 * n:
            raise ParseError(f"expected {2 * n} entries per row, got {len(row)}")
        block.append(row)
    return n, block


def read_matrix_file(path) -> FiniteBirack:
    with open(path, encoding="utf-8") as fh:
        n, block = parse_matrix_text(fh.read())
    try:
        return from_matrix(n, block)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# Subbiracks and classification
# ---------------------------------------------------------------------------

def subbirack_closure(b: FiniteBirack, seed) -> frozenset[int]:
    """Smallest superset of seed closed under B1, B2, S1, S2 on pairs.

    Closure under the inverse maps follows automatically on a finite set
    (the restricted maps are injections of a finite square into itself)
    and is asserted rather than iterated.
    """
    current = set(seed)
    for x in current:
        if not 0 <= x < b.n:
            raise ValueError(f"seed element {x} out of range")
    while True:
        new = set()
        for x in current:
            for y in current:
                for v in (b.b1[x][y], b.b2[x][y], b.s1[x][y], b.s2[x][y]):
                    if v not in current:
                        new.add(v)
        if not new:
            break
        current |= new
    for x in current:
        for y in current:
            assert b.b1inv[x][y] in current and b.b2inv[x][y] in current
            assert b.s1inv[x][y] in current and b.s2inv[x][y] in current
    return frozenset(current)


def is_subbirack(b: FiniteBirack, subset) -> bool:
    sub = frozenset(subset)
    return bool(sub) and subbirack_closure(b, sub) == sub


def all_subbiracks(b: FiniteBirack) -> list[frozenset[int]]:
    """Every non-empty closed subset, sorted by size then lexicographically.

    Closed sets form a lattice generated by singleton closures under
    closure-of-union, so the search never enumerates all 2^n seeds.
    """
    found: set[frozenset[int]] = set()
    queue = [subbirack_closure(b, {x}) for x in range(b.n)]
    for s in queue:
        found.add(s)
    pending = list(found)
    while pending:
        current = pending.pop()
        for other in list(found):
            joined = subbirack_closure(b, current | other)
            if joined not in found:
                found.add(joined)
                pending.append(joined)
    return sorted(found, key=lambda s: (len(s), sorted(s)))


@dataclass(frozen=True)
class BirackClass:
    is_biquandle: bool
    is_rack: bool
    is_quandle: bool
    is_semiquandle: bool
    is_simple: bool

    def flags(self) -> dict[str, bool]:
        return {
            "is_biquandle": self.is_biquandle,
            "is_rack": self.is_rack,
            "is_quandle": self.is_quandle,
            "is_semiquandle": self.is_semiquandle,
            "is_simple": self.is_simple,
        }


def classify(b: FiniteBirack) -> BirackClass:
    """Special-case flags: biquandle (pi = id), rack (B2(x,y) = x),
    quandle (both), semiquandle (pi = id and B o B = id), and simple
    (no proper non-empty subbirack)."""
    biquandle = b.is_biquandle()
    rack = b.is_rack()
    involutory = all(
        b.apply(*b.apply(x, y)) == (x, y)
        for x in range(b.n)
        for y in range(b.n)
    )
    simple = all_subbiracks(b) == [frozenset(range(b.n))]
    return BirackClass(
        is_biquandle=biquandle,
        is_rack=rack,
        is_quandle=biquandle and rack,
        is_semiquandle=biquandle and involutory,
        is_simple=simple,
    )


# ---------------------------------------------------------------------------
# Exhaustive enumeration of small biracks
# ---------------------------------------------------------------------------

ENUMERATION_LIMIT = 3


def enumerate_biracks(n: int) -> list[FiniteBirack]:
    """All biracks on n elements (n <= 3), in a deterministic order.

    Candidates are the (n^2)! bijections of X x X, taken in lexicographic
    order of the flattened pair table; cheap bijectivity filters prune
    before the full axiom check runs.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATION_LIMIT:
        raise SizeTooLarge(
            f"enumerate_biracks supports n <= {ENUMERATION_LIMIT}, got {n}"
        )
    rng = range(n)
    results = []
    for p in itertools.permutations(range(n * n)):
        b1 = [[p[x * n + y] // n for y in rng] for x in rng]
        if any(len(set(row)) != n for row in b1):
            continue
        b2 = [[p[x * n + y] % n for y in rng] for x in rng]
        if any(len({b2[x][y] for x in rng}) != n for y in rng):
            continue
        report, _ = _analyze(_as_table(b1), _as_table(b2))
        if report.ok:
            results.append(FiniteBirack(b1, b2))
    return results
