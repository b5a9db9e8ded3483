"""Constructors for the standard birack families.

* constant_action(tau, rho): B(x, y) = (tau(y), rho(x)) for commuting
  bijections tau, rho.  The derived kink map is tau o rho.

* tsr_birack(n, t, s, r, m): the linear birack B(x, y) = (ty + sx, rx)
  on (Z_n)^m, defined whenever t and r are units and s^2 = (1 - tr)s
  (mod n).  Its kink map is multiplication by tr + s, so the rank is the
  multiplicative order of tr + s mod n.  Special cases: r = 1 gives
  (t, s)-racks, s = 1 - tr gives Alexander biquandles, both together
  give Alexander quandles, and (t, s, r) = (n - 1, 2, 1) gives the
  dihedral quandle.

* tau_sigma_rho_birack(cayley, tau, sigma, rho): the group-based birack
  B(x, y) = (tau(y) * sigma(x), rho(x)) for automorphisms tau, rho and an
  endomorphism sigma of a finite group G, with rho commuting with tau and
  sigma and the compatibility identity

      tau(sigma(y)) * sigma(z)
          = tau(sigma(rho(z))) * sigma(tau(y)) * sigma(sigma(z))

  holding for all y, z.  The kink map is x -> tau(rho(x)) * sigma(x).

Every constructor builds explicit tables and runs them through the full
axiom verification, then asserts its family's closed-form kink map
against the table-derived one; the closed forms are treated as checks,
never as the source of truth.
"""

from __future__ import annotations

from math import gcd

from .core import FiniteBirack, Perm, compose_perms
from .errors import ConstructionError


# ---------------------------------------------------------------------------
# Constant action biracks
# ---------------------------------------------------------------------------

def _check_perm(p, name: str) -> Perm:
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"{name} is not a permutation of 0..{len(p) - 1}")
    return p


def constant_action(tau, rho) -> FiniteBirack:
    """The birack B(x, y) = (tau(y), rho(x)); requires tau o rho = rho o tau."""
    tau = _check_perm(tau, "tau")
    rho = _check_perm(rho, "rho")
    if len(tau) != len(rho):
        raise ValueError("tau and rho must act on the same set")
    n = len(tau)
    if compose_perms(tau, rho) != compose_perms(rho, tau):
        raise ConstructionError("NonCommuting", "tau and rho do not commute")
    b1 = [[tau[y] for y in range(n)] for _ in range(n)]
    b2 = [[rho[x]] * n for x in range(n)]
    b = FiniteBirack(b1, b2)
    assert b.pi == compose_perms(tau, rho), "constant action kink map mismatch"
    return b


# ---------------------------------------------------------------------------
# (t, s, r) biracks on (Z_n)^m
# ---------------------------------------------------------------------------

def tsr_birack(n: int, t: int, s: int, r: int, m: int = 1) -> FiniteBirack:
    """Linear birack B(x, y) = (ty + sx, rx) componentwise on (Z_n)^m.

    Elements of (Z_n)^m are flattened by lexicographic index
    x0 + x1*n + ... + x_{m-1}*n^{m-1}.
    """
    if n < 2:
        raise ValueError("modulus must be at least 2")
    if m < 1:
        raise ValueError("tuple length must be at least 1")
    t, s, r = t % n, s % n, r % n
    if gcd(t, n) != 1:
        raise ConstructionError("NotInvertible", f"t = {t} is not a unit mod {n}")
    if gcd(r, n) != 1:
        raise ConstructionError("NotInvertible", f"r = {r} is not a unit mod {n}")
    if (s * s - (1 - t * r) * s) % n != 0:
        raise ConstructionError(
            "IdealViolation", f"s^2 = {(s * s) % n} but (1 - tr)s = {((1 - t * r) * s) % n} mod {n}"
        )

    # The defining identities of the coefficient ring hold mod n:
    # (tr + s) * t^-1 r^-1 (1 - s) = 1 and (1 - s)(1 + t^-1 r^-1 s) = 1.
    tinv = pow(t, -1, n)
    rinv = pow(r, -1, n)
    k = (t * r + s) % n
    assert (k * tinv * rinv * (1 - s)) % n == 1 % n
    assert ((1 - s) * (1 + tinv * rinv * s)) % n == 1 % n

    size = n ** m

    def unflatten(e: int) -> tuple[int, ...]:
        coords = []
        for _ in range(m):
            coords.append(e % n)
            e //= n
        return tuple(coords)

    def flatten(coords) -> int:
        e = 0
        for c in reversed(coords):
            e = e * n + c
        return e

    elements = [unflatten(e) for e in range(size)]
    b1 = [[0] * size for _ in range(size)]
    b2 = [[0] * size for _ in range(size)]
    for xi, x in enumerate(elements):
        for yi, y in enumerate(elements):
            b1[xi][yi] = flatten(tuple((t * yc + s * xc) % n for xc, yc in zip(x, y)))
            b2[xi][yi] = flatten(tuple((r * xc) % n for xc in x))
    b = FiniteBirack(b1, b2)

    expected_pi = tuple(
        flatten(tuple((k * c) % n for c in elements[e])) for e in range(size)
    )
    assert b.pi == expected_pi, "tsr kink map is not multiplication by tr + s"
    order = 1
    acc = k
    while acc != 1 % n:
        acc = (acc * k) % n
        order += 1
    assert b.rank == order, "tsr rank differs from the order of tr + s"
    return b


# ---------------------------------------------------------------------------
# Group-based (tau, sigma, rho) biracks
# ---------------------------------------------------------------------------

class CayleyGroup:
    """A finite group presented by its Cayley table (0-indexed)."""

    def __init__(self, table):
        table = tuple(tuple(int(v) for v in row) for row in table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise ConstructionError("NotAGroup", "Cayley table must be square")
        for row in table:
            for v in row:
                if not 0 <= v < n:
                    raise ConstructionError(
                        "NotAGroup", f"table entry {v} out of range 0..{n - 1}"
                    )
        self.n = n
        self.table = table

        identity = None
        for e in range(n):
            if all(table[e][x] == x and table[x][e] == x for x in range(n)):
                identity = e
                break
        if identity is None:
            raise ConstructionError("NotAGroup", "no identity element")
        self.identity = identity

        inv = [None] * n
        for x in range(n):
            for y in range(n):
                if table[x][y] == identity and table[y][x] == identity:
                    inv[x] = y
                    break
            if inv[x] is None:
                raise ConstructionError("NotAGroup", f"element {x} has no inverse")
        self.inverse = tuple(inv)

        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if table[table[x][y]][z] != table[x][table[y][z]]:
                        raise ConstructionError(
                            "NotAGroup",
                            "multiplication is not associative",
                            witness=(x, y, z),
                        )

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def is_homomorphism(self, f) -> bool:
        return all(
            f[self.mul(x, y)] == self.mul(f[x], f[y])
            for x in range(self.n)
            for y in range(self.n)
        )


def tau_sigma_rho_birack(cayley, tau, sigma, rho) -> FiniteBirack:
    """Group birack B(x, y) = (tau(y) * sigma(x), rho(x)).

    cayley may be a CayleyGroup or a raw 0-indexed table.  tau and rho
    must be automorphisms, sigma an endomorphism; rho must commute with
    both, and the compatibility identity must hold for all pairs.
    """
    group = cayley if isinstance(cayley, CayleyGroup) else CayleyGroup(cayley)
    n = group.n
    tau = tuple(int(v) for v in tau)
    sigma = tuple(int(v) for v in sigma)
    rho = tuple(int(v) for v in rho)
    for name, f in (("tau", tau), ("sigma", sigma), ("rho", rho)):
        if len(f) != n or any(not 0 <= v < n for v in f):
            raise ValueError(f"{name} must map onto 0..{n - 1}")

    for name, f in (("tau", tau), ("rho", rho)):
        if sorted(f) != list(range(n)) or not group.is_homomorphism(f):
            raise ConstructionError(
                "NotAutomorphism", f"{name} is not an automorphism"
            )
    if not group.is_homomorphism(sigma):
        raise ConstructionError("NotEndomorphism", "sigma is not an endomorphism")

    if compose_perms(rho, tau) != compose_perms(tau, rho):
        raise ConstructionError("NotCommuting", "rho and tau do not commute")
    if tuple(rho[sigma[x]] for x in range(n)) != tuple(sigma[rho[x]] for x in range(n)):
        raise ConstructionError("NotCommuting", "rho and sigma do not commute")

    mul = group.mul
    for y in range(n):
        for z in range(n):
            lhs = mul(tau[sigma[y]], sigma[z])
            rhs = mul(mul(tau[sigma[rho[z]]], sigma[tau[y]]), sigma[sigma[z]])
            if lhs != rhs:
                raise ConstructionError(
                    "Eq4Fails",
                    "compatibility identity fails",
                    witness=(y, z),
                )

    b1 = [[mul(tau[y], sigma[x]) for y in range(n)] for x in range(n)]
    b2 = [[rho[x]] * n for x in range(n)]
    b = FiniteBirack(b1, b2)

    expected_pi = tuple(mul(tau[rho[x]], sigma[x]) for x in range(n))
    assert b.pi == expected_pi, "group birack kink map mismatch"
    return b
