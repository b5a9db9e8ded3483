"""Exact multivariate integer polynomials with a canonical text form.

Two value types live here:

* MultiPoly -- integer-coefficient polynomials in named variables with
  nonnegative integer exponents.  Used for writhe-enhanced invariants
  (variables q1..qc), image-enhanced invariants (variable z) and the
  four-variable birack polynomials (s1, s2, t1, t2).

* NestedPoly -- formal integer combinations of terms z^P where each
  exponent P is itself a MultiPoly.  Used for polynomial-enhanced
  invariant values.  Exponents are stored by their canonical string so
  that equality, hashing and serialization are trivially stable.

Canonical text grammar (also documented in the README):

  multipoly   := "0" | term (" + " term | " - " term)*
  term        := [coeff] factor*         -- coeff omitted when 1, at least
  factor      := var ["^" exponent]      -- one of coeff/factors present
  var         := letter+ digits*         -- e.g. q1, s2, t1, z
  nestedpoly  := "0" | nterm (" + " nterm | " - " nterm)*
  nterm       := [mult] "z^{" multipoly "}"

Variables are ordered q1 < q2 < ... < s1 < s2 < t1 < t2 < z, then any
other names lexicographically.  Monomials are ordered by total degree,
then by exponent vector, both descending, so the canonical string is
deterministic across runs and platforms.  A leading negative term is
rendered with a bare "-" prefix.
"""

from __future__ import annotations

import re

from .errors import ParseError

# Exponent vectors are stored as tuples of (variable, exponent) pairs,
# sorted by the canonical variable order, with zero exponents omitted.
ExponentKey = tuple[tuple[str, int], ...]

_FAMILY_ORDER = {"q": 0, "s": 1, "t": 2, "z": 3}

_VAR_RE = re.compile(r"^([A-Za-z]+)(\d*)$")


def _var_key(name: str) -> tuple:
    """Sort key realizing q1 < q2 < ... < s1 < s2 < t1 < t2 < z < rest."""
    m = _VAR_RE.match(name)
    if m:
        letters, digits = m.group(1), m.group(2)
        if letters in _FAMILY_ORDER:
            return (_FAMILY_ORDER[letters], int(digits) if digits else 0, "")
    return (4, 0, name)


def _normalize_key(exponents) -> ExponentKey:
    items = [(v, int(e)) for v, e in dict(exponents).items() if int(e) != 0]
    for v, e in items:
        if e < 0:
            raise ValueError(f"negative exponent {e} for variable {v}")
    items.sort(key=lambda ve: _var_key(ve[0]))
    return tuple(items)


class MultiPoly:
    """Immutable multivariate polynomial with integer coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict | None = None):
        clean: dict[ExponentKey, int] = {}
        if terms:
            for key, coeff in terms.items():
                coeff = int(coeff)
                if coeff == 0:
                    continue
                nkey = _normalize_key(key if not isinstance(key, tuple) else dict(key))
                clean[nkey] = clean.get(nkey, 0) + coeff
                if clean[nkey] == 0:
                    del clean[nkey]
        self._terms = clean

    # ---------- constructors ----------

    @staticmethod
    def zero() -> "MultiPoly":
        return MultiPoly()

    @staticmethod
    def constant(value: int) -> "MultiPoly":
        return MultiPoly({(): value})

    @staticmethod
    def monomial(exponents, coeff: int = 1) -> "MultiPoly":
        """Build coeff * prod(var^exp) from a {var: exp} mapping."""
        return MultiPoly({tuple(dict(exponents).items()): coeff})

    # ---------- inspection ----------

    @property
    def terms(self) -> dict[ExponentKey, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exponents) -> int:
        return self._terms.get(_normalize_key(dict(exponents)), 0)

    def total_sum(self) -> int:
        """Value at all variables = 1, i.e. the sum of the coefficients."""
        return sum(self._terms.values())

    def variables(self) -> list[str]:
        seen = {v for key in self._terms for v, _ in key}
        return sorted(seen, key=_var_key)

    # ---------- arithmetic ----------

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            new = merged.get(key, 0) + coeff
            if new == 0:
                merged.pop(key, None)
            else:
                merged[key] = new
        result = MultiPoly()
        result._terms = merged
        return result

    def __neg__(self) -> "MultiPoly":
        result = MultiPoly()
        result._terms = {key: -c for key, c in self._terms.items()}
        return result

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def substitute_one(self, variable: str) -> "MultiPoly":
        """Set one variable to 1, merging the collapsed monomials."""
        merged: dict[ExponentKey, int] = {}
        for key, coeff in self._terms.items():
            nkey = tuple((v, e) for v, e in key if v != variable)
            merged[nkey] = merged.get(nkey, 0) + coeff
        return MultiPoly({k: c for k, c in merged.items()})

    # ---------- canonical text ----------

    def _sorted_terms(self) -> list[tuple[ExponentKey, int]]:
        def order(item):
            key, _ = item
            degree = sum(e for _, e in key)
            vars_here = [v for v, _ in key]
            # Exponent vector over every variable present anywhere, in
            # canonical order; descending comparison via sort(reverse=True).
            vector = tuple(dict(key).get(v, 0) for v in self.variables())
            return (degree, vector, vars_here)

        return sorted(self._terms.items(), key=order, reverse=True)

    def canonical_string(self) -> str:
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for key, coeff in self._sorted_terms():
            factors = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in key
            )
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = factors
            else:
                body = f"{mag}{factors}"
            pieces.append(("-" if coeff < 0 else "+", body))
        sign, body = pieces[0]
        out = body if sign == "+" else "-" + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.canonical_string()!r})"

    def __str__(self) -> str:
        return self.canonical_string()


class NestedPoly:
    """Integer combination of z^P terms, P a canonical MultiPoly string."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[str, int] | None = None):
        clean: dict[str, int] = {}
        if terms:
            for exponent, mult in terms.items():
                mult = int(mult)
                if mult == 0:
                    continue
                if isinstance(exponent, MultiPoly):
                    exponent = exponent.canonical_string()
                # Re-canonicalize so keys are always in normal form.
                exponent = parse_multipoly(exponent).canonical_string()
                clean[exponent] = clean.get(exponent, 0) + mult
                if clean[exponent] == 0:
                    del clean[exponent]
        self._terms = clean

    @staticmethod
    def zero() -> "NestedPoly":
        return NestedPoly()

    @staticmethod
    def single(exponent: "MultiPoly | str", mult: int = 1) -> "NestedPoly":
        return NestedPoly({exponent: mult})

    @property
    def terms(self) -> dict[str, int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "NestedPoly") -> "NestedPoly":
        if not isinstance(other, NestedPoly):
            return NotImplemented
        merged = dict(self._terms)
        for key, mult in other._terms.items():
            new = merged.get(key, 0) + mult
            if new == 0:
                merged.pop(key, None)
            else:
                merged[key] = new
        result = NestedPoly()
        result._terms = merged
        return result

    def __neg__(self) -> "NestedPoly":
        result = NestedPoly()
        result._terms = {key: -m for key, m in self._terms.items()}
        return result

    def __sub__(self, other: "NestedPoly") -> "NestedPoly":
        if not isinstance(other, NestedPoly):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, NestedPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ---------- specializations ----------

    def specialize_z_one(self) -> int:
        """Set z = 1: the total multiplicity."""
        return sum(self._terms.values())

    def specialize_exponents_one(self) -> MultiPoly:
        """Set every variable inside the exponents to 1.

        Each exponent polynomial collapses to an integer, leaving an
        ordinary polynomial in z.
        """
        out = MultiPoly.zero()
        for exponent, mult in self._terms.items():
            k = parse_multipoly(exponent).total_sum()
            out = out + MultiPoly.monomial({"z": k}, mult)
        return out

    # ---------- canonical text ----------

    def canonical_string(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for exponent in sorted(self._terms):
            mult = self._terms[exponent]
            mag = abs(mult)
            body = f"z^{{{exponent}}}" if mag == 1 else f"{mag}z^{{{exponent}}}"
            pieces.append(("-" if mult < 0 else "+", body))
        sign, body = pieces[0]
        out = body if sign == "+" else "-" + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"NestedPoly({self.canonical_string()!r})"

    def __str__(self) -> str:
        return self.canonical_string()


# ---------------------------------------------------------------------------
# Parsing the canonical text back into values
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(r"^(\d+)?((?:[A-Za-z]+\d*(?:\^\d+)?)*)$")
_FACTOR_RE = re.compile(r"([A-Za-z]+\d*)(?:\^(\d+))?")


def _split_terms(text: str) -> list[tuple[int, str]]:
    """Split on top-level ' + ' / ' - ' separators; returns (sign, body)."""
    text = text.strip()
    if not text:
        raise ParseError("empty polynomial text")
    out: list[tuple[int, str]] = []
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:].lstrip()
    depth = 0
    current: list[str] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "{":
            depth += 1
        elif ch == "}":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced braces in {text!r}")
        if depth == 0 and text.startswith(" + ", i):
            out.append((sign, "".join(current)))
            sign, current, i = 1, [], i + 3
            continue
        if depth == 0 and text.startswith(" - ", i):
            out.append((sign, "".join(current)))
            sign, current, i = -1, [], i + 3
            continue
        current.append(ch)
        i += 1
    if depth != 0:
        raise ParseError(f"unbalanced braces in {text!r}")
    out.append((sign, "".join(current)))
    return out


def parse_multipoly(text: str) -> MultiPoly:
    """Parse the canonical MultiPoly grammar (round-trips canonical_string)."""
    text = text.strip()
    if text == "0":
        return MultiPoly.zero()
    result = MultiPoly.zero()
    for sign, body in _split_terms(text):
        body = body.strip()
        m = _TERM_RE.match(body)
        if not m or (m.group(1) is None and not m.group(2)):
            raise ParseError(f"bad polynomial term {body!r}")
        coeff = int(m.group(1)) if m.group(1) else 1
        exponents: dict[str, int] = {}
        consumed = 0
        for fm in _FACTOR_RE.finditer(m.group(2)):
            var = fm.group(1)
            exp = int(fm.group(2)) if fm.group(2) else 1
            exponents[var] = exponents.get(var, 0) + exp
            consumed += len(fm.group(0))
        if consumed != len(m.group(2)):
            raise ParseError(f"bad polynomial term {body!r}")
        result = result + MultiPoly.monomial(exponents, sign * coeff)
    return result


def parse_nestedpoly(text: str) -> NestedPoly:
    """Parse the canonical NestedPoly grammar (round-trips canonical_string)."""
    text = text.strip()
    if text == "0":
        return NestedPoly.zero()
    result = NestedPoly.zero()
    for sign, body in _split_terms(text):
        body = body.strip()
        m = re.match(r"^(\d+)?z\^\{(.*)\}$", body, re.DOTALL)
        if not m:
            raise ParseError(f"bad nested term {body!r}")
        mult = int(m.group(1)) if m.group(1) else 1
        exponent = parse_multipoly(m.group(2))
        result = result + NestedPoly.single(exponent, sign * mult)
    return result
