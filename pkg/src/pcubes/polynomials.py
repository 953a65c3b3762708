"""Exact arithmetic on counting polynomials.

A polynomial is a tuple of arbitrary-precision ints, lowest degree first,
normalized so the last entry is nonzero; the zero polynomial is ().
Coefficients of counting polynomials are nonnegative; `poly` enforces that.
Subtraction is deliberately not provided.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Poly = tuple[int, ...]

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)


def normalize(coeffs: Sequence[int]) -> Poly:
    k = len(coeffs)
    while k > 0 and coeffs[k - 1] == 0:
        k -= 1
    return tuple(coeffs[:k])


def poly(coeffs: Iterable[int]) -> Poly:
    """Normalize a coefficient sequence; rejects negative entries."""
    seq = [int(c) for c in coeffs]
    for i, c in enumerate(seq):
        if c < 0:
            raise ValueError(f"negative coefficient {c} at degree {i}")
    return normalize(seq)


def degree(p: Poly) -> int:
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return normalize(out)


def scale(p: Poly, k: int) -> Poly:
    return normalize([k * c for c in p])


def power(p: Poly, k: int) -> Poly:
    if k < 0:
        raise ValueError("negative exponent")
    out = ONE
    base = p
    while k:
        if k & 1:
            out = mul(out, base)
        base = mul(base, base)
        k >>= 1
    return out


def shift(p: Poly, c: int) -> Poly:
    """Compose with x + c, i.e. return the coefficients of p(x + c)."""
    if c < 0:
        raise ValueError("shift amount must be nonnegative")
    out: Poly = ZERO
    for coeff in reversed(p):
        out = add(mul(out, (c, 1)), (coeff,))
    return out


def evaluate(p: Poly, t: int) -> int:
    acc = 0
    for coeff in reversed(p):
        acc = acc * t + coeff
    return acc


def poly_leq(p: Poly, q: Poly) -> bool:
    """Coefficientwise order: deg p <= deg q and every p_i <= q_i."""
    if len(p) > len(q):
        return False
    return all(a <= b for a, b in zip(p, q))


def poly_lt(p: Poly, q: Poly) -> bool:
    return p != q and poly_leq(p, q)


def is_unimodal(p: Sequence[int]) -> bool:
    """True iff the sequence never rises again after a strict fall.

    Plateaus are allowed on both slopes; empty and constant sequences count
    as unimodal.
    """
    fallen = False
    for a, b in zip(p, p[1:]):
        if b > a:
            if fallen:
                return False
        elif b < a:
            fallen = True
    return True


def is_log_concave(p: Sequence[int]) -> bool:
    """True iff p[i]^2 >= p[i-1] * p[i+1] for every interior index."""
    return all(
        p[i] * p[i] >= p[i - 1] * p[i + 1] for i in range(1, len(p) - 1)
    )


def has_internal_zeros(p: Sequence[int]) -> bool:
    """True iff a zero entry sits between two positive ones."""
    first = None
    last = None
    for i, c in enumerate(p):
        if c > 0:
            if first is None:
                first = i
            last = i
    if first is None:
        return False
    return any(p[i] == 0 for i in range(first, last))


def to_strings(p: Poly) -> list[str]:
    """JSON-safe form: decimal strings, lowest degree first."""
    return [str(c) for c in p]


def from_strings(items: Sequence[str]) -> Poly:
    return poly(int(s) for s in items)
