"""Signatures (h; m_1,...,m_r) and the Riemann-Hurwitz arithmetic on them.

All characteristic arithmetic is exact (``fractions.Fraction``); nothing in
here touches floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

__all__ = [
    "Signature",
    "SignatureSyntaxError",
    "check_genus",
    "format_signature",
    "is_potential",
    "parse_signature",
    "reduced_euler",
    "required_group_order",
]


class SignatureSyntaxError(ValueError):
    """Raised when signature text does not match ``(h; m1,...,mr)``."""

    def __init__(self, message: str, token: str):
        super().__init__(f"{message}: {token!r}")
        self.token = token


def check_genus(genus: int) -> int:
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 2:
        raise ValueError(f"genus must be an integer >= 2, got {genus!r}")
    return genus


@dataclass(frozen=True)
class Signature:
    """Quotient genus plus branch orders, periods kept non-decreasing."""

    orbit_genus: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        if self.orbit_genus < 0:
            raise ValueError(f"orbit genus must be >= 0, got {self.orbit_genus}")
        periods = tuple(sorted(int(m) for m in self.periods))
        if periods and periods[0] < 2:
            raise ValueError(f"periods must be >= 2, got {periods[0]}")
        object.__setattr__(self, "periods", periods)

    @property
    def r(self) -> int:
        return len(self.periods)

    @property
    def sort_key(self) -> tuple:
        return (self.orbit_genus, len(self.periods), self.periods)

    def __str__(self) -> str:
        return format_signature(self)


@lru_cache(maxsize=1 << 16)
def reduced_euler(sig: Signature) -> Fraction:
    """Return h - 1 + 1/2 * sum(1 - 1/m_i), over the common denominator 2*lcm."""
    L = lcm(*sig.periods) if sig.periods else 1
    num = 2 * (sig.orbit_genus - 1) * L + sum(L - L // m for m in sig.periods)
    return Fraction(num, 2 * L)


def required_group_order(sig: Signature, genus: int) -> int | None:
    """Group order N forced by Riemann-Hurwitz, ignoring period divisibility.

    Returns None when the characteristic is not positive or (genus - 1)/chi
    is not an integer.
    """
    chi = reduced_euler(sig)
    if chi <= 0:
        return None
    n = (check_genus(genus) - 1) / chi
    if n.denominator != 1:
        return None
    return n.numerator


def is_potential(sig: Signature, genus: int) -> bool:
    n = required_group_order(sig, genus)
    return n is not None and all(n % m == 0 for m in sig.periods)


def period_lcm(sig: Signature) -> int:
    return lcm(*sig.periods) if sig.periods else 1


_OUTER = re.compile(r"^\s*\(\s*([^;()]*?)\s*;\s*([^;()]*?)\s*\)\s*$")
_INT = re.compile(r"^[0-9]+$")


def parse_signature(text: str) -> Signature:
    """Parse ``"(h; m1,...,mr)"`` or ``"(h; -)"`` into canonical form."""
    m = _OUTER.match(text)
    if not m:
        raise SignatureSyntaxError("expected '(h; m1,...,mr)' or '(h; -)'", text)
    h_tok, body = m.groups()
    if not _INT.match(h_tok):
        raise SignatureSyntaxError("orbit genus must be a non-negative integer", h_tok)
    if body == "-":
        return Signature(int(h_tok), ())
    periods = []
    for tok in body.split(","):
        tok = tok.strip()
        if not _INT.match(tok):
            raise SignatureSyntaxError("period must be a positive integer", tok)
        if int(tok) < 2:
            raise SignatureSyntaxError("period must be >= 2", tok)
        periods.append(int(tok))
    return Signature(int(h_tok), tuple(periods))


def format_signature(sig: Signature) -> str:
    body = ",".join(map(str, sig.periods)) if sig.periods else "-"
    return f"({sig.orbit_genus}; {body})"
