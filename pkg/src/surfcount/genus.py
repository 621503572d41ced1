"""Half-integer genus bookkeeping.

Genus lives in (1/2)N, so everywhere in this package it is stored doubled
as a plain non-negative int ``g2 = 2g``.  Parity of ``g2`` tells integer
genus apart from the half-integer (non-orientable only) values, and the
Euler characteristic 2 - 2g = 2 - g2 stays integral.
"""

from __future__ import annotations


def check_g2(g2: int) -> int:
    if g2 < 0:
        raise ValueError(f"doubled genus must be >= 0, got {g2}")
    return g2


def euler_characteristic(g2: int) -> int:
    return 2 - check_g2(g2)


def genus_label(g2: int) -> str:
    """Human form: 0, 1/2, 1, 3/2, ..."""
    check_g2(g2)
    return str(g2 // 2) if g2 % 2 == 0 else f"{g2}/2"


def parse_genus(text: str) -> int:
    """Parse "2", "7/2" or "3.5" into the doubled-genus integer."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        if den.strip() != "2":
            raise ValueError(f"genus denominator must be 2: {text!r}")
        g2 = int(num)
    elif "." in text:
        val = float(text)
        g2 = round(2 * val)
        if abs(2 * val - g2) > 1e-9:
            raise ValueError(f"genus must be a half-integer: {text!r}")
    else:
        g2 = 2 * int(text)
    return check_g2(g2)
