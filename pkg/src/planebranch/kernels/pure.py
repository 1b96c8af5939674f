"""Pure-Python kernel backend.

Tables are bitsets stored in arbitrary-precision integers, so every scan
below runs over machine words inside CPython's bignum routines rather than
over individual Python objects.
"""

from __future__ import annotations

NAME = "pure"

_EXPAND = [bytes((byte >> k) & 1 for k in range(8)) for byte in range(256)]


class Table:
    """Boolean table over [0, size), bit x set iff x is marked."""

    __slots__ = ("bits", "size", "mask")

    def __init__(self, size: int, bits: int = 0):
        self.size = size
        self.bits = bits
        self.mask = (1 << size) - 1


def make(size: int) -> Table:
    return Table(size)


def copy(t: Table) -> Table:
    return Table(t.size, t.bits)


def semigroup_table(p: int, m: int, size: int) -> Table:
    """Membership table of the semigroup generated by p and m.

    Built by doubling unions: close {0} under +p, then the result under +m.
    """
    t = Table(size)
    if size <= 0:
        return t
    bits = 1
    for step in (p, m):
        shift = step
        while shift < size:
            bits |= (bits << shift) & t.mask
            shift <<= 1
    t.bits = bits
    return t


def get(t: Table, x: int) -> int:
    if not 0 <= x < t.size:
        raise IndexError(f"position {x} outside [0, {t.size})")
    return (t.bits >> x) & 1


def or_shift(e: Table, t: Table, g: int) -> None:
    """Merge the shifted table into e: e |= (t + g), clipped to e's size."""
    e.bits |= (t.bits << g) & e.mask


def min_common_shift(e: Table, t: Table, g: int) -> int:
    """Smallest x >= g with x marked in e and x - g marked in t, else -1."""
    common = e.bits & (t.bits << g)
    if common == 0:
        return -1
    return (common & -common).bit_length() - 1


def first_clear(t: Table, start: int) -> int:
    """Smallest x >= start not marked in t, else -1."""
    if start >= t.size:
        return -1
    clear = (~t.bits & t.mask) >> start
    if clear == 0:
        return -1
    return start + (clear & -clear).bit_length() - 1


def last_clear(t: Table) -> int:
    """Largest x < size not marked in t, else -1."""
    clear = ~t.bits & t.mask
    return clear.bit_length() - 1


def count(t: Table) -> int:
    return t.bits.bit_count()


def count_and_not(a: Table, b: Table) -> int:
    """Number of x marked in a but not in b."""
    return (a.bits & ~b.bits & a.mask).bit_count()


def equal(a: Table, b: Table) -> bool:
    return a.size == b.size and a.bits == b.bits


def to_bytes01(t: Table) -> bytes:
    """One byte (0 or 1) per table entry."""
    packed = t.bits.to_bytes((t.size + 7) // 8, "little")
    return b"".join(map(_EXPAND.__getitem__, packed))[: t.size]
