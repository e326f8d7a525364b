"""Multiply-accumulate tally for the eigenvector reconstruction kernels.

The counter is scoped to the linear-combination work of the eigenvector
formulas (matrix products, outer products, column scalings). Root iteration
and vector normalization are excluded: the tally isolates the term that
separates the O(m*d) fast formulas from the O(m^2*d) truncated ones.
"""

from contextlib import contextmanager

_enabled = False
_count = 0


def add(n: int) -> None:
    global _count
    if _enabled:
        _count += int(n)


def reset() -> None:
    global _count
    _count = 0


def total() -> int:
    return _count


@contextmanager
def counting():
    """Enable the tally inside the block; restores the previous state."""
    global _enabled
    prev = _enabled
    _enabled = True
    try:
        yield
    finally:
        _enabled = prev
