"""Fault-injection switches for mutation testing of the property suites.

Production code paths consult these flags at exactly three points.  All
flags are off by default; the suite runner enables one at a time to prove
the suites detect the corresponding defect.
"""

from contextlib import contextmanager

DROP_DIVISOR_PAIR = "drop-divisor-pair"    # delta skips the (2,2) pair of 4
SKIP_DELTA_CHECK = "skip-delta-check"      # word reduction ignores the index match
ONE_IS_PRIME = "one-is-prime"              # primality test accepts 1

ALL_MUTATIONS = (DROP_DIVISOR_PAIR, SKIP_DELTA_CHECK, ONE_IS_PRIME)

_active: set[str] = set()


def enable(name: str) -> None:
    if name not in ALL_MUTATIONS:
        raise ValueError(f"unknown mutation {name!r}; known: {', '.join(ALL_MUTATIONS)}")
    _active.add(name)


def disable_all() -> None:
    _active.clear()


def is_active(name: str) -> bool:
    return name in _active


@contextmanager
def enabled(name: str):
    enable(name)
    try:
        yield
    finally:
        _active.discard(name)
