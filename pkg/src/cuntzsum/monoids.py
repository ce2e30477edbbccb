"""Multiplicative monoid combinatorics: primes, generated submonoids,
windowed subset predicates, complement duality, and the prime-set lattice.

Membership in a submonoid generated by a set of primes is decided
globally through prime factorization.  Claims about arbitrary subsets
are verified exhaustively inside a finite window and reported as such.
A free-monoid backend exercises the same predicates without
commutativity.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Protocol

from . import mutations
from .errors import InputError


def is_prime(n: int) -> bool:
    if n < 1:
        return False
    if n == 1:
        return mutations.is_active(mutations.ONE_IS_PRIME)
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(bound: int) -> list[int]:
    return [n for n in range(1, bound + 1) if is_prime(n)]


def next_prime_after(n: int) -> int:
    k = n + 1
    while not is_prime(k):
        k += 1
    return k


def prime_factorize(n: int) -> list[int]:
    """Prime factors with multiplicity, ascending; empty for n = 1."""
    if n < 1:
        raise InputError(f"prime_factorize requires n >= 1, got {n}")
    factors = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors.append(n)
    return factors


def divisor_pairs(n: int) -> list[tuple[int, int]]:
    """Ordered pairs (m, l) with m*l == n, in increasing m."""
    if n < 1:
        raise InputError(f"divisor_pairs requires n >= 1, got {n}")
    small = [m for m in range(1, int(n**0.5) + 1) if n % m == 0]
    divisors = small + [n // m for m in reversed(small) if m * m != n]
    return [(m, n // m) for m in divisors]


class PrimeSet:
    """A finite or cofinite set of prime numbers."""

    __slots__ = ("cofinite", "primes")

    def __init__(self, primes: Iterable[int] = (), cofinite: bool = False):
        primes = frozenset(int(p) for p in primes)
        for p in primes:
            if not is_prime(p):
                raise InputError(f"{p} is not prime")
        object.__setattr__(self, "primes", primes)
        object.__setattr__(self, "cofinite", bool(cofinite))

    def __setattr__(self, name, value):
        raise AttributeError("PrimeSet is immutable")

    @classmethod
    def finite(cls, primes: Iterable[int]) -> "PrimeSet":
        return cls(primes)

    @classmethod
    def excluding(cls, primes: Iterable[int]) -> "PrimeSet":
        return cls(primes, cofinite=True)

    @classmethod
    def all_primes(cls) -> "PrimeSet":
        return cls((), cofinite=True)

    def contains(self, p: int) -> bool:
        return (p in self.primes) != self.cofinite

    def union(self, other: "PrimeSet") -> "PrimeSet":
        if not self.cofinite and not other.cofinite:
            return PrimeSet(self.primes | other.primes)
        if self.cofinite and other.cofinite:
            return PrimeSet(self.primes & other.primes, cofinite=True)
        fin, cof = (self, other) if not self.cofinite else (other, self)
        return PrimeSet(cof.primes - fin.primes, cofinite=True)

    def intersection(self, other: "PrimeSet") -> "PrimeSet":
        if not self.cofinite and not other.cofinite:
            return PrimeSet(self.primes & other.primes)
        if self.cofinite and other.cofinite:
            return PrimeSet(self.primes | other.primes, cofinite=True)
        fin, cof = (self, other) if not self.cofinite else (other, self)
        return PrimeSet(fin.primes - cof.primes)

    def issubset(self, other: "PrimeSet") -> bool:
        if not self.cofinite and not other.cofinite:
            return self.primes <= other.primes
        if not self.cofinite and other.cofinite:
            return not (self.primes & other.primes)
        if self.cofinite and other.cofinite:
            return other.primes <= self.primes
        return False  # a cofinite set is never inside a finite one

    def separating_prime(self, other: "PrimeSet") -> int | None:
        """Smallest prime in the symmetric difference, None when equal."""
        if self == other:
            return None
        listed = sorted(self.primes | other.primes)
        for p in listed:
            if self.contains(p) != other.contains(p):
                return p
        # Modes differ beyond every listed prime.
        return next_prime_after(max(listed, default=1))

    def __eq__(self, other):
        if not isinstance(other, PrimeSet):
            return NotImplemented
        return self.cofinite == other.cofinite and self.primes == other.primes

    def __hash__(self):
        return hash((self.cofinite, self.primes))

    def describe(self) -> str:
        inside = ",".join(str(p) for p in sorted(self.primes)) or "-"
        return f"coprimes:{inside}" if self.cofinite else f"primes:{inside}"

    def __repr__(self):
        return f"PrimeSet({self.describe()})"


def lattice_join(f: PrimeSet, g: PrimeSet) -> PrimeSet:
    return f.union(g)


def lattice_meet(f: PrimeSet, g: PrimeSet) -> PrimeSet:
    return f.intersection(g)


class SubmonoidView:
    """Submonoid generated by a prime set; membership decided globally."""

    __slots__ = ("generator_set",)

    def __init__(self, generator_set: PrimeSet):
        object.__setattr__(self, "generator_set", generator_set)

    def __setattr__(self, name, value):
        raise AttributeError("SubmonoidView is immutable")

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        return all(self.generator_set.contains(p) for p in set(prime_factorize(n)))

    def members_up_to(self, bound: int) -> list[int]:
        return [n for n in range(1, bound + 1) if self.contains(n)]

    def __eq__(self, other):
        if not isinstance(other, SubmonoidView):
            return NotImplemented
        return self.generator_set == other.generator_set

    def __hash__(self):
        return hash(self.generator_set)

    def __repr__(self):
        return f"SubmonoidView({self.generator_set.describe()})"


class PowerSubmonoid:
    """The submonoid {1, k, k^2, ...}; not factorial for composite k."""

    __slots__ = ("base",)

    def __init__(self, base: int):
        if base < 2:
            raise InputError(f"power submonoid needs base >= 2, got {base}")
        object.__setattr__(self, "base", base)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSubmonoid is immutable")

    def contains(self, n: int) -> bool:
        if n < 1:
            return False
        while n % self.base == 0:
            n //= self.base
        return n == 1

    def members_up_to(self, bound: int) -> list[int]:
        out, k = [], 1
        while k <= bound:
            out.append(k)
            k *= self.base
        return out

    def __repr__(self):
        return f"PowerSubmonoid({self.base})"


NATURALS = SubmonoidView(PrimeSet.all_primes())


def submonoid_member(view: SubmonoidView, n: int) -> bool:
    if n < 1:
        raise InputError(f"membership requires n >= 1, got {n}")
    return view.contains(n)


class SubsetWindow(NamedTuple):
    """An explicit subset of {1..bound}."""

    bound: int
    members: frozenset[int]


def subset_window(bound: int, members: Iterable[int]) -> SubsetWindow:
    members = frozenset(int(m) for m in members)
    if bound < 1:
        raise InputError(f"window bound must be >= 1, got {bound}")
    bad = [m for m in members if not 1 <= m <= bound]
    if bad:
        raise InputError(f"members {sorted(bad)} outside window 1..{bound}")
    return SubsetWindow(bound, members)


def window_of(view, bound: int) -> SubsetWindow:
    """Window trace of any object with a ``contains`` method."""
    return SubsetWindow(bound, frozenset(n for n in range(1, bound + 1) if view.contains(n)))


# ---------------------------------------------------------------------------
# Generic monoid backends


class MonoidSpec(Protocol):
    """What a windowed-predicate backend must provide.

    Every element must have finitely many two-factor splittings, and the
    unit must be neutral on both sides.
    """

    unit: object

    def op(self, a, b): ...

    def elements(self, bound): ...

    def in_window(self, a, bound) -> bool: ...

    def factor_pairs(self, a): ...

    def size(self, a) -> int: ...

    def fits(self, size_a, size_b, bound) -> bool: ...

    def bounded_cofactors(self, s, bound): ...


class NaturalsMonoid:
    """(N, *) within the window {1..bound}."""

    unit = 1

    @staticmethod
    def op(a, b):
        return a * b

    @staticmethod
    def elements(bound):
        return range(1, bound + 1)

    @staticmethod
    def in_window(a, bound):
        return a <= bound

    @staticmethod
    def factor_pairs(a):
        return divisor_pairs(a)

    @staticmethod
    def size(a):
        return a

    @staticmethod
    def fits(size_a, size_b, bound):
        return size_a * size_b <= bound

    @staticmethod
    def bounded_cofactors(s, bound):
        """Elements a with op(a, s) still inside the window."""
        return range(1, bound // s + 1)


class FreeMonoid:
    """Words over a finite alphabet; the window is a length cap."""

    unit = ""

    def __init__(self, alphabet: str = "ab"):
        self.alphabet = alphabet

    @staticmethod
    def op(a, b):
        return a + b

    def elements(self, bound):
        out = [""]
        frontier = [""]
        for _ in range(bound):
            frontier = [w + ch for w in frontier for ch in self.alphabet]
            out.extend(frontier)
        return out

    @staticmethod
    def in_window(a, bound):
        return len(a) <= bound

    @staticmethod
    def factor_pairs(a):
        return [(a[:i], a[i:]) for i in range(len(a) + 1)]

    @staticmethod
    def size(a):
        return len(a)

    @staticmethod
    def fits(size_a, size_b, bound):
        return size_a + size_b <= bound

    def bounded_cofactors(self, s, bound):
        return self.elements(bound - len(s))


NATURALS_MONOID = NaturalsMonoid()
FREE_MONOID_AB = FreeMonoid("ab")


def factor_pairs(monoid, a):
    """All ordered pairs (b, c) with b*c == a in the given monoid."""
    return list(monoid.factor_pairs(a))


# ---------------------------------------------------------------------------
# Windowed subset predicates

class PredicateResult(NamedTuple):
    holds: bool
    witness: tuple | None


def _check_subsemigroup(monoid, members: set, bound: int) -> PredicateResult:
    if not members:
        return PredicateResult(False, ("empty",))
    ordered = _ordered(monoid, members)
    for a in ordered:
        sa = monoid.size(a)
        for b in ordered:
            if not monoid.fits(sa, monoid.size(b), bound):
                break
            ab = monoid.op(a, b)
            if ab not in members:
                return PredicateResult(False, (a, b, ab))
    return PredicateResult(True, None)


def _check_ideal(monoid, members: set, bound: int) -> PredicateResult:
    if not members:
        return PredicateResult(False, ("empty",))
    for s in _ordered(monoid, members):
        for a in monoid.bounded_cofactors(s, bound):
            for prod in (monoid.op(a, s), monoid.op(s, a)):
                if prod not in members:
                    return PredicateResult(False, (a, s, prod))
    return PredicateResult(True, None)


def _universe_set(monoid, bound: int) -> set:
    return set(monoid.elements(bound))


def _ordered(monoid, members):
    # deterministic iteration: by size, then by value
    return sorted(members, key=lambda a: (monoid.size(a), a))


def _check_factorial(monoid, members: set, bound: int) -> PredicateResult:
    if not members:
        return PredicateResult(False, ("empty",))
    if members == _universe_set(monoid, bound):
        return PredicateResult(False, ("improper",))
    for s in _ordered(monoid, members):
        for b, c in monoid.factor_pairs(s):
            if b not in members or c not in members:
                return PredicateResult(False, (s, b, c))
    return PredicateResult(True, None)


def _check_prime(monoid, members: set, bound: int) -> PredicateResult:
    if not members:
        return PredicateResult(False, ("empty",))
    if members == _universe_set(monoid, bound):
        return PredicateResult(False, ("improper",))
    for s in _ordered(monoid, members):
        for b, c in monoid.factor_pairs(s):
            if b not in members and c not in members:
                return PredicateResult(False, (s, b, c))
    return PredicateResult(True, None)


def is_subsemigroup(window: SubsetWindow) -> PredicateResult:
    return _check_subsemigroup(NATURALS_MONOID, set(window.members), window.bound)


def is_ideal(window: SubsetWindow) -> PredicateResult:
    return _check_ideal(NATURALS_MONOID, set(window.members), window.bound)


def is_factorial(window: SubsetWindow) -> PredicateResult:
    return _check_factorial(NATURALS_MONOID, set(window.members), window.bound)


def is_prime_subset(window: SubsetWindow) -> PredicateResult:
    return _check_prime(NATURALS_MONOID, set(window.members), window.bound)


class SideVerdicts(NamedTuple):
    """Predicate results for one side (a subset or its complement)."""

    proper_subsemigroup: PredicateResult
    proper_ideal: PredicateResult
    prime: PredicateResult
    factorial: PredicateResult
    factorial_submonoid: PredicateResult
    prime_ideal: PredicateResult


class DualityReport(NamedTuple):
    """Windowed complement-duality verdicts for a subset S.

    ``equivalences`` pairs each property of one side with its dual on the
    other: proper subsemigroup vs prime, proper ideal vs factorial (both
    orientations), and factorial submonoid vs prime ideal.
    """

    subset: SideVerdicts
    complement: SideVerdicts
    equivalences: tuple[tuple[str, bool], ...]
    consistent: bool

    def lines(self) -> list[str]:
        out = []
        for label, side in (("S", self.subset), ("S^c", self.complement)):
            for name, res in zip(side._fields, side):
                tail = "" if res.witness is None else f"  witness={res.witness}"
                out.append(f"{label} {name.replace('_', ' ')}: {'yes' if res.holds else 'no'}{tail}")
        for name, ok in self.equivalences:
            out.append(f"equivalence {name}: {'consistent' if ok else 'BROKEN'}")
        out.append(f"duality consistent: {'yes' if self.consistent else 'no'}")
        return out


def _and_results(*results: PredicateResult) -> PredicateResult:
    for res in results:
        if not res.holds:
            return res
    return PredicateResult(True, None)


def _proper(monoid, members: set, bound: int, inner: PredicateResult) -> PredicateResult:
    if members == _universe_set(monoid, bound):
        return PredicateResult(False, ("improper",))
    return inner


def _side_verdicts(monoid, members: set, bound: int) -> SideVerdicts:
    sub = _check_subsemigroup(monoid, members, bound)
    ideal = _check_ideal(monoid, members, bound)
    proper_sub = _proper(monoid, members, bound, sub)
    proper_ideal = _proper(monoid, members, bound, ideal)
    prime = _check_prime(monoid, members, bound)
    fact = _check_factorial(monoid, members, bound)
    unit_in = PredicateResult(monoid.unit in members, None if monoid.unit in members else ("missing unit",))
    return SideVerdicts(
        proper_subsemigroup=proper_sub,
        proper_ideal=proper_ideal,
        prime=prime,
        factorial=fact,
        factorial_submonoid=_and_results(fact, sub, unit_in),
        prime_ideal=_and_results(prime, ideal),
    )


def complement_duality_check(window: SubsetWindow = None, monoid=None, members=None, bound=None) -> DualityReport:
    """Check the subsemigroup/prime and ideal/factorial complement pairings.

    Works on a window over (N, *) by default; pass an explicit backend
    (with its member set and bound) for other monoids.
    """
    if monoid is None:
        monoid = NATURALS_MONOID
        members = set(window.members)
        bound = window.bound
    universe = _universe_set(monoid, bound)
    comp = universe - set(members)

    side = _side_verdicts(monoid, set(members), bound)
    dual = _side_verdicts(monoid, comp, bound)

    equivalences = (
        ("S proper subsemigroup <=> S^c prime", side.proper_subsemigroup.holds == dual.prime.holds),
        ("S proper ideal <=> S^c factorial", side.proper_ideal.holds == dual.factorial.holds),
        ("S^c proper subsemigroup <=> S prime", dual.proper_subsemigroup.holds == side.prime.holds),
        ("S^c proper ideal <=> S factorial", dual.proper_ideal.holds == side.factorial.holds),
        ("S factorial submonoid <=> S^c prime ideal", side.factorial_submonoid.holds == dual.prime_ideal.holds),
        ("S^c factorial submonoid <=> S prime ideal", dual.factorial_submonoid.holds == side.prime_ideal.holds),
    )
    return DualityReport(side, dual, equivalences, all(ok for _, ok in equivalences))
