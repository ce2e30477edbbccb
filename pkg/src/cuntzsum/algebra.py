"""Exact elements of the direct sum of all Cuntz algebras.

Component n is the algebra on isometries s_1,...,s_n with the relations
``s_i^* s_j = delta_ij I`` and ``sum_i s_i s_i^* = I``; component 1 is the
scalars, with s_1 identified with the unit.  An element is a finite linear
combination of monomials ``s_mu s_nu^*`` with Gaussian-rational
coefficients, supported on finitely many components, and monomials in
different components multiply to zero.

Equality of elements is decidable: within one component and one gauge
degree ``|mu| - |nu|``, monomials of a fixed nu-length are linearly
independent, and every monomial expands to the common nu-length via
``s_mu s_nu^* = sum_gamma s_{mu gamma} s_{nu gamma}^*``.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator, NamedTuple

from . import mutations
from .errors import InputError
from .scalars import ONE, Scalar


class CuntzMonomial(NamedTuple):
    """``s_mu s_nu^*`` in component ``n``; ``(n, (), ())`` is the unit I_n."""

    n: int
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.mu) - len(self.nu)

    @property
    def level(self) -> int:
        return len(self.nu)

    def is_unit(self) -> bool:
        return not self.mu and not self.nu

    def adjoint(self) -> "CuntzMonomial":
        return CuntzMonomial(self.n, self.nu, self.mu)

    def sort_key(self):
        # Groups by component, then degree class, then expansion level.
        return (self.n, self.degree, len(self.nu), self.nu, self.mu)


def monomial(n: int, mu: Iterable[int] = (), nu: Iterable[int] = ()) -> CuntzMonomial:
    """Validating constructor; collapses every component-1 word to I_1."""
    mu = tuple(mu)
    nu = tuple(nu)
    if n < 1:
        raise InputError(f"component index must be >= 1, got {n}")
    for word in (mu, nu):
        for letter in word:
            if not 1 <= letter <= n:
                raise InputError(f"letter {letter} out of range 1..{n} in component {n}")
    if n == 1:
        return CuntzMonomial(1, (), ())
    return CuntzMonomial(n, mu, nu)


class RawWord(NamedTuple):
    """Unreduced product of generators/adjoints; empty letters means the unit."""

    n: int
    letters: tuple[tuple[int, bool], ...]  # (index, starred)


def raw_word(n: int, letters: Iterable[tuple[int, bool]]) -> RawWord:
    letters = tuple((int(i), bool(star)) for i, star in letters)
    if n < 1:
        raise InputError(f"component index must be >= 1, got {n}")
    for i, _ in letters:
        if not 1 <= i <= n:
            raise InputError(f"letter {i} out of range 1..{n} in component {n}")
    return RawWord(n, letters)


class AlgebraElement:
    """Finitely supported map from monomials to nonzero scalars.

    Values are immutable; operators build new elements.  ``==`` compares
    the stored term maps; use :meth:`equals` for equality in the algebra
    (e.g. ``I_2`` versus ``s_1 s_1^* + s_2 s_2^*``).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        data: dict[CuntzMonomial, Scalar] = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for mono, coeff in items:
            if not isinstance(mono, CuntzMonomial):
                raise TypeError(f"expected CuntzMonomial key, got {mono!r}")
            coeff = Scalar.coerce(coeff)
            acc = data.get(mono)
            coeff = coeff if acc is None else acc + coeff
            if coeff.is_zero():
                data.pop(mono, None)
            else:
                data[mono] = coeff
        self._terms = data

    @classmethod
    def _raw(cls, data: dict[CuntzMonomial, Scalar]) -> "AlgebraElement":
        el = object.__new__(cls)
        el._terms = data
        return el

    def items(self):
        return self._terms.items()

    def terms(self) -> list[tuple[CuntzMonomial, Scalar]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0].sort_key())

    def coefficient(self, mono: CuntzMonomial) -> Scalar:
        return self._terms.get(mono, Scalar(0))

    def support_components(self) -> set[int]:
        return {m.n for m in self._terms}

    def component(self, n: int) -> "AlgebraElement":
        return AlgebraElement._raw({m: c for m, c in self._terms.items() if m.n == n})

    def restrict(self, keep) -> "AlgebraElement":
        """Sub-element of terms whose component satisfies ``keep(n)``."""
        return AlgebraElement._raw({m: c for m, c in self._terms.items() if keep(m.n)})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        data = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = data.get(mono)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                data.pop(mono, None)
            else:
                data[mono] = total
        return AlgebraElement._raw(data)

    def __neg__(self):
        return AlgebraElement._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        data: dict[CuntzMonomial, Scalar] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                prod = _mono_mul(ma, mb)
                if prod is None:
                    continue
                coeff = ca * cb
                acc = data.get(prod)
                total = coeff if acc is None else acc + coeff
                if total.is_zero():
                    data.pop(prod, None)
                else:
                    data[prod] = total
        return AlgebraElement._raw(data)

    def __rmul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def scale(self, coeff) -> "AlgebraElement":
        coeff = Scalar.coerce(coeff)
        if coeff.is_zero():
            return AlgebraElement._raw({})
        return AlgebraElement._raw({m: c * coeff for m, c in self._terms.items()})

    def adjoint(self) -> "AlgebraElement":
        return AlgebraElement._raw(
            {m.adjoint(): c.conjugate() for m, c in self._terms.items()}
        )

    def equals(self, other: "AlgebraElement") -> bool:
        return equals(self, other)

    def __repr__(self):
        if not self._terms:
            return "AlgebraElement(0)"
        bits = ", ".join(f"{m.n}:{m.mu}|{m.nu}:{c.literal()}" for m, c in self.terms())
        return f"AlgebraElement({bits})"


ZERO_ELEMENT = AlgebraElement._raw({})


def unit(n: int) -> AlgebraElement:
    return AlgebraElement._raw({monomial(n): ONE})


def generator(n: int, i: int) -> AlgebraElement:
    return AlgebraElement._raw({monomial(n, (i,)): ONE})


def from_monomial(mono: CuntzMonomial, coeff=1) -> AlgebraElement:
    coeff = Scalar.coerce(coeff)
    if coeff.is_zero():
        return ZERO_ELEMENT
    return AlgebraElement._raw({mono: coeff})


def _mono_mul(a: CuntzMonomial, b: CuntzMonomial) -> CuntzMonomial | None:
    """(s_mu s_nu^*)(s_alpha s_beta^*) or None when the product is zero."""
    if a.n != b.n:
        return None
    nu, alpha = a.nu, b.mu
    if len(alpha) >= len(nu):
        if alpha[: len(nu)] != nu:
            return None
        return CuntzMonomial(a.n, a.mu + alpha[len(nu):], b.nu)
    if nu[: len(alpha)] != alpha:
        return None
    return CuntzMonomial(a.n, a.mu, b.nu + nu[len(alpha):])


def reduce_word(word: RawWord) -> AlgebraElement:
    """Rewrite a raw word to zero or a single monomial.

    Repeatedly cancels an adjacent ``s_i^* s_j`` pair: to the unit when
    i == j, to zero otherwise.  Each step removes two letters, so the
    loop terminates with a word of shape (unstarred)*(starred)*.
    """
    letters = _validated_letters(word)
    reduced = _reduce_letters(letters)
    if reduced is None:
        return ZERO_ELEMENT
    return from_monomial(_letters_to_monomial(word.n, reduced))


def reduction_trace(word: RawWord) -> list[int]:
    """Word lengths after each rewrite step (first entry: input length)."""
    letters = _validated_letters(word)
    lengths = [len(letters)]
    while True:
        pos = _first_redex(letters)
        if pos is None:
            return lengths
        i = letters[pos][0]
        j = letters[pos + 1][0]
        if i != j and not mutations.is_active(mutations.SKIP_DELTA_CHECK):
            return lengths
        letters = letters[:pos] + letters[pos + 2:]
        lengths.append(len(letters))


def _validated_letters(word: RawWord):
    for i, _ in word.letters:
        if not 1 <= i <= word.n:
            raise InputError(f"letter {i} out of range 1..{word.n} in component {word.n}")
    return list(word.letters)


def _first_redex(letters) -> int | None:
    for pos in range(len(letters) - 1):
        if letters[pos][1] and not letters[pos + 1][1]:
            return pos
    return None


def _reduce_letters(letters) -> list | None:
    pos = 0
    while pos < len(letters) - 1:
        if letters[pos][1] and not letters[pos + 1][1]:
            if letters[pos][0] != letters[pos + 1][0] and not mutations.is_active(
                mutations.SKIP_DELTA_CHECK
            ):
                return None
            del letters[pos : pos + 2]
            pos = max(pos - 1, 0)
        else:
            pos += 1
    return letters


def _letters_to_monomial(n: int, letters) -> CuntzMonomial:
    split = len(letters)
    for k, (_, starred) in enumerate(letters):
        if starred:
            split = k
            break
    mu = tuple(i for i, _ in letters[:split])
    nu = tuple(i for i, _ in reversed(letters[split:]))
    return monomial(n, mu, nu)


def add(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x + y


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


def adjoint(x: AlgebraElement) -> AlgebraElement:
    return x.adjoint()


def _refinements(mono: CuntzMonomial, level: int) -> Iterator[CuntzMonomial]:
    """All s_{mu gamma} s_{nu gamma}^* with ``len(nu) + len(gamma) == level``."""
    gap = level - len(mono.nu)
    if gap == 0 or mono.n == 1:
        yield mono
        return
    for gamma in product(range(1, mono.n + 1), repeat=gap):
        yield CuntzMonomial(mono.n, mono.mu + gamma, mono.nu + gamma)


def expand_to_level(x: AlgebraElement, n: int, k: int) -> AlgebraElement:
    """Replace every component-n monomial by its level-k refinements.

    The result equals ``x`` in the algebra.  Component 1 is returned
    unchanged; a monomial already deeper than ``k`` is an input error.
    """
    if n == 1:
        return x
    data: dict[CuntzMonomial, Scalar] = {}
    for mono, coeff in x.items():
        if mono.n != n:
            data[mono] = data.get(mono, Scalar(0)) + coeff
            continue
        if len(mono.nu) > k:
            raise InputError(
                f"cannot expand component {n} to level {k}: monomial at level {len(mono.nu)}"
            )
        for refined in _refinements(mono, k):
            acc = data.get(refined)
            total = coeff if acc is None else acc + coeff
            if total.is_zero():
                data.pop(refined, None)
            else:
                data[refined] = total
    return AlgebraElement._raw({m: c for m, c in data.items() if not c.is_zero()})


def grouped_expansion_is_zero(terms) -> bool:
    """Decide whether a linear combination of monomial tuples vanishes.

    ``terms`` yields ``(legs, coeff)`` with ``legs`` a tuple of monomials.
    Terms are grouped by per-leg component and gauge degree; within a
    group every leg expands to the group's maximal nu-length, where
    monomials are linearly independent.
    """
    groups: dict[tuple, list] = {}
    for legs, coeff in terms:
        key = tuple((m.n, m.degree) for m in legs)
        groups.setdefault(key, []).append((legs, coeff))
    for group in groups.values():
        width = len(group[0][0])
        levels = tuple(max(len(legs[k].nu) for legs, _ in group) for k in range(width))
        acc: dict[tuple, Scalar] = {}
        for legs, coeff in group:
            for refined in product(
                *(_refinements(m, lv) for m, lv in zip(legs, levels))
            ):
                prev = acc.get(refined)
                total = coeff if prev is None else prev + coeff
                if total.is_zero():
                    acc.pop(refined, None)
                else:
                    acc[refined] = total
        if acc:
            return False
    return True


def equals(x: AlgebraElement, y: AlgebraElement) -> bool:
    """Exact equality in the algebra, via graded level expansion."""
    diff = x - y
    if diff.is_zero():
        return True
    return grouped_expansion_is_zero(((m,), c) for m, c in diff.items())


def canonical_form(x: AlgebraElement) -> AlgebraElement:
    """Unique compact representative of the equality class of ``x``.

    Per component and gauge degree: expand to the maximal nu-length, then
    collapse deepest-first, replacing a full sibling family
    ``{s_{mu i} s_{nu i}^* : i = 1..n}`` with a shared coefficient by its
    parent ``s_mu s_nu^*``.  The pass is deterministic, so the output is
    a canonical form, and it equals ``x`` in the algebra.
    """
    groups: dict[tuple[int, int], dict[CuntzMonomial, Scalar]] = {}
    for mono, coeff in x.items():
        groups.setdefault((mono.n, mono.degree), {})[mono] = coeff

    out: dict[CuntzMonomial, Scalar] = {}
    for (n, _), terms in groups.items():
        top = max(len(m.nu) for m in terms)
        leaves: dict[CuntzMonomial, Scalar] = {}
        for mono, coeff in terms.items():
            for refined in _refinements(mono, top):
                acc = leaves.get(refined)
                total = coeff if acc is None else acc + coeff
                if total.is_zero():
                    leaves.pop(refined, None)
                else:
                    leaves[refined] = total
        for level in range(top, 0, -1):
            families: dict[tuple, dict[int, CuntzMonomial]] = {}
            for mono in leaves:
                if len(mono.nu) == level and mono.mu and mono.mu[-1] == mono.nu[-1]:
                    parent = (mono.mu[:-1], mono.nu[:-1])
                    families.setdefault(parent, {})[mono.mu[-1]] = mono
            for (pmu, pnu), children in families.items():
                if len(children) != n:
                    continue
                coeffs = {leaves[m] for m in children.values()}
                if len(coeffs) != 1:
                    continue
                shared = coeffs.pop()
                for m in children.values():
                    del leaves[m]
                leaves[CuntzMonomial(n, pmu, pnu)] = shared
        out.update(leaves)
    return AlgebraElement._raw(out)


def coefficient_extract(x: AlgebraElement, n: int, mu, nu) -> Scalar:
    """Coefficient of ``s_mu s_nu^*`` read off by word reduction.

    Computes ``s_mu^* . x . s_nu`` term by term through `reduce_word` and
    returns the accumulated unit coefficient.  Independent of the level
    expansion used by `equals`, so the two can cross-check each other.
    """
    target = monomial(n, mu, nu)  # validates the letters
    mu, nu = target.mu, target.nu
    prefix = tuple((i, True) for i in reversed(mu))
    total = Scalar(0)
    for mono, coeff in x.items():
        if mono.n != n:
            continue
        letters = (
            prefix
            + tuple((i, False) for i in mono.mu)
            + tuple((i, True) for i in reversed(mono.nu))
            + tuple((i, False) for i in nu)
        )
        reduced = reduce_word(RawWord(n, letters))
        for rm, rc in reduced.items():
            if rm.is_unit():
                total = total + coeff * rc
    return total
