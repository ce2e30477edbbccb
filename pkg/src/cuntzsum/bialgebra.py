"""Comultiplication, counit, and the component-splitting embeddings.

The embedding of component n*m into the component pair (n, m) sends the
a-th generator to ``s_i (x) s_j`` where ``a - 1 = m*(i - 1) + (j - 1)``;
words split letterwise, so the map is multiplicative and *-preserving by
construction.  The comultiplication of a component-n element sums the
embeddings over all ordered divisor pairs of n, the counit keeps the
component-1 part, and a submonoid-restricted comultiplication keeps only
divisor pairs with both factors in the submonoid.
"""

from __future__ import annotations

from .algebra import (
    AlgebraElement,
    CuntzMonomial,
    ZERO_ELEMENT,
    from_monomial,
    equals,
    monomial,
)
from .errors import InputError
from .scalars import Scalar
from .tensors import TensorElement, TripleTensorElement
from . import mutations
from .monoids import divisor_pairs


def _split_letter(a: int, n: int, m: int) -> tuple[int, int]:
    # a - 1 = m*(i - 1) + (j - 1), the single source of truth for phi.
    q, r = divmod(a - 1, m)
    return q + 1, r + 1


def _split_monomial(mono: CuntzMonomial, n: int, m: int) -> tuple[CuntzMonomial, CuntzMonomial]:
    mu_pairs = [_split_letter(a, n, m) for a in mono.mu]
    nu_pairs = [_split_letter(a, n, m) for a in mono.nu]
    left = monomial(n, (i for i, _ in mu_pairs), (i for i, _ in nu_pairs))
    right = monomial(m, (j for _, j in mu_pairs), (j for _, j in nu_pairs))
    return left, right


def phi(n: int, m: int, x: AlgebraElement) -> TensorElement:
    """Embed an element of component n*m into the component pair (n, m)."""
    if n < 1 or m < 1:
        raise InputError("phi requires positive component indices")
    target = n * m
    data: dict[tuple, Scalar] = {}
    for mono, coeff in x.items():
        if mono.n != target:
            raise InputError(
                f"phi({n},{m}) expects support on component {target}, found {mono.n}"
            )
        key = _split_monomial(mono, n, m)
        acc = data.get(key)
        total = coeff if acc is None else acc + coeff
        if total.is_zero():
            data.pop(key, None)
        else:
            data[key] = total
    return TensorElement._raw(data)


def _component_pairs(n: int) -> list[tuple[int, int]]:
    pairs = divisor_pairs(n)
    if mutations.is_active(mutations.DROP_DIVISOR_PAIR) and n == 4:
        pairs = [p for p in pairs if p != (2, 2)]
    return pairs


def delta(x: AlgebraElement) -> TensorElement:
    """Comultiplication: sum of embeddings over ordered divisor pairs."""
    out = TensorElement._raw({})
    for n in sorted(x.support_components()):
        part = x.component(n)
        for m, l in _component_pairs(n):
            out = out + phi(m, l, part)
    return out


def delta_restricted(submonoid, x: AlgebraElement) -> TensorElement:
    """Comultiplication over divisor pairs with both factors in the submonoid."""
    out = TensorElement._raw({})
    for n in sorted(x.support_components()):
        if not submonoid.contains(n):
            raise InputError(f"component {n} lies outside the submonoid")
        part = x.component(n)
        for m, l in _component_pairs(n):
            if submonoid.contains(m) and submonoid.contains(l):
                out = out + phi(m, l, part)
    return out


# Spec-facing alias.
delta_H = delta_restricted


def counit(x: AlgebraElement) -> Scalar:
    """The component-1 coefficient; zero on all higher components."""
    return x.coefficient(monomial(1))


def tensor_mul(u: TensorElement, v: TensorElement) -> TensorElement:
    return u * v


def tensor_adjoint(u: TensorElement) -> TensorElement:
    return u.adjoint()


def tensor_equals(u: TensorElement, v: TensorElement) -> bool:
    return u.equals(v)


def lift_left(f, u: TensorElement) -> TripleTensorElement:
    """Apply an element-to-tensor map to the left leg and flatten to triples."""
    data: dict[tuple, Scalar] = {}
    for (left, right), coeff in u.items():
        for (a, b), c2 in f(from_monomial(left)).items():
            key = (a, b, right)
            total = data.get(key, Scalar(0)) + coeff * c2
            if total.is_zero():
                data.pop(key, None)
            else:
                data[key] = total
    return TripleTensorElement._raw(data)


def lift_right(f, u: TensorElement) -> TripleTensorElement:
    data: dict[tuple, Scalar] = {}
    for (left, right), coeff in u.items():
        for (a, b), c2 in f(from_monomial(right)).items():
            key = (left, a, b)
            total = data.get(key, Scalar(0)) + coeff * c2
            if total.is_zero():
                data.pop(key, None)
            else:
                data[key] = total
    return TripleTensorElement._raw(data)


def counit_contract_left(u: TensorElement) -> AlgebraElement:
    """Replace the left leg by its counit value (scalars absorb into coefficients)."""
    out = ZERO_ELEMENT
    for (left, right), coeff in u.items():
        if left.n == 1:
            out = out + from_monomial(right, coeff)
    return out


def counit_contract_right(u: TensorElement) -> AlgebraElement:
    out = ZERO_ELEMENT
    for (left, right), coeff in u.items():
        if right.n == 1:
            out = out + from_monomial(left, coeff)
    return out


def check_coassociativity(x: AlgebraElement, submonoid=None) -> bool:
    """Both iterated comultiplications agree as triple tensors."""
    f = delta if submonoid is None else (lambda z: delta_restricted(submonoid, z))
    dx = f(x)
    return lift_left(f, dx).equals(lift_right(f, dx))


def check_counit_laws(x: AlgebraElement, submonoid=None) -> bool:
    f = delta if submonoid is None else (lambda z: delta_restricted(submonoid, z))
    dx = f(x)
    return equals(counit_contract_left(dx), x) and equals(counit_contract_right(dx), x)


def check_hom_property(x: AlgebraElement, y: AlgebraElement, submonoid=None) -> bool:
    """Comultiplication is a *-homomorphism and the counit is multiplicative."""
    f = delta if submonoid is None else (lambda z: delta_restricted(submonoid, z))
    if not f(x * y).equals(f(x) * f(y)):
        return False
    if not f(x.adjoint()).equals(f(x).adjoint()):
        return False
    return counit(x * y) == counit(x) * counit(y)


def check_wcs_axiom(a: int, b: int, c: int, x: AlgebraElement) -> bool:
    """The two ways of splitting component a*b*c into three legs agree."""
    target = a * b * c
    for mono, _ in x.items():
        if mono.n != target:
            raise InputError(
                f"wcs check for ({a},{b},{c}) expects support on component {target}"
            )
    lhs = lift_right(lambda z: phi(b, c, z), phi(a, b * c, x))
    rhs = lift_left(lambda z: phi(a, b, z), phi(a * b, c, x))
    return lhs.equals(rhs)
