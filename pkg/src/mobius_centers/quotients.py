"""
Commutator and twisted-commutator subspaces, and the equivalence classes of
basis elements on the Mobius band.

The twisted-commutator subspace is spanned by the vectors of
``T_i * x - x * T_{n-i}`` over generators i and basis elements x; quotienting
by it realizes sliding a crossing once around the band.  For the three preset
algebras every such product is a single basis element or zero, so the
identifications close up under union-find, with zero as an absorbing sink.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .algebra import (
    NILCOXETER,
    AlgebraParams,
    basis_element,
    mul_left_generator,
    mul_right_generator,
    preset_name,
    single_term_actions,
)
from .linalg import SparseVector, Subspace
from .perm import Permutation, compose, longest_element, reduced_word, symmetric_group

__all__ = [
    "UnsupportedParamsError",
    "generator_vectors",
    "MobiusClasses",
    "twisted_commutator_span",
    "commutator_span",
    "quotient_dim",
    "mobius_classes",
    "cycle_type",
    "class_census",
    "classes_to_json",
    "CLASS_REPORT_SCHEMA",
]

_ONE = Fraction(1)


class UnsupportedParamsError(ValueError):
    """The operation is only defined for specific preset algebras."""


def generator_vectors(
    n: int, params: AlgebraParams, twisted: bool
) -> list[SparseVector]:
    """Vectors of T_i * x - x * T_j over generators i and basis x, with
    j = n - i when twisted and j = i otherwise."""
    table = symmetric_group(n)
    order = table.order
    out = []
    for i in range(1, n):
        j = n - i if twisted else i
        for w in table.perms:
            x = basis_element(params, w)
            diff = mul_left_generator(i, x) - mul_right_generator(x, j)
            if not diff.is_zero():
                out.append(
                    SparseVector(
                        order, {table.rank(u): c for u, c in diff.terms.items()}
                    )
                )
    return out


@lru_cache(maxsize=None)
def twisted_commutator_span(n: int, params: AlgebraParams) -> Subspace:
    """Span of { T_i x - x T_{n-i} } inside the n!-dimensional algebra."""
    return linalg.span(
        generator_vectors(n, params, twisted=True),
        symmetric_group(n).order,
    )


@lru_cache(maxsize=None)
def commutator_span(n: int, params: AlgebraParams) -> Subspace:
    """Span of { T_i x - x T_i }."""
    return linalg.span(
        generator_vectors(n, params, twisted=False),
        symmetric_group(n).order,
    )


def quotient_dim(n: int, params: AlgebraParams, twisted: bool) -> int:
    space = twisted_commutator_span(n, params) if twisted else commutator_span(n, params)
    return symmetric_group(n).order - space.dim


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.size[rx] < self.size[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        self.size[rx] += self.size[ry]


@dataclass(frozen=True)
class MobiusClasses:
    """The partition of the T_w basis under the band identifications.

    ``zero_class`` collects basis elements identified with 0 (Nilcoxeter
    only); it is None when nothing vanishes.  Classes are ordered by their
    representative, the length-minimal lexicographically-minimal member.
    """

    n: int
    params: AlgebraParams
    classes: tuple[frozenset[Permutation], ...]
    zero_class: frozenset[Permutation] | None

    @property
    def representatives(self) -> tuple[Permutation, ...]:
        return tuple(_representative(c) for c in self.classes)


def _representative(members: frozenset[Permutation]) -> Permutation:
    return min(members, key=lambda w: (w.length, w.image))


@lru_cache(maxsize=None)
def mobius_classes(n: int, params: AlgebraParams) -> MobiusClasses:
    """Union-find closure of the identifications T_i * T_w ~ T_w * T_{n-i}.

    Each side is a single basis element or zero; zero acts as an absorbing
    sink node.  Only preset algebras keep products single-term.
    """
    if preset_name(params) is None:
        raise UnsupportedParamsError(
            "Mobius classes need single-term generator products; "
            "use one of the preset algebras"
        )
    table = symmetric_group(n)
    order = table.order
    left, right = single_term_actions(n, params)
    uf = _UnionFind(order + 1)  # index `order` is the zero sink
    sink = order
    for i in range(1, n):
        lrow = left[i - 1]
        rrow = right[n - i - 1]
        for k in range(order):
            lk = lrow[k]
            rk = rrow[k]
            uf.union(lk if lk >= 0 else sink, rk if rk >= 0 else sink)
    groups: dict[int, list[Permutation]] = {}
    for k in range(order):
        groups.setdefault(uf.find(k), []).append(table.perms[k])
    zero_members = groups.pop(uf.find(sink), None)
    classes = sorted(
        (frozenset(g) for g in groups.values()),
        key=lambda c: ((_representative(c).length, _representative(c).image)),
    )
    return MobiusClasses(
        n=n,
        params=params,
        classes=tuple(classes),
        zero_class=frozenset(zero_members) if zero_members else None,
    )


def cycle_type(w: Permutation) -> tuple[int, ...]:
    """Cycle type of the band closure map p -> n+1-w(p), i.e. of w0 o w.

    The parts are the thicknesses of the closed components and sum to n.
    """
    mu = compose(longest_element(w.n), w)
    seen = [False] * w.n
    parts = []
    for start in range(1, w.n + 1):
        if seen[start - 1]:
            continue
        size = 0
        p = start
        while not seen[p - 1]:
            seen[p - 1] = True
            p = mu(p)
            size += 1
        parts.append(size)
    parts.sort(reverse=True)
    return tuple(parts)


def class_census(n: int, params: AlgebraParams) -> dict[tuple[int, ...], int]:
    """Number of nonzero classes per cycle type.  Nilcoxeter only: for the
    other presets the cycle type is not constant on classes."""
    if params != NILCOXETER:
        raise UnsupportedParamsError("the class census is graded only for nilcoxeter")
    classes = mobius_classes(n, params)
    census: dict[tuple[int, ...], int] = {}
    for members in classes.classes:
        types = {cycle_type(w) for w in members}
        assert len(types) == 1, f"cycle type not constant on class {members}"
        t = types.pop()
        census[t] = census.get(t, 0) + 1
    return census


CLASS_REPORT_SCHEMA = {
    "type": "object",
    "required": ["n", "algebra", "classes", "zero_class"],
    "properties": {
        "n": {"type": "integer"},
        "algebra": {"type": "string"},
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["representative", "members"],
                "properties": {
                    "representative": {"type": "array", "items": {"type": "integer"}},
                    "members": {
                        "type": "array",
                        "items": {"type": "array", "items": {"type": "integer"}},
                    },
                    "cycle_type": {"type": "array", "items": {"type": "integer"}},
                    "length": {"type": "integer"},
                },
            },
        },
        "zero_class": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer"}},
        },
    },
}


def classes_to_json(classes: MobiusClasses) -> dict:
    """Class report; cycle type and length are reported only for nilcoxeter,
    where they are constant per class."""
    is_nc = classes.params == NILCOXETER
    out = []
    for members in classes.classes:
        rep = _representative(members)
        entry = {
            "representative": list(reduced_word(rep)),
            "members": [
                list(reduced_word(w))
                for w in sorted(members, key=lambda w: (w.length, w.image))
            ],
        }
        if is_nc:
            entry["cycle_type"] = list(cycle_type(rep))
            entry["length"] = rep.length
        out.append(entry)
    zero = classes.zero_class or frozenset()
    return {
        "n": classes.n,
        "algebra": preset_name(classes.params) or "custom",
        "classes": out,
        "zero_class": [
            list(reduced_word(w))
            for w in sorted(zero, key=lambda w: (w.length, w.image))
        ],
    }
