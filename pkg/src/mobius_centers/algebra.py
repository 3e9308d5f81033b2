"""
The generic algebra on S_n with structure constants (a, b).

The basis is {T_w : w in S_n}.  Left multiplication by a generator follows
the two-case rule

    T_i * T_w = T_{s_i w}            if length(s_i w) > length(w)
    T_i * T_w = a T_w + b T_{s_i w}  if length(s_i w) < length(w)

and right multiplication is the mirror rule on positions.  The presets are
the Nilcoxeter algebra (a, b) = (0, 0), the 0-Hecke algebra (1, 0) and the
group algebra (0, 1).

The trace reads off the coefficient of the longest element, and the flip
``involve`` conjugates every basis index by the longest element; together
they satisfy trace(x*y) == trace(y*involve(x)).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import SparseVector, format_rational, parse_rational
from .perm import (
    Permutation,
    conjugate_by_w0,
    evaluate,
    generator,
    identity,
    longest_element,
    reduced_word,
    swap_positions,
    swap_values,
    symmetric_group,
)

__all__ = [
    "AlgebraParams",
    "NILCOXETER",
    "ZERO_HECKE",
    "GROUP_ALGEBRA",
    "preset_name",
    "parse_algebra",
    "AlgebraElement",
    "zero",
    "unit",
    "basis_element",
    "generator_element",
    "mul_left_generator",
    "mul_right_generator",
    "mul",
    "trace",
    "involve",
    "right_complements",
    "gram_matrix",
    "RelationCheck",
    "RelationReport",
    "check_defining_relations",
    "single_term_actions",
    "element_to_vector",
    "vector_to_element",
    "element_to_json",
    "element_from_json",
    "ELEMENT_SCHEMA",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class AlgebraParams:
    """The pair (a, b) of structure constants.

    A single pair suffices on S_n: all adjacent transpositions are conjugate,
    so per-generator constants would be forced equal anyway.
    """

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))


NILCOXETER = AlgebraParams(Fraction(0), Fraction(0))
ZERO_HECKE = AlgebraParams(Fraction(1), Fraction(0))
GROUP_ALGEBRA = AlgebraParams(Fraction(0), Fraction(1))

_PRESETS = {
    NILCOXETER: "nilcoxeter",
    ZERO_HECKE: "0-hecke",
    GROUP_ALGEBRA: "group",
}
_PRESETS_BY_NAME = {name: params for params, name in _PRESETS.items()}


def preset_name(params: AlgebraParams) -> str | None:
    return _PRESETS.get(params)


def parse_algebra(name: str) -> AlgebraParams:
    """Parse a preset name or an explicit "a,b" pair of rationals."""
    if name in _PRESETS_BY_NAME:
        return _PRESETS_BY_NAME[name]
    parts = name.split(",")
    if len(parts) != 2:
        raise ValueError(f"unknown algebra {name!r}: expected a preset name or 'a,b'")
    try:
        return AlgebraParams(parse_rational(parts[0]), parse_rational(parts[1]))
    except ValueError as exc:
        raise ValueError(f"unknown algebra {name!r}: {exc}") from None


@dataclass
class AlgebraElement:
    """A finitely supported rational combination of basis elements T_w.

    Zero coefficients are never stored.  Instances are treated as immutable.
    """

    n: int
    params: AlgebraParams
    terms: dict[Permutation, Fraction] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for w, c in self.terms.items():
            if w.n != self.n:
                raise ValueError(f"term on {w.n} strands in an algebra on {self.n}")
            c = Fraction(c)
            if c:
                clean[w] = c
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Permutation) -> Fraction:
        return self.terms.get(w, _ZERO)

    def support(self) -> list[Permutation]:
        return sorted(self.terms, key=lambda w: (w.length, w.image))

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        _check_compatible(self, other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, _ZERO) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return AlgebraElement(self.n, self.params, out)

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.n, self.params, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-other)

    def scaled(self, c) -> "AlgebraElement":
        c = Fraction(c)
        if not c:
            return zero(self.params, self.n)
        return AlgebraElement(self.n, self.params, {w: c * v for w, v in self.terms.items()})

    def __mul__(self, other: "AlgebraElement") -> "AlgebraElement":
        return mul(self, other)

    def __repr__(self) -> str:
        if not self.terms:
            return "AlgebraElement(0)"
        bits = [
            f"{format_rational(c)}*T{list(reduced_word(w))}"
            for w, c in sorted(self.terms.items(), key=lambda t: (t[0].length, t[0].image))
        ]
        return "AlgebraElement(" + " + ".join(bits) + ")"


def _check_compatible(x: AlgebraElement, y: AlgebraElement) -> None:
    if x.n != y.n:
        raise ValueError(f"size mismatch: {x.n} vs {y.n}")
    if x.params != y.params:
        raise ValueError(f"parameter mismatch: {x.params} vs {y.params}")


def zero(params: AlgebraParams, n: int) -> AlgebraElement:
    return AlgebraElement(n, params, {})


def unit(params: AlgebraParams, n: int) -> AlgebraElement:
    return AlgebraElement(n, params, {identity(n): _ONE})


def basis_element(params: AlgebraParams, w: Permutation) -> AlgebraElement:
    return AlgebraElement(w.n, params, {w: _ONE})


def generator_element(params: AlgebraParams, n: int, i: int) -> AlgebraElement:
    return basis_element(params, generator(n, i))


def mul_left_generator(i: int, x: AlgebraElement) -> AlgebraElement:
    """T_i * x, extended linearly over the terms of x."""
    if not 1 <= i <= x.n - 1:
        raise ValueError(f"generator index must be in 1..{x.n - 1}, got {i}")
    a, b = x.params.a, x.params.b
    out: dict[Permutation, Fraction] = {}
    for w, c in x.terms.items():
        sw = swap_values(w, i)
        if sw.length > w.length:
            _accumulate(out, sw, c)
        else:
            if a:
                _accumulate(out, w, a * c)
            if b:
                _accumulate(out, sw, b * c)
    return AlgebraElement(x.n, x.params, out)


def mul_right_generator(x: AlgebraElement, i: int) -> AlgebraElement:
    """x * T_i; the mirror of the left rule, acting on positions."""
    if not 1 <= i <= x.n - 1:
        raise ValueError(f"generator index must be in 1..{x.n - 1}, got {i}")
    a, b = x.params.a, x.params.b
    out: dict[Permutation, Fraction] = {}
    for w, c in x.terms.items():
        ws = swap_positions(w, i)
        if ws.length > w.length:
            _accumulate(out, ws, c)
        else:
            if a:
                _accumulate(out, w, a * c)
            if b:
                _accumulate(out, ws, b * c)
    return AlgebraElement(x.n, x.params, out)


def _accumulate(out: dict, w: Permutation, c: Fraction) -> None:
    nc = out.get(w, _ZERO) + c
    if nc:
        out[w] = nc
    else:
        out.pop(w, None)


def mul(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    """The bilinear product.

    Each basis term of x is factored into its reduced word, which is then
    applied to y one generator at a time.
    """
    _check_compatible(x, y)
    result = zero(x.params, x.n)
    for u, c in x.terms.items():
        acc = y
        for i in reversed(reduced_word(u)):
            acc = mul_left_generator(i, acc)
            if acc.is_zero():
                break
        result = result + acc.scaled(c)
    return result


def trace(x: AlgebraElement) -> Fraction:
    """The coefficient of the longest element."""
    return x.coefficient(longest_element(x.n))


def involve(x: AlgebraElement) -> AlgebraElement:
    """The algebra involution sending T_w to T_{w0 w w0}.

    On generators this is T_i -> T_{n-i}; it preserves length, hence the
    trace, and is a homomorphism because conjugation preserves reduced words.
    """
    return AlgebraElement(
        x.n, x.params, {conjugate_by_w0(w): c for w, c in x.terms.items()}
    )


def right_complements(w: Permutation, params: AlgebraParams) -> list[Permutation]:
    """All v with trace(T_w * T_v) == 1, sorted by length then one-line word.

    In the Nilcoxeter algebra this is the single element w^{-1} w0.
    """
    tw = basis_element(params, w)
    out = [
        v
        for v in symmetric_group(w.n).perms
        if trace(mul(tw, basis_element(params, v))) == 1
    ]
    out.sort(key=lambda v: (v.length, v.image))
    return out


def gram_matrix(n: int, params: AlgebraParams) -> list[list[Fraction]]:
    """G[u][v] = trace(T_u * T_v) over all basis pairs, in index order."""
    table = symmetric_group(n)
    elements = [basis_element(params, w) for w in table.perms]
    return [[trace(mul(x, y)) for y in elements] for x in elements]


@dataclass(frozen=True)
class RelationCheck:
    name: str
    passed: bool


@dataclass(frozen=True)
class RelationReport:
    n: int
    params: AlgebraParams
    checks: tuple[RelationCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)


def check_defining_relations(n: int, params: AlgebraParams) -> RelationReport:
    """Verify the braid, commutation and quadratic relations by explicit
    multiplication of generator elements."""
    t = [generator_element(params, n, i) for i in range(1, n)]
    checks = []
    for i in range(1, n - 1):
        lhs = mul(t[i - 1], mul(t[i], t[i - 1]))
        rhs = mul(t[i], mul(t[i - 1], t[i]))
        checks.append(RelationCheck(f"T{i} T{i + 1} T{i} = T{i + 1} T{i} T{i + 1}", lhs == rhs))
    for i in range(1, n - 1):
        for j in range(i + 2, n):
            lhs = mul(t[i - 1], t[j - 1])
            rhs = mul(t[j - 1], t[i - 1])
            checks.append(RelationCheck(f"T{i} T{j} = T{j} T{i}", lhs == rhs))
    for i in range(1, n):
        lhs = mul(t[i - 1], t[i - 1])
        rhs = t[i - 1].scaled(params.a) + unit(params, n).scaled(params.b)
        checks.append(RelationCheck(f"T{i}^2 = a T{i} + b T_e", lhs == rhs))
    return RelationReport(n, params, tuple(checks))


def single_term_actions(
    n: int, params: AlgebraParams
) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Generator action tables for presets, where every product of a
    generator with a basis element is a single basis element or zero.

    Returns (left, right) with left[i-1][k] the index of T_i * T_{perms[k]}
    (-1 encodes zero) and right[i-1][k] the index of T_{perms[k]} * T_i.
    Raises ValueError for parameters outside the three presets.
    """
    if params not in _PRESETS:
        raise ValueError(
            "single-term action tables require a preset algebra "
            "(nilcoxeter, 0-hecke or group)"
        )
    table = symmetric_group(n)
    lengths = table.lengths

    def resolve(k: int, moved: int) -> int:
        if lengths[moved] > lengths[k]:
            return moved
        if params == NILCOXETER:
            return -1
        if params == ZERO_HECKE:
            return k
        return moved

    left = tuple(
        tuple(resolve(k, table.lmul[i][k]) for k in range(table.order))
        for i in range(n - 1)
    )
    right = tuple(
        tuple(resolve(k, table.rmul[i][k]) for k in range(table.order))
        for i in range(n - 1)
    )
    return left, right


def element_to_vector(x: AlgebraElement) -> SparseVector:
    """Coordinates over the basis, indexed by lexicographic rank."""
    table = symmetric_group(x.n)
    return SparseVector(
        table.order, {table.rank(w): c for w, c in x.terms.items()}
    )


def vector_to_element(
    v: SparseVector, n: int, params: AlgebraParams
) -> AlgebraElement:
    table = symmetric_group(n)
    if v.dimension != table.order:
        raise ValueError(f"dimension mismatch: {v.dimension} vs {table.order}")
    return AlgebraElement(n, params, {table.perms[k]: c for k, c in v.entries.items()})


# --- JSON wire format -------------------------------------------------------

ELEMENT_SCHEMA = {
    "type": "object",
    "required": ["n", "algebra", "terms"],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "algebra": {
            "oneOf": [
                {"enum": ["nilcoxeter", "0-hecke", "group"]},
                {
                    "type": "object",
                    "required": ["a", "b"],
                    "properties": {
                        "a": {"type": "string"},
                        "b": {"type": "string"},
                    },
                },
            ]
        },
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["word", "coeff"],
                "properties": {
                    "word": {"type": "array", "items": {"type": "integer"}},
                    "coeff": {"type": "string"},
                },
            },
        },
    },
}


def params_to_json(params: AlgebraParams):
    name = preset_name(params)
    if name is not None:
        return name
    return {"a": format_rational(params.a), "b": format_rational(params.b)}


def params_from_json(data) -> AlgebraParams:
    if isinstance(data, str):
        if data not in _PRESETS_BY_NAME:
            raise ValueError(f"unknown algebra name {data!r}")
        return _PRESETS_BY_NAME[data]
    return AlgebraParams(parse_rational(data["a"]), parse_rational(data["b"]))


def element_to_json(x: AlgebraElement) -> dict:
    """Terms are keyed by the canonical reduced word of their permutation."""
    terms = [
        {"word": list(reduced_word(w)), "coeff": format_rational(c)}
        for w, c in sorted(x.terms.items(), key=lambda t: (t[0].length, t[0].image))
    ]
    return {"n": x.n, "algebra": params_to_json(x.params), "terms": terms}


def element_from_json(data: dict) -> AlgebraElement:
    params = params_from_json(data["algebra"])
    n = data["n"]
    out: dict[Permutation, Fraction] = {}
    for term in data["terms"]:
        w = evaluate(tuple(term["word"]), n)
        _accumulate(out, w, parse_rational(term["coeff"]))
    return AlgebraElement(n, params, out)
