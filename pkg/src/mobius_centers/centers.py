"""
Centers and twisted centers as commutants, the explicit Nilcoxeter center
basis, the trace-dual basis, and the 0-Hecke support report.

The center is cut out by the generator equations T_i z = z T_i (generators
suffice since they generate the algebra); the twisted center by
z T_i = T_{n-i} z.  Both are computed as exact nullspaces.

For the Nilcoxeter algebra the center has a closed-form basis: one element
per nonzero Mobius class c, the sum of T_{w^{-1} w0} over the members w of
c.  The trace-dual basis solves, for each class c, the full system
trace(T_w * z) = 1 for w in c and 0 for every basis element outside c.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    NILCOXETER,
    ZERO_HECKE,
    AlgebraElement,
    AlgebraParams,
    basis_element,
    element_to_json,
    element_to_vector,
    gram_matrix,
    mul,
    mul_left_generator,
    mul_right_generator,
    preset_name,
    vector_to_element,
)
from .linalg import (
    NonUniqueSolutionError,
    NoSolutionError,
    SparseVector,
    Subspace,
    coordinates_in_span,
    format_rational,
    nullspace,
    solve_affine,
)
from .perm import Permutation, compose, inverse, longest_element, reduced_word, symmetric_group
from .quotients import mobius_classes

__all__ = [
    "CenterBasis",
    "center",
    "twisted_center",
    "nc_center_basis",
    "dual_center_basis",
    "multiplication_table",
    "is_central",
    "ClassFinding",
    "ConjectureReport",
    "verify_hn_conjecture",
    "conjecture_report_to_json",
    "CONJECTURE_REPORT_SCHEMA",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _constraint_rows(n: int, params: AlgebraParams, twisted: bool) -> list[SparseVector]:
    """Rows of the linear system cutting out the (twisted) center.

    Row (i, u) collects, over columns v, the coefficient of T_u in
    T_i T_v - T_v T_i (plain) or T_v T_i - T_{n-i} T_v (twisted).
    """
    table = symmetric_group(n)
    rows: dict[tuple[int, int], dict[int, Fraction]] = {}
    for i in range(1, n):
        for k, w in enumerate(table.perms):
            x = basis_element(params, w)
            if twisted:
                diff = mul_right_generator(x, i) - mul_left_generator(n - i, x)
            else:
                diff = mul_left_generator(i, x) - mul_right_generator(x, i)
            for u, c in diff.terms.items():
                rows.setdefault((i, table.rank(u)), {})[k] = c
    return [SparseVector(table.order, r) for r in rows.values()]


@lru_cache(maxsize=None)
def center(n: int, params: AlgebraParams) -> Subspace:
    """Solutions of T_i z = z T_i for all generators, as a coordinate
    subspace of the n!-dimensional algebra."""
    return nullspace(_constraint_rows(n, params, twisted=False), symmetric_group(n).order)


@lru_cache(maxsize=None)
def twisted_center(n: int, params: AlgebraParams) -> Subspace:
    """Solutions of z T_i = T_{n-i} z for all generators."""
    return nullspace(_constraint_rows(n, params, twisted=True), symmetric_group(n).order)


def is_central(x: AlgebraElement) -> bool:
    return all(
        mul_left_generator(i, x) == mul_right_generator(x, i)
        for i in range(1, x.n)
    )


@dataclass(frozen=True)
class CenterBasis:
    """A basis of the center, one element per nonzero Mobius class, labeled
    by the class representative."""

    n: int
    params: AlgebraParams
    labels: tuple[Permutation, ...]
    elements: tuple[AlgebraElement, ...]

    def __len__(self) -> int:
        return len(self.elements)


@lru_cache(maxsize=None)
def nc_center_basis(n: int) -> CenterBasis:
    """The Nilcoxeter center basis: for each nonzero class c the sum of the
    complements T_{w^{-1} w0} of its members.

    Each element is homogeneous of degree n(n-1)/2 minus the common length
    of the class members.
    """
    classes = mobius_classes(n, NILCOXETER)
    w0 = longest_element(n)
    labels, elements = [], []
    for members in classes.classes:
        terms = {compose(inverse(w), w0): _ONE for w in members}
        labels.append(_class_representative(members))
        elements.append(AlgebraElement(n, NILCOXETER, terms))
    return CenterBasis(n, NILCOXETER, tuple(labels), tuple(elements))


def _class_representative(members: frozenset[Permutation]) -> Permutation:
    return min(members, key=lambda w: (w.length, w.image))


def _gram_rows(n: int, params: AlgebraParams) -> list[SparseVector]:
    gram = gram_matrix(n, params)
    order = symmetric_group(n).order
    return [
        SparseVector(order, {v: gram[u][v] for v in range(order) if gram[u][v]})
        for u in range(order)
    ]


@lru_cache(maxsize=None)
def dual_center_basis(n: int, params: AlgebraParams) -> CenterBasis:
    """For each nonzero class c, the unique central element pairing to 1
    with every member of c and to 0 with every basis element outside c.

    A solve failure would contradict the duality between the center and the
    band quotient, so it aborts with diagnostics rather than degrade.
    """
    if params not in (NILCOXETER, ZERO_HECKE):
        raise ValueError(
            "dual center basis is defined for the nilcoxeter and 0-hecke presets"
        )
    classes = mobius_classes(n, params)
    central = list(center(n, params).basis)
    rows = _gram_rows(n, params)
    table = symmetric_group(n)
    labels, elements = [], []
    for members in classes.classes:
        rep = _class_representative(members)
        member_ranks = {table.rank(w) for w in members}
        constraints = [
            (rows[u], _ONE if u in member_ranks else _ZERO)
            for u in range(table.order)
        ]
        try:
            solution = solve_affine(constraints, central)
        except (NoSolutionError, NonUniqueSolutionError) as exc:
            raise type(exc)(
                f"dual element for the class of {rep!r} at n={n}, "
                f"algebra {preset_name(params)}: {exc}"
            ) from exc
        labels.append(rep)
        elements.append(vector_to_element(solution, n, params))
    return CenterBasis(n, params, tuple(labels), tuple(elements))


def multiplication_table(basis: CenterBasis) -> list[list[list[Fraction]]]:
    """Entry (i, j): coordinates of elements[i] * elements[j] in the basis.

    Products of central elements are central, so coordinates exist and are
    unique; failure to solve means the basis is not what it claims to be.
    """
    vectors = [element_to_vector(z) for z in basis.elements]
    table = []
    for zi in basis.elements:
        row = []
        for zj in basis.elements:
            product = element_to_vector(mul(zi, zj))
            try:
                row.append(coordinates_in_span(vectors, product))
            except (NoSolutionError, NonUniqueSolutionError) as exc:
                raise RuntimeError(
                    f"center basis at n={basis.n} is inconsistent: {exc}"
                ) from exc
        table.append(row)
    return table


# --- 0-Hecke support report --------------------------------------------------


@dataclass(frozen=True)
class ClassFinding:
    representative: Permutation
    dual_element: AlgebraElement
    complements: tuple[Permutation, ...]
    coefficients: tuple[tuple[Permutation, Fraction], ...]
    support_in_complements: bool
    integer_coefficients: bool


@dataclass(frozen=True)
class ConjectureReport:
    n: int
    classes: tuple[ClassFinding, ...]
    unique_complement_per_crossing_number: bool


def verify_hn_conjecture(n: int) -> ConjectureReport:
    """Measure, per 0-Hecke class, whether the trace-dual central element is
    supported on the complements of the class members.

    This emits findings only; a failed inclusion is an observation about the
    basis, not an error.
    """
    params = ZERO_HECKE
    classes = mobius_classes(n, params)
    dual = dual_center_basis(n, params)
    table = symmetric_group(n)
    gram = gram_matrix(n, params)

    complement_sets = [
        [v for v in range(table.order) if gram[u][v] == 1]
        for u in range(table.order)
    ]
    unique_per_crossing = all(
        len({table.lengths[v] for v in complement_sets[u]}) == len(complement_sets[u])
        for u in range(table.order)
    )

    findings = []
    for members, rep, element in zip(classes.classes, dual.labels, dual.elements):
        complement_ranks = set()
        for w in members:
            complement_ranks.update(complement_sets[table.rank(w)])
        complements = sorted(
            (table.perms[v] for v in complement_ranks),
            key=lambda w: (w.length, w.image),
        )
        coefficients = tuple((v, element.coefficient(v)) for v in complements)
        support_ok = all(table.rank(w) in complement_ranks for w in element.terms)
        integer_ok = all(c.denominator == 1 for c in element.terms.values())
        findings.append(
            ClassFinding(
                representative=rep,
                dual_element=element,
                complements=tuple(complements),
                coefficients=coefficients,
                support_in_complements=support_ok,
                integer_coefficients=integer_ok,
            )
        )
    return ConjectureReport(n, tuple(findings), unique_per_crossing)


CONJECTURE_REPORT_SCHEMA = {
    "type": "object",
    "required": ["n", "classes", "unique_complement_per_crossing_number"],
    "properties": {
        "n": {"type": "integer"},
        "classes": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "representative",
                    "dual_element",
                    "support_in_complements",
                    "complement_coefficients",
                    "integer_coefficients",
                ],
                "properties": {
                    "representative": {"type": "array", "items": {"type": "integer"}},
                    "dual_element": {"type": "object"},
                    "support_in_complements": {"type": "boolean"},
                    "integer_coefficients": {"type": "boolean"},
                    "complement_coefficients": {
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
            },
        },
        "unique_complement_per_crossing_number": {"type": "boolean"},
    },
}


def conjecture_report_to_json(report: ConjectureReport) -> dict:
    classes = []
    for finding in report.classes:
        classes.append(
            {
                "representative": list(reduced_word(finding.representative)),
                "dual_element": element_to_json(finding.dual_element),
                "support_in_complements": finding.support_in_complements,
                "integer_coefficients": finding.integer_coefficients,
                "complement_coefficients": [
                    {"word": list(reduced_word(v)), "coeff": format_rational(c)}
                    for v, c in finding.coefficients
                ],
            }
        )
    return {
        "n": report.n,
        "classes": classes,
        "unique_complement_per_crossing_number": report.unique_complement_per_crossing_number,
    }
