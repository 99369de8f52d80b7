"""The full spline space: interval, knots, sections, connection matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    BadFirstRowOrColumn,
    CountMismatch,
    DimensionMismatch,
    KnotsNotIncreasing,
    NonPositiveDiagonal,
    NotLowerTriangular,
    SpecError,
)
from .sections import SectionSpace, critical_length_warning, make_section_space


@dataclass(frozen=True)
class ConnectionMatrix:
    """Lower-triangular connection matrix with unit first row and column."""

    entries: np.ndarray  # (m, m), validated, read-only

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def is_identity(self) -> bool:
        return np.array_equal(self.entries, np.eye(self.order))


def validate_connection_matrix(entries) -> ConnectionMatrix:
    """Check the admissibility clauses and freeze the matrix."""
    mat = np.array(entries, dtype=float)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1] or mat.shape[0] < 1:
        raise SpecError("connection matrix must be square of order >= 1")
    m = mat.shape[0]
    upper = np.triu(mat, k=1)
    if np.any(upper != 0.0):
        r, c = np.argwhere(upper != 0.0)[0]
        raise NotLowerTriangular(
            f"connection matrix entry ({r + 1},{c + 1}) above the diagonal "
            f"is {mat[r, c]:g}, must be 0"
        )
    diag = np.diag(mat)
    if np.any(diag <= 0.0):
        r = int(np.argmax(diag <= 0.0))
        raise NonPositiveDiagonal(
            f"diagonal entry ({r + 1},{r + 1}) is {diag[r]:g}, must be > 0"
        )
    unit = np.zeros(m)
    unit[0] = 1.0
    if not (np.array_equal(mat[0], unit) and np.array_equal(mat[:, 0], unit)):
        raise BadFirstRowOrColumn(
            "first row and first column must equal (1, 0, ..., 0)"
        )
    mat.setflags(write=False)
    return ConnectionMatrix(entries=mat)


@dataclass(frozen=True)
class SplineSpace:
    """A piecewise Chebyshevian spline space with knots of zero multiplicity."""

    a: float
    b: float
    knots: tuple[float, ...]           # interior knots, strictly increasing
    sections: tuple[SectionSpace, ...]  # one per interval, k + 1 of them
    connections: tuple[ConnectionMatrix, ...]  # one per interior knot
    warnings: tuple[str, ...] = ()

    @property
    def dimension(self) -> int:
        return self.sections[0].dimension

    @property
    def num_knots(self) -> int:
        return len(self.knots)

    @property
    def breakpoints(self) -> tuple[float, ...]:
        """x_0 = a, interior knots, x_{k+1} = b."""
        return (self.a, *self.knots, self.b)

    def interval_of(self, x: float, side: str = "+") -> int:
        """Index of the piece owning x; side breaks ties at knots."""
        bp = self.breakpoints
        if x < self.a or x > self.b:
            raise SpecError(f"{x} outside [{self.a}, {self.b}]")
        for i, knot in enumerate(self.knots):
            if x < knot or (x == knot and side == "-"):
                return i
        return len(self.knots)


def build_space(interval, knots, sections, connections) -> SplineSpace:
    """Validate counts and ordering and assemble an immutable SplineSpace."""
    a, b = float(interval[0]), float(interval[1])
    knots = tuple(float(x) for x in knots)
    k = len(knots)
    bp = (a, *knots, b)
    if any(x1 <= x0 for x0, x1 in zip(bp, bp[1:])):
        raise KnotsNotIncreasing(
            f"breakpoints {list(bp)} are not strictly increasing"
        )
    sections = tuple(sections)
    if len(sections) != k + 1:
        raise CountMismatch(
            f"{k} knots require {k + 1} sections, got {len(sections)}"
        )
    conns = [
        c if isinstance(c, ConnectionMatrix) else validate_connection_matrix(c)
        for c in connections
    ]
    if len(conns) != k:
        raise CountMismatch(
            f"{k} knots require {k} connection matrices, got {len(conns)}"
        )
    m = sections[0].dimension
    for i, sec in enumerate(sections):
        if sec.dimension != m:
            raise DimensionMismatch(
                f"section {i} has dimension {sec.dimension}, expected {m}"
            )
        if (sec.lo, sec.hi) != (bp[i], bp[i + 1]):
            raise DimensionMismatch(
                f"section {i} lives on [{sec.lo}, {sec.hi}], "
                f"expected [{bp[i]}, {bp[i + 1]}]"
            )
    for i, c in enumerate(conns):
        if c.order != m:
            raise DimensionMismatch(
                f"connection matrix {i} has order {c.order}, expected {m}"
            )
    warns = tuple(
        w for sec in sections if (w := critical_length_warning(sec))
    )
    return SplineSpace(a=a, b=b, knots=knots, sections=sections,
                       connections=tuple(conns), warnings=warns)


def space_from_spec(spec: dict) -> SplineSpace:
    """Build a SplineSpace from the JSON spec-file schema."""
    if not isinstance(spec, dict):
        raise SpecError("spec must be a JSON object")
    try:
        interval = spec["interval"]
    except KeyError:
        raise SpecError('missing "interval"') from None
    if not (isinstance(interval, (list, tuple)) and len(interval) == 2):
        raise SpecError('"interval" must be a pair [a, b]')
    knots = spec.get("knots", [])
    if not isinstance(knots, list):
        raise SpecError('"knots" must be a list of reals')
    k = len(knots)
    raw_sections = spec.get("sections")
    if not (isinstance(raw_sections, list) and raw_sections):
        raise SpecError('"sections" must be a non-empty list')
    if len(raw_sections) == 1 and k > 0:
        raw_sections = raw_sections * (k + 1)
    if len(raw_sections) != k + 1:
        raise SpecError(
            f'"sections" must have 1 or {k + 1} entries, got {len(raw_sections)}'
        )
    bp = (float(interval[0]), *[float(x) for x in knots], float(interval[1]))
    if any(x1 <= x0 for x0, x1 in zip(bp, bp[1:])):
        raise KnotsNotIncreasing(
            f"breakpoints {list(bp)} are not strictly increasing"
        )
    sections = []
    for i, entry in enumerate(raw_sections):
        if not (isinstance(entry, dict) and isinstance(entry.get("tokens"), list)):
            raise SpecError(f'section {i} must be an object with a "tokens" list')
        sections.append(make_section_space(entry["tokens"], (bp[i], bp[i + 1])))
    m = sections[0].dimension
    raw_conns = spec.get("connections", [])
    if raw_conns is None:
        raw_conns = []
    if not isinstance(raw_conns, list):
        raise SpecError('"connections" must be a list of matrices')
    if len(raw_conns) not in (0, k):
        raise SpecError(
            f'"connections" must have 0 or {k} entries, got {len(raw_conns)}'
        )
    if not raw_conns:
        raw_conns = [None] * k
    conns = [
        np.eye(m) if c is None else c
        for c in raw_conns
    ]
    return build_space(interval, knots, sections, conns)
