"""Unital inclusions of multi-matrix algebras.

An inclusion is described by the block dimension vector of the small
algebra and a nonnegative integer inclusion matrix; the block dimensions of
the big algebra are derived, never supplied.  The module classifies
inclusions (Markov condition, integer index, centrality of the small
algebra), reflects them through the basic construction, iterates the tower,
reports relative commutant dimensions in the central case, and checks the
spectral norms of alternating words in the inclusion matrix against the
exact index powers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

import numpy as np

from .errors import NotAbelianError, NotMarkovError, ValidationError
from .radical import RadicalScalar, sqrt_of_int

CommutantFlavor = Literal["AA", "AB", "BA", "BB"]
WordStart = Literal["m", "mt"]

POWER_ITERATIONS = 200
POWER_TOLERANCE = 1e-14


@dataclass(frozen=True)
class AlgebraDims:
    """Block dimensions (n_1, ..., n_s) of a multi-matrix algebra."""

    blocks: tuple[int, ...]

    def __init__(self, blocks: Sequence[int]):
        blocks = tuple(blocks)
        if not blocks:
            raise ValidationError("an algebra needs at least one block")
        for n in blocks:
            if not isinstance(n, int) or n < 1:
                raise ValidationError(f"block dimension {n!r} is not a positive integer")
        object.__setattr__(self, "blocks", blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i: int) -> int:
        return self.blocks[i]

    @property
    def total_dim(self) -> int:
        """Dimension of the algebra as a vector space: sum of squares."""
        return sum(n * n for n in self.blocks)


@dataclass(frozen=True)
class InclusionData:
    """A unital inclusion, given by small-side blocks and the inclusion matrix.

    m has one row per small block and one column per big block; entry (i, j)
    counts how many copies of small block i sit inside big block j, so the
    big block dimensions are the column sums weighted by a.
    """

    a: AlgebraDims
    m: tuple[tuple[int, ...], ...]

    def __init__(self, a: AlgebraDims | Sequence[int], m: Sequence[Sequence[int]]):
        if not isinstance(a, AlgebraDims):
            a = AlgebraDims(a)
        rows = tuple(tuple(row) for row in m)
        if len(rows) != len(a):
            raise ValidationError(f"matrix has {len(rows)} rows for {len(a)} blocks")
        if not rows or not rows[0]:
            raise ValidationError("inclusion matrix must be non-empty")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise ValidationError("inclusion matrix rows have unequal lengths")
            for entry in row:
                if not isinstance(entry, int) or entry < 0:
                    raise ValidationError(f"matrix entry {entry!r} is not a nonnegative integer")
        for i, row in enumerate(rows):
            if not any(row):
                raise ValidationError(f"row {i} of the inclusion matrix is zero")
        for j in range(width):
            if not any(row[j] for row in rows):
                raise ValidationError(f"column {j} of the inclusion matrix is zero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "m", rows)

    @property
    def b(self) -> AlgebraDims:
        """Big-side blocks, derived: b_j = sum_i m_ij * a_i."""
        return AlgebraDims(
            tuple(sum(row[j] * n for row, n in zip(self.m, self.a)) for j in range(self.cols))
        )

    @property
    def rows(self) -> int:
        return len(self.m)

    @property
    def cols(self) -> int:
        return len(self.m[0])

    @classmethod
    def from_dict(cls, data: dict) -> InclusionData:
        """JSON document {"a": [...], "m": [[...]]}; "b" is derived and rejected."""
        if not isinstance(data, dict):
            raise ValidationError("inclusion document must be a JSON object")
        if "b" in data:
            raise ValidationError('"b" is derived from "a" and "m"; do not supply it')
        extra = set(data) - {"a", "m"}
        if extra:
            raise ValidationError(f"unknown keys in inclusion document: {sorted(extra)}")
        if "a" not in data or "m" not in data:
            raise ValidationError('inclusion document needs keys "a" and "m"')
        a = data["a"]
        m = data["m"]
        if not isinstance(a, list) or not isinstance(m, list) or not all(isinstance(r, list) for r in m):
            raise ValidationError('"a" must be a list and "m" a list of lists')
        return cls(a, m)

    def to_dict(self) -> dict:
        return {"a": list(self.a.blocks), "m": [list(row) for row in self.m]}


@dataclass(frozen=True)
class MarkovReport:
    """Classification of one inclusion.

    r is the exact dimension ratio dim B / dim A whether or not the
    inclusion is Markov.  index_violation records a Markov inclusion whose
    ratio failed integrality; it is a theorem that this cannot happen, so a
    True here means corrupted input handling, not mathematics.
    """

    is_markov: bool
    r: Fraction
    is_abelian: bool
    index_violation: bool


def canonical_trace_weights(dims: AlgebraDims) -> list[Fraction]:
    """Weight of each block under the trace induced by the left regular
    representation: n_i^2 / sum_j n_j^2."""
    total = dims.total_dim
    return [Fraction(n * n, total) for n in dims.blocks]


def _m_times(inc: InclusionData, vec: Sequence) -> list:
    return [sum(row[j] * vec[j] for j in range(inc.cols)) for row in inc.m]


def _mt_times(inc: InclusionData, vec: Sequence) -> list:
    return [sum(inc.m[i][j] * vec[i] for i in range(inc.rows)) for j in range(inc.cols)]


def _is_abelian(inc: InclusionData) -> bool:
    # The small algebra is central in the big one exactly when every small
    # block is one-dimensional and lands in a single big block.
    if any(n != 1 for n in inc.a):
        return False
    for j in range(inc.cols):
        if sum(1 for row in inc.m if row[j]) != 1:
            return False
    return True


def analyze(inc: InclusionData) -> MarkovReport:
    """Classify the inclusion; never raises, findings live in the report."""
    b = inc.b
    r = Fraction(b.total_dim, inc.a.total_dim)
    mb = _m_times(inc, b.blocks)
    is_markov = all(Fraction(x) == r * n for x, n in zip(mb, inc.a))
    violation = is_markov and r.denominator != 1
    return MarkovReport(is_markov=is_markov, r=r, is_abelian=_is_abelian(inc), index_violation=violation)


def markov_index(inc: InclusionData) -> int:
    """The integer index of a Markov inclusion; NotMarkov otherwise."""
    report = analyze(inc)
    if not report.is_markov:
        raise NotMarkovError(f"inclusion a={inc.a.blocks}, m={inc.m} is not Markov")
    if report.r.denominator != 1:
        raise NotMarkovError(f"Markov ratio {report.r} is not an integer")
    return int(report.r)


def basic_construction(inc: InclusionData) -> InclusionData:
    """Reflect the inclusion: the big algebra paired with the transposed matrix.

    The derived top dimensions come out as r times the original small ones,
    and the result is Markov with the same index.
    """
    markov_index(inc)
    transposed = tuple(tuple(inc.m[i][j] for i in range(inc.rows)) for j in range(inc.cols))
    return InclusionData(inc.b, transposed)


def jones_tower(inc: InclusionData, depth: int) -> list[AlgebraDims]:
    """Block dimensions along the iterated basic construction.

    Returns [A, B, A_1, B_1, ..., A_depth, B_depth]: two entries per level.
    """
    if depth < 0:
        raise ValidationError("depth must be nonnegative")
    out = [inc.a, inc.b]
    current = inc
    for _ in range(depth):
        current = basic_construction(current)
        out.append(current.b)
        current = basic_construction(current)
        out.append(current.b)
    return out


def relative_commutant_dims(inc: InclusionData, k: int, flavor: CommutantFlavor) -> AlgebraDims:
    """Block dimensions of the k-th relative commutant in the tower.

    Requires the small algebra central in the big one; then the commutants
    are full corners of the tower algebras:
      AA, BA -> blocks of A_k (index scales every block of A),
      AB     -> blocks of B_k,
      BB     -> the center of B scaled by the index power (one block per
                big-side block, each of dimension r^k).
    """
    if k < 0:
        raise ValidationError("k must be nonnegative")
    if flavor not in ("AA", "AB", "BA", "BB"):
        raise ValidationError(f"unknown commutant flavor {flavor!r}")
    if not _is_abelian(inc):
        raise NotAbelianError("relative commutant dimensions need a central small algebra")
    r = markov_index(inc)
    scale = r**k
    if flavor in ("AA", "BA"):
        return AlgebraDims(tuple(scale * n for n in inc.a))
    if flavor == "AB":
        return AlgebraDims(tuple(scale * n for n in inc.b))
    return AlgebraDims((scale,) * inc.cols)


def loop_space_dim(inc: InclusionData, k: int) -> int:
    """Number of closed walks of length 2k based at small-side vertices.

    Exact integer trace of (m m^t)^k; this is the dimension of the span of
    based loops of degree k before any enumeration happens, so callers can
    budget enumeration work in advance.
    """
    if k < 0:
        raise ValidationError("k must be nonnegative")
    if k == 0:
        return inc.rows
    mmt = [
        [sum(inc.m[i][j] * inc.m[l][j] for j in range(inc.cols)) for l in range(inc.rows)]
        for i in range(inc.rows)
    ]
    power = mmt
    for _ in range(k - 1):
        power = [
            [sum(power[i][l] * mmt[l][j] for l in range(inc.rows)) for j in range(inc.rows)]
            for i in range(inc.rows)
        ]
    return sum(power[i][i] for i in range(inc.rows))


def word_norm(inc: InclusionData, length: int, starts_with: WordStart = "m") -> tuple[float, RadicalScalar]:
    """Spectral norm of the alternating word of the given length.

    Returns (numeric, exact): the numeric value comes from power iteration
    on W W^t, the exact one is r^(length/2) as a radical scalar.
    """
    if length < 1:
        raise ValidationError("word length must be positive")
    if starts_with not in ("m", "mt"):
        raise ValidationError(f"word must start with 'm' or 'mt', got {starts_with!r}")
    r = markov_index(inc)

    m = np.array(inc.m, dtype=float)
    factors = []
    use_m = starts_with == "m"
    for _ in range(length):
        factors.append(m if use_m else m.T)
        use_m = not use_m
    word = factors[0]
    for f in factors[1:]:
        word = word @ f

    gram = word @ word.T
    v = np.ones(gram.shape[0])
    top = 0.0
    for _ in range(POWER_ITERATIONS):
        w = gram @ v
        scale = float(np.linalg.norm(w))
        if scale == 0.0:
            top = 0.0
            break
        v = w / scale
        estimate = float(v @ (gram @ v))
        if top and abs(estimate - top) <= POWER_TOLERANCE * abs(estimate):
            top = estimate
            break
        top = estimate
    numeric = math.sqrt(top)

    exact = RadicalScalar.from_rational(r ** (length // 2))
    if length % 2:
        exact = exact * sqrt_of_int(r)
    return numeric, exact
