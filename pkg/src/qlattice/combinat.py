"""Weighted board tilings, lattice paths, and partitions in a box.

A board of length n+k is tiled by k dominoes (length 2) and n-k squares
(length 1).  A square preceded by s dominoes carries weight q^s, and a
tiling's weight exponent is the sum over its squares; summing q^weight
over all tilings of the board yields the Gaussian binomial [n;k]_q.
The same polynomial counts lattice paths from (0,0) to (k, n-k) (code a
Right step as a domino, an Up step as a square) and integer partitions
inside a k x (n-k) box by size.  This module enumerates all three
families in deterministic orders, realizes the weight preserving
bijections between them, implements the four stratifications behind
identities thm1..thm4, and carries a GF(q) subspace counting oracle
that is independent of the polynomial machinery.

Deterministic orders (bit-exact contracts for the CLI):

* tilings and paths: lexicographic in the piece sequence with S < D
  (equivalently U < R);
* boxed partitions: descending lexicographic, e.g. for the 2 x 2 box
  (2,2), (2,1), (2), (1,1), (1), ().
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, NegativeIndex
from .poly import Polynomial, ZERO
from .qbinom import gauss

__all__ = [
    "SQUARE",
    "DOMINO",
    "RIGHT",
    "UP",
    "Tiling",
    "LatticePath",
    "BoxedPartition",
    "Stratum",
    "Stratification",
    "enumerate_tilings",
    "weight_exponent",
    "tilings_generating_polynomial",
    "path_to_tiling",
    "tiling_to_path",
    "path_to_partition",
    "enumerate_box_partitions",
    "partitions_generating_polynomial",
    "conjugate",
    "stratify_last_square",
    "stratify_last_domino",
    "stratify_median_domino",
    "stratify_median_square",
    "subspace_count",
    "SUBSPACE_GUARD",
]

SQUARE = "S"
DOMINO = "D"
RIGHT = "R"
UP = "U"

SUBSPACE_GUARD = 10**7  # max matrices the subspace oracle will enumerate


@dataclass(frozen=True, slots=True)
class Tiling:
    """A piece sequence over {"S", "D"}; text form e.g. "DSDDSDS"."""

    pieces: tuple[str, ...]

    def __post_init__(self) -> None:
        for p in self.pieces:
            if p not in (SQUARE, DOMINO):
                raise DomainError(f"tiling piece must be 'S' or 'D', got {p!r}")

    @classmethod
    def from_text(cls, s: str) -> "Tiling":
        return cls(tuple(s))

    @property
    def squares(self) -> int:
        return sum(1 for p in self.pieces if p == SQUARE)

    @property
    def dominoes(self) -> int:
        return sum(1 for p in self.pieces if p == DOMINO)

    @property
    def board_length(self) -> int:
        return self.squares + 2 * self.dominoes

    def text(self) -> str:
        return "".join(self.pieces)


@dataclass(frozen=True, slots=True)
class LatticePath:
    """A step sequence over {"R", "U"}; text form e.g. "RURRURU"."""

    steps: tuple[str, ...]

    def __post_init__(self) -> None:
        for s in self.steps:
            if s not in (RIGHT, UP):
                raise DomainError(f"path step must be 'R' or 'U', got {s!r}")

    @classmethod
    def from_text(cls, s: str) -> "LatticePath":
        return cls(tuple(s))

    def text(self) -> str:
        return "".join(self.steps)


@dataclass(frozen=True, slots=True)
class BoxedPartition:
    """A weakly decreasing partition fitting a box_height x box_width box.

    Zero parts are stripped on construction; the empty partition prints
    as "()".  size is the number of cells of the Young diagram.
    """

    parts: tuple[int, ...]
    box_height: int
    box_width: int

    def __post_init__(self) -> None:
        if self.box_height < 0 or self.box_width < 0:
            raise DomainError("box dimensions must be >= 0")
        prev = None
        for p in self.parts:
            if not isinstance(p, int) or p < 0:
                raise DomainError(f"partition part must be an integer >= 0, got {p!r}")
            if prev is not None and p > prev:
                raise DomainError(f"parts must be weakly decreasing, got {self.parts}")
            prev = p
        cleaned = tuple(p for p in self.parts if p > 0)
        if len(cleaned) > self.box_height:
            raise DomainError(
                f"{len(cleaned)} nonzero parts exceed box height {self.box_height}"
            )
        if cleaned and cleaned[0] > self.box_width:
            raise DomainError(
                f"part {cleaned[0]} exceeds box width {self.box_width}"
            )
        object.__setattr__(self, "parts", cleaned)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def text(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


# enumeration ------------------------------------------------------------


def _check_params(n: int, k: int, what: str) -> None:
    if n < 0:
        raise NegativeIndex(f"{what} needs n >= 0, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"{what} needs 0 <= k <= n, got (n={n}, k={k})")


def enumerate_tilings(n: int, k: int) -> list[Tiling]:
    """All tilings with k dominoes and n-k squares, lex order with S < D."""
    _check_params(n, k, "enumerate_tilings")
    out: list[Tiling] = []
    buf: list[str] = []

    def rec(s: int, d: int) -> None:
        if not s and not d:
            out.append(Tiling(tuple(buf)))
            return
        if s:
            buf.append(SQUARE)
            rec(s - 1, d)
            buf.pop()
        if d:
            buf.append(DOMINO)
            rec(s, d - 1)
            buf.pop()

    rec(n - k, k)
    return out


def weight_exponent(t: Tiling) -> int:
    """Sum over squares of the number of dominoes occurring earlier."""
    w = 0
    seen_dominoes = 0
    for p in t.pieces:
        if p == DOMINO:
            seen_dominoes += 1
        else:
            w += seen_dominoes
    return w


def _generating_polynomial(weights: list[int]) -> Polynomial:
    if not weights:
        return ZERO
    counts = [0] * (max(weights) + 1)
    for w in weights:
        counts[w] += 1
    return Polynomial(counts)


def tilings_generating_polynomial(n: int, k: int) -> Polynomial:
    """Sum of q^weight over enumerate_tilings(n, k); equals gauss(n, k)."""
    return _generating_polynomial(
        [weight_exponent(t) for t in enumerate_tilings(n, k)]
    )


# bijections --------------------------------------------------------------


def path_to_tiling(p: LatticePath) -> Tiling:
    """Right -> Domino, Up -> Square, order preserved."""
    return Tiling(tuple(DOMINO if s == RIGHT else SQUARE for s in p.steps))


def tiling_to_path(t: Tiling) -> LatticePath:
    """Domino -> Right, Square -> Up; inverse of path_to_tiling."""
    return LatticePath(tuple(RIGHT if p == DOMINO else UP for p in t.pieces))


def path_to_partition(p: LatticePath) -> BoxedPartition:
    """Part i = number of Up steps after the i-th Right step.

    The result fits the (#Right) x (#Up) box and its size equals the
    path's weight exponent.
    """
    rights = sum(1 for s in p.steps if s == RIGHT)
    ups = len(p.steps) - rights
    reversed_parts: list[int] = []
    ups_behind = 0
    for s in reversed(p.steps):
        if s == UP:
            ups_behind += 1
        else:
            reversed_parts.append(ups_behind)
    return BoxedPartition(
        tuple(reversed(reversed_parts)), box_height=rights, box_width=ups
    )


# boxed partitions ---------------------------------------------------------


def _parts_desc(rows: int, cap: int) -> list[tuple[int, ...]]:
    # all weakly decreasing tuples with at most `rows` parts in [1, cap],
    # descending lex, empty partition last
    if rows == 0:
        return [()]
    acc: list[tuple[int, ...]] = []
    for v in range(cap, 0, -1):
        for tail in _parts_desc(rows - 1, v):
            acc.append((v,) + tail)
    acc.append(())
    return acc


def enumerate_box_partitions(height: int, width: int) -> list[BoxedPartition]:
    """All partitions in the height x width box, descending lex order."""
    if height < 0 or width < 0:
        raise DomainError(
            f"box dimensions must be >= 0, got ({height}, {width})"
        )
    return [
        BoxedPartition(t, box_height=height, box_width=width)
        for t in _parts_desc(height, width)
    ]


def partitions_generating_polynomial(height: int, width: int) -> Polynomial:
    """Sum of q^size over the box; equals gauss(height+width, height)."""
    return _generating_polynomial(
        [p.size for p in enumerate_box_partitions(height, width)]
    )


def conjugate(p: BoxedPartition) -> BoxedPartition:
    """Transpose of the Young diagram, fitting the transposed box.

    A size preserving involution; the induced bijection between the
    k x w and w x k boxes witnesses gauss(n,k) = gauss(n,n-k).
    """
    width = p.parts[0] if p.parts else 0
    conj = tuple(sum(1 for x in p.parts if x >= j) for j in range(1, width + 1))
    return BoxedPartition(conj, box_height=p.box_width, box_width=p.box_height)


# stratifications -----------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Stratum:
    """One stratum: members plus the theorem summand they must realize."""

    index: int
    label: str
    tilings: tuple[Tiling, ...]
    polynomial: Polynomial  # generating polynomial of the members
    predicted: Polynomial  # the identity summand for this stratum

    @property
    def size(self) -> int:
        return len(self.tilings)

    @property
    def matches(self) -> bool:
        return self.polynomial == self.predicted


@dataclass(frozen=True, slots=True)
class Stratification:
    """A disjoint, exhaustive split of a tiling family by one statistic."""

    criterion: str
    params: tuple[tuple[str, int], ...]
    target: Polynomial  # the Gaussian binomial being decomposed
    strata: tuple[Stratum, ...]

    def total_polynomial(self) -> Polynomial:
        acc = ZERO
        for s in self.strata:
            acc = acc + s.polynomial
        return acc

    @property
    def all_match(self) -> bool:
        return (
            all(s.matches for s in self.strata)
            and self.total_polynomial() == self.target
        )


def _build_strata(criterion, params, target, tilings, key_of, indices, label_of, predicted_of):
    buckets: dict[int, list[Tiling]] = {i: [] for i in indices}
    for t in tilings:
        i = key_of(t)
        if i not in buckets:
            raise AssertionError(
                f"{criterion}: statistic {i} outside declared strata {list(indices)}"
            )
        buckets[i].append(t)
    strata = tuple(
        Stratum(
            index=i,
            label=label_of(i),
            tilings=tuple(buckets[i]),
            polynomial=_generating_polynomial(
                [weight_exponent(t) for t in buckets[i]]
            ),
            predicted=predicted_of(i),
        )
        for i in indices
    )
    return Stratification(criterion, tuple(params), target, strata)


def stratify_last_square(n: int, k: int) -> Stratification:
    """Split the (n,k) tilings by the last square's position statistic.

    Stratum i (0 <= i <= k) holds tilings whose last square is followed
    by exactly k-i dominoes, i.e. preceded by i of them; its predicted
    summand is q^i [n-k-1+i; i], the i-th term of thm1.  Needs k < n so
    a last square exists.
    """
    if not (1 <= k < n):
        raise DomainError(
            f"last-square stratification needs 1 <= k < n, got (n={n}, k={k})"
        )

    def key_of(t: Tiling) -> int:
        last = max(i for i, p in enumerate(t.pieces) if p == SQUARE)
        return sum(1 for p in t.pieces[:last] if p == DOMINO)

    return _build_strata(
        "last-square",
        [("n", n), ("k", k)],
        gauss(n, k),
        enumerate_tilings(n, k),
        key_of,
        range(k + 1),
        lambda i: f"dominoes after last square = {k - i}",
        lambda i: gauss(n - k - 1 + i, i).shift(i),
    )


def stratify_last_domino(n: int, k: int) -> Stratification:
    """Split the (n,k) tilings by squares after the last domino.

    Stratum i (0 <= i <= n-k) holds tilings with exactly n-k-i squares
    right of the last domino; predicted summand q^(k(n-k-i)) [k-1+i; k-1],
    the i-th term of thm2.  Needs k >= 1 so a last domino exists.
    """
    if not (1 <= k <= n):
        raise DomainError(
            f"last-domino stratification needs 1 <= k <= n, got (n={n}, k={k})"
        )

    def key_of(t: Tiling) -> int:
        last = max(i for i, p in enumerate(t.pieces) if p == DOMINO)
        after = sum(1 for p in t.pieces[last + 1 :] if p == SQUARE)
        return (n - k) - after

    return _build_strata(
        "last-domino",
        [("n", n), ("k", k)],
        gauss(n, k),
        enumerate_tilings(n, k),
        key_of,
        range(n - k + 1),
        lambda i: f"squares after last domino = {n - k - i}",
        lambda i: gauss(k - 1 + i, k - 1).shift(k * (n - k - i)),
    )


def stratify_median_domino(n: int, r: int) -> Stratification:
    """Split the tilings with 2r+1 dominoes by where the median domino sits.

    The board has length n+2r+1; the median is the (r+1)-th domino.  In
    stratum i (1 <= i <= n-2r) it covers cells 2r+i and 2r+i+1; the
    predicted summand is q^((r+1)(n-2r-i)) [r-1+i; r] [n-r-i; r], the
    i-th term of thm3 (whose right side is [n; 2r+1]).
    """
    if r < 0:
        raise DomainError(f"median-domino stratification needs r >= 0, got {r}")
    if n < 2 * r + 1:
        raise DomainError(
            f"median-domino stratification needs n >= 2r+1, got (n={n}, r={r})"
        )

    def key_of(t: Tiling) -> int:
        cell = 1  # 1-indexed start cell of the next piece
        count = 0
        for p in t.pieces:
            if p == DOMINO:
                count += 1
                if count == r + 1:
                    return cell - 2 * r
                cell += 2
            else:
                cell += 1
        raise AssertionError("tiling has fewer than r+1 dominoes")

    return _build_strata(
        "median-domino",
        [("n", n), ("r", r)],
        gauss(n, 2 * r + 1),
        enumerate_tilings(n, 2 * r + 1),
        key_of,
        range(1, n - 2 * r + 1),
        lambda i: f"median domino covers cells {2 * r + i} and {2 * r + i + 1}",
        lambda i: (gauss(r - 1 + i, r) * gauss(n - r - i, r)).shift(
            (r + 1) * (n - 2 * r - i)
        ),
    )


def stratify_median_square(m: int, r: int) -> Stratification:
    """Split the tilings with r dominoes and m squares (m odd) by the
    number of dominoes before the median square.

    The median is the ((m+1)/2)-th square.  Stratum i (0 <= i <= r) has
    predicted summand q^(i(m+1)/2) [(m-1)/2+i; i] [(m-1)/2+r-i; r-i];
    the strata sum to gauss(m+r, r).  With n = m+r this realizes thm4's
    decomposition of [n+r; r] after the substitution m = n - r there.
    """
    if r < 0:
        raise DomainError(f"median-square stratification needs r >= 0, got {r}")
    if m < 1 or m % 2 == 0:
        raise DomainError(
            f"median-square stratification needs odd m >= 1, got {m}"
        )
    median = (m + 1) // 2

    def key_of(t: Tiling) -> int:
        seen_squares = 0
        seen_dominoes = 0
        for p in t.pieces:
            if p == SQUARE:
                seen_squares += 1
                if seen_squares == median:
                    return seen_dominoes
            else:
                seen_dominoes += 1
        raise AssertionError("tiling has fewer than (m+1)/2 squares")

    half = (m - 1) // 2
    return _build_strata(
        "median-square",
        [("m", m), ("r", r)],
        gauss(m + r, r),
        enumerate_tilings(m + r, r),
        key_of,
        range(r + 1),
        lambda i: f"dominoes before median square = {i}",
        lambda i: (gauss(half + i, i) * gauss(half + r - i, r - i)).shift(
            i * (m + 1) // 2
        ),
    )


# subspace oracle -----------------------------------------------------------


def subspace_count(n: int, k: int, q: int) -> int:
    """Count k-dimensional subspaces of GF(q)^n by brute enumeration.

    Reduces every k x n matrix over GF(q) to reduced row echelon form
    and counts the distinct full-rank results, one per subspace.  This
    is deliberately independent of the polynomial machinery; it exists
    to validate eval_int(gauss(n, k), q) at field sizes q in {2, 3, 4}.
    The q^(k*n) <= SUBSPACE_GUARD guard keeps the enumeration at desk
    scale.
    """
    if q not in (2, 3, 4):
        raise DomainError(f"unsupported field size {q}: GF(2), GF(3), GF(4) only")
    if n < 0:
        raise NegativeIndex(f"subspace_count needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    if q ** (k * n) > SUBSPACE_GUARD:
        raise DomainError(
            f"q^(k*n) = {q}^{k * n} exceeds the {SUBSPACE_GUARD} enumeration guard"
        )
    if k == 0:
        return 1
    # deferred so that importing this module (and the CLI) stays free of
    # numpy/numba until the oracle is actually used
    from . import _gf

    return _gf.count_distinct_rref(n, k, q)
