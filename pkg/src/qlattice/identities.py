"""Mechanical verification of the Gaussian binomial identities.

Catalog ([n;k] is gauss(n,k); C(n,k) the ordinary binomial; all
polynomial arithmetic exact):

  thm1   sum_{i=0}^{k}    q^i [n-k-1+i; i]                     = [n; k]
         for 1 <= k < n (n = k excluded: the i = 0 term would need [-1; 0])
  thm2   sum_{i=0}^{n-k}  q^(k(n-k-i)) [k-1+i; k-1]            = [n; k]
         for 1 <= k <= n
  thm3   sum_{i=1}^{n-2r} q^((r+1)(n-2r-i)) [r-1+i; r][n-r-i; r] = [n; 2r+1]
         for r >= 1, n >= 2r+1; r = 0 holds too but is treated as an
         extension and swept separately
  thm4   sum_{i=0}^{r}    q^(i(n+1)/2) [(n-1)/2+i; i][(n-1)/2+r-i; r-i]
                                                                = [n+r; r]
         for odd n >= 1, r >= 1; r = 0 again an extension
  cor1   2 sum_{i=1}^{n/2} C(r-1+i, r) C(n+r-i, r) = C(n+2r, 2r+1)
         for even n >= 2, r >= 1 (thm3 at q = 1 after substituting
         n -> n+2r, paired symmetrically)
  cor2   2 sum_{i=0}^{L} C((n-1)/2+i, i) C((n-1)/2+r-i, r-i) = C(n+r, r)
         for odd n, r: with L = (r+1)/2 ("printed" variant) this FAILS,
         first at n = r = 1 with lhs 4 vs rhs 2; with L = (r-1)/2
         ("corrected") it holds, since the pairing i <-> r-i has no
         fixed point for odd r.  Both variants ship so the discrepancy
         stays a machine checked fact.
  guoyang1  sum_{k=0}^{n/2} [m+k; k]_{q^2} [m+1; n-2k] q^C(n-2k,2) = [m+n; n]
  guoyang2  sum_{k=0}^{n/4} [m+k; k]_{q^4} [m+1; n-4k] q^C(n-4k,2)
              = sum_{k=0}^{n/2} (-1)^k [m+k; k]_{q^2} [m+n-2k; n-2k]
  sun1, sun2  the q = 1 shadows of guoyang1 and guoyang2, over plain
         binomials

sweep() runs one identity over a bounded parameter grid and returns an
IdentityReport carrying every counterexample verbatim.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .errors import DomainError
from .poly import Polynomial, ZERO
from .qbinom import gauss

__all__ = [
    "IdentityId",
    "REQUIRED_IDENTITIES",
    "Failure",
    "IdentityReport",
    "thm1_terms",
    "thm2_terms",
    "thm3_terms",
    "thm4_terms",
    "verify_thm1",
    "verify_thm2",
    "verify_thm3",
    "verify_thm4",
    "verify_cor1",
    "verify_cor2_printed",
    "verify_cor2_corrected",
    "verify_guoyang1",
    "verify_guoyang2",
    "verify_sun1",
    "verify_sun2",
    "sweep",
    "DEFAULT_MAX_R",
]


class IdentityId(str, Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    THM3 = "thm3"
    THM4 = "thm4"
    COR1 = "cor1"
    COR2_PRINTED = "cor2-printed"
    COR2_CORRECTED = "cor2-corrected"
    GUOYANG1 = "guoyang1"
    GUOYANG2 = "guoyang2"
    SUN1 = "sun1"
    SUN2 = "sun2"


# cor2-printed is retained as a documented discrepancy; its failure must
# not fail a full verification run
REQUIRED_IDENTITIES = frozenset(IdentityId) - {IdentityId.COR2_PRINTED}

DEFAULT_MAX_R = 8


def _psum(terms) -> Polynomial:
    acc = ZERO
    for t in terms:
        acc = acc + t
    return acc


# theorem term lists ---------------------------------------------------------
# Exposed so strata can be compared against the matching summand termwise,
# not just in total.


def thm1_terms(n: int, k: int) -> list[Polynomial]:
    if not (1 <= k < n):
        raise DomainError(f"thm1 needs 1 <= k < n, got (n={n}, k={k})")
    return [gauss(n - k - 1 + i, i).shift(i) for i in range(k + 1)]


def thm2_terms(n: int, k: int) -> list[Polynomial]:
    if not (1 <= k <= n):
        raise DomainError(f"thm2 needs 1 <= k <= n, got (n={n}, k={k})")
    return [
        gauss(k - 1 + i, k - 1).shift(k * (n - k - i)) for i in range(n - k + 1)
    ]


def thm3_terms(n: int, r: int) -> list[Polynomial]:
    if r < 0:
        raise DomainError(f"thm3 needs r >= 0, got r={r}")
    if n < 2 * r + 1:
        raise DomainError(f"thm3 needs n >= 2r+1, got (n={n}, r={r})")
    return [
        (gauss(r - 1 + i, r) * gauss(n - r - i, r)).shift(
            (r + 1) * (n - 2 * r - i)
        )
        for i in range(1, n - 2 * r + 1)
    ]


def thm4_terms(n: int, r: int) -> list[Polynomial]:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"thm4 needs odd n >= 1, got n={n}")
    if r < 0:
        raise DomainError(f"thm4 needs r >= 0, got r={r}")
    half = (n - 1) // 2
    return [
        (gauss(half + i, i) * gauss(half + r - i, r - i)).shift(i * (n + 1) // 2)
        for i in range(r + 1)
    ]


# verifiers -------------------------------------------------------------------


def _thm1_sides(n, k):
    return _psum(thm1_terms(n, k)), gauss(n, k)


def _thm2_sides(n, k):
    return _psum(thm2_terms(n, k)), gauss(n, k)


def _thm3_sides(n, r):
    return _psum(thm3_terms(n, r)), gauss(n, 2 * r + 1)


def _thm4_sides(n, r):
    return _psum(thm4_terms(n, r)), gauss(n + r, r)


def verify_thm1(n: int, k: int) -> bool:
    lhs, rhs = _thm1_sides(n, k)
    return lhs == rhs


def verify_thm2(n: int, k: int) -> bool:
    lhs, rhs = _thm2_sides(n, k)
    return lhs == rhs


def verify_thm3(n: int, r: int) -> bool:
    lhs, rhs = _thm3_sides(n, r)
    return lhs == rhs


def verify_thm4(n: int, r: int) -> bool:
    lhs, rhs = _thm4_sides(n, r)
    return lhs == rhs


def _cor1_sides(n, r):
    if n < 2 or n % 2:
        raise DomainError(f"cor1 needs even n >= 2, got n={n}")
    if r < 1:
        raise DomainError(f"cor1 needs r >= 1, got r={r}")
    lhs = 2 * sum(
        comb(r - 1 + i, r) * comb(n + r - i, r) for i in range(1, n // 2 + 1)
    )
    return lhs, comb(n + 2 * r, 2 * r + 1)


def verify_cor1(n: int, r: int) -> bool:
    lhs, rhs = _cor1_sides(n, r)
    return lhs == rhs


def _cor2_sides(n, r, top):
    if n < 1 or n % 2 == 0 or r < 1 or r % 2 == 0:
        raise DomainError(f"cor2 needs odd n, r >= 1, got (n={n}, r={r})")
    half = (n - 1) // 2
    lhs = 2 * sum(
        comb(half + i, i) * comb(half + r - i, r - i) for i in range(top + 1)
    )
    return lhs, comb(n + r, r)


def _cor2_printed_sides(n, r):
    return _cor2_sides(n, r, (r + 1) // 2)


def _cor2_corrected_sides(n, r):
    return _cor2_sides(n, r, (r - 1) // 2)


def verify_cor2_printed(n: int, r: int) -> bool:
    lhs, rhs = _cor2_printed_sides(n, r)
    return lhs == rhs


def verify_cor2_corrected(n: int, r: int) -> bool:
    lhs, rhs = _cor2_corrected_sides(n, r)
    return lhs == rhs


def _check_mn(m, n, what):
    if m < 0 or n < 0:
        raise DomainError(f"{what} needs m, n >= 0, got (m={m}, n={n})")


def _guoyang1_sides(m, n):
    _check_mn(m, n, "guoyang1")
    lhs = ZERO
    for k in range(n // 2 + 1):
        term = gauss(m + k, k).substitute_power(2) * gauss(m + 1, n - 2 * k)
        lhs = lhs + term.shift(comb(n - 2 * k, 2))
    return lhs, gauss(m + n, n)


def verify_guoyang1(m: int, n: int) -> bool:
    lhs, rhs = _guoyang1_sides(m, n)
    return lhs == rhs


def _guoyang2_sides(m, n):
    _check_mn(m, n, "guoyang2")
    lhs = ZERO
    for k in range(n // 4 + 1):
        term = gauss(m + k, k).substitute_power(4) * gauss(m + 1, n - 4 * k)
        lhs = lhs + term.shift(comb(n - 4 * k, 2))
    rhs = ZERO
    for k in range(n // 2 + 1):
        term = gauss(m + k, k).substitute_power(2) * gauss(m + n - 2 * k, n - 2 * k)
        rhs = rhs + term.scale((-1) ** k)
    return lhs, rhs


def verify_guoyang2(m: int, n: int) -> bool:
    lhs, rhs = _guoyang2_sides(m, n)
    return lhs == rhs


def _sun1_sides(m, n):
    _check_mn(m, n, "sun1")
    lhs = sum(
        comb(m + k, k) * comb(m + 1, n - 2 * k) for k in range(n // 2 + 1)
    )
    return lhs, comb(m + n, n)


def verify_sun1(m: int, n: int) -> bool:
    lhs, rhs = _sun1_sides(m, n)
    return lhs == rhs


def _sun2_sides(m, n):
    _check_mn(m, n, "sun2")
    lhs = sum(
        comb(m + k, k) * comb(m + 1, n - 4 * k) for k in range(n // 4 + 1)
    )
    rhs = sum(
        (-1) ** k * comb(m + k, k) * comb(m + n - 2 * k, m)
        for k in range(n // 2 + 1)
    )
    return lhs, rhs


def verify_sun2(m: int, n: int) -> bool:
    lhs, rhs = _sun2_sides(m, n)
    return lhs == rhs


# sweeps ----------------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    """One counterexample, with both sides rendered for reproduction."""

    params: tuple[tuple[str, int], ...]
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"params": dict(self.params), "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of sweeping one identity over a parameter grid."""

    identity: IdentityId
    domain: str
    checked: int
    failures: tuple[Failure, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "id": self.identity.value,
            "domain": self.domain,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [f.to_json() for f in self.failures],
        }


_SIDES = {
    IdentityId.THM1: _thm1_sides,
    IdentityId.THM2: _thm2_sides,
    IdentityId.THM3: _thm3_sides,
    IdentityId.THM4: _thm4_sides,
    IdentityId.COR1: _cor1_sides,
    IdentityId.COR2_PRINTED: _cor2_printed_sides,
    IdentityId.COR2_CORRECTED: _cor2_corrected_sides,
    IdentityId.GUOYANG1: _guoyang1_sides,
    IdentityId.GUOYANG2: _guoyang2_sides,
    IdentityId.SUN1: _sun1_sides,
    IdentityId.SUN2: _sun2_sides,
}


def _grid(identity: IdentityId, max_n: int, rmax: int):
    """(case list, domain description); cases iterate deterministically."""
    if identity is IdentityId.THM1:
        return (
            [(("n", n), ("k", k)) for n in range(2, max_n + 1) for k in range(1, n)],
            f"2 <= n <= {max_n}, 1 <= k <= n-1",
        )
    if identity is IdentityId.THM2:
        return (
            [(("n", n), ("k", k)) for n in range(1, max_n + 1) for k in range(1, n + 1)],
            f"1 <= n <= {max_n}, 1 <= k <= n",
        )
    if identity is IdentityId.THM3:
        return (
            [
                (("n", n), ("r", r))
                for n in range(3, max_n + 1)
                for r in range(1, min((n - 1) // 2, rmax) + 1)
            ],
            f"3 <= n <= {max_n}, 1 <= r <= min((n-1)/2, {rmax})",
        )
    if identity is IdentityId.THM4:
        return (
            [
                (("n", n), ("r", r))
                for n in range(1, max_n + 1, 2)
                for r in range(1, rmax + 1)
            ],
            f"odd 1 <= n <= {max_n}, 1 <= r <= {rmax}",
        )
    if identity is IdentityId.COR1:
        return (
            [
                (("n", n), ("r", r))
                for n in range(2, max_n + 1, 2)
                for r in range(1, rmax + 1)
            ],
            f"even 2 <= n <= {max_n}, 1 <= r <= {rmax}",
        )
    if identity in (IdentityId.COR2_PRINTED, IdentityId.COR2_CORRECTED):
        return (
            [
                (("n", n), ("r", r))
                for n in range(1, max_n + 1, 2)
                for r in range(1, rmax + 1, 2)
            ],
            f"odd 1 <= n <= {max_n}, odd 1 <= r <= {rmax}",
        )
    # guoyang and sun sweep a full (m, n) square
    return (
        [(("m", m), ("n", n)) for m in range(max_n + 1) for n in range(max_n + 1)],
        f"0 <= m, n <= {max_n}",
    )


def _render_side(value) -> str:
    return value.text() if isinstance(value, Polynomial) else str(value)


def sweep(identity: IdentityId | str, max_n: int, max_r: int | None = None) -> IdentityReport:
    """Run one identity's verifier over a bounded grid.

    max_n bounds n (and m for guoyang/sun); max_r bounds r where one
    exists, defaulting to DEFAULT_MAX_R except for cor2, where it
    defaults to max_n so both parameters sweep together.  Iteration
    order is deterministic, so reports are reproducible.
    """
    identity = IdentityId(identity)
    if max_n < 0:
        raise DomainError(f"malformed bounds: max_n must be >= 0, got {max_n}")
    if max_r is not None and max_r < 0:
        raise DomainError(f"malformed bounds: max_r must be >= 0, got {max_r}")
    if max_r is None:
        cor2 = identity in (IdentityId.COR2_PRINTED, IdentityId.COR2_CORRECTED)
        rmax = max_n if cor2 else DEFAULT_MAX_R
    else:
        rmax = max_r
    cases, domain = _grid(identity, max_n, rmax)
    sides = _SIDES[identity]
    failures: list[Failure] = []
    for params in cases:
        lhs, rhs = sides(*(v for _, v in params))
        if lhs != rhs:
            failures.append(
                Failure(tuple(params), _render_side(lhs), _render_side(rhs))
            )
    return IdentityReport(identity, domain, len(cases), tuple(failures))
