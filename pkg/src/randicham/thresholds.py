"""Scalar threshold functions for the degree-power Hamiltonicity bounds.

Three families of bounds are exposed:

* ``k_hamiltonian_bound(i, n, k, a)``
      i (i+k)^a + (n-2i-k) (n-i-1)^a + (i+k) (n-1)^a
  the largest ``sum d^a`` a degree sequence violating the k-Hamiltonian
  degree test at index ``i`` can reach (for ``a > 0``).
* ``hamiltonian_bound(i, n, a)``, the ``k = 0`` case.
* ``bipartite_bound(i, n, a)`` = i^(a+1) + (n-i)^(a+1) + n^(a+1), the
  balanced-bipartite analogue on ``2n`` vertices.

For ``a >= 2`` the Hamiltonian bound is maximised either at ``i = 1`` or at
the middle index.  Which end wins is decided by the sign of

    odd_gap(n, a)  = hamiltonian_bound((n-1)/2, n, a) - hamiltonian_bound(1, n, a)
    even_gap(n, a) = hamiltonian_bound((n-2)/2, n, a) - hamiltonian_bound(1, n, a)

whose largest real roots ``x0`` / ``x1`` and the derived integer crossover
orders ``n0`` / ``n1`` are computed here, together with the closed-form
estimates ``f0`` / ``f1`` that bracket them.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional

from .errors import DomainError, IOutOfRange, KOutOfRange, NoRootFound
from .indices import as_alpha

LN2 = math.log(2.0)

# closed forms are evaluated directly below this exponent, in log space above
LOG_SPACE_ALPHA = 400.0
ROOT_SCAN_STEP = 0.5
ROOT_TOL = 1e-9
# bisection error slack when rounding a root up to the next integer
_ROUNDING_SLACK = 1e-6
_ZERO_REL = 1e-12


def _pow(x: float, a: float) -> float:
    try:
        return x ** a
    except OverflowError:
        return math.inf


def _require_alpha_ge2(a: float) -> float:
    a = as_alpha(a)
    if a < 2:
        raise DomainError(f"alpha must be >= 2, got {a}")
    return a


# --- the three bound families ----------------------------------------------


def k_hamiltonian_bound(i: float, n: int, k: int, alpha: float) -> float:
    a = as_alpha(alpha)
    if not 0 <= k <= n - 3:
        raise KOutOfRange(f"need 0 <= k <= n-3, got k={k}, n={n}")
    if not 1 <= i <= (n - k - 1) / 2:
        raise IOutOfRange(f"need 1 <= i <= (n-k-1)/2, got i={i}, n={n}, k={k}")
    return (
        i * _pow(i + k, a)
        + (n - 2 * i - k) * _pow(n - i - 1, a)
        + (i + k) * _pow(n - 1, a)
    )


def hamiltonian_bound(i: float, n: int, alpha: float) -> float:
    """The ``k = 0`` bound; delegates so both agree bit for bit."""
    if not 1 <= i <= (n - 1) / 2:
        raise IOutOfRange(f"need 1 <= i <= (n-1)/2, got i={i}, n={n}")
    return k_hamiltonian_bound(i, n, 0, alpha)


def bipartite_bound(i: float, n: int, alpha: float) -> float:
    """Balanced bipartite bound on ``2n`` vertices.

    The expression is symmetric under ``i -> n - i``; indices up to ``n - 1``
    are accepted so the deleted-``K_{n,n}`` family can be checked for every
    split size.
    """
    a = as_alpha(alpha)
    if n < 2 or not 1 <= i <= n - 1:
        raise IOutOfRange(f"need n >= 2 and 1 <= i <= n-1, got i={i}, n={n}")
    return _pow(i, a + 1) + _pow(n - i, a + 1) + _pow(n, a + 1)


def k_gap_odd(n: int, k: int, alpha: float) -> float:
    """Middle-minus-first difference of the k-bound at i = (n-k-1)/2."""
    return k_hamiltonian_bound((n - k - 1) / 2, n, k, alpha) - k_hamiltonian_bound(1, n, k, alpha)


def k_gap_even(n: int, k: int, alpha: float) -> float:
    """Same at i = (n-k-2)/2; needs n - k >= 4."""
    return k_hamiltonian_bound((n - k - 2) / 2, n, k, alpha) - k_hamiltonian_bound(1, n, k, alpha)


# --- the odd/even gap functions ---------------------------------------------


def _odd_gap_terms(n: float, a: float) -> list[float]:
    # odd_gap / (n-1)^a, each term kept separately for the zero test
    shrink = math.exp(a * math.log1p(-1.0 / (n - 1)))
    return [
        (n + 1) * math.exp(-(a + 1) * LN2),
        (n - 3) / 2,
        -(n - 2) * shrink,
        -math.exp(-a * math.log(n - 1)),
    ]


def _even_gap_terms(n: float, a: float) -> list[float]:
    shrink = math.exp(a * math.log1p(-1.0 / (n - 1)))
    return [
        math.exp((1 - a) * LN2 + a * math.log1p(1.0 / (n - 1))),
        n / 2 - 2,
        math.expm1(-(a + 1) * LN2) * (n - 2) * shrink,
        -math.exp(-a * math.log(n - 1)),
    ]


def _signed(terms: list[float]) -> tuple[float, int]:
    total = math.fsum(terms)
    scale = max(abs(t) for t in terms)
    if abs(total) <= _ZERO_REL * scale:
        return total, 0
    return total, 1 if total > 0 else -1


def _unscale(scaled: float, n: float, a: float) -> float:
    if scaled == 0.0:
        return 0.0
    log_mag = math.log(abs(scaled)) + a * math.log(n - 1)
    if log_mag > 709.0:
        return math.copysign(math.inf, scaled)
    return math.copysign(math.exp(log_mag), scaled)


def odd_gap(n: float, alpha: float) -> float:
    a = _require_alpha_ge2(alpha)
    if n < 3:
        raise DomainError(f"odd gap needs n >= 3, got {n}")
    if a < LOG_SPACE_ALPHA:
        return (
            ((n + 1) / 2 ** (a + 1) + (n - 3) / 2) * (n - 1) ** a
            - (n - 2) ** (a + 1)
            - 1
        )
    return _unscale(math.fsum(_odd_gap_terms(n, a)), n, a)


def even_gap(n: float, alpha: float) -> float:
    a = _require_alpha_ge2(alpha)
    if n < 4:
        raise DomainError(f"even gap needs n >= 4, got {n}")
    if a < LOG_SPACE_ALPHA:
        return (
            n ** a / 2 ** (a - 1)
            + (n / 2 - 2) * (n - 1) ** a
            + (1 / 2 ** (a + 1) - 1) * (n - 2) ** (a + 1)
            - 1
        )
    return _unscale(math.fsum(_even_gap_terms(n, a)), n, a)


def scaled_gap(which: str, n: float, alpha: float) -> float:
    """Gap divided by ``(n-1)**alpha``; same sign, never overflows."""
    terms, _ = _gap_setup(which)
    return math.fsum(terms(n, as_alpha(alpha)))


def _gap_setup(which: str) -> tuple[Callable[[float, float], list[float]], float]:
    if which == "odd":
        return _odd_gap_terms, 3.0
    if which == "even":
        return _even_gap_terms, 4.0
    raise ValueError(f"which must be 'odd' or 'even', got {which!r}")


# --- inequalities used for the large-order bounds ---------------------------


def large_n_inequalities(n: float, k: float, alpha: float) -> tuple[float, float, float]:
    """Return the three auxiliary differences used by the large-order bounds.

    * ``(k+1)^a + (n-2)^a - 2((n+k-1)/2)^a``   (Jensen, >= 0)
    * ``(n-7/2)^a + (n-1)^a - 2(n-2)^a``      (< 0 once n >= 13.25 a)
    * ``3(n-3)^a + (n-1)^a - (n-4)^a - 3(n-2)^a``  (>= 0, zero iff a == 2)
    """
    a = _require_alpha_ge2(alpha)
    if n < 5 or not 0 <= k <= n - 3:
        raise DomainError(f"need n >= 5 and 0 <= k <= n-3, got n={n}, k={k}")
    jensen = (k + 1) ** a + (n - 2) ** a - 2 * ((n + k - 1) / 2) ** a
    taylor = (n - 3.5) ** a + (n - 1) ** a - 2 * (n - 2) ** a
    third = 3 * (n - 3) ** a + (n - 1) ** a - (n - 4) ** a - 3 * (n - 2) ** a
    return jensen, taylor, third


# --- closed-form regime bounds ----------------------------------------------


def upper_regime_bound(alpha: float) -> float:
    """f0: from this order on, the ``i = 1`` Hamiltonian bound dominates.

    1 + 1 / (1 - (2^-(a+1) + 1/2)^(1/a))
    """
    a = _require_alpha_ge2(alpha)
    log_base = math.log(0.5) + math.log1p(math.exp(-a * LN2))
    return 1.0 + 1.0 / -math.expm1(log_base / a)


def lower_regime_bound(alpha: float) -> float:
    """f1: up to this order the middle-index Hamiltonian bound dominates.

    1 + 1 / (1 - (1/2)^(1/(a-3))).  Singular at a = 3, where the right-hand
    limit 2 is used.  Below 3 the expression is evaluated as written.
    """
    a = _require_alpha_ge2(alpha)
    if a == 3.0:
        return 2.0
    return 1.0 + 1.0 / -math.expm1(-LN2 / (a - 3))


# --- roots ------------------------------------------------------------------


def _bisect(fn: Callable[[float], int], lo: float, hi: float, s_lo: int, tol: float) -> float:
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        s_mid = fn(mid)
        if s_mid == 0:
            return mid
        if s_mid == s_lo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _grid(lo: float, hi: float, step: float) -> list[float]:
    count = int(math.floor((hi - lo) / step + 1e-9))
    return [lo + j * step for j in range(count + 1)]


def largest_root(which: str, alpha: float, tol: float = ROOT_TOL) -> float:
    """Largest root of the odd or even gap on ``[lower, f0 + 2]``.

    ``lower`` is 3 for the odd gap and 4 for the even gap.  Both gaps vanish
    identically at their lower end, so the lower end is returned when no
    sign change lies to its right.
    """
    a = _require_alpha_ge2(alpha)
    if tol <= 0:
        raise DomainError("tol must be positive")
    terms, lower = _gap_setup(which)

    def sign(x: float) -> int:
        return _signed(terms(x, a))[1]

    xs = _grid(lower, upper_regime_bound(a) + 2.0, ROOT_SCAN_STEP)
    signs = [sign(x) for x in xs]
    for j in range(len(xs) - 2, -1, -1):
        if signs[j + 1] == 0:
            return xs[j + 1]
        if signs[j] * signs[j + 1] < 0:
            return _bisect(sign, xs[j], xs[j + 1], signs[j], tol)
    if signs[0] == 0:
        return xs[0]
    raise NoRootFound(f"{which} gap has no sign change for alpha={a}")


def _next_with_parity(x: float, parity: int, floor_value: int) -> int:
    n = max(math.ceil(x - _ROUNDING_SLACK), floor_value)
    if n % 2 != parity:
        n += 1
    return n


def crossover_orders(alpha: float) -> tuple[int, int]:
    """(n0, n1): the least odd order >= x0 and the least even order >= x1."""
    a = _require_alpha_ge2(alpha)
    n0 = _next_with_parity(largest_root("odd", a), 1, 5)
    n1 = _next_with_parity(largest_root("even", a), 0, 4)
    return n0, n1


@dataclass(frozen=True)
class ThresholdRow:
    alpha: float
    x0: Optional[float]
    x1: Optional[float]
    n0: Optional[int]
    n1: Optional[int]
    f0: float
    f1: float

    @property
    def x0_minus_x1(self) -> Optional[float]:
        if self.x0 is None or self.x1 is None:
            return None
        return self.x0 - self.x1

    def to_dict(self) -> dict:
        d = asdict(self)
        d["x0_minus_x1"] = self.x0_minus_x1
        return {key: d[key] for key in CSV_COLUMNS}


CSV_COLUMNS = ("alpha", "x0", "x1", "x0_minus_x1", "n0", "n1", "f0", "f1")


def threshold_row(alpha: float) -> ThresholdRow:
    a = _require_alpha_ge2(alpha)
    try:
        x0 = largest_root("odd", a)
        n0 = _next_with_parity(x0, 1, 5)
    except NoRootFound:
        x0, n0 = None, None
    try:
        x1 = largest_root("even", a)
        n1 = _next_with_parity(x1, 0, 4)
    except NoRootFound:
        x1, n1 = None, None
    return ThresholdRow(a, x0, x1, n0, n1, upper_regime_bound(a), lower_regime_bound(a))


def threshold_table(alphas: Iterable[float]) -> list[ThresholdRow]:
    return [threshold_row(a) for a in alphas]


def asymptotics(alpha: float) -> tuple[float, float, float]:
    """(f0/alpha, f1/alpha, f0 - f1); tend to 1/ln 2, 1/ln 2 and 3/ln 2."""
    a = _require_alpha_ge2(alpha)
    f0, f1 = upper_regime_bound(a), lower_regime_bound(a)
    return f0 / a, f1 / a, f0 - f1


# --- exploratory sign-change scan -------------------------------------------


@dataclass
class GapScan:
    alpha: float
    n_max: float
    step: float
    odd_changes: int = 0
    even_changes: int = 0
    odd_brackets: list[tuple[float, float]] = field(default_factory=list)
    even_brackets: list[tuple[float, float]] = field(default_factory=list)


def _sign_changes(which: str, a: float, n_max: float, step: float) -> list[tuple[float, float]]:
    terms, lower = _gap_setup(which)
    brackets = []
    last_x, last_s = None, 0
    for x in _grid(lower + step, n_max, step):
        s = _signed(terms(x, a))[1]
        if s == 0:
            continue
        if last_s and s != last_s:
            brackets.append((last_x, x))
        last_x, last_s = x, s
    return brackets


def gap_sign_scan(alpha: float, n_max: float, step: float = 0.25) -> GapScan:
    """Count sign changes of the odd gap on (3, n_max] and the even gap on (4, n_max].

    Purely a report; nothing about the number of roots is asserted.
    """
    a = _require_alpha_ge2(alpha)
    if step <= 0:
        raise DomainError("step must be positive")
    odd = _sign_changes("odd", a, n_max, step)
    even = _sign_changes("even", a, n_max, step)
    return GapScan(a, n_max, step, len(odd), len(even), odd, even)
