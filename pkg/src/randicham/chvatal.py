"""Chvátal-type degree-sequence tests for (k-)Hamiltonicity.

Both tests work on sorted degree sequences alone, so they can screen
hypothetical sequences as well as real graphs.  Indices are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import BadParams, KOutOfRange, OddLength
from .graph import DegreeSequence


@dataclass(frozen=True)
class ChvatalVerdict:
    passed: bool
    witness_i: Optional[int] = None


def _as_sequence(pi: Union[DegreeSequence, Sequence[int]]) -> tuple[int, ...]:
    d = tuple(pi)
    if any(a > b for a, b in zip(d, d[1:])):
        raise BadParams("degree sequence must be sorted nondecreasing")
    return d


def chvatal_k_hamiltonian(pi: Union[DegreeSequence, Sequence[int]], k: int) -> ChvatalVerdict:
    """For every 1 <= i <= (n-k-1)/2: d_i <= i+k implies d_{n-i-k} >= n-i."""
    d = _as_sequence(pi)
    n = len(d)
    if not 0 <= k <= n - 3:
        raise KOutOfRange(f"need 0 <= k <= n-3, got k={k}, n={n}")
    for i in range(1, (n - k - 1) // 2 + 1):
        if d[i - 1] <= i + k and d[n - i - k - 1] < n - i:
            return ChvatalVerdict(False, i)
    return ChvatalVerdict(True)


def chvatal_bipartite(pi: Union[DegreeSequence, Sequence[int]], n: int) -> ChvatalVerdict:
    """Balanced bipartite test on the combined sequence of length ``2n``.

    For every 1 <= i <= n/2: d_i <= i implies d_n >= n-i+1.
    """
    d = _as_sequence(pi)
    if len(d) % 2:
        raise OddLength(f"sequence length {len(d)} is odd")
    if len(d) != 2 * n or n < 2:
        raise BadParams(f"need a sequence of length 2n with n >= 2, got n={n}, length {len(d)}")
    for i in range(1, n // 2 + 1):
        if d[i - 1] <= i and d[n - 1] < n - i + 1:
            return ChvatalVerdict(False, i)
    return ChvatalVerdict(True)
