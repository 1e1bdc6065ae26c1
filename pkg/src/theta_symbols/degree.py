"""Order of a symbol: the q-degree of the unipotent character dimension.

Two independent routes are provided.  :func:`ord_closed` uses the closed
form in the sorted entries of the symbol; :func:`ord_oracle` assembles the
degree factor by factor from the dimension formula and never sorts the
entries jointly.  Only integer degrees are computed.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from math import comb
from typing import Sequence

from .symbols import Symbol, rows_rank


def binomial_tail_closed(m: int) -> int:
    """C(m-2,2) + C(m-4,2) + ... in closed form."""
    if m % 2:
        return (m - 1) * (m - 3) * (2 * m - 1) // 24
    return m * (m - 2) * (2 * m - 5) // 24


def binomial_tail_direct(m: int) -> int:
    return sum(comb(j, 2) for j in range(m - 2, 1, -2))


def ord_entries(z: Sequence[int]) -> int:
    """Closed-form order from an entry list (any order); rank is derived from the entries."""
    z = sorted(z, reverse=True)
    m = len(z)
    n = sum(z) - (m - 1) ** 2 // 4
    head = sum((m - i) * x for i, x in enumerate(z, start=1)) - sum(x * (x + 1) for x in z)
    if m % 2:
        return head + n * (n + 1) - binomial_tail_closed(m)
    return head + n * n - binomial_tail_closed(m)


@lru_cache(maxsize=None)
def ord_closed(s: Symbol) -> int:
    return ord_entries(s.top + s.bottom)


@dataclass(frozen=True)
class DegreeBreakdown:
    deg_delta_A: int
    deg_delta_B: int
    deg_theta_A: int
    deg_theta_B: int
    deg_pi: int
    deg_group_order: int
    deg_q_power: int
    total: int
    c: int = 0  # exponent of the 1/2^c constant; never enters the degree

    def to_dict(self) -> dict[str, int]:
        d = asdict(self)
        d.pop("c")
        return d


def _deg_delta(row: Sequence[int]) -> int:
    m = len(row)
    return sum((m - i) * a for i, a in enumerate(row, start=1))


def _deg_theta(row: Sequence[int]) -> int:
    return sum(a * (a + 1) for a in row)


def ord_oracle(s: Symbol) -> DegreeBreakdown:
    A, B = s.top, s.bottom
    m1, m2 = len(A), len(B)
    n = rows_rank(A, B)
    # |G|_{p'} has degree n(n+1) for Sp_{2n} (odd defect) and n^2 for O^±_{2n}
    group = n * (n + 1) if s.defect % 2 else n * n
    d_a, d_b = _deg_delta(A), _deg_delta(B)
    t_a, t_b = _deg_theta(A), _deg_theta(B)
    pi = sum(max(a, b) for a in A for b in B)
    qpow = binomial_tail_direct(m1 + m2)
    c = m1 if A == B else (m1 + m2 - 1) // 2
    total = group + d_a + d_b + pi - t_a - t_b - qpow
    return DegreeBreakdown(d_a, d_b, t_a, t_b, pi, group, qpow, total, c)


def entry_move_ord_delta(z: Sequence[int], k: int, l: int) -> int:
    """Change in order when z_k rises by one and z_l drops by one (1-based, k < l).

    z must be weakly decreasing, with z_{k-1} >= z_k + 1 and z_l - 1 >= z_{l+1}
    so that the moved sequence stays sorted.
    """
    z = list(z)
    m = len(z)
    if not 1 <= k < l <= m:
        raise ValueError(f"need 1 <= k < l <= {m}, got k={k}, l={l}")
    if any(a < b for a, b in zip(z, z[1:])):
        raise ValueError("entries must be weakly decreasing")
    if k > 1 and z[k - 2] < z[k - 1] + 1:
        raise ValueError("z_{k-1} >= z_k + 1 violated")
    if l < m and z[l - 1] - 1 < z[l]:
        raise ValueError("z_l - 1 >= z_{l+1} violated")
    return (l - k) + 2 * (z[l - 1] - z[k - 1] - 1)


def steinberg_symbol(kind: str, n: int) -> Symbol:
    if kind == "Sp":
        return Symbol(range(n, -1, -1), range(n, 0, -1))
    if kind == "O+":
        return Symbol(range(n, 0, -1), range(n - 1, -1, -1))
    if kind == "O-":
        return Symbol(range(n, -1, -1), range(n - 1, 0, -1))
    raise ValueError(kind)
