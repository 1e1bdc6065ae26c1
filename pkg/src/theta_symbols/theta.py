"""Dual pairs and the unipotent Θ-relation between symbol families."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Optional

from .degree import ord_closed
from .partitions import (
    BiPartition,
    horizontal_strips_added,
    horizontal_strips_removed,
    interleaves,
)
from .symbols import (
    GroupTag,
    Symbol,
    defect_constant,
    enumerate_family,
    family_of,
    in_group,
    parse_group,
    upsilon,
    upsilon_inv,
)


@dataclass(frozen=True)
class DualPair:
    first: GroupTag
    second: GroupTag

    def __post_init__(self):
        if self.first.symplectic == self.second.symplectic:
            raise ValueError(f"{self} must pair one symplectic and one even orthogonal group")

    @property
    def eps(self) -> int:
        orth = self.second if self.first.symplectic else self.first
        return 1 if orth.kind == "O+" else -1

    @property
    def orthogonal(self) -> GroupTag:
        return self.second if self.first.symplectic else self.first

    @property
    def stable_range(self) -> bool:
        # the second group's size is measured by its split rank; O^-_{2n'} has split rank n'-1
        second = self.second.n - 1 if self.second.kind == "O-" else self.second.n
        return 2 * self.first.n <= second

    def reversed(self) -> "DualPair":
        return DualPair(self.second, self.first)

    def d(self, delta: int) -> int:
        """The integer d with delta = 4d+1 (Sp), 4d (O+) or 4d+2 (O-)."""
        r = self.first.residue
        if delta % 4 != r:
            raise ValueError(f"defect {delta} is not admissible for {self.first}")
        return (delta - r) // 4

    def tau(self, delta: int) -> int:
        d = self.d(delta)
        n, n2 = self.first.n, self.second.n
        if self.eps > 0:
            return n2 - n + 2 * d
        return n2 - n - 1 - 2 * d

    def target_defect(self, delta: int) -> int:
        return -delta + 1 if self.eps > 0 else -delta - 1

    def defects(self) -> list[int]:
        """Source defects whose target family is non-empty."""
        return [
            delta
            for delta in family_of(self.first)
            if defect_constant(self.target_defect(delta)) <= self.second.n
        ]

    def __str__(self) -> str:
        return f"{self.first},{self.second}"


def parse_pair(text: str) -> DualPair:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"pair needs 'G1,G2': {text!r}")
    return DualPair(parse_group(parts[0]), parse_group(parts[1]))


def tau(pair: DualPair, delta: int) -> int:
    return pair.tau(delta)


def related_eps(s: Symbol, t: Symbol, eps: int) -> bool:
    """Membership of (s, t) in B^eps; the relation is symmetric in s and t."""
    u, v = upsilon(s), upsilon(t)
    lam, mu = u.top, u.bottom
    lam2, mu2 = v.top, v.bottom
    if eps > 0:
        return (
            t.defect == -s.defect + 1
            and interleaves(mu, lam2)
            and interleaves(mu2, lam)
        )
    return (
        t.defect == -s.defect - 1
        and interleaves(lam, mu2)
        and interleaves(lam2, mu)
    )


def related(s: Symbol, t: Symbol, pair: DualPair) -> bool:
    if not in_group(s, pair.first):
        raise ValueError(f"{s} is not a symbol of {pair.first}")
    if not in_group(t, pair.second):
        raise ValueError(f"{t} is not a symbol of {pair.second}")
    return related_eps(s, t, pair.eps)


def block_index(s: Symbol, t: Symbol, eps: int) -> int:
    """The k with t in Θ(s)_k."""
    u, v = upsilon(s), upsilon(t)
    if eps > 0:
        return u.top.norm - v.bottom.norm
    return u.bottom.norm - v.top.norm


@dataclass(frozen=True)
class ThetaBlock:
    k: int
    members: tuple[Symbol, ...]
    distinguished: Optional[Symbol] = None
    max_order_members: tuple[Symbol, ...] = field(default=())


@lru_cache(maxsize=None)
def theta_members(s: Symbol, pair: DualPair) -> tuple[Symbol, ...]:
    """Θ_{G'}(s), built constructively from the interleaving bounds."""
    if not in_group(s, pair.first):
        raise ValueError(f"{s} is not a symbol of {pair.first}")
    delta2 = pair.target_defect(s.defect)
    target = pair.second.n - defect_constant(delta2)
    if target < 0:
        return ()
    u = upsilon(s)
    # eps=+: new bottom shrinks from lam, new top grows from mu.
    shrink, grow = (u.top, u.bottom) if pair.eps > 0 else (u.bottom, u.top)
    out = []
    for small in horizontal_strips_removed(shrink):
        extra = target - small.norm - grow.norm
        for big in horizontal_strips_added(grow, extra):
            b = BiPartition(big, small) if pair.eps > 0 else BiPartition(small, big)
            out.append(upsilon_inv(b, delta2))
    return tuple(out)


def theta_members_bruteforce(s: Symbol, pair: DualPair) -> list[Symbol]:
    delta2 = pair.target_defect(s.defect)
    return [t for t in enumerate_family(pair.second.n, delta2) if related_eps(s, t, pair.eps)]


def block_order_key(t: Symbol, eps: int):
    """Display order inside a block: the row carried over from the source first."""
    v = upsilon(t)
    return (v.bottom.parts, v.top.parts) if eps > 0 else (v.top.parts, v.bottom.parts)


def theta_set(s: Symbol, pair: DualPair) -> list[ThetaBlock]:
    """Θ_{G'}(s) split into blocks k = 0 .. lambda_1 (eps=+) or mu_1 (eps=-)."""
    from .correspond import theta_k_map  # local import: correspond builds on this module

    members = theta_members(s, pair)
    eps = pair.eps
    u = upsilon(s)
    kmax = u.top.part(0) if eps > 0 else u.bottom.part(0)
    best = max((ord_closed(t) for t in members), default=None)
    tau_ = pair.tau(s.defect)
    blocks = []
    for k in range(kmax + 1):
        inblock = [t for t in members if block_index(s, t, eps) == k]
        dist = theta_k_map(s, pair, k) if tau_ >= 0 else None
        inblock.sort(key=lambda t: (t != dist, block_order_key(t, eps)))
        blocks.append(
            ThetaBlock(
                k=k,
                members=tuple(inblock),
                distinguished=dist,
                max_order_members=tuple(t for t in inblock if ord_closed(t) == best),
            )
        )
    return blocks
