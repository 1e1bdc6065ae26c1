"""Partitions and bi-partitions.

Partitions are stored as tuples of positive integers in weakly decreasing
order.  Trailing zeros are accepted on input and stripped, so two partitions
that differ only by zero parts compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable, Iterator, Sequence


def _canonical(parts: Iterable[int]) -> tuple[int, ...]:
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts are not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


@dataclass(frozen=True, order=False)
class Partition(Sequence[int]):
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        object.__setattr__(self, "parts", _canonical(parts))

    @property
    def norm(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def part(self, i: int) -> int:
        """0-based part access that pads with zeros past the end."""
        return self.parts[i] if i < len(self.parts) else 0

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError("cannot pad to a shorter length")
        return self.parts + (0,) * (length - len(self.parts))

    def __lt__(self, other: "Partition") -> bool:
        return lex_cmp(self, other) < 0

    def __le__(self, other: "Partition") -> bool:
        return lex_cmp(self, other) <= 0

    def __gt__(self, other: "Partition") -> bool:
        return lex_cmp(self, other) > 0

    def __ge__(self, other: "Partition") -> bool:
        return lex_cmp(self, other) >= 0

    def __str__(self) -> str:
        return format_partition(self)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


@dataclass(frozen=True)
class BiPartition:
    top: Partition
    bottom: Partition

    def __init__(self, top: Iterable[int] = (), bottom: Iterable[int] = ()):
        object.__setattr__(self, "top", top if isinstance(top, Partition) else Partition(top))
        object.__setattr__(
            self, "bottom", bottom if isinstance(bottom, Partition) else Partition(bottom)
        )

    @property
    def norm(self) -> int:
        return self.top.norm + self.bottom.norm

    def transpose(self) -> "BiPartition":
        return BiPartition(self.bottom, self.top)

    def __str__(self) -> str:
        return format_bipartition(self)

    def __repr__(self) -> str:
        return f"BiPartition({list(self.top)}, {list(self.bottom)})"


def dual(p: Partition | Sequence[int]) -> Partition:
    """Conjugate partition: column lengths of the Young diagram."""
    parts = Partition(p).parts
    if not parts:
        return Partition()
    return Partition(sum(1 for x in parts if x >= j) for j in range(1, parts[0] + 1))


def lex_cmp(p: Sequence[int], q: Sequence[int]) -> int:
    """Lexicographic comparison after padding the shorter with zeros.

    Returns -1, 0 or 1.
    """
    for a, b in zip_longest(p, q, fillvalue=0):
        if a != b:
            return -1 if a < b else 1
    return 0


def union(p: Sequence[int], q: Sequence[int]) -> Partition:
    return Partition(sorted(tuple(p) + tuple(q), reverse=True))


def bipartition_union(b: BiPartition, c: BiPartition) -> BiPartition:
    return BiPartition(union(b.top, c.top), union(b.bottom, c.bottom))


def precq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam ≼ mu``: mu_i - 1 <= lam_i <= mu_i for every i."""
    return all(m - 1 <= l <= m for l, m in zip_longest(lam, mu, fillvalue=0))


def interleaves(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True iff mu_{i+1} <= lam_i <= mu_i for every i.

    Equivalently ``dual(lam) ≼ dual(mu)``: mu is obtained from lam by adding
    a horizontal strip.
    """
    lam, mu = tuple(lam), tuple(mu)
    length = max(len(lam), len(mu)) + 1
    lam = lam + (0,) * (length - len(lam))
    mu = mu + (0,) * (length - len(mu))
    return all(mu[i + 1] <= lam[i] <= mu[i] for i in range(length - 1))


@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n, in decreasing lexicographic order."""
    if n < 0:
        return ()
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        return (Partition(),)
    out = []
    for head in range(max_part, 0, -1):
        for tail in partitions_of(n - head, head):
            out.append(Partition((head,) + tail.parts))
    return tuple(out)


def partition_count(n: int) -> int:
    return len(partitions_of(n))


@lru_cache(maxsize=None)
def enumerate_bipartitions(n: int) -> tuple[BiPartition, ...]:
    if n < 0:
        return ()
    return tuple(
        BiPartition(top, bottom)
        for k in range(n + 1)
        for top in partitions_of(k)
        for bottom in partitions_of(n - k)
    )


def horizontal_strips_removed(lam: Sequence[int]) -> Iterator[Partition]:
    """All nu with interleaves(nu, lam): lam minus a horizontal strip."""
    lam = tuple(lam)

    def rec(i: int, acc: tuple[int, ...]) -> Iterator[Partition]:
        if i == len(lam):
            yield Partition(acc)
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for v in range(lam[i], lo - 1, -1):
            yield from rec(i + 1, acc + (v,))

    yield from rec(0, ())


def horizontal_strips_added(mu: Sequence[int], size: int) -> Iterator[Partition]:
    """All nu with interleaves(mu, nu) and |nu| = |mu| + size."""
    mu = tuple(mu)
    if size < 0:
        return
    # nu_1 >= mu_1 free; nu_{i+1} in [mu_{i+1}, mu_i] for i >= 1, nu has at most len(mu)+1 parts
    ext = mu + (0,)

    def rec(i: int, left: int, acc: tuple[int, ...]) -> Iterator[Partition]:
        if i == len(ext):
            if left == 0:
                yield Partition(acc)
            return
        base = ext[i]
        cap = left if i == 0 else min(left, ext[i - 1] - base)
        for extra in range(cap, -1, -1):
            yield from rec(i + 1, left - extra, acc + (base + extra,))

    yield from rec(0, size, ())


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("-", ""):
        return Partition()
    return Partition(int(x) for x in text.split(","))


def format_partition(p: Sequence[int]) -> str:
    return ",".join(str(x) for x in p) if len(p) else "-"


def parse_bipartition(text: str) -> BiPartition:
    top, sep, bottom = text.partition("|")
    if not sep:
        raise ValueError(f"bi-partition needs 'top|bottom': {text!r}")
    return BiPartition(parse_partition(top), parse_partition(bottom))


def format_bipartition(b: BiPartition) -> str:
    return f"{format_partition(b.top)}|{format_partition(b.bottom)}"
