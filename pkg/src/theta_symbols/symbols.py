"""Beta-sets, symbols, rank/defect and the bijection with bi-partitions."""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .partitions import BiPartition, Partition, enumerate_bipartitions, lex_cmp

Row = tuple[int, ...]


def _beta_set(entries: Iterable[int]) -> Row:
    row = tuple(int(x) for x in entries)
    for a, b in zip(row, row[1:]):
        if a <= b:
            raise ValueError(f"beta-set must be strictly decreasing: {row}")
    if row and row[-1] < 0:
        raise ValueError(f"beta-set has a negative entry: {row}")
    return row


def shift_rows(top: Row, bottom: Row) -> tuple[Row, Row]:
    """One step of the shift equivalence: add 1 everywhere, append 0 to both rows."""
    return tuple(a + 1 for a in top) + (0,), tuple(b + 1 for b in bottom) + (0,)


def reduce_rows(top: Sequence[int], bottom: Sequence[int]) -> tuple[Row, Row]:
    top, bottom = _beta_set(top), _beta_set(bottom)
    while top and bottom and top[-1] == 0 and bottom[-1] == 0:
        top = tuple(a - 1 for a in top[:-1])
        bottom = tuple(b - 1 for b in bottom[:-1])
    return top, bottom


def rows_rank(top: Sequence[int], bottom: Sequence[int]) -> int:
    m = len(top) + len(bottom)
    # floor(((m-1)/2)^2) == (m-1)^2 // 4
    return sum(top) + sum(bottom) - (m - 1) ** 2 // 4


@dataclass(frozen=True)
class Symbol:
    """A reduced symbol: two beta-sets with 0 not in both rows."""

    top: Row
    bottom: Row

    def __init__(self, top: Iterable[int] = (), bottom: Iterable[int] = ()):
        t, b = reduce_rows(tuple(top), tuple(bottom))
        object.__setattr__(self, "top", t)
        object.__setattr__(self, "bottom", b)

    @property
    def rank(self) -> int:
        return rows_rank(self.top, self.bottom)

    @property
    def defect(self) -> int:
        return len(self.top) - len(self.bottom)

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(sorted(self.top + self.bottom, reverse=True))

    def transpose(self) -> "Symbol":
        return Symbol(self.bottom, self.top)

    def __str__(self) -> str:
        return format_symbol(self)

    def __repr__(self) -> str:
        return f"Symbol({format_symbol(self)!r})"


def rank_defect(s: Symbol) -> tuple[int, int]:
    return s.rank, s.defect


def reduce(top: Sequence[int] | Symbol, bottom: Sequence[int] = ()) -> Symbol:
    if isinstance(top, Symbol):
        return top
    return Symbol(top, bottom)


def transpose(s: Symbol) -> Symbol:
    return s.transpose()


def defect_constant(delta: int) -> int:
    """Norm gap between rank and Upsilon-image: floor((delta/2)^2)."""
    return delta * delta // 4


def _row_partition(row: Row) -> Partition:
    m = len(row)
    return Partition(a - (m - 1 - i) for i, a in enumerate(row))


@lru_cache(maxsize=None)
def upsilon(s: Symbol) -> BiPartition:
    """Subtract staircases from both rows."""
    if not isinstance(s, Symbol):
        raise TypeError("upsilon expects a reduced Symbol")
    return BiPartition(_row_partition(s.top), _row_partition(s.bottom))


def upsilon_rows(top: Row, bottom: Row) -> BiPartition:
    """Upsilon of a possibly non-reduced representative; rejects non-reduced input."""
    if top and bottom and top[-1] == 0 and bottom[-1] == 0:
        raise ValueError("upsilon is only defined on reduced symbols")
    return upsilon(Symbol(top, bottom))


@lru_cache(maxsize=None)
def upsilon_inv(b: BiPartition, delta: int) -> Symbol:
    lam, mu = b.top.parts, b.bottom.parts
    m1 = max(len(lam), len(mu) + delta)
    m2 = m1 - delta
    top = tuple(x + m1 - 1 - i for i, x in enumerate(lam + (0,) * (m1 - len(lam))))
    bottom = tuple(x + m2 - 1 - i for i, x in enumerate(mu + (0,) * (m2 - len(mu))))
    return Symbol(top, bottom)


def with_lengths(s: Symbol, m1: int, m2: int) -> tuple[Row, Row]:
    """Representative of s whose rows have exactly m1 and m2 entries."""
    if m1 - m2 != s.defect:
        raise ValueError("row lengths must differ by the defect")
    top, bottom = s.top, s.bottom
    if m1 < len(top):
        raise ValueError("requested representative is shorter than the reduced one")
    for _ in range(m1 - len(top)):
        top, bottom = shift_rows(top, bottom)
    return top, bottom


@lru_cache(maxsize=None)
def enumerate_family(n: int, delta: int) -> tuple[Symbol, ...]:
    """All reduced symbols of rank n and defect delta (in Upsilon-preimage order)."""
    size = n - defect_constant(delta)
    if size < 0:
        return ()
    return tuple(upsilon_inv(b, delta) for b in enumerate_bipartitions(size))


# -- classical groups -------------------------------------------------------

KINDS = ("Sp", "O+", "O-")
_RESIDUE = {"Sp": 1, "O+": 0, "O-": 2}


@dataclass(frozen=True)
class GroupTag:
    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("half rank must be non-negative")

    @property
    def symplectic(self) -> bool:
        return self.kind == "Sp"

    @property
    def residue(self) -> int:
        return _RESIDUE[self.kind]

    def __str__(self) -> str:
        return f"{self.kind}{2 * self.n}"


_GROUP_RE = re.compile(r"^\s*(Sp|O\+|O-)(\d+)\s*$")


def parse_group(text: str) -> GroupTag:
    m = _GROUP_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse group tag {text!r}")
    size = int(m.group(2))
    if size % 2:
        raise ValueError(f"only even matrix sizes are supported: {text!r}")
    return GroupTag(m.group(1), size // 2)


def group_kind_of_defect(delta: int) -> str | None:
    r = delta % 4
    return {1: "Sp", 0: "O+", 2: "O-"}.get(r)


def group_of(s: Symbol) -> GroupTag:
    kind = group_kind_of_defect(s.defect)
    if kind is None:
        raise ValueError(f"defect {s.defect} of {s} is not admissible for Sp or even O")
    return GroupTag(kind, s.rank)


def family_of(g: GroupTag) -> list[int]:
    """Defects delta with S_{n,delta} contributing to S_G, in decreasing order."""
    out = []
    bound = 2 * g.n + 2
    for delta in range(bound, -bound - 1, -1):
        if delta % 4 == g.residue and defect_constant(delta) <= g.n:
            out.append(delta)
    return out


def symbols_of(g: GroupTag) -> list[Symbol]:
    return [s for delta in family_of(g) for s in enumerate_family(g.n, delta)]


def in_group(s: Symbol, g: GroupTag) -> bool:
    return s.rank == g.n and s.defect % 4 == g.residue


# -- the ε-linear order -----------------------------------------------------

def linear_key(s: Symbol, eps: int):
    """Sort key realising the ε-linear order on a family S_{n,delta}."""
    u = upsilon(s)
    first, second = (u.top, u.bottom) if eps > 0 else (u.bottom, u.top)
    return (first.norm, first.parts, second.parts)


def linear_cmp(s: Symbol, t: Symbol, eps: int) -> int:
    if (s.rank, s.defect) != (t.rank, t.defect):
        raise ValueError(f"{s} and {t} lie in different families")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    us, ut = upsilon(s), upsilon(t)
    if eps < 0:
        us, ut = us.transpose(), ut.transpose()
    if us.top.norm != ut.top.norm:
        return -1 if us.top.norm < ut.top.norm else 1
    return lex_cmp(us.top, ut.top) or lex_cmp(us.bottom, ut.bottom)


def sorted_family(n: int, delta: int, eps: int) -> list[Symbol]:
    return sorted(enumerate_family(n, delta), key=lambda s: linear_key(s, eps))


# -- special symbols --------------------------------------------------------

def special_symbol(entries: Sequence[int]) -> Symbol:
    """The special symbol with the given entries (interlaced, defect 0 or 1)."""
    z = sorted(entries, reverse=True)
    return Symbol(z[0::2], z[1::2])


def same_entry_symbols(s: Symbol) -> list[Symbol]:
    """Every reduced symbol whose entry multiset equals that of s."""
    z = s.entries
    doubled = tuple(v for v in sorted(set(z), reverse=True) if z.count(v) == 2)
    single = tuple(v for v in sorted(set(z), reverse=True) if z.count(v) == 1)
    out = []
    for mask in product((True, False), repeat=len(single)):
        top = sorted(doubled + tuple(v for v, up in zip(single, mask) if up), reverse=True)
        bottom = sorted(doubled + tuple(v for v, up in zip(single, mask) if not up), reverse=True)
        out.append(Symbol(top, bottom))
    return out


def special_closure(s: Symbol) -> tuple[Symbol, list[Symbol]]:
    z = special_symbol(s.entries)
    fam = [t for t in same_entry_symbols(s) if t.defect % 4 == z.defect % 4]
    fam.sort(key=lambda t: (-t.defect, t.top, t.bottom))
    return z, fam


# -- text form --------------------------------------------------------------

def _format_row(row: Row) -> str:
    return ",".join(str(x) for x in row) if row else "-"


def _parse_row(text: str) -> Row:
    text = text.strip()
    if text in ("-", ""):
        return ()
    return tuple(int(x) for x in text.split(","))


def format_symbol(s: Symbol) -> str:
    return f"{_format_row(s.top)};{_format_row(s.bottom)}"


def parse_symbol(text: str) -> Symbol:
    top, sep, bottom = text.partition(";")
    if not sep:
        raise ValueError(f"symbol needs 'top;bottom': {text!r}")
    return Symbol(_parse_row(top), _parse_row(bottom))
