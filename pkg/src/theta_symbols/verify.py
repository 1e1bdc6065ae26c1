"""Exhaustive property sweeps, one per lemma ID, sharded over worker processes.

Each property splits into independent units (a dual pair, or a rank) and a
checker that returns ``(checked, violations)`` for one unit.  Units run in a
process pool because the checks are pure-Python CPU work.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Optional

from .correspond import (
    CorrespondenceError,
    Report,
    dual_pairs,
    find_k0,
    first_occurrence,
    lemma_preimage,
    overline_theta,
    overline_theta_family,
    semi_persistent_check,
    theta_k_map,
    underline_theta,
)
from .degree import entry_move_ord_delta, ord_closed, ord_entries, ord_oracle
from .partitions import dual, interleaves, partitions_of, precq
from .symbols import (
    KINDS,
    GroupTag,
    Symbol,
    defect_constant,
    enumerate_family,
    parse_symbol,
    same_entry_symbols,
    special_closure,
    special_symbol,
    symbols_of,
    upsilon,
)
from .theta import (
    DualPair,
    block_index,
    parse_pair,
    related,
    theta_members,
    theta_members_bruteforce,
    theta_set,
)

Result = tuple[int, list[str]]


@dataclass(frozen=True)
class Property:
    pid: str
    summary: str
    units: Callable[[int], list]
    check: Callable[..., Result]


# -- unit generators --------------------------------------------------------

def _pair_units(max_rank: int) -> list[str]:
    return [str(p) for p in dual_pairs(max_rank, 2 * max_rank)]


def _family_units(max_rank: int) -> list[tuple[str, int]]:
    """(pair, delta) with tau >= 0, i.e. the families on which overline-theta is built."""
    out = []
    for p in dual_pairs(max_rank, 2 * max_rank):
        for delta in p.defects():
            if p.tau(delta) >= 0:
                out.append((str(p), delta))
    return out


def _rank_units(max_rank: int) -> list[int]:
    return list(range(max_rank + 1))


def _all_defects(n: int) -> list[int]:
    bound = 2 * n + 2
    return [d for d in range(-bound, bound + 1) if defect_constant(d) <= n]


def _symbols_of_rank(n: int) -> list[Symbol]:
    return [s for d in _all_defects(n) for s in enumerate_family(n, d)]


def _tau_nonneg(pair: DualPair) -> Iterable[Symbol]:
    for delta in pair.defects():
        if pair.tau(delta) >= 0:
            yield from enumerate_family(pair.first.n, delta)


def _prefix_dominates(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    """Partial sums of x are >= those of y (zero padded)."""
    length = max(len(x), len(y))
    x = x + (0,) * (length - len(x))
    y = y + (0,) * (length - len(y))
    sx = sy = 0
    for a, b in zip(x, y):
        sx, sy = sx + a, sy + b
        if sx < sy:
            return False
    return True


# -- checkers: partitions, symbols, orders -----------------------------------

def check_l0309(n: int) -> Result:
    bad, count = [], 0
    pool = [p for k in range(2 * n + 1) for p in partitions_of(k)]
    for lam in partitions_of(n):
        for mu in pool:
            count += 1
            if interleaves(lam, mu) != precq(dual(lam), dual(mu)):
                bad.append(f"lam={lam} mu={mu}")
    return count, bad


def _beta_sets(length: int, top: int) -> list[tuple[int, ...]]:
    return [tuple(sorted(c, reverse=True)) for c in combinations(range(top + 1), length)]


def check_l0203(n: int) -> Result:
    """Entry-interlacing form of the Upsilon-row relation, beta-sets of length n with entries <= n+2."""
    bad, count = [], 0
    for A in _beta_sets(n, n + 2):
        ua = tuple(a - (n - 1 - i) for i, a in enumerate(A))
        for m2 in (n, n + 1):
            for B in _beta_sets(m2, n + 3):
                ub = tuple(b - (m2 - 1 - i) for i, b in enumerate(B))
                rel = interleaves(ua, ub)
                if m2 == n:
                    expect = all(B[i] >= A[i] for i in range(n)) and all(
                        A[i] > B[i + 1] for i in range(n - 1)
                    )
                else:
                    expect = all(B[i] > A[i] >= B[i + 1] for i in range(n))
                count += 1
                if rel != expect:
                    bad.append(f"A={A} B={B}: relation {rel}, entries {expect}")
    return count, bad


def _rows_below(row: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    """Beta-sets r of length len(row)-1 with r_i < row_i."""
    if len(row) <= 1:
        yield ()
        return

    def rec(i: int, acc: tuple[int, ...]):
        if i == len(row) - 1:
            yield acc
            return
        hi = row[i] - 1 if not acc else min(row[i] - 1, acc[-1] - 1)
        for v in range(hi, -1, -1):
            yield from rec(i + 1, acc + (v,))

    yield from rec(0, ())


def check_l0210(n: int) -> Result:
    bad, count = [], 0
    for s in _symbols_of_rank(n):
        if not s.top or not s.bottom:
            continue
        for top in _rows_below(s.top):
            for bottom in _rows_below(s.bottom):
                if top and bottom and top[-1] == 0 and bottom[-1] == 0:
                    continue  # the lemma is about reduced symbols
                count += 1
                t = Symbol(top, bottom)
                if not s.rank > t.rank:
                    bad.append(f"rk({s}) <= rk({t})")
    return count, bad


def check_l0213(n: int) -> Result:
    bad, count = [], 0
    for s in _symbols_of_rank(n):
        count += 1
        if ord_closed(s) != ord_oracle(s).total:
            bad.append(f"{s}: closed {ord_closed(s)} oracle {ord_oracle(s).total}")
    return count, bad


def check_l0215(n: int) -> Result:
    bad, count = [], 0
    for s in _symbols_of_rank(n):
        z = list(s.entries)
        m = len(z)
        for k in range(1, m + 1):
            for l in range(k + 1, m + 1):
                if k > 1 and z[k - 2] < z[k - 1] + 1:
                    continue
                if l < m and z[l - 1] - 1 < z[l]:
                    continue
                moved = list(z)
                moved[k - 1] += 1
                moved[l - 1] -= 1
                if moved[l - 1] < 0:
                    continue
                count += 1
                delta = entry_move_ord_delta(z, k, l)
                direct = ord_entries(moved) - ord_entries(z)
                if delta != direct or delta >= 0:
                    bad.append(f"{s} k={k} l={l}: formula {delta}, direct {direct}")
    return count, bad


def check_l0216(n: int) -> Result:
    bad, count = [], 0
    for s in _symbols_of_rank(n):
        z, fam = special_closure(s)
        count += 1
        if s not in same_entry_symbols(z):
            bad.append(f"{s} not in the same-entry set of {z}")
        for t in fam:
            if ord_closed(t) != ord_closed(z):
                bad.append(f"ord({t}) != ord({z})")
    return count, bad


def _specials(n: int) -> list[Symbol]:
    return [s for d in (0, 1) for s in enumerate_family(n, d) if special_symbol(s.entries) == s]


def check_l0218(n: int) -> Result:
    bad, count = [], 0
    sp = _specials(n)
    for z, w in product(sp, sp):
        if len(z.entries) != len(w.entries) or not _prefix_dominates(z.entries, w.entries):
            continue
        count += 1
        oz, ow = ord_closed(z), ord_closed(w)
        if oz > ow or ((oz == ow) != (z.entries == w.entries)):
            bad.append(f"Z={z} Z'={w}: ord {oz} vs {ow}")
    return count, bad


def check_l0219(n: int) -> Result:
    bad, count = [], 0
    for d in _all_defects(n):
        fam = enumerate_family(n, d)
        for s, t in product(fam, fam):
            u, v = upsilon(s), upsilon(t)
            for fixed_equal, dom in (
                (u.bottom == v.bottom, _prefix_dominates(u.top.parts, v.top.parts)),
                (u.top == v.top, _prefix_dominates(u.bottom.parts, v.bottom.parts)),
            ):
                if not (fixed_equal and dom):
                    continue
                count += 1
                os_, ot = ord_closed(s), ord_closed(t)
                if os_ > ot or ((os_ == ot) != (s == t)):
                    bad.append(f"{s} vs {t}: ord {os_} vs {ot}")
    return count, bad


# -- checkers: the theta relation --------------------------------------------

def check_symmetry(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    rev = pair.reversed()
    bad, count = [], 0
    targets = symbols_of(pair.second)
    for s in symbols_of(pair.first):
        members = set(theta_members(s, pair))
        if members != set(theta_members_bruteforce(s, pair)):
            bad.append(f"{s} in {pair}: constructive and filtered Θ-sets differ")
        for t in targets:
            count += 1
            fwd = related(s, t, pair)
            if fwd != related(t, s, rev) or fwd != (t in members):
                bad.append(f"{s} ~ {t} in {pair}: asymmetric")
            if fwd and upsilon(t).norm != upsilon(s).norm + pair.tau(s.defect):
                bad.append(f"{s} ~ {t}: norm gap differs from tau")
    return count, bad


def check_l0413(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    for s in _tau_nonneg(pair):
        for block in theta_set(s, pair):
            count += 1
            lead = theta_k_map(s, pair, block.k)
            if lead not in block.members:
                bad.append(f"theta_{block.k}({s}) = {lead} not in block {block.k}")
                continue
            top = ord_closed(lead)
            others = [t for t in block.members if t != lead and ord_closed(t) >= top]
            if others:
                bad.append(f"theta_{block.k}({s}) not the unique ord-maximum: {others}")
    return count, bad


def _strictly(seq, up: bool) -> bool:
    return all((a < b) if up else (a > b) for a, b in zip(seq, seq[1:]))


def check_l0414(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    for s in _tau_nonneg(pair):
        count += 1
        d = find_k0(s, pair)
        o = d.orders
        top = max(o)
        arg = [k for k, x in enumerate(o) if x == top]
        if len(arg) > 2 or arg != list(range(arg[0], arg[0] + len(arg))):
            bad.append(f"{s}: plateau {arg}")
        if not (_strictly(o[: arg[0] + 1], True) and _strictly(o[arg[-1]:], False)):
            bad.append(f"{s}: orders {o} not unimodal")
        if (d.k0, d.tie) != (d.k0_from_sequences, d.tie_from_sequences):
            bad.append(f"{s}: argmax ({d.k0},{d.tie}) vs sequences ({d.k0_from_sequences},{d.tie_from_sequences})")
        inc, dec = (d.alpha, d.beta) if pair.eps > 0 else (d.beta, d.alpha)
        if not (_strictly(inc, True) and _strictly(dec, False)):
            bad.append(f"{s}: alpha/beta not monotone {d.alpha} {d.beta}")
    return count, bad


def check_r0424(pair_text: str) -> Result:
    """Remark on theta_0 maximality when tau clears the carried-over row.

    The falling entry at k=0 is the beta-set entry of the last copy of the
    largest part, which equals the first row entry only when that part is
    not repeated.
    """
    pair = parse_pair(pair_text)
    bad, count = [], 0
    for s in _tau_nonneg(pair):
        u = upsilon(s)
        tau_ = pair.tau(s.defect)
        carried = u.bottom.part(0) if pair.eps > 0 else u.top.part(0)
        if tau_ < carried:
            continue
        d = find_k0(s, pair)
        if pair.eps > 0:
            rise0, fall0 = d.alpha[0], d.beta[0]
            if rise0 != tau_ + len(s.bottom):
                bad.append(f"{s}: alpha_0 = {rise0}")
        else:
            rise0, fall0 = d.beta[0], d.alpha[0]
            if rise0 != tau_ + len(s.top):
                bad.append(f"{s}: beta_0 = {rise0}")
        count += 1
        if rise0 >= fall0 and (d.k0, d.tie) != (0, False):
            bad.append(f"{s}: expected unique maximum at k=0, got {d.k0},{d.tie}")
        if rise0 == fall0 - 1 and (d.k0, d.tie) != (0, True):
            bad.append(f"{s}: expected tie at k=0,1, got {d.k0},{d.tie}")
    return count, bad


def check_l0415(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    for delta in pair.defects():
        if pair.tau(delta) != 0:
            continue
        table = overline_theta_family(pair, delta)
        for row in table.rows:
            count += 1
            zero = [t for t in theta_members(row.source, pair) if block_index(row.source, t, pair.eps) == 0]
            if zero != [row.underline]:
                bad.append(f"{row.source}: Θ_0 = {zero}")
            if row.theta_flat_size != 1 or row.overline != row.underline:
                bad.append(f"{row.source}: reduced set has {row.theta_flat_size} elements")
    return count, bad


def check_l0503(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    for delta in pair.defects():
        if pair.tau(delta) != 0:
            continue
        for row in overline_theta_family(pair, delta).rows:
            count += 1
            a, b = row.source.top, row.source.bottom
            if pair.eps > 0:
                expect = Symbol([x + 1 for x in b] + [0], a)
            else:
                expect = Symbol(b, [x + 1 for x in a] + [0])
            if not (row.overline == row.underline == expect):
                bad.append(f"{row.source}: {row.underline}/{row.overline} vs {expect}")
    return count, bad


def check_l0416(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    if not pair.stable_range:
        return 0, []
    for delta in pair.defects():
        for s in enumerate_family(pair.first.n, delta):
            count += 1
            if pair.tau(delta) < 0:
                bad.append(f"{s}: tau < 0 in stable range")
                continue
            members = theta_members(s, pair)
            top = max(ord_closed(t) for t in members)
            tops = [t for t in members if ord_closed(t) == top]
            if tops != [theta_k_map(s, pair, 0)]:
                bad.append(f"{s} in {pair}: ord-maximal set {tops}")
    return count, bad


def check_l0504(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    if not pair.stable_range:
        return 0, []
    for delta in pair.defects():
        for s in enumerate_family(pair.first.n, delta):
            count += 1
            if overline_theta(s, pair) != underline_theta(s, pair):
                bad.append(f"{s} in {pair}: overline != underline")
    return count, bad


def check_l0418(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    for s in _tau_nonneg(pair):
        for block in theta_set(s, pair):
            lead = upsilon(block.distinguished)
            for t in block.members:
                count += 1
                v = upsilon(t)
                if not (
                    _prefix_dominates(v.top.parts, lead.top.parts)
                    and _prefix_dominates(v.bottom.parts, lead.bottom.parts)
                ):
                    bad.append(f"{t} does not dominate theta_{block.k}({s}) = {block.distinguished}")
    return count, bad


def check_l0423(pair_text: str, delta: int) -> Result:
    pair = parse_pair(pair_text)
    try:
        table = overline_theta_family(pair, delta)
    except CorrespondenceError as exc:
        return 1, [str(exc)]
    return len(table.rows), []


def check_l0430(pair_text: str, delta: int) -> Result:
    table = overline_theta_family(parse_pair(pair_text), delta)
    rows = [(r.source, r.underline, r.overline) for r in table.rows]
    return len(rows), _injectivity_violations(rows, parse_pair(pair_text))


def _injectivity_violations(rows, pair: DualPair) -> list[str]:
    bad = []
    for col, name in ((1, "underline"), (2, "overline")):
        seen: dict = {}
        for r in rows:
            t = r[col]
            if t is None:
                continue
            if t in seen:
                bad.append(f"{name} not injective: {seen[t]} and {r[0]} both map to {t}")
            seen[t] = r[0]
            if t not in theta_members(r[0], pair):
                bad.append(f"{name}({r[0]}) = {t} lies outside the Θ-set")
    return bad


def check_l0432(pair_text: str, delta: int) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    for row in overline_theta_family(pair, delta).rows:
        ks = {block_index(row.source, t, pair.eps) for t in row.candidates}
        count += 1
        if block_index(row.source, row.overline, pair.eps) != min(ks):
            bad.append(f"{row.source}: selected {row.overline} from a larger block than {min(ks)}")
    return count, bad


def check_l0302(pair_text: str) -> Result:
    pair = parse_pair(pair_text)
    bad, count = [], 0
    if not pair.stable_range:
        return 0, []
    series = pair.first.kind
    for delta in pair.defects():
        for s in enumerate_family(pair.first.n, delta):
            zero = underline_theta(s, pair)
            for t in theta_members(s, pair):
                if t == zero:
                    continue
                count += 1
                pre = lemma_preimage(t, series)
                if pre.rank >= s.rank or first_occurrence(t, series, "theta") >= s.rank:
                    bad.append(f"{t} in Θ({s}): first occurrence not below {s.rank}")
                elif underline_theta(pre, DualPair(GroupTag(series, pre.rank), pair.second)) != t:
                    bad.append(f"{t}: preimage {pre} does not map onto it")
    return count, bad


def check_l0314(n: int) -> Result:
    bad, count = [], 0
    for kind in KINDS:
        for t in symbols_of(GroupTag(kind, n)):
            for series in (("O+", "O-") if kind == "Sp" else ("Sp",)):
                count += 1
                got = {m: first_occurrence(t, series, m) for m in ("theta", "underline", "underline-search")}
                if len(set(got.values())) != 1:
                    bad.append(f"{t} in the {series} series: {got}")
    return count, bad


def check_semipersist(n: int) -> Result:
    """Both modes, pairs whose first member has half rank n."""
    bad, count = [], 0
    for mode in ("underline", "overline"):
        lookup = underline_theta if mode == "underline" else overline_theta
        for pair in dual_pairs(n, 2 * n):
            if pair.first.n != n:
                continue
            for s in _tau_nonneg(pair):
                count += 1
                if lookup(s, pair) is None:
                    bad.append(f"{mode}: {s} undefined in {pair}")
    return count, bad


# -- registry ---------------------------------------------------------------

PROPERTIES: dict[str, Property] = {
    p.pid: p
    for p in [
        Property("L0203", "Upsilon-row relation equals entry interlacing", _rank_units, check_l0203),
        Property("L0210", "row-wise larger symbol has larger rank", _rank_units, check_l0210),
        Property("L0213-oracle", "closed-form order equals the factor-by-factor degree", _rank_units, check_l0213),
        Property("L0215", "moving two entries apart lowers the order by the stated amount", _rank_units, check_l0215),
        Property("L0216", "order is constant on symbols with the same entries", _rank_units, check_l0216),
        Property("L0218", "prefix-sum domination of special symbols orders ord", _rank_units, check_l0218),
        Property("L0219", "prefix-sum domination of one Upsilon row orders ord", _rank_units, check_l0219),
        Property("L0302", "non-theta_0 members occur earlier in stable range", _pair_units, check_l0302),
        Property("L0309", "interleaving equals precq of the duals", _rank_units, check_l0309),
        Property("L0314", "first occurrence of Θ equals that of underline-theta", _rank_units, check_l0314),
        Property("L0413", "theta_k is the unique ord-maximum of its block", _pair_units, check_l0413),
        Property("L0414", "ord(theta_k) is unimodal with plateau <= 2", _pair_units, check_l0414),
        Property("L0415", "tau = 0 leaves exactly theta_0 in the reduced set", _pair_units, check_l0415),
        Property("L0416", "theta_0 is the unique ord-maximum in stable range", _pair_units, check_l0416),
        Property("L0418", "block members dominate theta_k row-wise", _pair_units, check_l0418),
        Property("L0423", "the reduced Θ-set is never empty", _family_units, check_l0423),
        Property("L0430", "underline and overline are injective", _family_units, check_l0430),
        Property("L0432", "overline picks from the smallest block among maxima", _family_units, check_l0432),
        Property("L0503", "tau = 0 closed form for overline", _pair_units, check_l0503),
        Property("L0504", "overline equals underline in stable range", _pair_units, check_l0504),
        Property("R0424", "theta_0 maximality test when tau clears the carried row", _pair_units, check_r0424),
        Property("SEMIPERSIST", "both maps are defined whenever tau >= 0", _rank_units, check_semipersist),
        Property("SYMMETRY", "the relation is symmetric and Θ-sets agree with the filter", _pair_units, check_symmetry),
    ]
}


def _call(pid: str, unit) -> Result:
    prop = PROPERTIES[pid]
    return prop.check(*unit) if isinstance(unit, tuple) else prop.check(unit)


def worker_count() -> int:
    env = os.environ.get("THETA_SYMBOLS_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def run_property(pid: str, max_rank: int, workers: Optional[int] = None) -> Report:
    if pid not in PROPERTIES:
        raise KeyError(f"unknown property {pid!r}; known: {', '.join(PROPERTIES)}")
    units = PROPERTIES[pid].units(max_rank)
    workers = worker_count() if workers is None else workers
    rep = Report(pid)
    if workers <= 1 or len(units) < 2:
        results = [_call(pid, u) for u in units]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            results = list(ex.map(_call, [pid] * len(units), units, chunksize=4))
    for checked, bad in results:
        rep.checked += checked
        rep.violations.extend(bad)
    return rep


def verify_table_file(path: str) -> Report:
    """Injectivity and agreement of a stored correspondence table with a fresh build."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    pair = parse_pair(data["pair"])
    rep = Report(f"L0430 on {path}")
    for fam in data["families"]:
        rows = [
            (
                parse_symbol(r["source"]),
                None if r["underline"] is None else parse_symbol(r["underline"]),
                None if r["overline"] is None else parse_symbol(r["overline"]),
            )
            for r in fam["rows"]
        ]
        rep.checked += len(rows)
        if pair.tau(fam["delta"]) >= 0:
            rep.violations.extend(_injectivity_violations(rows, pair))
        for src, under, over in rows:
            if under != underline_theta(src, pair):
                rep.violations.append(f"stored underline({src}) = {under} differs from the definition")
            if over != overline_theta(src, pair):
                rep.violations.append(f"stored overline({src}) = {over} differs from the definition")
    return rep


def semipersist_negative_control(max_rank: int) -> Report:
    """A lookup that forgets one assignment must be caught."""
    dropped: dict = {}

    def lookup(s, pair):
        out = overline_theta(s, pair)
        if not dropped:
            dropped[(s, pair)] = out
        return None if (s, pair) in dropped else out

    return semi_persistent_check("overline", max_rank, lookup=lookup)
