"""Plain / JSON / CSV renderings of families, Θ-sets and correspondence tables.

Markers in plain output (ASCII stand-ins for the usual typography):
    !max   the member has maximal order in the whole Θ-set
    *sel   the member is the overline-theta image of the row's source
    ~cut   the member was consumed by an earlier source
"""

from __future__ import annotations

import csv
import io
import json
from typing import Any, Optional

from .correspond import find_k0, overline_theta, overline_theta_family, underline_theta
from .degree import ord_closed
from .symbols import GroupTag, Symbol, family_of, format_symbol, sorted_family, upsilon
from .theta import DualPair, theta_set


def _sym(s: Optional[Symbol]) -> Optional[str]:
    return None if s is None else format_symbol(s)


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _dump_csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(["" if x is None else x for x in r])
    return buf.getvalue()


# -- enum -----------------------------------------------------------------

def enum_data(group: GroupTag, delta: int, eps: int) -> dict:
    return {
        "group": str(group),
        "delta": delta,
        "eps": "+" if eps > 0 else "-",
        "symbols": [
            {"symbol": format_symbol(s), "upsilon": str(upsilon(s)), "ord": ord_closed(s)}
            for s in sorted_family(group.n, delta, eps)
        ],
    }


def render_enum(data: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(data)
    if fmt == "csv":
        rows = [[i, r["symbol"], r["upsilon"], r["ord"]] for i, r in enumerate(data["symbols"])]
        return _dump_csv(["index", "symbol", "upsilon", "ord"], rows)
    return "".join(f"{r['symbol']}\n" for r in data["symbols"])


# -- theta-set --------------------------------------------------------------

def theta_set_data(s: Symbol, pair: DualPair) -> dict:
    tau_ = pair.tau(s.defect)
    blocks = theta_set(s, pair)
    members = [t for b in blocks for t in b.members]
    best = max((ord_closed(t) for t in members), default=None)
    sel = overline_theta(s, pair)
    used: set = set()
    if tau_ >= 0 and members:
        used = overline_theta_family(pair, s.defect).consumed_before(s)
    out = {
        "pair": str(pair),
        "symbol": format_symbol(s),
        "tau": tau_,
        "underline": _sym(underline_theta(s, pair)),
        "overline": _sym(sel),
        "blocks": [],
    }
    if tau_ >= 0 and members:
        peak = find_k0(s, pair)
        out["k0"], out["tie"] = peak.k0, peak.tie
        out["alpha"], out["beta"] = list(peak.alpha), list(peak.beta)
    for b in blocks:
        out["blocks"].append(
            {
                "k": b.k,
                "members": [
                    {
                        "symbol": format_symbol(t),
                        "ord": ord_closed(t),
                        "max": ord_closed(t) == best,
                        "sel": t == sel,
                        "cut": t in used,
                    }
                    for t in b.members
                ],
            }
        )
    if not members:
        out["blocks"] = []
    return out


def _member_token(m: dict) -> str:
    tok = f"({m['symbol']})"
    if m["sel"]:
        tok += "*sel"
    if m["max"]:
        tok += "!max"
    if m["cut"]:
        tok += "~cut"
    return tok


def _blocks_line(blocks: list[dict]) -> str:
    return " | ".join(", ".join(_member_token(m) for m in b["members"]) for b in blocks)


def render_theta_set(data: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(data)
    if fmt == "csv":
        rows = [
            [b["k"], m["symbol"], m["ord"], int(m["max"]), int(m["sel"]), int(m["cut"])]
            for b in data["blocks"]
            for m in b["members"]
        ]
        return _dump_csv(["k", "symbol", "ord", "max", "sel", "cut"], rows)
    lines = [f"# {data['pair']}  source ({data['symbol']})  tau={data['tau']}"]
    if "k0" in data:
        lines.append(
            f"# k0={data['k0']} tie={str(data['tie']).lower()} "
            f"alpha={','.join(map(str, data['alpha']))} beta={','.join(map(str, data['beta']))}"
        )
    if not data["blocks"]:
        lines.append("(empty)")
    for b in data["blocks"]:
        if not b["members"]:
            continue  # only possible when tau < 0
        lines.append(f"k={b['k']}: " + ", ".join(_member_token(m) for m in b["members"]))
    return "\n".join(lines) + "\n"


# -- table ------------------------------------------------------------------

def table_data(pair: DualPair, delta: Optional[int] = None, with_blocks: bool = False) -> dict:
    deltas = family_of(pair.first) if delta is None else [delta]
    fams = []
    for d in deltas:
        tau_ = pair.tau(d)
        rows = []
        for s in sorted_family(pair.first.n, d, pair.eps):
            row: dict = {
                "source": format_symbol(s),
                "underline": _sym(underline_theta(s, pair)),
                "overline": _sym(overline_theta(s, pair)),
                "k0": None,
                "tie": None,
            }
            if tau_ >= 0:
                peak = find_k0(s, pair)
                row["k0"], row["tie"] = peak.k0, peak.tie
            if with_blocks:
                row["blocks"] = theta_set_data(s, pair)["blocks"]
            rows.append(row)
        fams.append({"delta": d, "tau": tau_, "rows": rows})
    return {"pair": str(pair), "families": fams}


def render_table(data: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(data)
    if fmt == "csv":
        rows = [
            [data["pair"], f["delta"], r["source"], r["underline"], r["overline"], r["k0"],
             None if r["tie"] is None else int(r["tie"])]
            for f in data["families"]
            for r in f["rows"]
        ]
        return _dump_csv(["pair", "delta", "source", "underline", "overline", "k0", "tie"], rows)
    lines = [f"# {data['pair']}"]
    for f in data["families"]:
        lines.append(f"## delta={f['delta']} tau={f['tau']}")
        for r in f["rows"]:
            lines.append(f"({r['source']}) : {_blocks_line(r['blocks'])}".rstrip())
    return "\n".join(lines) + "\n"


# -- first occurrence -------------------------------------------------------

def render_first_occ(data: dict, fmt: str) -> str:
    if fmt == "json":
        return dump_json(data)
    if fmt == "csv":
        return _dump_csv(["symbol", "series", "theta", "underline", "overline"],
                         [[data["symbol"], data["series"], data["theta"], data["underline"], data["overline"]]])
    return (
        f"{data['symbol']} in the {data['series']} series: "
        f"n0={data['theta']} underline={data['underline']} overline={data['overline']}\n"
    )
