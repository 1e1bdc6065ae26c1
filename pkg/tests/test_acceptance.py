"""Acceptance criteria 1-10, one check each, with the stated tolerances and time limits.

Run directly (``python3 tests/test_acceptance.py``) for the pass/fail listing,
or through pytest, where the same lines appear in the terminal summary.
Three criteria quote published values that disagree with the definitions in
a few cells; those checks report FAIL and are marked as expected failures.
"""

from __future__ import annotations

import json
import subprocess
import sys
import tempfile
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from paper_tables import (  # noqa: E402
    O8_SP10_ROWS,
    O14_SOURCE,
    O14_SP8,
    O14_SP10,
    O20_SP22_OVERLINE,
    O20_SP22_THETA,
    O30_ALPHA,
    O30_BETA,
    O30_K0,
    O30_SOURCE,
    S40_CHAIN,
)

RESULTS: dict[int, tuple[bool, str]] = {}


def cli(*argv: str) -> tuple[int, str, float]:
    t0 = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "theta_symbols", *argv], capture_output=True, text=True
    )
    return proc.returncode, proc.stdout, time.perf_counter() - t0


def _record(n: int, ok: bool, detail: str) -> bool:
    RESULTS[n] = (ok, detail)
    return ok


def criterion_1() -> bool:
    code, out, secs = cli("table", "--pair", "O+8,Sp10")
    rows = {}
    for line in out.splitlines():
        if line.startswith("("):
            src, _, rest = line.partition(" :")
            rows[src.strip("()")] = rest.strip()
    expected = [(s, b) for d in (4, 0, -4) for s, b in O8_SP10_ROWS[d]]
    order_ok = list(rows) == [s for s, _ in expected]
    diffs = [s for s, b in expected if rows.get(s) != b]
    under_over = "(2,0;4) |" in rows.get("4;0", "") and "(3,0;3)*sel" in rows.get("4;0", "")
    ok = code == 0 and order_ok and not diffs and under_over and secs < 1.0
    detail = f"{len(expected)} rows, {len(diffs)} differing ({', '.join(diffs) or 'none'}), {secs:.2f}s"
    return _record(1, ok, detail)


def criterion_2() -> bool:
    from theta_symbols.correspond import overline_theta, theta_k_map
    from theta_symbols.symbols import parse_symbol
    from theta_symbols.theta import parse_pair

    t0 = time.perf_counter()
    pair = parse_pair("O+20,Sp22")
    bad = []
    for src, row in O20_SP22_THETA.items():
        s = parse_symbol(src)
        got = [str(theta_k_map(s, pair, k)) for k in range(len(row))]
        if got != row:
            bad.append(f"theta_k({src})")
        over = str(overline_theta(s, pair))
        if over != O20_SP22_OVERLINE[src]:
            bad.append(f"overline({src})={over}")
    secs = time.perf_counter() - t0
    return _record(2, not bad and secs < 1.0, f"mismatches: {bad or 'none'}, {secs:.2f}s")


def criterion_3() -> bool:
    from theta_symbols.correspond import find_k0
    from theta_symbols.symbols import parse_symbol
    from theta_symbols.theta import parse_pair

    t0 = time.perf_counter()
    d = find_k0(parse_symbol(O30_SOURCE), parse_pair("O+30,Sp30"))
    secs = time.perf_counter() - t0
    ok = (d.alpha, d.beta, d.k0, d.tie) == (O30_ALPHA, O30_BETA, O30_K0, True) and secs < 1.0
    return _record(3, ok, f"alpha={d.alpha} beta={d.beta} k0={d.k0} tie={d.tie}, {secs:.2f}s")


def criterion_4() -> bool:
    code, out, _ = cli("enum", "--group", "O+8", "--delta", "0")
    got = out.split()
    return _record(4, code == 0 and got == S40_CHAIN, f"{len(got)} symbols")


def criterion_5() -> bool:
    from theta_symbols.correspond import underline_theta
    from theta_symbols.symbols import parse_symbol
    from theta_symbols.theta import parse_pair, theta_members

    s = parse_symbol(O14_SOURCE)
    sp8 = {str(t) for t in theta_members(s, parse_pair("O+14,Sp8"))}
    sp10 = {str(t) for t in theta_members(s, parse_pair("O+14,Sp10"))}
    u8 = underline_theta(s, parse_pair("O+14,Sp8"))
    u10 = underline_theta(s, parse_pair("O+14,Sp10"))
    checks = {
        "Sp8 set": sp8 == O14_SP8,
        "Sp10 set": sp10 == O14_SP10,
        "underline Sp8": str(u8) == "3,1;1",
        "underline Sp10 undefined": u10 is None,
    }
    extra = sorted(sp10 - O14_SP10)
    missing = sorted(O14_SP10 - sp10)
    detail = ", ".join(f"{k}: {'ok' if v else 'FAIL'}" for k, v in checks.items())
    if extra or missing:
        detail += f" (Sp10 extra {extra}, missing {missing})"
    return _record(5, all(checks.values()), detail)


def criterion_6() -> bool:
    from theta_symbols.correspond import first_occurrence
    from theta_symbols.symbols import parse_symbol

    s = parse_symbol("2,0;4")
    got = {
        ser: tuple(first_occurrence(s, ser, m) for m in ("underline", "overline", "theta"))
        for ser in ("O+", "O-")
    }
    ok = got == {"O+": (4, 5, 4), "O-": (2, 2, 2)}
    return _record(6, ok, f"(underline, overline, n0): {got}")


def criterion_7() -> bool:
    from theta_symbols.degree import ord_closed, ord_oracle
    from theta_symbols.symbols import enumerate_family

    t0 = time.perf_counter()
    count, bad = 0, 0
    for n in range(7):
        for delta in range(-5, 6):
            if delta % 4 == 3:
                continue
            for s in enumerate_family(n, delta):
                count += 1
                bad += ord_closed(s) != ord_oracle(s).total
    secs = time.perf_counter() - t0
    return _record(7, bad == 0 and secs < 10, f"{count} symbols, {bad} mismatches, {secs:.2f}s")


def criterion_8() -> bool:
    from theta_symbols.degree import ord_closed, steinberg_symbol

    bad = [
        (k, n)
        for n in range(1, 7)
        for k, want in (("Sp", n * n), ("O+", n * (n - 1)), ("O-", n * (n - 1)))
        if ord_closed(steinberg_symbol(k, n)) != want
    ]
    return _record(8, not bad, f"mismatches: {bad or 'none'}")


CRITERION_9_IDS = [
    "L0309", "L0203", "L0413", "L0414", "L0415", "L0416", "L0418", "L0423",
    "L0430", "L0432", "L0503", "L0504", "L0302", "L0314", "SEMIPERSIST", "SYMMETRY",
]


def criterion_9() -> bool:
    from theta_symbols.verify import run_property

    parts = []
    ok = True
    for label, workers, budget in (("single", 1, 300.0), ("sharded", None, 60.0)):
        t0 = time.perf_counter()
        reports = [run_property(pid, 4, workers=workers) for pid in CRITERION_9_IDS]
        secs = time.perf_counter() - t0
        failing = [r.name for r in reports if not r.ok]
        ok &= not failing and secs < budget
        parts.append(f"{label}: {sum(r.checked for r in reports)} checks, failing {failing or 'none'}, {secs:.1f}s")
    return _record(9, ok, "; ".join(parts))


def criterion_10() -> bool:
    with tempfile.TemporaryDirectory() as tmp:
        good = Path(tmp) / "good.json"
        bad = Path(tmp) / "bad.json"
        _, out, _ = cli("table", "--pair", "O+8,Sp10", "--format", "json")
        good.write_text(out)
        data = json.loads(out)
        rows = data["families"][1]["rows"]
        rows[5]["overline"] = rows[4]["overline"]
        bad.write_text(json.dumps(data, indent=2) + "\n")
        code_good, _, _ = cli("verify", "--property", "L0430", "--table", str(good))
        code_bad, _, _ = cli("verify", "--property", "L0430", "--table", str(bad))
    return _record(10, code_good == 0 and code_bad == 1, f"stored table exit {code_good}, mutated exit {code_bad}")


CRITERIA = {
    1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
    6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9, 10: criterion_10,
}

KNOWN_ERRATA = {
    1: "published table omits (3,0;3) from Θ_0(3;1) and (4,0;2) from Θ_2(4,1;1,0)",
    2: "full-family overline gives (4,3,1;5,2) for (5,2;3,2); (5,3,2;3,2) goes to the earlier (4,2;4,2)",
    5: "published Θ_Sp10(4,1;3,1) omits (3,1;2), which satisfies both interleaving conditions",
}


def format_line(n: int) -> str:
    ok, detail = RESULTS[n]
    return f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, request):
    if n in KNOWN_ERRATA:
        request.applymarker(pytest.mark.xfail(reason=KNOWN_ERRATA[n], strict=True))
    ok = CRITERIA[n]()
    print(format_line(n))
    assert ok, format_line(n)


def _table_rows() -> dict[str, str]:
    _, out, _ = cli("table", "--pair", "O+8,Sp10")
    return {
        line.partition(" :")[0].strip("()"): line.partition(" :")[2].strip()
        for line in out.splitlines()
        if line.startswith("(")
    }


def test_table_discrepancy_is_two_missing_members():
    rows = _table_rows()
    published = dict(r for d in (4, 0, -4) for r in O8_SP10_ROWS[d])
    differing = {s for s in published if rows[s] != published[s]}
    assert differing == {"3;1", "4,1;1,0"}
    for src, extra in (("3;1", "3,0;3"), ("4,1;1,0", "4,0;2")):
        assert f"({extra})" in rows[src] and f"({extra})" not in published[src]
        assert rows[src].replace(f", ({extra})", "").replace(f"({extra}), ", "") == published[src]


def test_sp10_discrepancy_is_one_member():
    from theta_symbols.symbols import parse_symbol
    from theta_symbols.theta import parse_pair, related, theta_members

    pair = parse_pair("O+14,Sp10")
    s = parse_symbol(O14_SOURCE)
    got = {str(t) for t in theta_members(s, pair)}
    assert got - O14_SP10 == {"3,1;2"} and not O14_SP10 - got
    assert related(s, parse_symbol("3,1;2"), pair)


def test_overline_discrepancy_comes_from_the_earlier_row():
    from theta_symbols.correspond import overline_theta, overline_theta_restricted
    from theta_symbols.symbols import parse_symbol
    from theta_symbols.theta import parse_pair

    pair = parse_pair("O+20,Sp22")
    taken = overline_theta(parse_symbol("4,2;4,2"), pair)
    assert str(taken) == O20_SP22_OVERLINE["5,2;3,2"]
    excerpt = overline_theta_restricted([parse_symbol(k) for k in O20_SP22_OVERLINE], pair)
    assert {str(k): str(v) for k, v in excerpt.items()} == O20_SP22_OVERLINE


if __name__ == "__main__":
    for n, fn in CRITERIA.items():
        fn()
        print(format_line(n))
