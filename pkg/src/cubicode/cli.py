"""Command line interface.

Subcommands:

    weights       Lee weight distribution of the ternary image
    bounds        Griesmer verdict plus the dual-distance certificate
    dual          dual-distance certificate alone
    sss           secret sharing access structure and dictator census
    export        generator matrix, weight distribution, or access structure
    verify-paper  replay the documented reference results as claim records

Exit status: 0 when everything checked out (flagged claims included),
1 when a verification claim mismatched or a round trip failed, 2 on
usage errors and out-of-range requests.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .bounds import (
    closed_form_sum_d_plus_1,
    dual_weight_search,
    sphere_packing_t1,
    verdict,
    verdict_json,
)
from .chain_ring import KIND_LPRIME, KIND_UNITS, KINDS, code_length
from .sss import access_structure, massey_shares, minimal_codewords, reconstruct
from .trace_code import LAYOUTS, CodeSpec, build_code, export_generators
from .weight_dist import (
    WeightDistribution,
    charsum_distribution,
    distribution_csv,
    distribution_json,
    enumerate_distribution,
    formula_distribution,
    gauss_periods,
)

# reference values the implementation is checked against
REFERENCE_TABLES = {
    (KIND_LPRIME, 1): {0: 1, 18: 24, 27: 2},
    (KIND_UNITS, 1): {0: 1, 36: 24, 54: 2},
    (KIND_LPRIME, 2): {0: 1, 486: 4, 648: 720, 972: 4},
    (KIND_UNITS, 2): {0: 1, 1296: 720, 1458: 8},
    (KIND_LPRIME, 3): {0: 1, 18954: 19656, 19683: 26},
    (KIND_UNITS, 3): {0: 1, 37908: 19656, 39366: 26},
}

REFERENCE_OPTIMAL = {
    (KIND_LPRIME, 1): True,
    (KIND_UNITS, 1): True,
    (KIND_LPRIME, 2): False,
    (KIND_UNITS, 2): True,
}

# stated closed-form Griesmer totals at d + 1 for the two-weight families
REFERENCE_GRIESMER_TOTAL = {
    (KIND_LPRIME, 1): 27 + 2 * 1 - 1,
    (KIND_LPRIME, 3): 28431 + 2 * 3 - 1,
    (KIND_UNITS, 1): 54 + 2 * 1 - 1,
    (KIND_UNITS, 2): 1944 + 2 * 2 - 1,
}


# ---------------------------------------------------------------------------
# shared helpers


def _resolve_distribution(
    spec: CodeSpec, method: str, threads: int, extrapolate: bool
) -> WeightDistribution:
    if method == "enumerate":
        return enumerate_distribution(spec, threads=threads)
    if method == "formula":
        return formula_distribution(spec, extrapolate=extrapolate)
    if method == "charsum":
        return charsum_distribution(spec)
    # auto: prefer the closed form, fall back to enumeration
    try:
        return formula_distribution(spec, extrapolate=extrapolate)
    except ValueError:
        return enumerate_distribution(spec, threads=threads)


def _spec_from_args(args) -> CodeSpec:
    layout = getattr(args, "layout", "interleaved")
    return CodeSpec(m=args.m, set_kind=args.set, layout=layout)


def _distribution_text(spec: CodeSpec, dist: WeightDistribution) -> str:
    N = code_length(spec.m, spec.set_kind)
    lines = [
        f"ternary image [{N}, {3 * spec.m}] (m={spec.m}, set={spec.set_kind}), "
        f"method={dist.method}"
    ]
    if dist.note:
        lines.append(f"note: {dist.note}")
    width = max(len(str(w)) for w in dist.entries)
    fwidth = max(len(str(f)) for f in dist.entries.values())
    lines.append(f"  {'weight'.rjust(width + 6)}  {'frequency'.rjust(fwidth + 9)}")
    for w, f in sorted(dist.entries.items()):
        lines.append(f"  {str(w).rjust(width + 6)}  {str(f).rjust(fwidth + 9)}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# subcommand handlers


def cmd_weights(args) -> int:
    spec = _spec_from_args(args)
    dist = _resolve_distribution(spec, args.method, args.threads, args.extrapolate)
    if args.method == "enumerate":
        try:
            closed = formula_distribution(spec)
        except ValueError:
            closed = None
        if closed is not None and closed.entries != dist.entries:
            print("error: enumeration disagrees with the closed form", file=sys.stderr)
            return 1
    if args.output == "json":
        sys.stdout.write(json.dumps(distribution_json(dist), indent=2) + "\n")
    elif args.output == "csv":
        sys.stdout.write(distribution_csv(dist))
    else:
        sys.stdout.write(_distribution_text(spec, dist))
    return 0


def cmd_bounds(args) -> int:
    spec = _spec_from_args(args)
    v = verdict(spec, extrapolate=args.extrapolate)
    if args.output == "json":
        sys.stdout.write(json.dumps(verdict_json(v), indent=2) + "\n")
        return 0
    lines = [
        f"[{v.N}, {v.K}, {v.d}] ternary image (m={spec.m}, set={spec.set_kind})",
        f"griesmer sum at d:     {v.griesmer_sum_d} (bound {'holds' if v.griesmer_sum_d <= v.N else 'fails'} against N={v.N})",
        f"griesmer sum at d + 1: {v.griesmer_sum_d1} ({'>' if v.griesmer_sum_d1 > v.N else '<='} N)",
        f"distance-optimal: {'yes' if v.optimal else 'no'}",
    ]
    if v.dual_distance is not None:
        lines.append(f"dual distance: {v.dual_distance}, witness {list(v.witness)}")
    for note in v.notes:
        lines.append(f"note: {note}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_dual(args) -> int:
    spec = _spec_from_args(args)
    cert = dual_weight_search(spec)
    payload = {
        "distance": cert.distance,
        "witness": [list(p) for p in cert.witness],
        "weight1_exhausted": cert.weight1_exhausted,
    }
    if args.output == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(
            f"dual distance {cert.distance} (weight 1 exhausted: "
            f"{cert.weight1_exhausted})\nwitness: {payload['witness']}\n"
        )
    return 0


def _access_payload(spec: CodeSpec):
    acc = access_structure(build_code(spec))
    return acc, {
        "secret_position": acc.secret_position,
        "minimal_access_sets": [list(s) for s in acc.minimal_access_sets],
        "dictators": list(acc.dictators),
        "convention": acc.convention,
    }


def cmd_sss(args) -> int:
    spec = _spec_from_args(args)
    code = build_code(spec)
    acc, payload = _access_payload(spec)
    round_trip = None
    if acc.minimal_access_sets:
        group = acc.minimal_access_sets[0]
        round_trip = "ok"
        for secret in (0, 1, 2):
            shares = massey_shares(code, secret, seed=args.seed)
            picked = {p: shares[p] for p in group}
            if reconstruct(picked, code) != secret:
                round_trip = "failed"
    if round_trip is not None:
        payload["round_trip"] = round_trip
    if args.output == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        lines = [
            f"secret at position {acc.secret_position} "
            f"(m={spec.m}, set={spec.set_kind}, layout={spec.layout})",
            f"minimal access sets: {len(acc.minimal_access_sets)}",
        ]
        for s in acc.minimal_access_sets[:20]:
            lines.append(f"  {list(s)}")
        if len(acc.minimal_access_sets) > 20:
            lines.append(f"  ... {len(acc.minimal_access_sets) - 20} more")
        lines.append(f"dictators: {list(acc.dictators)}")
        if round_trip is not None:
            lines.append(f"share round trip: {round_trip}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if round_trip in (None, "ok") else 1


def cmd_export(args) -> int:
    spec = _spec_from_args(args)
    if args.format == "generators":
        text = export_generators(build_code(spec))
    elif args.format == "access":
        _, payload = _access_payload(spec)
        text = json.dumps(payload, indent=2) + "\n"
    else:
        dist = _resolve_distribution(spec, args.method, args.threads, args.extrapolate)
        if args.format == "csv":
            text = distribution_csv(dist)
        else:
            text = json.dumps(distribution_json(dist), indent=2) + "\n"
    _emit(text, args.out)
    return 0


# ---------------------------------------------------------------------------
# verification claims


@dataclass
class Claim:
    id: str
    expected: object
    computed: object
    status: str  # 'match' | 'mismatch' | 'flagged'
    note: str | None = None


def _claim(claims: list[Claim], cid: str, build) -> None:
    """Run one claim builder, recording an honest mismatch on any blowup."""
    try:
        claims.append(build())
    except Exception as exc:  # noqa: BLE001 - a failed claim must not hide others
        claims.append(
            Claim(id=cid, expected="computation to succeed", computed=f"error: {exc}", status="mismatch")
        )


def _table_claim(kind: str, m: int) -> Claim:
    expected = REFERENCE_TABLES[(kind, m)]
    got = formula_distribution(CodeSpec(m=m, set_kind=kind)).entries
    return Claim(
        id=f"table-{kind}-m{m}",
        expected=expected,
        computed=got,
        status="match" if got == expected else "mismatch",
    )


def _enum_formula_claim(kind: str, m: int, threads: int) -> Claim:
    spec = CodeSpec(m=m, set_kind=kind)
    expected = formula_distribution(spec).entries
    got = enumerate_distribution(spec, threads=threads).entries
    return Claim(
        id=f"enum-vs-formula-{kind}-m{m}",
        expected=expected,
        computed=got,
        status="match" if got == expected else "mismatch",
    )


def _charsum_claim(kind: str, m: int) -> Claim:
    spec = CodeSpec(m=m, set_kind=kind)
    expected = enumerate_distribution(spec).entries
    got = charsum_distribution(spec).entries
    return Claim(
        id=f"charsum-vs-enum-{kind}-m{m}",
        expected=expected,
        computed=got,
        status="match" if got == expected else "mismatch",
    )


def _gauss_claim(m: int) -> Claim:
    gp = gauss_periods(m)
    expected = [
        [round(gp.closed_squares.real, 6), round(gp.closed_squares.imag, 6)],
        [round(gp.closed_nonsquares.real, 6), round(gp.closed_nonsquares.imag, 6)],
    ]
    computed = [
        [round(gp.squares.real, 6), round(gp.squares.imag, 6)],
        [round(gp.nonsquares.real, 6), round(gp.nonsquares.imag, 6)],
    ]
    # gauss_periods itself enforces 1e-9 agreement; reaching here means match
    return Claim(id=f"gauss-periods-m{m}", expected=expected, computed=computed, status="match")


def _griesmer_claim(kind: str, m: int) -> Claim:
    expected = REFERENCE_OPTIMAL[(kind, m)]
    v = verdict(CodeSpec(m=m, set_kind=kind))
    computed = {
        "optimal": v.optimal,
        "N": v.N,
        "sum_d": v.griesmer_sum_d,
        "sum_d1": v.griesmer_sum_d1,
    }
    return Claim(
        id=f"griesmer-{kind}-m{m}",
        expected={"optimal": expected},
        computed=computed,
        status="match" if v.optimal == expected else "mismatch",
    )


def _griesmer_total_claim(kind: str, m: int) -> Claim:
    expected = REFERENCE_GRIESMER_TOTAL[(kind, m)]
    _, total = closed_form_sum_d_plus_1(m, kind)
    if total == expected:
        status, note = "match", None
    elif total == expected + 1:
        status = "flagged"
        note = (
            "stated total is one less than the per-term sum; the per-term "
            "expansion is verified exactly against the direct ceiling sum"
        )
    else:
        status, note = "mismatch", None
    return Claim(
        id=f"griesmer-total-{kind}-m{m}",
        expected=expected,
        computed=total,
        status=status,
        note=note,
    )


def _dual_claim(kind: str, m: int) -> Claim:
    cert = dual_weight_search(CodeSpec(m=m, set_kind=kind))
    return Claim(
        id=f"dual-{kind}-m{m}",
        expected={"distance": 2},
        computed={"distance": cert.distance, "witness": [list(p) for p in cert.witness]},
        status="match" if cert.distance == 2 else "mismatch",
    )


def _packing_claim() -> Claim:
    computed = {}
    for kind in KINDS:
        for m in (1, 2):
            N = code_length(m, kind)
            computed[f"{kind}-m{m}"] = sphere_packing_t1(N, N - 3 * m)
    ok = not any(computed.values())
    return Claim(
        id="packing-dual-single-error",
        expected="no family's dual packs a radius-1 ball (all False)",
        computed=computed,
        status="flagged" if ok else "mismatch",
        note="verified in substance; the stated inequality arranges the same "
        "quantities differently",
    )


def _minimality_claim(kind: str, m: int) -> Claim:
    code = build_code(CodeSpec(m=m, set_kind=kind))
    report, _ = minimal_codewords(code)
    computed = {
        "ab_ratio_holds": report.ab_ratio_holds,
        "minimal": report.minimal_count,
        "non_minimal": len(report.non_minimal_classes),
    }
    if kind == KIND_UNITS and m == 2:
        expected: object = {"ab_ratio_holds": True, "non_minimal": 0}
        ok = report.ab_ratio_holds and not report.non_minimal_classes
        return Claim(
            id=f"minimality-{kind}-m{m}",
            expected=expected,
            computed=computed,
            status="match" if ok else "mismatch",
        )
    if m == 1:
        note = (
            "weight ratio sits exactly on the screen boundary (3 wmin == 2 wmax); "
            "the census decides instead"
        )
    else:
        note = "no stated expectation for this family; census recorded"
    return Claim(
        id=f"minimality-{kind}-m{m}",
        expected="census (screen inconclusive)",
        computed=computed,
        status="flagged",
        note=note,
    )


def _slow_enum_claim(kind: str, threads: int) -> Claim:
    spec = CodeSpec(m=3, set_kind=kind)
    expected = REFERENCE_TABLES[(kind, 3)]
    got = enumerate_distribution(spec, threads=threads).entries
    return Claim(
        id=f"enum-vs-formula-{kind}-m3",
        expected=expected,
        computed=got,
        status="match" if got == expected else "mismatch",
    )


def build_claims(include_slow: bool = False, threads: int = 1) -> list[Claim]:
    claims: list[Claim] = []
    for kind, m in REFERENCE_TABLES:
        _claim(claims, f"table-{kind}-m{m}", lambda k=kind, mm=m: _table_claim(k, mm))
    for kind in KINDS:
        for m in (1, 2):
            _claim(
                claims,
                f"enum-vs-formula-{kind}-m{m}",
                lambda k=kind, mm=m: _enum_formula_claim(k, mm, threads),
            )
    for kind in KINDS:
        _claim(claims, f"charsum-vs-enum-{kind}-m1", lambda k=kind: _charsum_claim(k, 1))
    for m in range(1, 7):
        _claim(claims, f"gauss-periods-m{m}", lambda mm=m: _gauss_claim(mm))
    for kind, m in REFERENCE_OPTIMAL:
        _claim(claims, f"griesmer-{kind}-m{m}", lambda k=kind, mm=m: _griesmer_claim(k, mm))
    for kind, m in REFERENCE_GRIESMER_TOTAL:
        _claim(
            claims,
            f"griesmer-total-{kind}-m{m}",
            lambda k=kind, mm=m: _griesmer_total_claim(k, mm),
        )
    for kind in KINDS:
        for m in (1, 2):
            _claim(claims, f"dual-{kind}-m{m}", lambda k=kind, mm=m: _dual_claim(k, mm))
    _claim(claims, "packing-dual-single-error", _packing_claim)
    for kind in KINDS:
        for m in (1, 2):
            _claim(
                claims,
                f"minimality-{kind}-m{m}",
                lambda k=kind, mm=m: _minimality_claim(k, mm),
            )
    if include_slow:
        for kind in KINDS:
            _claim(
                claims,
                f"enum-vs-formula-{kind}-m3",
                lambda k=kind: _slow_enum_claim(k, threads),
            )
    return claims


def cmd_verify(args) -> int:
    claims = build_claims(include_slow=args.include_slow, threads=args.threads)
    counts = {"match": 0, "mismatch": 0, "flagged": 0}
    for c in claims:
        counts[c.status] += 1
    if args.output == "json":
        payload = {
            "claims": [
                {
                    "id": c.id,
                    "expected": c.expected,
                    "computed": c.computed,
                    "status": c.status,
                    **({"note": c.note} if c.note else {}),
                }
                for c in claims
            ],
            "summary": counts,
        }
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        for c in claims:
            line = f"{c.status:9} {c.id}"
            if c.status != "match":
                line += f"  expected={json.dumps(c.expected)} computed={json.dumps(c.computed)}"
            if c.note:
                line += f"  [{c.note}]"
            sys.stdout.write(line + "\n")
        sys.stdout.write(
            f"summary: {counts['match']} match, {counts['mismatch']} mismatch, "
            f"{counts['flagged']} flagged\n"
        )
    if counts["mismatch"]:
        bad = ", ".join(c.id for c in claims if c.status == "mismatch")
        print(f"error: mismatched claims: {bad}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_code_args(p: argparse.ArgumentParser, layout: bool = True) -> None:
    p.add_argument("--m", type=int, required=True, help="extension degree of the base field")
    p.add_argument("--set", choices=KINDS, default=KIND_LPRIME, help="defining set kind")
    if layout:
        p.add_argument("--layout", choices=LAYOUTS, default="interleaved")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubicode",
        description="ternary images of trace codes over F_{3^m}[u]/(u^3 - 1)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weights", help="Lee weight distribution")
    _add_code_args(p, layout=False)
    p.add_argument(
        "--method",
        choices=("auto", "enumerate", "formula", "charsum"),
        default="auto",
    )
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--extrapolate", action="store_true", help="emit unproven closed forms")
    p.add_argument("--output", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("bounds", help="Griesmer verdict and dual certificate")
    _add_code_args(p, layout=False)
    p.add_argument("--extrapolate", action="store_true")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("dual", help="dual-distance certificate")
    _add_code_args(p)
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("sss", help="secret sharing access structure")
    _add_code_args(p)
    p.add_argument("--seed", type=int, default=None, help="seed for the share round trip")
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_sss)

    p = sub.add_parser("export", help="write generators or a distribution")
    _add_code_args(p)
    p.add_argument("--format", choices=("generators", "csv", "json", "access"), default="generators")
    p.add_argument(
        "--method",
        choices=("auto", "enumerate", "formula", "charsum"),
        default="auto",
    )
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--extrapolate", action="store_true")
    p.add_argument("--out", default="-", help="output path, '-' for stdout")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("verify-paper", help="replay documented reference results")
    p.add_argument("--include-slow", action="store_true", help="also enumerate at m=3")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--output", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
