"""Command-line front end.

Subcommands: ``permweights`` (orbit records), ``character`` (depth-organized
series), ``oracle`` (shell-organized series), ``theta`` (root-lattice theta
series), ``compare`` (three-way coefficient check).  Machine output is JSON
by default or CSV with ``--format csv`` (default overridable through the
AFFINECHAR_FORMAT environment variable), written to stdout or to ``--out``.

Exit codes: 0 success, 1 a comparison found mismatching coefficients,
2 invalid configuration.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .characters import anomaly_exponent, normalized_character
from .orbits import AffineDominant, enumerate_orbit
from .qseries import QSeries, basic_character_series, lattice_theta
from .theta import guaranteed_order, oracle_character, shell_polynomial


def _parse_labels(text: str, rank: int) -> tuple[int, ...]:
    try:
        labels = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"labels must be comma-separated integers, got {text!r}")
    if len(labels) != rank:
        raise ValueError(f"expected {rank} labels for rank {rank}, got {len(labels)}")
    return labels


def _dominant_from(args) -> AffineDominant:
    return AffineDominant(args.level, _parse_labels(args.labels, args.rank))


def _emit(payload: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(payload)
            if not payload.endswith("\n"):
                fh.write("\n")
    else:
        print(payload)


def _csv_coefficients(series: QSeries) -> str:
    lines = ["order,value"]
    lines += [f"{n},{series.coeffs[n]}" for n in range(series.trunc + 1)]
    return "\n".join(lines)


def cmd_permweights(args) -> int:
    dom = _dominant_from(args)
    records = enumerate_orbit(dom, args.max_depth, args.method)
    for rec in records:
        print(rec.notation())
    if args.format == "json":
        payload = json.dumps(records.to_json(), indent=2)
    else:
        header = ",".join(f"n{i}" for i in range(1, args.rank + 1)) + ",depth,sign"
        rows = [
            ",".join(str(a) for a in rec.labels) + f",{rec.depth},{rec.sign}"
            for rec in records
        ]
        payload = "\n".join([header] + rows)
    _emit(payload, args.out)
    return 0


def cmd_character(args) -> int:
    dom = _dominant_from(args)
    order = args.max_depth if args.truncate is None else args.truncate
    if order > args.max_depth:
        raise ValueError(
            f"truncation {order} exceeds the depth cutoff {args.max_depth}"
        )
    series = normalized_character(dom, args.max_depth, args.method)
    data = series.to_json()
    if order < series.chi.trunc:
        data["chi"] = series.chi.truncated(order).to_json()
    if args.format == "json":
        payload = json.dumps(data, indent=2)
    else:
        payload = _csv_coefficients(series.chi.truncated(order))
    _emit(payload, args.out)
    return 0


def cmd_oracle(args) -> int:
    dom = _dominant_from(args)
    chi = oracle_character(dom, args.shells, args.truncate)
    polys = [shell_polynomial(dom, n, args.truncate) for n in range(args.shells + 1)]
    if args.format == "json":
        data = {
            "algebra": f"A{args.rank}(1)",
            "weight": dom.to_json(),
            "shells": args.shells,
            "guaranteed_order": guaranteed_order(dom, args.shells),
            "chi": chi.to_json(),
            "tpolynomials": [p.to_json() for p in polys],
        }
        payload = json.dumps(data, indent=2)
    else:
        payload = _csv_coefficients(chi)
    _emit(payload, args.out)
    return 0


def cmd_theta(args) -> int:
    series = lattice_theta(args.rank, args.truncate)
    if args.format == "json":
        payload = json.dumps(series.to_json(), indent=2)
    else:
        payload = _csv_coefficients(series)
    _emit(payload, args.out)
    return 0


def cmd_compare(args) -> int:
    dom = _dominant_from(args)
    depth = args.max_depth
    chi = normalized_character(dom, depth, args.method).chi
    go = guaranteed_order(dom, args.shells)
    oracle = oracle_character(dom, args.shells, depth)
    eta = None
    if dom.level == 1 and all(a == 0 for a in dom.labels):
        eta = basic_character_series(args.rank, depth)
    golden = None
    if args.golden:
        with open(args.golden) as fh:
            golden = QSeries.from_json(json.load(fh))

    print(
        f"# A{args.rank}(1) level={dom.level} labels={dom.labels} "
        f"M={depth} shells={args.shells} guaranteed_order={go}"
    )
    print("order,permweight,oracle,eta,golden,status")
    first_bad = None
    for n in range(depth + 1):
        values = [chi.coeffs[n]]
        cells = [str(chi.coeffs[n])]
        if n <= oracle.trunc:
            values.append(oracle.coeffs[n])
            cells.append(str(oracle.coeffs[n]))
        else:
            cells.append("-")
        if eta is not None:
            values.append(eta.coeffs[n])
            cells.append(str(eta.coeffs[n]))
        else:
            cells.append("-")
        if golden is not None and n <= golden.trunc:
            values.append(golden.coeffs[n])
            cells.append(str(golden.coeffs[n]))
        else:
            cells.append("-")
        ok = all(v == values[0] for v in values)
        if not ok and first_bad is None:
            first_bad = n
        print(f"{n}," + ",".join(cells) + ("," + ("PASS" if ok else "FAIL")))
    print(f"anomaly={anomaly_exponent(dom)}")
    if first_bad is None:
        print(f"RESULT: PASS ({depth + 1} orders compared)")
        return 0
    print(f"RESULT: FAIL (first differing order {first_bad})")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affinechar",
        description="Exact affine A_r character expansions via permutation weights.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_format = os.environ.get("AFFINECHAR_FORMAT", "json")

    def add_common(p, weight=True):
        p.add_argument("--rank", type=int, required=True, help="algebra rank r")
        if weight:
            p.add_argument("--level", type=int, required=True, help="level k")
            p.add_argument(
                "--labels",
                type=str,
                required=True,
                help="comma-separated horizontal Dynkin labels, r of them",
            )
        p.add_argument(
            "--format", choices=("json", "csv"), default=default_format
        )
        p.add_argument("--out", type=str, default=None, help="write payload to file")

    p = sub.add_parser("permweights", help="enumerate orbit records")
    add_common(p)
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--method", choices=("translation", "lemma"), default="translation")
    p.set_defaults(func=cmd_permweights)

    p = sub.add_parser("character", help="depth-organized character series")
    add_common(p)
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--truncate", type=int, default=None)
    p.add_argument("--method", choices=("translation", "lemma"), default="translation")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("oracle", help="shell-organized character series")
    add_common(p)
    p.add_argument("--shells", type=int, required=True)
    p.add_argument("--truncate", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("theta", help="root-lattice theta series")
    add_common(p, weight=False)
    p.add_argument("--truncate", type=int, required=True)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("compare", help="three-way coefficient comparison")
    add_common(p)
    p.add_argument("--max-depth", type=int, required=True)
    p.add_argument("--shells", type=int, required=True)
    p.add_argument("--method", choices=("translation", "lemma"), default="translation")
    p.add_argument("--golden", type=str, default=None, help="expected chi as QSeries JSON")
    p.set_defaults(func=cmd_compare)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
