"""Command-line front end.

The CLI is a thin client: every command is an HTTP call against the service
in ``scatalan.api``.  By default the app is mounted in-process; point
``--url`` (or the SCAT_URL environment variable) at a running server to use
it remotely.  Exit codes: 0 success, 1 property failure, 2 usage or parse
error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import NoReturn

import httpx

USAGE_EXIT = 2
FAILURE_EXIT = 1
CAP_EXIT = 3


class Client:
    def __init__(self, url: str | None):
        if url:
            self._client = httpx.Client(base_url=url.rstrip("/"), timeout=600.0)
        else:
            import warnings

            with warnings.catch_warnings():
                warnings.simplefilter("ignore")  # starlette testclient warns on import
                from fastapi.testclient import TestClient

            from .api import app

            self._client = TestClient(app)

    def post(self, endpoint: str, payload: dict) -> dict:
        try:
            response = self._client.post(endpoint, json=payload)
        except httpx.HTTPError as exc:
            _die(f"cannot reach the service: {exc}", USAGE_EXIT)
        if response.status_code == 400:
            detail = response.json().get("detail", {})
            code = detail.get("code", "error") if isinstance(detail, dict) else "error"
            message = detail.get("message", str(detail)) if isinstance(detail, dict) else str(detail)
            _die(message, CAP_EXIT if code == "cap_exceeded" else USAGE_EXIT)
        if response.status_code == 422:
            _die(f"invalid request: {response.text}", USAGE_EXIT)
        if response.status_code != 200:
            _die(f"service error {response.status_code}: {response.text}", USAGE_EXIT)
        return response.json()


def _die(message: str, code: int) -> NoReturn:
    print(f"error: {message}", file=sys.stderr)
    raise SystemExit(code)


def _emit(obj, jsonl: bool) -> None:
    if jsonl:
        print(json.dumps(obj, sort_keys=True, separators=(",", ":")))
    else:
        print(obj)


def _cap_args(args) -> dict:
    cap = args.cap
    if cap is None:
        raw = os.environ.get("SCAT_CAP", "").strip()
        if raw:
            try:
                cap = int(raw)
            except ValueError:
                _die(f"SCAT_CAP must be an integer, got {raw!r}", USAGE_EXIT)
    return {"cap": cap} if cap is not None else {}


def run_count(client: Client, args) -> int:
    payload = {"signature": args.signature, "all_methods": args.all_methods, **_cap_args(args)}
    out = client.post("/count", payload)
    if args.format == "jsonl":
        _emit(out, True)
    else:
        if args.all_methods:
            m = out["methods"]
            print(f"recurrence {m['recurrence']}")
            print(f"determinant {m['determinant']}")
            print(f"exhaustive {m['exhaustive']}")
        else:
            print(out["count"])
    if args.all_methods and not out["agree"]:
        return FAILURE_EXIT
    return 0


def run_list(client: Client, args) -> int:
    fmt = "json" if args.format == "jsonl" else "text"
    payload = {"family": args.family, "signature": args.signature, "format": fmt, **_cap_args(args)}
    out = client.post("/list", payload)
    for item in out["items"]:
        _emit(item, args.format == "jsonl")
    if args.format == "jsonl":
        _emit({"count": out["count"]}, True)
    else:
        print(f"count {out['count']}")
    return 0


def run_convert(client: Client, args) -> int:
    payload = {
        "from_family": args.from_family,
        "to_family": args.to_family,
        "object": args.object,
        "signature": args.signature,
    }
    out = client.post("/convert", payload)
    _emit(out if args.format == "jsonl" else out["object"], args.format == "jsonl")
    return 0


def run_rational(client: Client, args) -> int:
    out = client.post("/rational", {"a": args.a, "b": args.b})
    _emit(out if args.format == "jsonl" else out["signature"], args.format == "jsonl")
    return 0


def run_narayana(client: Client, args) -> int:
    out = client.post("/narayana", {"signature": args.signature, "statistic": args.statistic})
    if args.format == "jsonl":
        _emit(out, True)
    else:
        for stat, hist in out["distributions"].items():
            cells = " ".join(f"{k}:{v}" for k, v in sorted(hist.items(), key=lambda kv: int(kv[0])))
            print(f"{stat} {cells}")
        print(f"total {out['total']}")
    return 0 if out["agree"] else FAILURE_EXIT


def run_parking(client: Client, args) -> int:
    if args.action == "count":
        out = client.post("/parking/count", {"mu": args.mu})
        _emit(out if args.format == "jsonl" else out["count"], args.format == "jsonl")
        return 0
    out = client.post("/parking/list", {"mu": args.mu, **_cap_args(args)})
    for item in out["items"]:
        _emit({"prefs": item} if args.format == "jsonl" else item, args.format == "jsonl")
    if args.format == "jsonl":
        _emit({"count": out["count"]}, True)
    else:
        print(f"count {out['count']}")
    return 0


def run_arw_compare(client: Client, args) -> int:
    payload = {"a": args.a, "b": args.b, "all_paths": args.all, **_cap_args(args)}
    if args.mu is not None:
        payload["mu"] = args.mu
    out = client.post("/arw-compare", payload)
    for report in out["reports"]:
        _emit(report, True)
    return 0


def run_verify(client: Client, args) -> int:
    payload = {"max_weight": args.max_weight, "rational_only": args.rational_only, **_cap_args(args)}
    out = client.post("/verify", payload)
    if args.format == "jsonl":
        for row in out["rows"]:
            _emit(row, True)
        _emit({"ok": out["ok"]}, True)
    else:
        for row in out["rows"]:
            status = "ok" if row["ok"] else "FAIL " + ",".join(row["failures"])
            counts = " ".join(f"{k}={v}" for k, v in sorted(row["counts"].items()))
            name = row["signature"] or "(empty)"
            print(f"{name}: count={row['count']} {counts} {status}")
        print("ok" if out["ok"] else "FAILED")
    return 0 if out["ok"] else FAILURE_EXIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scatalan",
        description="Signature-indexed Catalan combinatorics: count, list, convert, verify.",
    )
    parser.add_argument("--url", default=os.environ.get("SCAT_URL") or None,
                        help="base URL of a running service (default: in-process)")
    parser.add_argument("--format", choices=("text", "jsonl"), default="text")
    parser.add_argument("--cap", type=int, default=None,
                        help="enumeration cap (default: SCAT_CAP or 1000000)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count the objects for a signature")
    p.add_argument("signature")
    p.add_argument("--all-methods", action="store_true",
                   help="cross-check recurrence, determinant, and exhaustive counts")
    p.set_defaults(fn=run_count)

    p = sub.add_parser("list", help="list all objects of a family")
    p.add_argument("family", choices=(
        "tree", "path", "stirling312", "ncpartition", "matching",
        "angulation", "parens", "parking", "decorated-path", "decorated-tree",
    ))
    p.add_argument("signature")
    p.set_defaults(fn=run_list)

    p = sub.add_parser("convert", help="convert an object between families")
    p.add_argument("from_family")
    p.add_argument("to_family")
    p.add_argument("object")
    p.add_argument("-s", "--signature", default="",
                   help="signature context (required for path words, partitions, parking)")
    p.set_defaults(fn=run_convert)

    p = sub.add_parser("rational", help="signature of a coprime pair (a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.set_defaults(fn=run_rational)

    p = sub.add_parser("narayana", help="statistic histogram over a family")
    p.add_argument("signature")
    p.add_argument("--statistic", default="all",
                   help="peaks | leftmost-leaves | ascents+1 | partition-blocks | "
                        "matching-min-plus-one | all")
    p.set_defaults(fn=run_narayana)

    p = sub.add_parser("parking", help="count or list mu-parking functions")
    p.add_argument("action", choices=("count", "list"))
    p.add_argument("mu", help="comma-separated weak composition")
    p.set_defaults(fn=run_parking)

    p = sub.add_parser("arw-compare", help="laser construction vs the tree route")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", help="report every (a,b)-path")
    group.add_argument("--mu", default=None, help="one specific path by its mu vector")
    p.set_defaults(fn=run_arw_compare)

    p = sub.add_parser("verify", help="run the invariant suite up to a size bound")
    p.add_argument("max_weight", type=int)
    p.add_argument("--rational-only", action="store_true")
    p.set_defaults(fn=run_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    client = Client(args.url)
    return args.fn(client, args)


if __name__ == "__main__":
    sys.exit(main())
