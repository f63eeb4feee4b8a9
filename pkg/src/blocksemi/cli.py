"""Command-line client.

Every subcommand talks to the HTTP surface: by default the app is mounted
in-process (no server needed), or point --server at a running instance.
Exit codes: 0 yes/ok, 1 no/obstruction, 2 usage or input error, 3 cap
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import httpx

from .instances import parse_instance
from .core import BlocksemiError
from .oracle import DEFAULT_CAP

EXIT_YES = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_CAP = 3

RELATIONS = ("L", "R", "H", "D", "J", "leqL", "leqR", "leqJ")


def _client(server: str | None) -> httpx.Client:
    if server:
        return httpx.Client(base_url=server)
    from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app, raise_server_exceptions=False)


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _handle_error(payload: dict) -> int:
    code = payload.get("code", "error")
    status = EXIT_CAP if code == "too_large" else EXIT_INPUT
    return _fail(payload.get("message", code), status)


def _post(args, path: str, body: dict) -> tuple[dict | None, int]:
    """POST and normalize: (payload, 0) on 200, (None, exit_code) otherwise."""
    with _client(args.server) as client:
        response = client.post(path, json=body)
    if response.status_code == 200:
        return response.json(), 0
    try:
        payload = response.json()
    except ValueError:
        payload = {"code": "error", "message": response.text}
    if not isinstance(payload, dict) or "code" not in payload:
        payload = {"code": "error", "message": json.dumps(payload)}
    return None, _handle_error(payload)


def _load_instance(path: str):
    try:
        return parse_instance(Path(path).read_text()), 0
    except OSError as exc:
        return None, _fail(f"cannot read {path}: {exc}", EXIT_INPUT)
    except BlocksemiError as exc:
        return None, _fail(str(exc), EXIT_INPUT)


def _parse_blocks(spec: str):
    try:
        blocks = json.loads(spec)
    except ValueError as exc:
        return None, _fail(f"bad partition spec: {exc}", EXIT_INPUT)
    if not isinstance(blocks, list) or not all(isinstance(b, list) for b in blocks):
        return None, _fail("partition spec must be a list of integer lists", EXIT_INPUT)
    return blocks, 0


def cmd_check(args) -> int:
    instance, status = _load_instance(args.file)
    if instance is None:
        return status
    try:
        f = instance.get(args.f)
        g = instance.get(args.g)
    except BlocksemiError as exc:
        return _fail(str(exc), EXIT_INPUT)

    body = {
        "blocks": [list(b) for b in instance.partition.blocks],
        "f": list(f.image),
        "g": list(g.image),
        "relation": args.relation,
    }
    payload, status = _post(args, "/check", body)
    if payload is None:
        return status
    if args.format == "structured":
        print(json.dumps(payload))
    elif payload["holds"]:
        parts = [f"YES  relation={payload['relation']}"]
        if payload.get("alpha") is not None:
            parts.append(f"alpha={payload['alpha']}")
        if payload.get("beta") is not None:
            parts.append(f"beta={payload['beta']}")
        print("  ".join(parts))
    else:
        print(f"NO  relation={payload['relation']}")
    return EXIT_YES if payload["holds"] else EXIT_NO


def cmd_witness(args) -> int:
    instance, status = _load_instance(args.file)
    if instance is None:
        return status
    try:
        f = instance.get(args.f)
    except BlocksemiError as exc:
        return _fail(str(exc), EXIT_INPUT)

    body = {
        "blocks": [list(b) for b in instance.partition.blocks],
        "f": list(f.image),
        "unit": args.unit,
    }
    payload, status = _post(args, "/witness", body)
    if payload is None:
        return status
    if args.format == "structured":
        print(json.dumps(payload))
    elif payload["found"]:
        print(
            f"g = {payload['witness']}  flavor={payload['flavor']}"
            f"  verified={payload['verified']}"
        )
    else:
        ob = payload["obstruction"]
        print(
            f"NOT UNIT-REGULAR  block={ob['block']}"
            f"  collapse={ob['collapse']}  defect={ob['defect']}"
        )
    return EXIT_YES if payload["found"] else EXIT_NO


def cmd_survey(args) -> int:
    blocks, status = _parse_blocks(args.partition)
    if blocks is None:
        return status
    payload, status = _post(args, "/survey", {"blocks": blocks, "cap": args.cap})
    if payload is None:
        return status
    if args.format == "structured":
        print(json.dumps(payload))
    else:
        counts = payload["class_counts"]
        print(f"partition blocks={payload['blocks']}  size={payload['size']}")
        print(
            "classes: "
            + "  ".join(f"{name}={counts[name]}" for name in ("L", "R", "H", "D", "J"))
        )
        print(
            f"regular={payload['regular_count']}"
            f"  unit_regular={payload['unit_regular_count']}"
        )
        print(f"discrepancies: {len(payload['discrepancies'])}")
        for line in payload["discrepancies"]:
            print(f"  ! {line}")
    return EXIT_YES if not payload["discrepancies"] else EXIT_NO


def cmd_conjecture(args) -> int:
    blocks, status = _parse_blocks(args.partition)
    if blocks is None:
        return status
    payload, status = _post(args, "/conjecture", {"blocks": blocks, "cap": args.cap})
    if payload is None:
        return status
    if args.format == "structured":
        print(json.dumps(payload))
    else:
        print(f"partition blocks={payload['blocks']}  size={payload['size']}")
        for row in payload["rows"]:
            profile = {size: count for size, count in row["profile"]}
            flag = "yes" if row["two_consecutive"] else "no"
            print(
                f"profile {profile}  elements={row['element_count']}"
                f"  pair=({row['lambda1']},{row['lambda2']})"
                f"  |K|={row['exceptional_count']}"
                f"  two_consecutive={flag}"
                f"  D-class={row['d_class_size']}  J-class={row['j_class_size']}"
            )
        print(
            f"two-consecutive elements: {payload['two_consecutive_elements']}"
            f" of {payload['size']}"
        )
        print(f"D equals J on every class: {payload['d_equals_j']}")
    return EXIT_YES if payload["d_equals_j"] else EXIT_NO


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("blocksemi.service:app", host=args.host, port=args.port)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blocksemi",
        description="Relation checks, regularity witnesses, and "
        "oracle-validated surveys for block-permuting transformation semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--server", help="base URL of a running service")
        p.add_argument(
            "--format", choices=("text", "structured"), default="text",
            help="structured prints the raw JSON response",
        )

    p = sub.add_parser("check", help="decide a Green's relation between two maps")
    p.add_argument("file", help="instance file (JSON)")
    p.add_argument("f", help="name of the first transformation")
    p.add_argument("g", help="name of the second transformation")
    p.add_argument("--relation", choices=RELATIONS, required=True)
    common(p)
    p.set_defaults(run=cmd_check)

    p = sub.add_parser("witness", help="construct an inner inverse")
    p.add_argument("file", help="instance file (JSON)")
    p.add_argument("f", help="name of the transformation")
    p.add_argument("--unit", action="store_true", help="demand a unit witness")
    common(p)
    p.set_defaults(run=cmd_witness)

    p = sub.add_parser("survey", help="enumerate and cross-validate a semigroup")
    p.add_argument("partition", help='blocks, e.g. "[[0,1],[2,3]]"')
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common(p)
    p.set_defaults(run=cmd_survey)

    p = sub.add_parser(
        "conjecture", help="per-profile consecutive-pair report over a semigroup"
    )
    p.add_argument("partition", help='blocks, e.g. "[[0,1],[2,3]]"')
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common(p)
    p.set_defaults(run=cmd_conjecture)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(run=cmd_serve)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.run(args)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
