"""Command line for the tagged-diagram toolkit.

Every subcommand runs in process by default; ``--url`` points it at a
running service instead and the output is identical.  ``--json`` prints
the same document the service returns.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .service import handlers
from .service.models import AnalyzeRequest, DiagramTagIn, SplittingIn

_EXIT_OK = 0
_EXIT_MISMATCH = 1
_EXIT_USAGE = 2


def _make_client(base_url: str):
    import httpx

    return httpx.Client(base_url=base_url, timeout=30.0)


def _payload(
    args: argparse.Namespace,
    local: Callable[[], object],
    method: str = "GET",
    path: str = "",
    params: dict | None = None,
    body: dict | None = None,
) -> dict | None:
    """Response document for one operation, in process or over HTTP.
    None means the remote call failed and the error is already printed."""
    if not args.url:
        return local().model_dump()
    client = _make_client(args.url)
    try:
        if method == "GET":
            response = client.get(path, params=params or {})
        else:
            response = client.post(path, json=body)
    finally:
        client.close()
    if response.status_code >= 400:
        try:
            detail = response.json().get("detail", response.text)
        except ValueError:
            detail = response.text
        print(f"error: {detail}", file=sys.stderr)
        return None
    return response.json()


def _emit(payload: dict, args: argparse.Namespace, human: Callable[[dict], None]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        human(payload)


def _ints(text: str, what: str) -> list[int]:
    try:
        return [int(piece) for piece in text.split(",") if piece.strip()]
    except ValueError:
        raise ValueError(f"malformed {what} {text!r}; expected comma-separated integers") from None


def _coeffs(values: list[int]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _subset(nodes: list[int]) -> str:
    return "{" + ",".join(str(n) for n in nodes) + "}"


def _render_text(args: argparse.Namespace, diagram: str, tag: list[int]) -> str | None:
    tag_text = ",".join(str(v) for v in tag)
    doc = _payload(
        args,
        lambda: handlers.handle_render(diagram, tag_text),
        path=f"/render/{diagram}",
        params={"tag": tag_text},
    )
    return None if doc is None else doc["text"]


def cmd_roots(args: argparse.Namespace) -> int:
    payload = _payload(args, lambda: handlers.handle_roots(args.diagram), path=f"/roots/{args.diagram}")
    if payload is None:
        return _EXIT_USAGE

    def human(doc: dict) -> None:
        if args.count:
            print(doc["count"])
            return
        print(f"{doc['diagram']}: {doc['count']} positive roots")
        for root in doc["roots"]:
            print(f"  {_coeffs(root['coeffs'])}  height {root['height']}")
        print(f"anticanonical: {_coeffs(doc['anticanonical'])}")

    _emit(payload, args, human)
    return _EXIT_OK


def cmd_table1(args: argparse.Namespace) -> int:
    payload = _payload(args, handlers.handle_table1, path="/table1")
    if payload is None:
        return _EXIT_USAGE

    def human(doc: dict) -> None:
        for row in doc["rows"]:
            mark = "ok" if row["agree"] else "MISMATCH"
            print(f"{row['diagram']:<4} j={row['j']:<2} m={row['m_count']:<4} closed={row['m_closed']:<4} {mark}")
        print("all rows agree" if doc["all_agree"] else "mismatch found")

    _emit(payload, args, human)
    return _EXIT_OK if payload["all_agree"] else _EXIT_MISMATCH


def _analyze_request(args: argparse.Namespace) -> AnalyzeRequest:
    inline = args.diagram or args.tag or args.cdim is not None or args.assume
    if args.request and inline:
        raise ValueError("a request file and inline flags are mutually exclusive")
    if args.request:
        try:
            with open(args.request, encoding="utf-8") as handle:
                document = json.load(handle)
        except OSError as exc:
            raise ValueError(f"cannot read request file: {exc}") from None
        except json.JSONDecodeError as exc:
            raise ValueError(f"request file is not valid JSON: {exc}") from None
        try:
            return AnalyzeRequest.model_validate(document)
        except Exception as exc:
            raise ValueError(f"bad request document: {exc}") from None
    if not args.diagram or args.tag is None:
        raise ValueError("analyze needs a request file or both --diagram and --tag")
    names = [name for entry in args.assume or [] for name in entry.split(",") if name]
    return AnalyzeRequest(
        diagram=args.diagram,
        tag=_ints(args.tag, "tag"),
        cdim=args.cdim,
        hypotheses=names,
    )


def cmd_analyze(args: argparse.Namespace) -> int:
    request = _analyze_request(args)
    payload = _payload(
        args,
        lambda: handlers.handle_analyze(request),
        method="POST",
        path="/analyze",
        body=request.model_dump(),
    )
    if payload is None:
        return _EXIT_USAGE

    def human(doc: dict) -> None:
        picture = _render_text(args, doc["request"]["diagram"], doc["request"]["tag"])
        if picture is not None:
            print(picture)
            print()
        verdict = doc["verdict"]
        print(f"verdict: {verdict['kind']}")
        if verdict["residuals"]:
            print("residuals:")
            for residual in verdict["residuals"]:
                print(f"  {residual['diagram']} {_coeffs(residual['tag'])}")
        conditions = doc["conditional_on"]
        asserted = [name for name, value in conditions.items() if value is True]
        if conditions["cdim"] is not None:
            asserted.append(f"cdim={conditions['cdim']}")
        print(f"assuming: {', '.join(asserted) if asserted else 'nothing'}")
        print("trace:")
        for step in doc["trace"]:
            stage = f"[{step['stage']}] " if step["stage"] else ""
            tag = _coeffs(step["tag"])
            print(f"  {step['step']}. {stage}{step['diagram']} {tag} {step['criterion']}: {step['output']}")

    _emit(payload, args, human)
    return _EXIT_OK


def cmd_split2tag(args: argparse.Namespace) -> int:
    degrees = _ints(args.degrees, "splitting")
    payload = _payload(
        args,
        lambda: handlers.handle_splitting_to_tag(SplittingIn(degrees=degrees)),
        method="POST",
        path="/convert/splitting-to-tag",
        body={"degrees": degrees},
    )
    if payload is None:
        return _EXIT_USAGE

    def human(doc: dict) -> None:
        print("degrees: " + ",".join(str(d) for d in degrees))
        print(f"diagram: {doc['diagram']}")
        print(f"tag: {_coeffs(doc['tag'])}")
        picture = _render_text(args, doc["diagram"], doc["tag"])
        if picture is not None:
            print(picture)

    _emit(payload, args, human)
    return _EXIT_OK


def cmd_tag2split(args: argparse.Namespace) -> int:
    tag = _ints(args.tag, "tag")
    payload = _payload(
        args,
        lambda: handlers.handle_tag_to_splitting(DiagramTagIn(diagram=args.diagram, tag=tag)),
        method="POST",
        path="/convert/tag-to-splitting",
        body={"diagram": args.diagram, "tag": tag},
    )
    if payload is None:
        return _EXIT_USAGE

    def human(doc: dict) -> None:
        print("degrees: " + ",".join(str(d) for d in doc["degrees"]) + f"  (normalized: {doc['normalization']})")
        print(f"diagram: {args.diagram}")
        print(f"tag: {_coeffs(tag)}")
        picture = _render_text(args, args.diagram, tag)
        if picture is not None:
            print(picture)

    _emit(payload, args, human)
    return _EXIT_OK


def cmd_order(args: argparse.Namespace) -> int:
    params = {"chain": args.chain} if args.chain else {}
    payload = _payload(
        args,
        lambda: handlers.handle_order(args.diagram, args.chain),
        path=f"/order/{args.diagram}",
        params=params,
    )
    if payload is None:
        return _EXIT_USAGE

    def human(doc: dict) -> None:
        print("chain: " + " < ".join(_subset(member) for member in doc["chain"]))
        for position, coeffs in enumerate(doc["roots"], start=1):
            print(f"  {position:>3}. {_coeffs(coeffs)}")
        if doc["breakpoints"]:
            print("breakpoints:")
            for bp in doc["breakpoints"]:
                print(f"  {_subset(bp['subset'])} at quotient index {bp['index']}")

    _emit(payload, args, human)
    return _EXIT_OK


def cmd_w0(args: argparse.Namespace) -> int:
    payload = _payload(args, lambda: handlers.handle_w0(args.diagram), path=f"/w0/{args.diagram}")
    if payload is None:
        return _EXIT_USAGE
    _emit(
        payload,
        args,
        lambda doc: print(f"length {doc['length']}: " + " ".join(str(i) for i in doc["word"])),
    )
    return _EXIT_OK


def cmd_render(args: argparse.Namespace) -> int:
    params = {"tag": args.tag} if args.tag else {}
    payload = _payload(
        args,
        lambda: handlers.handle_render(args.diagram, args.tag),
        path=f"/render/{args.diagram}",
        params=params,
    )
    if payload is None:
        return _EXIT_USAGE
    _emit(payload, args, lambda doc: print(doc["text"]))
    return _EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flagbundles",
        description="Reducibility analysis for tagged Dynkin diagrams.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="print the response document")
        p.add_argument("--url", help="base URL of a running service; default is in-process")

    p = sub.add_parser("roots", help="positive roots of a diagram")
    p.add_argument("diagram")
    p.add_argument("--count", action="store_true", help="print only the number of positive roots")
    common(p)
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("table1", help="node counts, closed form against direct count")
    common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("analyze", help="run the verdict pipeline")
    p.add_argument("request", nargs="?", help="JSON request file; alternative to the flags")
    p.add_argument("--diagram")
    p.add_argument("--tag", help="comma-separated tag values")
    p.add_argument("--cdim", type=int)
    p.add_argument(
        "--assume",
        action="append",
        metavar="HYPOTHESIS",
        help="hypothesis flag to assert (repeatable); rcc is shorthand for rationally_chain_connected",
    )
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("split2tag", help="tag a splitting type")
    p.add_argument("degrees", help="comma-separated degrees, weakly increasing")
    common(p)
    p.set_defaults(func=cmd_split2tag)

    p = sub.add_parser("tag2split", help="splitting type of a tagged chain")
    p.add_argument("diagram")
    p.add_argument("tag", help="comma-separated tag values")
    common(p)
    p.set_defaults(func=cmd_tag2split)

    p = sub.add_parser("order", help="admissible root ordering and filtration plan")
    p.add_argument("diagram")
    p.add_argument("--chain", help="subset chain, e.g. 1,3:1,2,3")
    common(p)
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("w0", help="reduced word for the longest Weyl element")
    p.add_argument("diagram")
    common(p)
    p.set_defaults(func=cmd_w0)

    p = sub.add_parser("render", help="draw a tagged diagram")
    p.add_argument("diagram")
    p.add_argument("--tag", help="comma-separated tag values; default all zero")
    common(p)
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
