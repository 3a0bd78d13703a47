"""Command-line front end: ``superheis verify|compute|svn``.

Exit status: 0 when no check errors, 1 on check errors or bad input data,
2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import serialize as ser
from .grassmann import GeneratorRegistry, RegistryError
from .oddons import KindError
from .suites import SUITES, SuiteConfig, run_suite
from .superfunctions import FunctionSpace
from .transforms import BargmannContext, bargmann, fourier_wigner
from .unitary import svn_verdict

EXIT_OK, EXIT_ERROR, EXIT_USAGE = 0, 1, 2


def _read_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ser.SchemaError("$", f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _with_generators(value, registry: GeneratorRegistry) -> dict:
    return {"generators": list(registry.labels), "value": value}


# ---------------------------------------------------------------------------
# subcommands


def cmd_verify(args) -> int:
    if not 1 <= args.m <= 4:
        print("error: --m must be between 1 and 4", file=sys.stderr)
        return EXIT_USAGE
    G = ser.matrix_from_json(_read_json(args.G)) if args.G else None
    cfg = SuiteConfig(args.suite, m=args.m, G=G, seed=args.seed, samples=args.samples)
    rep = run_suite(cfg)
    doc = rep.to_dict()
    doc["config"] = {"suite": args.suite, "m": args.m, "seed": args.seed, "samples": args.samples,
                     "G": G.to_json() if G is not None else None}
    if args.json:
        _write(ser.dumps(doc), args.json)
    if not args.quiet:
        s = rep.summary()
        print(f"{args.suite}: {s['total']} checks, {s['pass']} pass, {s['exact-discrepancy']} exact-discrepancy, "
              f"{s['mismatch']} mismatch, {s['error']} error", file=sys.stderr if args.json == "-" else sys.stdout)
        for r in rep.by_verdict("error"):
            print(f"  error: {r.name}", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_ERROR


def _compute_fw(data) -> dict:
    m = data.get("m", 1)
    if isinstance(m, bool) or not isinstance(m, int) or not 1 <= m <= 4:
        raise ser.SchemaError("$.m", "m must be an integer between 1 and 4")
    sp = FunctionSpace.standard(m, "Pi", "Theta")
    f = ser.element_from_json(data["f"], sp.registry, "$.f")
    g = ser.element_from_json(data["g"], sp.registry, "$.g")
    for name, x in (("f", f), ("g", g)):
        if not sp.zeta_support_ok(x) or x.support() & sp.registry.role_mask("parameter"):
            raise ser.SchemaError(f"$.{name}", "functions may only use the zeta generators 1..m")
    return _with_generators(ser.element_to_json(fourier_wigner(f, g, sp)), sp.registry)


def _compute_bargmann(data) -> dict:
    G = ser.matrix_from_json(data.get("G", {}), "$.G")
    ctx = BargmannContext(G)
    f = ser.element_from_json(data["f"], ctx.registry, "$.f")
    if f.support() & ~ctx.registry.mask(ctx.space.zetas):
        raise ser.SchemaError("$.f", "functions may only use the zeta generators 1..m")
    out = _with_generators(ser.element_to_json(bargmann(f, ctx)), ctx.registry)
    out["fock"] = ser.element_to_json(ctx.to_abstract(bargmann(f, ctx)))
    return out


def _compute_pfaffian(data) -> str:
    from .superfunctions import pfaffian

    return str(pfaffian(ser.matrix_from_json(data)))


def _compute_oddon_mul(data) -> dict:
    gens = data.get("generators")
    if gens is None:
        n = data.get("n", 2)
        gens = [f"q{j}" for j in range(1, n + 1)]
    reg = GeneratorRegistry.from_groups(parameter=list(gens))
    r = ser.oddon_from_json(data["r"], reg, "$.r")
    s = ser.oddon_from_json(data["s"], reg, "$.s")
    return _with_generators(ser.oddon_to_json(r * s), reg)


COMPUTE = {
    "fw": _compute_fw,
    "bargmann": _compute_bargmann,
    "pfaffian": _compute_pfaffian,
    "oddon-mul": _compute_oddon_mul,
}


def cmd_compute(args) -> int:
    data = _read_json(args.input)
    if args.kind != "pfaffian":
        if not isinstance(data, dict):
            raise ser.SchemaError("$", "expected an object")
        for key in {"fw": ("f", "g"), "bargmann": ("f",), "oddon-mul": ("r", "s")}[args.kind]:
            if key not in data:
                raise ser.SchemaError("$", f"missing key {key!r}")
    result = COMPUTE[args.kind](data)
    _write(result + "\n" if isinstance(result, str) else ser.dumps(result), args.output)
    return EXIT_OK


def cmd_svn(args) -> int:
    form = ser.form_from_json(_read_json(args.form))
    print(svn_verdict(form))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="superheis", description="Exact checks for super-Heisenberg harmonic analysis.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run an identity-verification suite")
    v.add_argument("--suite", required=True, choices=sorted(SUITES) + ["all"])
    v.add_argument("--m", type=int, default=2, help="number of odd variables (1..4)")
    v.add_argument("--G", help="antisymmetric matrix JSON file")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=50, help="random cases per randomized law")
    v.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    v.add_argument("--quiet", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("compute", help="evaluate a transform or product on JSON input")
    c.add_argument("kind", choices=sorted(COMPUTE))
    c.add_argument("input", help="input JSON file ('-' for stdin)")
    c.add_argument("-o", "--output", help="output file (default stdout)")
    c.set_defaults(func=cmd_compute)

    s = sub.add_parser("svn", help="super Stone-von Neumann existence test")
    s.add_argument("--form", required=True, help="form JSON file")
    s.set_defaults(func=cmd_svn)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ser.SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, KeyError, ValueError, RegistryError, KindError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
