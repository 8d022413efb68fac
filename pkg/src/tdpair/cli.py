"""Command-line interface.

Subcommands: gen, verify, analyze, iso, conjectures, corpus.  Every command
writes one JSON document to standard output (``--text`` renders it as flat
``key: value`` lines).  Exit codes: 0 success, 1 semantic negative (axiom
failure, non-isomorphic, failing verdict), 2 usage or format error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import __version__
from .conjectures import FAILS, run_harness
from .constructions import onsager_tensor, parse_spec
from .core import (
    TDPair,
    default_orderings,
    krawtchouk_type,
    parameter_array,
    shape,
    shape_factorization,
    split_decomposition,
)
from .documents import DocumentError, pair_to_document, read_pair, write_pair
from .drinfeld import drinfeld_checks, drinfeld_poly
from .errors import BadParameter, ConstructionRejected, IrrationalSpectrum, TDPairError
from .forms import dagger_apply, invariant_form, iso_solver
from .linalg import Matrix, Poly, format_fraction

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _json_default(obj):
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, Matrix):
        return obj.to_strings()
    if isinstance(obj, Poly):
        return obj.to_strings()
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, default=_json_default, ensure_ascii=False)


def _flatten(doc, prefix=""):
    if isinstance(doc, dict):
        for k, v in doc.items():
            yield from _flatten(v, f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(doc, list) and doc and any(isinstance(x, (dict, list)) for x in doc) \
            and not all(isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x) for x in doc):
        for i, v in enumerate(doc):
            yield from _flatten(v, f"{prefix}[{i}]")
    else:
        yield prefix, json.dumps(doc, default=_json_default, ensure_ascii=False)


def emit(doc, text: bool = False) -> None:
    if text:
        for k, v in _flatten(json.loads(dumps(doc))):
            print(f"{k}: {v}")
    else:
        print(dumps(doc))


def _load(path) -> TDPair:
    try:
        return read_pair(path)
    except DocumentError as exc:
        raise UsageError(str(exc)) from None


# ---------------------------------------------------------------------------
# commands


def cmd_gen(args) -> int:
    try:
        pair = onsager_tensor(parse_spec(args.spec))
    except BadParameter as exc:
        raise UsageError(f"BadParameter: {exc}") from None
    except ConstructionRejected as exc:
        emit({"error": "ConstructionRejected", "message": str(exc),
              "verification": exc.report.to_dict() if exc.report else None}, args.text)
        return EXIT_NEGATIVE
    if args.output:
        try:
            write_pair(pair, args.output)
        except OSError as exc:
            raise UsageError(f"cannot write {args.output}: {exc}") from None
        emit({"written": str(args.output), "dim": pair.n, "provenance": pair.provenance}, args.text)
    else:
        emit(pair_to_document(pair), args.text)
    return EXIT_OK


def cmd_verify(args) -> int:
    pair = _load(args.path)
    try:
        report = pair.verification
    except IrrationalSpectrum as exc:
        emit({"passed": False, "error": "IrrationalSpectrum", "message": str(exc)}, args.text)
        return EXIT_NEGATIVE
    emit(report.to_dict(), args.text)
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def _section_shape(pair):
    sh = shape(pair)
    return {
        "rho": list(sh.rho),
        "symmetric": sh.is_symmetric(),
        "unimodal": sh.is_unimodal(),
        "factorizations": [list(f) for f in shape_factorization(sh)],
    }


def _section_split(pair):
    theta, theta_star = default_orderings(pair)
    sd = split_decomposition(pair, theta, theta_star)
    return {
        "theta": list(theta),
        "theta_star": list(theta_star),
        "dims": list(sd.dims),
        "U_bases": [[[format_fraction(x) for x in v] for v in u] for u in sd.U_bases],
    }


def _section_drinfeld(pair):
    if not krawtchouk_type(pair):
        return {"error": "not of Krawtchouk type"}
    P = drinfeld_poly(pair)
    checks = drinfeld_checks(pair)
    return {"coefficients": P.to_strings(), "text": str(P), **{k: v for k, v in checks.items() if k != "P"}}


def _section_form(pair):
    try:
        return {"M": invariant_form(pair).M.to_strings()}
    except TDPairError as exc:
        return {"error": type(exc).__name__, "message": str(exc)}


SECTIONS = {
    "shape": _section_shape,
    "split": _section_split,
    "param_array": lambda p: parameter_array(p).to_dict(),
    "drinfeld": _section_drinfeld,
    "form": _section_form,
}


def cmd_analyze(args) -> int:
    pair = _load(args.path)
    report = pair.verification
    if not report.passed:
        emit({"verification": report.to_dict()}, args.text)
        return EXIT_NEGATIVE
    wanted = [s for s in SECTIONS if getattr(args, s) or args.all]
    if not wanted:
        wanted = list(SECTIONS)
    info = krawtchouk_type(pair)
    doc = {"dim": pair.n, "diameter": pair.diameter, "krawtchouk": info.is_krawtchouk}
    for name in wanted:
        doc[name] = SECTIONS[name](pair)
    emit(doc, args.text)
    return EXIT_OK


def cmd_iso(args) -> int:
    p1, p2 = _load(args.path1), _load(args.path2)
    cert = iso_solver(p1, p2)
    if cert is None:
        emit({"result": "NonIsomorphic"}, args.text)
        return EXIT_NEGATIVE
    emit({"result": "Isomorphic", "certificate": cert.to_dict()}, args.text)
    return EXIT_OK


def cmd_conjectures(args) -> int:
    pair = _load(args.path)
    if not pair.verification.passed:
        emit({"verification": pair.verification.to_dict()}, args.text)
        return EXIT_NEGATIVE
    name = pair.provenance or str(args.path)
    reports = run_harness(pair, name)
    doc = {"instance": name, "reports": {r.conjecture: r.to_dict() for r in reports}}
    emit(doc, args.text)
    return EXIT_NEGATIVE if any(r.verdict == FAILS for r in reports) else EXIT_OK


# ---------------------------------------------------------------------------
# corpus


def _random_matrix(rng: random.Random, n: int) -> Matrix:
    return Matrix([[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(n)] for _ in range(n)])


def analyze_instance(spec_text: str, n_random: int = 5, seed: int = 0) -> dict:
    """Full per-instance analysis used by the corpus runner."""
    spec = parse_spec(spec_text)
    out: dict = {"spec": str(spec), "dim": spec.dim}
    hard: list[str] = []
    try:
        pair = onsager_tensor(spec)
    except ConstructionRejected as exc:
        out["error"] = str(exc)
        out["hard_failures"] = ["construction"]
        return out
    out["verification"] = pair.verification.to_dict()
    info = krawtchouk_type(pair)
    out["krawtchouk"] = info.is_krawtchouk
    d = pair.diameter
    expected = {Fraction(d - 2 * i): c for i, c in enumerate(spec.shape_poly().coeffs)}
    spectra_ok = pair.eigA.multiplicities() == expected and pair.eigAstar.multiplicities() == expected
    out["spectra_ok"] = spectra_ok
    if not spectra_ok:
        hard.append("spectra")
    facts = shape_factorization(shape(pair))
    member = list(spec.multiset()) in [list(f) for f in facts]
    out["shape"] = {"rho": list(shape(pair).rho), "factorizations": [list(f) for f in facts],
                    "generator_multiset_found": member}
    if not member:
        hard.append("shape_factorization")
    dc = drinfeld_checks(pair, spec)
    out["drinfeld"] = dc
    if not (dc["constant_is_one"] and dc["nonzero_at_one"]):
        hard.append("drinfeld")
    reports = run_harness(pair, str(spec))
    out["verdicts"] = {r.conjecture: r.verdict for r in reports}
    out["reports"] = {r.conjecture: r.to_dict() for r in reports}
    hard.extend(r.conjecture for r in reports if r.hard_failure)
    rng = random.Random(f"{seed}:{spec}")
    form = invariant_form(pair)
    dag_ok = True
    for _ in range(n_random):
        X, Y = _random_matrix(rng, pair.n), _random_matrix(rng, pair.n)
        dx, dy = dagger_apply(pair, X, form), dagger_apply(pair, Y, form)
        dag_ok &= dagger_apply(pair, dx, form) == X
        dag_ok &= dagger_apply(pair, X @ Y, form) == dy @ dx
    out["dagger_random_checks"] = {"count": n_random, "holds": dag_ok}
    if not dag_ok:
        hard.append("dagger")
    out["hard_failures"] = hard
    return out


def _pairwise_drinfeld(specs: list[str]) -> list[dict]:
    pairs = [onsager_tensor(s) for s in specs]
    polys = [drinfeld_poly(p).P for p in pairs]
    rows = []
    for i in range(len(pairs)):
        for j in range(i + 1, len(pairs)):
            same = polys[i] == polys[j]
            iso = iso_solver(pairs[i], pairs[j]) is not None
            rows.append({"first": specs[i], "second": specs[j], "equal_P": same, "isomorphic": iso,
                         "consistent": same == iso})
    return rows


def cmd_corpus(args) -> int:
    try:
        lines = Path(args.spec_list).read_text(encoding="utf-8").splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read {args.spec_list}: {exc}") from None
    specs = [ln.split("#", 1)[0].strip() for ln in lines]
    specs = [s for s in specs if s]
    for s in specs:
        try:
            parse_spec(s)
        except BadParameter as exc:
            raise UsageError(f"bad spec {s!r}: {exc}") from None
    if args.workers and args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(analyze_instance, specs))
    else:
        results = [analyze_instance(s) for s in specs]
    good = [r["spec"] for r in results if "error" not in r]
    pairwise = _pairwise_drinfeld(good)
    hard = {r["spec"]: r["hard_failures"] for r in results if r["hard_failures"]}
    if any(not row["consistent"] for row in pairwise):
        hard["pairwise_drinfeld"] = [f"{r['first']} vs {r['second']}" for r in pairwise if not r["consistent"]]
    if not args.full:
        for r in results:
            r.pop("reports", None)
    doc = {
        "instances": results,
        "pairwise_drinfeld": pairwise,
        "hard_failures": hard,
        "summary": {"instances": len(results), "hard_failure_count": len(hard)},
    }
    if args.output:
        Path(args.output).write_text(dumps(doc) + "\n", encoding="utf-8")
        emit({"written": str(args.output), "summary": doc["summary"], "hard_failures": hard}, args.text)
    else:
        emit(doc, args.text)
    return EXIT_NEGATIVE if hard else EXIT_OK


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tdpair", description="Exact toolkit for TD pairs of Krawtchouk type.")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--text", action="store_true", help="render as key: value lines instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="generate a pair from a spec like 1:2,1:3")
    p.add_argument("spec")
    p.add_argument("-o", "--output", help="write the pair document here instead of stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", parents=[common], help="check the four TD-pair axioms")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("analyze", parents=[common], help="shape, split data, Drinfel'd polynomial, form")
    p.add_argument("path")
    p.add_argument("--shape", action="store_true")
    p.add_argument("--split", action="store_true")
    p.add_argument("--param-array", dest="param_array", action="store_true")
    p.add_argument("--drinfeld", action="store_true")
    p.add_argument("--form", action="store_true")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("iso", parents=[common], help="isomorphism certificate between two pairs")
    p.add_argument("path1")
    p.add_argument("path2")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("conjectures", parents=[common], help="run the conjecture harness on one pair")
    p.add_argument("path")
    p.set_defaults(func=cmd_conjectures)

    p = sub.add_parser("corpus", parents=[common], help="analyse every spec listed in a file")
    p.add_argument("spec_list", help="file with one spec per line; '#' starts a comment")
    p.add_argument("-j", "--workers", type=int, default=1, help="worker processes (default 1)")
    p.add_argument("-o", "--output", help="write the full document here")
    p.add_argument("--full", action="store_true", help="include per-check witnesses")
    p.set_defaults(func=cmd_corpus)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"tdpair {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
