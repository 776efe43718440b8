"""Command line interface.

Exit codes: 0 success, 1 malformed input, 2 enumeration budget exceeded,
3 no witness found, 4 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings
from typing import Any, Sequence

from lcdhull import golden
from lcdhull.code import (
    DEFAULT_CODEWORD_BUDGET,
    LinearCode,
    hull,
    is_hermitian_lcd,
    is_lcd,
    min_distance,
)
from lcdhull.codefile import code_to_dict, read_code_file, write_code_file
from lcdhull.enumerators import (
    DEFAULT_SUBSET_BUDGET,
    binary_hull_invariant,
    ext_weight_enumerator,
    ext_weight_enumerator_oracle,
    ternary_hull_invariant,
    tutte,
    weight_enumerator,
)
from lcdhull.errors import (
    BudgetExceeded,
    InternalInconsistency,
    InvalidParameters,
    LcdHullError,
    NoWitnessFound,
)
from lcdhull.gf import prime_power
from lcdhull.lcdize import DEFAULT_SEED, hlcdize, lcdize
from lcdhull.matfq import MatrixFq

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_BUDGET = 2
EXIT_NO_WITNESS = 3
EXIT_INTERNAL = 4


def gv_sum(n: int, k: int, d: int, q: int) -> tuple[int, int]:
    lhs = sum(math.comb(n - 1, i) * (q - 1) ** i for i in range(d - 1))
    return lhs, q ** (n - k)


def gv_check(n: int, k: int, d: int, q: int) -> bool:
    """Gilbert-Varshamov existence condition for an [n, k, d]_q code:

    sum_{i=0}^{d-2} C(n-1, i) (q-1)^i < q^(n-k).
    """
    if not (1 <= k <= n and 1 <= d <= n) or prime_power(q) is None:
        raise InvalidParameters(f"invalid parameters n={n}, k={k}, d={d}, q={q}")
    lhs, rhs = gv_sum(n, k, d, q)
    return lhs < rhs


def format_vector(v: Sequence[int], q: int) -> str:
    v = [int(x) for x in v]
    if q <= 10:
        return "".join(map(str, v))
    return " ".join(map(str, v))


def format_rows(M: MatrixFq) -> list[str]:
    return [format_vector(r, M.field.q) for r in M.tolist()]


class Report:
    """Collects printed lines and the mirrored JSON payload."""

    def __init__(self) -> None:
        self.lines: list[str] = []
        self.data: dict[str, Any] = {}

    def add(self, key: str, value: Any, line: str | None = None) -> None:
        self.data[key] = value
        if line is not None:
            self.lines.append(line)


def _load(args) -> tuple[LinearCode, str | None]:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return read_code_file(args.file)


def cmd_hull(args, rep: Report) -> int:
    C, _ = _load(args)
    flavor = "hermitian" if args.hermitian else "euclidean"
    hr = hull(C, flavor)
    lcd_word = "Hermitian LCD" if args.hermitian else "LCD"
    basis = format_rows(hr.hull_basis)
    verdict = lcd_word if hr.is_lcd else f"not {lcd_word}"
    rep.lines.append(f"h = {hr.h}; hull basis: {', '.join(basis) if basis else '(empty)'}; {verdict}")
    rep.add("flavor", flavor)
    rep.add("n", C.n)
    rep.add("k", C.k)
    rep.add("h", hr.h)
    rep.add("hull_basis", hr.hull_basis.tolist())
    rep.add("gram_rank", hr.gram_rank, f"gram_rank = {hr.gram_rank}")
    rep.add("is_lcd", hr.is_lcd)
    return EXIT_OK


def cmd_wenum(args, rep: Report) -> int:
    C, _ = _load(args)
    W = weight_enumerator(C, args.budget_codewords)
    rep.add("polynomial", str(W), str(W))
    return EXIT_OK


def cmd_extwenum(args, rep: Report) -> int:
    C, _ = _load(args)
    if args.oracle:
        W = ext_weight_enumerator_oracle(C, args.budget_codewords, args.budget_subsets)
    else:
        W = ext_weight_enumerator(C, args.budget_subsets)
    rep.add("method", "oracle" if args.oracle else "tutte")
    rep.add("polynomial", str(W), str(W))
    return EXIT_OK


def cmd_tutte(args, rep: Report) -> int:
    C, _ = _load(args)
    t = tutte(C, args.budget_subsets)
    rep.add("polynomial", str(t), str(t))
    return EXIT_OK


def cmd_invariant(args, rep: Report) -> int:
    C, _ = _load(args)
    q = C.field.q
    if q == 2:
        inv = binary_hull_invariant(C, ext_weight_enumerator(C, args.budget_subsets))
        rep.add("q", 2)
        rep.add("value", inv.value, f"W(1,-1,4) = {inv.value}")
        rep.add("h", inv.h, f"h = {inv.h}")
    elif q == 3:
        inv = ternary_hull_invariant(C, weight_enumerator(C, args.budget_codewords))
        rep.add("q", 3)
        rep.add("value", [inv.value.a, inv.value.b], f"W(1,j) = {inv.value}")
        rep.add("norm", inv.norm, f"N(W(1,j)) = {inv.norm}")
        rep.add("h", inv.h, f"h = {inv.h}")
    else:
        raise InvalidParameters(f"the invariant command needs q in {{2, 3}}, got {q}")
    return EXIT_OK


def cmd_lcdize(args, rep: Report) -> int:
    C, name = _load(args)
    run = hlcdize if args.hermitian else lcdize
    try:
        res = run(C, strategy=args.strategy, seed=args.seed)
    except NoWitnessFound as exc:
        rep.add("status", "no witness", f"no witness found: {exc}")
        return EXIT_NO_WITNESS
    check = is_hermitian_lcd if args.hermitian else is_lcd
    ok = check(res.result)
    rep.add("status", "ok")
    rep.add("witness_x", list(res.witness_x), f"witness x = {list(res.witness_x)}")
    rep.add("perm", list(res.transform.perm), f"transform perm = {list(res.transform.perm)}")
    rep.add("diag", list(res.transform.diag), f"transform diag = {list(res.transform.diag)}")
    rep.add("strategy", res.strategy, f"strategy = {res.strategy}")
    rep.add("evaluations", res.evaluations, f"evaluations = {res.evaluations}")
    rep.add("generator", res.result.G.tolist(), "result generator:")
    rep.lines.extend("  " + r for r in format_rows(res.result.G))
    word = "Hermitian LCD" if args.hermitian else "LCD"
    rep.add("verified", ok, f"verification: {word} {'confirmed' if ok else 'FAILED'}")
    if args.out:
        write_code_file(args.out, res.result, (name or "code") + "-lcd")
        rep.add("written", args.out)
    return EXIT_OK if ok else EXIT_INTERNAL


def cmd_mindist(args, rep: Report) -> int:
    C, _ = _load(args)
    d = min_distance(C, args.budget_codewords)
    rep.add("d", d, f"d = {d}")
    return EXIT_OK


def cmd_gv(args, rep: Report) -> int:
    ok = gv_check(args.n, args.k, args.d, args.q)
    lhs, rhs = gv_sum(args.n, args.k, args.d, args.q)
    rep.add("lhs", lhs)
    rep.add("rhs", rhs)
    rep.add("satisfied", ok, f"sum = {lhs}, q^(n-k) = {rhs}")
    rep.lines.append("GV condition satisfied" if ok else "GV condition not satisfied")
    return EXIT_OK


def cmd_show(args, rep: Report) -> int:
    C, name = _load(args)
    rep.add("code", code_to_dict(C, name), json.dumps(code_to_dict(C, name)))
    return EXIT_OK


def cmd_verify_paper(args, rep: Report) -> int:
    rows = golden.golden_checks()
    width = max(len(r.name) for r in rows)
    for r in rows:
        rep.lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  {r.observed}")
    rep.add("checks", [r.__dict__ for r in rows])
    all_ok = all(r.passed for r in rows)
    rep.add("passed", all_ok, f"{sum(r.passed for r in rows)}/{len(rows)} checks passed")
    return EXIT_OK if all_ok else EXIT_INTERNAL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--budget-codewords", type=int, default=DEFAULT_CODEWORD_BUDGET,
                        help="max codewords to enumerate (default 2^26)")
    common.add_argument("--budget-subsets", type=int, default=DEFAULT_SUBSET_BUDGET,
                        help="max column subsets to enumerate (default 2^22)")
    common.add_argument("--threads", type=int, default=1,
                        help="worker cap; computations currently run on one thread")

    parser = argparse.ArgumentParser(prog="lcdhull", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("hull", cmd_hull, "hull dimension, basis, Gram rank and LCD verdict")
    p.add_argument("file")
    p.add_argument("--hermitian", action="store_true")
    add("wenum", cmd_wenum, "weight enumerator W(X,Y)").add_argument("file")
    p = add("extwenum", cmd_extwenum, "extended weight enumerator W(X,Y,T)")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true", help="use extension-code enumeration")
    add("tutte", cmd_tutte, "Tutte polynomial").add_argument("file")
    add("invariant", cmd_invariant, "hull dimension from W (q = 2 or 3)").add_argument("file")
    p = add("lcdize", cmd_lcdize, "monomial transform to an (Hermitian) LCD code")
    p.add_argument("file")
    p.add_argument("--hermitian", action="store_true")
    p.add_argument("--strategy", choices=("grid", "random"), default="random")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--out", help="write the resulting code file here")
    add("mindist", cmd_mindist, "minimum distance").add_argument("file")
    add("show", cmd_show, "print the canonical code file").add_argument("file")
    p = add("gv", cmd_gv, "Gilbert-Varshamov existence condition")
    for name in ("n", "k", "d", "q"):
        p.add_argument(name, type=int)
    add("verify-paper", cmd_verify_paper, "reproduce the golden (I3|I3) / (I3|J3) examples")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = Report()
    if args.threads < 1:
        code, err = EXIT_MALFORMED, "--threads must be >= 1"
    else:
        code, err = EXIT_OK, None
        try:
            code = args.func(args, rep)
        except BudgetExceeded as exc:
            code, err = EXIT_BUDGET, str(exc)
        except NoWitnessFound as exc:
            code, err = EXIT_NO_WITNESS, str(exc)
        except InternalInconsistency as exc:
            code, err = EXIT_INTERNAL, str(exc)
        except (LcdHullError, OSError, ValueError) as exc:
            code, err = EXIT_MALFORMED, str(exc)
    if err is not None:
        rep.add("error", err)
    if args.json:
        rep.data["exit_code"] = code
        print(json.dumps(rep.data, default=str))
    else:
        for line in rep.lines:
            print(line)
        if err is not None:
            print(f"error: {err}", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
