"""Command-line entry point: ``negq <subcommand> ...``.

Exit status is 0 when everything asked for checks out, 1 when an identity
fails (a counterexample is printed), and 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from negq import ennola, gfq, partitions, qbinom, qtbinom, words
from negq.exactnum import LaurentPoly, divisors
from negq.partitions import Partition

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    params: dict = field(default_factory=dict)
    json: bool = False
    seed: int = 0
    budget: int | None = None


@dataclass
class Outcome:
    payload: dict
    text: list[str]
    ok: bool = True


def poly_json(p: LaurentPoly) -> dict:
    return {"text": str(p), "terms": p.to_json()}


# subcommand handlers -------------------------------------------------------------


def _words(cfg: RunConfig) -> Outcome:
    n, k = cfg.params["n"], cfg.params["k"]
    rows = []
    if cfg.params["admissible_only"]:
        for pw, st in words.enumerate_admissible(n, k):
            rows.append({"bits": str(pw.word), "mask": pw.mask(), "admissible": True,
                         "inv": st.inv, "a": st.a, "p": st.p})
    else:
        for w in words.enumerate_words(n, k):
            pw = words.pair_word(w)
            adm = words.is_admissible(pw)
            st = words.word_stats(pw) if adm else None
            rows.append({"bits": str(w), "mask": pw.mask(), "admissible": adm, "inv": words.inversions(w),
                         "a": st.a if st else None, "p": st.p if st else None})
    text = [f"{'bits':<{max(n, 4)}}  {'mask':<{max(2 * n, 4)}}  adm  inv  a  p"]
    for r in rows:
        dash = "-"
        text.append(f"{r['bits']:<{max(n, 4)}}  {r['mask']:<{max(2 * n, 4)}}  {'yes' if r['admissible'] else 'no ':<3}"
                    f"  {r['inv']:>3}  {r['a'] if r['a'] is not None else dash}  {r['p'] if r['p'] is not None else dash}")
    return Outcome({"n": n, "k": k, "words": rows}, text)


def _partitions(cfg: RunConfig) -> Outcome:
    n, k = cfg.params["n"], cfg.params["k"]
    if not 0 <= k <= n:
        raise UsageError(f"need 0 <= k <= n, got n={n}, k={k}")
    source = partitions.admissible_partitions(n, k) if cfg.params["admissible_only"] else partitions.partitions_in_box(n - k, k)
    rows = []
    for lam in source:
        adm = partitions.is_admissible_partition(lam, n, k)
        row = {"partition": list(lam.parts), "word": str(partitions.partition_to_word(lam, n, k)),
               "admissible": adm, "size": lam.size}
        if adm:
            a, p = partitions.partition_weight(lam, k)
            row.update(a=a, p=p, weight=partitions.weight_display(lam, k))
        rows.append(row)
    text = ["lambda  word      adm  wt"]
    for r in rows:
        lam = str(Partition(tuple(r["partition"])))
        text.append(f"{lam:<7} {r['word']:<9} {'yes' if r['admissible'] else 'no ':<4} {r.get('weight', '')}")
    return Outcome({"n": n, "k": k, "partitions": rows}, text)


def _qbinom(cfg: RunConfig) -> Outcome:
    n, k, at = cfg.params["n"], cfg.params["k"], cfg.params["at"]
    obj = qbinom.primed_qbinomial(n, k) if cfg.params["primed"] else qbinom.qbinomial(n, k)
    payload = {"n": n, "k": k, "primed": cfg.params["primed"], "poly": poly_json(obj.poly)}
    text = [str(obj.poly)]
    if at is not None:
        payload["value"] = obj(at)
        text.append(f"at q={at}: {obj(at)}")
    return Outcome(payload, text)


def _qt(cfg: RunConfig) -> Outcome:
    n, k, q = cfg.params["n"], cfg.params["k"], cfg.params["q"]
    qt = qtbinom.qt_binomial(n, k, q)
    payload = {"n": n, "k": k, "q": q, "poly": poly_json(qt.poly)}
    text = [str(qt.poly)]
    if cfg.params["x_poly"] or cfg.params["eval_order"] is not None:
        xp = qtbinom.build_X(n, k, q)
        payload["x"] = {"E": xp.E, "poly": poly_json(xp.poly)}
        if cfg.params["x_poly"]:
            text.append(f"X(t) = {xp.poly}   (E = {xp.E})")
        A = cfg.params["eval_order"]
        if A is not None:
            value = qtbinom.evaluate_X_at_order(xp, A)
            payload["x"]["order"] = A
            payload["x"]["x_eval"] = value
            text.append(f"X at a primitive {A}-th root of unity: {value}")
    return Outcome(payload, text)


def _tower(cfg: RunConfig) -> gfq.FieldTower:
    p, e, n = cfg.params["p"], cfg.params["e"], cfg.params["n"]
    return gfq.build_tower(p, e, n)


def _gf_count(cfg: RunConfig) -> Outcome:
    tower = _tower(cfg)
    m, k = cfg.params["m"], cfg.params["k"]
    got = gfq.count_nondegenerate(tower, m, k)
    want = gfq.nondegenerate_formula(tower.q, tower.n, k, m)
    payload = {"q": tower.q, "n": tower.n, "m": m, "k": k, "count": got, "formula": want, "match": got == want}
    return Outcome(payload, [f"nondegenerate {k}-subspaces over GF({tower.q}^{2 * m}): {got}  formula: {want}"], got == want)


def _gf_csp(cfg: RunConfig) -> Outcome:
    from negq.verify import csp_rows

    tower = _tower(cfg)
    k, A = cfg.params["k"], cfg.params["order"]
    orders = [A] if A is not None else divisors(tower.q ** tower.n + 1)
    if A is not None and (tower.q ** tower.n + 1) % A:
        raise UsageError(f"order {A} does not divide q^n+1 = {tower.q ** tower.n + 1}")
    rows = csp_rows(tower.q, tower.n, k, tower, orders)
    text = ["order  fixed_count  x_eval  match"]
    text += [f"{r['order']:>5}  {r['fixed_count']:>11}  {r['x_eval']:>6}  {r['match']}" for r in rows]
    ok = all(r["match"] for r in rows)
    return Outcome({"q": tower.q, "n": tower.n, "k": k, "rows": rows}, text, ok)


def _gf_special(cfg: RunConfig) -> Outcome:
    q, n, k = cfg.params["q"], cfg.params["n"], cfg.params["k"]
    got = gfq.count_special_entry_subspaces(q, n, k)
    want = qbinom.primed_poly(n, k)(q)
    payload = {"q": q, "n": n, "k": k, "count": got, "primed_value": want, "match": got == want}
    return Outcome(payload, [f"special-entry {k}-subspaces of GF({q})^{n}: {got}  primed binomial: {want}"], got == want)


def _ennola_degrees(cfg: RunConfig) -> Outcome:
    n, at = cfg.params["n"], cfg.params["at"]
    rows = []
    for d in ennola.degree_polynomials(n):
        row = {"partition": list(d.partition.parts), "poly": poly_json(d.poly), "at_one": d.at(1)}
        if at is not None:
            row["at"] = d.at(at)
            row["unitary"] = d.unitary_degree(at)
        rows.append(row)
    text = []
    for r in rows:
        line = f"{str(Partition(tuple(r['partition']))):<8} {r['poly']['text']}"
        if at is not None:
            line += f"   [q={at}: {r['at']}, unitary: {r['unitary']}]"
        text.append(line)
    return Outcome({"n": n, "at": at, "degrees": rows}, text)


def _ennola_verify(cfg: RunConfig) -> Outcome:
    n, k, q = cfg.params["n"], cfg.params["k"], cfg.params["q"]
    rep = ennola.verify_index_identities(n, k, q)
    symbolic = ennola.verify_index_identities_symbolic(n, k)
    orders = ennola.group_orders(n, q)
    payload = {"n": n, "k": k, "q": q, "symmetric": rep.symmetric, "general_linear": rep.general_linear,
               "unitary": rep.unitary, "symbolic": symbolic,
               "orders": {"symmetric": orders.symmetric, "general_linear": orders.general_linear, "unitary": orders.unitary}}
    text = [f"|S_n| = {orders.symmetric}, |GL_n| = {orders.general_linear}, |U_n| = {orders.unitary}",
            f"symmetric: {rep.symmetric}  general linear: {rep.general_linear}  unitary: {rep.unitary}  symbolic: {symbolic}"]
    return Outcome(payload, text, rep.ok and symbolic)


def _verify_all(cfg: RunConfig) -> Outcome:
    from negq.verify import SuiteConfig, run_suite

    suite = SuiteConfig(max_n=cfg.params["max_n"], seed=cfg.seed, full=cfg.params["full"])
    stream = None if cfg.json else (lambda r: print(r.line(), flush=True))
    results = run_suite(suite, on_result=stream)
    ok = all(r.ok for r in results)
    payload = {"max_n": suite.max_n, "full": suite.full, "results": [r.to_json() for r in results], "ok": ok}
    text = [] if stream else [r.line() for r in results]
    text.append("all checks passed" if ok else "some checks FAILED")
    return Outcome(payload, text, ok)


HANDLERS = {
    "words enumerate": _words,
    "partitions list": _partitions,
    "qbinom": _qbinom,
    "qt": _qt,
    "gf count-nondeg": _gf_count,
    "gf csp": _gf_csp,
    "gf special-entries": _gf_special,
    "ennola degrees": _ennola_degrees,
    "ennola verify": _ennola_verify,
    "verify-all": _verify_all,
}


# argument parsing -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (recorded in JSON)")
    common.add_argument("--budget", type=int, default=None, help="enumeration cap (overrides NEGQ_BUDGET)")

    parser = argparse.ArgumentParser(prog="negq", description="Negative-q binomials: enumeration and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    def nk(p, k_required=True):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--k", type=int, required=k_required)

    w = sub.add_parser("words", help="binary words and their pairings")
    wsub = w.add_subparsers(dest="action", required=True)
    we = wsub.add_parser("enumerate", parents=[common])
    nk(we)
    we.add_argument("--admissible-only", action="store_true")

    pa = sub.add_parser("partitions", help="partitions in a box")
    psub = pa.add_subparsers(dest="action", required=True)
    pl = psub.add_parser("list", parents=[common])
    nk(pl)
    pl.add_argument("--admissible-only", action="store_true")

    qb = sub.add_parser("qbinom", parents=[common], help="Gaussian binomial")
    nk(qb)
    qb.add_argument("--primed", action="store_true")
    qb.add_argument("--at", type=int, default=None)

    qt = sub.add_parser("qt", parents=[common], help="(q,t)-binomial and X(t)")
    nk(qt)
    qt.add_argument("--q", type=int, required=True)
    qt.add_argument("--x-poly", action="store_true")
    qt.add_argument("--eval-order", type=int, default=None)

    gf = sub.add_parser("gf", help="finite-field enumerations")
    gsub = gf.add_subparsers(dest="action", required=True)
    for name in ("count-nondeg", "csp"):
        g = gsub.add_parser(name, parents=[common])
        g.add_argument("--p", type=int, required=True)
        g.add_argument("--e", type=int, default=1)
        nk(g)
        if name == "count-nondeg":
            g.add_argument("--m", type=int, default=1, help="scalar field GF(q^(2m)); k is then a dimension over it")
        else:
            g.add_argument("--order", type=int, default=None)
    gs = gsub.add_parser("special-entries", parents=[common])
    gs.add_argument("--q", type=int, required=True)
    nk(gs)

    en = sub.add_parser("ennola", help="degree polynomials and group orders")
    esub = en.add_subparsers(dest="action", required=True)
    ed = esub.add_parser("degrees", parents=[common])
    ed.add_argument("--n", type=int, required=True)
    ed.add_argument("--at", type=int, default=None)
    ev = esub.add_parser("verify", parents=[common])
    nk(ev)
    ev.add_argument("--q", type=int, required=True)

    va = sub.add_parser("verify-all", parents=[common], help="run the acceptance matrix")
    va.add_argument("--max-n", type=int, default=8)
    va.add_argument("--full", action="store_true", help="use the full stated ranges regardless of --max-n")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    command = ns.command if getattr(ns, "action", None) is None else f"{ns.command} {ns.action}"
    skip = {"command", "action", "json", "seed", "budget"}
    params = {k: v for k, v in vars(ns).items() if k not in skip}
    if ns.budget is not None and ns.budget <= 0:
        raise UsageError("--budget must be positive")
    return RunConfig(command, params, ns.json, ns.seed, ns.budget)


def dispatch(cfg: RunConfig) -> tuple[int, Outcome]:
    previous = os.environ.get("NEGQ_BUDGET")
    if cfg.budget is not None:
        os.environ["NEGQ_BUDGET"] = str(cfg.budget)
    try:
        outcome = HANDLERS[cfg.command](cfg)
    finally:
        if previous is None:
            os.environ.pop("NEGQ_BUDGET", None)
        else:
            os.environ["NEGQ_BUDGET"] = previous
    return (EXIT_OK if outcome.ok else EXIT_MISMATCH), outcome


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        status, outcome = dispatch(cfg)
    except (UsageError, ValueError, gfq.SizeBound, qtbinom.PreconditionViolated) as exc:
        print(f"negq: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.json:
        doc = {"command": cfg.command, "params": cfg.params, "seed": cfg.seed, "ok": outcome.ok, "result": outcome.payload}
        print(json.dumps(doc, sort_keys=True))
    else:
        print("\n".join(outcome.text))
    return status


if __name__ == "__main__":
    sys.exit(main())
