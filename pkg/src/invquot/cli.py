"""Batch command line: ``invquot COMMAND --group B3 --lambda 1,0,0 ...``.

Exit status is 0 on success, 1 on invalid input and 2 when a ``verify`` check
fails. ``--format json`` prints one object per invocation (an array for
``--all-mu-upto`` sweeps) with keys ``command``, ``inputs``, ``result``, ``checks``.
"""
from __future__ import annotations

import argparse
import itertools
import json
import re
import sys
from math import prod
from typing import Any

from . import quotcone
from .classify import GroupSpec, classify_quot, scan_dominant_roots, tangent_bound
from .reps import decompose_alternating, dim, mult_alternating, weights
from .rootsys import SimpleType, build, weyl_order
from .tensor import decompose
from .weyl import DEFAULT_WEYL_CAP, WeylCapExceeded, default_cap

LEMMAS = ("211", "212", "214", "q1", "q2", "s2")


class InputError(ValueError):
    pass


# ---------------------------------------------------------------------------
# grammar

def parse_group(text: str) -> GroupSpec:
    """``FACTOR ("x" FACTOR)*`` with ``FACTOR = LETTER RANK``, e.g. ``A2xB3``."""
    if text is None:
        raise InputError("--group is required")
    factors = []
    pos = 0
    for chunk in re.split(r"([xX])", text):
        if chunk in ("x", "X"):
            pos += 1
            continue
        tok = chunk.strip()
        where = pos + len(chunk) - len(chunk.lstrip())
        if not re.fullmatch(r"[A-Ga-g]\d+", tok):
            raise InputError(f"bad group factor {tok!r} at position {where}")
        try:
            factors.append(SimpleType.parse(tok))
        except ValueError as exc:
            raise InputError(f"{exc} (factor {tok!r} at position {where})") from None
        pos += len(chunk)
    return GroupSpec(tuple(factors))


def format_group(g: GroupSpec) -> str:
    return str(g)


def parse_weight(text: str, g: GroupSpec, name: str) -> tuple[tuple[int, ...], ...]:
    """Comma-separated integers per factor, factors separated by ``;``."""
    if text is None:
        raise InputError(f"--{name} is required")
    parts = text.split(";")
    if len(parts) != len(g.factors):
        raise InputError(f"--{name} {text!r}: expected {len(g.factors)} ';'-separated "
                         f"components for {g}, got {len(parts)}")
    out = []
    offset = 0
    for part, t in zip(parts, g.factors):
        coords = []
        sub = 0
        for tok in part.split(","):
            where = offset + sub
            try:
                coords.append(int(tok))
            except ValueError:
                raise InputError(f"--{name}: bad integer {tok.strip()!r} at position {where}") from None
            sub += len(tok) + 1
        if len(coords) != t.rank:
            raise InputError(f"--{name}: component {part!r} at position {offset} has "
                             f"{len(coords)} entries but {t} has rank {t.rank}")
        out.append(tuple(coords))
        offset += len(part) + 1
    return tuple(out)


def format_weight(w) -> str:
    return ";".join(",".join(str(x) for x in part) for part in w)


def _dominant_check(w, name):
    for part in w:
        if min(part) < 0:
            raise InputError(f"--{name} {format_weight(w)} is not dominant")


def _single(g: GroupSpec, command: str):
    if len(g.factors) != 1:
        raise InputError(f"{command} needs a simple group, got {g}")
    return build(g.factors[0])


def _mu_sweep(g: GroupSpec, k: int):
    ranges = [itertools.product(range(k + 1), repeat=t.rank) for t in g.factors]
    return [tuple(combo) for combo in itertools.product(*[list(r) for r in ranges])]


def _dec_json(dec) -> list:
    return [{"weight": list(k), "mult": v} for k, v in dec.items()]


# ---------------------------------------------------------------------------
# commands; each returns (inputs, result, checks, ok)

def _product_decompose(g, lam, mu):
    parts = [decompose(build(t), l, m) for t, l, m in zip(g.factors, lam, mu)]
    out = {}
    for combo in itertools.product(*[list(p.items()) for p in parts]):
        key = tuple(k for k, _ in combo)
        out[key] = prod(c for _, c in combo)
    return dict(sorted(out.items(), reverse=True))


def _product_dim(g, lam):
    return prod(dim(build(t), l) for t, l in zip(g.factors, lam))


def cmd_dim(a):
    g = parse_group(a.group)
    lam = parse_weight(a.lam, g, "lambda")
    _dominant_check(lam, "lambda")
    return {"group": str(g), "lambda": format_weight(lam)}, _product_dim(g, lam), {}, True


def cmd_weights(a):
    g = parse_group(a.group)
    rs = _single(g, "weights")
    (lam,) = parse_weight(a.lam, g, "lambda")
    _dominant_check([lam], "lambda")
    ws = weights(rs, lam)
    result = [{"weight": list(k), "mult": v} for k, v in sorted(ws.items(), reverse=True)]
    checks = {"total_equals_dim": sum(ws.values()) == dim(rs, lam)}
    return {"group": str(g), "lambda": format_weight([lam])}, result, checks, True


def _oracle_checks(g, lam, mu, dec, cap):
    checks = {"dimension_conserved":
              sum(c * _product_dim(g, k) for k, c in dec.items())
              == _product_dim(g, lam) * _product_dim(g, mu)}
    if all(weyl_order(t) <= cap for t in g.factors):
        oracle = {}
        parts = [decompose_alternating(build(t), l, m, cap)
                 for t, l, m in zip(g.factors, lam, mu)]
        for combo in itertools.product(*[list(p.items()) for p in parts]):
            oracle[tuple(k for k, _ in combo)] = prod(c for _, c in combo)
        checks["oracle_agrees"] = oracle == dec
    else:
        checks["oracle_agrees"] = "skipped: Weyl group above cap"
    return checks


def cmd_decompose(a):
    g = parse_group(a.group)
    lam = parse_weight(a.lam, g, "lambda")
    mu = parse_weight(a.mu, g, "mu")
    _dominant_check(lam, "lambda")
    _dominant_check(mu, "mu")
    dec = _product_decompose(g, lam, mu)
    checks = _oracle_checks(g, lam, mu, dec, a.weyl_cap)
    result = [{"weight": format_weight(k), "mult": v} for k, v in dec.items()]
    return ({"group": str(g), "lambda": format_weight(lam), "mu": format_weight(mu)},
            result, checks, True)


def cmd_mult(a):
    g = parse_group(a.group)
    lam = parse_weight(a.lam, g, "lambda")
    mu = parse_weight(a.mu, g, "mu")
    nu = parse_weight(a.nu, g, "nu")
    for w, name in ((lam, "lambda"), (mu, "mu"), (nu, "nu")):
        _dominant_check(w, name)
    dec = _product_decompose(g, lam, mu)
    value = dec.get(nu, 0)
    checks = {}
    if all(weyl_order(t) <= a.weyl_cap for t in g.factors):
        oracle = prod(mult_alternating(build(t), l, m, n, a.weyl_cap)
                      for t, l, m, n in zip(g.factors, lam, mu, nu))
        checks["oracle_agrees"] = oracle == value
    else:
        checks["oracle_agrees"] = "skipped: Weyl group above cap"
    inputs = {"group": str(g), "lambda": format_weight(lam), "mu": format_weight(mu),
              "nu": format_weight(nu)}
    return inputs, value, checks, True


def cmd_graded(a):
    g = parse_group(a.group)
    rs = _single(g, "graded")
    (lam,) = parse_weight(a.lam, g, "lambda")
    (mu,) = parse_weight(a.mu, g, "mu")
    _dominant_check([lam, mu], "lambda/mu")
    gm = quotcone.graded_module(rs, lam, mu, a.which, a.degree_bound)
    defect = quotcone.exactness_defect(rs, lam, mu, a.degree_bound)
    result = [{"degree": m, "decomposition": _dec_json(d)} for m, d in enumerate(gm.per_degree)]
    inputs = {"group": str(g), "lambda": format_weight([lam]), "mu": format_weight([mu]),
              "which": gm.which, "degree_bound": a.degree_bound}
    return inputs, result, {"exact": all(not d for d in defect)}, True


def cmd_hilbert(a):
    g = parse_group(a.group)
    rs = _single(g, "hilbert")
    (lam,) = parse_weight(a.lam, g, "lambda")
    (mu,) = parse_weight(a.mu, g, "mu")
    (nu,) = parse_weight(a.nu, g, "nu")
    _dominant_check([lam, mu, nu], "lambda/mu/nu")
    h = quotcone.HilbertFunction(rs, lam, mu)
    inputs = {"group": str(g), "lambda": format_weight([lam]), "mu": format_weight([mu]),
              "nu": format_weight([nu])}
    return inputs, h(nu), {"degree": quotcone.hilbert_degree(h, nu)}, True


def cmd_tangent(a):
    g = parse_group(a.group)
    lam = parse_weight(a.lam, g, "lambda")
    mu = parse_weight(a.mu, g, "mu")
    _dominant_check(lam, "lambda")
    _dominant_check(mu, "mu")
    bound = tangent_bound(g, lam, mu)
    cls = classify_quot(g, lam, mu, with_witness=False)
    inputs = {"group": str(g), "lambda": format_weight(lam), "mu": format_weight(mu)}
    return inputs, bound, {"classifier_tangent_dim": cls.tangent_dim,
                           "bound_at_least_tangent_dim": bound >= cls.tangent_dim}, True


def _classify_one(g, lam, mu):
    cls = classify_quot(g, lam, mu)
    bound = tangent_bound(g, lam, mu)
    result = {"kind": cls.kind, "tangent_dim": cls.tangent_dim,
              "witness_factor": cls.witness_factor}
    if cls.witness_module is not None:
        result["witness_N"] = [{"degree": m, "decomposition": _dec_json(d)}
                               for m, d in enumerate(cls.witness_module.per_degree)]
    checks = {"tangent_upper_bound": bound,
              "bound_at_least_tangent_dim": bound >= cls.tangent_dim}
    inputs = {"group": str(g), "lambda": format_weight(lam), "mu": format_weight(mu)}
    return inputs, result, checks, True


def cmd_classify(a):
    g = parse_group(a.group)
    lam = parse_weight(a.lam, g, "lambda")
    _dominant_check(lam, "lambda")
    if a.all_mu_upto is not None:
        return [_classify_one(g, lam, mu) for mu in _mu_sweep(g, a.all_mu_upto)]
    mu = parse_weight(a.mu, g, "mu")
    _dominant_check(mu, "mu")
    return _classify_one(g, lam, mu)


def cmd_scan_roots(a):
    hits = scan_dominant_roots(a.max_rank)
    result = [{"type": str(t), "root": list(r)} for t, r in hits]
    only_b = all(t.family == "B" and all(x == 1 for x in r) for t, r in hits)
    return {"max_rank": a.max_rank}, result, {"only_type_B_vector_roots": only_b}, True


def _verify_one(lemma, rs, mu, degree_bound):
    if lemma == "211":
        reps = [quotcone.verify_lemma_211(rs, mu)]
    elif lemma == "212":
        reps = [quotcone.verify_lemma_212(rs, mu, m) for m in range(1, degree_bound + 1)]
    elif lemma == "214":
        reps = [quotcone.verify_lemma_214(rs, mu, degree_bound)]
    elif lemma == "q1":
        reps = [quotcone.verify_lemma_q1(rs, mu)]
    elif lemma == "q2":
        reps = [quotcone.verify_lemma_q2(rs, mu)]
    else:
        reps = [quotcone.verify_s2(rs)]
    ok = all(r.ok for r in reps)
    inputs = {"group": str(rs.type), "lemma": lemma}
    if mu is not None:
        inputs["mu"] = format_weight([mu])
    result = [r.as_dict() for r in reps]
    return inputs, result, {"ok": ok}, ok


def cmd_verify(a):
    g = parse_group(a.group)
    rs = _single(g, "verify")
    try:
        vec = quotcone.vector_weight(rs)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if a.lam is not None:
        (lam,) = parse_weight(a.lam, g, "lambda")
        if lam != vec:
            raise InputError(f"verify {a.lemma} fixes lambda = {format_weight([vec])} for {g}")
    needs_positive = a.lemma in ("214", "q2")
    if a.lemma == "s2":
        return _verify_one("s2", rs, None, a.degree_bound)
    if a.all_mu_upto is not None:
        mus = [m[0] for m in _mu_sweep(g, a.all_mu_upto)]
        if needs_positive:
            mus = [m for m in mus if m[-1] >= 1]
        return [_verify_one(a.lemma, rs, mu, a.degree_bound) for mu in mus]
    text = a.nu if a.lemma == "q1" and a.nu is not None else a.mu
    (mu,) = parse_weight(text, g, "mu")
    _dominant_check([mu], "mu")
    if needs_positive and mu[-1] < 1:
        raise InputError(f"lemma {a.lemma} needs the last coordinate of mu to be >= 1")
    return _verify_one(a.lemma, rs, mu, a.degree_bound)


COMMANDS = {
    "dim": cmd_dim,
    "weights": cmd_weights,
    "decompose": cmd_decompose,
    "mult": cmd_mult,
    "graded": cmd_graded,
    "hilbert": cmd_hilbert,
    "tangent": cmd_tangent,
    "classify": cmd_classify,
    "scan-roots": cmd_scan_roots,
    "verify": cmd_verify,
}


# ---------------------------------------------------------------------------
# output

def _table(command: str, inputs: dict, result: Any, checks: dict) -> str:
    lines = [f"{command}: " + " ".join(f"{k}={v}" for k, v in inputs.items())]
    if isinstance(result, list):
        for item in result:
            if isinstance(item, dict) and "weight" in item and "mult" in item:
                w = item["weight"]
                w = w if isinstance(w, str) else ",".join(map(str, w))
                lines.append(f"  {w:>20}  x{item['mult']}")
            elif isinstance(item, dict) and "degree" in item:
                parts = [f"V({','.join(map(str, d['weight']))})" + (f"^{d['mult']}" if d["mult"] > 1 else "")
                         for d in item["decomposition"]]
                lines.append(f"  m={item['degree']}: " + (" + ".join(parts) or "0"))
            else:
                lines.append(f"  {json.dumps(item, sort_keys=True)}")
    elif isinstance(result, dict):
        for k, v in result.items():
            if k == "witness_N":
                continue
            lines.append(f"  {k}: {v}")
    else:
        lines.append(f"  {result}")
    for k, v in checks.items():
        lines.append(f"  [check] {k}: {v}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group")
    common.add_argument("--lambda", dest="lam")
    common.add_argument("--mu")
    common.add_argument("--nu")
    common.add_argument("--degree-bound", type=int, default=quotcone.DEFAULT_DEGREE_BOUND)
    common.add_argument("--max-rank", type=int, default=8)
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--weyl-cap", type=int, default=None,
                        help=f"default {DEFAULT_WEYL_CAP}, or $INVQUOT_WEYL_CAP")
    common.add_argument("--all-mu-upto", type=int, default=None,
                        help="sweep every dominant mu with coordinates <= K")

    parser = argparse.ArgumentParser(prog="invquot", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "graded":
            p.add_argument("--which", choices=quotcone.MODULES, default="N",
                           type=str.upper)
        if name == "verify":
            p.add_argument("lemma", choices=LEMMAS)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if a.weyl_cap is None:
        a.weyl_cap = default_cap()
    try:
        out = COMMANDS[a.command](a)
    except (InputError, ValueError, WeylCapExceeded) as exc:
        print(f"invquot {a.command}: error: {exc}", file=sys.stderr)
        return 1
    sweep = isinstance(out, list)
    items = out if sweep else [out]
    records = [{"command": a.command, "inputs": i, "result": r, "checks": c}
               for i, r, c, _ in items]
    if a.format == "json":
        payload = records if sweep else records[0]
        print(json.dumps(payload, sort_keys=True))
    else:
        print("\n".join(_table(a.command, rec["inputs"], rec["result"], rec["checks"])
                        for rec in records))
    if a.command == "verify" and not all(ok for *_, ok in items):
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
