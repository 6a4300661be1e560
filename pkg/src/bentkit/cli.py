"""Command-line front end.

Subcommands: analyze, wht, anf, dual, verify, build <construction>.
Reports are JSON on stdout; truth tables travel as files in the
canonical format.  Exit codes: 0 ok, 2 malformed input file, 3 violated
construction premise, 4 oracle size cap exceeded, 1 anything else
(including oracle divergence).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import analysis, constructions, oracle, rand
from .core import (
    BooleanFunction,
    mobius,
    parse_truth_table,
    serialize_truth_table,
    walsh_transform,
)
from .errors import CapError, PremiseError, TruthTableFormatError
from .galois import GaloisField


def _load(path: str | None) -> BooleanFunction:
    if path is None:
        raise TruthTableFormatError("a required truth-table file flag is missing")
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise TruthTableFormatError(f"cannot read {path}: {exc}") from exc
    return parse_truth_table(text)


def _write(f: BooleanFunction, path: str | None) -> None:
    text = serialize_truth_table(f)
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def cmd_analyze(args) -> int:
    profile = analysis.analyze(_load(args.path))
    print(profile.to_json())
    return 0


def cmd_wht(args) -> int:
    f = _load(args.path)
    _emit({"n": f.n, "values": [int(v) for v in walsh_transform(f).values]})
    return 0


def cmd_anf(args) -> int:
    f = _load(args.path)
    p = mobius(f)
    terms = ["*".join(f"x{j}" for j in mono) if mono else "1" for mono in p.monomials()]
    _emit(
        {
            "n": f.n,
            "degree": p.degree,
            "degree_per_variable": [p.degree_of_variable(i) for i in range(1, f.n + 1)],
            "monomials": terms,
        }
    )
    return 0


def cmd_dual(args) -> int:
    _write(analysis.dual(_load(args.path)), args.output)
    return 0


def cmd_verify(args) -> int:
    report = oracle.VERIFIERS[args.property](_load(args.path))
    _emit(report.as_dict())
    return 0 if report.agreed else 1


# -- build ---------------------------------------------------------------


def _param_function(value, rng, n_random: int | None, label: str) -> BooleanFunction:
    """A function parameter: a truth-table path or the string "random"."""
    if value == "random":
        if n_random is None:
            raise PremiseError(f"cannot draw {label} at random: dimension unknown")
        return rand.random_function(n_random, rng)
    if isinstance(value, str):
        return _load(value)
    raise PremiseError(f"parameter {label} must be a file path or \"random\"")


def _param_map(
    value, rng, k: int | None, label: str, fix_zero: bool = False
) -> constructions.PermutationMap:
    if value == "random":
        if k is None:
            raise PremiseError(f"cannot draw {label} at random: set \"k\"")
        return rand.random_permutation(k, rng, fix_zero=fix_zero)
    if isinstance(value, list):
        return constructions.PermutationMap(value)
    raise PremiseError(f"parameter {label} must be an image list or \"random\"")


def _params(args) -> dict:
    if args.param_file is None:
        return {}
    return json.loads(Path(args.param_file).read_text())


def _element_pair(value, label: str) -> tuple[int, int]:
    """A pair of field elements; strings may use 0x.. hex notation."""
    try:
        a, b = value
        return (int(a, 0) if isinstance(a, str) else int(a),
                int(b, 0) if isinstance(b, str) else int(b))
    except (TypeError, ValueError) as exc:
        raise PremiseError(f"parameter {label} must be a pair of elements") from exc


def _summary(name: str, h: BooleanFunction, claims: dict, out: str | None) -> dict:
    return {"construction": name, "n": h.n, "output": out, "verified": claims}


def _bent_claims(h: BooleanFunction) -> dict:
    return {"bent": analysis.is_bent(h), "nonlinearity": analysis.nonlinearity(h)}


def _resilient_claims(h: BooleanFunction) -> dict:
    rep = analysis.resiliency_report(h)
    return {
        "resiliency": rep.resiliency,
        "ci_order": rep.ci_order,
        "nonlinearity": analysis.nonlinearity(h),
        "plateaued_order": analysis.plateaued_order(h),
    }


def cmd_build(args) -> int:
    rng = rand.XorShift64Star(args.seed)
    p = _params(args)
    name = args.construction
    cert = None

    if name == "direct-sum":
        f, g = _load(args.f), _load(args.g)
        h = constructions.direct_sum(f, g)
        nf, ng = analysis.nonlinearity(f), analysis.nonlinearity(g)
        claims = _resilient_claims(h)
        claims["nonlinearity_formula"] = (
            (1 << f.n) * ng + (1 << g.n) * nf - 2 * nf * ng
        )
    elif name == "indirect-sum":
        h = constructions.indirect_sum(
            _load(args.f1), _load(args.f2), _load(args.g1), _load(args.g2)
        )
        claims = _bent_claims(h)
    elif name == "restricted-indirect-sum":
        h = constructions.restricted_indirect_sum(
            _load(args.f), args.mu, _load(args.g), args.rho, args.variant
        )
        claims = _bent_claims(h)
    elif name == "mm":
        phi = _param_map(p.get("phi", "random"), rng, p.get("k"), "phi")
        u = _param_function(p.get("u", "random"), rng, phi.k, "u")
        h = constructions.mm_function(phi, u, require_bent=True)
        claims = _bent_claims(h)
    elif name == "psap":
        m = p["m"]
        theta = p.get("theta", "random")
        if theta == "random":
            theta = rand.random_balanced_field_table(m, rng)
        h = constructions.psap_bent(GaloisField(m), theta)
        claims = _bent_claims(h)
    elif name == "class-d":
        k = p["k"]
        phi = _param_map(p.get("phi", "random"), rng, k, "phi", fix_zero=True)
        e2 = constructions.LinearSubspace(k, p.get("e2", []))
        if p.get("e1", "auto") == "auto":
            image = constructions.LinearSubspace(k, [phi(v) for v in e2.members()])
            e1 = image.orthogonal()
        else:
            e1 = constructions.LinearSubspace(k, p["e1"])
        h = constructions.class_d_bent(phi, e1, e2)
        claims = _bent_claims(h)
    elif name == "mm-restricted-sum":
        phi = _param_map(p.get("phi", "random"), rng, p.get("k_f"), "phi")
        psi = _param_map(p.get("psi", "random"), rng, p.get("k_g"), "psi")
        u = _param_function(p.get("u", "random"), rng, phi.k, "u")
        v = _param_function(p.get("v", "random"), rng, psi.k, "v")
        h = constructions.mm_restricted_sum(phi, psi, args.mu, args.rho, u, v)
        claims = _bent_claims(h)
    elif name == "psap-restricted-sum":
        h = constructions.psap_restricted_sum(
            GaloisField(p["m_f"]),
            p["theta"],
            _element_pair(p["form_f"], "form_f"),
            _element_pair(p["shift_f"], "shift_f"),
            GaloisField(p["m_g"]),
            p["vartheta"],
            _element_pair(p["form_g"], "form_g"),
            _element_pair(p["shift_g"], "shift_g"),
        )
        claims = _bent_claims(h)
    elif name == "class-d-restricted-sum":
        kf, kg = p["k_f"], p["k_g"]
        phi = _param_map(p.get("phi", "random"), rng, kf, "phi", fix_zero=True)
        psi = _param_map(p.get("psi", "random"), rng, kg, "psi", fix_zero=True)

        def side(pm, key_e2, key_e1, k):
            e2 = constructions.LinearSubspace(k, p.get(key_e2, []))
            if p.get(key_e1, "auto") == "auto":
                img = constructions.LinearSubspace(k, [pm(v) for v in e2.members()])
                return img.orthogonal(), e2
            return constructions.LinearSubspace(k, p[key_e1]), e2

        e1, e2 = side(phi, "e2", "e1", kf)
        xi1, xi2 = side(psi, "xi2", "xi1", kg)
        h = constructions.class_d_restricted_sum(
            phi, e1, e2, psi, xi1, xi2, args.mu, args.rho
        )
        claims = _bent_claims(h)
    elif name == "rothaus":
        h = constructions.rothaus(_load(args.f1), _load(args.f2), _load(args.f3))
        claims = _bent_claims(h)
    elif name == "rothaus-restricted-sum":
        h = constructions.rothaus_restricted_sum(
            _load(args.f1), _load(args.f2), _load(args.f3),
            _load(args.g1), _load(args.g2), _load(args.g3),
        )
        claims = _bent_claims(h)
    elif name == "generalized-indirect-sum":
        h = constructions.generalized_indirect_sum(
            _load(args.f1), _load(args.f2), _load(args.f3),
            _load(args.g1), _load(args.g2), _load(args.g3),
            mode=args.mode, t=args.t, k=args.k,
        )
        claims = _bent_claims(h) if args.mode == "bent" else _resilient_claims(h)
    elif name == "resilient-indirect-sum":
        triple = constructions.BentTriple.certify(
            _load(args.f1), _load(args.f2), _load(args.f3)
        )
        h, cert = constructions.resilient_indirect_sum(
            triple, _load(args.g1), _load(args.g2), _load(args.g3), args.k
        )
        claims = _resilient_claims(h)
    elif name == "resilient-indirect-sum-pair":
        triple = constructions.BentTriple.certify(
            _load(args.f1), _load(args.f2), _load(args.f3)
        )
        h, cert = constructions.resilient_indirect_sum_from_pair(
            triple, _load(args.p), _load(args.q), args.i, args.k
        )
        claims = _resilient_claims(h)
    else:
        raise PremiseError(f"unknown construction {name!r}")

    _write(h, args.output)
    out = _summary(name, h, claims, args.output)
    if cert is not None:
        out["certificate"] = cert.as_dict()
    _emit(out)
    return 0


_BUILD_NAMES = [
    "direct-sum", "indirect-sum", "restricted-indirect-sum", "mm", "psap",
    "class-d", "mm-restricted-sum", "psap-restricted-sum",
    "class-d-restricted-sum", "rothaus", "rothaus-restricted-sum",
    "generalized-indirect-sum", "resilient-indirect-sum",
    "resilient-indirect-sum-pair",
]


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bentkit")
    sub = ap.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full property profile as JSON")
    pa.add_argument("path")
    pa.set_defaults(func=cmd_analyze)

    pw = sub.add_parser("wht", help="Walsh spectrum as JSON")
    pw.add_argument("path")
    pw.set_defaults(func=cmd_wht)

    pn = sub.add_parser("anf", help="algebraic normal form as JSON")
    pn.add_argument("path")
    pn.set_defaults(func=cmd_anf)

    pd = sub.add_parser("dual", help="dual of a bent function")
    pd.add_argument("path")
    pd.add_argument("-o", "--output", default=None)
    pd.set_defaults(func=cmd_dual)

    pv = sub.add_parser("verify", help="fast path against brute-force oracle")
    pv.add_argument("--property", required=True, choices=sorted(oracle.VERIFIERS))
    pv.add_argument("path")
    pv.set_defaults(func=cmd_verify)

    pb = sub.add_parser("build", help="run a construction and certify the output")
    pb.add_argument("construction", choices=_BUILD_NAMES)
    pb.add_argument("-o", "--output", default=None)
    pb.add_argument("--seed", type=int, default=0)
    pb.add_argument("--param-file", default=None)
    pb.add_argument("--variant", default="00", choices=["00", "01", "10", "11"])
    pb.add_argument("--mu", type=int, default=1)
    pb.add_argument("--rho", type=int, default=1)
    pb.add_argument("--mode", default=None, choices=["resilient", "bent"])
    pb.add_argument("--t", type=int, default=None)
    pb.add_argument("--k", type=int, default=None)
    pb.add_argument("--i", type=int, default=1)
    for flag in ("--f", "--g", "--f1", "--f2", "--f3", "--g1", "--g2", "--g3",
                 "--p", "--q"):
        pb.add_argument(flag)
    pb.set_defaults(func=cmd_build)

    return ap


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except TruthTableFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (PremiseError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
