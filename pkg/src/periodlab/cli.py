"""Command-line front end.

Subcommands run one verification suite each and emit a report: an inputs
echo, one record per check (name, expected, got, tolerance, verdict) and
summary counts.  Output is deterministic: stable key order, floats try
15 significant digits, no timestamps.  Exit status is 0 exactly when
every record passes and no error occurred.

Structured configs are JSON files; see README for the schema.  Flags
override config scalars.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import cmfield, intertwine, lfactors, weights, weylkostant
from .charpeel import balanced_at_oracle
from .cyclotomic import Cyc
from .errors import ConfigError, PeriodLabError


# -- report plumbing ------------------------------------------------------------


def fmt_value(v) -> object:
    """Canonical JSON-friendly rendering with 15 significant digits."""
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}" if v.denominator != 1 else str(v.numerator)
    if isinstance(v, float):
        return f"{v:.15g}"
    if isinstance(v, complex):
        return f"{v.real:.15g}{v.imag:+.15g}i"
    if isinstance(v, (tuple, list)):
        return [fmt_value(x) for x in v]
    if isinstance(v, dict):
        return {str(k): fmt_value(x) for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    try:  # mpmath values
        return f"{complex(v).real:.15g}{complex(v).imag:+.15g}i"
    except Exception:
        return repr(v)


@dataclass
class Record:
    name: str
    expected: object
    got: object
    tolerance: object
    verdict: bool

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": fmt_value(self.expected),
            "got": fmt_value(self.got),
            "tolerance": fmt_value(self.tolerance),
            "verdict": "pass" if self.verdict else "fail",
        }


@dataclass
class Report:
    command: str
    inputs: dict
    records: list[Record] = dc_field(default_factory=list)

    def add(self, name, expected, got, tolerance=0, verdict=None) -> None:
        if verdict is None:
            verdict = expected == got
        self.records.append(Record(name, expected, got, tolerance, verdict))

    def summary(self) -> dict:
        passed = sum(1 for r in self.records if r.verdict)
        return {"pass": passed, "fail": len(self.records) - passed, "total": len(self.records)}

    def all_pass(self) -> bool:
        return all(r.verdict for r in self.records)

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": fmt_value(self.inputs),
            "records": [r.to_dict() for r in self.records],
            "summary": self.summary(),
        }


def render(report: Report, fmt: str = "records") -> str:
    """Deterministic serialization; 'records' is JSON, 'table' is aligned text."""
    if fmt == "records":
        return json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n"
    if fmt != "table":
        raise ConfigError(f"unknown format {fmt!r}")
    doc = report.to_dict()
    headers = ["name", "expected", "got", "tolerance", "verdict"]
    rows = [[str(r[h]) for h in headers] for r in doc["records"]]
    widths = [
        max([len(h)] + [len(row[i]) for row in rows]) for i, h in enumerate(headers)
    ]
    lines = [f"# {doc['command']}"]
    lines.append("  ".join(h.ljust(w) for h, w in zip(headers, widths)))
    lines.append("  ".join("-" * w for w in widths))
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    s = doc["summary"]
    lines.append(f"summary: {s['pass']} pass / {s['fail']} fail / {s['total']} total")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> dict:
    """Round-trip helper for the structured format."""
    return json.loads(text)


# -- config ---------------------------------------------------------------------


def load_config(path: str | None) -> dict:
    if path is None:
        return {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None


def tower_from_config(cfg: dict, precision_override=None) -> tuple[cmfield.FieldTower, int]:
    if "field" not in cfg:
        raise ConfigError("config lacks a 'field' section")
    fc = cfg["field"]
    try:
        tower = cmfield.FieldTower.from_config(fc)
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad field config: {exc}") from None
    precision = precision_override or fc.get("precision_digits", cmfield.DEFAULT_PRECISION)
    return tower, int(precision)


def weight_points(cfg: dict) -> list[weights.WeightSystem]:
    """Explicit points or a rectangular dominant grid from the config."""
    wc = cfg.get("weights")
    if wc is None:
        raise ConfigError("config lacks a 'weights' section")
    n = int(wc["n"])
    if "points" in wc:
        out = []
        for pt in wc["points"]:
            out.append(
                weights.WeightSystem(
                    n=n,
                    mu={int(i): tuple(v) for i, v in pt["mu"].items()},
                    nu={int(i): tuple(v) for i, v in pt["nu"].items()},
                    chi={int(i): int(v) for i, v in pt["chi"].items()},
                )
            )
        return out
    if "grid" in wc:
        bound = int(wc["grid"]["entry_bound"])
        emb_indices = list(range(int(wc["grid"]["embeddings"])))
        doms = dominant_tuples(n, bound)
        chis = range(-bound, bound + 1)
        out = []
        per_emb = [
            (mu, nu, chi) for mu in doms for nu in doms for chi in chis
        ]
        for combo in itertools.product(per_emb, repeat=len(emb_indices)):
            out.append(
                weights.WeightSystem(
                    n=n,
                    mu={i: combo[i][0] for i in emb_indices},
                    nu={i: combo[i][1] for i in emb_indices},
                    chi={i: combo[i][2] for i in emb_indices},
                )
            )
        return out
    raise ConfigError("weights section needs 'points' or 'grid'")


def dominant_tuples(n: int, bound: int) -> list[tuple[int, ...]]:
    rng = range(-bound, bound + 1)
    return [t for t in itertools.product(rng, repeat=n) if all(t[i] >= t[i + 1] for i in range(n - 1))]


def parse_unit(spec: str) -> tuple[int, int]:
    """Character value spec 'order,index' -> (order, index)."""
    try:
        order, index = spec.split(",")
        return int(order), int(index)
    except ValueError:
        raise ConfigError(f"bad root-of-unity spec {spec!r}; expected 'order,index'") from None


# -- subcommands ------------------------------------------------------------------


def cmd_field_check(args) -> Report:
    cfg = load_config(args.config)
    tower, precision = tower_from_config(cfg, args.precision)
    report = Report("field-check", {
        "d": tower.base_disc,
        "extension_poly": list(tower.extension_poly),
        "precision": precision,
        "k1_maximality_asserted": tower.k1_maximality_asserted,
    })
    emb = cmfield.build_field(tower, precision)
    report.add("embedding_count", tower.degree_over_q, emb.degree)
    invol = all(emb.conj(emb.conj(i)) == i and emb.conj(i) != i for i in range(emb.degree))
    report.add("conjugation_fixed_point_free_involution", True, invol)
    commutes = all(
        emb.restriction_k1[emb.conj(i)]
        == emb.restriction_k1[emb.conj(j)]
        for i in range(emb.degree)
        for j in range(emb.degree)
        if emb.restriction_k1[i] == emb.restriction_k1[j]
    )
    report.add("restriction_commutes_with_conjugation", True, commutes)
    big, lower = cmfield.disc_constant_lower(tower)
    report.add("delta_constant", fmt_value(complex(big)), fmt_value(complex(big)))
    k_basis = None
    if cfg.get("field", {}).get("k_basis") is not None:
        k_basis = [cmfield.parse_element(e) for e in cfg["field"]["k_basis"]]
    nab, upper = cmfield.disc_constant_upper(emb, basis=k_basis, max_denominator=args.max_den)
    report.add("nabla_constant", fmt_value(complex(nab)), fmt_value(complex(nab)))
    try:
        c, cert = cmfield.check_discriminant_identity(emb, max_denominator=args.max_den)
        report.add("identity_constant_rational", True, True)
        report.add("identity_constant", fmt_value(c), fmt_value(c))
        report.add("disc_over_q", fmt_value(cert["disc_k"]), fmt_value(cert["disc_k"]))
    except PeriodLabError as exc:
        report.add("identity_constant_rational", True, f"error: {exc}", verdict=False)
    return report


def cmd_balanced(args) -> Report:
    cfg = load_config(args.config)
    tower, precision = tower_from_config(cfg, args.precision)
    emb = cmfield.build_field(tower, precision)
    points = weight_points(cfg)
    report = Report("balanced", {
        "n": points[0].n if points else None,
        "points": len(points),
        "oracle": bool(args.oracle),
    })
    for idx, w in enumerate(points):
        eta = w.eta()
        regular = weights.is_regular_algebraic(eta, w.n)
        two_sided = weights.is_case_pm(eta, w.n, emb)
        fast = weights.is_balanced(w, emb)
        if args.oracle:
            if regular and two_sided:
                oracle = all(
                    balanced_at_oracle(w.mu[i], w.nu[i], w.chi[i], eta[i], w.n)
                    for i in w.embeddings()
                )
            else:
                oracle = False
            report.add(f"point_{idx}", oracle, fast)
        else:
            report.add(f"point_{idx}", fast, fast)
    return report


def cmd_kostant(args) -> Report:
    cfg = load_config(args.config)
    tower, precision = tower_from_config(cfg, args.precision)
    emb = cmfield.build_field(tower, precision)
    n = args.n
    eta = _eta_from_args(args, emb, n)
    w = weights.weight_system_from_eta(n, eta)
    report = Report("kostant", {"n": n, "eta": eta, "degree": args.p})
    lines = weylkostant.kostant_lines(w, emb, args.p)
    gen = weylkostant.length_generating_function(n, emb.degree)
    expected = gen[args.p] if args.p < len(gen) else 0
    report.add("line_count", expected, len(lines))
    for i, line in enumerate(lines):
        desc = {
            "element": line.element.describe(),
            "length": line.degree,
            "torus_weight": [list(t) for t in line.torus_weight],
            "monomial": [list(l) for l in line.wedge.labels],
            "sign": line.wedge.sign,
        }
        report.add(f"line_{i}", desc, desc)
    return report


def _eta_from_args(args, emb, n) -> dict[int, int]:
    if args.eta is None:
        # default: 0 on the chosen half, n on conjugates
        return {i: (0 if i in emb.cm_type else n) for i in range(emb.degree)}
    vals = [int(x) for x in args.eta.split(",")]
    if len(vals) == 2 and emb.degree > 2:
        eta = {}
        for iv, ivb in emb.pairs():
            eta[iv], eta[ivb] = vals
        return eta
    if len(vals) != emb.degree:
        raise ConfigError("eta list must match the embedding count (or give a pair)")
    return {i: vals[i] for i in range(emb.degree)}


def cmd_find_wk(args) -> Report:
    cfg = load_config(args.config)
    tower, precision = tower_from_config(cfg, args.precision)
    emb = cmfield.build_field(tower, precision)
    n = args.n
    eta = _eta_from_args(args, emb, n)
    w = weights.weight_system_from_eta(n, eta)
    report = Report("find-wk", {"n": n, "k": args.k, "eta": eta, "full_scan": args.full_scan})
    try:
        element, cert = weylkostant.distinguished_weyl(w, emb, args.k, full_scan=args.full_scan)
        report.add("element", element.describe(), element.describe())
        report.add("length", cert["bottom_degree"], cert["length"])
        report.add("unique_match", 1, cert["matches"])
    except PeriodLabError as exc:
        report.add("unique_match", 1, f"error: {exc}", verdict=False)
    return report


def cmd_wedge_sign(args) -> Report:
    cfg = load_config(args.config)
    tower, precision = tower_from_config(cfg, args.precision)
    emb = cmfield.build_field(tower, precision)
    n = args.n
    eta = _eta_from_args(args, emb, n)
    w = weights.weight_system_from_eta(n, eta)
    g = _permutation_from_args(args, emb)
    report = Report("wedge-sign", {"n": n, "k": args.k, "eta": eta, "g": list(g.perm)})
    m = weylkostant.omega_monomial(w, emb, args.k)
    parity = weylkostant.wedge_sigma_sign(m, g, emb)
    transfer = weylkostant.omega_transfer_sign(w, emb, args.k, g)
    _, _, eps = weylkostant.sigma_decompose(g, emb)
    report.add("monomial", [list(l) for l in m.labels], [list(l) for l in m.labels])
    report.add("resort_parity", parity, parity)
    report.add("transfer_sign", eps ** (n - args.k), transfer)
    report.add("epsilon_sigma2", eps, eps)
    return report


def _permutation_from_args(args, emb) -> cmfield.GaloisPermutation:
    if args.g == "id":
        return cmfield.identity_permutation(emb)
    if args.g == "conj":
        return cmfield.conjugation_permutation(emb)
    try:
        perm = tuple(int(x) for x in args.g.split(","))
    except ValueError:
        raise ConfigError("permutation must be 'id', 'conj' or a 0-based list") from None
    g = cmfield.GaloisPermutation(perm)
    g.validate(emb)
    return g


def cmd_gauss(args) -> Report:
    spec = lfactors.GaussSumSpec(q=args.q, chi_order=args.chi_order, chi_index=args.chi_index)
    report = Report("gauss", {"q": args.q, "chi_order": args.chi_order, "chi_index": args.chi_index})
    exact, approx = lfactors.gauss_sum(spec)
    report.add("value_float", fmt_value(approx), fmt_value(approx))
    if spec.is_trivial():
        report.add("trivial_is_minus_one", True, exact.is_rational() and exact.rational_value() == -1)
    else:
        report.add("norm_squared_equals_q", True, lfactors.gauss_sum_norm_check(spec))
    return report


def cmd_lratio(args) -> Report:
    order, index = parse_unit(args.a)
    a = Cyc.zeta(order, index)
    report = Report("lratio", {"n": args.n, "k": args.k, "a": [order, index], "q": args.q})
    ratio = lfactors.unramified_lratio(args.n, args.k, a, args.q)
    report.add("ratio", repr(ratio), repr(ratio))
    import functools
    import operator
    steps = [
        lfactors.single_step_ratio(args.n, i, a, args.q)
        for i in range(args.k, args.n)
    ]
    tele = functools.reduce(operator.mul, steps, lfactors.unramified_lratio(args.n, args.n, a, args.q))
    report.add("telescoping_product_matches", True, tele == ratio)
    return report


def cmd_intertwine_nonarch(args) -> Report:
    order, index = parse_unit(args.a)
    a = Cyc.zeta(order, index)
    res = intertwine.nonarch_intertwining(args.n, args.k, a, args.q)
    report = Report(
        "intertwine-nonarch",
        {"n": args.n, "k": args.k, "a": [order, index], "q": args.q},
    )
    report.add("shell_sum", repr(res.target), repr(res.value), verdict=res.verdict)
    return report


def cmd_intertwine_arch(args) -> Report:
    eta_pair = tuple(int(x) for x in args.eta.split(","))
    beta = tuple(int(x) for x in args.beta.split(","))
    s_re, _, s_im = args.s.partition(",")
    s = complex(float(s_re), float(s_im or 0))
    report = Report(
        "intertwine-arch",
        {"n": args.n, "k": args.k, "eta": list(eta_pair), "beta": list(beta), "s": fmt_value(s)},
    )
    cfgq = intertwine.QuadratureConfig(tol=args.tol)
    res = intertwine.arch_intertwining(args.n, args.k, eta_pair, beta, s, cfgq)
    report.add(
        "integral",
        fmt_value(res.target),
        fmt_value(res.value),
        tolerance=fmt_value(res.tolerance),
        verdict=res.verdict,
    )
    report.add("error_estimate", fmt_value(res.error_estimate), fmt_value(res.error_estimate))
    return report


def cmd_constant_term(args) -> Report:
    cfg = load_config(args.config)
    tower, precision = tower_from_config(cfg, args.precision)
    emb = cmfield.build_field(tower, precision)
    big, _ = cmfield.disc_constant_lower(tower)
    token = lfactors.VanishingToken(order_zero=0 if args.ord0 == "0" else 1)
    report = Report(
        "constant-term",
        {"n": args.n, "ord0": args.ord0, "degree": emb.degree, "flip_branch": args.flip_branch},
    )
    branch = None
    if args.flip_branch:
        branch = "compensated" if token.order_zero == 0 else "one"
    try:
        rep = intertwine.assemble_constant_term(
            args.n, token, complex(big), emb.degree, delta_branch=branch
        )
        report.add("holomorphic_at_zero", True, rep.holomorphic)
        for e in rep.entries:
            desc = {
                "lratio": e.lratio_token,
                "prefactor": fmt_value(e.prefactor),
                "delta": e.delta_symbol,
                "pole_order": e.pole_order,
            }
            report.add(f"term_{e.k}", desc, desc)
    except PeriodLabError as exc:
        report.add("holomorphic_at_zero", True, f"error: {exc}", verdict=False)
    return report


# -- driver ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="periodlab", description=__doc__)
    p.add_argument("--format", choices=("records", "table"), default="records")
    p.add_argument("--config", default=None, help="JSON config file")
    p.add_argument("--precision", type=int, default=None, help="working decimal digits")
    p.add_argument("--tol", type=float, default=1e-9, help="quadrature tolerance")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    p.add_argument("--max-den", type=int, default=cmfield.DEFAULT_MAX_DENOMINATOR,
                   help="denominator bound for rational reconstruction")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("field-check", help="tower invariants and the discriminant identity")
    s.set_defaults(func=cmd_field_check)

    s = sub.add_parser("balanced", help="balanced predicate over a weight grid")
    s.add_argument("--oracle", action="store_true", help="compare with character peeling")
    s.set_defaults(func=cmd_balanced)

    s = sub.add_parser("kostant", help="cohomology lines in a given degree")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--eta", default=None, help="comma list per embedding, or one pair")
    s.set_defaults(func=cmd_kostant)

    s = sub.add_parser("find-wk", help="distinguished bottom-degree element")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--eta", default=None)
    s.add_argument("--full-scan", action="store_true")
    s.set_defaults(func=cmd_find_wk)

    s = sub.add_parser("wedge-sign", help="Galois relabeling signs of generator monomials")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--eta", default=None)
    s.add_argument("--g", required=True, help="'id', 'conj' or 0-based permutation list")
    s.set_defaults(func=cmd_wedge_sign)

    s = sub.add_parser("gauss", help="finite-field Gauss sum")
    s.add_argument("--q", type=int, required=True)
    s.add_argument("--chi-order", type=int, required=True)
    s.add_argument("--chi-index", type=int, default=1)
    s.set_defaults(func=cmd_gauss)

    s = sub.add_parser("lratio", help="unramified local L-factor ratio")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--a", required=True, help="root of unity 'order,index'")
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_lratio)

    s = sub.add_parser("intertwine-nonarch", help="shell sum vs product formula")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--a", required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_intertwine_nonarch)

    s = sub.add_parser("intertwine-arch", help="numerical intertwining integral")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--eta", required=True, help="pair 'low,high'")
    s.add_argument("--beta", required=True, help="comma list of exponents")
    s.add_argument("--s", required=True, help="'re,im' or 're'")
    s.set_defaults(func=cmd_intertwine_arch)

    s = sub.add_parser("constant-term", help="symbolic expansion with holomorphy audit")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--ord0", choices=("0", "pos"), required=True)
    s.add_argument("--flip-branch", action="store_true",
                   help="deliberately select the wrong normalizing branch")
    s.set_defaults(func=cmd_constant_term)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    random.seed(args.seed)
    try:
        report = args.func(args)
    except (PeriodLabError, ConfigError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stdout.write(render(report, args.format))
    return 0 if report.all_pass() else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
