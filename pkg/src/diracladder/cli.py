"""Command-line front end: spectrum tables, wavefunction export, verification.

Output contract: CSV with `#`-prefixed metadata lines, or JSON with a single
{"meta": ..., "rows": ...} object.  Every run echoes the working precision
and the two convention flags in the metadata.  Exit codes: 0 success,
1 runtime/verification failure, 2 usage error, 3 physics error
(supercritical channel or excluded state).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

import mpmath

from . import __version__, precision, verify
from .channels import (
    bound_energy,
    make_channel,
    spectrum_table,
    zeta_from_charge,
)
from .errors import (
    DiracLadderError,
    DomainError,
    InvalidQuantumNumber,
    Supercritical,
    SupercriticalChannelWarning,
    UnphysicalState,
)
from .ladder import negative_branch_ground
from .oracle import compare_spectrum, divergence_check, truncated_norms
from .radial import build_solution, evaluate_on_grid, physical_normalize

# The two conventions that differ from a naive reading of the source
# relations; echoed in every output so downstream consumers know them.
CONVENTION_FLAGS = (
    "mu = zeta*E/kappa + 1/2 (half-unit offset; labels are mu = lambda + k)",
    "omega = j*(j+1) - zeta^2 (coupling enters squared)",
)


def _grid_type(text: str):
    try:
        lo_s, hi_s, n_s = text.split(",")
        lo, hi, n = float(lo_s), float(hi_s), int(n_s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"grid must be 'min,max,count', got {text!r}") from exc
    if not (0 < lo < hi) or n < 1:
        raise argparse.ArgumentTypeError(
            f"grid needs 0 < min < max and count >= 1, got {text!r}")
    return lo, hi, n


def _cutoffs_type(text: str):
    try:
        cuts = [float(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(
            f"cutoffs must be comma-separated radii, got {text!r}") from exc
    if len(cuts) < 2:
        raise argparse.ArgumentTypeError("need at least two cutoffs")
    return cuts


def _add_common(parser: argparse.ArgumentParser, with_output: bool = True):
    parser.add_argument("--mass", type=float, default=1.0,
                        help="particle mass in its own units (default 1)")
    parser.add_argument("--precision", type=int, default=None, metavar="BITS",
                        help="working precision in bits (default 53 or "
                             "DIRACLADDER_PRECISION)")
    if with_output:
        parser.add_argument("--format", choices=("csv", "json"), default="csv")
        parser.add_argument("--output", default=None, metavar="PATH",
                            help="write to a file instead of stdout")


def _add_coupling(parser: argparse.ArgumentParser):
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--zeta", type=str, default=None,
                       help="Coulomb coupling zeta = Z*alpha, directly")
    group.add_argument("--Z", type=str, default=None,
                       help="nuclear charge; zeta = Z*alpha")
    parser.add_argument("--alpha", type=str, default=None,
                        help="fine-structure constant used with --Z "
                             f"(default {precision.FINE_STRUCTURE_ALPHA})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diracladder",
        description="Algebraic radial Dirac-Coulomb bound states with an "
                    "independent numerical oracle.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form bound-state table")
    _add_coupling(p)
    p.add_argument("--j-max", type=float, default=0.5)
    p.add_argument("--k-max", type=int, default=3)
    p.add_argument("--no-collapse", action="store_true",
                   help="one row per (j, eps, k) state instead of merging "
                        "exactly degenerate eps pairs")
    p.add_argument("--si", action="store_true",
                   help="print energies in MeV instead of units of mass")
    p.add_argument("--electron-mass-mev", type=float,
                   default=precision.ELECTRON_MASS_MEV,
                   help="rest energy used by --si")
    _add_common(p)
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("wavefunction", help="evaluate (rho, F, G) on a grid")
    _add_coupling(p)
    p.add_argument("--j", type=float, required=True)
    p.add_argument("--eps", type=int, choices=(-1, 1), required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--grid", type=_grid_type, default=(0.01, 20.0, 200),
                   metavar="MIN,MAX,COUNT")
    p.add_argument("--log", action="store_true", help="log-spaced grid")
    p.add_argument("--normalize", choices=("algebraic", "physical"),
                   default="algebraic")
    _add_common(p)
    p.set_defaults(func=_cmd_wavefunction)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", action="append", choices=verify.SUITE_NAMES + ("all",),
                   default=None, help="repeatable; default all")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle-compare",
                       help="algebraic vs shooting energies, side by side")
    _add_coupling(p)
    p.add_argument("--j-max", type=float, default=0.5)
    p.add_argument("--k-max", type=int, default=2)
    _add_common(p)
    p.set_defaults(func=_cmd_oracle_compare)

    p = sub.add_parser("demo-divergence",
                       help="truncated-norm growth of the negative branch")
    _add_coupling(p)
    p.add_argument("--j", type=float, default=0.5)
    p.add_argument("--eps", type=int, choices=(-1, 1), default=-1)
    p.add_argument("--cutoffs", type=_cutoffs_type, default=(5.0, 10.0, 20.0, 40.0),
                   metavar="R1,R2,...")
    _add_common(p)
    p.set_defaults(func=_cmd_demo_divergence)
    return parser


# ---------------------------------------------------------------------------
# shared plumbing

def _resolve_precision(args) -> tuple[int, str]:
    if getattr(args, "precision", None) is not None:
        bits, source = args.precision, "command line"
    elif os.environ.get("DIRACLADDER_PRECISION"):
        bits, source = int(os.environ["DIRACLADDER_PRECISION"]), \
            "environment DIRACLADDER_PRECISION"
    else:
        bits, source = 53, "default"
    if bits < 53:
        raise DomainError(f"precision below 53 bits is not supported, got {bits}")
    return bits, source


def _parse_real(text: str, bits: int):
    try:
        return mpmath.mpf(text) if bits > 53 else float(text)
    except ValueError as exc:
        raise InvalidQuantumNumber(f"not a number: {text!r}") from exc


def _resolve_zeta(args, bits: int):
    alpha_text = args.alpha
    if args.zeta is not None:
        if alpha_text is not None:
            raise InvalidQuantumNumber("--alpha only makes sense with --Z")
        zeta = _parse_real(args.zeta, bits)
        return zeta, {"zeta": _fmt(zeta, bits)}
    alpha = (_parse_real(alpha_text, bits) if alpha_text is not None
             else precision.FINE_STRUCTURE_ALPHA)
    z = _parse_real(args.Z, bits)
    zeta = zeta_from_charge(z, alpha)
    return zeta, {"Z": _fmt(z, bits), "alpha": _fmt(alpha, bits),
                  "zeta": _fmt(zeta, bits)}


def _digits(bits: int) -> int:
    return max(17, int(bits / 3.3219280948873626) + 2)


def _fmt(x, bits: int = 53) -> str:
    if precision.is_extended(x):
        return mpmath.nstr(x, _digits(bits))
    return repr(float(x))


def _base_meta(args, bits: int, source: str) -> dict:
    return {
        "generator": f"diracladder {__version__}",
        "command": args.command,
        "precision_bits": bits,
        "precision_source": source,
        "conventions": list(CONVENTION_FLAGS),
    }


def _emit(meta: dict, header: list[str], text_rows: list[list[str]],
          value_rows: list[dict], args) -> None:
    if args.format == "json":
        payload = json.dumps({"meta": meta, "rows": value_rows}, indent=2)
    else:
        lines = [f"# {key} = {json.dumps(val) if isinstance(val, (list, dict)) else val}"
                 for key, val in meta.items()]
        lines.append(",".join(header))
        lines.extend(",".join(row) for row in text_rows)
        payload = "\n".join(lines)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)


def _json_value(x):
    return float(x)


# ---------------------------------------------------------------------------
# commands

def _cmd_spectrum(args) -> int:
    # every mpf creation, operation and formatting must sit inside the
    # precision context or mpmath silently rounds back to the ambient 53 bits
    bits, source = _resolve_precision(args)
    with mpmath.workprec(bits):
        zeta, coupling_meta = _resolve_zeta(args, bits)
        mass = _parse_real(repr(args.mass), bits)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            states = spectrum_table(zeta, args.j_max, args.k_max, mass=mass)
        skipped = [str(w.message) for w in caught
                   if issubclass(w.category, SupercriticalChannelWarning)]
        if not states:
            raise Supercritical(
                f"no subcritical channels with j <= {args.j_max} at zeta = {zeta}")

        scale = args.electron_mass_mev if args.si else None
        merged = []
        if args.no_collapse:
            merged = [(st, [st.channel.epsilon]) for st in states]
        else:
            index = {}
            for st in states:
                key = (precision.to_float(st.channel.j), st.k)
                if key in index:
                    merged[index[key]][1].append(st.channel.epsilon)
                else:
                    index[key] = len(merged)
                    merged.append((st, [st.channel.epsilon]))

        e_name = "E_mev" if args.si else "E_over_m"
        k_name = "kappa_mev" if args.si else "kappa"
        header = ["j", "eps", "k", "mu", e_name, k_name, "nu"]
        text_rows, value_rows = [], []
        for st, eps_list in merged:
            eps_list = sorted(eps_list)
            energy = st.energy / st.mass
            kappa = st.wavenumber / st.mass
            if scale is not None:
                energy, kappa = energy * scale, kappa * scale
            row = {
                "j": precision.to_float(st.channel.j),
                "eps": eps_list,
                "k": st.k,
                "mu": _json_value(st.mu),
                e_name: _json_value(energy),
                k_name: _json_value(kappa),
                "nu": _json_value(st.nu),
            }
            value_rows.append(row)
            text_rows.append([
                repr(row["j"]), "|".join(f"{e:+d}" for e in eps_list), str(st.k),
                _fmt(st.mu, bits), _fmt(energy, bits), _fmt(kappa, bits),
                _fmt(st.nu, bits),
            ])

        meta = _base_meta(args, bits, source)
        meta.update(coupling_meta)
        meta.update({
            "mass": _fmt(mass, bits),
            "j_max": args.j_max,
            "k_max": args.k_max,
            "energy_unit": "MeV" if args.si else "units of mass",
            "degenerate_eps_pairs_collapsed": not args.no_collapse,
            "rows": len(merged),
        })
        if args.si:
            meta["electron_mass_mev"] = args.electron_mass_mev
        if skipped:
            meta["skipped_channels"] = skipped
        if bits > 53:
            meta["json_values_are_float64"] = True
    _emit(meta, header, text_rows, value_rows, args)
    return 0


def _cmd_wavefunction(args) -> int:
    import numpy as np

    bits, source = _resolve_precision(args)
    with mpmath.workprec(bits):
        zeta, coupling_meta = _resolve_zeta(args, bits)
        mass = _parse_real(repr(args.mass), bits)
        channel = make_channel(args.j, args.eps, zeta)
        state = bound_energy(channel, args.k, mass=mass)
        solution = build_solution(state)
        if args.normalize == "physical":
            solution = physical_normalize(solution)
        lo, hi, n = args.grid
        grid = np.geomspace(lo, hi, n) if args.log else np.linspace(lo, hi, n)
        table = evaluate_on_grid(solution, grid)

        meta = _base_meta(args, bits, source)
        meta.update(coupling_meta)
        meta.update({
            "j": args.j, "eps": args.eps, "k": args.k,
            "mass": _fmt(mass, bits),
            "lambda": _fmt(channel.lam, bits),
            "mu": _fmt(state.mu, bits),
            "E_over_m": _fmt(state.energy / state.mass, bits),
            "kappa": _fmt(state.wavenumber / state.mass, bits),
            "rel_coeff": _fmt(solution.rel_coeff, bits),
            "normalization": solution.normalization,
            "amplitude": _fmt(solution.amplitude, bits),
            "grid": f"{args.grid[0]},{args.grid[1]},{args.grid[2]}"
                    + (" (log)" if args.log else ""),
        })

    header = ["rho", "F", "G"]
    text_rows = [[repr(float(r)), repr(float(f)), repr(float(g))]
                 for r, f, g in zip(table.rho, table.F, table.G)]
    value_rows = [{"rho": float(r), "F": float(f), "G": float(g)}
                  for r, f, g in zip(table.rho, table.F, table.G)]
    _emit(meta, header, text_rows, value_rows, args)
    return 0


def _cmd_verify(args) -> int:
    names = args.suite or ["all"]
    if "all" in names:
        names = list(verify.SUITE_NAMES)
    reports = verify.run_suites(names)
    ok = True
    for report in reports:
        print(report)
        ok = ok and report.all_passed
    print("ALL SUITES PASSED" if ok else "SUITE FAILURES PRESENT")
    return 0 if ok else 1


def _cmd_oracle_compare(args) -> int:
    bits, source = _resolve_precision(args)
    zeta, coupling_meta = _resolve_zeta(args, bits)
    rows = compare_spectrum(precision.to_float(zeta), args.j_max, args.k_max,
                            mass=args.mass)
    if not rows:
        raise Supercritical(
            f"no subcritical channels with j <= {args.j_max} at zeta = {zeta}")
    header = ["j", "eps", "k", "E_algebraic", "E_shooting", "rel_delta"]
    text_rows = [[repr(r["j"]), f"{r['epsilon']:+d}", str(r["k"]),
                  repr(r["energy_algebraic"]), repr(r["energy_shooting"]),
                  f"{r['rel_delta']:.3e}"] for r in rows]
    worst = max(r["rel_delta"] for r in rows)
    meta = _base_meta(args, bits, source)
    meta.update(coupling_meta)
    meta.update({"mass": repr(args.mass), "j_max": args.j_max,
                 "k_max": args.k_max, "worst_rel_delta": f"{worst:.3e}",
                 "agreement_threshold": "1e-06"})
    _emit(meta, header, text_rows, rows, args)
    return 0 if worst <= 1e-6 else 1


def _cmd_demo_divergence(args) -> int:
    bits, source = _resolve_precision(args)
    zeta, coupling_meta = _resolve_zeta(args, bits)
    channel = make_channel(args.j, args.eps, zeta)
    member = negative_branch_ground(channel.lam)
    cuts = list(args.cutoffs)
    norms = truncated_norms(member, cuts)
    report = divergence_check(member, cuts)

    header = ["R", "truncated_norm", "ratio_to_previous", "lower_bound_exp"]
    text_rows, value_rows = [], []
    prev = None
    for r, n in zip(cuts, norms):
        ratio = "" if prev is None else repr(float(n / prev[1]))
        bound = "" if prev is None else repr(float(__import__("math").exp(r - prev[0])))
        text_rows.append([repr(float(r)), repr(float(n)), ratio, bound])
        value_rows.append({"R": float(r), "truncated_norm": float(n),
                           "ratio_to_previous": None if prev is None else float(n / prev[1]),
                           "lower_bound_exp": None if prev is None
                           else float(__import__("math").exp(r - prev[0]))})
        prev = (r, n)

    meta = _base_meta(args, bits, source)
    meta.update(coupling_meta)
    meta.update({"j": args.j, "eps": args.eps,
                 "lambda": _fmt(channel.lam, bits),
                 "mu": _fmt(-channel.lam, bits)})
    _emit(meta, header, text_rows, value_rows, args)
    for line in report.lines():
        print(f"# {line}")
    return 0 if report.all_passed else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (Supercritical, UnphysicalState) as exc:
        print(f"physics error: {exc}", file=sys.stderr)
        return 3
    except (InvalidQuantumNumber, DomainError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DiracLadderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
