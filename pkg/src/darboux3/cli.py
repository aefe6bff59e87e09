"""Command-line interface: verify / spectrum / classical / figures.

Exit codes are the single source of pass/fail truth: 0 on success, 1 when a
verification or tolerance fails, 2 on bad flags (argparse's own convention).
Reports go to --out when given, otherwise to stdout; identical flags and seed
reproduce byte-identical output under --no-timestamp.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import classical as cl
from . import reports as rp
from . import spectra as sp
from .algebra import (
    build_fradkin,
    corrupt_fradkin,
    similarity_checks,
    verify_theorem,
)
from .model import (
    ModelParams,
    classical_effective_minimum,
    classical_effective_potential,
    closed_form_energy,
    continuum_threshold,
    oscillator_potential,
    quantum_effective_minimum,
    quantum_effective_potential,
    scalar_curvature,
)

SPECTRUM_TOLERANCE = 1e-5
DRIFT_TOLERANCE = 1e-7


def build_parser():
    parser = argparse.ArgumentParser(
        prog="darboux3",
        description="Curved-space oscillator verification suite",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--no-timestamp", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common],
                       help="symbolic symmetry-algebra verification")
    v.add_argument("--dim", type=int, choices=(2, 3, 4), default=3)
    v.add_argument("--flavor", choices=("schrodinger", "tlb", "tpdm"), default="schrodinger")
    v.add_argument(
        "--parts", default="i,ii,sl2,conjugation",
        help="comma-separated subset of i,ii,sl2,conjugation",
    )
    v.add_argument("--similarity", action="store_true",
                   help="also run the similarity/adjoint identity suite")
    v.add_argument("--corrupt", default=None, metavar="LABEL",
                   help="drop the omega^2 term from one Fradkin entry, e.g. I11")

    s = sub.add_parser("spectrum", parents=[common], help="radial bound states vs closed form")
    s.add_argument("--dim", type=int, default=3)
    s.add_argument("--l", type=int, default=0)
    s.add_argument("--lambda", dest="lam", type=float, default=0.02)
    s.add_argument("--omega", type=float, default=1.0)
    s.add_argument("--hbar", type=float, default=1.0)
    s.add_argument("--levels", type=int, default=6)
    s.add_argument("--grid", type=int, default=4000, help="number of interior grid points")
    s.add_argument("--qmax", type=float, default=None, help="override automatic box size")
    s.add_argument("--flavor", choices=("schrodinger", "tlb", "tpdm", "all"), default="tlb")
    s.add_argument("--wavefunctions", default=None, metavar="PATH",
                   help="also export radial wave functions as CSV (r, phi_0..phi_k)")

    c = sub.add_parser("classical", parents=[common], help="trajectory drift, ranks, orbit closure")
    c.add_argument("--dim", type=int, default=3)
    c.add_argument("--lambda", dest="lam", type=float, default=0.02)
    c.add_argument("--omega", type=float, default=1.0)
    c.add_argument("--t-end", type=float, default=100.0)
    c.add_argument("--tolerance", type=float, default=1e-10)
    c.add_argument("--trajectory", default=None, metavar="PATH",
                   help="also export the sampled trajectory as CSV")

    f = sub.add_parser("figures", parents=[common], help="plot-ready curve data for figures 1-5")
    f.add_argument("--which", type=int, choices=(1, 2, 3, 4, 5), required=True)
    f.add_argument("--dir", default=".", help="output directory for CSV/JSON files")
    return parser


def _emit(args, report, csv_text=None):
    if args.format == "csv" and csv_text is not None:
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(csv_text)
        else:
            sys.stdout.write(csv_text)
        return
    text = rp.dump_json(report, args.out)
    if args.out is None:
        sys.stdout.write(text)


def cmd_verify(args):
    parts = tuple(p.strip() for p in args.parts.split(",") if p.strip())
    fradkin = build_fradkin(args.flavor, args.dim)
    if args.corrupt:
        fradkin = corrupt_fradkin(fradkin, args.corrupt)
    rep = verify_theorem(args.flavor, args.dim, parts=parts, fradkin=fradkin)
    body = rep.to_json()
    if args.similarity:
        sim = similarity_checks(args.dim)
        body["similarity_checks"] = [c.to_json() for c in sim]
        body["all_zero"] = body["all_zero"] and all(c.commutator_zero for c in sim)
    report = rp.make_report("verify", body, timestamp=not args.no_timestamp)
    _emit(args, report)
    return 0 if body["all_zero"] else 1


def cmd_spectrum(args):
    params = ModelParams(dim=args.dim, lam=args.lam, omega=args.omega, hbar=args.hbar)
    k = args.levels
    if k < 1:
        raise SystemExit(2)
    if args.flavor == "all":
        iso = sp.isospectrality_check(params, args.l, k=k, m=args.grid)
        closed = np.array([closed_form_energy(params, 2 * nr + args.l) for nr in range(k)])
        per_flavor = {fl: vals.tolist() for fl, vals in iso["levels"].items()}
        worst_closed = max(
            float(np.max(np.abs(vals - closed) / np.abs(closed)))
            for vals in iso["levels"].values()
        )
        body = {
            "params": {"N": params.dim, "lambda": params.lam, "omega": params.omega, "hbar": params.hbar},
            "l": args.l,
            "flavor": "all",
            "levels_closed_form": closed.tolist(),
            "levels": per_flavor,
            "pairwise_rel": iso["pairwise_rel"],
            "max_pairwise_rel": iso["max_pairwise_rel"],
            "max_rel_mismatch": worst_closed,
            "isospectral": iso["agree"],
        }
        report = rp.make_report("spectrum", body, timestamp=not args.no_timestamp)
        rows = [
            (nr, 2 * nr + args.l, closed[nr], *(per_flavor[fl][nr] for fl in sp.RADIAL_FLAVORS))
            for nr in range(k)
        ]
        csv_text = rp.dump_csv(rows, ("n_r", "n", "E_closed", *sp.RADIAL_FLAVORS))
        _emit(args, report, csv_text)
        ok = worst_closed <= SPECTRUM_TOLERANCE and iso["agree"]
        return 0 if ok else 1

    grid = (
        sp.GridSpec(q_max=args.qmax, m=args.grid)
        if args.qmax
        else sp.default_grid(params, args.l, k=k, m=args.grid)
    )
    problem = sp.RadialProblem(params, args.l, args.flavor, grid)
    rep = sp.solve_bound_states(problem, k=k)
    if args.wavefunctions:
        r_nodes, phis, _ = sp.radial_wavefunctions(problem, k=k)
        cols = phis[args.flavor]
        rows = [(r_nodes[i], *(cols[j][i] for j in range(cols.shape[0])))
                for i in range(r_nodes.size)]
        header = ("r", *(f"phi_{args.flavor}_{j}" for j in range(cols.shape[0])))
        rp.dump_csv(rows, header, args.wavefunctions)
    body = rep.to_json()
    body["max_rel_mismatch"] = rp._sanitize(rep.max_rel_residual)
    report = rp.make_report("spectrum", body, timestamp=not args.no_timestamp)
    csv_text = rp.dump_csv(rp.spectrum_csv_rows(rep.levels), rp.SPECTRUM_CSV_HEADER)
    _emit(args, report, csv_text)
    if len(rep.levels) < k:
        return 1
    return 0 if rep.max_rel_residual <= SPECTRUM_TOLERANCE else 1


def cmd_classical(args):
    params = ModelParams(dim=args.dim, lam=args.lam, omega=args.omega)
    rng = np.random.default_rng(args.seed)
    state = cl.random_state(params, rng, args.dim)
    record = cl.integrate(params, state, args.t_end, tolerance=args.tolerance)
    closure = cl.orbit_closure(params, state)
    names = cl.independence_names(args.dim)
    brackets = {
        name: cl.poisson_bracket_with_h(params, name, state)
        for name in names
        if name != "H"
    }
    rank = cl.independence_rank(params, state)
    expected_rank = 2 * args.dim - 1
    body = {
        "params": {"N": params.dim, "lambda": params.lam, "omega": params.omega},
        "seed": args.seed,
        "initial_energy": cl.classical_hamiltonian(params, state),
        "threshold": continuum_threshold(params),
        "t_end": args.t_end,
        "integrator_tolerance": args.tolerance,
        "drift": record.drift,
        "max_drift": record.max_drift,
        "poisson_brackets_with_H": brackets,
        "max_poisson_bracket": max(abs(v) for v in brackets.values()),
        "independence_rank": rank,
        "expected_rank": expected_rank,
        "closure": closure,
    }
    report = rp.make_report("classical", body, timestamp=not args.no_timestamp)
    _emit(args, report)
    if args.trajectory:
        rp.trajectory_csv(record, args.trajectory)
    ok = record.max_drift < DRIFT_TOLERANCE and rank == expected_rank
    return 0 if ok else 1


def _curve(f, xs):
    return [f(x) for x in xs]


def cmd_figures(args):
    os.makedirs(args.dir, exist_ok=True)
    which = args.which
    stem = os.path.join(args.dir, f"figure{which}")
    timestamp = not args.no_timestamp
    if which == 1:
        params = ModelParams(dim=3, lam=0.1)
        rs = np.linspace(0.0, 10.0, 501)
        rows = [(r, scalar_curvature(params, r)) for r in rs]
        rp.dump_csv(rows, ("r", "R"), stem + "_curve.csv")
        landmarks = {"R_at_origin": scalar_curvature(params, 0.0)}
    elif which == 2:
        lams = (0.0, 0.02, 0.04, 0.06, 0.1)
        rs = np.linspace(0.0, 30.0, 601)
        cols = {
            lam: _curve(lambda r, _p=ModelParams(dim=3, lam=lam): oscillator_potential(_p, r), rs)
            for lam in lams
        }
        rows = [(r, *(cols[lam][i] for lam in lams)) for i, r in enumerate(rs)]
        rp.dump_csv(rows, ("r", *(f"U_lambda_{lam}" for lam in lams)), stem + "_curve.csv")
        landmarks = {
            "U_infinity": {str(lam): continuum_threshold(ModelParams(dim=3, lam=lam)) for lam in lams}
        }
    elif which == 3:
        c_n = 100.0
        rs = np.linspace(0.05, 30.0, 600)
        deformed = ModelParams(dim=3, lam=0.02)
        flat = ModelParams(dim=3, lam=0.0)
        rows = [
            (
                r,
                classical_effective_potential(deformed, c_n, r),
                classical_effective_potential(flat, c_n, r),
            )
            for r in rs
        ]
        rp.dump_csv(rows, ("r", "U_eff_lambda_0.02", "U_eff_lambda_0"), stem + "_curve.csv")
        m1 = classical_effective_minimum(deformed, c_n)
        m0 = classical_effective_minimum(flat, c_n)
        landmarks = {
            "deformed": {"r_min": m1.r_min, "u_min": m1.u_min,
                         "U_infinity": continuum_threshold(deformed)},
            "flat": {"r_min": m0.r_min, "u_min": m0.u_min},
        }
    elif which == 4:
        l = 10
        rs = np.linspace(0.5, 30.0, 600)
        deformed = ModelParams(dim=3, lam=0.02)
        flat = ModelParams(dim=3, lam=0.0)
        rows = [
            (
                r,
                quantum_effective_potential(deformed, l, r),
                quantum_effective_potential(flat, l, r),
            )
            for r in rs
        ]
        rp.dump_csv(rows, ("r", "Ueff_quantum_lambda_0.02", "Ueff_quantum_lambda_0"), stem + "_curve.csv")
        m1 = quantum_effective_minimum(deformed, l)
        m0 = quantum_effective_minimum(flat, l)
        landmarks = {
            "deformed": {"r_min": m1.r_min, "u_min": m1.u_min,
                         "U_infinity": continuum_threshold(deformed)},
            "flat": {"r_min": m0.r_min, "u_min": m0.u_min},
        }
    else:
        lams = (0.0, 0.01, 0.02, 0.04)
        ns = range(0, 26)
        cols = {
            lam: [closed_form_energy(ModelParams(dim=3, lam=lam), n) for n in ns]
            for lam in lams
        }
        rows = [(n, *(cols[lam][i] for lam in lams)) for i, n in enumerate(ns)]
        rp.dump_csv(rows, ("n", *(f"E_lambda_{lam}" for lam in lams)), stem + "_curve.csv")
        landmarks = {
            "E0": {str(lam): cols[lam][0] for lam in lams},
            "E_infinity": {
                str(lam): continuum_threshold(ModelParams(dim=3, lam=lam)) for lam in lams
            },
        }
    sidecar = rp.make_report("figure", {"figure": which, "landmarks": landmarks},
                             timestamp=timestamp)
    rp.dump_json(sidecar, stem + "_landmarks.json")
    sys.stdout.write(f"wrote {stem}_curve.csv and {stem}_landmarks.json\n")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "verify": cmd_verify,
        "spectrum": cmd_spectrum,
        "classical": cmd_classical,
        "figures": cmd_figures,
    }
    try:
        return handlers[args.command](args)
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
