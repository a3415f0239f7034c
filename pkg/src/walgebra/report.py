"""Pipeline orchestration and report serialization.

run_pipeline drives root system -> grading -> basis -> generators ->
relations -> one-dimensional representations, honouring the requested
mode, and the report writers render the result as versioned JSON
(schema 1, every rational as {"num": ..., "den": ...} decimal strings)
and as a human-readable text display.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

import sympy

from .basisbuilder import GradedBasis, build_graded_basis
from .catalogue import OrbitEntry, lookup
from .generators import ThetaGenerator, build_generators, format_theta
from .ledger import DenominatorLedger
from .onedim import (OneDimSolutions, OneDimSystem, build_system,
                     minimal_polynomial_of, solve_system,
                     weight_balanced_pairs)
from .relations import Presentation, build_presentation, format_wpoly
from .rootsystem import build_root_system, chevalley_constants
from .sl2grading import build_triple, grading_from_labels
from .uea import QuotientSpace

MODES = ("present", "generators-only", "onedim-fast")


class UndecidedSolverError(RuntimeError):
    """A configured budget (candidates, degree) was exceeded before the
    computation could decide the answer."""


@dataclass
class PipelineResult:
    type_label: str
    rank: int
    labels: tuple[int, ...]
    orbit_name: str | None
    mode: str
    gb: GradedBasis
    Q: QuotientSpace
    thetas: list[ThetaGenerator]
    presentation: Presentation | None
    system: OneDimSystem | None
    solutions: OneDimSolutions | None
    timings: dict[str, float] = field(default_factory=dict)


def run_pipeline(type_label: str, rank: int, labels=None,
                 orbit: str | None = None, mode: str = "present",
                 max_candidates: int | None = None,
                 solver_degree_bound: int | None = None) -> PipelineResult:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    entry: OrbitEntry | None = None
    if orbit is not None:
        entry = lookup(type_label, rank, orbit)
        if labels is not None and tuple(labels) != entry.labels:
            raise ValueError(
                f"labels {tuple(labels)} conflict with orbit {orbit} "
                f"({entry.labels})")
        labels = entry.labels
    if labels is None:
        raise ValueError("either labels or a catalogued orbit is required")

    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    rs = build_root_system(type_label, rank)
    lie = chevalley_constants(rs)
    grading = grading_from_labels(lie, labels)
    ledger = DenominatorLedger()
    triple = build_triple(lie, grading, ledger)
    gb = build_graded_basis(
        lie, grading, triple, ledger,
        b_override=entry.b_override if entry else None,
        K_override=list(entry.K_override) if entry and entry.K_override
        else None)
    timings["basis"] = time.perf_counter() - t0

    Q = QuotientSpace(gb)
    t1 = time.perf_counter()
    if max_candidates is not None:
        from .generators import candidate_monomials
        for i in range(gb.b):
            count = len(candidate_monomials(gb, i))
            if count > max_candidates:
                raise UndecidedSolverError(
                    f"generator {i + 1} needs {count} candidate monomials, "
                    f"budget is {max_candidates}")
    thetas = build_generators(Q)
    timings["generators"] = time.perf_counter() - t1

    presentation = None
    system = None
    solutions = None
    if mode != "generators-only":
        pairs = None
        if mode == "onedim-fast":
            pairs = weight_balanced_pairs(gb.r, gb.beta)
        t2 = time.perf_counter()
        presentation = build_presentation(Q, thetas, pairs=pairs)
        timings["relations"] = time.perf_counter() - t2
        t3 = time.perf_counter()
        system = build_system(presentation, gb.beta)
        if solver_degree_bound is not None:
            for e in system.equations:
                deg = sympy.total_degree(e) if e.free_symbols else 0
                if deg > solver_degree_bound:
                    raise UndecidedSolverError(
                        f"equation of degree {deg} exceeds the solver "
                        f"degree bound {solver_degree_bound}")
        solutions = solve_system(system)
        timings["onedim"] = time.perf_counter() - t3

    return PipelineResult(type_label.upper(), rank, tuple(labels),
                          entry.name if entry else None, mode, gb, Q,
                          thetas, presentation, system, solutions, timings)


def _rat(q) -> dict[str, str]:
    return {"num": str(q.numerator), "den": str(q.denominator)}


def _sym_value(v: sympy.Expr) -> dict:
    if v.is_rational:
        r = sympy.Rational(v)
        return {"num": str(r.p), "den": str(r.q)}
    x = sympy.Symbol("x")
    mp = minimal_polynomial_of(v, x)
    return {"minpoly": str(sympy.expand(mp)),
            "approx": str(sympy.N(v, 30))}


_SEGMENTS = ("centralizer", "parabolic", "z", "z*", "g(-2)", "tail")


def _segment_of(gb: GradedBasis, i: int) -> str:
    bounds = [gb.r, gb.m, gb.m + gb.s, gb.m + 2 * gb.s,
              gb.m + 2 * gb.s + gb.s_prime, gb.n]
    for seg, hi in zip(_SEGMENTS, bounds):
        if i < hi:
            return seg
    raise IndexError(i)


def result_to_dict(res: PipelineResult) -> dict:
    gb = res.gb
    out: dict = {
        "schema": 1,
        "algebra": {
            "type": res.type_label,
            "rank": res.rank,
            "dimension": gb.lie.dim,
            "bad_primes": list(gb.lie.rs.bad_primes),
        },
        "orbit": {
            "labels": list(res.labels),
            "name": res.orbit_name,
            "gamma": [list(g) for g in gb.triple.gamma],
        },
        "mode": res.mode,
        "markers": {
            "n": gb.n, "r": gb.r, "b": gb.b, "m": gb.m,
            "s": gb.s, "s_prime": gb.s_prime,
            "e_index": gb.e_index + 1,
            "K": [k + 1 for k in gb.K],
        },
        "basis": [
            {
                "index": i + 1,
                "ambient": [
                    {"basis_index": a + 1, "label": gb.lie.label(a),
                     "coefficient": _rat(c)}
                    for a, c in sorted(gb.vectors[i].items())
                ],
                "n": gb.n_deg[i],
                "beta": [_rat(x) for x in gb.beta[i]],
                "segment": _segment_of(gb, i),
            }
            for i in range(gb.n)
        ],
        "generators": [
            {
                "index": th.index + 1,
                "monomials": [
                    {"exponents": list(mono[:gb.m + gb.s]),
                     "coefficient": _rat(th.element[mono])}
                    for mono in sorted(th.element)
                ],
            }
            for th in res.thetas
        ],
    }
    if res.presentation is not None:
        out["relations"] = [
            {
                "i": i + 1, "j": j + 1,
                "monomials": [
                    {"exponents": list(mono), "coefficient": _rat(p[mono])}
                    for mono in sorted(p)
                ],
            }
            for (i, j), p in sorted(res.presentation.relations.items())
        ]
    if res.solutions is not None:
        sols = res.solutions
        out["solutions"] = {
            "classification": sols.kind,
            "count": sols.count,
            "free_indices": [i + 1 for i in sols.free],
            "weight_zero_indices": [i + 1 for i in res.system.I],
            "solutions": [
                {f"t{i + 1}": _sym_value(s[i]) for i in sorted(s)}
                for s in sols.solutions
            ],
        }
    out["denominator"] = {
        "d": gb.ledger.d,
        "primes": [
            {"prime": p, "steps": steps}
            for p, steps in gb.ledger.provenance().items()
        ],
    }
    out["timings"] = {k: round(v, 3) for k, v in sorted(res.timings.items())}
    return out


def report_json(res: PipelineResult) -> str:
    return json.dumps(result_to_dict(res), indent=2) + "\n"


def report_text(res: PipelineResult) -> str:
    gb = res.gb
    lines = []
    lines.append(f"{res.type_label}{res.rank}, labels {list(res.labels)}"
                 + (f", orbit {res.orbit_name}" if res.orbit_name else ""))
    lines.append(f"n = {gb.n}, r = {gb.r}, b = {gb.b}, m = {gb.m}, "
                 f"s = {gb.s}, s' = {gb.s_prime}")
    lines.append(f"e = x{gb.e_index + 1}, K = {[k + 1 for k in gb.K]}")
    lines.append("")
    lines.append("basis (index, expression, n_i, beta_i, segment):")
    for i in range(gb.n):
        expr = " + ".join(
            (f"{c}*b{a + 1}" if c != 1 else f"b{a + 1}")
            for a, c in sorted(gb.vectors[i].items()))
        beta = ",".join(str(x) for x in gb.beta[i])
        lines.append(f"  x{i + 1:<3} = {expr:<28} n = {gb.n_deg[i]:>3}  "
                     f"beta = ({beta})  [{_segment_of(gb, i)}]")
    lines.append("")
    lines.append("generators:")
    for th in res.thetas:
        lines.append(f"  Theta{th.index + 1} = {format_theta(res.Q, th)}")
    if res.presentation is not None:
        lines.append("")
        lines.append("nonzero relations:")
        for (i, j), p in sorted(res.presentation.relations.items()):
            if p:
                lines.append(f"  [Theta{i + 1}, Theta{j + 1}] = "
                             f"{format_wpoly(p)}")
    if res.solutions is not None:
        sols = res.solutions
        lines.append("")
        lines.append(f"one-dimensional representations: {sols.kind}"
                     + (f", count {sols.count}" if sols.kind == "finite"
                        else f", free t-indices "
                            f"{[i + 1 for i in sols.free]}"))
        for s in sols.solutions:
            vals = ", ".join(f"t{i + 1} = {s[i]}" for i in sorted(s))
            lines.append(f"  {vals}")
    lines.append("")
    lines.append(f"denominator d = {gb.ledger.d} "
                 f"(primes {gb.ledger.primes})")
    for p, steps in gb.ledger.provenance().items():
        lines.append(f"  {p}: {'; '.join(steps)}")
    return "\n".join(lines) + "\n"
