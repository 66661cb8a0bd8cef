"""Randomized integer checks of the symbolic claims.

Polynomial identities and divisibilities survive every integer
specialization, so random integer matrices give an independent, cheap
oracle: build the compound of bordered minors numerically, take exact
integer determinants (Bareiss), and test divisibility or the power identity
pointwise.  Negative controls run the same pipeline with the structural
constraints deliberately not applied and must produce failures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .exactmat import MatrixExpr, det_bareiss
from .identities import compound_minor_products, compound_minors
from .rng import rand_int_matrix, trial_rng

DIVISIBILITY_THEOREMS = ("b0", "ab0", "adb0")
THEOREMS = DIVISIBILITY_THEOREMS + ("sylv", "cb")

MAX_N_DIVISIBILITY = 8
MAX_N_SYLVESTER = 7


@dataclass(frozen=True)
class FuzzPlan:
    """One reproducible fuzzing run: theorem, size, trial count, seed, bound."""

    theorem: str
    n: int
    k: int
    trials: int
    seed: int
    bound: int

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem: {self.theorem!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.theorem in DIVISIBILITY_THEOREMS and self.n > MAX_N_DIVISIBILITY:
            raise ValueError(f"divisibility fuzzing is bounded at n <= {MAX_N_DIVISIBILITY}")
        if self.theorem == "sylv" and self.n > MAX_N_SYLVESTER:
            raise ValueError(f"power-identity fuzzing is bounded at n <= {MAX_N_SYLVESTER}")
        if not (0 <= self.k <= self.n):
            raise ValueError("need 0 <= k <= n")
        if self.trials < 1:
            raise ValueError("trials must be positive")
        if self.bound < 1:
            raise ValueError("bound must be positive")


@dataclass
class FuzzReport:
    """Counts plus the first failing instance, if any."""

    plan: FuzzPlan
    passes: int
    failures: int
    first_failure: dict | None = None
    note: str | None = None

    def to_json_dict(self) -> dict:
        p = self.plan
        d: dict = {
            "theorem": p.theorem,
            "n": p.n,
            "k": p.k,
            "trials": p.trials,
            "seed": p.seed,
            "bound": p.bound,
            "passes": self.passes,
            "failures": self.failures,
        }
        if self.first_failure is not None:
            d["first_failure"] = self.first_failure
        d["evidence"] = "pointwise"
        if self.note is not None:
            d["note"] = self.note
        return d


def random_instance(plan: FuzzPlan, trial: int, apply_constraints: bool = True):
    """The (A, B) integer pair for one trial; deterministic in (plan, trial).

    Entries are uniform in [-bound, bound], A drawn row-major then B; the
    theorem's structural constraints overwrite entries afterwards, so the
    unconstrained draw (apply_constraints=False) shares the same randomness.
    """
    rng = trial_rng(plan.seed, trial)
    size = plan.n + 1
    a = rand_int_matrix(rng, size, size, plan.bound)
    b = rand_int_matrix(rng, size, size, plan.bound)
    if apply_constraints:
        corner = size * size - 1
        if plan.theorem in ("b0", "ab0", "adb0"):
            b.entries[corner] = 0
        if plan.theorem == "ab0":
            a.entries[corner] = 0
        if plan.theorem == "adb0":
            for j in range(size - 1):
                a.entries[(size - 1) * size + j] = 0
    return a, b


def _divisor(plan: FuzzPlan, a: MatrixExpr, b: MatrixExpr) -> int:
    if plan.theorem == "ab0":
        return det_bareiss(a) * det_bareiss(b)
    return det_bareiss(a)


def _run_divisibility(plan: FuzzPlan, apply_constraints: bool) -> FuzzReport:
    passes = 0
    failures = 0
    first = None
    for t in range(plan.trials):
        a, b = random_instance(plan, t, apply_constraints)
        w = det_bareiss(compound_minor_products(a, b, plan.k, det=det_bareiss).matrix)
        d = _divisor(plan, a, b)
        ok = (w == 0) if d == 0 else (w % d == 0)
        if ok:
            passes += 1
        else:
            failures += 1
            if first is None:
                first = {
                    "trial": t,
                    "a": a.row_list(),
                    "b": b.row_list(),
                    "det_w": w,
                    "divisor": d,
                }
    return FuzzReport(plan=plan, passes=passes, failures=failures, first_failure=first)


def fuzz_divisibility(plan: FuzzPlan) -> FuzzReport:
    """Divisibility of the compound determinant at random integer points."""
    if plan.theorem not in DIVISIBILITY_THEOREMS:
        raise ValueError(f"fuzz_divisibility cannot run theorem {plan.theorem!r}")
    return _run_divisibility(plan, apply_constraints=True)


def negative_control(plan: FuzzPlan) -> FuzzReport:
    """Same pipeline without the constraints; failures are the expected outcome.

    k = n and n = 0 are vacuous (the single compound entry is det A * det B,
    so divisibility holds regardless); otherwise a run with zero failures
    escalates the bound tenfold once, and a still-clean run is an anomaly.
    """
    if plan.theorem not in DIVISIBILITY_THEOREMS:
        raise ValueError(f"negative_control cannot run theorem {plan.theorem!r}")
    if plan.n == 0 or plan.k == plan.n:
        report = _run_divisibility(plan, apply_constraints=False)
        report.note = "vacuous"
        return report
    report = _run_divisibility(plan, apply_constraints=False)
    if report.failures == 0:
        report = _run_divisibility(replace(plan, bound=plan.bound * 10), apply_constraints=False)
        report.note = "escalated" if report.failures else "anomaly"
    return report


def fuzz_sylvester(plan: FuzzPlan) -> FuzzReport:
    """Power identity for the single-matrix compound at random integer points."""
    if plan.theorem != "sylv":
        raise ValueError("fuzz_sylvester needs theorem 'sylv'")
    if plan.n < 1:
        raise ValueError("fuzz_sylvester needs n >= 1")
    p = math.comb(plan.n - 1, plan.k)
    q = math.comb(plan.n - 1, plan.k - 1) if plan.k >= 1 else 0
    passes = 0
    failures = 0
    first = None
    for t in range(plan.trials):
        a, _ = random_instance(plan, t)
        lhs = det_bareiss(compound_minors(a, plan.k, det=det_bareiss).matrix)
        corner = a.entry(plan.n + 1, plan.n + 1)
        rhs = corner**p * det_bareiss(a) ** q
        if lhs == rhs:
            passes += 1
        else:
            failures += 1
            if first is None:
                first = {"trial": t, "a": a.row_list(), "lhs": lhs, "rhs": rhs}
    return FuzzReport(plan=plan, passes=passes, failures=failures, first_failure=first)
