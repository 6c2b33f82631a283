"""Property suites run over seeded random samples.

Each suite draws exact random inputs from a seeded generator, checks an
identity that must hold exactly, and reports sample counts and failures.
Suites never use floating point; a failure is a counterexample, not a
tolerance issue.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

from .connection import invariant_field_basis, nabla_D, nabla_D_inverse
from .coxeter import Arrangement, ReflectionGroup
from .certify import contact_order, hodge_equality_check
from .derivations import Derivation, euler_field, nabla
from .invariants import InvariantSystem
from .poly import Poly, monomials_of_degree


def random_homogeneous_derivation(nvars: int, degree: int, rng: random.Random,
                                  coeff_range: int = 4) -> Derivation:
    """A random homogeneous field with small integer coefficients."""
    monos = list(monomials_of_degree(nvars, degree))
    while True:
        coeffs = []
        for _ in range(nvars):
            terms = {e: Fraction(rng.randint(-coeff_range, coeff_range)) for e in monos}
            coeffs.append(Poly(nvars, terms))
        delta = Derivation(coeffs)
        if not delta.is_zero:
            return delta


def random_invariant_derivation(system: InvariantSystem, degree: int,
                                rng: random.Random, coeff_range: int = 4) -> Derivation | None:
    """A random invariant homogeneous field of one degree, None if the
    graded piece is zero."""
    basis = invariant_field_basis(system, degree)
    if not basis:
        return None
    n = system.nvars
    while True:
        out = Derivation.zero(n)
        hit = False
        for _, fld in basis:
            c = rng.randint(-coeff_range, coeff_range)
            if c:
                out = out + fld * Fraction(c)
                hit = True
        if hit and not out.is_zero:
            return out


def euler_suite(group: ReflectionGroup, samples: int, seed: int) -> dict:
    """nabla_delta(E) = delta and nabla_E(delta) = deg(delta) * delta."""
    rng = random.Random(seed)
    n = group.rank
    e = euler_field(n)
    failures = []
    for s in range(samples):
        degree = rng.randint(0, 3)
        delta = random_homogeneous_derivation(n, degree, rng)
        if nabla(delta, e) != delta:
            failures.append({"sample": s, "identity": "nabla_delta(E) = delta"})
        if nabla(e, delta) != delta * Fraction(degree):
            failures.append({"sample": s, "identity": "nabla_E(delta) = deg * delta"})
    return {"suite": "euler", "group": group.datum.label, "seed": seed,
            "samples": samples, "failures": failures, "passed": not failures}


def shift_suite(group: ReflectionGroup, arrangement: Arrangement,
                system: InvariantSystem, samples: int, seed: int) -> dict:
    """Contact orders shift by exactly +2 under the primitive
    antiderivative and -2 back under the primitive derivative."""
    rng = random.Random(seed)
    degrees = [d for d in range(1, 2 * system.coxeter_number + 1)
               if invariant_field_basis(system, d)]
    failures = []
    checked = 0
    for s in range(samples):
        degree = rng.choice(degrees)
        delta = random_invariant_derivation(system, degree, rng)
        if delta is None:
            continue
        lifted = nabla_D_inverse(delta, system, group)
        back = nabla_D(lifted, system)
        if back != delta:
            failures.append({"sample": s, "identity": "nabla_D o inverse = id"})
            continue
        for h in arrangement.hyperplanes:
            before = contact_order(delta, h.form)
            after = contact_order(lifted, h.form)
            if before == float("inf"):
                continue
            checked += 1
            if after != before + 2:
                failures.append({
                    "sample": s, "hyperplane": [str(c) for c in h.coeffs],
                    "order_before": before, "order_after": after,
                })
    return {"suite": "shift", "group": group.datum.label, "seed": seed,
            "samples": samples, "orders_checked": checked,
            "failures": failures, "passed": not failures}


def jacobian_suite(group: ReflectionGroup, arrangement: Arrangement,
                   system: InvariantSystem) -> dict:
    """J equals a nonzero scalar times the defining polynomial."""
    from .scalars import format_scalar

    q = arrangement.defining_polynomial
    ok = system.jacobian == q.scale(system.jacobian_scalar)
    return {"suite": "jacobian", "group": group.datum.label,
            "scalar": format_scalar(system.jacobian_scalar),
            "failures": [] if ok else [{"identity": "J = c * Q"}], "passed": ok}


def hodge_suite(group: ReflectionGroup, arrangement: Arrangement,
                system: InvariantSystem, k: int,
                source_degrees: Sequence[int]) -> dict:
    report = hodge_equality_check(k, source_degrees, system, group, arrangement)
    failures = [e for e in report["entries"] if not e["equal"]]
    return {"suite": "hodge", "group": group.datum.label, "k": k,
            "entries": report["entries"], "failures": failures,
            "passed": report["all_equal"]}
