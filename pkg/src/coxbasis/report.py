"""JSON report construction and parsing.

Reports carry every number as an exact string (rational or quadratic),
never as a float.  All term lists are emitted in descending monomial
order and all dict keys are sorted on dump, so a report is byte
deterministic for a given request.  The members of a basis report parse
back into derivations, which is how a previous run's base can be re-fed
and re-certified.
"""

from __future__ import annotations

import json
from typing import Sequence

from .basis import BasisResult
from .certify import Certificate
from .coxeter import Arrangement, Multiplicity, ReflectionGroup
from .derivations import Derivation
from .invariants import InvariantSystem
from .poly import Poly
from .scalars import format_scalar, parse_scalar

SCHEMA_BASIS = "coxbasis/basis-report/1"
SCHEMA_VERIFY = "coxbasis/verify-report/1"


def poly_to_json(p: Poly) -> list:
    return [[list(exps), format_scalar(coeff)] for exps, coeff in p.terms_sorted()]


def poly_from_json(data: Sequence, nvars: int) -> Poly:
    return Poly(nvars, {tuple(int(e) for e in exps): parse_scalar(coeff)
                        for exps, coeff in data})


def derivation_to_json(delta: Derivation) -> dict:
    deg = delta.degree() if delta.is_homogeneous() else None
    return {
        "degree": deg,
        "coefficients": [poly_to_json(f) for f in delta.coeffs],
    }


def derivation_from_json(data: dict, nvars: int) -> Derivation:
    coeffs = data["coefficients"]
    if len(coeffs) != nvars:
        raise ValueError("derivation data has %d coefficients, expected %d"
                         % (len(coeffs), nvars))
    return Derivation([poly_from_json(c, nvars) for c in coeffs])


def _order_value(o: int | float) -> int | None:
    # contact order can be infinite when a member annihilates a form
    return None if o == float("inf") else int(o)


def certificate_to_json(cert: Certificate) -> dict:
    out = {
        "verdict": cert.verdict,
        "member_degrees": list(cert.member_degrees),
        "required_multiplicities": list(cert.required),
        "contact_orders": [[_order_value(o) for o in row] for row in cert.orders],
        "degree_sum": cert.degree_sum,
        "multiplicity_sum": cert.multiplicity_sum,
    }
    if cert.determinant is not None:
        out["determinant"] = poly_to_json(cert.determinant)
    if cert.determinant_scalar is not None:
        out["determinant_scalar"] = format_scalar(cert.determinant_scalar)
    if cert.failure is not None:
        out["failure"] = {k: _order_value(v) if isinstance(v, float) else v
                          for k, v in cert.failure.items()}
    return out


def group_to_json(group: ReflectionGroup, arrangement: Arrangement) -> dict:
    datum = group.datum
    return {
        "type": datum.label,
        "rank": datum.rank,
        "field": datum.field_label,
        "order": group.order,
        "num_hyperplanes": len(arrangement),
        "coxeter_number": datum.coxeter_number,
        "degrees": list(datum.degrees),
        "exponents": list(datum.exponents),
        "hyperplanes": [[format_scalar(c) for c in h.coeffs]
                        for h in arrangement.hyperplanes],
        "orbits": [list(o) for o in arrangement.orbits()],
    }


def multiplicity_to_json(mult: Multiplicity) -> dict:
    out: dict = {"per_hyperplane": list(mult.values)}
    per_orbit = mult.per_orbit()
    if per_orbit is not None:
        out["per_orbit"] = per_orbit
    return out


def multiplicity_from_json(data: dict, arrangement: Arrangement) -> Multiplicity:
    if "per_hyperplane" in data:
        return Multiplicity(arrangement, [int(v) for v in data["per_hyperplane"]])
    if "per_orbit" in data:
        return Multiplicity.from_orbit_values(arrangement, [int(v) for v in data["per_orbit"]])
    if "constant" in data:
        return Multiplicity.constant(arrangement, int(data["constant"]))
    raise ValueError("multiplicity data needs per_hyperplane, per_orbit, or constant")


def basis_report(result: BasisResult, system: InvariantSystem,
                 group: ReflectionGroup, arrangement: Arrangement) -> dict:
    req = result.request
    report = {
        "schema": SCHEMA_BASIS,
        "inputs": {
            "type": group.datum.label,
            "k": req.k,
            "multiplicity": multiplicity_to_json(req.multiplicity),
            "base_source": result.base_source,
        },
        "group": group_to_json(group, arrangement),
        "invariants": {
            "degrees": list(system.degrees),
            "jacobian_scalar": format_scalar(system.jacobian_scalar),
            "fingerprint": system.fingerprint(),
        },
        "universal_field": derivation_to_json(result.universal),
        "base": {
            "members": [derivation_to_json(b) for b in result.base_members],
            "degrees": [b.degree() for b in result.base_members],
        },
        "shifted_multiplicity": multiplicity_to_json(result.shifted_multiplicity),
        "members": [derivation_to_json(m) for m in result.members],
        "member_degrees": list(result.member_degrees),
        "certificate": certificate_to_json(result.certificate),
    }
    if result.base_certificate is not None:
        report["base"]["certificate"] = certificate_to_json(result.base_certificate)
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"
