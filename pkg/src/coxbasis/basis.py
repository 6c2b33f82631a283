"""Construction of certified bases for shifted derivation modules.

Given a free base basis for multiplicity m (values 0 and 1), the members
nabla_{delta_i}(antiderivative^k of the Euler field) form a basis for
multiplicity m + 2k.  The base basis comes from one of four sources:
coordinate fields for m = 0, invariant gradients for m = 1, a
user-supplied list (certified before use), or a degree-by-degree search
that works directly from the membership conditions and certifies what it
finds.  Every constructed basis is re-certified; a failed certificate on
the constructed members is an internal alarm, not a user error.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .certify import Certificate, graded_member_basis, ziegler_certify
from .connection import universal_field
from .coxeter import Arrangement, Multiplicity, ReflectionGroup
from .derivations import Derivation, nabla
from .errors import CertificateFailed, NotABasis
from .invariants import InvariantSystem
from .linalg import rref
from .poly import Poly, monomials_of_degree
from .scalars import Scalar, scalar_inverse

BASE_SOURCES = ("auto", "coordinate", "gradient", "oracle", "user")


@dataclass
class BasisRequest:
    """What to build: a multiplicity with values in {0, 1} and a shift k."""

    group: ReflectionGroup
    arrangement: Arrangement
    system: InvariantSystem
    multiplicity: Multiplicity
    k: int
    base_source: str = "auto"
    user_base: Sequence[Derivation] | None = None

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("the shift k must be nonnegative")
        if not self.multiplicity.is_zero_one():
            raise ValueError("base multiplicities must have values in {0, 1}")
        if self.base_source not in BASE_SOURCES:
            raise ValueError("unknown base source %r" % self.base_source)
        if self.base_source == "user" and self.user_base is None:
            raise ValueError("base source 'user' needs a user_base")


@dataclass
class BasisResult:
    """A constructed basis together with its certificate."""

    request: BasisRequest
    base_source: str
    base_members: tuple[Derivation, ...]
    base_certificate: Certificate | None
    universal: Derivation
    members: tuple[Derivation, ...]
    member_degrees: tuple[int, ...]
    certificate: Certificate

    @property
    def shifted_multiplicity(self) -> Multiplicity:
        return self.request.multiplicity.shifted(2 * self.request.k)


def base_basis(request: BasisRequest) -> tuple[str, tuple[Derivation, ...], Certificate | None]:
    """Produce and, where needed, certify a base basis for the multiplicity."""
    arr = request.arrangement
    mult = request.multiplicity
    n = arr.datum.rank
    source = request.base_source
    if source == "auto":
        per = set(mult.values)
        if per == {0} or not per:
            source = "coordinate"
        elif per == {1}:
            source = "gradient"
        else:
            source = "oracle"

    if source == "coordinate":
        if any(v != 0 for v in mult.values):
            raise NotABasis("coordinate fields only span the module of the zero multiplicity")
        return source, tuple(Derivation.coordinate(n, i) for i in range(n)), None
    if source == "gradient":
        members = request.system.gradients
        cert = ziegler_certify(members, mult, arr)
        if not cert.is_free:
            raise NotABasis("gradient fields are not a basis for this multiplicity",
                            certificate=cert)
        return source, tuple(members), cert
    if source == "user":
        members = tuple(request.user_base or ())
        cert = ziegler_certify(members, mult, arr)
        if not cert.is_free:
            raise NotABasis("user-supplied base failed certification", certificate=cert)
        return source, members, cert

    members = _oracle_search(mult, arr)
    cert = ziegler_certify(members, mult, arr)
    if not cert.is_free:
        raise NotABasis("search produced %d generators but they failed certification"
                        % len(members), certificate=cert)
    return "oracle", tuple(members), cert


def _oracle_search(mult: Multiplicity, arr: Arrangement) -> tuple[Derivation, ...]:
    """Minimal generators of the derivation module, degree by degree.

    Walks degrees 0 .. sum(m).  At each degree the graded piece is
    computed from the membership constraints alone, the span of earlier
    generators times polynomials is subtracted, and whatever survives is
    appended.  A free module of rank n has exactly n generators with
    degrees summing to sum(m), so anything else aborts the search.
    """
    n = arr.datum.rank
    bound = mult.total()
    generators: list[Derivation] = []
    for degree in range(0, bound + 1):
        piece = graded_member_basis(mult, degree, arr)
        if not piece:
            continue
        monos = list(monomials_of_degree(n, degree))
        index = {(i, e): k for k, (i, e) in
                 enumerate((i, e) for i in range(n) for e in monos)}

        def vectorize(delta: Derivation) -> list[Scalar]:
            v: list[Scalar] = [Fraction(0)] * len(index)
            for i, f in enumerate(delta.coeffs):
                for exps, coeff in f.terms.items():
                    v[index[(i, exps)]] = coeff
            return v

        span_rows: list[list[Scalar]] = []
        for gen in generators:
            shift = degree - gen.degree()
            for exps in monomials_of_degree(n, shift):
                span_rows.append(vectorize(gen * Poly.monomial(n, exps)))
        reduced, pivots = rref(span_rows) if span_rows else ([], [])
        echelon = [(p, row) for p, row in zip(pivots, reduced)]

        def reduce_vec(v: list[Scalar]) -> list[Scalar]:
            v = list(v)
            for p, row in echelon:
                f = v[p]
                if f != 0:
                    v = [a - f * b for a, b in zip(v, row)]
            return v

        for cand in piece:
            v = reduce_vec(vectorize(cand))
            pivot = next((k for k, a in enumerate(v) if a != 0), None)
            if pivot is None:
                continue
            inv = scalar_inverse(v[pivot])
            new_row = [inv * a for a in v]
            for idx, (p, row) in enumerate(echelon):
                f = row[pivot]
                if f != 0:
                    echelon[idx] = (p, [a - f * b for a, b in zip(row, new_row)])
            echelon.append((pivot, new_row))
            echelon.sort(key=lambda t: t[0])
            generators.append(cand)
            if len(generators) > n:
                raise NotABasis("module needs more than %d generators; it is not free" % n)
        if len(generators) == n and sum(g.degree() for g in generators) == bound:
            return tuple(generators)
    raise NotABasis("search exhausted degrees 0..%d with %d generators"
                    % (bound, len(generators)))


def build_basis(request: BasisRequest) -> BasisResult:
    """Build and certify the basis for the shifted multiplicity."""
    source, base, base_cert = base_basis(request)
    univ = universal_field(request.k, request.system, request.group)
    members = tuple(nabla(delta, univ) for delta in base)
    shifted = request.multiplicity.shifted(2 * request.k)
    cert = ziegler_certify(members, shifted, request.arrangement)
    if not cert.is_free:
        raise CertificateFailed(
            "constructed members failed certification with verdict %s" % cert.verdict,
            certificate=cert)
    h = request.system.coxeter_number
    expected = tuple(request.k * h + b.degree() for b in base)
    if cert.member_degrees != expected:
        raise CertificateFailed(
            "member degrees %s do not match the predicted %s"
            % (cert.member_degrees, expected), certificate=cert)
    return BasisResult(
        request=request,
        base_source=source,
        base_members=base,
        base_certificate=base_cert,
        universal=univ,
        members=members,
        member_degrees=cert.member_degrees,
        certificate=cert,
    )
