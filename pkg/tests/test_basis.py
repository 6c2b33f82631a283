from __future__ import annotations

import pytest

from coxbasis.basis import BasisRequest, BasisResult, base_basis, build_basis
from coxbasis.certify import VERDICT_FREE
from coxbasis.coxeter import Multiplicity, is_invariant_derivation
from coxbasis.derivations import Derivation
from coxbasis.errors import CertificateFailed, NotABasis
from coxbasis.poly import Poly


def make_request(pipeline, label, mult_values, k, **kw):
    group, arrangement, system = pipeline(label)
    if isinstance(mult_values, int):
        mult = Multiplicity.constant(arrangement, mult_values)
    else:
        mult = Multiplicity.from_orbit_values(arrangement, mult_values)
    return BasisRequest(group=group, arrangement=arrangement, system=system,
                        multiplicity=mult, k=k, **kw)


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "B2", "B3", "G2"])
@pytest.mark.parametrize("m", [0, 1])
@pytest.mark.parametrize("k", [1, 2])
def test_constant_multiplicity_sweep(pipeline, label, m, k):
    request = make_request(pipeline, label, m, k)
    result = build_basis(request)
    group = request.group
    h = group.datum.coxeter_number
    assert result.certificate.verdict == VERDICT_FREE
    base_degrees = tuple(b.degree() for b in result.base_members)
    assert result.member_degrees == tuple(k * h + d for d in base_degrees)
    expected_sum = 2 * k * len(request.arrangement) + request.multiplicity.total()
    assert sum(result.member_degrees) == expected_sum
    assert result.shifted_multiplicity.values == tuple(m + 2 * k for _ in request.arrangement.hyperplanes)


def test_base_source_selection(pipeline):
    req0 = make_request(pipeline, "B2", 0, 1)
    source, members, cert = base_basis(req0)
    assert source == "coordinate"
    assert cert is None
    assert members == tuple(Derivation.coordinate(2, i) for i in range(2))

    req1 = make_request(pipeline, "B2", 1, 1)
    source, members, cert = base_basis(req1)
    assert source == "gradient"
    assert cert is not None and cert.is_free
    assert members == req1.system.gradients

    reqm = make_request(pipeline, "B2", [1, 0], 1)
    source, members, cert = base_basis(reqm)
    assert source == "oracle"
    assert cert is not None and cert.is_free


def test_oracle_base_for_mixed_multiplicity(pipeline):
    # both mixed 0/1 patterns on the two B2 orbits have free base modules
    for values in ([1, 0], [0, 1]):
        request = make_request(pipeline, "B2", values, 0, base_source="oracle")
        source, members, cert = base_basis(request)
        assert cert.is_free
        assert sorted(m.degree() for m in members) == [1, 1]
        assert cert.degree_sum == request.multiplicity.total() == 2


def test_oracle_matches_gradient_for_constant_one(pipeline):
    request = make_request(pipeline, "A2", 1, 0, base_source="oracle")
    source, members, cert = base_basis(request)
    assert source == "oracle"
    assert cert.is_free
    assert tuple(m.degree() for m in members) == request.system.exponents


def test_mixed_multiplicity_shift(pipeline):
    request = make_request(pipeline, "B2", [1, 0], 1)
    result = build_basis(request)
    assert result.certificate.is_free
    assert result.base_source == "oracle"
    assert sum(result.member_degrees) == 2 * len(request.arrangement) + 2
    assert result.shifted_multiplicity.per_orbit() == [3, 2]


def test_k_zero_returns_certified_base(pipeline):
    request = make_request(pipeline, "B2", 1, 0)
    result = build_basis(request)
    assert result.members == request.system.gradients
    assert result.universal.degree() == 1  # the Euler field itself
    assert result.certificate.is_free


def test_members_are_invariant_exactly_for_full_invariant_base(pipeline):
    # gradient base members are invariant, so the shifted members are too
    request = make_request(pipeline, "A2", 1, 1)
    result = build_basis(request)
    for member in result.members:
        assert is_invariant_derivation(request.group, member)


def test_user_base_accepted_and_certified(pipeline):
    request0 = make_request(pipeline, "B2", 1, 1)
    gradients = request0.system.gradients
    request = make_request(pipeline, "B2", 1, 1, base_source="user",
                           user_base=list(gradients))
    result = build_basis(request)
    assert result.base_source == "user"
    assert result.certificate.is_free
    ref = build_basis(request0)
    assert result.members == ref.members


def test_user_base_rejected_when_not_a_basis(pipeline):
    bad = [Derivation.coordinate(2, 0), Derivation.coordinate(2, 1)]
    request = make_request(pipeline, "B2", 1, 0, base_source="user", user_base=bad)
    with pytest.raises(NotABasis) as info:
        build_basis(request)
    assert info.value.certificate is not None
    assert info.value.certificate.verdict != VERDICT_FREE


def test_coordinate_source_rejects_nonzero_multiplicity(pipeline):
    request = make_request(pipeline, "B2", 1, 0, base_source="coordinate")
    with pytest.raises(NotABasis):
        base_basis(request)


def test_request_validation(pipeline):
    group, arrangement, system = pipeline("B2")
    mult = Multiplicity.constant(arrangement, 1)
    with pytest.raises(ValueError):
        BasisRequest(group=group, arrangement=arrangement, system=system,
                     multiplicity=mult, k=-1)
    with pytest.raises(ValueError):
        BasisRequest(group=group, arrangement=arrangement, system=system,
                     multiplicity=Multiplicity.constant(arrangement, 2), k=1)
    with pytest.raises(ValueError):
        BasisRequest(group=group, arrangement=arrangement, system=system,
                     multiplicity=mult, k=1, base_source="nonsense")
    with pytest.raises(ValueError):
        BasisRequest(group=group, arrangement=arrangement, system=system,
                     multiplicity=mult, k=1, base_source="user")
