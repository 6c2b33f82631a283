"""Basic invariants, their Jacobian, and derived data.

Invariants are produced degree by degree: Reynolds averages of monomials
(walked in the global monomial order) are reduced against the subalgebra
generated by the invariants already chosen, and the first candidates with
nonzero reduction win.  A final determinant check confirms the Jacobian
of the full set is nonzero; if it is not, the selection backtracks to the
next candidate combination.  Each chosen invariant is normalized to
leading coefficient 1, so the whole system is deterministic.

The Jacobian matrix M[i][j] = dP_j/dx_i has determinant J equal to the
defining polynomial of the arrangement up to a nonzero scalar, which is
recorded.  Its cofactors drive both the coordinate expression of the
fields d/dP_j (column j of the cofactor matrix over J) and therefore the
whole connection layer.

Systems can be cached to disk as JSON, keyed by type, rank and field,
with every coefficient stored as an exact string.  A loaded system is
revalidated before use and recomputed on any mismatch.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from fractions import Fraction
from pathlib import Path
from typing import Iterator, Sequence

from .coxeter import Arrangement, ReflectionGroup, act, reynolds
from .derivations import Derivation
from .errors import JacobianDegenerate
from .linalg import PolyMatrix
from .poly import Poly, monomials_of_degree
from .scalars import Scalar, format_scalar, parse_scalar, scalar_inverse


class InvariantSystem:
    """A full set of basic invariants with Jacobian data attached."""

    def __init__(self, label: str, nvars: int, degrees: tuple[int, ...],
                 polys: tuple[Poly, ...], jacobian: Poly, jacobian_scalar: Scalar,
                 cofactors: tuple[tuple[Poly, ...], ...],
                 gradients: tuple[Derivation, ...]) -> None:
        self.label = label
        self.nvars = nvars
        self.degrees = degrees
        self.polys = polys
        self.jacobian = jacobian
        self.jacobian_scalar = jacobian_scalar
        self.cofactors = cofactors
        self.gradients = gradients
        self._powers: dict[tuple[int, int], Poly] = {}

    @property
    def coxeter_number(self) -> int:
        return self.degrees[-1]

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(d - 1 for d in self.degrees)

    def power(self, j: int, e: int) -> Poly:
        """P_j**e with caching; these powers recur in every expansion."""
        if e == 0:
            return Poly.constant(self.nvars, Fraction(1))
        key = (j, e)
        got = self._powers.get(key)
        if got is None:
            got = self.power(j, e - 1) * self.polys[j]
            self._powers[key] = got
        return got

    def expand(self, exps: Sequence[int]) -> Poly:
        """Expand a monomial in the invariants to coordinates."""
        out = Poly.constant(self.nvars, Fraction(1))
        for j, e in enumerate(exps):
            if e:
                out = out * self.power(j, e)
        return out

    def invariant_exponents(self, degree: int) -> Iterator[tuple[int, ...]]:
        """Exponent vectors of invariant monomials of the given x-degree."""
        yield from _weighted_exponents(self.degrees, degree)

    def invariant_basis(self, degree: int) -> list[Poly]:
        """Monomials in the invariants spanning the invariants of one degree."""
        return [self.expand(e) for e in self.invariant_exponents(degree)]

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "nvars": self.nvars,
            "degrees": list(self.degrees),
            "polys": [_poly_to_json(p) for p in self.polys],
            "jacobian_scalar": format_scalar(self.jacobian_scalar),
        }

    def fingerprint(self) -> str:
        blob = json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode("utf-8")).hexdigest()


class _LazyCandidates:
    """Candidate invariants, produced on demand in monomial order."""

    def __init__(self, gen: Iterator[Poly]) -> None:
        self._gen = gen
        self._items: list[Poly] = []

    def get(self, idx: int) -> Poly | None:
        while len(self._items) <= idx:
            nxt = next(self._gen, None)
            if nxt is None:
                return None
            self._items.append(nxt)
        return self._items[idx]


def _weighted_exponents(weights: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    if total < 0:
        return
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[0]
    for e in range(total // w, -1, -1):
        for rest in _weighted_exponents(weights[1:], total - e * w):
            yield (e,) + rest


def _poly_to_json(p: Poly) -> list:
    return [[list(exps), format_scalar(coeff)] for exps, coeff in p.terms_sorted()]


def _poly_from_json(data: list, nvars: int) -> Poly:
    return Poly(nvars, {tuple(exps): parse_scalar(coeff) for exps, coeff in data})


def jacobian_matrix(polys: Sequence[Poly]) -> PolyMatrix:
    """Matrix with entry (i, j) equal to dP_j/dx_i."""
    n = polys[0].nvars
    return PolyMatrix([[polys[j].partial(i) for j in range(len(polys))] for i in range(n)])


def _cofactor_matrix(m: PolyMatrix) -> tuple[tuple[Poly, ...], ...]:
    n = m.nrows
    if n == 1:
        return ((Poly.constant(m.entry(0, 0).nvars, Fraction(1)),),)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = m.minor(i, j).det()
            row.append(minor if (i + j) % 2 == 0 else -minor)
        out.append(tuple(row))
    return tuple(out)


def compute_invariants(group: ReflectionGroup, arrangement: Arrangement,
                       cache_dir: str | Path | None = None) -> InvariantSystem:
    """Select basic invariants for the group, optionally using a disk cache."""
    datum = group.datum
    path = None
    if cache_dir is not None:
        path = Path(cache_dir) / ("invariants_%s_%s.json"
                                  % (datum.label.replace("(", "").replace(")", ""),
                                     "Q" if datum.disc == 1 else "Qsqrt%d" % datum.disc))
        system = _load_cache(path, group, arrangement)
        if system is not None:
            return system
    system = _select_invariants(group, arrangement)
    if path is not None:
        _store_cache(path, system)
    return system


def _select_invariants(group: ReflectionGroup, arrangement: Arrangement) -> InvariantSystem:
    datum = group.datum
    n = datum.rank
    levels: list[tuple[int, int]] = []
    for d in sorted(set(datum.degrees)):
        levels.append((d, datum.degrees.count(d)))

    q_poly = arrangement.defining_polynomial

    def candidates_at(degree: int) -> "_LazyCandidates":
        def gen():
            for exps in monomials_of_degree(n, degree):
                avg = reynolds(group, Poly.monomial(n, exps))
                if not avg.is_zero:
                    yield avg
        return _LazyCandidates(gen())

    def dfs(level: int, chosen: list[tuple[int, Poly]]) -> list[Poly] | None:
        if level == len(levels):
            polys = [p for _, p in chosen]
            jac = jacobian_matrix(polys).det()
            return polys if not jac.is_zero else None
        degree, count = levels[level]
        cands = candidates_at(degree)
        monos = list(monomials_of_degree(n, degree))
        index = {m: k for k, m in enumerate(monos)}

        def vectorize(p: Poly) -> list[Scalar]:
            v: list[Scalar] = [Fraction(0)] * len(monos)
            for exps, coeff in p.terms.items():
                v[index[exps]] = coeff
            return v

        # echelon rows spanning the subalgebra of lower invariants at this degree
        rows: list[tuple[int, list[Scalar]]] = []

        def reduce_vec(v: list[Scalar]) -> list[Scalar]:
            v = list(v)
            for pivot, row in rows:
                f = v[pivot]
                if f != 0:
                    v = [a - f * b for a, b in zip(v, row)]
            return v

        def add_row(v: list[Scalar]) -> None:
            # keep the rows fully inter-reduced so one reduction pass suffices
            pivot = next(k for k, a in enumerate(v) if a != 0)
            inv = scalar_inverse(v[pivot])
            new_row = [inv * a for a in v]
            for k, (p, row) in enumerate(rows):
                f = row[pivot]
                if f != 0:
                    rows[k] = (p, [a - f * b for a, b in zip(row, new_row)])
            rows.append((pivot, new_row))
            rows.sort(key=lambda t: t[0])

        weights = [d for d, _ in chosen]
        for exps in _weighted_exponents(weights, degree):
            prod = Poly.constant(n, Fraction(1))
            for (_, p), e in zip(chosen, exps):
                prod = prod * p ** e
            red = reduce_vec(vectorize(prod))
            if any(a != 0 for a in red):
                add_row(red)

        def pick(start: int, picked: list[Poly]) -> list[Poly] | None:
            if len(picked) == count:
                return dfs(level + 1, chosen + [(degree, p) for p in picked])
            idx = start
            while True:
                cand = cands.get(idx)
                if cand is None:
                    return None
                red = reduce_vec(vectorize(cand))
                idx += 1
                if all(a == 0 for a in red):
                    continue
                reduced_poly = Poly(n, {monos[k]: c for k, c in enumerate(red)}).monic()
                checkpoint = list(rows)
                add_row(red)
                result = pick(idx, picked + [reduced_poly])
                if result is not None:
                    return result
                rows.clear()
                rows.extend(checkpoint)

        return pick(0, [])

    polys = dfs(0, [])
    if polys is None:
        raise JacobianDegenerate("no candidate invariants give a nonzero Jacobian for %s"
                                 % datum.label)
    return _finish_system(datum.label, n, datum.degrees, tuple(polys), q_poly, datum.gram)


def _finish_system(label: str, nvars: int, degrees: tuple[int, ...], polys: tuple[Poly, ...],
                   q_poly: Poly, gram) -> InvariantSystem:
    m = jacobian_matrix(polys)
    jac = m.det()
    scalar_poly = jac.divide_exact(q_poly)
    if scalar_poly.total_degree() != 0:
        raise JacobianDegenerate("Jacobian is not a scalar multiple of the defining polynomial")
    jac_scalar = scalar_poly.leading_coefficient()
    cof = _cofactor_matrix(m)
    # the invariant form on covectors has matrix `gram`; pairing the partials
    # of P_j against it is what makes the gradient field equivariant
    gradients = []
    for j in range(len(polys)):
        coeffs = []
        for i in range(nvars):
            acc = Poly.zero(nvars)
            for i2 in range(nvars):
                entry = m.entry(i2, j)
                if not entry.is_zero and gram[i][i2] != 0:
                    acc = acc + entry.scale(gram[i][i2])
            coeffs.append(acc)
        gradients.append(Derivation(coeffs))
    return InvariantSystem(label, nvars, tuple(degrees), polys, jac, jac_scalar,
                           cof, tuple(gradients))


def gradient_basis(system: InvariantSystem) -> tuple[Derivation, ...]:
    """Gradient fields of the basic invariants; a Saito basis for m = 1."""
    return system.gradients


def partial_P_field(system: InvariantSystem, j: int) -> tuple[Derivation, Poly]:
    """The field d/dP_j as (polynomial numerator field, denominator J).

    The numerator coefficients form column j of the Jacobian cofactor
    matrix, so d/dP_j = (1/J) * sum_i C[i][j] d/dx_i.
    """
    coeffs = [system.cofactors[i][j] for i in range(system.nvars)]
    return Derivation(coeffs), system.jacobian


def _validate_system(system: InvariantSystem, group: ReflectionGroup,
                     arrangement: Arrangement) -> bool:
    datum = group.datum
    if system.degrees != datum.degrees or system.nvars != datum.rank:
        return False
    for p, d in zip(system.polys, system.degrees):
        if p.is_zero or not p.is_homogeneous() or p.homogeneous_degree() != d:
            return False
        if p.leading_coefficient() != 1:
            return False
        if any(act(g, p) != p for g in group.generators):
            return False
    try:
        check = system.jacobian.divide_exact(arrangement.defining_polynomial)
    except Exception:
        return False
    return check.total_degree() == 0 and check.leading_coefficient() == system.jacobian_scalar


def _load_cache(path: Path, group: ReflectionGroup, arrangement: Arrangement) -> InvariantSystem | None:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, ValueError):
        return None
    try:
        nvars = int(data["nvars"])
        degrees = tuple(int(d) for d in data["degrees"])
        polys = tuple(_poly_from_json(p, nvars) for p in data["polys"])
        system = _finish_system(data["label"], nvars, degrees, polys,
                                arrangement.defining_polynomial, group.datum.gram)
    except Exception:
        return None
    if not _validate_system(system, group, arrangement):
        return None
    return system


def _store_cache(path: Path, system: InvariantSystem) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    blob = json.dumps(system.to_json_dict(), sort_keys=True, indent=2)
    fd, tmp = tempfile.mkstemp(dir=str(path.parent), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(blob)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
