"""Near-inverses: inverses up to a near-identity with infinitesimal tolerance."""

from __future__ import annotations

from dataclasses import dataclass, field

from .determinant import cofactor_matrix, det
from .errors import BadTolerance, ConditionUnmet, HypothesisFailed, NotSquare, NotZeroless, TheoremViolation
from .external import ExternalNumber, absorber, ediv, einv
from .matrix import FlexMatrix, mmul, msubset, neutrix_over, smul, transpose
from .neutrix import OSLASH, ZERO_N, Neutrix, hull, nsum

__all__ = [
    "NearIdentity",
    "InverseReport",
    "is_nonsingular",
    "matrix_rel_uncertainty",
    "verify_inverse",
    "near_inverse",
    "inverse_symmetry",
    "tight_tolerance",
]


@dataclass(frozen=True)
class NearIdentity:
    """Identity of order ``n`` blurred by a tolerance neutrix inside ``o``."""

    n: int
    tolerance: Neutrix

    def __post_init__(self):
        if not self.tolerance <= OSLASH:
            raise BadTolerance(f"tolerance {self.tolerance} is not contained in o")

    def matrix(self) -> FlexMatrix:
        t = self.tolerance
        return FlexMatrix([[ExternalNumber(1 if i == j else 0, t) for j in range(self.n)] for i in range(self.n)])

    def contains(self, m: FlexMatrix) -> bool:
        return m.shape == (self.n, self.n) and msubset(m, self.matrix())


def _square(a: FlexMatrix) -> int:
    if not a.is_square:
        raise NotSquare(f"matrix of shape {a.shape} is not square")
    return a.nrows


def is_nonsingular(a: FlexMatrix) -> bool:
    _square(a)
    return det(a).zeroless


def matrix_rel_uncertainty(a: FlexMatrix) -> ExternalNumber:
    """Determinant divided by the n-th power of the largest absolute entry."""
    n = _square(a)
    amax = a.max_abs()
    if not amax.zeroless:
        raise NotZeroless("the largest absolute entry must be zeroless")
    return ediv(det(a), amax**n)


def tight_tolerance(m: FlexMatrix) -> Neutrix:
    """Smallest representable ``N`` with ``m`` inside the near-identity ``I(N)``."""
    out = ZERO_N
    for i, row in enumerate(m.rows):
        for j, x in enumerate(row):
            out = nsum(out, nsum(x.neut, hull(x.rep - (1 if i == j else 0))))
    return out


@dataclass
class InverseReport:
    """Candidate inverse, tolerance, inclusion verdicts and hypothesis flags.

    ``tight_tolerance`` is the smallest representable neutrix for which both
    products fall inside the near-identity; the candidate works for some
    tolerance inside ``o`` exactly when it is itself inside ``o``.
    """

    candidate: FlexMatrix | None
    tolerance: Neutrix
    left_product: FlexMatrix | None = None
    right_product: FlexMatrix | None = None
    left_ok: bool = False
    right_ok: bool = False
    hypotheses: dict = field(default_factory=dict)
    tight_tolerance: Neutrix | None = None

    @property
    def ok(self) -> bool:
        return self.left_ok and self.right_ok

    @property
    def failed_hypotheses(self) -> list[str]:
        return [k for k, v in self.hypotheses.items() if not v]

    def lines(self) -> list[str]:
        out = [f"candidate: {self.candidate}", f"tolerance: {self.tolerance}"]
        out += [f"hypothesis {k}: {'holds' if v else 'violated'}" for k, v in self.hypotheses.items()]
        if self.candidate is not None:
            out.append(f"A*B: {self.left_product}")
            out.append(f"B*A: {self.right_product}")
            out.append(f"A*B inside I(N): {str(self.left_ok).lower()}")
            out.append(f"B*A inside I(N): {str(self.right_ok).lower()}")
            tt = self.tight_tolerance
            out.append(f"smallest working tolerance: {tt}" + ("" if tt <= OSLASH else " (not infinitesimal)"))
        return out


def verify_inverse(a: FlexMatrix, b: FlexMatrix, tolerance: Neutrix) -> InverseReport:
    n = _square(a)
    if b.shape != (n, n):
        raise NotSquare("candidate inverse must have the same order")
    ident = NearIdentity(n, tolerance)
    ab = mmul(a, b)
    ba = mmul(b, a)
    return InverseReport(
        candidate=b,
        tolerance=tolerance,
        left_product=ab,
        right_product=ba,
        left_ok=ident.contains(ab),
        right_ok=ident.contains(ba),
        tight_tolerance=nsum(tight_tolerance(ab), tight_tolerance(ba)),
    )


def near_inverse(a: FlexMatrix, strict: bool = False) -> InverseReport:
    """Adjugate over determinant, checked against the tolerance ``Nmax / amax``.

    The hypotheses are: the determinant is zeroless, the largest absolute
    entry is zeroless, and the relative uncertainty of the matrix does not
    absorb the largest entry neutrix.  When all hold both inclusions are
    asserted.  The report is returned either way; with ``strict`` a failed
    hypothesis raises :class:`HypothesisFailed` carrying the report.
    """
    n = _square(a)
    d = det(a)
    amax = a.max_abs()
    nmax = a.max_neutrix()
    hyp = {"non-singular": d.zeroless, "largest entry zeroless": amax.zeroless}
    if amax.zeroless:
        hyp["relative uncertainty not an absorber"] = not absorber(ediv(d, amax**n), nmax)
    else:
        hyp["relative uncertainty not an absorber"] = False
    tol = neutrix_over(nmax, amax) if amax.zeroless else OSLASH
    if not tol <= OSLASH:
        tol = OSLASH
    if d.zeroless:
        b = smul(einv(d), transpose(cofactor_matrix(a)))
        report = verify_inverse(a, b, tol)
    else:
        report = InverseReport(candidate=None, tolerance=tol)
    report.hypotheses = hyp
    if all(hyp.values()) and not report.ok:
        raise TheoremViolation(f"adjugate is not a near-inverse of {a} although all hypotheses hold")
    if strict and not all(hyp.values()):
        raise HypothesisFailed(report.failed_hypotheses, report)
    return report


def inverse_symmetry(a: FlexMatrix, b: FlexMatrix, tolerance: Neutrix) -> bool:
    """If ``b`` is a near-inverse of ``a`` then ``a`` is one of ``b``."""
    if not verify_inverse(a, b, tolerance).ok:
        raise ConditionUnmet("b is not a near-inverse of a for this tolerance")
    return verify_inverse(b, a, tolerance).ok
