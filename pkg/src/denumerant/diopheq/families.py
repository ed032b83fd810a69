"""Polynomial solution families of quadratic-versus-higher subproblems.

For F(m, n) = p(m) - q(n) with p quadratic, an infinite family needs the
discriminant G(n) = Disc_m(F) to be a square along a parametrised n, so
H = Disc_n(G) must vanish. When G is a square outright, or becomes one
after n = alpha*u^2 + beta, the roots m(u) are polynomials and each
integral residue class of u gives a family.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sympy import factorint

from ..errors import DegreeUnsupported, ZeroPolynomial
from ..models.certificates import CertificateKind, EquationKind, SolutionCertificate
from ..polyratio import RatPoly, discriminant, perfect_square_root, squarefree_decompose
from ..services.oracle_service import FAMILY_CHECKS, ValueOracle
from .subproblems import ResidueSubproblem

logger = logging.getLogger(__name__)


def discriminant_in_m(sub: ResidueSubproblem) -> RatPoly:
    """G(n) = Disc_m(p(m) - q(n))."""
    if sub.p.degree != 2:
        raise DegreeUnsupported(f"Left piece of {sub.label} is not quadratic")
    value = discriminant(sub.polynomial, "m")
    assert isinstance(value, RatPoly)
    return value


def h_invariant(sub: ResidueSubproblem) -> Fraction:
    """H = Disc_n(Disc_m(F)); zero is necessary for infinitely many solutions."""
    g = discriminant_in_m(sub)
    value = discriminant(g)
    assert isinstance(value, Fraction)
    return value


def _squarefree_kernel(n: int) -> int:
    return math.prod(p for p, e in factorint(n).items() if e % 2)


def _square_substitution(g: RatPoly) -> Optional[RatPoly]:
    """n(u) making G(n(u)) a square, when G = K (n - r) h(n)^2 with K > 0."""
    decomposition = squarefree_decompose(g)
    odd = decomposition.odd_part()
    if odd.degree != 1:
        return None
    content = Fraction(decomposition.content)
    if content <= 0:
        return None
    root = -odd.coeff(0)
    num, den = content.numerator, content.denominator
    # K * alpha is a rational square for alpha = core(num*den) / (den*q)^2,
    # q the denominator of r, so n(u) is integral on some classes of u.
    scale = den * root.denominator
    alpha = Fraction(_squarefree_kernel(num * den), scale * scale)
    return RatPoly([root, 0, alpha])


def _cauchy_bound(poly: RatPoly) -> int:
    if poly.degree < 1:
        return 0
    lead = abs(poly.lead)
    return 1 + math.ceil(max(abs(c) / lead for c in poly.coeffs[:-1]))


def _integral_classes(polys: Sequence[RatPoly]) -> Tuple[int, List[int]]:
    """Coarsest (modulus, residues) on which every polynomial is integral."""
    den = 1
    for poly in polys:
        den = math.lcm(den, poly.denominator_lcm())
    modulus = 2 * den
    good = [
        r for r in range(modulus)
        if all(poly.evaluate(r).denominator == 1 for poly in polys)
    ]
    for d in (d for d in range(1, modulus + 1) if modulus % d == 0):
        reduced = sorted({r % d for r in good})
        if len(reduced) * (modulus // d) == len(good):
            return d, reduced
    return modulus, good


def _first_nonnegative(polys: Sequence[RatPoly], modulus: int, residue: int) -> int:
    """Smallest u in the class past which every polynomial stays nonnegative."""
    bound = max(_cauchy_bound(p) for p in polys)
    start = residue
    u = residue
    while u <= bound:
        if any(p.evaluate(u) < 0 for p in polys):
            start = u + modulus
        u += modulus
    return start


def detect_family(
    sub: ResidueSubproblem,
    oracle: Optional[ValueOracle] = None,
    checks: int = FAMILY_CHECKS,
) -> Optional[List[SolutionCertificate]]:
    """Verified polynomial families of a subproblem, or None if there are none."""
    if sub.p.degree != 2 or sub.q.degree not in (2, 3, 4):
        return None
    g = discriminant_in_m(sub)
    if g.is_zero:
        n_of_u = RatPoly.variable()
        sigma: Optional[RatPoly] = RatPoly()
    else:
        n_of_u = RatPoly.variable()
        sigma = perfect_square_root(g)
        if sigma is None:
            substitution = _square_substitution(g)
            if substitution is None:
                return None
            n_of_u = substitution
            try:
                sigma = perfect_square_root(g.compose(n_of_u))
            except ZeroPolynomial:
                sigma = RatPoly()
            if sigma is None:
                return None
    assert sigma is not None

    f = sub.polynomial
    a = f.coeff(2).compose(n_of_u)
    b = f.coeff(1).compose(n_of_u)
    roots = {(-b + sigma) / (a * 2), (-b - sigma) / (a * 2)}

    oracle = oracle or ValueOracle()
    certificates: List[SolutionCertificate] = []
    for m_of_u in sorted(roots, key=lambda r: r.to_strings()):
        certificates.extend(_certify_branch(sub, m_of_u, n_of_u, oracle, checks))
    if not certificates:
        logger.debug("%s: square discriminant but no integral branch", sub.label)
        return None
    return certificates


def _certify_branch(
    sub: ResidueSubproblem,
    m_of_u: RatPoly,
    n_of_u: RatPoly,
    oracle: ValueOracle,
    checks: int,
) -> List[SolutionCertificate]:
    assert f_vanishes(sub, m_of_u, n_of_u)
    # Branches that turn negative for large u give finitely many points.
    if any(p.degree >= 1 and p.lead < 0 for p in (m_of_u, n_of_u)):
        return []
    if m_of_u.degree < 1 and n_of_u.degree < 1:
        return []
    modulus, residues = _integral_classes([m_of_u, n_of_u])
    x_map = m_of_u * sub.left_modulus + sub.left_residue
    y_map = n_of_u * sub.right_modulus + sub.right_residue

    found = []
    for residue in residues:
        start = _first_nonnegative([m_of_u, n_of_u], modulus, residue)
        cert = SolutionCertificate(
            equation=f"P_{sub.left}(x) = P_{sub.right}(y)",
            equation_kind=EquationKind.EQUAL_VALUES,
            left=sub.left,
            right=sub.right,
            kind=CertificateKind.POLY_FAMILY,
            x_map=x_map,
            y_map=y_map,
            parameter_modulus=modulus,
            parameter_residue=residue,
            parameter_start=start,
            notes=[f"from {sub.label}, m = {m_of_u.format('u')}, n = {n_of_u.format('u')}"],
        )
        ok = True
        for u in cert.parameters(checks):
            x, y = cert.family_point(u)
            step = oracle.check(EquationKind.EQUAL_VALUES, sub.left, sub.right, x, y, u)
            cert.transcript.append(step)
            if not step.ok:
                logger.warning("%s: family fails at u=%d", sub.label, u)
                ok = False
                break
        if ok:
            cert.verified = True
            found.append(cert)
    return found


def f_vanishes(sub: ResidueSubproblem, m_of_u: RatPoly, n_of_u: RatPoly) -> bool:
    """p(m(u)) == q(n(u)) identically."""
    return sub.polynomial.substitute(m_of_u, n_of_u).is_zero
