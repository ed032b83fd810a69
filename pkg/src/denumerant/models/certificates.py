"""Certificates for solutions of equal-value and square-value equations."""
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from ..partcount import PartSet
from ..polyratio import BigInt, RatPoly


class EvaluationRoute(str, Enum):
    """How a partition value used in a verification was obtained."""
    DP = "dp"
    PEEL = "peel"
    QUASI = "quasi"
    SYMBOLIC = "symbolic"


class SearchStatus(str, Enum):
    """Whether an enumeration is exhaustive or only covers an explicit bound."""
    COMPLETE = "complete"
    BOUNDED = "bounded"


class EquationKind(str, Enum):
    EQUAL_VALUES = "equal_values"  # P_A(x) = P_B(y)
    SQUARE = "square"  # y^2 = P_A(x)
    POLY_VALUE = "poly_value"  # P_A(x) = f(y)


class CertificateKind(str, Enum):
    POINT = "point"
    POLY_FAMILY = "poly_family"
    PELL_FAMILY = "pell_family"


class VerificationStep(BaseModel):
    parameter: Optional[BigInt] = Field(None, description="Family parameter, if any")
    x: BigInt
    y: BigInt
    value: BigInt = Field(..., description="Shared value P_A(x)")
    route: EvaluationRoute = Field(EvaluationRoute.DP, description="How the value was obtained")
    ok: bool


class SolutionCertificate(BaseModel):
    """A verified point or family solving an equation in partition values."""
    equation: str = Field(..., description="Human-readable equation")
    equation_kind: EquationKind = Field(EquationKind.EQUAL_VALUES)
    left: PartSet = Field(..., description="A in P_A(x)")
    right: Optional[PartSet] = Field(None, description="B in P_B(y); absent for square equations")
    target: Optional[RatPoly] = Field(None, description="f in P_A(x) = f(y)")
    kind: CertificateKind

    point: Optional[Tuple[BigInt, BigInt]] = Field(None, description="(x, y) for point certificates")
    value: Optional[BigInt] = Field(None, description="Shared value for point certificates")

    x_map: Optional[RatPoly] = Field(None, description="x as a polynomial in the parameter u")
    y_map: Optional[RatPoly] = Field(None, description="y as a polynomial in the parameter u")
    parameter_modulus: int = Field(1, description="Parameter runs over u = residue mod modulus")
    parameter_residue: int = Field(0)
    parameter_start: int = Field(0, description="Smallest admissible parameter")

    pell_reference: Optional[str] = Field(None, description="Registry key for Pell families")

    verified: bool = False
    transcript: List[VerificationStep] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    def parameters(self, count: int) -> List[int]:
        """The first admissible parameter values of a polynomial family."""
        start = self.parameter_start
        offset = (self.parameter_residue - start) % self.parameter_modulus
        first = start + offset
        return [first + k * self.parameter_modulus for k in range(count)]

    def family_point(self, u: int) -> Tuple[int, int]:
        assert self.x_map is not None and self.y_map is not None
        return self.x_map.evaluate_int(u), self.y_map.evaluate_int(u)
