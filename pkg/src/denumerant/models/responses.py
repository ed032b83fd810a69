"""Response models returned by command handlers."""
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from ..partcount import PartSet
from ..polyratio import BigInt, RatPoly
from .certificates import SearchStatus, SolutionCertificate
from .report import CheckResult


class CommandResponse(BaseModel):
    success: bool = True
    error: Optional[str] = Field(None, description="Error message if the command failed")


class CountRow(BaseModel):
    n: int
    value: BigInt


class CountResponse(CommandResponse):
    parts: Optional[PartSet] = None
    rows: List[CountRow] = Field(default_factory=list)


class PieceRow(BaseModel):
    modulus: int
    residue: int
    piece: RatPoly
    text: str = Field(..., description="Piece as a readable polynomial in n")


class DecomposeResponse(CommandResponse):
    parts: Optional[PartSet] = None
    modulus: Optional[int] = None
    pieces: List[PieceRow] = Field(default_factory=list)


class PellResponse(CommandResponse):
    d: Optional[int] = None
    solutions: List[Tuple[BigInt, BigInt]] = Field(default_factory=list)


class ConicResponse(CommandResponse):
    equation: Optional[str] = None
    solutions: List[Tuple[BigInt, BigInt]] = Field(default_factory=list)
    d: Optional[int] = None
    n_value: Optional[BigInt] = None
    automorphism: Optional[Tuple[BigInt, BigInt]] = None
    status: Optional[SearchStatus] = None


class CurveSummary(BaseModel):
    subproblem: str
    equation: str
    x_bound: int
    points: int = Field(..., description="Integral curve points found")
    pulled_back: List[Tuple[int, int]] = Field(default_factory=list, description="(x, y) solutions")
    status: SearchStatus = SearchStatus.BOUNDED


class SolveResponse(CommandResponse):
    equation: Optional[str] = None
    subproblems: int = 0
    certificates: List[SolutionCertificate] = Field(default_factory=list)
    families: List[SolutionCertificate] = Field(default_factory=list)
    curves: List[CurveSummary] = Field(default_factory=list)
    inconclusive: bool = Field(False, description="Only bounded searches cover some subproblems")


class SquareRow(BaseModel):
    parts: PartSet
    modulus: int
    residue: int
    root: List[str] = Field(default_factory=list, description="Root coefficients, low degree first")
    integral: bool = True


class HuntSquaresResponse(CommandResponse):
    points: List[Tuple[int, BigInt]] = Field(default_factory=list, description="(x, y) with y^2 = P_A(x)")
    integral_count: Optional[int] = None
    rational_count: Optional[int] = None
    rows: List[SquareRow] = Field(default_factory=list)
    shapes: List[Dict[str, Any]] = Field(default_factory=list, description="Square-times-linear pieces")


class FamiliesResponse(CommandResponse):
    family: Optional[Dict[str, Any]] = None
    results: List[CheckResult] = Field(default_factory=list)


class VerifyResponse(CommandResponse):
    selection: List[str] = Field(default_factory=list)
    exit_code: int = 0
    results: List[CheckResult] = Field(default_factory=list)
