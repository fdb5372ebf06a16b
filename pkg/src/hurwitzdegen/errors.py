"""Exception types shared across the package."""

from __future__ import annotations


class HurwitzDegenError(Exception):
    """Base class for all package errors."""


class DegreeMismatch(HurwitzDegenError):
    """Generators act on different numbers of points."""


class ClosureBoundExceeded(HurwitzDegenError):
    """Group closure grew past the configured element bound."""


class NotACharacter(HurwitzDegenError):
    """The supplied +-1 function on a subgroup is not multiplicative."""


class NotStrict(HurwitzDegenError):
    """Chain-complex operation applied to a graph with a self-opposite edge."""


class ProductNotOne(HurwitzDegenError):
    """Tuple entries do not multiply to the identity."""


class InvalidDatum(HurwitzDegenError):
    """Operation requires a boundary datum that validates cleanly."""

    def __init__(self, violations):
        self.violations = list(violations)
        lines = "; ".join(f"{v.kind} at {v.location}: {v.detail}" for v in self.violations)
        super().__init__(f"datum does not validate: {lines}")


class NonIntegralGenus(HurwitzDegenError):
    """Riemann-Hurwitz bookkeeping produced a non-integral genus."""


class NegativeGenus(HurwitzDegenError):
    """Riemann-Hurwitz bookkeeping produced a negative genus."""


class Disconnected(HurwitzDegenError):
    """Operation requires a connected cover."""


class PositiveGenusComponents(HurwitzDegenError):
    """Character extraction needs every normalization component rational."""


class TooFewPoints(HurwitzDegenError):
    """Tuple too short to admit stable degenerations."""


class OddOrder(HurwitzDegenError):
    """Dihedral stabilizer order must be even."""


class SchemaError(HurwitzDegenError):
    """Input JSON does not match the documented schema."""

    def __init__(self, path: str, detail: str):
        self.path = path
        self.detail = detail
        super().__init__(f"{path}: {detail}")
