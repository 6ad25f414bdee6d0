"""Named result of one exact identity check."""
from __future__ import annotations

from dataclasses import dataclass, field

from .ratpoly import RatPoly

# Numeric corroboration points recorded in every report.
SPOT_POINTS = ((1, 1), (2, 1))


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of comparing two polynomials for one identity instance.

    On failure both sides are retained verbatim as the witness.  The
    spot checks evaluate both sides at small integer points and are
    stored as exact rational strings.
    """

    name: str
    n: int
    aux_k: int | None
    lhs: RatPoly
    rhs: RatPoly
    passed: bool
    spot_checks: dict[str, dict[str, str]] = field(compare=False, default_factory=dict)

    @classmethod
    def from_sides(
        cls,
        name: str,
        n: int,
        lhs: RatPoly,
        rhs: RatPoly,
        aux_k: int | None = None,
    ) -> "IdentityReport":
        spot = {
            f"x={x0},y={y0}": {
                "lhs": str(lhs.eval_at(x0, y0)),
                "rhs": str(rhs.eval_at(x0, y0)),
            }
            for x0, y0 in SPOT_POINTS
        }
        return cls(
            name=name,
            n=n,
            aux_k=aux_k,
            lhs=lhs,
            rhs=rhs,
            passed=lhs == rhs,
            spot_checks=spot,
        )

    def to_json_dict(self) -> dict:
        """One JSON object per report; `pass` key per the wire schema."""
        return {
            "name": self.name,
            "n": self.n,
            "k": self.aux_k,
            "pass": self.passed,
            "lhs": self.lhs.render(),
            "rhs": self.rhs.render(),
            "spot_checks": self.spot_checks,
        }
