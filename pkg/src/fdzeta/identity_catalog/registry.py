"""Identity records, parameter axes, and the global registry."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..numerics import EvalResult, Tolerance

Params = Dict[str, float]
Evaluator = Callable[[Params, Tolerance], EvalResult]
DomainPredicate = Callable[[Params], Optional[str]]

MELLIN_TOL = Tolerance(rel=1e-8, abs=1e-12)
LINE_BUDGET = Tolerance(rel=1e-6, abs=1e-9)
POINTWISE_TOL = Tolerance(rel=1e-10, abs=1e-12)


@dataclass(frozen=True)
class ParamAxis:
    """One free parameter.

    The default grid is ``(near-lower, interior, large)``: the lower bound
    itself when it is inclusive, 0.25 above it when strict, and twice the
    interior value (pulled back below an upper bound).  ``values``
    replaces that grid; ``span`` sets the range for random draws, which
    otherwise covers the grid.
    """

    name: str
    interior: float = 1.0
    lower: Optional[float] = None
    strict: bool = True
    upper: Optional[float] = None
    upper_strict: bool = True
    values: Optional[Tuple[float, ...]] = None
    span: Optional[Tuple[float, float]] = None
    integer: bool = False

    def grid(self) -> Tuple[float, ...]:
        if self.values is not None:
            return tuple(self.values)
        near = self.interior if self.lower is None else (
            self.lower + 0.25 if self.strict else self.lower)
        large = 2.0 * self.interior if self.interior != 0 else 1.0
        if self.upper is not None and large >= self.upper:
            large = (self.interior + self.upper) / 2 if self.upper_strict else self.upper
        out = []
        for v in (near, self.interior, large):
            if v not in out:
                out.append(v)
        return tuple(out)

    def random_range(self) -> Tuple[float, float]:
        if self.span is not None:
            return self.span
        g = self.grid()
        return min(g), max(g)


@dataclass(frozen=True)
class Erratum:
    """A printed form that differs from the derivable one.

    ``printed_lhs`` / ``printed_rhs`` replace the corresponding side when
    the printed form is evaluated; a missing one means that side is the
    same in both forms.
    """

    printed_form: str
    derived_form: str
    note: str
    printed_lhs: Optional[Evaluator] = None
    printed_rhs: Optional[Evaluator] = None


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    equation: str
    title: str
    axes: Tuple[ParamAxis, ...]
    domain: DomainPredicate
    lhs: Evaluator
    rhs: Evaluator
    tol_budget: Tolerance = LINE_BUDGET
    erratum: Optional[Erratum] = None
    constraint: str = ""
    grid_override: Optional[Tuple[Params, ...]] = None
    notes: str = ""

    @property
    def group(self) -> str:
        return self.id[0]

    def check_domain(self, params: Params) -> Optional[str]:
        """Name of the first violated condition, or None."""
        return self.domain(params)

    def default_grid(self) -> List[Params]:
        if self.grid_override is not None:
            return [dict(p) for p in self.grid_override]
        points: List[Params] = [{}]
        for axis in self.axes:
            points = [dict(p, **{axis.name: v}) for p in points for v in axis.grid()]
        return points


def requires(*conditions: Tuple[bool, str]) -> Optional[str]:
    """First failing ``(ok, text)`` pair's text."""
    for ok, text in conditions:
        if not ok:
            return text
    return None


_REGISTRY: Dict[str, IdentitySpec] = {}


def register(spec: IdentitySpec) -> IdentitySpec:
    if spec.id in _REGISTRY:
        raise ValueError(f"duplicate identity id {spec.id}")
    if any(s.equation == spec.equation for s in _REGISTRY.values()):
        raise ValueError(f"duplicate anchor {spec.equation}")
    _REGISTRY[spec.id] = spec
    return spec


def register_catalog() -> List[IdentitySpec]:
    """All identities, ordered by id."""
    if not _REGISTRY:
        from . import entries  # noqa: F401  (registers on import)
    return [_REGISTRY[k] for k in sorted(_REGISTRY)]


def get(identity_id: str) -> IdentitySpec:
    register_catalog()
    try:
        return _REGISTRY[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None


def known_ids() -> Sequence[str]:
    return [s.id for s in register_catalog()]
