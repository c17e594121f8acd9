"""Named 3-dimensional algebras: the Heisenberg families with their allowed
twist shapes, the classical Lie superalgebra list L1..L5 (with the split
variant L2'), and the three twisted families L12_43 / L12_45 / L12_46.

All catalog bases are ordered (even | odd, odd) with parities (0, 1, 1):

* Heisenberg even-generator shape: (h | v1, v2) with [v1, v2] = h.
* Heisenberg odd-generator shape: (u | v, h) with [u, v] = h.
* Lie list: (e1 | e2, e3).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import HomLieSuperalgebra, InvariantError, new_algebra
from .linalg import Matrix
from .scalars import ONE, ZERO, Scalar, as_scalar

PARITY_011 = (0, 1, 1)


@dataclass(frozen=True)
class CatalogId:
    family: str
    params: dict[str, Scalar] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "params", {k: as_scalar(v) for k, v in self.params.items()}
        )

    def __str__(self) -> str:
        if not self.params:
            return self.family
        inner = ", ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.family}({inner})"


# parameter names per family, in canonical order
FAMILY_PARAMS: dict[str, tuple[str, ...]] = {
    "h1_diag": ("mu11", "mu22"),
    "h1_antidiag": ("mu12", "mu21"),
    "h1_row": ("mu11", "mu12"),
    "h2_diag": ("mu0", "mu11"),
    "h2_offdiag": ("mu0", "mu11"),
    "L1": (),
    "L2": (),
    "L2prime": (),
    "L3_lambda": ("lam",),
    "L4": (),
    "L5": (),
    "L12_43": ("a", "beta", "gamma"),
    "L12_45": ("a", "beta", "nu", "gamma"),
    "L12_46": ("a", "b", "beta", "mu"),
}

HEISENBERG_FAMILIES = ("h1_diag", "h1_antidiag", "h1_row", "h2_diag", "h2_offdiag")


class ConstraintError(InvariantError):
    """Catalog parameters violate the family's constraints."""


def _require(condition: bool, message: str):
    if not condition:
        raise ConstraintError(message)


def _h1_bracket():
    # [v1, v2] = h
    return [(1, 2, (ONE, ZERO, ZERO))]


def _h2_bracket():
    # [u, v] = h
    return [(0, 1, (ZERO, ZERO, ONE))]


def catalog(cid: CatalogId) -> HomLieSuperalgebra:
    """Instantiate a named family at concrete parameter values."""
    family = cid.family
    if family not in FAMILY_PARAMS:
        raise ConstraintError(f"unknown catalog family {family!r}")
    expected = FAMILY_PARAMS[family]
    missing = [k for k in expected if k not in cid.params]
    extra = [k for k in cid.params if k not in expected]
    if missing or extra:
        raise ConstraintError(
            f"{family} takes parameters {expected}; missing {missing}, unexpected {extra}"
        )
    p = {k: cid.params[k] for k in expected}
    z, o = ZERO, ONE

    if family == "h1_diag":
        m11, m22 = p["mu11"], p["mu22"]
        _require(bool(m11 * m22), "h1_diag requires mu11 * mu22 != 0")
        alpha = Matrix([[m11 * m22, z, z], [z, m11, z], [z, z, m22]])
        return new_algebra(PARITY_011, _h1_bracket(), alpha)
    if family == "h1_antidiag":
        m12, m21 = p["mu12"], p["mu21"]
        _require(bool(m12 * m21), "h1_antidiag requires mu12 * mu21 != 0")
        alpha = Matrix([[m12 * m21, z, z], [z, z, m12], [z, m21, z]])
        return new_algebra(PARITY_011, _h1_bracket(), alpha)
    if family == "h1_row":
        m11, m12 = p["mu11"], p["mu12"]
        alpha = Matrix([[z, z, z], [z, m11, m12], [z, z, z]])
        return new_algebra(PARITY_011, _h1_bracket(), alpha)
    if family == "h2_diag":
        m0, m11 = p["mu0"], p["mu11"]
        alpha = Matrix([[m0, z, z], [z, m11, z], [z, z, m0 * m11]])
        return new_algebra(PARITY_011, _h2_bracket(), alpha)
    if family == "h2_offdiag":
        m0, m11 = p["mu0"], p["mu11"]
        _require(not (m0 - o) * m11, "h2_offdiag requires (mu0 - 1) * mu11 = 0")
        alpha = Matrix([[m0, z, z], [z, m11, z], [z, o, m11]])
        return new_algebra(PARITY_011, _h2_bracket(), alpha)

    identity = Matrix.identity(3)
    if family == "L1":
        return new_algebra(PARITY_011, [(1, 1, (o, z, z))], identity)
    if family == "L2":
        return new_algebra(PARITY_011, [(1, 1, (o, z, z)), (2, 2, (o, z, z))], identity)
    if family == "L2prime":
        return new_algebra(PARITY_011, _h1_bracket(), identity)
    if family == "L3_lambda":
        lam = p["lam"]
        return new_algebra(
            PARITY_011, [(0, 1, (z, o, z)), (0, 2, (z, z, lam))], identity
        )
    if family == "L4":
        return new_algebra(
            PARITY_011, [(0, 1, (z, o, z)), (0, 2, (z, o, o))], identity
        )
    if family == "L5":
        return new_algebra(PARITY_011, [(0, 2, (z, o, z))], identity)

    if family == "L12_43":
        a, beta, gamma = p["a"], p["beta"], p["gamma"]
        _require(bool(a), "L12_43 requires a != 0")
        sigma = Matrix([[z, z, z], [z, z, a], [z, z, z]])
        return new_algebra(
            PARITY_011, [(0, 2, (z, beta, z)), (2, 2, (gamma, z, z))], sigma
        )
    if family == "L12_45":
        a, beta, nu, gamma = p["a"], p["beta"], p["nu"], p["gamma"]
        _require(bool(a), "L12_45 requires a != 0")
        sigma = Matrix([[z, z, z], [z, z, a], [z, z, z]])
        return new_algebra(
            PARITY_011,
            [(0, 2, (z, beta, z)), (1, 2, (nu, z, z)), (2, 2, (gamma, z, z))],
            sigma,
        )
    if family == "L12_46":
        a, b, beta, mu = p["a"], p["b"], p["beta"], p["mu"]
        _require(bool(a * a + b * b), "L12_46 requires a^2 + b^2 != 0")
        sigma = Matrix([[z, z, z], [z, z, a], [z, z, b]])
        return new_algebra(
            PARITY_011, [(0, 2, (z, beta, z)), (1, 2, (mu, z, z))], sigma
        )
    raise AssertionError(f"unhandled family {family}")  # pragma: no cover
