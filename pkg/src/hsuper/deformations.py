"""First-order deformations of the bracket and normal forms.

A deformation replaces the bracket by bracket + t*phi for an even 2-cochain
phi commuting with the twist.  Validity is a pair of exact conditions: phi
is a 2-cocycle, and the cyclic circle product phi o phi vanishes.  The
module also normalizes an arbitrary 3-dimensional multiplicative Heisenberg
algebra onto its canonical family, returning a verified base-change witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    HomLieSuperalgebra,
    InvariantError,
    apply_base_change,
    center,
    check_hom_jacobi,
    check_multiplicative,
    check_skew,
    derived_ideal,
    is_heisenberg,
    is_lie_superalgebra,
    new_algebra,
    verify_isomorphism,
)
from .catalogs import CatalogId, catalog
from .cohomology import CochainComplex, Cochain, delta_value, canonical_tuples
from .linalg import (
    Matrix,
    Vector,
    add_vectors,
    invert,
    scale_vector,
    stack_columns,
    zero_vector,
)
from .scalars import ONE, ZERO, Scalar, as_scalar, sqrt_scalar


def _sign(p: int) -> Scalar:
    return as_scalar(-1 if p % 2 else 1)


class DeformationError(InvariantError):
    """The proposed cochain does not define a valid deformation."""


@dataclass(frozen=True)
class DeformationSpec:
    base: HomLieSuperalgebra
    phi: Cochain
    t: Scalar


def circle(
    g: HomLieSuperalgebra, phi: Cochain, psi: Cochain
) -> dict[tuple[int, int, int], Vector]:
    """Cyclic circle product evaluated on all canonical basis triples.

    (phi o psi)(x,y,z) = sum over cyclic (x,y,z) of
    (-1)^{|x||z|} phi(alpha(x), psi(y,z)).
    """
    out = {}
    for i in range(g.dim):
        for j in range(i, g.dim):
            for k in range(j, g.dim):
                total = zero_vector(g.dim)
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    sign = _sign(g.parity[a] * g.parity[c])
                    term = phi.evaluate(
                        g.alpha.column(a), psi.value((b, c))
                    )
                    total = add_vectors(total, scale_vector(sign, term))
                out[(i, j, k)] = total
    return out


def is_two_cocycle(g: HomLieSuperalgebra, phi: Cochain) -> bool:
    """True iff the degree-2 coboundary of phi vanishes."""
    if phi.degree != 2:
        raise ValueError("expected a 2-cochain")
    return all(
        not any(delta_value(g, phi, t)) for t in canonical_tuples(g, 3)
    )


def is_integrable(g: HomLieSuperalgebra, phi: Cochain) -> bool:
    """True iff phi o phi = 0, i.e. the deformed bracket satisfies the
    twisted Jacobi identity for every value of t."""
    return all(not any(v) for v in circle(g, phi, phi).values())


def deform(
    g: HomLieSuperalgebra, phi: Cochain, t: Scalar, allow_noncocycle: bool = False
) -> HomLieSuperalgebra:
    """The algebra (V, bracket + t*phi, alpha).

    The twist map is kept unchanged; twist conjugation belongs to the base
    changes used when matching a deformed algebra against a named target.
    """
    t = as_scalar(t)
    if phi.degree != 2 or phi.parity != 0:
        raise DeformationError("deforming cochain must be an even 2-cochain")
    cx = CochainComplex(g)
    if not cx.in_cochain_space(phi):
        raise DeformationError("deforming cochain does not commute with the twist map")
    if not allow_noncocycle:
        if not is_two_cocycle(g, phi):
            raise DeformationError("deforming cochain is not a 2-cocycle")
        if not is_integrable(g, phi):
            raise DeformationError("deforming cochain fails phi o phi = 0")
    entries = []
    for i in range(g.dim):
        for j in range(i, g.dim):
            value = add_vectors(
                g.table[i][j], scale_vector(t, phi.value((i, j)))
            )
            if any(value):
                entries.append((i, j, value))
    return new_algebra(g.parity, entries, g.alpha)


def equivalent_via(
    d1: DeformationSpec, d2: DeformationSpec, phi1: Cochain, exact: bool = False
) -> bool:
    """Whether Phi_t = id + t*phi1 intertwines the two deformed brackets.

    By default only the coefficients linear in t are matched (the condition
    phi - psi = coboundary(phi1) of the first-order theory); with
    `exact=True` the t^2 and t^3 coefficients must match as well.
    """
    g = d1.base
    if d2.base is not g and d2.base != g:
        raise ValueError("deformations must share the same base algebra")
    if d1.t != d2.t:
        raise ValueError("deformations must use the same parameter value")
    if phi1.degree != 1 or phi1.parity != 0:
        raise ValueError("equivalence map must come from an even 1-cochain")
    t = d1.t
    phi_map = Matrix(
        [[phi1.value((j,))[i] for j in range(g.dim)] for i in range(g.dim)]
    )
    big_phi = Matrix.identity(g.dim) + phi_map.scale(t)
    if invert(big_phi) is None:
        raise DeformationError("id + t*phi1 is singular at this t")
    phi, psi = d1.phi, d2.phi
    for i in range(g.dim):
        for j in range(g.dim):
            x = g.basis_vector(i)
            y = g.basis_vector(j)
            # order-1 coefficients of Phi_t([x,y]_t) and [Phi_t x, Phi_t y]_t'
            lhs1 = add_vectors(phi.value((i, j)), phi_map.apply(g.table[i][j]))
            rhs1 = add_vectors(
                psi.value((i, j)),
                add_vectors(
                    g.bracket(phi_map.apply(x), y), g.bracket(x, phi_map.apply(y))
                ),
            )
            if lhs1 != rhs1:
                return False
            if exact:
                lhs2 = phi_map.apply(phi.value((i, j)))
                rhs2 = add_vectors(
                    g.bracket(phi_map.apply(x), phi_map.apply(y)),
                    add_vectors(
                        psi.evaluate(phi_map.apply(x), y),
                        psi.evaluate(x, phi_map.apply(y)),
                    ),
                )
                rhs3 = psi.evaluate(phi_map.apply(x), phi_map.apply(y))
                if lhs2 != rhs2 or any(rhs3):
                    return False
    return True


def deformation_classes(
    g: HomLieSuperalgebra,
) -> list[tuple[Cochain, bool]]:
    """Even degree-2 cohomology representatives with integrability tags.

    An empty list means every infinitesimal deformation of g is trivial.
    """
    report = CochainComplex(g).cohomology(2)
    return [
        (rep, is_integrable(g, rep)) for rep in report.representatives_even
    ]


# -- normalization onto the classified families ------------------------------


@dataclass(frozen=True)
class NormalFormResult:
    canonical: CatalogId
    witness: Matrix


def _standard_basis_odd_generator(g, h: Vector) -> tuple[Vector, Vector]:
    """For an odd central generator: (u, v) with u even and [u, v] = h."""
    even = g.even_indices()
    if len(even) != 1:
        raise InvariantError("odd-generator Heisenberg shape needs a 1-dimensional even part")
    u = g.basis_vector(even[0])
    h_support = next(i for i, c in enumerate(h) if c)
    for j in g.odd_indices():
        w = g.basis_vector(j)
        bw = g.bracket(u, w)
        if any(bw):
            coeff = bw[h_support] / h[h_support]
            return u, scale_vector(coeff.inverse(), w)
    raise InvariantError("no odd partner pairing with the even generator")


def _standard_basis_even_generator(g, h: Vector) -> tuple[Vector, Vector]:
    """For an even central generator: odd (v1, v2) with [v1,v2] = h and
    [v1,v1] = [v2,v2] = 0 (hyperbolic pair of the induced symmetric form)."""
    odd = g.odd_indices()
    if len(odd) != 2:
        raise InvariantError("even-generator Heisenberg shape needs a 2-dimensional odd part")
    h_support = next(i for i, c in enumerate(h) if c)

    def form(x: Vector, y: Vector) -> Scalar:
        return g.bracket(x, y)[h_support] / h[h_support]

    w1, w2 = g.basis_vector(odd[0]), g.basis_vector(odd[1])
    a, b, c = form(w1, w1), form(w1, w2), form(w2, w2)
    if not a:
        x = w1
    elif not c:
        x = w2
    else:
        # isotropic vector w1 + t*w2: a + 2bt + ct^2 = 0
        disc = sqrt_scalar(b * b - a * c)
        if disc is None:
            raise InvariantError(
                "induced form has no isotropic vector over Q(i); cannot normalize"
            )
        t = (disc - b) / c
        x = add_vectors(w1, scale_vector(t, w2))
    y = w2 if any(g.bracket(x, w2)) else w1
    pairing = form(x, y)
    y = add_vectors(y, scale_vector(-form(y, y) / (2 * pairing), x))
    v2 = scale_vector(form(x, y).inverse(), y)
    return x, v2


def normalize_heisenberg(g: HomLieSuperalgebra) -> NormalFormResult:
    """Canonical family of a 3-dimensional multiplicative Heisenberg algebra,
    with a base-change witness verified before returning."""
    if g.dim != 3:
        raise InvariantError("normalization implemented for dimension 3")
    if not (check_skew(g) and check_hom_jacobi(g)):
        raise InvariantError("input fails the Hom-Lie superalgebra axioms")
    if not check_multiplicative(g):
        raise InvariantError("input twist map is not multiplicative")
    cert = is_heisenberg(g)
    if cert is None:
        raise InvariantError("input is not a Heisenberg algebra")
    if center(g).dim != 1:
        raise InvariantError("normalization needs a 1-dimensional center")

    h = cert.generator
    if cert.generator_parity == 1:
        u, v = _standard_basis_odd_generator(g, h)
        q = invert(stack_columns([u, v, h]))
        a = q @ g.alpha @ invert(q)
        mu0, mu11, mu21 = a[0, 0], a[1, 1], a[2, 1]
        assert not a[1, 2] and a[2, 2] == mu0 * mu11, "multiplicativity must force the twist shape"
        if not mu21:
            cid = CatalogId("h2_diag", {"mu0": mu0, "mu11": mu11})
            witness = q
        elif (mu0 - ONE) and mu11:
            b21 = -(ONE - mu0).inverse() * mu11.inverse() * mu21
            conj = Matrix(
                [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, b21, ONE]]
            )
            cid = CatalogId("h2_diag", {"mu0": mu0, "mu11": mu11})
            witness = conj @ q
        else:
            conj = Matrix(
                [
                    [mu21.inverse(), ZERO, ZERO],
                    [ZERO, ONE, ZERO],
                    [ZERO, ZERO, mu21.inverse()],
                ]
            )
            cid = CatalogId("h2_offdiag", {"mu0": mu0, "mu11": mu11})
            witness = conj @ q
    else:
        v1, v2 = _standard_basis_even_generator(g, h)
        q = invert(stack_columns([h, v1, v2]))
        a = q @ g.alpha @ invert(q)
        m11, m12, m21, m22 = a[1, 1], a[1, 2], a[2, 1], a[2, 2]
        swap = Matrix([[ONE, ZERO, ZERO], [ZERO, ZERO, ONE], [ZERO, ONE, ZERO]])
        if not m12 and not m21:
            if m11 and m22:
                cid = CatalogId("h1_diag", {"mu11": m11, "mu22": m22})
                witness = q
            elif m22 and not m11:
                cid = CatalogId("h1_row", {"mu11": m22, "mu12": ZERO})
                witness = swap @ q
            else:
                cid = CatalogId("h1_row", {"mu11": m11, "mu12": ZERO})
                witness = q
        elif m12 and m21:
            cid = CatalogId("h1_antidiag", {"mu12": m12, "mu21": m21})
            witness = q
        elif m12:
            # multiplicativity forces m22 = 0 here
            cid = CatalogId("h1_row", {"mu11": m11, "mu12": m12})
            witness = q
        else:
            # m21 != 0 forces m11 = 0; swap the odd pair
            cid = CatalogId("h1_row", {"mu11": m22, "mu12": m21})
            witness = swap @ q

    target = catalog(cid)
    if not verify_isomorphism(g, target, witness):
        raise AssertionError(
            f"normalization produced an unverifiable witness for {cid}"
        )
    return NormalFormResult(cid, witness)
