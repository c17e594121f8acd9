"""Hom-Lie superalgebras by structure constants, and their structural checks.

An algebra is a triple (V, bracket, alpha): a Z/2-graded space with a chosen
homogeneous basis, an even super-skew bilinear bracket given by structure
constants, and an even twist map alpha.  Brackets are entered only for
canonical index pairs i <= j; the remaining values follow from super-skew
symmetry, so that symmetry holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import (
    Matrix,
    Subspace,
    Vector,
    add_vectors,
    image_basis,
    invert,
    kernel_basis,
    rank,
    rref,
    scale_vector,
    solve,
    stack_columns,
    vec,
    zero_vector,
)
from .scalars import ONE, ZERO, Scalar, as_scalar


class InvariantError(ValueError):
    """A structural invariant of the input data is violated."""


def _skew_sign(pi: int, pj: int) -> Scalar:
    # [y,x] = -(-1)^{|x||y|} [x,y]
    return as_scalar(-1 if (pi * pj) % 2 == 0 else 1)


class HomLieSuperalgebra:
    """Finite-dimensional Hom-Lie superalgebra over Q(i).

    `parity[k]` is the parity of basis vector e_k; `table[i][j]` is the
    coordinate vector of [e_i, e_j]; `alpha` acts by alpha(e_j) = sum_k
    alpha[k,j] e_k.
    """

    def __init__(self, parity, bracket_entries, alpha: Matrix):
        self.parity = tuple(int(p) for p in parity)
        if any(p not in (0, 1) for p in self.parity):
            raise InvariantError("parity entries must be 0 or 1")
        self.dim = len(self.parity)
        if alpha.rows != self.dim or alpha.cols != self.dim:
            raise InvariantError("alpha must be a dim x dim matrix")
        self.alpha = alpha

        for k in range(self.dim):
            for j in range(self.dim):
                if alpha[k, j] and self.parity[k] != self.parity[j]:
                    raise InvariantError(
                        f"alpha entry ({k + 1},{j + 1}) violates evenness of the twist map"
                    )

        table = [[zero_vector(self.dim) for _ in range(self.dim)] for _ in range(self.dim)]
        seen = set()
        for i, j, coeffs in bracket_entries:
            if not (0 <= i <= j < self.dim):
                raise InvariantError(f"bracket entry ({i + 1},{j + 1}) out of range or not i <= j")
            if (i, j) in seen:
                raise InvariantError(f"duplicate bracket entry ({i + 1},{j + 1})")
            seen.add((i, j))
            v = vec(coeffs)
            if len(v) != self.dim:
                raise InvariantError(f"bracket entry ({i + 1},{j + 1}) has wrong coefficient length")
            pij = (self.parity[i] + self.parity[j]) % 2
            for k in range(self.dim):
                if v[k] and self.parity[k] != pij:
                    raise InvariantError(
                        f"structure constant c[{i + 1}][{j + 1}][{k + 1}] violates evenness"
                    )
            if i == j and self.parity[i] == 0 and any(v):
                raise InvariantError(f"[e{i + 1},e{i + 1}] must vanish for even e{i + 1}")
            table[i][j] = v
            if i != j:
                table[j][i] = scale_vector(_skew_sign(self.parity[i], self.parity[j]), v)
        self.table = tuple(tuple(r) for r in table)

    # -- evaluation ---------------------------------------------------------

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def bracket(self, x: Vector, y: Vector) -> Vector:
        out = zero_vector(self.dim)
        for i in range(self.dim):
            if not x[i]:
                continue
            for j in range(self.dim):
                if not y[j]:
                    continue
                out = add_vectors(out, scale_vector(x[i] * y[j], self.table[i][j]))
        return out

    def apply_alpha(self, x: Vector) -> Vector:
        return self.alpha.apply(x)

    def basis_vector(self, i: int) -> Vector:
        return tuple(ONE if k == i else ZERO for k in range(self.dim))

    def even_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == 0]

    def odd_indices(self) -> list[int]:
        return [i for i, p in enumerate(self.parity) if p == 1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomLieSuperalgebra)
            and self.parity == other.parity
            and self.table == other.table
            and self.alpha == other.alpha
        )

    def __hash__(self):
        return hash((self.parity, self.table, self.alpha))


def new_algebra(parity, bracket_entries, alpha: Matrix) -> HomLieSuperalgebra:
    """Build an algebra from canonical (i <= j, 0-based) bracket entries."""
    return HomLieSuperalgebra(parity, bracket_entries, alpha)


# -- structural checks ------------------------------------------------------


def check_skew(g: HomLieSuperalgebra) -> bool:
    """Super-skew symmetry on all basis pairs, including [x,x]=0 for even x."""
    for i in range(g.dim):
        for j in range(g.dim):
            expected = scale_vector(_skew_sign(g.parity[i], g.parity[j]), g.table[j][i])
            if g.table[i][j] != expected:
                return False
            if i == j and g.parity[i] == 0 and any(g.table[i][i]):
                return False
    return True


def _sign(p: int) -> Scalar:
    return as_scalar(-1 if p % 2 else 1)


def hom_jacobiator(g: HomLieSuperalgebra, i: int, j: int, k: int) -> Vector:
    """Cyclic sum (-1)^{|x||z|} [alpha(x), [y,z]] over (e_i, e_j, e_k)."""
    total = zero_vector(g.dim)
    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
        sign = _sign(g.parity[a] * g.parity[c])
        term = g.bracket(g.apply_alpha(g.basis_vector(a)), g.table[b][c])
        total = add_vectors(total, scale_vector(sign, term))
    return total


def check_hom_jacobi(g: HomLieSuperalgebra) -> bool:
    return all(
        not any(hom_jacobiator(g, i, j, k))
        for i in range(g.dim)
        for j in range(i, g.dim)
        for k in range(j, g.dim)
    )


def check_multiplicative(g: HomLieSuperalgebra) -> bool:
    """alpha([x,y]) = [alpha(x), alpha(y)] on all basis pairs."""
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = g.apply_alpha(g.table[i][j])
            rhs = g.bracket(g.alpha.column(i), g.alpha.column(j))
            if lhs != rhs:
                return False
    return True


def center(g: HomLieSuperalgebra) -> Subspace:
    """{x : [x, e_j] = 0 for all j}, as the kernel of the adjoint map."""
    rows = []
    for j in range(g.dim):
        for k in range(g.dim):
            rows.append([g.table[i][j][k] for i in range(g.dim)])
    return kernel_basis(Matrix(rows))


def derived_ideal(g: HomLieSuperalgebra) -> Subspace:
    """Span of all basis brackets [e_i, e_j]."""
    columns = [g.table[i][j] for i in range(g.dim) for j in range(g.dim)]
    nonzero = [c for c in columns if any(c)]
    if not nonzero:
        return Subspace(g.dim, ())
    return image_basis(stack_columns(nonzero))


@dataclass(frozen=True)
class HeisenbergCertificate:
    """Witness of the Heisenberg property.

    `generator` spans the derived ideal and is central; `form_matrix` is the
    induced bilinear form on a complement of the center, full-rank by
    construction of the certificate.
    """

    generator: Vector
    generator_parity: int
    form_matrix: Matrix
    complement_indices: tuple[int, ...]

    @property
    def central(self) -> bool:
        return True


def _homogeneous_parity(g: HomLieSuperalgebra, v: Vector) -> int | None:
    parities = {g.parity[i] for i, c in enumerate(v) if c}
    if len(parities) != 1:
        return None
    return parities.pop()


def is_heisenberg(g: HomLieSuperalgebra) -> HeisenbergCertificate | None:
    """Certificate, or None when the Heisenberg property fails.

    Requires a 1-dimensional derived ideal with homogeneous central
    generator h and a full-rank induced form on g/Z(g).  The complement of
    Z(g) is spanned by the basis vectors at non-pivot columns of Z(g)'s
    rref; non-degeneracy is rank of a form matrix, hence independent of
    this choice.
    """
    derived = derived_ideal(g)
    if derived.dim != 1:
        return None
    h = derived.basis[0]
    h_parity = _homogeneous_parity(g, h)
    if h_parity is None:
        return None
    z = center(g)
    if not z.contains(h):
        return None
    # complement of the center: basis vectors not matching Z(g) pivots
    if z.dim:
        _, _, pivots = rref(Matrix(list(z.basis)))
    else:
        pivots = []
    complement = tuple(i for i in range(g.dim) if i not in set(pivots))
    h_support = next(i for i, c in enumerate(h) if c)
    form_rows = []
    for a in complement:
        row = []
        for b in complement:
            w = g.table[a][b]
            coeff = w[h_support] / h[h_support]
            if w != scale_vector(coeff, h):
                return None  # bracket value escapes span(h); cannot happen for dim[g,g]=1
            row.append(coeff)
        form_rows.append(row)
    form = Matrix(form_rows) if complement else Matrix.zero(0, 0)
    if not complement or rank(form) != len(complement):
        return None
    return HeisenbergCertificate(h, h_parity, form, complement)


# -- base change and isomorphism -------------------------------------------


def is_even_matrix(g: HomLieSuperalgebra, p: Matrix) -> bool:
    return all(
        not p[k, j] or g.parity[k] == g.parity[j]
        for k in range(g.dim)
        for j in range(g.dim)
    )


def apply_base_change(g: HomLieSuperalgebra, p: Matrix) -> HomLieSuperalgebra:
    """The isomorphic algebra with bracket P[P^-1 x, P^-1 y] and twist P a P^-1."""
    if not is_even_matrix(g, p):
        raise InvariantError("base change matrix must be even")
    p_inv = invert(p)
    if p_inv is None:
        raise InvariantError("base change matrix must be invertible")
    entries = []
    for i in range(g.dim):
        for j in range(i, g.dim):
            value = p.apply(g.bracket(p_inv.column(i), p_inv.column(j)))
            if any(value):
                entries.append((i, j, value))
    return HomLieSuperalgebra(g.parity, entries, p @ g.alpha @ p_inv)


def verify_isomorphism(
    g1: HomLieSuperalgebra, g2: HomLieSuperalgebra, p: Matrix
) -> bool:
    """True iff P is an even invertible map with P[x,y]_1 = [Px,Py]_2 and
    P alpha_1 = alpha_2 P."""
    if g1.dim != g2.dim or g1.parity != g2.parity:
        return False
    if p.rows != g1.dim or p.cols != g1.dim:
        return False
    if not is_even_matrix(g1, p) or invert(p) is None:
        return False
    if p @ g1.alpha != g2.alpha @ p:
        return False
    for i in range(g1.dim):
        for j in range(g1.dim):
            if p.apply(g1.table[i][j]) != g2.bracket(p.column(i), p.column(j)):
                return False
    return True


def is_lie_superalgebra(g: HomLieSuperalgebra) -> bool:
    """Untwisted super-Jacobi identity on all basis triples."""
    for i in range(g.dim):
        for j in range(i, g.dim):
            for k in range(j, g.dim):
                total = zero_vector(g.dim)
                for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                    sign = _sign(g.parity[a] * g.parity[c])
                    term = g.bracket(g.basis_vector(a), g.table[b][c])
                    total = add_vectors(total, scale_vector(sign, term))
                if any(total):
                    return False
    return True
