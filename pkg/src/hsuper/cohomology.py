"""Twisted cochain spaces, the coboundary operator, and cohomology.

Degree-k cochains are super-skew k-linear maps commuting with the twist.
The super-skew constraint is eliminated up front: a cochain is stored only
on canonical non-decreasing index tuples (tuples repeating an even index
are dropped since the value there is forced to vanish), and values on all
other tuples follow by sign bookkeeping.  The commuting constraint is a
linear system over the remaining free coefficients; its kernel gives a
deterministic basis of each cochain space, split by parity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement

from .algebra import HomLieSuperalgebra
from .linalg import (
    Matrix,
    Vector,
    add_vectors,
    image_basis,
    kernel_basis,
    scale_vector,
    solve,
    stack_columns,
    zero_vector,
    extend_to_spanning,
)
from .scalars import ONE, ZERO, Scalar, as_scalar


def _sign(p: int) -> Scalar:
    return as_scalar(-1 if p % 2 else 1)


def canonical_tuples(g: HomLieSuperalgebra, k: int) -> list[tuple[int, ...]]:
    """Non-decreasing index tuples, excluding any repeat of an even index."""
    if k == 0:
        return [()]
    out = []
    for t in combinations_with_replacement(range(g.dim), k):
        if any(a == b and g.parity[a] == 0 for a, b in zip(t, t[1:])):
            continue
        out.append(t)
    return out


def tuple_parity(g: HomLieSuperalgebra, t: tuple[int, ...]) -> int:
    return sum(g.parity[i] for i in t) % 2


def canonicalize(
    g: HomLieSuperalgebra, idx: tuple[int, ...]
) -> tuple[Scalar, tuple[int, ...]] | None:
    """Sort an index tuple into canonical order, tracking the super-skew sign.

    Returns None when the value is forced to zero (a repeated even index).
    """
    work = list(idx)
    sign = ONE
    for i in range(len(work)):
        for j in range(len(work) - 1 - i):
            if work[j] > work[j + 1]:
                # adjacent swap: phi(..., y, x, ...) = -(-1)^{|x||y|} phi(..., x, y, ...)
                sign = sign * _sign(1 + g.parity[work[j]] * g.parity[work[j + 1]])
                work[j], work[j + 1] = work[j + 1], work[j]
    for a, b in zip(work, work[1:]):
        if a == b and g.parity[a] == 0:
            return None
    return sign, tuple(work)


class Cochain:
    """A degree-k parity-homogeneous cochain on a fixed algebra.

    `coeffs[(m, T)]` is the e_m-coefficient of the value on the canonical
    tuple T; missing keys are zero.
    """

    def __init__(self, g: HomLieSuperalgebra, degree: int, parity: int, coeffs):
        self.g = g
        self.degree = degree
        self.parity = parity % 2
        self.coeffs = {
            key: as_scalar(v) for key, v in dict(coeffs).items() if as_scalar(v)
        }
        for (m, t) in self.coeffs:
            if (g.parity[m] + tuple_parity(g, t) + self.parity) % 2:
                raise ValueError(f"coefficient ({m}, {t}) violates parity homogeneity")

    def value(self, idx: tuple[int, ...]) -> Vector:
        """Value on a basis index tuple in any order."""
        canon = canonicalize(self.g, idx)
        if canon is None:
            return zero_vector(self.g.dim)
        sign, t = canon
        return tuple(
            sign * self.coeffs.get((m, t), ZERO) for m in range(self.g.dim)
        )

    def evaluate(self, *vectors: Vector) -> Vector:
        """Multilinear evaluation on coordinate vectors."""
        if len(vectors) != self.degree:
            raise ValueError("wrong number of arguments")
        out = zero_vector(self.g.dim)
        supports = [[i for i, c in enumerate(v) if c] for v in vectors]

        def rec(pos: int, coeff: Scalar, idx: tuple[int, ...]):
            nonlocal out
            if pos == len(vectors):
                out = add_vectors(out, scale_vector(coeff, self.value(idx)))
                return
            for i in supports[pos]:
                rec(pos + 1, coeff * vectors[pos][i], idx + (i,))

        rec(0, ONE, ())
        return out

    def add(self, other: "Cochain") -> "Cochain":
        assert (self.degree, self.parity) == (other.degree, other.parity)
        merged = dict(self.coeffs)
        for key, v in other.coeffs.items():
            merged[key] = merged.get(key, ZERO) + v
        return Cochain(self.g, self.degree, self.parity, merged)

    def scale(self, c) -> "Cochain":
        c = as_scalar(c)
        return Cochain(
            self.g, self.degree, self.parity, {k: c * v for k, v in self.coeffs.items()}
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.degree == other.degree
            and self.parity == other.parity
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"phi({','.join(str(i + 1) for i in t)})->{v}*e{m + 1}"
            for (m, t), v in sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        )
        return f"Cochain(k={self.degree}, parity={self.parity}, {body or '0'})"


def delta_value(
    g: HomLieSuperalgebra, phi: Cochain, xs: tuple[int, ...]
) -> Vector:
    """The coboundary of `phi` evaluated on the basis tuple `xs`.

    Double sum over argument pairs and over the bracketing slot; the
    bracketing sum starts at slot 0 — starting it at 1 would drop the
    [x_0, phi(...)] term and break the calibration test.
    """
    k = phi.degree
    assert len(xs) == k + 1
    p = [g.parity[i] for i in xs]
    out = zero_vector(g.dim)

    for s in range(k + 1):
        for t in range(s + 1, k + 1):
            sign = _sign(t + p[t] * sum(p[s + 1:t]))
            args: list[Vector] = []
            for pos in range(k + 1):
                if pos == t:
                    continue
                if pos == s:
                    args.append(g.table[xs[s]][xs[t]])
                else:
                    args.append(g.alpha.column(xs[pos]))
            out = add_vectors(out, scale_vector(sign, phi.evaluate(*args)))

    alpha_power = Matrix.identity(g.dim)
    for _ in range(k - 1):
        alpha_power = alpha_power @ g.alpha
    for s in range(k + 1):
        sign = _sign(s + p[s] * (phi.parity + sum(p[:s])))
        rest = xs[:s] + xs[s + 1:]
        term = g.bracket(alpha_power.column(xs[s]), phi.value(rest))
        out = add_vectors(out, scale_vector(sign, term))
    return out


@dataclass(frozen=True)
class CohomologyReport:
    degree: int
    z_even: int
    z_odd: int
    b_even: int
    b_odd: int
    h_even: int
    h_odd: int
    representatives_even: tuple[Cochain, ...]
    representatives_odd: tuple[Cochain, ...]

    @property
    def dims(self):
        return (self.z_even, self.z_odd, self.b_even, self.b_odd, self.h_even, self.h_odd)


class CochainComplex:
    """Caches cochain bases and coboundary matrices of one algebra."""

    def __init__(self, g: HomLieSuperalgebra):
        self.g = g
        self._slots: dict[tuple[int, int], list] = {}
        self._space: dict[tuple[int, int], list[Vector]] = {}
        self._delta: dict[tuple[int, int], Matrix] = {}

    # free coefficient slots (m, T), before the twist-commuting constraint
    def slots(self, k: int, parity: int) -> list[tuple[int, tuple[int, ...]]]:
        key = (k, parity)
        if key not in self._slots:
            g = self.g
            self._slots[key] = [
                (m, t)
                for t in canonical_tuples(g, k)
                for m in range(g.dim)
                if (g.parity[m] + tuple_parity(g, t) + parity) % 2 == 0
            ]
        return self._slots[key]

    def _constraint_matrix(self, k: int, parity: int) -> Matrix | None:
        g = self.g
        slots = self.slots(k, parity)
        if not slots:
            return None
        index = {slot: n for n, slot in enumerate(slots)}
        rows = []
        for t in canonical_tuples(g, k):
            tp = tuple_parity(g, t)
            for m in range(g.dim):
                if (g.parity[m] + tp + parity) % 2:
                    continue
                row = [ZERO] * len(slots)
                # alpha(phi(e_T))_m
                for mp in range(g.dim):
                    if g.alpha[m, mp] and (mp, t) in index:
                        row[index[(mp, t)]] = row[index[(mp, t)]] + g.alpha[m, mp]
                # - phi(alpha e_T1, ..., alpha e_Tk)_m

                def expand(pos: int, coeff: Scalar, idx: tuple[int, ...]):
                    if pos == k:
                        canon = canonicalize(g, idx)
                        if canon is None:
                            return
                        sign, ct = canon
                        if (m, ct) in index:
                            row[index[(m, ct)]] = row[index[(m, ct)]] - coeff * sign
                        return
                    col = t[pos]
                    for j in range(g.dim):
                        if g.alpha[j, col]:
                            expand(pos + 1, coeff * g.alpha[j, col], idx + (j,))

                expand(0, ONE, ())
                if any(row):
                    rows.append(row)
        if not rows:
            return Matrix.zero(1, len(slots))
        return Matrix(rows)

    def space(self, k: int, parity: int) -> list[Vector]:
        """Deterministic basis of C^k (given parity) in slot coordinates."""
        key = (k, parity)
        if key not in self._space:
            constraint = self._constraint_matrix(k, parity)
            if constraint is None:
                self._space[key] = []
            else:
                self._space[key] = list(kernel_basis(constraint).basis)
        return self._space[key]

    def basis_cochains(self, k: int, parity: int) -> list[Cochain]:
        return [self.cochain_from_coeffs(k, parity, v) for v in self.space(k, parity)]

    def cochain_from_coeffs(self, k: int, parity: int, coeff_vector: Vector) -> Cochain:
        slots = self.slots(k, parity)
        return Cochain(
            self.g,
            k,
            parity,
            {slot: c for slot, c in zip(slots, coeff_vector, strict=True)},
        )

    def slot_vector(self, phi: Cochain) -> Vector:
        slots = self.slots(phi.degree, phi.parity)
        return tuple(phi.coeffs.get(slot, ZERO) for slot in slots)

    def in_cochain_space(self, phi: Cochain) -> bool:
        basis = self.space(phi.degree, phi.parity)
        v = self.slot_vector(phi)
        if not any(v):
            return True
        if not basis:
            return False
        return solve(stack_columns(basis), v) is not None

    def delta_matrix_block(self, k: int, parity: int) -> Matrix:
        """Matrix of the coboundary from C^k to C^{k+1}, one parity block."""
        key = (k, parity)
        if key not in self._delta:
            g = self.g
            domain = self.space(k, parity)
            target_basis = self.space(k + 1, parity)
            target_tuples = canonical_tuples(g, k + 1)
            columns = []
            for coeffs in domain:
                phi = self.cochain_from_coeffs(k, parity, coeffs)
                raw = {}
                for t in target_tuples:
                    value = delta_value(g, phi, t)
                    for m, c in enumerate(value):
                        if c:
                            raw[(m, t)] = c
                image = Cochain(g, k + 1, parity, raw)
                v = self.slot_vector(image)
                if not any(v):
                    columns.append(zero_vector(len(target_basis)))
                    continue
                if not target_basis:
                    raise ArithmeticError(
                        "coboundary image escapes the constrained cochain space"
                    )
                coords = solve(stack_columns(target_basis), v)
                if coords is None:
                    raise ArithmeticError(
                        "coboundary image escapes the constrained cochain space"
                    )
                columns.append(coords)
            if columns:
                self._delta[key] = stack_columns(columns) if len(target_basis) else Matrix.zero(0, len(columns))
            else:
                self._delta[key] = Matrix.zero(max(len(target_basis), 1), 0)
        return self._delta[key]

    def cohomology(self, k: int) -> CohomologyReport:
        if k not in (1, 2):
            raise ValueError("cohomology is computed for degrees 1 and 2")
        dims = {}
        reps = {}
        for parity in (0, 1):
            domain = self.space(k, parity)
            delta = self.delta_matrix_block(k, parity)
            if domain:
                cocycles = list(kernel_basis(delta).basis) if delta.rows else [
                    tuple(ONE if i == j else ZERO for i in range(len(domain)))
                    for j in range(len(domain))
                ]
            else:
                cocycles = []
            if k == 1:
                boundaries: list[Vector] = []
            else:
                prev = self.delta_matrix_block(k - 1, parity)
                boundaries = (
                    list(image_basis(prev).basis) if prev.cols and prev.rows else []
                )
            chosen = extend_to_spanning(boundaries, cocycles)
            dims[parity] = (len(cocycles), len(boundaries), len(chosen))
            reps[parity] = tuple(
                self._combine(k, parity, coords) for coords in chosen
            )
        return CohomologyReport(
            degree=k,
            z_even=dims[0][0],
            z_odd=dims[1][0],
            b_even=dims[0][1],
            b_odd=dims[1][1],
            h_even=dims[0][2],
            h_odd=dims[1][2],
            representatives_even=reps[0],
            representatives_odd=reps[1],
        )

    def _combine(self, k: int, parity: int, coords: Vector) -> Cochain:
        basis = self.space(k, parity)
        total = zero_vector(len(basis[0])) if basis else ()
        for c, b in zip(coords, basis, strict=True):
            total = add_vectors(total, scale_vector(c, b))
        return self.cochain_from_coeffs(k, parity, total)


# -- module-level operations ------------------------------------------------


def cochain_space(g: HomLieSuperalgebra, k: int) -> list[Cochain]:
    """Deterministic parity-tagged basis of the degree-k cochain space."""
    cx = CochainComplex(g)
    return cx.basis_cochains(k, 0) + cx.basis_cochains(k, 1)


def coboundary_matrix(g: HomLieSuperalgebra, k: int) -> Matrix:
    """Full coboundary matrix, block diagonal across the parity split."""
    cx = CochainComplex(g)
    blocks = [cx.delta_matrix_block(k, 0), cx.delta_matrix_block(k, 1)]
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = [[ZERO] * cols for _ in range(rows)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return Matrix(out) if rows else Matrix.zero(0, cols)


def cohomology(g: HomLieSuperalgebra, k: int) -> CohomologyReport:
    return CochainComplex(g).cohomology(k)
