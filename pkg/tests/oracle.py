"""Independent brute-force cohomology oracle.

Recomputes cochain-space and cohomology dimensions from first principles
using a full-tensor representation (all 3^k argument tuples, no canonical
ordering) and sympy's exact linear algebra.  Shares no code with the
package's cohomology pipeline; used to confirm golden dimension values and
to cross-check selected grid points in the tests.
"""

from __future__ import annotations

import itertools

import sympy

from hsuper.algebra import HomLieSuperalgebra


def _c(x):
    return sympy.Rational(x.re) + sympy.Rational(x.im) * sympy.I


class TensorModel:
    """Full-tensor model of the degree-k cochain spaces of one algebra."""

    def __init__(self, g: HomLieSuperalgebra):
        self.g = g
        self.n = g.dim
        self.alpha = sympy.Matrix(
            [[_c(g.alpha[i, j]) for j in range(self.n)] for i in range(self.n)]
        )
        self.bracket = {
            (i, j): sympy.Matrix([[_c(c)] for c in g.bracket_basis(i, j)])
            for i in range(self.n)
            for j in range(self.n)
        }
        self._basis: dict[tuple[int, int], list] = {}

    def coords(self, k: int):
        return [
            (m, t)
            for m in range(self.n)
            for t in itertools.product(range(self.n), repeat=k)
        ]

    def basis(self, k: int, parity: int):
        """Nullspace basis of all defining constraints on a full tensor."""
        key = (k, parity)
        if key in self._basis:
            return self._basis[key]
        g, n = self.g, self.n
        coords = self.coords(k)
        index = {c: i for i, c in enumerate(coords)}
        rows = []

        def unit_row():
            return [sympy.Integer(0)] * len(coords)

        # parity homogeneity: phi(e_T) lies in the parity |T| + |phi| part
        for (m, t) in coords:
            if (g.parity[m] + sum(g.parity[i] for i in t) + parity) % 2:
                row = unit_row()
                row[index[(m, t)]] = sympy.Integer(1)
                rows.append(row)
        # super-skew: adjacent transposition changes the value by
        # -(-1)^{p_a p_b}
        for t in itertools.product(range(n), repeat=k):
            for pos in range(k - 1):
                a, b = t[pos], t[pos + 1]
                swapped = t[:pos] + (b, a) + t[pos + 2 :]
                sign = -sympy.Integer(-1) ** (g.parity[a] * g.parity[b])
                for m in range(n):
                    row = unit_row()
                    row[index[(m, t)]] += sympy.Integer(1)
                    row[index[(m, swapped)]] -= sign
                    if any(x != 0 for x in row):
                        rows.append(row)
        # twist compatibility: alpha(phi(e_T)) = phi(alpha e_T1, ...)
        for t in itertools.product(range(n), repeat=k):
            for m in range(n):
                row = unit_row()
                for mp in range(n):
                    row[index[(mp, t)]] += self.alpha[m, mp]
                for image in itertools.product(range(n), repeat=k):
                    coeff = sympy.Integer(1)
                    for pos in range(k):
                        coeff *= self.alpha[image[pos], t[pos]]
                    if coeff != 0:
                        row[index[(m, image)]] -= coeff
                if any(x != 0 for x in row):
                    rows.append(row)
        mat = sympy.Matrix(rows) if rows else sympy.zeros(1, len(coords))
        self._basis[key] = mat.nullspace()
        return self._basis[key]

    def _value(self, tensor, idx: tuple[int, ...]):
        coords = self.coords(len(idx))
        index = {c: i for i, c in enumerate(coords)}
        return sympy.Matrix(
            [[tensor[index[(m, idx)]]] for m in range(self.n)]
        )

    def _eval_on_columns(self, tensor, k: int, columns):
        """phi applied to arbitrary coordinate vectors, by multilinearity."""
        n = self.n
        out = sympy.zeros(n, 1)
        for idx in itertools.product(range(n), repeat=k):
            coeff = sympy.Integer(1)
            for pos in range(k):
                coeff *= columns[pos][idx[pos]]
            if coeff != 0:
                out += coeff * self._value(tensor, idx)
        return out

    def delta_tensor(self, tensor, k: int, parity: int):
        """delta(phi) as a full (k+1)-tensor, straight from the definition."""
        g, n = self.g, self.n
        alpha_pow = self.alpha ** (k - 1)
        out = []
        for xs in itertools.product(range(n), repeat=k + 1):
            p = [g.parity[i] for i in xs]
            total = sympy.zeros(n, 1)
            for s in range(k + 1):
                for t in range(s + 1, k + 1):
                    sign = sympy.Integer(-1) ** (t + p[t] * sum(p[s + 1 : t]))
                    columns = []
                    for pos in range(k + 1):
                        if pos == t:
                            continue
                        if pos == s:
                            columns.append(self.bracket[(xs[s], xs[t])])
                        else:
                            columns.append(self.alpha.col(xs[pos]))
                    total += sign * self._eval_on_columns(tensor, k, columns)
            for s in range(k + 1):
                sign = sympy.Integer(-1) ** (s + p[s] * (parity + sum(p[:s])))
                rest = xs[:s] + xs[s + 1 :]
                phi_rest = self._value(tensor, rest)
                term = sympy.zeros(n, 1)
                for a in range(n):
                    if alpha_pow[a, xs[s]] == 0:
                        continue
                    for b in range(n):
                        if phi_rest[b] != 0:
                            term += (
                                alpha_pow[a, xs[s]] * phi_rest[b] * self.bracket[(a, b)]
                            )
                total += sign * term
            out.extend(total[m] for m in range(n))
        # reorder from tuple-major to the coords() ordering (m-major)
        tuples = list(itertools.product(range(n), repeat=k + 1))
        by_key = {}
        for ti, t in enumerate(tuples):
            for m in range(n):
                by_key[(m, t)] = out[ti * n + m]
        return sympy.Matrix([[by_key[c]] for c in self.coords(k + 1)])

    def delta_matrix(self, k: int, parity: int) -> sympy.Matrix:
        basis = self.basis(k, parity)
        if not basis:
            return sympy.zeros(len(self.coords(k + 1)), 0)
        columns = [self.delta_tensor(b, k, parity) for b in basis]
        return sympy.Matrix.hstack(*columns)

    def dims(self, k: int, parity: int) -> tuple[int, int, int, int]:
        """(dim C^k, dim Z^k, dim B^k, dim H^k) for one parity; B^1 is 0
        by the convention that the complex starts in degree 1."""
        c = len(self.basis(k, parity))
        delta = self.delta_matrix(k, parity)
        z = c - delta.rank() if c else 0
        b = self.delta_matrix(k - 1, parity).rank() if k >= 2 else 0
        return c, z, b, z - b


def oracle_dims(g: HomLieSuperalgebra, k: int):
    """{(k, parity): (C, Z, B, H)} for both parities."""
    model = TensorModel(g)
    return {parity: model.dims(k, parity) for parity in (0, 1)}
