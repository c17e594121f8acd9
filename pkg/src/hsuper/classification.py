"""Machine verification of the deformation classification tables.

Each case deforms a Heisenberg algebra at t = 1 by a concrete even
2-cocycle, builds the published target algebra, and certifies an
isomorphism.  The published base-change matrix is tried first; when it
fails (a few are misprinted), a witness with the same zero pattern, then
with the full even pattern, is recovered by solving the intertwining
equations symbolically and re-verified with exact arithmetic.  When no
witness matches the published target twist at all, the bracket isomorphism
is still certified and the actual conjugated twist is reported alongside
the published one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import sympy

from .algebra import (
    HomLieSuperalgebra,
    apply_base_change,
    new_algebra,
    verify_isomorphism,
)
from .catalogs import PARITY_011, CatalogId, catalog
from .cohomology import Cochain
from .deformations import deform, is_integrable, is_two_cocycle
from .linalg import Matrix, invert
from .scalars import ONE, ZERO, Scalar, scalar

Z, O = ZERO, ONE


@dataclass(frozen=True)
class ClassificationCase:
    case_id: str
    base: CatalogId
    phi_coeffs: dict
    target: CatalogId | None  # named target, if its twist is part of the claim
    target_bracket: tuple  # canonical entries of the target bracket
    published_alpha: Matrix | None  # target twist as published (None: use catalog's)
    published_witness: Matrix | None
    note: str = ""


@dataclass(frozen=True)
class CaseReport:
    case_id: str
    verified: bool
    witness: Matrix
    published_witness_ok: bool | None  # None: the row prints no base change
    published_alpha_ok: bool
    actual_target_alpha: Matrix
    note: str


def _l3_bracket(lam):
    return ((0, 1, (Z, O, Z)), (0, 2, (Z, Z, scalar(lam))))


_L4_BRACKET = ((0, 1, (Z, O, Z)), (0, 2, (Z, O, O)))
_L2PRIME_BRACKET = ((1, 2, (O, Z, Z)),)
_H2_BRACKET = ((0, 1, (Z, Z, O)),)


def _m(rows) -> Matrix:
    return Matrix([[scalar(Fraction(e)) if not isinstance(e, Scalar) else e for e in r] for r in rows])


CASES: dict[str, ClassificationCase] = {}


def _case(case: ClassificationCase):
    CASES[case.case_id] = case


_case(
    ClassificationCase(
        case_id="row_to_L2prime",
        base=CatalogId("h1_row", {"mu11": scalar(2), "mu12": Z}),
        phi_coeffs={(0, (2, 2)): scalar(2)},  # [v2,v2]_t = 2h
        target=None,
        target_bracket=_L2PRIME_BRACKET,
        published_alpha=_m([[0, 0, 0], [0, 2, -2], [0, 0, 0]]),  # mu12' = -a14*mu11/2
        published_witness=_m([[1, 0, 0], [0, 1, 1], [0, 0, 1]]),
    )
)
_case(
    ClassificationCase(
        case_id="diag_unit_to_L3_minus2",
        base=CatalogId("h2_diag", {"mu0": O, "mu11": scalar(3)}),
        # [u,h]_t = 2v - h; spectral parameters k1 = 1, k2 = -1/2
        phi_coeffs={(1, (0, 2)): scalar(2), (2, (0, 2)): scalar(-1)},
        target=None,
        target_bracket=_l3_bracket(-2),
        published_alpha=_m([[1, 0, 0], [0, 3, 0], [0, 0, 3]]),
        published_witness=_m(
            [[1, 0, 0], [0, Fraction(1, 3), Fraction(1, 3)], [0, Fraction(2, 3), Fraction(2, 3)]]
        ),
        note="published base change is singular; witness recovered by the solver",
    )
)
_case(
    ClassificationCase(
        case_id="diag_unit_to_L3_zero",
        base=CatalogId("h2_diag", {"mu0": O, "mu11": scalar(3)}),
        phi_coeffs={(2, (0, 2)): scalar(2)},  # [u,h]_t = 2h
        target=None,
        target_bracket=_l3_bracket(0),
        published_alpha=_m([[1, 0, 0], [0, 3, 0], [0, 0, 3]]),
        published_witness=_m([[2, 0, 0], [0, Fraction(1, 2), 1], [0, Fraction(1, 2), 0]]),
    )
)
_case(
    ClassificationCase(
        case_id="diag_unit_to_L3_minus1",
        base=CatalogId("h2_diag", {"mu0": O, "mu11": scalar(2)}),
        phi_coeffs={(1, (0, 2)): scalar(4)},  # [u,h]_t = 4v, a26 = 4 a perfect square
        target=None,
        target_bracket=_l3_bracket(-1),
        published_alpha=_m([[1, 0, 0], [0, 2, 0], [0, 0, 2]]),
        published_witness=_m(
            [[2, 0, 0], [0, Fraction(1, 5), Fraction(8, 5)], [0, Fraction(-2, 5), Fraction(4, 5)]]
        ),
        note="published base change does not intertwine the brackets; solver recovers one",
    )
)
_case(
    ClassificationCase(
        case_id="diag_minus1_to_L3_zero",
        base=CatalogId("h2_diag", {"mu0": scalar(-1), "mu11": Z}),
        phi_coeffs={(2, (0, 2)): scalar(2)},
        target=None,
        target_bracket=_l3_bracket(0),
        published_alpha=_m([[-1, 0, 0], [0, 0, 0], [0, 0, 0]]),
        published_witness=_m([[2, 0, 0], [0, Fraction(1, 2), 1], [0, Fraction(1, 2), 0]]),
    )
)
_case(
    ClassificationCase(
        case_id="diag_null_to_L3_minus1",
        base=CatalogId("h2_diag", {"mu0": Z, "mu11": Z}),
        phi_coeffs={(1, (0, 2)): scalar(4)},
        target=None,
        target_bracket=_l3_bracket(-1),
        published_alpha=Matrix.zero(3, 3),
        published_witness=_m(
            [[2, 0, 0], [0, Fraction(1, 5), Fraction(8, 5)], [0, Fraction(-2, 5), Fraction(4, 5)]]
        ),
        note="published base change does not intertwine the brackets; solver recovers one",
    )
)
_case(
    ClassificationCase(
        case_id="offdiag_null_to_L3_zero",
        base=CatalogId("h2_offdiag", {"mu0": Z, "mu11": Z}),
        phi_coeffs={(2, (0, 2)): scalar(2)},  # [u,h]_t = 2h
        target=None,
        target_bracket=_l3_bracket(0),
        published_alpha=_m([[0, 0, 0], [0, 0, 0], [0, 0, 2]]),
        published_witness=_m([[2, 0, 0], [0, 0, Fraction(1, 2)], [0, 1, Fraction(1, 2)]]),
        note="published target twist is not conjugate to the base twist (it is not nilpotent)",
    )
)
_case(
    ClassificationCase(
        case_id="offdiag_unit_to_L4",
        base=CatalogId("h2_offdiag", {"mu0": O, "mu11": scalar(3)}),
        # [u,v]_t = h + 2v, [u,h]_t = 2h
        phi_coeffs={(1, (0, 1)): scalar(2), (2, (0, 2)): scalar(2)},
        target=None,
        target_bracket=_L4_BRACKET,
        published_alpha=_m([[1, 0, 0], [0, 3, 0], [0, 0, 3]]),
        published_witness=_m([[2, 0, 0], [0, 0, 2], [0, 1, 0]]),
        note="published target twist drops the off-diagonal nilpotent part of the base twist",
    )
)
_case(
    ClassificationCase(
        case_id="offdiag_two_to_L3_two",
        base=CatalogId("h2_offdiag", {"mu0": scalar(2), "mu11": Z}),
        # [u,v]_t = h + 4v, [u,h]_t = 2h
        phi_coeffs={(1, (0, 1)): scalar(4), (2, (0, 2)): scalar(2)},
        target=None,
        target_bracket=_l3_bracket(2),
        published_alpha=_m([[2, 0, 0], [0, 0, Fraction(1, 2)], [0, 0, 0]]),
        published_witness=_m([[2, 0, 0], [0, 2, Fraction(1, 2)], [0, 0, 0]]),
        note="published base change is singular; witness recovered by the solver",
    )
)
_case(
    ClassificationCase(
        case_id="row_to_L12_46",
        base=CatalogId("h1_row", {"mu11": Z, "mu12": scalar(3)}),
        phi_coeffs={(1, (0, 2)): scalar(2)},  # [h,v2]_t = 2 v1
        target=CatalogId("L12_46", {"a": scalar(3), "b": Z, "beta": scalar(2), "mu": O}),
        target_bracket=(),
        published_alpha=None,
        published_witness=None,
    )
)
_case(
    ClassificationCase(
        case_id="offdiag_to_L12_45",
        base=CatalogId("h2_offdiag", {"mu0": Z, "mu11": Z}),
        phi_coeffs={(0, (1, 1)): scalar(2), (0, (1, 2)): scalar(3)},
        target=CatalogId("L12_45", {"a": O, "beta": O, "nu": scalar(3), "gamma": scalar(2)}),
        target_bracket=(),
        published_alpha=None,
        published_witness=None,
    )
)
_case(
    ClassificationCase(
        case_id="offdiag_to_L12_46",
        base=CatalogId("h2_offdiag", {"mu0": Z, "mu11": Z}),
        phi_coeffs={(0, (1, 2)): scalar(3)},
        target=CatalogId("L12_46", {"a": O, "b": Z, "beta": O, "mu": scalar(3)}),
        target_bracket=(),
        published_alpha=None,
        published_witness=None,
    )
)
_case(
    ClassificationCase(
        case_id="offdiag_to_L12_43",
        base=CatalogId("h2_offdiag", {"mu0": Z, "mu11": Z}),
        phi_coeffs={(0, (1, 1)): scalar(2)},
        target=CatalogId("L12_43", {"a": O, "beta": O, "gamma": scalar(2)}),
        target_bracket=(),
        published_alpha=None,
        published_witness=None,
    )
)


def case_ids() -> list[str]:
    return list(CASES)


# -- symbolic witness search -------------------------------------------------

_SYMPY_I = sympy.I


def _to_sympy(x: Scalar):
    return sympy.Rational(x.re) + sympy.Rational(x.im) * _SYMPY_I


def _from_sympy(expr) -> Scalar | None:
    expr = sympy.nsimplify(sympy.simplify(expr))
    re, im = expr.as_real_imag()
    if not (re.is_rational and im.is_rational):
        return None
    return Scalar(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def solve_witness(
    g1: HomLieSuperalgebra,
    g2_bracket: HomLieSuperalgebra,
    target_alpha: Matrix | None,
    pattern: Matrix | None = None,
) -> Matrix | None:
    """Search for an even invertible intertwiner from g1 onto the target.

    `pattern` restricts the unknowns to the nonzero positions of a given
    matrix shape; None allows the full even pattern.  The bracket equations
    are bilinear in the unknowns; sympy solves the small system and the
    candidate is converted back to exact Q(i) entries (symbolic solutions
    with free parameters are sampled at simple values).
    """
    n = g1.dim
    unknowns = []
    p_sym = [[sympy.Integer(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if g1.parity[i] != g1.parity[j]:
                continue
            if pattern is not None and not pattern[i, j]:
                continue
            s = sympy.Symbol(f"p_{i}_{j}")
            p_sym[i][j] = s
            unknowns.append(s)
    pm = sympy.Matrix(p_sym)

    eqs = []
    for i in range(n):
        for j in range(i, n):
            lhs = pm * sympy.Matrix([[_to_sympy(c)] for c in g1.table[i][j]])
            rhs = sympy.zeros(n, 1)
            for k in range(n):
                for l in range(n):
                    ckl = g2_bracket.table[k][l]
                    if any(ckl):
                        coeff = pm[k, i] * pm[l, j]
                        rhs += coeff * sympy.Matrix([[_to_sympy(c)] for c in ckl])
            for m in range(n):
                eqs.append(sympy.expand(lhs[m] - rhs[m]))
    a1 = sympy.Matrix([[_to_sympy(g1.alpha[i, j]) for j in range(n)] for i in range(n)])
    if target_alpha is not None:
        a2 = sympy.Matrix(
            [[_to_sympy(target_alpha[i, j]) for j in range(n)] for i in range(n)]
        )
        diff = pm * a1 - a2 * pm
        eqs.extend(sympy.expand(e) for e in diff)
    eqs = [e for e in eqs if e != 0]

    samples = [
        sympy.Integer(1),
        sympy.Integer(2),
        sympy.Integer(-1),
        sympy.Rational(1, 2),
        sympy.Integer(3),
    ]
    # sympy.solve on the full bilinear system often reports only a trivial
    # branch, so additionally pin the (small) even-even block to sample
    # values, which leaves a system it parameterizes reliably
    even_unknowns = [
        p_sym[i][j]
        for i in range(n)
        for j in range(n)
        if g1.parity[i] == 0 and p_sym[i][j] != 0
    ]
    attempts: list[dict] = [{}]
    if 0 < len(even_unknowns) <= 2:
        attempts += [
            dict(zip(even_unknowns, combo))
            for combo in _sample_combos(samples, len(even_unknowns))
        ]

    for presub in attempts:
        sub_eqs = [sympy.expand(e.subs(presub)) for e in eqs]
        if any(e.is_number and e != 0 for e in sub_eqs):
            continue
        sub_eqs = [e for e in sub_eqs if e != 0]
        sub_vars = [u for u in unknowns if u not in presub]
        try:
            solutions = sympy.solve(sub_eqs, sub_vars, dict=True) if sub_vars else [{}]
        except Exception:
            continue
        for sol in solutions:
            resolved = {}
            for s in unknowns:
                if s in presub:
                    resolved[s] = sympy.sympify(presub[s])
                else:
                    resolved[s] = sympy.sympify(sol.get(s, s)).subs(presub)
            free = sorted(
                {f for v in resolved.values() for f in v.free_symbols},
                key=lambda s: s.name,
            )
            assignments = [
                dict(zip(free, combo)) for combo in _sample_combos(samples, len(free))
            ]
            for assign in assignments:
                candidate = _candidate_matrix(n, p_sym, resolved, assign)
                if candidate is None or invert(candidate) is None:
                    continue
                if target_alpha is None:
                    # bracket-only: verify against the conjugated twist
                    conjugated = candidate @ g1.alpha @ invert(candidate)
                    check_target = new_algebra(
                        g2_bracket.parity, _canonical_entries(g2_bracket), conjugated
                    )
                else:
                    check_target = new_algebra(
                        g2_bracket.parity, _canonical_entries(g2_bracket), target_alpha
                    )
                if verify_isomorphism(g1, check_target, candidate):
                    return candidate
    return None


def _candidate_matrix(n, p_sym, resolved, assign) -> Matrix | None:
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = p_sym[i][j]
            if entry != 0:
                entry = resolved[entry].subs(assign)
            value = ZERO if entry == 0 else _from_sympy(entry)
            if value is None:
                return None
            row.append(value)
        rows.append(row)
    return Matrix(rows)


def _sample_combos(samples, k):
    if k == 0:
        return [()]
    if k > 3:
        samples = samples[:2]
    out = [()]
    for _ in range(k):
        out = [c + (s,) for c in out for s in samples]
    return out


def _canonical_entries(g: HomLieSuperalgebra):
    return [
        (i, j, g.table[i][j])
        for i in range(g.dim)
        for j in range(i, g.dim)
        if any(g.table[i][j])
    ]


# -- case verification -------------------------------------------------------


def verify_classification_case(case_id: str) -> CaseReport:
    """Verify one published deformation row end to end."""
    case = CASES[case_id]
    base = catalog(case.base)
    phi = Cochain(base, 2, 0, case.phi_coeffs)
    assert is_two_cocycle(base, phi) and is_integrable(base, phi)
    deformed = deform(base, phi, ONE)

    if case.target is not None:
        named = catalog(case.target)
        target_bracket_entries = _canonical_entries(named)
        published_alpha = named.alpha
    else:
        target_bracket_entries = list(case.target_bracket)
        published_alpha = case.published_alpha
    bracket_only = new_algebra(
        PARITY_011, target_bracket_entries, Matrix.zero(3, 3)
    )

    def target_with(alpha: Matrix) -> HomLieSuperalgebra:
        return new_algebra(PARITY_011, target_bracket_entries, alpha)

    published_ok = None if case.published_witness is None else False
    witness = None
    alpha_ok = False

    if case.published_witness is not None and published_alpha is not None:
        if verify_isomorphism(deformed, target_with(published_alpha), case.published_witness):
            published_ok = True
            witness = case.published_witness
            alpha_ok = True

    if witness is None and published_alpha is not None:
        pattern = case.published_witness
        for shape in ([pattern] if pattern is not None else []) + [None]:
            witness = solve_witness(deformed, bracket_only, published_alpha, shape)
            if witness is not None:
                alpha_ok = True
                break

    if witness is None:
        witness = solve_witness(deformed, bracket_only, None, None)
        alpha_ok = False
    if witness is None:
        raise ArithmeticError(f"no isomorphism witness found for case {case_id}")

    actual_alpha = witness @ deformed.alpha @ invert(witness)
    verified = verify_isomorphism(deformed, target_with(actual_alpha), witness)
    return CaseReport(
        case_id=case_id,
        verified=verified,
        witness=witness,
        published_witness_ok=published_ok,
        published_alpha_ok=alpha_ok,
        actual_target_alpha=actual_alpha,
        note=case.note,
    )


def verify_all_cases() -> list[CaseReport]:
    return [verify_classification_case(cid) for cid in case_ids()]
