"""Certified maximization of two cyclic quadratics over their polytopes.

Both objectives live on five variables with the cyclic feasibility pattern
x_i >= 0, x_i + x_{i+1} <= 1 (indices mod 5):

  * the ten-variable quadratic ``f`` over pairs (x, y) with
    x_i + x_{i+1} + y_i <= 1 reduces exactly to five variables because every
    y_i enters linearly with positive coefficient 1/5 + x_{i+2}, forcing
    y_i = 1 - x_i - x_{i+1} at any maximum;
  * ``g`` is already five-variable.

Maxima are certified two independent ways: exact rational stationary-point
enumeration over all activity patterns of the ten constraints, and a
float-valued lattice search refined by pattern ascent.  Disagreement beyond
1e-6 raises instead of being papered over.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

Fr = Fraction

# unordered index pairs at cyclic distance two; both quadratics use them
_PAIRS = tuple(sorted((i, (i + 2) % 5) if i < (i + 2) % 5 else ((i + 2) % 5, i)
                      for i in range(5)))
# y_i multiplies x_{i-2}: the pairing below lists (x index, y index)
_XY_PAIRS = tuple((i, (i + 2) % 5) for i in range(5))


class InfeasiblePointError(ValueError):
    """A point violates its domain; the message names the constraint."""


class CertificationError(RuntimeError):
    """The two maximization methods disagree beyond tolerance."""


@dataclass(frozen=True)
class QpPoint:
    """Rational point: five x coordinates, optionally five y coordinates."""

    x: tuple[Fraction, ...]
    y: tuple[Fraction, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(Fr(v) for v in self.x))
        if self.y is not None:
            object.__setattr__(self, "y", tuple(Fr(v) for v in self.y))
        if len(self.x) != 5 or (self.y is not None and len(self.y) != 5):
            raise ValueError("points have 5 x (and optionally 5 y) coordinates")


def _check_x_domain(x: tuple[Fraction, ...]):
    for i in range(5):
        if x[i] < 0:
            raise InfeasiblePointError(f"x{i + 1} = {x[i]} violates x{i + 1} >= 0")
    for i in range(5):
        s = x[i] + x[(i + 1) % 5]
        if s > 1:
            raise InfeasiblePointError(
                f"x{i + 1} + x{(i + 1) % 5 + 1} = {s} violates <= 1"
            )


def _check_f_domain(x, y):
    for i in range(5):
        if x[i] < 0:
            raise InfeasiblePointError(f"x{i + 1} = {x[i]} violates x{i + 1} >= 0")
        if y[i] < 0:
            raise InfeasiblePointError(f"y{i + 1} = {y[i]} violates y{i + 1} >= 0")
    for i in range(5):
        s = x[i] + x[(i + 1) % 5] + y[i]
        if s > 1:
            raise InfeasiblePointError(
                f"x{i + 1} + x{(i + 1) % 5 + 1} + y{i + 1} = {s} violates <= 1"
            )


def eval_f(pt: QpPoint) -> Fraction:
    """Exact value of the ten-variable quadratic on its domain."""
    if pt.y is None:
        raise ValueError("this objective needs y coordinates")
    x, y = pt.x, pt.y
    _check_f_domain(x, y)
    value = Fr(3, 10) * sum(x) + Fr(1, 5) * sum(y)
    value += sum(x[i] * y[j] for i, j in _XY_PAIRS)
    value += sum(x[a] * x[b] for a, b in _PAIRS)
    return value


def eval_g(pt: QpPoint) -> Fraction:
    """Exact value of the five-variable quadratic on its domain."""
    if pt.y is not None:
        raise ValueError("this objective takes no y coordinates")
    x = pt.x
    _check_x_domain(x)
    return Fr(1, 2) * (x[2] + x[3] + x[4]) + sum(x[a] * x[b] for a, b in _PAIRS)


def optimal_y(x) -> tuple[Fraction, ...]:
    """The y filling that is optimal for any fixed feasible x."""
    x = tuple(Fr(v) for v in x)
    return tuple(1 - x[i] - x[(i + 1) % 5] for i in range(5))


def reduce_f_over_y(x) -> Fraction:
    """max over feasible y of f(x, y), in closed form.

    Equals 1 + (9/10) * sum(x) - sum of distance-two products; the identity
    is unit-tested against direct evaluation at the filled-in y.
    """
    x = tuple(Fr(v) for v in x)
    _check_x_domain(x)
    return 1 + Fr(9, 10) * sum(x) - sum(x[a] * x[b] for a, b in _PAIRS)


@dataclass(frozen=True)
class QpCertificate:
    max_value: Fraction
    argmax: QpPoint
    method: str
    agreement_gap: float
    implied_bound: str


# ----------------------------------------------------------------------
# method (a): exact stationary-point enumeration over activity patterns


def _solve_rational(rows: list[list[Fraction]]) -> list[Fraction] | None:
    """Solve an augmented rational system; free variables are set to zero.

    Returns None when inconsistent.
    """
    rows = [row[:] for row in rows]
    m = len(rows)
    cols = len(rows[0]) - 1
    pivot_cols = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if all(v == 0 for v in rows[i][:cols]) and rows[i][cols] != 0:
            return None
    solution = [Fr(0)] * cols
    for i, c in enumerate(pivot_cols):
        solution[c] = rows[i][cols]
    return solution


def _constraints():
    """Rows (a, b) of a.x <= b for the shared five-variable polytope."""
    rows = []
    for i in range(5):
        a = [Fr(0)] * 5
        a[i] = Fr(1)
        a[(i + 1) % 5] = Fr(1)
        rows.append((a, Fr(1)))
    for i in range(5):
        a = [Fr(0)] * 5
        a[i] = Fr(-1)
        rows.append((a, Fr(0)))
    return rows


def _feasible(x: list[Fraction]) -> bool:
    return all(v >= 0 for v in x) and all(
        x[i] + x[(i + 1) % 5] <= 1 for i in range(5)
    )


def _kkt_candidates(quad: list[list[Fraction]], lin: list[Fraction], const: Fraction):
    """All stationary points of c0 + c.x + x'Qx over activity patterns.

    For every subset S of the ten constraints, solves
        2Q x - A_S' lambda = -c,   A_S x = b_S
    exactly in rationals and keeps the feasible solutions.  The maximum over
    a compact polytope is a first-order point for its own active set, so it
    always appears among the candidates.
    """
    cons = _constraints()
    out = []
    for bits in range(1 << len(cons)):
        active = [cons[i] for i in range(len(cons)) if (bits >> i) & 1]
        k = len(active)
        rows = []
        for i in range(5):
            row = [2 * quad[i][j] for j in range(5)]
            row += [-active[s][0][i] for s in range(k)]
            row.append(-lin[i])
            rows.append(row)
        for a, b in active:
            rows.append(list(a) + [Fr(0)] * k + [b])
        sol = _solve_rational(rows)
        if sol is None:
            continue
        x = sol[:5]
        if not _feasible(x):
            continue
        value = const + sum(lin[i] * x[i] for i in range(5))
        value += sum(x[i] * quad[i][j] * x[j] for i in range(5) for j in range(5))
        out.append((value, tuple(x)))
    return out


def _pick_argmax(cands):
    """Deterministic representative: highest value, then most active facet
    constraints, then lexicographically largest point."""
    best_value = max(v for v, _ in cands)
    tied = [x for v, x in cands if v == best_value]

    def facets(x):
        return sum(x[i] + x[(i + 1) % 5] == 1 for i in range(5))

    tied.sort(key=lambda x: (facets(x), x), reverse=True)
    return best_value, tied[0]


def _quad_matrix(sign: int) -> list[list[Fraction]]:
    q = [[Fr(0)] * 5 for _ in range(5)]
    for a, b in _PAIRS:
        q[a][b] += Fr(sign, 2)
        q[b][a] += Fr(sign, 2)
    return q


# ----------------------------------------------------------------------
# method (b): float lattice search + pattern ascent


def _feasible_float(x, slack=1e-9) -> bool:
    return all(v >= -slack for v in x) and all(
        x[i] + x[(i + 1) % 5] <= 1 + slack for i in range(5)
    )


def _grid_ascent(objective, seed: int = 0) -> tuple[float, tuple[float, ...]]:
    """Feasible-lattice scan refined by sign-pattern ascent at 1/100 scale.

    The coordinate lattice (step 1/10) seeds multiple starts; each is refined
    by trying all +-step sign patterns on the five coordinates, with the step
    shrinking from 1/100 once no pattern improves.
    """
    rng = random.Random(seed)
    starts = []
    levels = [k / 10 for k in range(11)]
    for x in itertools.product(levels, repeat=5):
        if _feasible_float(x, slack=0.0):
            starts.append((objective(x), x))
    for _ in range(50):
        x = tuple(rng.uniform(0, 1) for _ in range(5))
        if _feasible_float(x, slack=0.0):
            starts.append((objective(x), x))
    starts.sort(reverse=True)
    patterns = [s for s in itertools.product((-1, 0, 1), repeat=5) if any(s)]
    best_val, best_x = starts[0]
    for _, start in starts[:25]:
        x = list(start)
        val = objective(x)
        step = 1 / 100
        while step > 1e-6:
            improved = False
            for s in patterns:
                cand = tuple(x[i] + step * s[i] for i in range(5))
                if not _feasible_float(cand):
                    continue
                cv = objective(cand)
                if cv > val + 1e-15:
                    x, val = list(cand), cv
                    improved = True
                    break
            if not improved:
                step /= 2
        if val > best_val:
            best_val, best_x = val, tuple(x)
    return best_val, best_x


def _certify(quad_sign, lin, const, names, as_f_point):
    quad = _quad_matrix(quad_sign)
    cands = _kkt_candidates(quad, lin, const)
    value, x = _pick_argmax(cands)

    def objective(xs) -> float:
        s = float(const) + sum(float(lin[i]) * xs[i] for i in range(5))
        s += quad_sign * sum(xs[a] * xs[b] for a, b in _PAIRS)
        return s

    grid_value, _ = _grid_ascent(objective)
    gap = abs(float(value) - grid_value)
    if gap > 1e-6:
        raise CertificationError(
            f"stationary-point maximum {float(value)} and lattice maximum "
            f"{grid_value} disagree by {gap}"
        )
    point = as_f_point(x)
    return QpCertificate(
        max_value=value,
        argmax=point,
        method="kkt-active-set + lattice-pattern-ascent",
        agreement_gap=gap,
        implied_bound=names,
    )


def maximize_f() -> QpCertificate:
    """Certified maximum of the ten-variable quadratic.

    Runs on the exact five-variable reduction (y filled at its forced
    optimum) and re-expands the argmax to ten coordinates.
    """
    cert = _certify(
        quad_sign=-1,
        lin=[Fr(9, 10)] * 5,
        const=Fr(1),
        names=(
            "mixed-block edge bound: e <= cap*|part|/2 + max_f*cap^2"
        ),
        as_f_point=lambda x: QpPoint(x, optimal_y(x)),
    )
    check = eval_f(cert.argmax)
    if check != cert.max_value:
        raise CertificationError(
            f"reduced maximum {cert.max_value} does not re-evaluate ({check})"
        )
    return cert


def maximize_g() -> QpCertificate:
    """Certified maximum of the five-variable quadratic."""
    return _certify(
        quad_sign=1,
        lin=[Fr(0), Fr(0), Fr(1, 2), Fr(1, 2), Fr(1, 2)],
        const=Fr(0),
        names=(
            "independent-block edge bound: e <= cap*|part|/2 + max_g*cap^2"
        ),
        as_f_point=lambda x: QpPoint(x, None),
    )
