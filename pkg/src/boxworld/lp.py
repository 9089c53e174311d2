"""Exact rational linear programming.

Two-phase primal simplex over arbitrary-precision rationals with Bland's
rule (lowest eligible index enters; among minimum-ratio rows the one whose
basic variable has the lowest index leaves). Bland's rule guarantees
termination and, together with the fixed column layout, makes every answer
reproducible byte for byte.

The solver consumes halfspace systems shaped like polytope.HRep (duck-typed:
anything with ambient_dim / equalities / inequalities). Inequalities mean
a.x >= b. Infeasible systems come back with a Farkas certificate:
nonnegative multipliers for the inequality rows and free multipliers for the
equality rows whose combination has a zero coefficient vector and a strictly
positive right-hand side. verify_farkas() checks a certificate with a single
exact matrix-vector pass.
"""

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DimensionMismatch
from .rationals import ONE, ZERO, Rat

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LPResult:
    status: str
    optimum: Optional[Rat]
    witness: Tuple[Rat, ...]

    @property
    def feasible(self):
        return self.status == OPTIMAL


def solve_lp(objective, h, sense="max"):
    """Optimize objective over the region described by h.

    Returns LPResult. For status "optimal" the witness is a feasible point
    attaining the optimum. For "infeasible" it is the Farkas certificate
    laid out as (one multiplier per inequality row) + (one per equality
    row). For "unbounded" the witness is a feasible point from which the
    objective is unbounded.
    """
    objective = [Rat(c) for c in objective]
    if len(objective) != h.ambient_dim:
        raise DimensionMismatch(
            f"objective has {len(objective)} entries, region is {h.ambient_dim}-dimensional")
    if sense not in ("max", "min"):
        raise ValueError(f"sense must be 'max' or 'min', got {sense!r}")
    tab = _Tableau(h)
    status = tab.phase1()
    if status == INFEASIBLE:
        return LPResult(INFEASIBLE, None, tuple(tab.farkas_certificate()))
    # internally we minimize; flip for max
    cost = [-c for c in objective] if sense == "max" else list(objective)
    status = tab.phase2(cost)
    x = tab.solution()
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED, None, tuple(x))
    value = sum((c * v for c, v in zip(objective, x)), ZERO)
    return LPResult(OPTIMAL, value, tuple(x))


def feasible_point(h):
    """Zero-objective solve; handy for pure feasibility questions."""
    return solve_lp([ZERO] * h.ambient_dim, h, "max")


def verify_farkas(h, certificate):
    """Exact check of an infeasibility certificate for the system h."""
    ineqs = list(h.inequalities)
    eqs = list(h.equalities)
    if len(certificate) != len(ineqs) + len(eqs):
        return False
    y_ineq = certificate[:len(ineqs)]
    y_eq = certificate[len(ineqs):]
    if any(y < 0 for y in y_ineq):
        return False
    combo = [ZERO] * h.ambient_dim
    rhs = ZERO
    for y, (a, b) in zip(y_ineq, ineqs):
        if not y:
            continue
        for j, aj in enumerate(a):
            if aj:
                combo[j] += y * aj
        rhs += y * b
    for y, (a, b) in zip(y_eq, eqs):
        if not y:
            continue
        for j, aj in enumerate(a):
            if aj:
                combo[j] += y * aj
        rhs += y * b
    return all(not c for c in combo) and rhs > 0


class _Tableau:
    """Dense simplex tableau in computational standard form.

    Original variables that carry an explicit x_j >= 0 inequality are kept
    as single nonnegative columns (the bound row is consumed); the rest are
    split into positive and negative parts. Remaining inequalities get a
    slack. Every row receives an artificial variable for phase 1.
    """

    def __init__(self, h):
        d = h.ambient_dim
        self.h = h
        ineqs = [( [Rat(a) for a in row], Rat(b)) for row, b in h.inequalities]
        eqs = [([Rat(a) for a in row], Rat(b)) for row, b in h.equalities]

        # consume plain nonnegativity rows as variable bounds
        self.nonneg = [False] * d
        self.bound_row = [None] * d  # original inequality index the bound came from
        kept = []
        for idx, (a, b) in enumerate(ineqs):
            j = _is_simple_bound(a, b)
            if j is not None and not self.nonneg[j]:
                self.nonneg[j] = True
                self.bound_row[j] = idx
            else:
                kept.append((idx, a, b))
        self.kept_ineqs = kept
        self.eqs = eqs

        # column layout: variable columns, then slacks; artificials appended later
        self.col_var = []   # (var index, sign) per structural variable column
        self.var_cols = []  # per original variable, list of (col, sign)
        for j in range(d):
            if self.nonneg[j]:
                self.col_var.append((j, 1))
                self.var_cols.append([(len(self.col_var) - 1, 1)])
            else:
                self.col_var.append((j, 1))
                self.col_var.append((j, -1))
                self.var_cols.append([(len(self.col_var) - 2, 1),
                                      (len(self.col_var) - 1, -1)])
        nvar_cols = len(self.col_var)
        nslack = len(kept)
        self.nstruct = nvar_cols + nslack

        rows = []
        rhs = []
        self.row_kind = []  # ("ineq", original index) or ("eq", index)
        self.row_sign = []
        for s, (idx, a, b) in enumerate(kept):
            row = [ZERO] * self.nstruct
            for j, aj in enumerate(a):
                if aj:
                    for col, sg in self.var_cols[j]:
                        row[col] = aj * sg
            row[nvar_cols + s] = -ONE  # a.x - slack = b
            rows.append(row)
            rhs.append(b)
            self.row_kind.append(("ineq", idx))
        for l, (a, b) in enumerate(eqs):
            row = [ZERO] * self.nstruct
            for j, aj in enumerate(a):
                if aj:
                    for col, sg in self.var_cols[j]:
                        row[col] = aj * sg
            rows.append(row)
            rhs.append(b)
            self.row_kind.append(("eq", l))
        for i in range(len(rows)):
            if rhs[i] < 0:
                rows[i] = [-x for x in rows[i]]
                rhs[i] = -rhs[i]
                self.row_sign.append(-1)
            else:
                self.row_sign.append(1)

        m = len(rows)
        self.m = m
        self.ncols = self.nstruct + m
        for i, row in enumerate(rows):
            row.extend(ONE if k == i else ZERO for k in range(m))
        self.rows = rows
        self.rhs = rhs
        self.basis = [self.nstruct + i for i in range(m)]
        self.art_dropped = False

    # -- core pivoting ---------------------------------------------------

    def _pivot(self, i, j, cost):
        piv = self.rows[i][j]
        if piv != ONE:
            inv = ONE / piv
            self.rows[i] = [x * inv for x in self.rows[i]]
            self.rhs[i] *= inv
        prow = self.rows[i]
        prhs = self.rhs[i]
        for r in range(self.m):
            if r == i:
                continue
            f = self.rows[r][j]
            if f:
                row = self.rows[r]
                self.rows[r] = [x - f * y for x, y in zip(row, prow)]
                self.rhs[r] -= f * prhs
        f = cost[j]
        if f:
            for k in range(len(cost)):
                if prow[k]:
                    cost[k] -= f * prow[k]
            self.obj -= f * prhs
        self.basis[i] = j

    def _iterate(self, cost, eligible):
        while True:
            enter = None
            for j in range(len(cost)):
                if eligible[j] and cost[j] < 0:
                    enter = j
                    break
            if enter is None:
                return OPTIMAL
            leave = None
            best = None
            for i in range(self.m):
                a = self.rows[i][enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (
                            ratio == best and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                return UNBOUNDED
            self._pivot(leave, enter, cost)

    # -- phases ----------------------------------------------------------

    def phase1(self):
        # self.obj tracks the negated objective value throughout
        cost = [ZERO] * self.ncols
        self.obj = ZERO
        for i in range(self.m):
            # reduced costs of minimizing the artificial sum
            row = self.rows[i]
            for k in range(self.nstruct):
                if row[k]:
                    cost[k] -= row[k]
            self.obj -= self.rhs[i]
        eligible = [True] * self.ncols
        status = self._iterate(cost, eligible)
        assert status == OPTIMAL  # phase 1 is bounded below by zero
        if self.obj < 0:
            self._phase1_cost = cost
            return INFEASIBLE
        # drive remaining artificials out of the basis
        for i in range(self.m):
            if self.basis[i] >= self.nstruct:
                piv = None
                for j in range(self.nstruct):
                    if self.rows[i][j]:
                        piv = j
                        break
                if piv is not None:
                    self._pivot(i, piv, cost)
        keep = [i for i in range(self.m) if self.basis[i] < self.nstruct]
        if len(keep) < self.m:  # redundant rows
            self.rows = [self.rows[i] for i in keep]
            self.rhs = [self.rhs[i] for i in keep]
            self.basis = [self.basis[i] for i in keep]
            self.m = len(keep)
        return OPTIMAL

    def phase2(self, var_cost):
        cost = [ZERO] * self.ncols
        for j, c in enumerate(var_cost):
            if c:
                for col, sg in self.var_cols[j]:
                    cost[col] = c * sg
        self.obj = ZERO
        for i in range(self.m):
            cb = cost[self.basis[i]]
            if cb:
                row = self.rows[i]
                for k in range(self.ncols):
                    if row[k]:
                        cost[k] -= cb * row[k]
                self.obj -= cb * self.rhs[i]
        eligible = [j < self.nstruct for j in range(self.ncols)]
        return self._iterate(cost, eligible)

    # -- results ---------------------------------------------------------

    def solution(self):
        vals = [ZERO] * self.nstruct
        for i, b in enumerate(self.basis):
            if b < self.nstruct:
                vals[b] = self.rhs[i]
        x = []
        for cols in self.var_cols:
            v = ZERO
            for col, sg in cols:
                v += sg * vals[col]
            x.append(v)
        return x

    def farkas_certificate(self):
        """Multipliers proving infeasibility, in original row order."""
        # y_i = (phase-1 dual) recovered from the artificial columns, which
        # started as the identity; unflip the row-sign normalization.
        cost = self._phase1_cost
        y = []
        for i in range(self.m):
            # reduced cost of artificial i is 1 - y_i
            y.append((ONE - cost[self.nstruct + i]) * self.row_sign[i])
        n_ineq = len(self.h.inequalities)
        n_eq = len(self.h.equalities)
        cert_ineq = [ZERO] * n_ineq
        cert_eq = [ZERO] * n_eq
        for i, (kind, idx) in enumerate(self.row_kind):
            if kind == "ineq":
                cert_ineq[idx] = y[i]
            else:
                cert_eq[idx] = y[i]
        # consumed bound rows x_j >= 0 absorb the residual coefficient
        combo = [ZERO] * self.h.ambient_dim
        for yv, (a, b) in zip(cert_ineq, self.h.inequalities):
            if yv:
                for j, aj in enumerate(a):
                    if aj:
                        combo[j] += yv * aj
        for yv, (a, b) in zip(cert_eq, self.h.equalities):
            if yv:
                for j, aj in enumerate(a):
                    if aj:
                        combo[j] += yv * aj
        for j in range(self.h.ambient_dim):
            if self.nonneg[j] and combo[j]:
                cert_ineq[self.bound_row[j]] = -combo[j]
        cert = cert_ineq + cert_eq
        if not verify_farkas(self.h, cert):  # internal consistency guard
            raise AssertionError("simplex produced an invalid Farkas certificate")
        return cert


def _is_simple_bound(a, b):
    """Index j if the row is exactly x_j >= 0, else None."""
    if b:
        return None
    j = None
    for k, ak in enumerate(a):
        if ak:
            if j is not None or ak != ONE:
                return None
            j = k
    return j
