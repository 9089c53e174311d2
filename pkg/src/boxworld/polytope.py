"""Polyhedra in halfspace and vertex form, with exact conversions.

HRep holds equalities a.x = b and inequalities a.x >= b. VRep holds vertices
and rays. Conversion from H to V runs the double description method on the
homogenized cone after the equalities have been eliminated through an exact
nullspace parametrization:

  1. feasibility is settled first by an exact LP (EmptyPolytope carries a
     Farkas certificate in its message),
  2. constraint rows are inserted in lexicographic order,
  3. adjacency of rays is decided by the combinatorial zero-set test,
  4. rays are kept as primitive integer vectors and vertices are rescaled
     to homogenizing coordinate one.

Vertices come back sorted lexicographically so every enumeration is
reproducible byte for byte. The reverse conversion (hull_hrep) runs the same
core on the dual side and is what backs hull-based state spaces.
"""

from dataclasses import dataclass
from typing import Tuple

from . import linalg
from .errors import DimensionMismatch, EmptyPolytope, Unbounded
from .rationals import ONE, ZERO, Rat

Row = Tuple[Tuple[Rat, ...], Rat]


@dataclass(frozen=True)
class HRep:
    ambient_dim: int
    equalities: Tuple[Row, ...]
    inequalities: Tuple[Row, ...]

    def __post_init__(self):
        for a, _ in list(self.equalities) + list(self.inequalities):
            if len(a) != self.ambient_dim:
                raise DimensionMismatch(
                    f"row of length {len(a)} in {self.ambient_dim}-dimensional H-rep")

    def satisfied_by(self, x):
        """Exact pointwise membership test."""
        for a, b in self.equalities:
            if linalg.dot(a, x) != b:
                return False
        for a, b in self.inequalities:
            if linalg.dot(a, x) < b:
                return False
        return True

    def is_cone(self):
        return all(not b for _, b in self.equalities) and \
            all(not b for _, b in self.inequalities)


@dataclass(frozen=True)
class VRep:
    ambient_dim: int
    vertices: Tuple[Tuple[Rat, ...], ...]
    rays: Tuple[Tuple[Rat, ...], ...]


def hrep(dim, equalities=(), inequalities=()):
    eqs = tuple((tuple(Rat(a) for a in row), Rat(b)) for row, b in equalities)
    ineqs = tuple((tuple(Rat(a) for a in row), Rat(b)) for row, b in inequalities)
    return HRep(dim, eqs, ineqs)


def enumerate_vertices(h):
    """Minimal V-rep of a bounded nonempty polytope given by h."""
    from .lp import feasible_point
    res = feasible_point(h)
    if not res.feasible:
        raise EmptyPolytope(f"H-rep is infeasible; Farkas certificate {res.witness}")
    vertices, rays = _homogeneous_dd(h)
    if rays:
        raise Unbounded("region has recession rays; not a polytope")
    return VRep(h.ambient_dim, tuple(sorted(vertices)), ())


def cone_generators(h):
    """Extreme rays of the pointed polyhedral cone given by a homogeneous h."""
    if not h.is_cone():
        raise ValueError("cone H-rep must have zero right-hand sides")
    rows = [list(a) for a, _ in h.inequalities]
    for a, _ in h.equalities:
        rows.append(list(a))
        rows.append([-x for x in a])
    rays = _dd_with_equalities(rows, [list(a) for a, _ in h.equalities], h.ambient_dim)
    return VRep(h.ambient_dim, (), tuple(sorted(rays)))


def dual_cone_generators(h):
    """Generators of {r : r.x >= 0 for every x in the cone given by h}.

    The dual of {x : C_i.x >= 0, D_j.x = 0} is generated by the C_i together
    with both signs of the D_j; redundant generators are pruned by exact
    conic-membership LPs so the returned set is minimal.
    """
    if not h.is_cone():
        raise ValueError("dual cone of a non-cone H-rep")
    if not _cone_is_nonempty_pointed_input(h):
        raise EmptyPolytope("input cone is empty or ill-formed")
    gens = []
    for a, _ in h.inequalities:
        gens.append(tuple(linalg.primitive(list(a))))
    for a, _ in h.equalities:
        gens.append(tuple(linalg.primitive(list(a))))
        gens.append(tuple(linalg.primitive([-x for x in a])))
    gens = sorted(set(g for g in gens if any(g)))
    kept = list(gens)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others and in_conic_hull(kept[i], others):
            kept.pop(i)
        else:
            i += 1
    return VRep(h.ambient_dim, (), tuple(kept))


def in_conic_hull(x, generators):
    """Exact test whether x = sum(lambda_i g_i) with lambda_i >= 0."""
    from .lp import feasible_point
    n = len(generators)
    d = len(x)
    eqs = []
    for j in range(d):
        eqs.append(([g[j] for g in generators], x[j]))
    ineqs = [([ONE if k == i else ZERO for k in range(n)], ZERO) for i in range(n)]
    sys = hrep(n, eqs, ineqs)
    return feasible_point(sys).feasible


def in_convex_hull(x, points):
    """Exact test whether x is a convex combination of the given points."""
    from .lp import feasible_point
    n = len(points)
    d = len(x)
    eqs = [([g[j] for g in points], x[j]) for j in range(d)]
    eqs.append(([ONE] * n, ONE))
    ineqs = [([ONE if k == i else ZERO for k in range(n)], ZERO) for i in range(n)]
    sys = hrep(n, eqs, ineqs)
    return feasible_point(sys).feasible


def hull_hrep(v):
    """H-rep of the convex hull of a V-rep (facets via the dual cone)."""
    if not v.vertices:
        raise EmptyPolytope("hull of an empty vertex set")
    d = v.ambient_dim
    gens = [list(p) + [ONE] for p in v.vertices]
    gens += [list(r) + [ZERO] for r in v.rays]
    # affine equalities: covectors vanishing on every homogenized generator
    eqs = []
    for q in linalg.nullspace(gens):
        row = linalg.primitive(q)
        eqs.append((tuple(row[:d]), -row[d]))
    # facets: extreme rays of {a : g.a >= 0 for all generators g},
    # parametrized inside the row span so the cone is pointed
    span_rows, _ = linalg.rref(gens)
    span_rows = [r for r in span_rows if any(r)]
    dd_rows = [[linalg.dot(g, bk) for bk in span_rows] for g in gens]
    ineqs = []
    for u in _dd_pointed(dd_rows, len(span_rows)):
        a = [ZERO] * (d + 1)
        for uk, bk in zip(u, span_rows):
            if uk:
                a = [x + uk * y for x, y in zip(a, bk)]
        a = linalg.primitive(a)
        ineqs.append((tuple(a[:d]), -a[d]))
    return HRep(d, tuple(sorted(eqs)), tuple(sorted(ineqs)))


def region_contains(outer, inner):
    """Exact check that every point satisfying inner satisfies outer."""
    from .lp import solve_lp
    for a, b in outer.inequalities:
        res = solve_lp(list(a), inner, "min")
        if res.status != "optimal" or res.optimum < b:
            return False
    for a, b in outer.equalities:
        lo = solve_lp(list(a), inner, "min")
        hi = solve_lp(list(a), inner, "max")
        if lo.status != "optimal" or hi.status != "optimal":
            return False
        if lo.optimum != b or hi.optimum != b:
            return False
    return True


def same_region(h1, h2):
    return region_contains(h1, h2) and region_contains(h2, h1)


def hrep_after_basis_change(h, n_inv):
    """H-rep of the image of the region under x -> N x, given N^-1."""
    eqs = tuple((tuple(linalg.mat_vec(linalg.transpose(n_inv), list(a))), b)
                for a, b in h.equalities)
    ineqs = tuple((tuple(linalg.mat_vec(linalg.transpose(n_inv), list(a))), b)
                  for a, b in h.inequalities)
    return HRep(h.ambient_dim, eqs, ineqs)


# -- double description core ----------------------------------------------


def _homogeneous_dd(h):
    """Vertices and recession rays of h via DD on the homogenized cone."""
    d = h.ambient_dim
    rows = [list(a) + [-b] for a, b in h.inequalities]
    rows.append([ZERO] * d + [ONE])  # homogenizing coordinate stays nonnegative
    eq_rows = [list(a) + [-b] for a, b in h.equalities]
    rays = _dd_with_equalities(rows, eq_rows, d + 1)
    vertices = []
    recession = []
    for z in rays:
        t = z[d]
        if t > 0:
            vertices.append(tuple(x / t for x in z[:d]))
        elif any(z[:d]):
            recession.append(tuple(linalg.primitive(list(z[:d]))))
    return sorted(set(vertices)), sorted(set(recession))


def _dd_with_equalities(ineq_rows, eq_rows, dim):
    """Extreme rays of {x : ineq_rows.x >= 0, eq_rows.x = 0}."""
    if eq_rows:
        basis = linalg.nullspace(eq_rows)
    else:
        basis = [[ONE if i == j else ZERO for j in range(dim)] for i in range(dim)]
    if not basis:
        return []
    reduced = [[linalg.dot(r, b) for b in basis] for r in ineq_rows]
    rays_w = _dd_pointed(reduced, len(basis))
    out = []
    for w in rays_w:
        z = [ZERO] * dim
        for wi, b in zip(w, basis):
            if wi:
                z = [x + wi * y for x, y in zip(z, b)]
        out.append(tuple(linalg.primitive(z)))
    return out


def _dd_pointed(rows, dim):
    """Extreme rays of {w : row.w >= 0} for a pointed cone of full rank.

    Rows are inserted in lexicographic order starting from a simplicial
    subcone; adjacency uses the combinatorial test on zero sets.
    """
    rows = sorted(set(tuple(r) for r in rows))
    rows = [list(r) for r in rows if any(r)]
    if linalg.rank(rows) < dim:
        raise Unbounded("cone is not pointed (contains a line)")
    # initial simplicial cone from the first maximal independent subset
    chosen = []
    chosen_idx = []
    for i, r in enumerate(rows):
        if linalg.rank(chosen + [r]) > len(chosen):
            chosen.append(r)
            chosen_idx.append(i)
            if len(chosen) == dim:
                break
    inv_cols = []
    for j in range(dim):
        e = [ONE if k == j else ZERO for k in range(dim)]
        col = linalg.solve(chosen, e)
        inv_cols.append(linalg.primitive(col))
    rays = [tuple(c) for c in inv_cols]
    # zero-set bitmasks over processed constraint indices
    processed = list(chosen_idx)
    zsets = []
    for r in rays:
        mask = 0
        for bit, ci in enumerate(processed):
            if not linalg.dot(rows[ci], r):
                mask |= 1 << bit
        zsets.append(mask)
    for i, row in enumerate(rows):
        if i in chosen_idx:
            continue
        vals = [linalg.dot(row, r) for r in rays]
        if all(v >= 0 for v in vals):
            bit = 1 << len(processed)
            zsets = [z | bit if not v else z for z, v in zip(zsets, vals)]
            processed.append(i)
            continue
        pos = [k for k, v in enumerate(vals) if v > 0]
        zero = [k for k, v in enumerate(vals) if not v]
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays = []
        new_zsets = []
        for p in pos:
            for n in neg:
                common = zsets[p] & zsets[n]
                adjacent = True
                for q in range(len(rays)):
                    if q != p and q != n and (common & zsets[q]) == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                combo = [vals[p] * rn - vals[n] * rp
                         for rp, rn in zip(rays[p], rays[n])]
                combo = tuple(linalg.primitive(combo))
                mask = 0
                for bit, ci in enumerate(processed):
                    if not linalg.dot(rows[ci], combo):
                        mask |= 1 << bit
                new_rays.append(combo)
                new_zsets.append(mask)
        bit = 1 << len(processed)
        kept_rays = []
        kept_zsets = []
        for k in pos:
            kept_rays.append(rays[k])
            kept_zsets.append(zsets[k])
        for k in zero:
            kept_rays.append(rays[k])
            kept_zsets.append(zsets[k] | bit)
        for r, z in zip(new_rays, new_zsets):
            kept_rays.append(r)
            kept_zsets.append(z | bit)
        processed.append(i)
        rays, zsets = kept_rays, kept_zsets
    return sorted(set(rays))


def _cone_is_nonempty_pointed_input(h):
    return h.ambient_dim > 0
