"""State spaces of the four theories and exact membership tests.

classical  one fiducial measurement per party; the state set is a simplex.
gnst       every positive, relatively-normalized, no-signalling vector.
glt        single systems as in gnst; composites are convex mixtures of
           product-deterministic states only.
qubit      single (3,2) systems with the Bloch-ball membership predicate,
           handled in floats with tolerance QUBIT_TOL.

For classical/gnst the halfspace description is explicit, so membership is
decided by direct exact evaluation of those constraints; for glt composites
membership is an exact LP over the closed-form product-deterministic vertex
list. Vertex enumerations and span data are memoized per system type.
"""

import itertools
import math

from . import linalg
from .errors import DimensionMismatch, UnsupportedTheory
from .polytope import HRep, VRep, enumerate_vertices, hrep, hull_hrep
from .rationals import ONE, ZERO, Rat
from .states import (StateVector, measurement_sums, norm, product_state,
                     pure_state, QUBIT_TOL)
from .systems import CLASSICAL, GLT, GNST, QUBIT, SystemType

_hrep_cache = {}
_vertex_cache = {}
_null_cache = {}
_span_cache = {}


def state_space(t):
    """H-rep of the normalized state polytope (not available for qubit)."""
    key = (t, "polytope")
    if key not in _hrep_cache:
        _hrep_cache[key] = _build_hrep(t, normalized=True)
    return _hrep_cache[key]


def state_cone(t):
    """H-rep of the unnormalized cone S+ (norm equality dropped)."""
    key = (t, "cone")
    if key not in _hrep_cache:
        _hrep_cache[key] = _build_hrep(t, normalized=False)
    return _hrep_cache[key]


def _build_hrep(t, normalized):
    if t.theory == QUBIT:
        raise UnsupportedTheory(
            "the qubit state set is the Bloch ball, a nonlinear body; "
            "use qubit_is_member instead of an H-rep")
    if t.theory == GLT and t.n_parties > 1:
        h = hull_hrep(VRep(t.dim, tuple(v.entries for v in vertices(t)), ()))
        if not normalized:
            # homogenize: a.x >= b on normalized states becomes
            # (a - b*nvec).x >= 0 on the cone, nvec being the norm functional
            nvec = [ZERO] * t.dim
            first = next(iter(t.measurement_tuples()))
            for outs in t.outcome_tuples():
                nvec[t.index(first, outs)] = ONE
            eqs = tuple((tuple(x - b * nv for x, nv in zip(a, nvec)), ZERO)
                        for a, b in h.equalities)
            ineqs = tuple((tuple(x - b * nv for x, nv in zip(a, nvec)), ZERO)
                          for a, b in h.inequalities)
            return HRep(t.dim, eqs, ineqs)
        return h
    dim = t.dim
    ineqs = [(tuple(ONE if j == i else ZERO for j in range(dim)), ZERO)
             for i in range(dim)]
    eqs = []
    m_tuples = list(t.measurement_tuples())
    sums = {}
    for ms in m_tuples:
        row = [ZERO] * dim
        for outs in t.outcome_tuples():
            row[t.index(ms, outs)] = ONE
        sums[ms] = row
    first = m_tuples[0]
    for ms in m_tuples[1:]:
        eqs.append((tuple(a - b for a, b in zip(sums[ms], sums[first])), ZERO))
    # per-party no-signalling; jointly equivalent to every bipartite splitting
    for party in range(t.n_parties):
        n_i, k_i = t.parties[party]
        others = [p for p in range(t.n_parties) if p != party]
        other_settings = itertools.product(*(range(1, t.parties[p][0] + 1) for p in others))
        for osett in other_settings:
            other_outs = itertools.product(*(range(1, t.parties[p][1] + 1) for p in others))
            for oouts in other_outs:
                base = None
                for x in range(1, n_i + 1):
                    row = [ZERO] * dim
                    ms = [0] * t.n_parties
                    outs = [0] * t.n_parties
                    for pos, p in enumerate(others):
                        ms[p] = osett[pos]
                        outs[p] = oouts[pos]
                    ms[party] = x
                    for a in range(1, k_i + 1):
                        outs[party] = a
                        row[t.index(tuple(ms), tuple(outs))] = ONE
                    if base is None:
                        base = row
                    else:
                        eqs.append((tuple(r - b for r, b in zip(row, base)), ZERO))
    if normalized:
        eqs.append((tuple(sums[first]), ONE))
    return hrep(dim, eqs, ineqs)


def vertices(t):
    """Pure normalized states, lexicographically sorted and cached."""
    if t not in _vertex_cache:
        _vertex_cache[t] = _build_vertices(t)
    return _vertex_cache[t]


def _build_vertices(t):
    if t.theory == QUBIT:
        raise UnsupportedTheory("the qubit pure states form a sphere, not a finite set")
    if t.theory in (GLT, CLASSICAL) and t.n_parties > 1:
        vs = []
        per_party = []
        for n, k in t.parties:
            per_party.append(list(itertools.product(range(1, k + 1), repeat=n)))
        for combo in itertools.product(*per_party):
            vs.append(product_state(t, combo).entries)
        return tuple(StateVector(t, e) for e in sorted(vs))
    if t.n_parties == 1:
        n, k = t.parties[0]
        vs = [pure_state(t, a).entries for a in itertools.product(range(1, k + 1), repeat=n)]
        return tuple(StateVector(t, e) for e in sorted(vs))
    vrep = enumerate_vertices(state_space(t))
    return tuple(StateVector(t, v) for v in vrep.vertices)


def span_basis(t):
    """A maximal linearly independent subset of the pure states."""
    if t not in _span_cache:
        basis = []
        for v in vertices(t):
            if linalg.rank([list(b.entries) for b in basis] + [list(v.entries)]) > len(basis):
                basis.append(v)
        _span_cache[t] = tuple(basis)
    return _span_cache[t]


def null_covectors(t):
    """Basis of covectors that vanish on the whole state set."""
    if t not in _null_cache:
        rows = [list(v.entries) for v in vertices(t)]
        _null_cache[t] = tuple(tuple(c) for c in linalg.nullspace(rows))
    return _null_cache[t]


def is_member(state, t=None):
    """Exact membership of state in the (possibly unnormalized) state set
    of theory t; t defaults to the state's own system type."""
    if t is None:
        t = state.system
    if t.party_dims != state.system.party_dims:
        raise DimensionMismatch("state shape does not match the system type")
    if t.theory == QUBIT:
        return qubit_is_member(state)
    if state.system.theory == QUBIT:
        raise DimensionMismatch("qubit-valued state tested against an exact theory")
    if t.theory == GLT and t.n_parties > 1:
        return _glt_member(state, t)
    return _direct_member(state, t)


def _direct_member(state, t):
    entries = state.entries
    if any(e < 0 for e in entries):
        return False
    sums = measurement_sums(state)
    c = sums[0]
    if any(s != c for s in sums) or c > 1:
        return False
    # per-party no-signalling
    for party in range(len(t.parties)):
        n_i, k_i = t.parties[party]
        if n_i == 1:
            continue
        others = [p for p in range(len(t.parties)) if p != party]
        for osett in itertools.product(*(range(1, t.parties[p][0] + 1) for p in others)):
            for oouts in itertools.product(*(range(1, t.parties[p][1] + 1) for p in others)):
                base = None
                ms = [0] * len(t.parties)
                outs = [0] * len(t.parties)
                for pos, p in enumerate(others):
                    ms[p] = osett[pos]
                    outs[p] = oouts[pos]
                for x in range(1, n_i + 1):
                    ms[party] = x
                    s = ZERO
                    for a in range(1, k_i + 1):
                        outs[party] = a
                        s += entries[state.system.index(tuple(ms), tuple(outs))]
                    if base is None:
                        base = s
                    elif s != base:
                        return False
    return True


def _glt_member(state, t):
    from .lp import feasible_point
    vs = vertices(t)
    n = len(vs)
    dim = t.dim
    eqs = [([Rat(v.entries[j]) for v in vs], state.entries[j]) for j in range(dim)]
    ineqs = [([ONE if k == i else ZERO for k in range(n)], ZERO) for i in range(n)]
    # weights sum to the norm, which must not exceed one
    ineqs.append(([Rat(-1)] * n, Rat(-1)))
    return feasible_point(hrep(n, eqs, ineqs)).feasible


def satisfies_no_signalling(state):
    """Check the marginal conditions across every bipartition of parties.

    Per-party conditions already imply this, but the exhaustive form is what
    composite-state invariants quote, so it is available for tests. Exact.
    """
    sys_ = state.system
    nparties = sys_.n_parties
    parties = list(range(nparties))
    for r in range(1, nparties):
        for kept in itertools.combinations(parties, r):
            dropped = [p for p in parties if p not in kept]
            reference = None
            for dsett in itertools.product(*(range(1, sys_.parties[p][0] + 1) for p in dropped)):
                table = {}
                for ms_k in itertools.product(*(range(1, sys_.parties[p][0] + 1) for p in kept)):
                    for outs_k in itertools.product(*(range(1, sys_.parties[p][1] + 1) for p in kept)):
                        s = ZERO
                        for outs_d in itertools.product(*(range(1, sys_.parties[p][1] + 1) for p in dropped)):
                            ms = [0] * nparties
                            outs = [0] * nparties
                            for pos, p in enumerate(kept):
                                ms[p] = ms_k[pos]
                                outs[p] = outs_k[pos]
                            for pos, p in enumerate(dropped):
                                ms[p] = dsett[pos]
                                outs[p] = outs_d[pos]
                            s += state.entries[sys_.index(tuple(ms), tuple(outs))]
                        table[(ms_k, outs_k)] = s
                if reference is None:
                    reference = table
                elif table != reference:
                    return False
    return True


# -- qubit specifics -------------------------------------------------------


def qubit_is_member(state, tol=QUBIT_TOL):
    """Bloch-ball test: (2P(up|x)-1)^2 + (2P(up|y)-1)^2 + (2P(up|z)-1)^2 <= 1
    for normalized states, scaled by the norm for unnormalized ones."""
    entries = [float(e) for e in state.entries]
    if len(entries) != 6:
        raise DimensionMismatch("qubit states have six entries")
    sums = [entries[0] + entries[1], entries[2] + entries[3], entries[4] + entries[5]]
    c = sums[0]
    if max(abs(s - c) for s in sums) > tol:
        return False
    if c < -tol or c > 1 + tol:
        return False
    radius = math.sqrt(sum((entries[2 * i] - entries[2 * i + 1]) ** 2 for i in range(3)))
    return radius <= c + tol


def qubit_state(bloch, c=1.0):
    """State vector of a qubit with the given Bloch vector and norm c."""
    entries = []
    for r in bloch:
        entries.append(c * (1.0 + r) / 2.0)
        entries.append(c * (1.0 - r) / 2.0)
    return StateVector(SystemType(((3, 2),), QUBIT), tuple(entries))
