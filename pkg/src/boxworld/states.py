"""State vectors and effects.

A StateVector holds one probability entry per (measurement tuple, outcome
tuple) under the flat index scheme of systems.SystemType. Entries are exact
rationals for classical/gnst/glt systems and floats for qubit systems. An
Effect is a dual vector: its pairing with a state gives an outcome
probability. Values are immutable and safe to share.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

from .errors import (DimensionMismatch, MalformedState, SignallingState,
                     TheoryMismatch, UnsupportedTheory)
from .rationals import ONE, ZERO, Rat
from .systems import QUBIT, SystemType

QUBIT_TOL = 1e-9


def _convert_entries(system, entries):
    if len(entries) != system.dim:
        raise DimensionMismatch(
            f"{len(entries)} entries for a {system.dim}-dimensional system")
    if system.theory == QUBIT:
        return tuple(float(e) for e in entries)
    return tuple(Rat(e) for e in entries)


@dataclass(frozen=True)
class StateVector:
    system: SystemType
    entries: Tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", _convert_entries(self.system, self.entries))

    def __getitem__(self, label):
        measurements, outcomes = label
        return self.entries[self.system.index(measurements, outcomes)]

    def scale(self, c):
        if self.system.theory == QUBIT:
            return StateVector(self.system, tuple(float(c) * e for e in self.entries))
        c = Rat(c)
        return StateVector(self.system, tuple(c * e for e in self.entries))

    def mix(self, other, weight):
        """weight * self + (1 - weight) * other."""
        if self.system != other.system:
            raise TheoryMismatch("cannot mix states of different systems")
        w = Rat(weight)
        return StateVector(self.system, tuple(
            w * a + (ONE - w) * b for a, b in zip(self.entries, other.entries)))


@dataclass(frozen=True)
class Effect:
    system: SystemType
    entries: Tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", _convert_entries(self.system, self.entries))

    def pair(self, state):
        """Outcome probability R.P."""
        if state.system.dim != self.system.dim:
            raise DimensionMismatch("effect and state dimensions differ")
        if self.system.theory == QUBIT:
            return sum(r * p for r, p in zip(self.entries, state.entries))
        s = ZERO
        for r, p in zip(self.entries, state.entries):
            if r and p:
                s += r * p
        return s


def identity_effect(system):
    """The unit effect (1,..,1|0,..,0|...): pairs to |P| for every state."""
    first = tuple(1 for _ in system.parties)
    entries = [ZERO] * system.dim
    for outs in system.outcome_tuples():
        entries[system.index(first, outs)] = ONE
    return Effect(system, tuple(entries))


def norm(state):
    """The common per-measurement sum |P|; MalformedState if sums differ."""
    sums = measurement_sums(state)
    first = sums[0]
    if state.system.theory == QUBIT:
        if any(abs(s - first) > QUBIT_TOL for s in sums):
            raise MalformedState("per-measurement sums differ beyond tolerance")
        return first
    if any(s != first for s in sums):
        raise MalformedState("per-measurement sums differ")
    return first


def measurement_sums(state):
    """Sum of entries for each joint measurement choice, in tuple order."""
    sys_ = state.system
    out = []
    for ms in sys_.measurement_tuples():
        if sys_.theory == QUBIT:
            s = 0.0
            for outs in sys_.outcome_tuples():
                s += state.entries[sys_.index(ms, outs)]
        else:
            s = ZERO
            for outs in sys_.outcome_tuples():
                s += state.entries[sys_.index(ms, outs)]
        out.append(s)
    return out


def tensor(a, b):
    """Product state under the Kronecker index scheme; norms multiply."""
    system = a.system.combine(b.system)
    entries = [x * y for x in a.entries for y in b.entries]
    return StateVector(system, tuple(entries))


def tensor_effect(a, b):
    system = a.system.combine(b.system)
    return Effect(system, tuple(x * y for x in a.entries for y in b.entries))


def marginal(state, keep, check=True):
    """Reduced state on the parties listed in keep (in listed order).

    Discarded parties are marginalized with their first measurement; when
    check is set, every other measurement choice is verified to give the
    same result (SignallingState otherwise).
    """
    sys_ = state.system
    if sys_.theory == QUBIT:
        raise UnsupportedTheory("no composite qubit states")
    keep = tuple(keep)
    drop = tuple(i for i in range(sys_.n_parties) if i not in keep)
    if not drop:
        if keep == tuple(range(sys_.n_parties)):
            return state
    kept_parties = tuple(sys_.parties[i] for i in keep)
    new_sys = SystemType(kept_parties, sys_.theory)

    def reduce_with(drop_settings):
        entries = [ZERO] * new_sys.dim
        drop_outcome_ranges = [range(1, sys_.parties[i][1] + 1) for i in drop]
        for ms in new_sys.measurement_tuples():
            full_ms = [0] * sys_.n_parties
            for pos, party in enumerate(keep):
                full_ms[party] = ms[pos]
            for pos, party in enumerate(drop):
                full_ms[party] = drop_settings[pos]
            for outs in new_sys.outcome_tuples():
                s = ZERO
                for drop_outs in itertools.product(*drop_outcome_ranges):
                    full_outs = [0] * sys_.n_parties
                    for pos, party in enumerate(keep):
                        full_outs[party] = outs[pos]
                    for pos, party in enumerate(drop):
                        full_outs[party] = drop_outs[pos]
                    s += state.entries[sys_.index(tuple(full_ms), tuple(full_outs))]
                entries[new_sys.index(ms, outs)] = s
        return entries

    all_first = tuple(1 for _ in drop)
    result = reduce_with(all_first)
    if check and drop:
        for settings in itertools.product(*(range(1, sys_.parties[i][0] + 1) for i in drop)):
            if settings == all_first:
                continue
            if reduce_with(settings) != result:
                raise SignallingState(
                    f"marginal depends on discarded measurement choice {settings}")
    return StateVector(new_sys, tuple(result))


def reduce(state, keep_party):
    """Reduced state for one party (or a tuple of parties)."""
    if isinstance(keep_party, int):
        keep_party = (keep_party,)
    return marginal(state, keep_party)


def condition(state, party, setting, outcome):
    """Measure a fiducial setting on one party and collapse.

    Returns (probability, conditional state of the remaining parties), the
    conditional being None when the outcome has probability zero. For a
    single-party state the conditional is None as well (nothing remains).
    """
    sys_ = state.system
    n, k = sys_.parties[party]
    if not (1 <= setting <= n and 1 <= outcome <= k):
        raise IndexError(f"label ({setting},{outcome}) out of range")
    rest = tuple(i for i in range(sys_.n_parties) if i != party)
    if not rest:
        prob = state.entries[sys_.index((setting,), (outcome,))]
        return prob, None
    new_sys = SystemType(tuple(sys_.parties[i] for i in rest), sys_.theory)
    entries = [ZERO] * new_sys.dim
    for ms in new_sys.measurement_tuples():
        full_ms = list(ms[:party]) + [setting] + list(ms[party:])
        for outs in new_sys.outcome_tuples():
            full_outs = list(outs[:party]) + [outcome] + list(outs[party:])
            entries[new_sys.index(ms, outs)] = state.entries[
                sys_.index(tuple(full_ms), tuple(full_outs))]
    sub = StateVector(new_sys, tuple(entries))
    prob = norm(sub)
    if not prob:
        return ZERO, None
    return prob, sub.scale(ONE / prob)


def outcome_distribution(state, party, setting):
    """Exact outcome probabilities for one fiducial measurement on one party."""
    sys_ = state.system
    n, k = sys_.parties[party]
    single = marginal(state, (party,), check=False)
    return [single.entries[single.system.index((setting,), (a,))] for a in range(1, k + 1)]


def pure_state(system, assignment):
    """Deterministic single-party state: assignment maps each measurement to
    its certain outcome, given as a tuple (a_1, ..., a_n)."""
    if system.n_parties != 1:
        raise ValueError("pure_state builds single-party states")
    n, k = system.parties[0]
    if len(assignment) != n:
        raise DimensionMismatch(f"need {n} outcomes, got {len(assignment)}")
    entries = [ZERO] * system.dim
    for x, a in enumerate(assignment, start=1):
        if not (1 <= a <= k):
            raise IndexError(f"outcome {a} out of range")
        entries[system.index((x,), (a,))] = ONE
    return StateVector(system, tuple(entries))


def product_state(system, assignments):
    """Deterministic product state from one outcome assignment per party."""
    state = pure_state(system.party(0), assignments[0])
    for i in range(1, system.n_parties):
        state = tensor(state, pure_state(system.party(i), assignments[i]))
    return state


def maximally_mixed(system):
    """Uniform entries 1/k per party measurement (product of uniform states)."""
    entries = []
    for ms, outs in system.entry_labels():
        v = ONE
        for (n, k) in system.parties:
            v = v / k
        entries.append(v)
    return StateVector(system, tuple(entries))
