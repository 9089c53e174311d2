"""System types and the flat indexing scheme for probability vectors.

A system is a list of parties, each with n fiducial measurements of k
outcomes, living in one of four theories. Entries of a state vector are
indexed measurement-major and outcome-minor within a party, with party 0
slowest, so the index of a composite entry is exactly the Kronecker
composition of the per-party indices:

  index((X_1..X_m), (a_1..a_m)) with party dims d_i = n_i * k_i
  p_i = (X_i - 1) * k_i + (a_i - 1)
  index = ((p_1 * d_2 + p_2) * d_3 + p_3) ...

Measurement labels X and outcome labels a are 1-based everywhere.
"""

import itertools
from dataclasses import dataclass
from typing import Tuple

from .errors import UnsupportedTheory

CLASSICAL = "classical"
GNST = "gnst"
GLT = "glt"
QUBIT = "qubit"

THEORIES = (CLASSICAL, GNST, GLT, QUBIT)


@dataclass(frozen=True)
class SystemType:
    parties: Tuple[Tuple[int, int], ...]  # (n_measurements, k_outcomes) per party
    theory: str

    def __post_init__(self):
        if self.theory not in THEORIES:
            raise UnsupportedTheory(f"unknown theory {self.theory!r}")
        if not self.parties:
            raise ValueError("a system needs at least one party")
        for n, k in self.parties:
            if n < 1 or k < 1:
                raise ValueError(f"bad party shape ({n},{k})")
            if self.theory == CLASSICAL and n != 1:
                raise UnsupportedTheory("classical parties have a single fiducial measurement")
            if self.theory == QUBIT and (n, k) != (3, 2):
                raise UnsupportedTheory("qubit parties are (3,2) systems")
            if self.theory in (GNST, GLT) and (n < 2 or k < 2):
                raise UnsupportedTheory(f"{self.theory} needs n,k > 1, got ({n},{k})")

    @property
    def n_parties(self):
        return len(self.parties)

    @property
    def party_dims(self):
        return tuple(n * k for n, k in self.parties)

    @property
    def dim(self):
        d = 1
        for pd in self.party_dims:
            d *= pd
        return d

    def party(self, i):
        return SystemType((self.parties[i],), self.theory)

    def combine(self, other):
        if self.theory != other.theory:
            from .errors import TheoryMismatch
            raise TheoryMismatch(f"{self.theory} vs {other.theory}")
        if self.theory == QUBIT:
            raise UnsupportedTheory("composite qubit systems are out of scope")
        return SystemType(self.parties + other.parties, self.theory)

    def index(self, measurements, outcomes):
        """Flat index of entry P(outcomes | measurements)."""
        idx = 0
        for (n, k), x, a in zip(self.parties, measurements, outcomes):
            if not (1 <= x <= n and 1 <= a <= k):
                raise IndexError(f"label ({x},{a}) out of range for party ({n},{k})")
            idx = idx * (n * k) + (x - 1) * k + (a - 1)
        return idx

    def unindex(self, idx):
        """Inverse of index(); returns (measurements, outcomes)."""
        ms = []
        outs = []
        for n, k in reversed(self.parties):
            p = idx % (n * k)
            idx //= n * k
            ms.append(p // k + 1)
            outs.append(p % k + 1)
        return tuple(reversed(ms)), tuple(reversed(outs))

    def measurement_tuples(self):
        return itertools.product(*(range(1, n + 1) for n, _ in self.parties))

    def outcome_tuples(self):
        return itertools.product(*(range(1, k + 1) for _, k in self.parties))

    def entry_labels(self):
        """All (measurements, outcomes) pairs in flat-index order."""
        return (self.unindex(i) for i in range(self.dim))


def gbit(theory=GNST):
    return SystemType(((2, 2),), theory)


def gbits(n, theory=GNST):
    return SystemType(((2, 2),) * n, theory)


def classical_die(d):
    return SystemType(((1, d),), CLASSICAL)


def qubit():
    return SystemType(((3, 2),), QUBIT)
