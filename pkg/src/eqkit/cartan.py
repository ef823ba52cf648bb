"""Generalized Cartan matrices, their validation, and symmetrizer computation.

A symmetrized matrix (the matrix plus the coprime positive vector d with
d_i*A_ij = d_j*A_ji) is the complete input for everything downstream; the
ambient Kac-Moody algebra itself is never constructed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .errors import (
    AsymmetricZero,
    BadDiagonal,
    NotSymmetrizable,
    PositiveOffDiagonal,
)
from .qcombo import QIndex
from .scalars import rf_qpow


@dataclass(frozen=True)
class GCM:
    """A validated generalized Cartan matrix."""

    n: int
    entries: tuple  # n rows, each a tuple of n ints

    def a(self, i, j):
        """Entry A_ij with 1-based indices."""
        return self.entries[i - 1][j - 1]


def validate_gcm(n, entries) -> GCM:
    """Check the defining conditions and freeze the matrix.

    Requires 2 on the diagonal, nonpositive entries off it, and a symmetric
    zero pattern.
    """
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"expected an {n}x{n} matrix")
    for i in range(n):
        if rows[i][i] != 2:
            raise BadDiagonal(f"A[{i + 1}][{i + 1}] = {rows[i][i]}, must be 2")
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise PositiveOffDiagonal(
                    f"A[{i + 1}][{j + 1}] = {rows[i][j]}, must be <= 0"
                )
    for i in range(n):
        for j in range(i + 1, n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AsymmetricZero(
                    f"A[{i + 1}][{j + 1}] = {rows[i][j]} but "
                    f"A[{j + 1}][{i + 1}] = {rows[j][i]}"
                )
    return GCM(n, rows)


@dataclass(frozen=True)
class SymmetrizedCartan:
    """A GCM together with its coprime positive symmetrizer d."""

    gcm: GCM
    d: tuple  # n positive ints, gcd 1

    @property
    def n(self):
        return self.gcm.n

    def a(self, i, j):
        return self.gcm.a(i, j)

    def qindex(self, i) -> QIndex:
        return QIndex(i, self.d[i - 1])

    def qi_pow(self, i, k):
        """q_i**k = q**(d_i*k)."""
        return rf_qpow(self.d[i - 1] * k)

    def min_offdiag(self):
        """Most negative off-diagonal entry (0 for rank 1)."""
        g = self.gcm
        vals = [g.a(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1) if i != j]
        return min(vals, default=0)


def compute_symmetrizer(g: GCM) -> SymmetrizedCartan:
    """Solve d_i*A_ij = d_j*A_ji for positive coprime integers d.

    The matrix is read as a graph with edges where A_ij != 0; the ratio
    d_j/d_i = A_ij/A_ji propagates by breadth-first traversal per connected
    component, consistency is checked on every edge, and each component is
    scaled to the minimal positive integer vector.  Disconnected matrices are
    accepted.
    """
    n = g.n
    vals = [None] * n  # Fraction per node
    for root in range(n):
        if vals[root] is not None:
            continue
        vals[root] = Fraction(1)
        queue = [root]
        component = [root]
        while queue:
            i = queue.pop(0)
            for j in range(n):
                if j == i or g.entries[i][j] == 0:
                    continue
                ratio = Fraction(g.entries[i][j], g.entries[j][i])
                target = vals[i] * ratio
                if vals[j] is None:
                    vals[j] = target
                    queue.append(j)
                    component.append(j)
        # minimal positive integer scaling for this component
        scale = Fraction(
            lcm(*(vals[k].denominator for k in component)),
            gcd(*(vals[k].numerator for k in component)),
        )
        for k in component:
            vals[k] *= scale
    # consistency on every edge (covers cycles the tree skipped)
    for i in range(n):
        for j in range(n):
            if i != j and vals[i] * g.entries[i][j] != vals[j] * g.entries[j][i]:
                raise NotSymmetrizable(
                    f"inconsistent ratio on edge ({i + 1},{j + 1})"
                )
    d = tuple(int(v) for v in vals)
    return SymmetrizedCartan(g, d)


def symmetrized(entries) -> SymmetrizedCartan:
    """Validate a matrix given as rows and compute its symmetrizer."""
    rows = [list(r) for r in entries]
    return compute_symmetrizer(validate_gcm(len(rows), rows))


def parse_cartan_text(text) -> GCM:
    """Parse the Cartan matrix file format.

    Line 1 is n; the next n lines hold n whitespace-separated integers each.
    Lines starting with '#' are comments.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty Cartan matrix file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the matrix order, got {lines[0]!r}")
    if n < 1:
        raise ValueError(f"matrix order must be positive, got {n}")
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != n:
            raise ValueError(f"row {ln!r} does not have {n} entries")
        rows.append([int(p) for p in parts])
    return validate_gcm(n, rows)


def load_cartan(path) -> SymmetrizedCartan:
    """Read, validate, and symmetrize a Cartan matrix file."""
    with open(path, "r", encoding="utf-8") as fh:
        return compute_symmetrizer(parse_cartan_text(fh.read()))
