"""Exact Gaussian elimination over a field of Python objects.

Works for both RationalFunction and Fraction coefficients: the field is
anything with +, -, *, truthiness at zero, and 1/x via __rtruediv__.
Vectors are sparse dicts keyed by arbitrary hashable labels; an order on
labels is supplied by the caller.
"""

from __future__ import annotations


class RowSpan:
    """Incrementally maintained reduced row-echelon span of sparse vectors."""

    def __init__(self, label_key):
        self._label_key = label_key
        self.pivots = {}  # pivot label -> row dict (pivot coefficient 1)

    def _reduce(self, vec):
        vec = {k: c for k, c in vec.items() if c}
        while vec:
            lead = max(vec, key=self._label_key)
            row = self.pivots.get(lead)
            if row is None:
                return vec, lead
            f = vec[lead]
            for k, c in row.items():
                s = vec.get(k)
                s = -f * c if s is None else s - f * c
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
        return vec, None

    def insert(self, vec):
        """Add a vector to the span; returns False if it was dependent."""
        vec, lead = self._reduce(vec)
        if lead is None:
            return False
        inv = 1 / vec[lead]
        row = {k: c * inv for k, c in vec.items()}
        for other in self.pivots.values():
            f = other.get(lead)
            if f is None:
                continue
            for k, c in row.items():
                s = other.get(k)
                s = -f * c if s is None else s - f * c
                if s:
                    other[k] = s
                else:
                    other.pop(k, None)
        self.pivots[lead] = row
        return True

    def contains(self, vec):
        reduced, lead = self._reduce(vec)
        return lead is None

    def rank(self):
        return len(self.pivots)


def nullspace(constraints, num_unknowns, one):
    """Basis of the solution space of a homogeneous system.

    `constraints` is an iterable of sparse rows over unknowns 0..n-1; `one`
    is the field's multiplicative unit.  Returns sparse basis vectors
    (dicts unknown -> coefficient), one per free unknown.
    """
    span = RowSpan(label_key=lambda j: j)
    for row in constraints:
        span.insert(row)
    pivots = span.pivots
    free = [j for j in range(num_unknowns) if j not in pivots]
    basis = []
    for f in free:
        out = {f: one}
        for j, row in pivots.items():
            c = row.get(f)
            if c:
                out[j] = -c
        basis.append(out)
    return basis
