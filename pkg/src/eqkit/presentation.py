"""Both presentations of the quantized enveloping algebra as oriented rewrite
systems plus Serre-type relators, with normal forms and ideal membership.

The non-Serre relations are oriented toward a block shape:

* chevalley: (F block) (E block) (K Laurent block), K letters pushed right;
* equitable: (X Laurent block) (Y block) (Z block), X letters pushed left.

Reduction is sound (every step applies a defining relation) but confluence
is not assumed: normal forms are reduction representatives, and zero-ness in
the quotient combines reduction with membership in the span of reduced
relator multiples, decided by exact Gaussian elimination over Q(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._linalg import RowSpan
from .cartan import SymmetrizedCartan
from .errors import FuelExhausted, WindowTooSmall
from .freealg import (
    Gen,
    NCPoly,
    unit_word,
    word_key,
)
from .qcombo import q_binom, serre_rhs_product
from .scalars import RF_ONE, RF_ZERO

DEFAULT_FUEL = 10**6


@dataclass(frozen=True)
class RewriteRule:
    """One oriented two-letter rule: lhs pair -> rhs polynomial."""

    lhs: tuple  # (Gen, Gen)
    rhs: NCPoly
    label: str


@dataclass(frozen=True)
class SerreRelator:
    """A relator (LHS minus RHS) handled by ideal membership, not rewriting."""

    poly: NCPoly
    signature: tuple  # sorted ((kind, index), count) of the homogeneous part
    flavor: str  # chevalley-E | chevalley-F | equitable-Y | equitable-Z
    label: str


def _noninv_signature(word, noninv_kinds):
    counts = {}
    for g in word:
        if g.kind in noninv_kinds:
            key = (g.kind, g.index)
            counts[key] = counts.get(key, 0) + 1
    return tuple(sorted(counts.items()))


class PresentationSpec:
    """Alphabet, oriented rules, and relators for one flavor over one matrix."""

    def __init__(self, flavor, cartan, rules, relators, fuel=DEFAULT_FUEL):
        self.flavor = flavor
        self.cartan = cartan
        self.rules = tuple(rules)
        self.relators = tuple(relators)
        self.fuel = fuel
        if flavor == "chevalley":
            self.laurent_kinds = ("K", "Kinv")
            self.noninv_kinds = ("E", "F")
        elif flavor == "equitable":
            self.laurent_kinds = ("X", "Xinv")
            self.noninv_kinds = ("Y", "Z")
        else:
            raise ValueError(f"unknown flavor {flavor!r}")
        self._laurent_set = frozenset(self.laurent_kinds)
        self._lookup = {}
        for rule in self.rules:
            if rule.lhs in self._lookup:
                raise ValueError(f"duplicate rule for pair {rule.lhs}")
            self._lookup[rule.lhs] = tuple(rule.rhs.terms.items())
        _check_rules_sound(self)
        for rel in self.relators:
            if self.normal_form(rel.poly) != rel.poly:
                raise AssertionError(f"relator {rel.label} is not reduction-stable")

    # -- reduction -----------------------------------------------------

    def segment_normal(self, word):
        """Collapse and index-sort each maximal invertible run of a word.

        Sound shortcut through the unit/commutation rules: the invertible
        letters generate a commutative group in the quotient, so a pure-unit
        segment is determined by its exponent vector and carries no scalar.
        """
        laurent = self._laurent_set
        if not any(g.kind in laurent for g in word):
            return word
        pos = self.laurent_kinds[0]
        out = []
        exps = {}
        for g in word:
            if g.kind in laurent:
                delta = 1 if g.kind == pos else -1
                e = exps.get(g.index, 0) + delta
                if e:
                    exps[g.index] = e
                else:
                    exps.pop(g.index, None)
            else:
                if exps:
                    out.extend(unit_word(exps, pos))
                    exps = {}
                out.append(g)
        if exps:
            out.extend(unit_word(exps, pos))
        return tuple(out)

    def normal_form(self, p: NCPoly, fuel=None) -> NCPoly:
        """Fixed point of exhaustive rule application (leftmost redex)."""
        budget = self.fuel if fuel is None else fuel
        lookup = self._lookup
        done = {}
        pending = {}
        for word, coeff in p.terms.items():
            sw = self.segment_normal(word)
            s = pending.get(sw, RF_ZERO) + coeff
            if s:
                pending[sw] = s
            else:
                pending.pop(sw, None)
        while pending:
            word, coeff = pending.popitem()
            redex = None
            for k in range(len(word) - 1):
                hit = lookup.get((word[k], word[k + 1]))
                if hit is not None:
                    redex = (k, hit)
                    break
            if redex is None:
                s = done.get(word, RF_ZERO) + coeff
                if s:
                    done[word] = s
                else:
                    done.pop(word, None)
                continue
            budget -= 1
            if budget < 0:
                raise FuelExhausted(
                    f"rewriting exceeded {self.fuel if fuel is None else fuel} steps"
                )
            k, replacements = redex
            head, tail = word[:k], word[k + 2 :]
            for mid, c in replacements:
                nw = self.segment_normal(head + mid + tail)
                nc = pending.get(nw, RF_ZERO) + (coeff if c is RF_ONE else coeff * c)
                if nc:
                    pending[nw] = nc
                else:
                    pending.pop(nw, None)
        return NCPoly(done)

    # -- ideal membership ------------------------------------------------

    def word_parts(self, word):
        """Split a word into (non-invertible subword, Laurent exponent vector)."""
        noninv = []
        exps = [0] * self.cartan.n
        for g in word:
            if g.kind in self.noninv_kinds:
                noninv.append(g)
            elif g.kind == self.laurent_kinds[0]:
                exps[g.index - 1] += 1
            else:
                exps[g.index - 1] -= 1
        return tuple(noninv), tuple(exps)

    def _shift_free(self, poly, ev):
        """Merge a Laurent monomial into each word on the non-interacting
        side: the left for the equitable shape, the right for the Chevalley
        shape.  Pure segment work, no rule applications and no scalars."""
        if not any(ev):
            return poly
        uw = unit_word(_ev_dict(ev), self.laurent_kinds[0])
        out = {}
        if self.flavor == "equitable":
            for w, c in poly.terms.items():
                out[self.segment_normal(uw + w)] = c
        else:
            for w, c in poly.terms.items():
                out[self.segment_normal(w + uw)] = c
        return NCPoly(out)

    def _walk_relator_bases(self, rel, lo, hi):
        """Yield (point, normal form of relator times interacting-side
        Laurent monomial) for every exponent vector in the window box.

        Built incrementally one letter at a time, walking the box axis by
        axis from the origin, so consumers can stop early.
        """
        n = len(lo)
        right = self.flavor == "equitable"
        pos, neg = self.laurent_kinds
        origin = (0,) * n
        bases = {origin: rel.poly}
        yield origin, rel.poly
        points = [origin]
        for k in range(n):
            fresh = []
            for pt in points:
                for step, stop in ((1, hi[k]), (-1, lo[k])):
                    prev = bases[pt]
                    mono = NCPoly.generator(Gen(pos if step > 0 else neg, k + 1))
                    for e in range(step, stop + step, step):
                        prev = self.normal_form(prev * mono if right else mono * prev)
                        npt = pt[:k] + (e,) + pt[k + 1 :]
                        bases[npt] = prev
                        yield npt, prev
                        fresh.append(npt)
            points.extend(fresh)


class _LazyBases:
    """Cache over the incremental base walk, resumable across jobs."""

    def __init__(self, pres, rel, lo, hi):
        self._gen = pres._walk_relator_bases(rel, lo, hi)
        self.computed = []
        self.done = False

    def items(self):
        for item in self.computed:
            yield item
        while not self.done:
            try:
                item = next(self._gen)
            except StopIteration:
                self.done = True
                return
            self.computed.append(item)
            yield item

    def serre_ideal_member(
        self,
        p: NCPoly,
        *,
        evaluate_at=None,
        max_rows=50_000,
        max_degree=24,
        max_excess=2,
    ) -> bool:
        """Decide whether normal-form p lies in the span of reduced relator
        multiples u*r*v whose shape matches p.

        Sound: True implies p vanishes in the quotient.  The framing words
        u, v are Laurent monomials, optionally extended by the contiguous
        non-invertible prefix/suffix needed to match p's words (at most
        `max_excess` extra letters); Laurent exponents range over the window
        observed in p and the relator, widened by 1 - min(off-diagonal).
        When `evaluate_at` is given, the elimination runs over Q after
        evaluating every coefficient at q = evaluate_at.
        """
        if p.is_zero():
            return True
        if not self.relators:
            return False
        targets = {}
        for word in p.terms:
            nw, ev = self.word_parts(word)
            if len(nw) > max_degree:
                raise WindowTooSmall(
                    f"word degree {len(nw)} exceeds the cap {max_degree}"
                )
            targets.setdefault(nw, set()).add(ev)

        n = self.cartan.n
        pad = 1 - min(self.cartan.min_offdiag(), 0)
        observed = [set() for _ in range(n)]
        for evset in targets.values():
            for ev in evset:
                for k in range(n):
                    observed[k].add(ev[k])
        core_parts = {}
        for rel in self.relators:
            cores = []
            for word in rel.poly.terms:
                nw, ev = self.word_parts(word)
                for k in range(n):
                    observed[k].add(ev[k])
                # frames are seeded only by the homogeneous-signature words;
                # the inhomogeneous remainder rides along inside each row
                if _noninv_signature(word, self.noninv_kinds) == rel.signature:
                    cores.append((nw, ev))
            core_parts[rel.label] = cores
        lo = [min(observed[k]) - pad for k in range(n)]
        hi = [max(observed[k]) + pad for k in range(n)]
        box = [()]
        for k in range(n):
            box = [t + (e,) for t in box for e in range(lo[k], hi[k] + 1)]
        box_size = len(box)

        target_vec = _as_vector(p, evaluate_at)
        span = RowSpan(label_key=word_key)
        rows_built = 0
        seen_jobs = set()
        bases_cache = {}
        frontier = dict(targets)

        def add_row(row, new_support):
            if row.is_zero():
                return
            for w in row.terms:
                nw, ev = self.word_parts(w)
                if nw not in targets or ev not in targets[nw]:
                    new_support.setdefault(nw, set()).add(ev)
            span.insert(_as_vector(row, evaluate_at))

        for _ in range(3):
            jobs = []
            for rel in self.relators:
                for t_nw, t_ev in core_parts[rel.label]:
                    for target_nw, evset in frontier.items():
                        for prefix, suffix in _subword_cuts(target_nw, t_nw, max_excess):
                            for ev in evset:
                                s = tuple(x - y for x, y in zip(ev, t_ev))
                                job = (rel.label, prefix, suffix, s)
                                if job not in seen_jobs:
                                    seen_jobs.add(job)
                                    jobs.append((rel, prefix, suffix, s))
            new_support = {}
            for rel, prefix, suffix, s in sorted(
                jobs, key=lambda j: (j[0].label, j[1], j[2], j[3])
            ):
                rows_built += box_size
                if rows_built > max_rows:
                    raise WindowTooSmall(
                        f"membership enumeration exceeded {max_rows} rows"
                    )
                if not prefix and not suffix:
                    # fast path: the free side is a segment shift of a
                    # precomputed interacting-side product
                    if rel.label not in bases_cache:
                        bases_cache[rel.label] = self._relator_bases(rel, lo, hi)
                    for pt, base in bases_cache[rel.label].items():
                        other = tuple(x - y for x, y in zip(s, pt))
                        if any(not (lo[k] <= other[k] <= hi[k]) for k in range(n)):
                            continue
                        add_row(self._shift_free(base, other), new_support)
                else:
                    for u_ev in box:
                        v_ev = tuple(x - y for x, y in zip(s, u_ev))
                        if any(not (lo[k] <= v_ev[k] <= hi[k]) for k in range(n)):
                            continue
                        u = NCPoly.monomial(
                            prefix + unit_word(_ev_dict(u_ev), self.laurent_kinds[0])
                        )
                        v = NCPoly.monomial(
                            unit_word(_ev_dict(v_ev), self.laurent_kinds[0]) + suffix
                        )
                        add_row(self.normal_form(u * rel.poly * v), new_support)
                if span.contains(target_vec):
                    return True
            frontier = {}
            for nw, evs in new_support.items():
                known = targets.setdefault(nw, set())
                fresh = evs - known
                if fresh:
                    frontier[nw] = fresh
                    known.update(fresh)
            if not frontier:
                break
        return span.contains(target_vec)

    def is_zero(self, p: NCPoly, *, evaluate_at=None, fuel=None) -> bool:
        """Certified zero test in the quotient algebra.

        True means p reduces to 0 or its normal form lies in the Serre
        ideal; False means no certificate was found within the caps.
        """
        nf = self.normal_form(p, fuel=fuel)
        if nf.is_zero():
            return True
        return self.serre_ideal_member(nf, evaluate_at=evaluate_at)


def _ev_dict(ev):
    return {k + 1: e for k, e in enumerate(ev) if e}


def _as_vector(poly, evaluate_at):
    if evaluate_at is None:
        return dict(poly.terms)
    return {w: c.eval_at(evaluate_at) for w, c in poly.terms.items()}


def _subword_cuts(target, piece, max_excess):
    """Contiguous occurrences of `piece` inside `target` with short remainder."""
    lt, lp = len(target), len(piece)
    if lp > lt or lt - lp > max_excess:
        return
    for start in range(lt - lp + 1):
        if target[start : start + lp] == piece:
            yield target[:start], target[start + lp :]


# -- relation instances (the defining lists, one polynomial per instance) ---


def defining_relations(sc: SymmetrizedCartan, flavor):
    """All defining relation instances as (label, LHS - RHS) pairs.

    Serre-type instances appear with the same labels used for relators.
    """
    n = sc.n
    out = []
    if flavor == "chevalley":
        K = lambda i: NCPoly.generator(Gen("K", i))
        Ki = lambda i: NCPoly.generator(Gen("Kinv", i))
        E = lambda i: NCPoly.generator(Gen("E", i))
        F = lambda i: NCPoly.generator(Gen("F", i))
        one = NCPoly.one()
        for i in range(1, n + 1):
            out.append((f"unit_K[{i}]a", K(i) * Ki(i) - one))
            out.append((f"unit_K[{i}]b", Ki(i) * K(i) - one))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append((f"commute_K[{i},{j}]", K(i) * K(j) - K(j) * K(i)))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                qa = sc.qi_pow(i, sc.a(i, j))
                out.append(
                    (f"conj_KE[{i},{j}]", K(i) * E(j) * Ki(i) - E(j).scaled(qa))
                )
                out.append(
                    (
                        f"conj_KF[{i},{j}]",
                        K(i) * F(j) * Ki(i) - F(j).scaled(qa.inv()),
                    )
                )
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                rel = E(i) * F(j) - F(j) * E(i)
                if i == j:
                    c = (sc.qi_pow(i, 1) - sc.qi_pow(i, -1)).inv()
                    rel = rel - (K(i) - Ki(i)).scaled(c)
                out.append((f"cross_EF[{i},{j}]", rel))
        for kind in ("E", "F"):
            tag = "serre_E" if kind == "E" else "serre_F"
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i != j:
                        out.append(
                            (f"{tag}[{i},{j}]", _serre_sum(sc, i, j, kind))
                        )
        return out
    if flavor == "equitable":
        X = lambda i: NCPoly.generator(Gen("X", i))
        Xi = lambda i: NCPoly.generator(Gen("Xinv", i))
        Y = lambda i: NCPoly.generator(Gen("Y", i))
        Z = lambda i: NCPoly.generator(Gen("Z", i))
        one = NCPoly.one()
        for i in range(1, n + 1):
            out.append((f"unit_X[{i}]a", X(i) * Xi(i) - one))
            out.append((f"unit_X[{i}]b", Xi(i) * X(i) - one))
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                out.append((f"commute_X[{i},{j}]", X(i) * X(j) - X(j) * X(i)))
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                qa = sc.qi_pow(i, sc.a(i, j))
                c = RF_ONE - qa
                out.append(
                    (
                        f"move_YX[{i},{j}]",
                        Y(i) * X(j) - (X(j) * Y(i)).scaled(qa) - (Xi(i) * X(j)).scaled(c),
                    )
                )
                out.append(
                    (
                        f"move_XZ[{i},{j}]",
                        X(i) * Z(j) - (Z(j) * X(i)).scaled(qa) - (X(i) * Xi(j)).scaled(c),
                    )
                )
        for i in range(1, n + 1):
            q2 = sc.qi_pow(i, 2)
            out.append(
                (
                    f"cross_ZY[{i},{i}]",
                    Z(i) * Y(i) - (Y(i) * Z(i)).scaled(q2) - one.scaled(RF_ONE - q2),
                )
            )
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                qa = sc.qi_pow(i, sc.a(i, j))
                out.append(
                    (
                        f"cross_ZY[{i},{j}]",
                        Z(i) * Y(j)
                        - (Y(j) * Z(i)).scaled(qa)
                        - (Xi(i) * Xi(j)).scaled(RF_ONE - qa),
                    )
                )
        for kind in ("Y", "Z"):
            tag = "serre_Y" if kind == "Y" else "serre_Z"
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    if i != j:
                        out.append((f"{tag}[{i},{j}]", _equitable_serre(sc, i, j, kind)))
        return out
    raise ValueError(f"unknown flavor {flavor!r}")


def _serre_sum(sc, i, j, kind):
    """sum_r (-1)^r binom(1-A_ij, r)_i  g_i^(1-A_ij-r) g_j g_i^r."""
    a = sc.a(i, j)
    m = 1 - a
    qi = sc.qindex(i)
    gi, gj = Gen(kind, i), Gen(kind, j)
    total = NCPoly.zero()
    for r in range(0, m + 1):
        coeff = q_binom(m, r, qi)
        if r % 2:
            coeff = -coeff
        word = (gi,) * (m - r) + (gj,) + (gi,) * r
        total = total + NCPoly.monomial(word, coeff)
    return total


def _equitable_serre(sc, i, j, kind):
    """Inhomogeneous Serre instance: the alternating sum minus its X-monomial
    right-hand side."""
    a = sc.a(i, j)
    lhs = _serre_sum(sc, i, j, kind)
    rhs_coeff = serre_rhs_product(a, sc.qindex(i))
    rhs_word = unit_word({i: a - 1, j: -1}, "X")
    return lhs - NCPoly.monomial(rhs_word, rhs_coeff)


# -- presentation builders ---------------------------------------------------


def _laurent_rules(sc, pos_kind):
    """Cancellation and index-sorting rules for the invertible block."""
    from .freealg import INVERSE_KIND, KIND_RANK

    neg_kind = INVERSE_KIND[pos_kind]
    n = sc.n
    one = NCPoly.one()
    rules = []
    for i in range(1, n + 1):
        a, b = Gen(pos_kind, i), Gen(neg_kind, i)
        rules.append(RewriteRule((a, b), one, f"cancel_{pos_kind}[{i}]a"))
        rules.append(RewriteRule((b, a), one, f"cancel_{pos_kind}[{i}]b"))
    letters = [Gen(k, i) for i in range(1, n + 1) for k in (pos_kind, neg_kind)]
    for x in letters:
        for y in letters:
            if (x.index, KIND_RANK[x.kind]) > (y.index, KIND_RANK[y.kind]) and x.index != y.index:
                rules.append(
                    RewriteRule((x, y), NCPoly.monomial((y, x)), f"sort_{pos_kind}[{x},{y}]")
                )
    return rules


def chevalley_presentation(sc: SymmetrizedCartan, fuel=DEFAULT_FUEL) -> PresentationSpec:
    """Rules oriented toward (F block)(E block)(K block); Serre relators for
    every ordered pair i != j."""
    n = sc.n
    rules = _laurent_rules(sc, "K")
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            qa = sc.qi_pow(i, sc.a(i, j))
            Kpos, Kneg = Gen("K", i), Gen("Kinv", i)
            Ej, Fj = Gen("E", j), Gen("F", j)
            rules.append(
                RewriteRule((Kpos, Ej), NCPoly.monomial((Ej, Kpos), qa), f"push_KE[{i},{j}]")
            )
            rules.append(
                RewriteRule(
                    (Kneg, Ej), NCPoly.monomial((Ej, Kneg), qa.inv()), f"push_KinvE[{i},{j}]"
                )
            )
            rules.append(
                RewriteRule(
                    (Kpos, Fj), NCPoly.monomial((Fj, Kpos), qa.inv()), f"push_KF[{i},{j}]"
                )
            )
            rules.append(
                RewriteRule((Kneg, Fj), NCPoly.monomial((Fj, Kneg), qa), f"push_KinvF[{i},{j}]")
            )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            Ei, Fj = Gen("E", i), Gen("F", j)
            rhs = NCPoly.monomial((Fj, Ei))
            if i == j:
                c = (sc.qi_pow(i, 1) - sc.qi_pow(i, -1)).inv()
                rhs = rhs + NCPoly.monomial((Gen("K", i),), c) - NCPoly.monomial(
                    (Gen("Kinv", i),), c
                )
            rules.append(RewriteRule((Ei, Fj), rhs, f"straighten_EF[{i},{j}]"))
    relators = []
    for kind, tag in (("E", "serre_E"), ("F", "serre_F")):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                poly = _serre_sum(sc, i, j, kind)
                sig = (((kind, i), 1 - sc.a(i, j)), ((kind, j), 1))
                relators.append(
                    SerreRelator(poly, tuple(sorted(sig)), f"chevalley-{kind}", f"{tag}[{i},{j}]")
                )
    return PresentationSpec("chevalley", sc, rules, relators, fuel=fuel)


def equitable_presentation(sc: SymmetrizedCartan, fuel=DEFAULT_FUEL) -> PresentationSpec:
    """Rules oriented toward (X block)(Y block)(Z block); inhomogeneous Serre
    relators for every ordered pair i != j."""
    n = sc.n
    rules = _laurent_rules(sc, "X")
    for yi in range(1, n + 1):
        for xj in range(1, n + 1):
            # scalar q_i^{A_ij} has i = Y index, j = X index
            qa = sc.qi_pow(yi, sc.a(yi, xj))
            Yi = Gen("Y", yi)
            rules.append(
                RewriteRule(
                    (Yi, Gen("X", xj)),
                    NCPoly.monomial((Gen("X", xj), Yi), qa)
                    + NCPoly.monomial(unit_word({yi: -1, xj: 1} if yi != xj else {}, "X"), RF_ONE - qa),
                    f"push_YX[{yi},{xj}]",
                )
            )
            qb = qa.inv()
            rules.append(
                RewriteRule(
                    (Yi, Gen("Xinv", xj)),
                    NCPoly.monomial((Gen("Xinv", xj), Yi), qb)
                    + NCPoly.monomial(unit_word({yi: -1, xj: -1} if yi != xj else {yi: -2}, "X"), RF_ONE - qb),
                    f"push_YXinv[{yi},{xj}]",
                )
            )
    for zj in range(1, n + 1):
        for xi in range(1, n + 1):
            # scalar q_i^{A_ij} has i = X index, j = Z index
            qa = sc.qi_pow(xi, sc.a(xi, zj))
            Zj = Gen("Z", zj)
            qb = qa.inv()
            rules.append(
                RewriteRule(
                    (Zj, Gen("X", xi)),
                    NCPoly.monomial((Gen("X", xi), Zj), qb)
                    + NCPoly.monomial(unit_word({xi: 1, zj: -1} if xi != zj else {}, "X"), RF_ONE - qb),
                    f"push_ZX[{zj},{xi}]",
                )
            )
            rules.append(
                RewriteRule(
                    (Zj, Gen("Xinv", xi)),
                    NCPoly.monomial((Gen("Xinv", xi), Zj), qa)
                    + NCPoly.monomial(unit_word({xi: -1, zj: -1} if xi != zj else {xi: -2}, "X"), RF_ONE - qa),
                    f"push_ZXinv[{zj},{xi}]",
                )
            )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            Zi, Yj = Gen("Z", i), Gen("Y", j)
            if i == j:
                q2 = sc.qi_pow(i, 2)
                rhs = NCPoly.monomial((Yj, Zi), q2) + NCPoly.scalar(RF_ONE - q2)
            else:
                qa = sc.qi_pow(i, sc.a(i, j))
                rhs = NCPoly.monomial((Yj, Zi), qa) + NCPoly.monomial(
                    unit_word({i: -1, j: -1}, "X"), RF_ONE - qa
                )
            rules.append(RewriteRule((Zi, Yj), rhs, f"straighten_ZY[{i},{j}]"))
    relators = []
    for kind, tag in (("Y", "serre_Y"), ("Z", "serre_Z")):
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i == j:
                    continue
                poly = _equitable_serre(sc, i, j, kind)
                sig = (((kind, i), 1 - sc.a(i, j)), ((kind, j), 1))
                relators.append(
                    SerreRelator(poly, tuple(sorted(sig)), f"equitable-{kind}", f"{tag}[{i},{j}]")
                )
    return PresentationSpec("equitable", sc, rules, relators, fuel=fuel)


def presentation(sc, flavor, fuel=DEFAULT_FUEL) -> PresentationSpec:
    if flavor == "chevalley":
        return chevalley_presentation(sc, fuel=fuel)
    if flavor == "equitable":
        return equitable_presentation(sc, fuel=fuel)
    raise ValueError(f"unknown flavor {flavor!r}")


# -- build-time rule soundness ------------------------------------------------


def _segment_nf_poly(pres, poly):
    out = NCPoly.zero()
    for w, c in poly.terms.items():
        out = out + NCPoly.monomial(pres.segment_normal(w), c)
    return out


def _proportional(a: NCPoly, b: NCPoly):
    """True when a = s*b for a nonzero scalar s."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    if len(a.terms) != len(b.terms):
        return False
    w0 = next(iter(a.terms))
    cb = b.terms.get(w0)
    if cb is None:
        return False
    s = a.terms[w0] / cb
    return a == b.scaled(s)


def _check_rules_sound(pres):
    """Verify each rule instantiates a defining relation.

    Pure-unit rules are checked against the commutative-group model of the
    invertible letters; interaction rules must be proportional, modulo unit
    segments, to a relation conjugated by at most one inverse letter on each
    side.
    """
    laurent = set(pres.laurent_kinds)
    relations = defining_relations(pres.cartan, pres.flavor)
    for rule in pres.rules:
        a, b = rule.lhs
        if a.kind in laurent and b.kind in laurent:
            lhs_exps = {}
            for g in rule.lhs:
                delta = 1 if g.kind == pres.laurent_kinds[0] else -1
                lhs_exps[g.index] = lhs_exps.get(g.index, 0) + delta
            lhs_exps = {i: e for i, e in lhs_exps.items() if e}
            terms = list(rule.rhs.terms.items())
            ok = (
                len(terms) == 1
                and terms[0][1] == RF_ONE
                and pres.segment_normal(terms[0][0]) == unit_word(lhs_exps, pres.laurent_kinds[0])
            )
            if not ok:
                raise AssertionError(f"unsound unit rule {rule.label}")
            continue
        residual = _segment_nf_poly(pres, NCPoly.monomial(rule.lhs) - rule.rhs)
        indices = {a.index, b.index}
        conjugators = [()] + [
            (Gen(kind, i),) for kind in pres.laurent_kinds for i in sorted(indices)
        ]
        found = False
        for label, rel in relations:
            rel_indices = {g.index for g in rel.letters()}
            if not rel_indices <= indices:
                continue
            for u in conjugators:
                for v in conjugators:
                    cand = _segment_nf_poly(
                        pres, NCPoly.monomial(u) * rel * NCPoly.monomial(v)
                    )
                    if _proportional(residual, cand):
                        found = True
                        break
                if found:
                    break
            if found:
                break
        if not found:
            raise AssertionError(f"rule {rule.label} does not match any defining relation")


# -- random evaluation points --------------------------------------------------


def random_eval_points(rng, count=3):
    """Nonzero rational sample points for evaluated-mode linear algebra."""
    points = []
    while len(points) < count:
        num = rng.randint(-999, 999)
        den = rng.randint(1, 999)
        if num == 0:
            continue
        points.append(Fraction(num, den))
    return points
