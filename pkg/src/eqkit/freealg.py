"""Free noncommutative polynomials over Q(q) on an indexed generator alphabet,
tensor powers up to arity 3, and substitution (anti)homomorphisms.

Words are tuples of generator letters; a polynomial is a finite map from
words to nonzero coefficients, the empty word carrying the scalar part.
Inverse letters (Kinv, Xinv) are ordinary letters here: merging them with
their partners is the rewrite engine's job, which keeps this algebra
genuinely free.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import ArityMismatch, UnassignedSymbol
from .scalars import RF_ONE, RF_ZERO, RationalFunction, rf_const


class Gen(NamedTuple):
    """One generator letter: a kind tag and a 1-based node index."""

    kind: str
    index: int

    def __str__(self):
        return render_letter(self, 1)


KINDS = ("F", "E", "K", "Kinv", "X", "Xinv", "Y", "Z")
KIND_RANK = {k: r for r, k in enumerate(KINDS)}
INVERSE_KIND = {"K": "Kinv", "Kinv": "K", "X": "Xinv", "Xinv": "X"}

CHEVALLEY_KINDS = ("E", "F", "K", "Kinv")
EQUITABLE_KINDS = ("X", "Xinv", "Y", "Z")


def gen(kind, index) -> Gen:
    if kind not in KIND_RANK:
        raise ValueError(f"unknown generator kind {kind!r}")
    if index < 1:
        raise ValueError(f"generator index must be >= 1, got {index}")
    return Gen(kind, index)


def word_key(word):
    """Sort key: length first, then (kind rank, index) per letter."""
    return (len(word), tuple((KIND_RANK[g.kind], g.index) for g in word))


def alphabet(flavor, n):
    """All letters of one presentation flavor for matrix order n."""
    kinds = CHEVALLEY_KINDS if flavor == "chevalley" else EQUITABLE_KINDS
    return tuple(Gen(k, i) for k in kinds for i in range(1, n + 1))


def unit_word(exps, pos_kind):
    """Canonical invertible-block word for exponent vector {index: exp}.

    Indices ascend; positive exponents use pos_kind, negative ones its
    inverse kind.
    """
    neg_kind = INVERSE_KIND[pos_kind]
    letters = []
    for i in sorted(exps):
        e = exps[i]
        if e > 0:
            letters.extend([Gen(pos_kind, i)] * e)
        elif e < 0:
            letters.extend([Gen(neg_kind, i)] * (-e))
    return tuple(letters)


class NCPoly:
    """Finite Q(q)-linear combination of words; immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms:
            data = {w: c for w, c in terms.items() if c}
        else:
            data = {}
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("NCPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return _NC_ZERO

    @classmethod
    def one(cls):
        return _NC_ONE

    @classmethod
    def scalar(cls, c):
        if isinstance(c, (int,)) or not isinstance(c, RationalFunction):
            c = rf_const(c) if not isinstance(c, RationalFunction) else c
        return cls({(): c})

    @classmethod
    def monomial(cls, word, coeff=RF_ONE):
        return cls({tuple(word): coeff})

    @classmethod
    def generator(cls, g):
        return cls({(g,): RF_ONE})

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def degree(self):
        """Maximum word length (0 for scalars and for the zero polynomial)."""
        return max((len(w) for w in self.terms), default=0)

    def letters(self):
        out = set()
        for w in self.terms:
            out.update(w)
        return out

    def scalar_part(self):
        return self.terms.get((), RF_ZERO)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: word_key(item[0]))

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_poly(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, RF_ZERO) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce_poly(other))

    def __rsub__(self, other):
        return _coerce_poly(other) + (-self)

    def scaled(self, c):
        if not c:
            return _NC_ZERO
        return NCPoly({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, RationalFunction)):
            return self.scaled(other if isinstance(other, RationalFunction) else rf_const(other))
        other = _coerce_poly(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w, RF_ZERO) + c1 * c2
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return NCPoly(out)

    def __rmul__(self, other):
        if isinstance(other, (int, RationalFunction)):
            return self.scaled(other if isinstance(other, RationalFunction) else rf_const(other))
        return _coerce_poly(other) * self

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a noncommutative polynomial")
        out = _NC_ONE
        for _ in range(k):
            out = out * self
        return out

    # -- rendering ------------------------------------------------------

    def render(self):
        return render_poly(self)

    __str__ = render

    def __repr__(self):
        return f"<NCPoly {self.render()}>"


_NC_ZERO = NCPoly()
_NC_ONE = NCPoly({(): RF_ONE})


def _coerce_poly(x):
    if isinstance(x, NCPoly):
        return x
    if isinstance(x, (int, RationalFunction)):
        return NCPoly.scalar(x)
    raise TypeError(f"cannot coerce {x!r} into the free algebra")


class TensorPoly:
    """Q(q)-linear combination of k-tuples of words, k in {1, 2, 3}."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity, terms=None):
        if arity not in (1, 2, 3):
            raise ArityMismatch(f"tensor arity must be 1, 2, or 3, got {arity}")
        if terms:
            data = {t: c for t, c in terms.items() if c}
        else:
            data = {}
        object.__setattr__(self, "arity", arity)
        object.__setattr__(self, "terms", data)

    def __setattr__(self, name, value):
        raise AttributeError("TensorPoly is immutable")

    @classmethod
    def unit(cls, arity):
        return cls(arity, {((),) * arity: RF_ONE})

    @classmethod
    def tensor(cls, *factors):
        """Outer product of NCPoly factors."""
        arity = len(factors)
        out = {((),) * arity: RF_ONE}
        cur = cls(arity, out)
        for pos, f in enumerate(factors):
            nxt = {}
            for t, c in cur.terms.items():
                for w, cf in f.terms.items():
                    key = t[:pos] + (w,) + t[pos + 1 :]
                    s = nxt.get(key, RF_ZERO) + c * cf
                    if s:
                        nxt[key] = s
                    else:
                        nxt.pop(key, None)
            cur = cls(arity, nxt)
        return cur

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, TensorPoly)
            and self.arity == other.arity
            and self.terms == other.terms
        )

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            raise TypeError("can only add TensorPoly to TensorPoly")
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t, RF_ZERO) + c
            if s:
                out[t] = s
            else:
                out.pop(t, None)
        return TensorPoly(self.arity, out)

    def __neg__(self):
        return TensorPoly(self.arity, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        if not c:
            return TensorPoly(self.arity)
        return TensorPoly(self.arity, {t: v * c for t, v in self.terms.items()})

    def __mul__(self, other):
        """Componentwise concatenation product."""
        if isinstance(other, (int, RationalFunction)):
            return self.scaled(other if isinstance(other, RationalFunction) else rf_const(other))
        if not isinstance(other, TensorPoly):
            raise TypeError("can only multiply TensorPoly by TensorPoly or scalar")
        if self.arity != other.arity:
            raise ArityMismatch(f"arity {self.arity} vs {other.arity}")
        out = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                t = tuple(a + b for a, b in zip(t1, t2))
                s = out.get(t, RF_ZERO) + c1 * c2
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)
        return TensorPoly(self.arity, out)

    def __rmul__(self, other):
        if isinstance(other, (int, RationalFunction)):
            return self.scaled(other if isinstance(other, RationalFunction) else rf_const(other))
        return NotImplemented

    def __repr__(self):
        parts = []
        for t, c in sorted(self.terms.items(), key=lambda item: tuple(word_key(w) for w in item[0])):
            legs = " (x) ".join(render_word(w) or "1" for w in t)
            parts.append(f"{c.render()}*[{legs}]")
        return "<Tensor " + (" + ".join(parts) if parts else "0") + ">"


def tensor_mul(a: TensorPoly, b: TensorPoly) -> TensorPoly:
    return a * b


# -- substitution maps ----------------------------------------------------


def apply_hom(assign, p: NCPoly, unit=None):
    """Extend a generator assignment to an algebra homomorphism.

    Words map to ordered products of images; scalars are fixed.  The images
    may be NCPoly or TensorPoly values (pass the matching `unit`).
    """
    return _extend(assign, p, unit, reverse=False)


def apply_antihom(assign, p: NCPoly, unit=None):
    """Extend an assignment to an antihomomorphism (products reversed)."""
    return _extend(assign, p, unit, reverse=True)


def _extend(assign, p, unit, reverse):
    one = unit if unit is not None else _NC_ONE
    total = one.scaled(RF_ZERO)
    for word, coeff in p.terms.items():
        image = one
        letters = reversed(word) if reverse else word
        for g in letters:
            img = assign.get(g)
            if img is None:
                raise UnassignedSymbol(f"no image for generator {render_letter(g, 1)}")
            image = image * img
        total = total + image.scaled(coeff)
    return total


# -- rendering -------------------------------------------------------------


def render_letter(g, count):
    """One letter with a run-length exponent, e.g. E1^2 or K1^-3."""
    inverse = g.kind in ("Kinv", "Xinv")
    base_kind = INVERSE_KIND[g.kind] if inverse else g.kind
    name = f"{base_kind}{g.index}"
    if inverse:
        return f"{name}^-{count}" if count != 1 else f"{name}^-1"
    return f"{name}^{count}" if count != 1 else name


def render_word(word):
    """Canonical word rendering with collapsed runs; empty word gives ''."""
    parts = []
    k = 0
    while k < len(word):
        g = word[k]
        run = 1
        while k + run < len(word) and word[k + run] == g:
            run += 1
        parts.append(render_letter(g, run))
        k += run
    return "*".join(parts)


def render_poly(p: NCPoly):
    if not p.terms:
        return "0"
    pieces = []
    for word, coeff in p.sorted_terms():
        negative = coeff.is_negative()
        mag = -coeff if negative else coeff
        wstr = render_word(word)
        if not wstr:
            body = mag.render_factor()
        elif mag.is_one():
            body = wstr
        else:
            body = f"{mag.render_factor()}*{wstr}"
        if not pieces:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)
