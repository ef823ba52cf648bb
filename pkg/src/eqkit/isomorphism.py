"""The mutually inverse maps between the two presentations, the reversal
(anti)automorphisms used to certify them, and the end-to-end driver.

The driver certifies, for one concrete symmetrized Cartan matrix, that

* the forward images of the equitable generators satisfy every equitable
  relation inside the Chevalley presentation,
* the inverse images of the Chevalley generators satisfy every Chevalley
  relation inside the equitable presentation,
* the two maps are mutually inverse on generators,
* the Chevalley reversal map fixes the image of X and swaps the images of
  Y and Z, and the equitable reversal map sends each verified Serre-type
  reduction to the opposite-family one,
* both reversal maps respect every defining relation (well-definedness).

Each fact is decided by the certified zero test of the target presentation.
"""

from __future__ import annotations

import time

from .cartan import SymmetrizedCartan
from .errors import WindowTooSmall
from .freealg import Gen, NCPoly, apply_antihom, apply_hom
from .presentation import (
    DEFAULT_FUEL,
    PresentationSpec,
    chevalley_presentation,
    defining_relations,
    equitable_presentation,
)
from .qcombo import q_binom
from .report import FAIL, INCONCLUSIVE, PASS, VerificationReport


# -- generator assignments ---------------------------------------------------


def phi_assignment(sc: SymmetrizedCartan) -> dict:
    """Equitable letters to Chevalley polynomials (the forward map)."""
    out = {}
    for i in range(1, sc.n + 1):
        qi = sc.qi_pow(i, 1)
        spread = qi - qi.inv()
        K = NCPoly.generator(Gen("K", i))
        Kinv = NCPoly.generator(Gen("Kinv", i))
        E = NCPoly.generator(Gen("E", i))
        F = NCPoly.generator(Gen("F", i))
        out[Gen("X", i)] = K
        out[Gen("Xinv", i)] = Kinv
        out[Gen("Y", i)] = Kinv + F.scaled(spread)
        out[Gen("Z", i)] = Kinv - (Kinv * E).scaled(qi * spread)
    return out


def psi_assignment(sc: SymmetrizedCartan) -> dict:
    """Chevalley letters to equitable polynomials (the inverse map)."""
    out = {}
    for i in range(1, sc.n + 1):
        qi = sc.qi_pow(i, 1)
        spread = qi - qi.inv()
        X = NCPoly.generator(Gen("X", i))
        Xinv = NCPoly.generator(Gen("Xinv", i))
        Y = NCPoly.generator(Gen("Y", i))
        Z = NCPoly.generator(Gen("Z", i))
        out[Gen("E", i)] = (NCPoly.one() - X * Z).scaled((qi * spread).inv())
        out[Gen("F", i)] = (Y - Xinv).scaled(spread.inv())
        out[Gen("K", i)] = X
        out[Gen("Kinv", i)] = Xinv
    return out


def phi(sc: SymmetrizedCartan, p: NCPoly, pres: PresentationSpec = None) -> NCPoly:
    """Forward image over the Chevalley alphabet, reduced to normal form."""
    pres = pres or chevalley_presentation(sc)
    return pres.normal_form(apply_hom(phi_assignment(sc), p))


def psi(sc: SymmetrizedCartan, p: NCPoly, pres: PresentationSpec = None) -> NCPoly:
    """Inverse image over the equitable alphabet, reduced to normal form."""
    pres = pres or equitable_presentation(sc)
    return pres.normal_form(apply_hom(psi_assignment(sc), p))


def _swap_EF_assignment(sc):
    out = {}
    for i in range(1, sc.n + 1):
        out[Gen("K", i)] = NCPoly.generator(Gen("K", i))
        out[Gen("Kinv", i)] = NCPoly.generator(Gen("Kinv", i))
        out[Gen("E", i)] = NCPoly.generator(Gen("F", i))
        out[Gen("F", i)] = NCPoly.generator(Gen("E", i))
    return out


def _twist_assignment(sc):
    out = {}
    for i in range(1, sc.n + 1):
        qi = sc.qi_pow(i, 1)
        out[Gen("K", i)] = NCPoly.generator(Gen("K", i))
        out[Gen("Kinv", i)] = NCPoly.generator(Gen("Kinv", i))
        out[Gen("E", i)] = NCPoly.monomial((Gen("Kinv", i), Gen("E", i)), -qi)
        out[Gen("F", i)] = NCPoly.monomial((Gen("F", i), Gen("K", i)), -qi.inv())
    return out


def mu_chevalley(sc: SymmetrizedCartan, p: NCPoly, pres: PresentationSpec = None) -> NCPoly:
    """The Chevalley reversal map: the E/F-swapping antiautomorphism followed
    by the sign-twisting automorphism; an antiautomorphism overall."""
    pres = pres or chevalley_presentation(sc)
    step = apply_antihom(_swap_EF_assignment(sc), p)
    return pres.normal_form(apply_hom(_twist_assignment(sc), step))


def sigma_equitable(sc: SymmetrizedCartan, p: NCPoly, pres: PresentationSpec = None) -> NCPoly:
    """The equitable reversal map: fixes X, swaps Y and Z, reverses products."""
    pres = pres or equitable_presentation(sc)
    assign = {}
    for i in range(1, sc.n + 1):
        assign[Gen("X", i)] = NCPoly.generator(Gen("X", i))
        assign[Gen("Xinv", i)] = NCPoly.generator(Gen("Xinv", i))
        assign[Gen("Y", i)] = NCPoly.generator(Gen("Z", i))
        assign[Gen("Z", i)] = NCPoly.generator(Gen("Y", i))
    return pres.normal_form(apply_antihom(assign, p))


# -- the certification driver --------------------------------------------------


def matrix_id(sc: SymmetrizedCartan) -> str:
    rows = ";".join(",".join(str(x) for x in row) for row in sc.gcm.entries)
    return f"[{rows}] d=({','.join(str(x) for x in sc.d)})"


def _serre_core(sc, i, j, kind):
    """Alternating Serre-shaped sum built from base polynomials 1 - X_k Z_k
    (kind 'E') or Y_k - Xinv_k (kind 'F'), before scalar prefactors."""
    if kind == "E":
        base = lambda k: NCPoly.one() - NCPoly.monomial((Gen("X", k), Gen("Z", k)))
    else:
        base = lambda k: NCPoly.generator(Gen("Y", k)) - NCPoly.generator(Gen("Xinv", k))
    a = sc.a(i, j)
    m = 1 - a
    qi = sc.qindex(i)
    bi, bj = base(i), base(j)
    total = NCPoly.zero()
    for r in range(m + 1):
        coeff = q_binom(m, r, qi)
        if r % 2:
            coeff = -coeff
        total = total + (bi ** (m - r) * bj * bi**r).scaled(coeff)
    return total


def verify_presentation_iso(sc: SymmetrizedCartan, fuel=DEFAULT_FUEL) -> VerificationReport:
    """Run every certification check for one symmetrized Cartan matrix."""
    report = VerificationReport(matrix_id(sc))
    pc = chevalley_presentation(sc, fuel=fuel)
    pe = equitable_presentation(sc, fuel=fuel)
    phi_a = phi_assignment(sc)
    psi_a = psi_assignment(sc)
    n = sc.n

    def run(name, pres, poly_fn):
        t0 = time.perf_counter()
        try:
            residual = pres.normal_form(poly_fn())
            if residual.is_zero() or pres.serre_ideal_member(residual):
                report.add(name, PASS, seconds=time.perf_counter() - t0)
            else:
                report.add(name, FAIL, witness=residual, seconds=time.perf_counter() - t0)
        except WindowTooSmall as exc:
            report.add(name, INCONCLUSIVE, witness=str(exc), seconds=time.perf_counter() - t0)

    # (a) forward images satisfy the equitable relations in the Chevalley algebra
    for label, rel in defining_relations(sc, "equitable"):
        run(f"forward.{label}", pc, lambda rel=rel: apply_hom(phi_a, rel))
    # (b) inverse images satisfy the Chevalley relations in the equitable algebra
    for label, rel in defining_relations(sc, "chevalley"):
        run(f"inverse.{label}", pe, lambda rel=rel: apply_hom(psi_a, rel))
    # (c) the maps are mutually inverse on generators
    for g, img in psi_a.items():
        run(
            f"roundtrip.chevalley.{g.kind}[{g.index}]",
            pc,
            lambda g=g, img=img: apply_hom(phi_a, img) - NCPoly.generator(g),
        )
    for g, img in phi_a.items():
        run(
            f"roundtrip.equitable.{g.kind}[{g.index}]",
            pe,
            lambda g=g, img=img: apply_hom(psi_a, img) - NCPoly.generator(g),
        )
    # (d) the Chevalley reversal map fixes the X image and swaps the Y/Z images
    for i in range(1, n + 1):
        xh = phi_a[Gen("X", i)]
        yh = phi_a[Gen("Y", i)]
        zh = phi_a[Gen("Z", i)]
        run(
            f"reversal.fixes_X[{i}]",
            pc,
            lambda xh=xh: mu_chevalley(sc, xh, pc) - xh,
        )
        run(
            f"reversal.Y_to_Z[{i}]",
            pc,
            lambda yh=yh, zh=zh: mu_chevalley(sc, yh, pc) - zh,
        )
        run(
            f"reversal.Z_to_Y[{i}]",
            pc,
            lambda yh=yh, zh=zh: mu_chevalley(sc, zh, pc) - yh,
        )
    # (e) the reversal route: sigma carries the verified E-type Serre core to
    # the F-type one
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            core = _serre_core(sc, i, j, "E")
            run(f"route.serre_core_E[{i},{j}]", pe, lambda core=core: core)
            run(
                f"route.serre_core_F[{i},{j}]",
                pe,
                lambda core=core: sigma_equitable(sc, core, pe),
            )
    # well-definedness: each reversal map respects every defining relation
    for label, rel in defining_relations(sc, "chevalley"):
        run(
            f"reversal.respects.{label}",
            pc,
            lambda rel=rel: mu_chevalley(sc, rel, pc),
        )
    for label, rel in defining_relations(sc, "equitable"):
        run(
            f"route.respects.{label}",
            pe,
            lambda rel=rel: sigma_equitable(sc, rel, pe),
        )
    return report
