#!/usr/bin/env python3
"""
Orbit labels on the affine flag variety Fl and the affine Grassmannian Gr.

Only the combinatorial shadows are modeled: dimensions, closure orders, the
Whittaker support condition and the dimension estimates for semi-infinite
intersections and convolution fibers.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .cosets import FinitarySubset
from .errors import (FlavorMismatch, InternalInconsistency, NotDominant, NotInAWS, NotInWS, NotRestricted,
                     UsageError)
from .smith import pair, vec_add, vec_sub
from .steinberg import SteinbergCalculus
from .weyl_ext import ExtAffineElement

Coweight = Tuple[int, ...]

SPACES = ("Fl", "Gr")
FLAVORS = ("iwahori", "spherical", "whittaker")


@dataclass(frozen=True)
class OrbitLabel:
    space: str
    flavor: str
    element: Optional[ExtAffineElement] = None
    coweight: Optional[Coweight] = None
    parabolic: Optional[FinitarySubset] = None


@dataclass(frozen=True)
class GeometryReport:
    nonempty_possible: bool
    dimension_or_bound: Fraction
    strict: bool
    forced_nonempty: bool = False


@dataclass(frozen=True)
class SemiInfiniteStratum:
    nu: Coweight
    kappa: Coweight            # lambda + eta - nu, the weight met by Gr^mu
    bound: Fraction            # <rho, nu - lambda>
    slack: Fraction            # <rho, mu + kappa>, non-negative
    strict: bool               # stratum dimension stays below <rho, mu + eta>


class OrbitGeometry:
    def __init__(self, steinberg: SteinbergCalculus):
        self.steinberg = steinberg
        self.cosets = steinberg.cosets
        self.alcoves = steinberg.alcoves
        self.coxeter = steinberg.coxeter
        self.group = steinberg.group
        self.datum = steinberg.datum

    def _literal(self, w: ExtAffineElement) -> str:
        return self.group.element_literal(w)

    # Labels

    def make_label(self, space: str, flavor: str, element: Optional[ExtAffineElement] = None,
                   coweight: Optional[Sequence[int]] = None,
                   parabolic: Optional[FinitarySubset] = None) -> OrbitLabel:
        """Build a label and enforce the invariants of its flavor"""
        if space not in SPACES:
            raise UsageError(f"Unknown space '{space}', expected one of {', '.join(SPACES)}")
        if flavor not in FLAVORS:
            raise UsageError(f"Unknown flavor '{flavor}', expected one of {', '.join(FLAVORS)}")

        if flavor == "spherical":
            if coweight is None:
                raise UsageError("Spherical labels need a coweight")
            coweight = tuple(coweight)
            if not self.datum.is_dominant(coweight):
                raise NotDominant(f"Spherical label {list(coweight)} is not dominant")
            return OrbitLabel(space, flavor, coweight=coweight)

        if element is None:
            raise UsageError(f"{flavor} labels need an element")
        if flavor == "whittaker" and parabolic is None:
            raise UsageError("Whittaker labels need a finitary subset")
        if space == "Gr" and not self.cosets.is_in_WS(element):
            raise NotInWS(f"Gr label {self._literal(element)} is not minimal in its coset wW")
        return OrbitLabel(space, flavor, element=element,
                          parabolic=parabolic if flavor == "whittaker" else None)

    def orbit_dim(self, label: OrbitLabel) -> int:
        if label.flavor == "spherical":
            return pair(self.datum.two_rho, label.coweight)
        if label.flavor == "whittaker":
            return self.group.length(self.group.mul(label.parabolic.longest, label.element))
        return self.group.length(label.element)

    def closure_leq(self, a: OrbitLabel, b: OrbitLabel) -> bool:
        """Whether the orbit labelled a lies in the closure of the orbit labelled b"""
        if a.space != b.space or a.flavor != b.flavor or a.parabolic != b.parabolic:
            raise FlavorMismatch(
                f"Cannot compare a {a.space}/{a.flavor} label with a {b.space}/{b.flavor} label"
            )
        leq = self.coxeter.bruhat_leq
        group = self.group

        if a.flavor == "iwahori":
            return leq(a.element, b.element)

        if a.flavor == "spherical":
            w0 = group.longest_finite()
            by_maxima = leq(group.mul(w0, group.translation(a.coweight)),
                            group.mul(w0, group.translation(b.coweight)))
            by_coroots = self.datum.is_sum_of_positive_coroots(vec_sub(b.coweight, a.coweight))
            if by_maxima != by_coroots:
                raise InternalInconsistency(
                    f"Closure criteria disagree on {list(a.coweight)} and {list(b.coweight)}"
                )
            return by_maxima

        w_a = a.parabolic.longest
        if a.space == "Fl":
            return leq(group.mul(w_a, a.element), group.mul(w_a, b.element))
        if self.cosets.is_in_AWS(a.element, a.parabolic) and self.cosets.is_in_AWS(b.element, b.parabolic):
            return leq(a.element, b.element)
        finite = self.cosets.finite_subset()
        return leq(self.cosets.max_right_rep(group.mul(w_a, a.element), finite),
                   self.cosets.max_right_rep(group.mul(w_a, b.element), finite))

    def whittaker_supports_local_system(self, w: ExtAffineElement, subset: FinitarySubset) -> Tuple[bool, bool]:
        """(Gr condition: w in ^A W^S_ext, Fl condition: w minimal in W_A w)"""
        if not self.cosets.is_in_WS(w):
            raise NotInWS(f"{self._literal(w)} is not minimal in its coset wW")
        return self.cosets.is_in_AWS(w, subset), self.cosets.is_minimal_in_left_coset(w, subset)

    # Label arithmetic of the geometric constructions

    def pullback_label(self, w: ExtAffineElement) -> ExtAffineElement:
        """Fl label w w0 of the pullback of the Gr-orbit object labelled w"""
        if not self.cosets.is_in_WS(w):
            raise NotInWS(f"{self._literal(w)} is not minimal in its coset wW")
        return self.group.mul(w, self.group.longest_finite())

    def spherical_to_iwahori_label(self, lam: Sequence[int]) -> ExtAffineElement:
        """Iwahori label t_{w0(lambda)} of the spherical object IC^lambda"""
        lam = tuple(lam)
        if not self.datum.is_dominant(lam):
            raise NotDominant(f"{list(lam)} is not dominant")
        return self.group.translation(self.datum.longest().apply(lam))

    def iwahori_label_of_coweight(self, lam: Sequence[int]) -> ExtAffineElement:
        """Gr_{w^R_lambda}, the Iwahori orbit through the point L_lambda"""
        return self.cosets.w_R(tuple(lam))

    # Semi-infinite intersections

    def _rho(self, lam: Sequence[int]) -> Fraction:
        return self.datum.rho_pairing(lam)

    def mv_intersection_S(self, lam: Sequence[int], mu: Sequence[int]) -> GeometryReport:
        """Gr^lambda cap S_mu: empty unless lambda - dom(mu), mu - w0(lambda) are positive coroot sums"""
        lam, mu = self._dominant_checked(lam), tuple(mu)
        possible = self._mv_possible(lam, mu)
        return GeometryReport(possible, self._rho(vec_add(lam, mu)), strict=False)

    def mv_intersection_T(self, lam: Sequence[int], mu: Sequence[int]) -> GeometryReport:
        lam, mu = self._dominant_checked(lam), tuple(mu)
        possible = self._mv_possible(lam, mu)
        return GeometryReport(possible, self._rho(vec_sub(lam, mu)), strict=False)

    def _mv_possible(self, lam: Coweight, mu: Coweight) -> bool:
        datum = self.datum
        return datum.is_sum_of_positive_coroots(vec_sub(lam, datum.dominant(mu))) and \
            datum.is_sum_of_positive_coroots(vec_sub(mu, datum.longest().apply(lam)))

    def _dominant_checked(self, lam: Sequence[int]) -> Coweight:
        lam = tuple(lam)
        if not self.datum.is_dominant(lam):
            raise NotDominant(f"{list(lam)} is not dominant")
        return lam

    def casselman_shalika_bound(self, mu: Sequence[int]) -> GeometryReport:
        """S_mu cap T_0: possible iff mu is a positive coroot sum, dimension at most <rho, mu>"""
        mu = tuple(mu)
        possible = self.datum.is_sum_of_positive_coroots(mu)
        return GeometryReport(possible, self._rho(mu), strict=any(mu))

    def iwahori_semiinf_bound(self, y: ExtAffineElement, nu: Sequence[int]) -> GeometryReport:
        """(w S_nu) cap Gr_y for y = w t_lambda in W^S_ext"""
        if not self.cosets.is_in_WS(y):
            raise NotInWS(f"{self._literal(y)} is not minimal in its coset wW")
        nu = tuple(nu)
        lam = y.trans
        datum = self.datum
        possible = datum.is_sum_of_positive_coroots(
            vec_sub(datum.longest().apply(lam), datum.dominant(nu)))
        strict = self.alcoves.is_restricted(y) and nu != lam
        return GeometryReport(possible, self._rho(vec_sub(nu, lam)), strict)

    def semiinf_strata(self, y: ExtAffineElement, mu: Sequence[int], eta: Sequence[int],
                       modulo_radical: bool = False) -> List[SemiInfiniteStratum]:
        """Strata of the convolution fiber over y L_eta, indexed by the semi-infinite orbit nu.

        With modulo_radical the coroot-sum test on w0(lambda) - dom(nu) ignores
        central translations, so the fiber may sit over y L_eta shifted by Y_0.
        """
        if not self.cosets.is_in_WS(y):
            raise NotInWS(f"{self._literal(y)} is not minimal in its coset wW")
        mu, eta = self._dominant_checked(mu), tuple(eta)
        datum = self.datum
        lam = y.trans
        w0_lam = datum.longest().apply(lam)
        positive = datum.is_sum_of_positive_coroots_mod_radical if modulo_radical \
            else datum.is_sum_of_positive_coroots
        restricted = self.alcoves.is_restricted(y)
        strata = []
        for kappa in datum.saturated_set(mu):
            nu = vec_sub(vec_add(lam, eta), kappa)
            if not positive(vec_sub(w0_lam, datum.dominant(nu))):
                continue
            slack = self._rho(vec_add(mu, kappa))
            strata.append(SemiInfiniteStratum(
                nu=nu,
                kappa=kappa,
                bound=self._rho(vec_sub(nu, lam)),
                slack=slack,
                strict=slack > 0 or (restricted and nu != lam),
            ))
        return strata

    def conv_fiber_bound(self, y: ExtAffineElement, mu: Sequence[int], eta: Sequence[int],
                         modulo_radical: bool = False) -> GeometryReport:
        """dim of the convolution fiber over y L_eta is at most <rho, mu + eta>"""
        mu, eta = self._dominant_checked(mu), tuple(eta)
        strata = self.semiinf_strata(y, mu, eta, modulo_radical)
        w0_mu = self.datum.longest().apply(mu)
        strict = self.alcoves.is_restricted(y) and eta != w0_mu
        return GeometryReport(
            nonempty_possible=bool(strata),
            dimension_or_bound=self._rho(vec_add(mu, eta)),
            strict=strict,
            forced_nonempty=eta == w0_mu,
        )

    def whittaker_serre_obstruction(self, y: ExtAffineElement, subset: FinitarySubset,
                                    mu: Sequence[int]) -> GeometryReport:
        """Fiber estimate after translating by w_A: z = w_A y, eta = 0 up to Y_0"""
        if not self.alcoves.is_restricted(y):
            raise NotRestricted(f"{self._literal(y)} is not restricted")
        if not self.cosets.is_in_AWS(y, subset):
            raise NotInAWS(f"{self._literal(y)} is not in ^A W^S for A = {{{self.cosets.subset_label(subset)}}}")
        mu = self._dominant_checked(mu)
        z = self.group.mul(subset.longest, y)
        zero = tuple(0 for _ in range(self.datum.rank))
        report = self.conv_fiber_bound(z, mu, zero, modulo_radical=True)
        return GeometryReport(
            nonempty_possible=report.nonempty_possible,
            dimension_or_bound=report.dimension_or_bound,
            strict=self.alcoves.is_restricted(z) and any(mu),
            forced_nonempty=report.forced_nonempty,
        )

