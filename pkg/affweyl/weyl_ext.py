#!/usr/bin/env python3
"""
Finite and extended affine Weyl group elements.

An element of W_ext = W x| Y is stored as w t_lambda, a finite Weyl element (its
integer matrix on Y) together with a translation. Multiplication follows
(w t_l)(w' t_l') = ww' t_{w'^-1(l) + l'} and the length is the
Iwahori-Matsumoto formula.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Dict, Sequence, Tuple

from .smith import IntMatrix, mat_mul, mat_vec, pair, vec_add, vec_neg

if TYPE_CHECKING:
    from .root_datum import RootDatum

Coweight = Tuple[int, ...]
RationalPoint = Tuple[Fraction, ...]


@dataclass(frozen=True)
class FiniteWeylElement:
    matrix: IntMatrix

    def compose(self, other: "FiniteWeylElement") -> "FiniteWeylElement":
        """self after other"""
        return FiniteWeylElement(mat_mul(self.matrix, other.matrix))

    def apply(self, y: Sequence) -> tuple:
        return mat_vec(self.matrix, y)


@dataclass(frozen=True)
class ExtAffineElement:
    finite: FiniteWeylElement
    trans: Coweight


class ExtAffineWeylGroup:
    """Group law, actions and length on W_ext for one root datum"""

    def __init__(self, datum: "RootDatum"):
        self.datum = datum
        self.rank = datum.rank
        self._zero = tuple(0 for _ in range(datum.rank))
        # positivity of v(beta) for every finite v and positive root beta
        self._signs: Dict[FiniteWeylElement, Tuple[bool, ...]] = {
            v: tuple(datum.is_positive_root(datum.act_on_root(v, beta)) for beta in datum.positive_roots)
            for v in datum.weyl_group()
        }

    # Constructors

    def identity(self) -> ExtAffineElement:
        return ExtAffineElement(self.datum.identity_finite(), self._zero)

    def translation(self, lam: Sequence[int]) -> ExtAffineElement:
        if len(lam) != self.rank:
            raise ValueError(f"Coweight {list(lam)} has length {len(lam)}, expected {self.rank}")
        return ExtAffineElement(self.datum.identity_finite(), tuple(lam))

    def finite(self, v: FiniteWeylElement) -> ExtAffineElement:
        return ExtAffineElement(v, self._zero)

    def from_simple(self, i: int) -> ExtAffineElement:
        """Finite simple reflection s_{i+1} as an element of W_ext"""
        return self.finite(self.datum.simple_reflection(i))

    def longest_finite(self) -> ExtAffineElement:
        return self.finite(self.datum.longest())

    def make(self, v: FiniteWeylElement, lam: Sequence[int]) -> ExtAffineElement:
        return ExtAffineElement(v, tuple(lam))

    # Group law

    def mul(self, a: ExtAffineElement, b: ExtAffineElement) -> ExtAffineElement:
        b_inverse = self.datum.finite_inverse(b.finite)
        return ExtAffineElement(
            a.finite.compose(b.finite),
            vec_add(b_inverse.apply(a.trans), b.trans),
        )

    def mul_all(self, *elements: ExtAffineElement) -> ExtAffineElement:
        result = self.identity()
        for element in elements:
            result = self.mul(result, element)
        return result

    def inv(self, a: ExtAffineElement) -> ExtAffineElement:
        return ExtAffineElement(
            self.datum.finite_inverse(a.finite),
            vec_neg(a.finite.apply(a.trans)),
        )

    def conjugate(self, a: ExtAffineElement, b: ExtAffineElement) -> ExtAffineElement:
        """a b a^-1"""
        return self.mul(self.mul(a, b), self.inv(a))

    # Length

    def length(self, a: ExtAffineElement) -> int:
        total = 0
        for beta, positive in zip(self.datum.positive_roots, self._signs[a.finite]):
            p = pair(beta, a.trans)
            total += abs(p) if positive else abs(1 + p)
        return total

    def finite_length(self, v: FiniteWeylElement) -> int:
        return self.datum.finite_length(v)

    def sends_positive(self, v: FiniteWeylElement, k: int) -> bool:
        """Whether v maps the k-th positive root to a positive root"""
        return self._signs[v][k]

    # Actions

    def act_on_coweight(self, a: ExtAffineElement, lam: Sequence[int]) -> Coweight:
        """(w t_mu) . lambda = w(lambda + mu), the affine action restricted to Y"""
        return a.finite.apply(vec_add(lam, a.trans))

    def act_on_point(self, a: ExtAffineElement, p: Sequence[Fraction]) -> RationalPoint:
        return tuple(Fraction(x) for x in a.finite.apply(vec_add(p, a.trans)))

    def is_in_affine_subgroup(self, a: ExtAffineElement) -> bool:
        return self.datum.in_coroot_lattice(a.trans)

    def is_translation(self, a: ExtAffineElement) -> bool:
        return a.finite == self.datum.identity_finite()

    # Text forms

    def finite_word_text(self, v: FiniteWeylElement) -> str:
        word = self.datum.finite_word(v)
        return "*".join(f"s{i + 1}" for i in word) if word else "e"

    def format_element(self, a: ExtAffineElement) -> str:
        """Canonical form (<reduced word of finite part>; [lambda])"""
        coords = ", ".join(str(x) for x in a.trans)
        return f"({self.finite_word_text(a.finite)}; [{coords}])"

    def element_literal(self, a: ExtAffineElement) -> str:
        """Literal accepted by the element grammar, e.g. s1*s2*t[0,1]"""
        factors = []
        word = self.datum.finite_word(a.finite)
        factors.extend(f"s{i + 1}" for i in word)
        if any(a.trans):
            factors.append("t[" + ",".join(str(x) for x in a.trans) + "]")
        return "*".join(factors) if factors else "e"
