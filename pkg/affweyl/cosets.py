#!/usr/bin/env python3
"""
Finitary parabolic subgroups and coset representatives.

Covers minimal and maximal representatives of W_A w, w W_A and W_A w W_B,
the sets W^S_ext and ^A W^S_ext, the elements w^L_lambda / w^R_lambda and the
Douglass comparison of representatives.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Tuple

from .coxeter import CoxeterSystem
from .errors import NotDominant, NotFinitary, NotMinimalInCoset, ParabolicTooLarge
from .smith import vec_neg
from .weyl_ext import ExtAffineElement

Coweight = Tuple[int, ...]


@dataclass(frozen=True)
class FinitarySubset:
    generators: FrozenSet[int]
    longest: ExtAffineElement
    order: int
    elements: Tuple[ExtAffineElement, ...] = field(default=(), compare=False, repr=False)


@dataclass(frozen=True)
class DoubleMinConditions:
    """The five equivalent characterizations of ^A W^S_ext"""
    minimal_for_every_finite_shift: bool
    minimal_after_longest: bool
    parabolic_shifts_in_ws: bool
    longest_shift_in_ws: bool
    length_identity: bool

    def as_tuple(self) -> Tuple[bool, ...]:
        return (self.minimal_for_every_finite_shift, self.minimal_after_longest,
                self.parabolic_shifts_in_ws, self.longest_shift_in_ws, self.length_identity)

    def agree(self) -> bool:
        return len(set(self.as_tuple())) == 1


class CosetCalculus:
    def __init__(self, coxeter: CoxeterSystem, parabolic_cap: int = 1_000_000):
        self.coxeter = coxeter
        self.group = coxeter.group
        self.datum = coxeter.datum
        self.parabolic_cap = parabolic_cap
        self._finitary: Dict[FrozenSet[int], FinitarySubset] = {}

    # Finitary subsets

    def is_finitary(self, indices: Iterable[int]) -> bool:
        """A omits at least one S_aff generator of every Dynkin component"""
        chosen = frozenset(indices)
        return all(not self.coxeter.component_generators(c) <= chosen
                   for c in range(len(self.datum.components)))

    def make_finitary(self, indices: Iterable[int]) -> FinitarySubset:
        chosen = frozenset(indices)
        if chosen in self._finitary:
            return self._finitary[chosen]

        for index in chosen:
            if not 0 <= index < len(self.coxeter.generators):
                raise NotFinitary(f"No generator with index {index}")
        if not self.is_finitary(chosen):
            labels = ",".join(self.coxeter.label_of(i) for i in sorted(chosen))
            raise NotFinitary(f"{{{labels}}} contains a whole affine Dynkin component")

        elements = self._enumerate(chosen)
        longest = max(elements, key=self.group.length)
        subset = FinitarySubset(
            generators=chosen,
            longest=longest,
            order=len(elements),
            elements=tuple(elements),
        )
        self._finitary[chosen] = subset
        return subset

    def _enumerate(self, chosen: FrozenSet[int]) -> List[ExtAffineElement]:
        """Closure of the chosen generators, sorted by length"""
        identity = self.group.identity()
        found = [identity]
        seen = {identity}
        frontier = [identity]
        while frontier:
            next_frontier = []
            for w in frontier:
                for index in sorted(chosen):
                    candidate = self.group.mul(w, self.coxeter.generators[index].element)
                    if candidate in seen:
                        continue
                    seen.add(candidate)
                    found.append(candidate)
                    next_frontier.append(candidate)
                    if len(found) > self.parabolic_cap:
                        raise ParabolicTooLarge(
                            f"Parabolic subgroup exceeds the cap of {self.parabolic_cap} elements"
                        )
            frontier = next_frontier
        order = {w: k for k, w in enumerate(found)}
        return sorted(found, key=lambda w: (self.group.length(w), order[w]))

    def finite_subset(self) -> FinitarySubset:
        """S itself, with W_S = W"""
        return self.make_finitary(self.coxeter.finite_indices)

    def all_finitary_subsets(self) -> List[FinitarySubset]:
        """Every finitary subset of S_aff, by size then generator indices"""
        indices = range(len(self.coxeter.generators))
        result = []
        for size in range(len(self.coxeter.generators) + 1):
            for chosen in combinations(indices, size):
                if self.is_finitary(chosen):
                    result.append(self.make_finitary(chosen))
        return result

    def parabolic_elements(self, subset: FinitarySubset) -> Tuple[ExtAffineElement, ...]:
        return subset.elements

    def subset_label(self, subset: FinitarySubset) -> str:
        return ",".join(self.coxeter.label_of(i) for i in sorted(subset.generators)) or "none"

    # Single cosets

    def is_minimal_in_left_coset(self, w: ExtAffineElement, subset: FinitarySubset) -> bool:
        """w minimal in W_A w iff l(w_A w) = l(w_A) + l(w)"""
        length = self.group.length
        return length(self.group.mul(subset.longest, w)) == length(subset.longest) + length(w)

    def is_minimal_in_right_coset(self, w: ExtAffineElement, subset: FinitarySubset) -> bool:
        length = self.group.length
        return length(self.group.mul(w, subset.longest)) == length(w) + length(subset.longest)

    def has_left_descent_in(self, w: ExtAffineElement, subset: FinitarySubset) -> bool:
        return any(s.index in subset.generators for s in self.coxeter.left_descents(w))

    def has_right_descent_in(self, w: ExtAffineElement, subset: FinitarySubset) -> bool:
        return any(s.index in subset.generators for s in self.coxeter.right_descents(w))

    def _walk(self, w: ExtAffineElement, generators: FrozenSet[int], left: bool, down: bool) -> ExtAffineElement:
        """Multiply by generators of the subset while the length moves in one direction"""
        current = w
        length = self.group.length(current)
        moved = True
        while moved:
            moved = False
            for index in sorted(generators):
                s = self.coxeter.generators[index].element
                candidate = self.group.mul(s, current) if left else self.group.mul(current, s)
                candidate_length = self.group.length(candidate)
                if (candidate_length < length) if down else (candidate_length > length):
                    current, length = candidate, candidate_length
                    moved = True
                    break
        return current

    def min_left_rep(self, w: ExtAffineElement, subset: FinitarySubset) -> ExtAffineElement:
        return self._walk(w, subset.generators, left=True, down=True)

    def min_right_rep(self, w: ExtAffineElement, subset: FinitarySubset) -> ExtAffineElement:
        return self._walk(w, subset.generators, left=False, down=True)

    def max_left_rep(self, w: ExtAffineElement, subset: FinitarySubset) -> ExtAffineElement:
        return self._walk(w, subset.generators, left=True, down=False)

    def max_right_rep(self, w: ExtAffineElement, subset: FinitarySubset) -> ExtAffineElement:
        return self._walk(w, subset.generators, left=False, down=False)

    # Double cosets

    def double_coset_min(self, w: ExtAffineElement, left: FinitarySubset, right: FinitarySubset) -> ExtAffineElement:
        """Minimal element of W_A w W_B by alternating descent stripping"""
        current = w
        while True:
            stripped = self._walk(self._walk(current, left.generators, left=True, down=True),
                                  right.generators, left=False, down=True)
            if stripped == current:
                return current
            current = stripped

    def double_coset_max(self, w: ExtAffineElement, left: FinitarySubset, right: FinitarySubset) -> ExtAffineElement:
        current = w
        while True:
            raised = self._walk(self._walk(current, left.generators, left=True, down=False),
                                right.generators, left=False, down=False)
            if raised == current:
                return current
            current = raised

    def spherical_double_min_max(self, lam: Coweight) -> Tuple[ExtAffineElement, ExtAffineElement]:
        """(min, max) of W t_lambda W for dominant lambda; the max is w0 t_lambda"""
        if not self.datum.is_dominant(lam):
            raise NotDominant(f"{list(lam)} is not dominant")
        finite = self.finite_subset()
        t_lam = self.group.translation(lam)
        smallest = self.double_coset_min(t_lam, finite, finite)
        largest = self.group.mul(self.group.longest_finite(), t_lam)
        return smallest, largest

    # W^L / W^R

    def w_L(self, lam: Coweight) -> ExtAffineElement:
        """Minimal element of W t_lambda: v_lambda t_lambda"""
        _, v = self.datum.dominant_part(lam)
        return self.group.make(v, lam)

    def w_R(self, lam: Coweight) -> ExtAffineElement:
        """Minimal element of t_lambda W: (w^L_{-lambda})^-1"""
        return self.group.inv(self.w_L(vec_neg(lam)))

    # W^S_ext and ^A W^S_ext

    def is_in_WS(self, w: ExtAffineElement) -> bool:
        length = self.group.length(w)
        return all(self.group.length(self.group.mul(w, self.coxeter.generators[i].element)) > length
                   for i in self.coxeter.finite_indices)

    def is_in_AWS(self, w: ExtAffineElement, subset: FinitarySubset) -> bool:
        """l(w_A w w0) = l(w_A) + l(w) + l(w0)"""
        length = self.group.length
        w0 = self.group.longest_finite()
        total = self.group.mul_all(subset.longest, w, w0)
        return length(total) == length(subset.longest) + length(w) + length(w0)

    def double_min_conditions(self, w: ExtAffineElement, subset: FinitarySubset) -> DoubleMinConditions:
        group = self.group
        in_ws = self.is_in_WS(w)
        w0 = group.longest_finite()
        minimal_left = self.is_minimal_in_left_coset(w, subset)
        return DoubleMinConditions(
            minimal_for_every_finite_shift=in_ws and all(
                self.is_minimal_in_left_coset(group.mul(w, group.finite(v)), subset)
                for v in self.datum.weyl_group()),
            minimal_after_longest=in_ws and self.is_minimal_in_left_coset(group.mul(w, w0), subset),
            parabolic_shifts_in_ws=minimal_left and all(
                self.is_in_WS(group.mul(x, w)) for x in subset.elements),
            longest_shift_in_ws=minimal_left and self.is_in_WS(group.mul(subset.longest, w)),
            length_identity=self.is_in_AWS(w, subset),
        )

    def douglass_equiv_check(self, y: ExtAffineElement, w: ExtAffineElement,
                             subset: FinitarySubset) -> Tuple[bool, bool, bool]:
        """(y <= w, y w_A <= w w_A, some y' in yW_A and w' in wW_A with y' <= w')"""
        for element in (y, w):
            if not self.is_minimal_in_right_coset(element, subset):
                raise NotMinimalInCoset(
                    f"{self.group.element_literal(element)} is not minimal in its coset modulo "
                    f"{{{self.subset_label(subset)}}}"
                )
        leq = self.coxeter.bruhat_leq
        first = leq(y, w)
        second = leq(self.group.mul(y, subset.longest), self.group.mul(w, subset.longest))
        y_coset = [self.group.mul(y, x) for x in subset.elements]
        w_coset = [self.group.mul(w, x) for x in subset.elements]
        third = any(leq(a, b) for a in y_coset for b in w_coset)
        return first, second, third

    def aws_cardinality_criterion(self, w: ExtAffineElement, subset: FinitarySubset) -> Dict[str, object]:
        """
        Cardinality observation on the minimal element of W_A w W.

        Evaluates both |W_A w A cap W^S| (A read as its set of generators) and
        |W_A w W cap W^S| against |W_A|, next to the actual membership of the
        minimal element in ^A W^S_ext.
        """
        group = self.group
        finite = self.finite_subset()
        smallest = self.double_coset_min(w, subset, finite)
        generator_products = {
            group.mul_all(x, smallest, self.coxeter.generators[index].element)
            for x in subset.elements for index in subset.generators
        }
        double_coset = {
            group.mul_all(x, smallest, group.finite(v))
            for x in subset.elements for v in self.datum.weyl_group()
        }
        literal = sum(1 for u in generator_products if self.is_in_WS(u))
        double = sum(1 for u in double_coset if self.is_in_WS(u))
        member = self.is_in_AWS(smallest, subset)
        return {
            "minimal": smallest,
            "in_AWS": member,
            "literal_count": literal,
            "double_coset_count": double,
            "order": subset.order,
            "literal_agrees": (literal == subset.order) == member,
            "double_coset_agrees": (double == subset.order) == member,
        }

