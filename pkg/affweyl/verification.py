#!/usr/bin/env python3
"""
Exhaustive verification of the structural lemmas.

Every lemma identifier names a sweep: a list of cases built from the box
W x {lambda : |lambda|_inf <= box} (and the finitary subsets when the lemma
involves one), and a check that turns one case into an optional failure
message. Sweeps run serially or in worker processes over contiguous,
cost-weighted chunks; results are merged back in case order, so the report
does not depend on the number of workers.
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
from sympy import Poly, symbols

from .config import Settings
from .context import WeylContext
from .element_parser import parse_element
from .errors import AffWeylError, BoxExceeded, InternalInconsistency, UnknownLemma, UsageError
from .root_datum import RootDatum, load_datum
from .smith import pair
from .steinberg import box_coweights
from .weyl_ext import ExtAffineElement
from .work_allocation import calculate_chunk_allocation, print_allocation_summary, validate_chunk_allocation

Case = Tuple[Any, ...]
CheckResult = Optional[str]

Q = symbols("q")

DEFAULT_SAMPLES = 10000
BRUHAT_ORACLE_MAX_LENGTH = 8
DOUGLASS_MAX_LENGTH = 3
PARTIAL_ORDER_MAX_LENGTH = 3


@dataclass
class VerificationJob:
    lemma: str
    datum: RootDatum
    box: int
    parabolics: Optional[List[FrozenSet[int]]] = None    # None means every finitary subset
    jobs: int = 1
    samples: int = DEFAULT_SAMPLES
    seed: int = 0


@dataclass
class VerificationReport:
    lemma: str
    datum: str
    box: int
    elements_checked: int
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, include_timing: bool = False) -> Dict[str, Any]:
        """Serializable form; timing is left out unless asked for so reports stay reproducible"""
        data = {
            "lemma": self.lemma,
            "datum": self.datum,
            "box": self.box,
            "elements_checked": self.elements_checked,
            "passed": self.passed,
            "failures": list(self.failures),
            "notes": list(self.notes),
        }
        if include_timing:
            data["elapsed_seconds"] = round(self.elapsed, 3)
        return data


@dataclass(frozen=True)
class Lemma:
    name: str
    description: str
    cases: Callable[[WeylContext, VerificationJob], List[Case]]
    check: Callable[[WeylContext, Case], CheckResult]
    notes_only: bool = False              # messages are observations, never failures
    fixed_datum: Optional[str] = None     # lemma always runs on this preset


# Case building helpers

def _lit(ctx: WeylContext, w: ExtAffineElement) -> str:
    return ctx.group.element_literal(w)


def _subset_text(ctx: WeylContext, generators: FrozenSet[int]) -> str:
    return "{" + ",".join(ctx.coxeter.label_of(i) for i in sorted(generators)) + "}"


def describe_case(ctx: WeylContext, case: Case) -> str:
    """Case in the element grammar, e.g. 's1*t[0,1], [1,0], {s1}'"""
    parts = []
    for item in case:
        if isinstance(item, ExtAffineElement):
            parts.append(_lit(ctx, item))
        elif isinstance(item, frozenset):
            parts.append(_subset_text(ctx, item))
        elif isinstance(item, tuple):
            parts.append("[" + ",".join(str(x) for x in item) + "]")
        else:
            parts.append(str(item))
    return ", ".join(parts)


def _box_elements(ctx: WeylContext, box: int) -> List[ExtAffineElement]:
    """W x box, v by length then greedy word, lambda lexicographic"""
    coweights = box_coweights(ctx.datum.rank, box)
    return [ctx.group.make(v, lam) for v in ctx.datum.weyl_group() for lam in coweights]


def _subsets(ctx: WeylContext, job: VerificationJob) -> List[FrozenSet[int]]:
    if job.parabolics is None:
        return [subset.generators for subset in ctx.cosets.all_finitary_subsets()]
    # make_finitary rejects non-finitary input before the sweep starts
    return [ctx.cosets.make_finitary(p).generators for p in job.parabolics]


def _ws_elements(ctx: WeylContext, box: int) -> List[ExtAffineElement]:
    return [w for w in _box_elements(ctx, box) if ctx.cosets.is_in_WS(w)]


def _dominant_coweights(ctx: WeylContext, box: int) -> List[Tuple[int, ...]]:
    return [lam for lam in box_coweights(ctx.datum.rank, box) if ctx.datum.is_dominant(lam)]


def _antidominant_coweights(ctx: WeylContext, box: int) -> List[Tuple[int, ...]]:
    return [lam for lam in box_coweights(ctx.datum.rank, box) if ctx.datum.is_antidominant(lam)]


def _problems(ctx: WeylContext, case: Case, problems: List[str]) -> CheckResult:
    if not problems:
        return None
    return f"{describe_case(ctx, case)}: " + "; ".join(problems)


# length-oracle

def _length_oracle_cases(ctx, job):
    return [(w,) for w in _box_elements(ctx, job.box)]


def _length_oracle_check(ctx, case):
    (w,) = case
    group = ctx.group
    length = group.length(w)
    problems = []
    hyperplanes = ctx.alcoves.hyperplane_length(w)
    if hyperplanes != length:
        problems.append(f"formula gives {length}, separating hyperplanes {hyperplanes}")
    word = ctx.coxeter.omega_decompose(w)
    if len(word.letters) != length:
        problems.append(f"reduced word has {len(word.letters)} letters, length is {length}")
    if group.length(word.omega) != 0:
        problems.append(f"omega part {_lit(ctx, word.omega)} has positive length")
    if ctx.coxeter.word_to_element(word.letters, word.omega) != w:
        problems.append("reduced word does not multiply back to the element")
    if group.length(group.inv(w)) != length:
        problems.append("inverse has a different length")
    return _problems(ctx, case, problems)


# bruhat-oracle

def _bruhat_oracle_cases(ctx, job):
    max_length = min(BRUHAT_ORACLE_MAX_LENGTH, 2 * job.box + 2)
    elements = ctx.coxeter.affine_elements_up_to(max_length)
    return [(y, w) for y in elements for w in elements]


def _bruhat_oracle_check(ctx, case):
    y, w = case
    recursive = ctx.coxeter.bruhat_leq(y, w)
    subword = ctx.coxeter.subword_leq(y, w)
    if recursive != subword:
        return f"{describe_case(ctx, case)}: descent recursion says {recursive}, subwords say {subword}"
    return None


# lengths-add

def _lengths_add_cases(ctx, job):
    group = ctx.group
    elements = _box_elements(ctx, job.box)
    generators = [s.element for s in ctx.coxeter.generators]
    rng = random.Random(f"{job.seed}:{ctx.datum.name}:{job.box}")
    cases = []
    attempts = 0
    while len(cases) < job.samples and attempts < 50 * job.samples:
        attempts += 1
        x, y = rng.choice(elements), rng.choice(elements)
        if rng.random() < 0.5:
            # a short step up from y keeps comparable pairs in the sample
            w = group.mul_all(y, *(rng.choice(generators) for _ in range(rng.randint(1, 2))))
        else:
            w = rng.choice(elements)
        lx = group.length(x)
        if group.length(group.mul(x, y)) == lx + group.length(y) and \
                group.length(group.mul(x, w)) == lx + group.length(w):
            cases.append((x, y, w))
    return cases


def _lengths_add_check(ctx, case):
    x, y, w = case
    leq = ctx.coxeter.bruhat_leq
    before = leq(y, w)
    after = leq(ctx.group.mul(x, y), ctx.group.mul(x, w))
    if before != after:
        return f"{describe_case(ctx, case)}: y <= w is {before} but xy <= xw is {after}"
    return None


# min-length

def _element_subset_cases(ctx, job):
    subsets = _subsets(ctx, job)
    return [(w, gens) for gens in subsets for w in _box_elements(ctx, job.box)]


def _min_length_check(ctx, case):
    w, gens = case
    cosets, group = ctx.cosets, ctx.group
    subset = cosets.make_finitary(gens)
    problems = []
    left = cosets.is_minimal_in_left_coset(w, subset)
    if left == cosets.has_left_descent_in(w, subset):
        problems.append(f"left length test {left} disagrees with the descent test")
    right = cosets.is_minimal_in_right_coset(w, subset)
    if right == cosets.has_right_descent_in(w, subset):
        problems.append(f"right length test {right} disagrees with the descent test")
    if left:
        lw = group.length(w)
        bad = [x for x in subset.elements if group.length(group.mul(x, w)) != group.length(x) + lw]
        if bad:
            problems.append(f"l(xw) != l(x) + l(w) for x = {_lit(ctx, bad[0])}")
    if cosets.min_left_rep(w, subset) != min((group.mul(x, w) for x in subset.elements), key=group.length):
        problems.append("min_left_rep is not the shortest element of W_A w")
    return _problems(ctx, case, problems)


# minimal-mult

def _minimal_mult_cases(ctx, job):
    cases = []
    for gens in _subsets(ctx, job):
        subset = ctx.cosets.make_finitary(gens)
        cases.extend((w, gens) for w in _box_elements(ctx, job.box)
                     if ctx.cosets.is_minimal_in_right_coset(w, subset))
    return cases


def _minimal_mult_check(ctx, case):
    w, gens = case
    cosets, group = ctx.cosets, ctx.group
    subset = cosets.make_finitary(gens)
    lw = group.length(w)
    problems = []
    for s in ctx.coxeter.generators:
        sw = group.mul(s.element, w)
        if cosets.is_minimal_in_right_coset(sw, subset):
            continue
        if group.length(sw) < lw:
            problems.append(f"{s.label}w < w is not minimal in its coset")
        if not any(group.mul(w, ctx.coxeter.generators[r].element) == sw for r in gens):
            problems.append(f"{s.label}w is not w r for any r in A")
    return _problems(ctx, case, problems)


# douglass

def _douglass_cases(ctx, job):
    small = [w for w in _box_elements(ctx, job.box) if ctx.group.length(w) <= DOUGLASS_MAX_LENGTH]
    cases = []
    for gens in _subsets(ctx, job):
        subset = ctx.cosets.make_finitary(gens)
        minimal = [w for w in small if ctx.cosets.is_minimal_in_right_coset(w, subset)]
        cases.extend((y, w, gens) for y in minimal for w in minimal)
    return cases


def _douglass_check(ctx, case):
    y, w, gens = case
    triple = ctx.cosets.douglass_equiv_check(y, w, ctx.cosets.make_finitary(gens))
    if len(set(triple)) != 1:
        return f"{describe_case(ctx, case)}: conditions (1)-(3) give {list(triple)}"
    return None


# formula-minLR

def _coweight_cases(ctx, job):
    return [(lam,) for lam in box_coweights(ctx.datum.rank, job.box)]


def _formula_min_lr_check(ctx, case):
    (lam,) = case
    datum, group, cosets = ctx.datum, ctx.group, ctx.cosets
    finite = cosets.finite_subset()
    t_lam = group.translation(lam)
    dom, v = datum.dominant_part(lam)
    w_l, w_r = cosets.w_L(lam), cosets.w_R(lam)
    problems = []

    left_coset = [group.mul(group.finite(u), t_lam) for u in datum.weyl_group()]
    right_coset = [group.mul(t_lam, group.finite(u)) for u in datum.weyl_group()]
    if w_l != min(left_coset, key=group.length) or w_l != cosets.min_left_rep(t_lam, finite):
        problems.append(f"w_L = {_lit(ctx, w_l)} is not the minimum of W t_lambda")
    if w_r != min(right_coset, key=group.length) or w_r != cosets.min_right_rep(t_lam, finite):
        problems.append(f"w_R = {_lit(ctx, w_r)} is not the minimum of t_lambda W")
    if w_l != group.mul(group.translation(dom), group.finite(v)):
        problems.append("v_lambda t_lambda != t_dom(lambda) v_lambda")
    if group.length(w_l) != group.length(t_lam) - datum.finite_length(v) or \
            group.length(w_l) != group.length(group.translation(dom)) - datum.finite_length(v):
        problems.append("l(w_L) != l(t_lambda) - l(v_lambda)")
    if cosets.max_left_rep(t_lam, finite) != group.mul(group.longest_finite(), w_l):
        problems.append("maximum of W t_lambda is not w0 w_L")
    if cosets.max_right_rep(t_lam, finite) != group.mul(w_r, group.longest_finite()):
        problems.append("maximum of t_lambda W is not w_R w0")

    # v_lambda is the shortest element taking lambda to dom(lambda)
    movers = [u for u in datum.weyl_group() if u.apply(lam) == dom]
    if datum.finite_length(v) != min(datum.finite_length(u) for u in movers):
        problems.append("v_lambda is not of minimal length")
    return _problems(ctx, case, problems)


# double-min-5way

def _double_min_check(ctx, case):
    w, gens = case
    conditions = ctx.cosets.double_min_conditions(w, ctx.cosets.make_finitary(gens))
    if not conditions.agree():
        values = ", ".join("true" if c else "false" for c in conditions.as_tuple())
        return f"{describe_case(ctx, case)}: five conditions give ({values})"
    return None


# min-LR

def _min_lr_check(ctx, case):
    (lam,) = case
    cosets, group = ctx.cosets, ctx.group
    w_r = cosets.w_R(lam)
    in_sws = cosets.is_in_AWS(w_r, cosets.finite_subset())
    strictly = ctx.datum.is_strictly_dominant(lam)
    problems = []
    if in_sws != strictly:
        problems.append(f"w_R in ^S W^S is {in_sws}, strictly dominant is {strictly}")
    if strictly and w_r != group.mul(group.translation(lam), group.longest_finite()):
        problems.append(f"w_R = {_lit(ctx, w_r)} differs from t_lambda w0")
    return _problems(ctx, case, problems)


# ws-alcove

def _ws_alcove_check(ctx, case):
    (w,) = case
    by_length = ctx.cosets.is_in_WS(w)
    by_alcove = ctx.alcoves.ws_alcove_test(w)
    problems = []
    if by_length != by_alcove:
        problems.append(f"descent test {by_length}, alcove test {by_alcove}")
    pairings = ctx.alcoves.pi_box_of(w).pairings
    if by_length != all(c >= 1 for c in pairings):
        problems.append(f"Pi-box pairings {list(pairings)} disagree with W^S membership")
    return _problems(ctx, case, problems)


# res-elements

def _res_elements_check(ctx, case):
    (w,) = case
    alcoves = ctx.alcoves
    by_integers = alcoves.is_restricted(w)
    by_alcove = alcoves.is_restricted_by_alcove(w)
    problems = []
    if by_integers != by_alcove:
        problems.append(f"integer test {by_integers}, alcove test {by_alcove}")
    if by_integers and not ctx.datum.is_antidominant(w.trans):
        problems.append("restricted element with a translation that is not antidominant")
    if by_integers and not ctx.cosets.is_in_WS(w):
        problems.append("restricted element outside W^S")
    return _problems(ctx, case, problems)


# length-res-dom

def _length_res_dom_cases(ctx, job):
    antidominant = _antidominant_coweights(ctx, job.box)
    return [(w, mu) for w in _ws_elements(ctx, job.box) for mu in antidominant]


def _length_res_dom_check(ctx, case):
    w, mu = case
    group = ctx.group
    t_mu = group.translation(mu)
    total = group.length(group.mul(w, t_mu))
    expected = group.length(t_mu) + group.length(w)
    if total != expected:
        return f"{describe_case(ctx, case)}: l(w t_mu) = {total}, expected {expected}"
    return None


# double-min-antidom

def _double_min_antidom_cases(ctx, job):
    restricted = [w for w in _box_elements(ctx, job.box) if ctx.alcoves.is_restricted(w)]
    antidominant = _antidominant_coweights(ctx, job.box)
    return [(y, lam, gens) for gens in _subsets(ctx, job) for y in restricted for lam in antidominant]


def _double_min_antidom_check(ctx, case):
    y, lam, gens = case
    cosets = ctx.cosets
    subset = cosets.make_finitary(gens)
    before = cosets.is_in_AWS(y, subset)
    after = cosets.is_in_AWS(ctx.group.mul(y, ctx.group.translation(lam)), subset)
    if before != after:
        return f"{describe_case(ctx, case)}: y in ^A W^S is {before}, y t_lambda is {after}"
    return None


# ws-wres-coverage

def _inner_box(ctx: WeylContext, box: int) -> int:
    widest = max((max(abs(x) for x in c) for c in ctx.datum.positive_coroots), default=0)
    return box - widest


def _coverage_cases(ctx, job):
    cases: List[Case] = [("factor", w) for w in _ws_elements(ctx, job.box)]
    inner = _inner_box(ctx, job.box)
    if inner < 0:
        return cases
    for gens in _subsets(ctx, job):
        subset = ctx.cosets.make_finitary(gens)
        cases.extend(("cover", w, gens) for w in _box_elements(ctx, inner)
                     if ctx.cosets.is_in_AWS(w, subset))
    return cases


def _coverage_check(ctx, case):
    """Factor W^S elements, and for "cover" cases compare every label hitting w.

    Label uniqueness is relative to the sweep box: only restricted elements
    with translation inside the box are tried as competing labels.
    """
    steinberg, group = ctx.steinberg, ctx.group
    if case[0] == "factor":
        w = case[1]
        factors = steinberg.steinberg_factor(w)
        problems = []
        if group.mul(factors.x, group.translation(factors.nu)) != w:
            problems.append("x t_nu does not reassemble w")
        if factors.lengths[2] != factors.lengths[0] + factors.lengths[1]:
            problems.append(f"lengths {list(factors.lengths)} are not additive")
        # any other restricted factor differs by the radical
        for y0 in ctx.datum.radical_basis:
            shifted = steinberg.torsor_shift(factors.x, y0)
            if not ctx.alcoves.is_restricted(shifted) or not steinberg.same_modulo_radical(shifted, factors.x):
                problems.append(f"shift by {list(y0)} leaves the restricted set")
        return _problems(ctx, case, problems)

    _, w, gens = case
    subset = ctx.cosets.make_finitary(gens)
    w0 = ctx.datum.longest()
    factors = steinberg.steinberg_factor(w)
    mu = w0.apply(factors.nu)
    problems = []
    if not ctx.cosets.is_in_AWS(factors.x, subset):
        problems.append(f"restricted factor {_lit(ctx, factors.x)} is not in ^A W^S")
    elif steinberg.steinberg_label(factors.x, mu, subset) != w:
        problems.append(f"label of ({_lit(ctx, factors.x)}, {list(mu)}) is not w")

    # every (y, mu) with y in the box enumeration hitting w agrees with the factorization up to Y_0
    hits = []
    for y in steinberg.enumerate_restricted(subset, ctx.cache.get("box", 1)):
        rest = group.mul(group.inv(y), w)
        if group.is_translation(rest) and ctx.datum.is_antidominant(rest.trans):
            hits.append(y)
    if any(not steinberg.same_modulo_radical(y, factors.x) for y in hits):
        problems.append("two labels differ by more than the radical")
    if ctx.datum.is_semisimple() and len(hits) > 1:
        problems.append(f"{len(hits)} labels for an element of a semisimple datum")
    return _problems(ctx, case, problems)


# spherical-order

def _spherical_order_cases(ctx, job):
    dominant = _dominant_coweights(ctx, job.box)
    return [(lam, mu) for lam in dominant for mu in dominant]


def _spherical_order_check(ctx, case):
    lam, mu = case
    cosets, orbits, leq = ctx.cosets, ctx.orbits, ctx.coxeter.bruhat_leq
    min_lam, max_lam = cosets.spherical_double_min_max(lam)
    min_mu, max_mu = cosets.spherical_double_min_max(mu)
    problems = []
    try:
        closure = orbits.closure_leq(orbits.make_label("Gr", "spherical", coweight=lam),
                                     orbits.make_label("Gr", "spherical", coweight=mu))
    except InternalInconsistency as e:
        return f"{describe_case(ctx, case)}: {e}"
    if leq(min_lam, min_mu) != leq(max_lam, max_mu):
        problems.append("order on minima differs from order on maxima")
    if closure != leq(max_lam, max_mu):
        problems.append("closure order differs from Bruhat order on maxima")
    finite = cosets.finite_subset()
    if cosets.double_coset_max(min_lam, finite, finite) != max_lam:
        problems.append("double coset maximum is not w0 t_lambda")
    return _problems(ctx, case, problems)


# pi-fibration

def _pi_fibration_cases(ctx, job):
    cases: List[Case] = [("coset", w) for w in _ws_elements(ctx, job.box)]
    cases.extend(("sphere", lam) for lam in _dominant_coweights(ctx, job.box))
    return cases


def _poincare(lengths: Sequence[int]) -> Poly:
    return Poly(sum(Q ** k for k in lengths), Q)


def _pi_fibration_check(ctx, case):
    datum, group, cosets = ctx.datum, ctx.group, ctx.cosets
    if case[0] == "coset":
        w = case[1]
        fiber = _poincare([group.length(group.mul(w, group.finite(v))) for v in datum.weyl_group()])
        finite = _poincare([datum.finite_length(v) for v in datum.weyl_group()])
        expected = Poly(Q ** group.length(w), Q) * finite
        if fiber != expected:
            return f"{describe_case(ctx, case)}: fiber polynomial {fiber.as_expr()} != {expected.as_expr()}"
        return None

    lam = case[1]
    orbit = sorted({v.apply(lam) for v in datum.weyl_group()})
    lengths = [group.length(cosets.w_R(mu)) for mu in orbit]
    polynomial = _poincare(lengths)
    dimension = ctx.orbits.orbit_dim(ctx.orbits.make_label("Gr", "spherical", coweight=lam))
    problems = []
    if polynomial.degree() != dimension:
        problems.append(f"top degree {polynomial.degree()} != <2rho, lambda> = {dimension}")
    if polynomial.eval(1) != len(orbit):
        problems.append("cells do not match the W-orbit")
    if group.length(cosets.w_R(datum.longest().apply(lam))) != dimension:
        problems.append("the open cell is not labelled by w0(lambda)")
    return _problems(ctx, case, problems)


# gl2-paper

def _gl2_context(ctx: WeylContext) -> WeylContext:
    if ctx.datum.name == "GL2":
        return ctx
    if "gl2" not in ctx.cache:
        ctx.cache["gl2"] = WeylContext.load("GL2", ctx.settings)
    return ctx.cache["gl2"]


def _gl2_example_cases(ctx, job):
    return [("sigma",), ("length",), ("restricted",), ("aws",), ("whittaker",)]


def _gl2_example_check(ctx, case):
    gl2 = _gl2_context(ctx)
    y = parse_element("t[1,0]*s1", gl2.coxeter)
    s = gl2.cosets.make_finitary({0})
    tag = case[0]
    if tag == "sigma":
        ok = gl2.datum.sigma == (1, 0)
        found = list(gl2.datum.sigma)
    elif tag == "length":
        found = gl2.group.length(y)
        ok = found == 0
    elif tag == "restricted":
        found = (gl2.alcoves.is_restricted(y), gl2.alcoves.is_restricted(gl2.group.translation((0, 1))))
        ok = found == (True, False)
    elif tag == "aws":
        found = gl2.cosets.is_in_AWS(y, s)
        ok = found is True
    else:
        report = gl2.orbits.whittaker_serre_obstruction(y, s, (0, -2))
        found = (report.nonempty_possible, report.dimension_or_bound, report.strict)
        ok = found == (True, 1, False)
    return None if ok else f"{tag}: got {found}"


# omega-normalizes

def _omega_cases(ctx, job):
    return [(w,) for w in _box_elements(ctx, job.box) if ctx.group.length(w) == 0]


def _omega_check(ctx, case):
    (omega,) = case
    group = ctx.group
    generators = {s.element for s in ctx.coxeter.generators}
    problems = []
    for s in ctx.coxeter.generators:
        if group.conjugate(omega, s.element) not in generators:
            problems.append(f"omega {s.label} omega^-1 is not a simple reflection")
        if group.length(group.mul(omega, s.element)) != 1 or group.length(group.mul(s.element, omega)) != 1:
            problems.append(f"multiplying by {s.label} does not give length 1")
    return _problems(ctx, case, problems)


# partial-order

def _order_graph(ctx: WeylContext) -> nx.DiGraph:
    """Short elements of W_aff and one Omega-shift of them, ordered by bruhat_leq"""
    if "order_graph" not in ctx.cache:
        nodes = ctx.coxeter.affine_elements_up_to(PARTIAL_ORDER_MAX_LENGTH)
        omegas = [w for w in _box_elements(ctx, 1) if ctx.group.length(w) == 0 and any(w.trans)]
        if omegas:
            nodes += [ctx.group.mul(omegas[0], w) for w in list(nodes)]
        ctx.cache["order_graph"] = ctx.coxeter.bruhat_interval_graph(nodes)
    return ctx.cache["order_graph"]


def _partial_order_cases(ctx, job):
    return [(w,) for w in _order_graph(ctx).nodes]


def _partial_order_check(ctx, case):
    (w,) = case
    graph = _order_graph(ctx)
    problems = []
    if not ctx.coxeter.bruhat_leq(w, w):
        problems.append("not reflexive")
    descendants = nx.descendants(graph, w)
    if w in descendants:
        problems.append("lies on a cycle")
    missing = [z for z in descendants if not graph.has_edge(w, z)]
    if missing:
        problems.append(f"not transitive towards {_lit(ctx, missing[0])}")
    if any(ctx.group.length(z) <= ctx.group.length(w) for z in graph.successors(w)):
        problems.append("a larger element is not longer")
    return _problems(ctx, case, problems)


# fiber-strata

def _fiber_strata_cases(ctx, job):
    small = min(job.box, 1)
    ys = _ws_elements(ctx, small)
    mus = _dominant_coweights(ctx, small)
    etas = box_coweights(ctx.datum.rank, small)
    return [(y, mu, eta) for y in ys for mu in mus for eta in etas]


def _fiber_strata_check(ctx, case):
    y, mu, eta = case
    orbits = ctx.orbits
    strata = orbits.semiinf_strata(y, mu, eta)
    report = orbits.conv_fiber_bound(y, mu, eta)
    problems = []
    for stratum in strata:
        if stratum.bound + stratum.slack != report.dimension_or_bound:
            problems.append(f"stratum nu = {list(stratum.nu)} exceeds the fiber bound")
        if stratum.slack < 0:
            problems.append(f"stratum nu = {list(stratum.nu)} has negative slack")
        if Fraction(stratum.bound).denominator != 1:
            problems.append(f"stratum nu = {list(stratum.nu)} has bound {stratum.bound}")
        if report.strict and not stratum.strict:
            problems.append(f"stratum nu = {list(stratum.nu)} reaches a strict bound")
    if strata and Fraction(report.dimension_or_bound).denominator != 1:
        problems.append(f"fiber bound {report.dimension_or_bound} is not integral")
    if report.forced_nonempty and not any(s.nu == y.trans and s.slack == 0 for s in strata):
        problems.append("the forced stratum nu = lambda is missing")
    return _problems(ctx, case, problems)


# label-shadows

def _label_shadow_cases(ctx, job):
    cases: List[Case] = [("dominant", lam) for lam in _dominant_coweights(ctx, job.box)]
    cases.extend(("ws", w) for w in _ws_elements(ctx, job.box))
    return cases


def _label_shadow_check(ctx, case):
    group, cosets, orbits = ctx.group, ctx.cosets, ctx.orbits
    problems = []
    if case[0] == "dominant":
        lam = case[1]
        label = orbits.spherical_to_iwahori_label(lam)
        if not cosets.is_in_WS(label):
            problems.append(f"{_lit(ctx, label)} is not in W^S")
        if label != cosets.w_R(ctx.datum.longest().apply(lam)):
            problems.append("label is not w_R(w0(lambda))")
        if group.length(label) != pair(ctx.datum.two_rho, lam):
            problems.append("label length differs from <2rho, lambda>")
        return _problems(ctx, case, problems)

    w = case[1]
    pulled = orbits.pullback_label(w)
    w0_length = ctx.datum.finite_length(ctx.datum.longest())
    if group.length(pulled) != group.length(w) + w0_length:
        problems.append("l(w w0) != l(w) + l(w0)")
    zero = tuple(0 for _ in range(ctx.datum.rank))
    if orbits.iwahori_label_of_coweight(group.act_on_coweight(w, zero)) != w:
        problems.append("w is not the Iwahori label of its own base point")
    return _problems(ctx, case, problems)


# coset-cardinality

def _cardinality_cases(ctx, job):
    cases = []
    finite = ctx.cosets.finite_subset()
    for gens in _subsets(ctx, job):
        subset = ctx.cosets.make_finitary(gens)
        seen = set()
        for w in _ws_elements(ctx, job.box):
            smallest = ctx.cosets.double_coset_min(w, subset, finite)
            if smallest not in seen:
                seen.add(smallest)
                cases.append((smallest, gens))
    return cases


def _cardinality_check(ctx, case):
    w, gens = case
    result = ctx.cosets.aws_cardinality_criterion(w, ctx.cosets.make_finitary(gens))
    notes = []
    if not result["literal_agrees"]:
        notes.append(f"|W_A w A cap W^S| = {result['literal_count']}, |W_A| = {result['order']}, "
                     f"in ^A W^S = {result['in_AWS']}")
    if not result["double_coset_agrees"]:
        notes.append(f"|W_A w W cap W^S| = {result['double_coset_count']}, |W_A| = {result['order']}, "
                     f"in ^A W^S = {result['in_AWS']}")
    return _problems(ctx, case, notes)


LEMMAS: Dict[str, Lemma] = {lemma.name: lemma for lemma in [
    Lemma("length-oracle", "length formula vs separating hyperplanes and reduced words",
          _length_oracle_cases, _length_oracle_check),
    Lemma("bruhat-oracle", "descent recursion vs subword test on W_aff",
          _bruhat_oracle_cases, _bruhat_oracle_check),
    Lemma("lengths-add", "y <= w iff xy <= xw when lengths add",
          _lengths_add_cases, _lengths_add_check),
    Lemma("min-length", "minimality in W_A w by length and by descents",
          _element_subset_cases, _min_length_check),
    Lemma("minimal-mult", "sw not minimal in swW_A forces sw = wr",
          _minimal_mult_cases, _minimal_mult_check),
    Lemma("douglass", "the three comparisons of minimal representatives agree",
          _douglass_cases, _douglass_check),
    Lemma("formula-minLR", "closed forms of w_L and w_R",
          _coweight_cases, _formula_min_lr_check),
    Lemma("double-min-5way", "five characterizations of ^A W^S agree",
          _element_subset_cases, _double_min_check),
    Lemma("min-LR", "w_R(lambda) in ^S W^S iff lambda strictly dominant",
          _coweight_cases, _min_lr_check),
    Lemma("ws-alcove", "W^S by descents vs by alcoves",
          _length_oracle_cases, _ws_alcove_check),
    Lemma("res-elements", "restricted elements by pairings vs by alcoves",
          _length_oracle_cases, _res_elements_check),
    Lemma("length-res-dom", "l(w t_mu) = l(t_mu) + l(w) for antidominant mu",
          _length_res_dom_cases, _length_res_dom_check),
    Lemma("double-min-antidom", "y in ^A W^S iff y t_lambda in ^A W^S",
          _double_min_antidom_cases, _double_min_antidom_check),
    Lemma("ws-wres-coverage", "Steinberg factorization and label coverage",
          _coverage_cases, _coverage_check),
    Lemma("spherical-order", "closure order on Gr^lambda by maxima and by coroots",
          _spherical_order_cases, _spherical_order_check),
    Lemma("pi-fibration", "cell counts of pi^-1(Gr_w) and of Gr^lambda",
          _pi_fibration_cases, _pi_fibration_check),
    Lemma("gl2-paper", "worked GL2 example",
          _gl2_example_cases, _gl2_example_check, fixed_datum="GL2"),
    Lemma("omega-normalizes", "length-zero elements permute S_aff",
          _omega_cases, _omega_check),
    Lemma("partial-order", "Bruhat order axioms on short elements",
          _partial_order_cases, _partial_order_check),
    Lemma("fiber-strata", "semi-infinite strata stay within the fiber bound",
          _fiber_strata_cases, _fiber_strata_check),
    Lemma("label-shadows", "label arithmetic of pullback and forgetful functors",
          _label_shadow_cases, _label_shadow_check),
    Lemma("coset-cardinality", "cardinality observation on ^A W^S",
          _cardinality_cases, _cardinality_check, notes_only=True),
]}


def lemma_names() -> List[str]:
    return list(LEMMAS)


# Running a sweep

_WORKER_CONTEXT: Optional[WeylContext] = None


def _init_worker(spec: Dict[str, Any], settings: Settings, cache: Dict[str, Any]):
    """Rebuild the context once per worker process"""
    global _WORKER_CONTEXT
    _WORKER_CONTEXT = WeylContext.from_spec(spec, settings)
    _WORKER_CONTEXT.cache.update(cache)


def _safe_check(lemma: Lemma, ctx: WeylContext, case: Case) -> CheckResult:
    try:
        return lemma.check(ctx, case)
    except (AffWeylError, ArithmeticError) as e:
        return f"{describe_case(ctx, case)}: raised {type(e).__name__}: {e}"


def _run_chunk(lemma_name: str, cases: List[Case]) -> List[CheckResult]:
    lemma = LEMMAS[lemma_name]
    return [_safe_check(lemma, _WORKER_CONTEXT, case) for case in cases]


def _case_cost(ctx: WeylContext, case: Case) -> int:
    return 1 + sum(ctx.group.length(item) for item in case if isinstance(item, ExtAffineElement))


def validate_job(job: VerificationJob, settings: Settings) -> Lemma:
    if job.lemma not in LEMMAS:
        raise UnknownLemma(f"Unknown lemma '{job.lemma}'. Known: {', '.join(LEMMAS)}, all")
    if job.box < 1:
        raise UsageError(f"Box must be a positive integer, got {job.box}")
    if job.box > settings.max_box:
        raise BoxExceeded(f"Box {job.box} exceeds the configured maximum {settings.max_box} (AFFWEYL_MAX_BOX)")
    if job.jobs < 1:
        raise UsageError(f"Worker count must be positive, got {job.jobs}")
    return LEMMAS[job.lemma]


def run_verification(job: VerificationJob, settings: Optional[Settings] = None,
                     context: Optional[WeylContext] = None, verbose: bool = False) -> VerificationReport:
    """Run one lemma sweep and collect failures in case order"""
    settings = settings or Settings()
    lemma = validate_job(job, settings)
    start_time = time.time()

    if lemma.fixed_datum is not None:
        datum = load_datum(lemma.fixed_datum)
        ctx = context if context is not None and context.datum.name == datum.name \
            else WeylContext.from_datum(datum, settings)
    else:
        ctx = context if context is not None and context.datum == job.datum \
            else WeylContext.from_datum(job.datum, settings)
    ctx.cache["box"] = job.box

    cases = lemma.cases(ctx, job)
    if job.jobs > 1 and len(cases) > 1:
        outcomes = _run_parallel(ctx, lemma, cases, job.jobs, settings, verbose)
    else:
        outcomes = [_safe_check(lemma, ctx, case) for case in cases]

    messages = [m for m in outcomes if m]
    return VerificationReport(
        lemma=lemma.name,
        datum=ctx.datum.name,
        box=job.box,
        elements_checked=len(cases),
        failures=[] if lemma.notes_only else messages,
        notes=messages if lemma.notes_only else [],
        elapsed=time.time() - start_time,
    )


def _run_parallel(ctx: WeylContext, lemma: Lemma, cases: List[Case], jobs: int,
                  settings: Settings, verbose: bool) -> List[CheckResult]:
    costs = [_case_cost(ctx, case) for case in cases]
    chunks = calculate_chunk_allocation(costs, jobs)
    if not validate_chunk_allocation(chunks, len(cases)):
        raise InternalInconsistency(f"Invalid chunk allocation for {len(cases)} cases")
    if verbose:
        print_allocation_summary(chunks, costs, jobs)

    shared = {"box": ctx.cache.get("box", 1)}
    with ProcessPoolExecutor(max_workers=jobs, initializer=_init_worker,
                             initargs=(ctx.datum.to_spec(), settings, shared)) as pool:
        futures = [pool.submit(_run_chunk, lemma.name, cases[start:end]) for start, end in chunks]
        # merging in submission order keeps the serial case order
        return [outcome for future in futures for outcome in future.result()]


def run_all(job: VerificationJob, settings: Optional[Settings] = None,
            verbose: bool = False) -> List[VerificationReport]:
    """Run every lemma with the parameters of job"""
    settings = settings or Settings()
    context = WeylContext.from_datum(job.datum, settings)
    reports = []
    for name in LEMMAS:
        single = VerificationJob(name, job.datum, job.box, job.parabolics, job.jobs, job.samples, job.seed)
        reports.append(run_verification(single, settings, context=context, verbose=verbose))
    return reports
