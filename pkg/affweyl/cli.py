#!/usr/bin/env python3
"""
Command-line front end for affweyl.

Usage: python3 -m affweyl.cli <verb> [options]

Query results go to stdout (canonical element forms, booleans as true/false);
status lines go to stderr. Exit codes: 0 success, 1 usage error, 2 domain
error or failed verification.
"""

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Sequence

from .config import Settings, load_settings
from .context import WeylContext
from .cosets import FinitarySubset
from .element_parser import parse_coweight, parse_element, parse_parabolic
from .errors import AffWeylError, DomainError, UnknownVerb, UsageError
from .orbit_geometry import FLAVORS, SPACES, GeometryReport, OrbitLabel, SemiInfiniteStratum
from .presets import default_box
from .svg_plot import plot_alcoves
from .verification import LEMMAS, VerificationJob, VerificationReport, run_all, run_verification
from .weyl_ext import ExtAffineElement


@dataclass
class QueryResult:
    text: str
    exit_code: int = 0


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting"""

    def error(self, message):
        raise UsageError(message)


# Rendering

def _plain(ctx: WeylContext, value: Any) -> Any:
    """JSON-ready form of a query result"""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, ExtAffineElement):
        return ctx.group.format_element(value)
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else str(value)
    if isinstance(value, GeometryReport):
        return {
            "nonempty_possible": value.nonempty_possible,
            "bound": _plain(ctx, value.dimension_or_bound),
            "strict": value.strict,
            "forced_nonempty": value.forced_nonempty,
        }
    if isinstance(value, SemiInfiniteStratum):
        return {
            "nu": list(value.nu),
            "kappa": list(value.kappa),
            "bound": _plain(ctx, value.bound),
            "slack": _plain(ctx, value.slack),
            "strict": value.strict,
        }
    if isinstance(value, dict):
        return {k: _plain(ctx, v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(ctx, v) for v in value]
    return value


def _text(value: Any) -> str:
    """Text form of a plain value"""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, list):
        if all(isinstance(v, int) and not isinstance(v, bool) for v in value):
            return "[" + ", ".join(str(v) for v in value) + "]"
        return "\n".join(_text(v) for v in value)
    if isinstance(value, dict):
        lines = []
        for key, item in value.items():
            if isinstance(item, list) and item and isinstance(item[0], dict):
                lines.append(f"{key}:")
                lines.extend("  " + " ".join(f"{k}={_text(v)}" for k, v in entry.items()) for entry in item)
            else:
                lines.append(f"{key}: {_text(item)}")
        return "\n".join(lines)
    return str(value)


def _render(ctx: WeylContext, value: Any, output_format: str) -> str:
    plain = _plain(ctx, value)
    if output_format == "json":
        return json.dumps(plain)
    return _text(plain)


def _status(args, message: str):
    if not getattr(args, "quiet", False):
        print(message, file=sys.stderr)


# Argument helpers

def _element(ctx: WeylContext, text: str) -> ExtAffineElement:
    return parse_element(text, ctx.coxeter)


def _coweight(ctx: WeylContext, text: Optional[str], flag: str) -> tuple:
    if text is None:
        raise UsageError(f"{flag} is required")
    return parse_coweight(text, ctx.datum.rank)


def _parabolic(ctx: WeylContext, args) -> FinitarySubset:
    return ctx.cosets.make_finitary(parse_parabolic(args.parabolic or "", ctx.coxeter))


def _label(ctx: WeylContext, args, target: str) -> OrbitLabel:
    if args.flavor == "spherical":
        return ctx.orbits.make_label(args.space, "spherical", coweight=parse_coweight(target, ctx.datum.rank))
    parabolic = _parabolic(ctx, args) if args.flavor == "whittaker" else None
    return ctx.orbits.make_label(args.space, args.flavor, element=_element(ctx, target), parabolic=parabolic)


# Verbs

def _cmd_len(ctx, args):
    return ctx.group.length(_element(ctx, args.element))


def _cmd_mul(ctx, args):
    return ctx.group.mul_all(*(_element(ctx, e) for e in args.elements))


def _cmd_inv(ctx, args):
    return ctx.group.inv(_element(ctx, args.element))


def _cmd_word(ctx, args):
    return ctx.coxeter.format_word(ctx.coxeter.omega_decompose(_element(ctx, args.element)))


def _cmd_leq(ctx, args):
    return ctx.coxeter.bruhat_leq(_element(ctx, args.y), _element(ctx, args.w))


def _cmd_omega(ctx, args):
    return ctx.coxeter.omega_decompose(_element(ctx, args.element)).omega


def _cmd_minrep(ctx, args):
    w = _element(ctx, args.element)
    subset = _parabolic(ctx, args)
    cosets = ctx.cosets
    if args.side == "left":
        return cosets.max_left_rep(w, subset) if args.max else cosets.min_left_rep(w, subset)
    return cosets.max_right_rep(w, subset) if args.max else cosets.min_right_rep(w, subset)


def _cmd_is_ws(ctx, args):
    return ctx.cosets.is_in_WS(_element(ctx, args.element))


def _cmd_is_aws(ctx, args):
    return ctx.cosets.is_in_AWS(_element(ctx, args.element), _parabolic(ctx, args))


def _cmd_wl(ctx, args):
    return ctx.cosets.w_L(_coweight(ctx, args.lam, "--lambda"))


def _cmd_wr(ctx, args):
    return ctx.cosets.w_R(_coweight(ctx, args.lam, "--lambda"))


def _cmd_is_restricted(ctx, args):
    return ctx.alcoves.is_restricted(_element(ctx, args.element))


def _cmd_pi_box(ctx, args):
    box = ctx.alcoves.pi_box_of(_element(ctx, args.element))
    return {"pairings": list(box.pairings), "mu": list(box.mu)}


def _cmd_steinberg_factor(ctx, args):
    factors = ctx.steinberg.steinberg_factor(_element(ctx, args.element))
    return {"x": factors.x, "nu": list(factors.nu), "lengths": list(factors.lengths)}


def _cmd_steinberg_label(ctx, args):
    return ctx.steinberg.steinberg_label(_element(ctx, args.element), _coweight(ctx, args.mu, "--mu"),
                                         _parabolic(ctx, args))


def _cmd_enumerate_restricted(ctx, args):
    box = args.box if args.box is not None else 1
    subset = _parabolic(ctx, args)
    if args.minimal:
        return ctx.steinberg.restricted_minimal_labels(subset, box)
    return ctx.steinberg.enumerate_restricted(subset, box)


def _cmd_orbit_dim(ctx, args):
    return ctx.orbits.orbit_dim(_label(ctx, args, args.target))


def _cmd_closure_leq(ctx, args):
    return ctx.orbits.closure_leq(_label(ctx, args, args.a), _label(ctx, args, args.b))


def _cmd_mv_dim(ctx, args):
    lam, mu = _coweight(ctx, args.lam, "--lambda"), _coweight(ctx, args.mu, "--mu")
    if args.side == "S":
        return ctx.orbits.mv_intersection_S(lam, mu)
    return ctx.orbits.mv_intersection_T(lam, mu)


def _cmd_semiinf_bound(ctx, args):
    return ctx.orbits.iwahori_semiinf_bound(_element(ctx, args.element), _coweight(ctx, args.nu, "--nu"))


def _cmd_cs_bound(ctx, args):
    return ctx.orbits.casselman_shalika_bound(_coweight(ctx, args.mu, "--mu"))


def _cmd_fiber_bound(ctx, args):
    y = _element(ctx, args.element)
    mu, eta = _coweight(ctx, args.mu, "--mu"), _coweight(ctx, args.eta, "--eta")
    report = ctx.orbits.conv_fiber_bound(y, mu, eta)
    if not args.strata:
        return report
    result = _plain(ctx, report)
    result["strata"] = ctx.orbits.semiinf_strata(y, mu, eta)
    return result


def _cmd_whit_obstruction(ctx, args):
    return ctx.orbits.whittaker_serre_obstruction(_element(ctx, args.element), _parabolic(ctx, args),
                                                  _coweight(ctx, args.mu, "--mu"))


def _cmd_plot_alcoves(ctx, args):
    highlight = [_element(ctx, e) for e in args.highlight or []]
    svg = plot_alcoves(ctx, bound=args.bound, highlight=highlight)
    if not args.out:
        return svg
    out_path = Path(args.out)
    if out_path.parent == Path("."):
        out_path = Path(ctx.settings.output_dir) / out_path
    out_path.parent.mkdir(parents=True, exist_ok=True)
    out_path.write_text(svg, encoding="utf-8")
    _status(args, f"💾 Wrote {out_path}")
    return str(out_path)


COMMANDS = {
    "len": _cmd_len,
    "mul": _cmd_mul,
    "inv": _cmd_inv,
    "word": _cmd_word,
    "leq": _cmd_leq,
    "omega": _cmd_omega,
    "minrep": _cmd_minrep,
    "is-ws": _cmd_is_ws,
    "is-aws": _cmd_is_aws,
    "wl": _cmd_wl,
    "wr": _cmd_wr,
    "is-restricted": _cmd_is_restricted,
    "pi-box": _cmd_pi_box,
    "steinberg-factor": _cmd_steinberg_factor,
    "steinberg-label": _cmd_steinberg_label,
    "enumerate-restricted": _cmd_enumerate_restricted,
    "orbit-dim": _cmd_orbit_dim,
    "closure-leq": _cmd_closure_leq,
    "mv-dim": _cmd_mv_dim,
    "semiinf-bound": _cmd_semiinf_bound,
    "cs-bound": _cmd_cs_bound,
    "fiber-bound": _cmd_fiber_bound,
    "whit-obstruction": _cmd_whit_obstruction,
    "plot-alcoves": _cmd_plot_alcoves,
}
VERBS = list(COMMANDS) + ["verify"]


# verify

def _print_statistics(args, report: VerificationReport):
    marker = "✅" if report.passed else "❌"
    _status(args, "📊 Verification statistics:")
    _status(args, f"  - Lemma: {report.lemma}")
    _status(args, f"  - Datum: {report.datum} (box {report.box})")
    _status(args, f"  - Cases checked: {report.elements_checked}")
    _status(args, f"  - Failures: {len(report.failures)}")
    if report.notes:
        _status(args, f"  - Notes: {len(report.notes)}")
    _status(args, f"  - Elapsed: {report.elapsed:.2f}s")
    _status(args, f"{marker} {report.lemma}: {'pass' if report.passed else 'FAIL'}")


def _save_report(settings: Settings, args, job: VerificationJob, report: VerificationReport) -> Path:
    output_dir = Path(settings.output_dir)
    output_dir.mkdir(parents=True, exist_ok=True)
    report_path = output_dir / f"verify_{report.lemma}_{report.datum}.json"
    with open(report_path, "w", encoding="utf-8") as f:
        json.dump(report.to_dict(), f, indent=2)

    metadata = {
        "run_info": {
            "timestamp": time.time(),
            "lemma": report.lemma,
            "datum": report.datum,
            "box": job.box,
            "parabolics": args.parabolic or "all",
            "jobs": job.jobs,
            "samples": job.samples,
            "seed": job.seed,
            "elapsed_seconds": round(report.elapsed, 3),
        },
        "datum_spec": job.datum.to_spec(),
        "stats": {
            "elements_checked": report.elements_checked,
            "failures": len(report.failures),
            "notes": len(report.notes),
        },
    }
    metadata_path = report_path.with_suffix(".metadata.json")
    with open(metadata_path, "w", encoding="utf-8") as f:
        json.dump(metadata, f, indent=2)
    _status(args, f"💾 Report: {report_path}")
    _status(args, f"💾 Metadata: {metadata_path}")
    return report_path


def _report_text(report: VerificationReport) -> str:
    status = "pass" if report.passed else "FAIL"
    lines = [f"{report.lemma} {report.datum} box={report.box}: {status} "
             f"({report.elements_checked} checked, {len(report.failures)} failures)"]
    lines.extend(f"  - {failure}" for failure in report.failures)
    lines.extend(f"  note: {note}" for note in report.notes)
    return "\n".join(lines)


def _cmd_verify(ctx: WeylContext, args, settings: Settings) -> QueryResult:
    parabolics = None
    if args.parabolic:
        parabolics = [parse_parabolic(args.parabolic, ctx.coxeter)]
    box = args.box if args.box is not None else default_box(ctx.datum.name)
    job = VerificationJob(
        lemma=args.lemma,
        datum=ctx.datum,
        box=box,
        parabolics=parabolics,
        jobs=args.jobs,
        samples=args.samples,
        seed=args.seed,
    )

    _status(args, f"🔍 Verifying {args.lemma} on {ctx.datum.name} with box {box} ({args.jobs} workers)")
    fixed = LEMMAS[args.lemma].fixed_datum if args.lemma in LEMMAS else None
    if fixed is not None and fixed != ctx.datum.name:
        _status(args, f"⚠️  {args.lemma} always runs on {fixed}, ignoring --datum {ctx.datum.name}")
    if args.lemma == "all":
        reports = run_all(job, settings, verbose=not args.quiet)
    else:
        reports = [run_verification(job, settings, context=ctx, verbose=not args.quiet)]

    for report in reports:
        _print_statistics(args, report)
        if args.save:
            _save_report(settings, args, job, report)

    failed = [r for r in reports if not r.passed]
    if len(reports) > 1:
        marker = "✅" if not failed else "❌"
        _status(args, f"{marker} {len(reports) - len(failed)}/{len(reports)} lemmas passed")

    if args.format == "json":
        payload = [r.to_dict() for r in reports]
        text = json.dumps(payload if len(payload) > 1 else payload[0])
    else:
        text = "\n".join(_report_text(r) for r in reports)
    return QueryResult(text, exit_code=2 if failed else 0)


# Parser

def _common_parser(settings: Settings) -> argparse.ArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument('--datum', default=settings.default_datum, help='Preset name (GL2, PGL2, GL3, PGL3) or JSON file')
    common.add_argument('--box', type=int, help='Translation bound for sweeps and enumerations')
    common.add_argument('--parabolic', default='', help='Finitary subset such as "s1,a1"; "none" or "S"')
    common.add_argument('--jobs', type=int, default=settings.jobs, help='Worker processes for verify')
    common.add_argument('--format', choices=['text', 'json'], default='text', help='Output format')
    common.add_argument('--quiet', action='store_true', help='Suppress status lines on stderr')
    return common


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = _common_parser(settings)
    parser = CliArgumentParser(prog='affweyl', description='Extended affine Weyl group calculator')
    verbs = parser.add_subparsers(dest='verb', metavar='verb')

    def verb(name, help_text):
        return verbs.add_parser(name, parents=[common], help=help_text)

    for name, help_text in [('len', 'Length of an element'), ('inv', 'Inverse'),
                            ('word', 'Omega part and reduced word'), ('omega', 'Length-zero part'),
                            ('is-ws', 'Minimal in wW'), ('is-aws', 'Member of ^A W^S'),
                            ('is-restricted', 'Restricted element'), ('pi-box', 'Pi-box containing w^-1(A_fund)'),
                            ('steinberg-factor', 'Restricted times antidominant translation')]:
        verb(name, help_text).add_argument('element')

    verb('mul', 'Product of elements').add_argument('elements', nargs='+')
    leq = verb('leq', 'Bruhat order y <= w')
    leq.add_argument('y')
    leq.add_argument('w')

    minrep = verb('minrep', 'Minimal or maximal coset representative modulo --parabolic')
    minrep.add_argument('element')
    minrep.add_argument('--side', choices=['left', 'right'], default='left', help='W_A w (left) or w W_A (right)')
    minrep.add_argument('--max', action='store_true', help='Maximal instead of minimal representative')

    for name, help_text in [('wl', 'Minimal element of W t_lambda'), ('wr', 'Minimal element of t_lambda W')]:
        verb(name, help_text).add_argument('--lambda', dest='lam', help='Coweight such as [1,0]')

    label = verb('steinberg-label', 'Label y t_{w0(mu)}')
    label.add_argument('element')
    label.add_argument('--mu', help='Dominant coweight')

    enumerate_parser = verb('enumerate-restricted', 'Restricted elements of ^A W^S in the box')
    enumerate_parser.add_argument('--minimal', action='store_true', help='Only Bruhat-minimal ones')

    for name, help_text, targets in [('orbit-dim', 'Orbit dimension', ['target']),
                                     ('closure-leq', 'Closure order on orbits', ['a', 'b'])]:
        orbit = verb(name, help_text)
        for target in targets:
            orbit.add_argument(target, help='Element, or dominant coweight for spherical labels')
        orbit.add_argument('--space', choices=list(SPACES), default='Gr')
        orbit.add_argument('--flavor', choices=list(FLAVORS), default='iwahori')

    mv = verb('mv-dim', 'Gr^lambda cap S_mu or T_mu')
    mv.add_argument('--side', choices=['S', 'T'], default='S')
    mv.add_argument('--lambda', dest='lam', help='Dominant coweight')
    mv.add_argument('--mu', help='Coweight')

    semiinf = verb('semiinf-bound', 'Bound for (w S_nu) cap Gr_y')
    semiinf.add_argument('element')
    semiinf.add_argument('--nu', help='Coweight')

    verb('cs-bound', 'Bound for S_mu cap T_0').add_argument('--mu', help='Coweight')

    fiber = verb('fiber-bound', 'Convolution fiber bound <rho, mu + eta>')
    fiber.add_argument('element')
    fiber.add_argument('--mu', help='Dominant coweight')
    fiber.add_argument('--eta', help='Coweight')
    fiber.add_argument('--strata', action='store_true', help='List the semi-infinite strata')

    whit = verb('whit-obstruction', 'Fiber estimate after translating by w_A')
    whit.add_argument('element')
    whit.add_argument('--mu', help='Dominant coweight')

    plot = verb('plot-alcoves', 'SVG picture of the alcoves (rank 2)')
    plot.add_argument('--bound', type=int, default=2, help='Window [-bound, bound]^2')
    plot.add_argument('--highlight', action='append', help='Element whose w^-1(A_fund) is marked')
    plot.add_argument('--out', help='Output file; bare names go to the output directory')

    verify = verb('verify', 'Run a lemma sweep')
    verify.add_argument('lemma', help=f'One of: {", ".join(LEMMAS)}, all')
    verify.add_argument('--save', action='store_true', help='Write the report and metadata to the output directory')
    verify.add_argument('--samples', type=int, default=10000, help='Sample count for lengths-add')
    verify.add_argument('--seed', type=int, default=0, help='Seed for sampled sweeps')
    return parser


def run_query(argv: Sequence[str], settings: Optional[Settings] = None) -> QueryResult:
    """Parse argv, run one verb and return its rendered output"""
    settings = settings or load_settings()
    argv = list(argv)
    if not argv or argv[0].startswith("-"):
        if argv and argv[0] in ("-h", "--help"):
            return QueryResult(build_parser(settings).format_help())
        raise UsageError(f"Expected a verb first. Known verbs: {' '.join(VERBS)}")
    if argv[0] not in VERBS:
        raise UnknownVerb(f"Unknown verb '{argv[0]}'. Known verbs: {' '.join(VERBS)}")

    args = build_parser(settings).parse_args(argv)
    ctx = WeylContext.load(args.datum, settings)
    if args.verb == "verify":
        return _cmd_verify(ctx, args, settings)
    value = COMMANDS[args.verb](ctx, args)
    return QueryResult(_render(ctx, value, args.format))


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        result = run_query(argv)
    except UsageError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 1
    except DomainError as e:
        print(f"❌ {e}", file=sys.stderr)
        return 2
    except (AffWeylError, ArithmeticError) as e:
        print(f"❌ Internal error: {e}", file=sys.stderr)
        return 2
    except SystemExit as e:
        # --help inside a verb
        return e.code if isinstance(e.code, int) else 0
    if result.text:
        print(result.text)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
