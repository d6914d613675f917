# elemdiv command line: certified reductions, range probes, report verification.
import argparse
import sys
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, PositiveInt, ValidationError

from ed_config import get_config, set_config_file
from ed_errors import (ElemDivError, HypothesisFailed, IdentityViolation, InvalidWitness,
                       NotTwoSidedUnimodular, NotUnimodular, ReductionFailed, SearchExhausted)
from ed_logger import get_logger
from ed_util import dumps_canonical, matrix_from_json, read_json, write_json
from element_parser import parse_element_list
from oracle import CONDITIONS, exhaustive_witness_oracle, minor_gcd_factors
from property_sweep import SWEEP_KINDS, run_sweep
from range_probes import (check_unit_ideal_product, construct_simple_range2_witness,
                          find_komarnytsky_violation, find_simple_range2_witness,
                          find_stable_range1_witness, find_stable_range2_witness,
                          is_unimodular_row, simple_degree, witness_from_reduction)
from reduction import canonical_2x2, diagonal_reduce, hermite_triangularize
from report_schema import FORMS, PROBE_CONDITIONS
from report_view import ReportView
from reports import (probe_report, reduction_report, verify_probe_report, verify_reduction_report,
                     witness_to_json)
from ring_instances import RingSpec, make_ring
from ring_matrix import EquivalenceCertificate, verify_certificate
from run_logger import get_run_logger, log_run

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# probe condition -> number of input elements (None: any positive count)
PROBE_ARITY = {
    "unimodular": None, "sr1": 2, "sr2": 3, "simple2": 3, "nsimple": 1,
    "unit-product": 2, "construction": 3, "from-reduction": 3, "komarnytsky": 0,
}


class RunOptions(BaseModel):
    """Resolved options of one command; written into every report."""
    model_config = ConfigDict(frozen=True, extra="ignore")

    verb: str
    ring: Optional[Dict[str, Any]] = None
    matrix: Optional[str] = None
    form: Optional[str] = None
    kind: Optional[str] = None
    elements: Optional[str] = None
    bound: Optional[PositiveInt] = None
    n_max: Optional[PositiveInt] = None
    report: Optional[str] = None
    seed: Optional[int] = None
    count: Optional[PositiveInt] = None
    workers: Optional[PositiveInt] = None
    max_modulus: Optional[PositiveInt] = None
    days: Optional[PositiveInt] = None

    def for_report(self) -> Dict[str, Any]:
        return self.model_dump(exclude_none=True)


def _emit(data: Dict[str, Any], output: Optional[str]):
    if output:
        write_json(output, data)
        get_logger().info(f"report written to {output}")
    else:
        sys.stdout.write(dumps_canonical(data))


def _ring_from(options: RunOptions):
    if options.ring is None:
        raise ElemDivError("--ring is required")
    return make_ring(RingSpec.from_json(options.ring))


def _load_matrix(options: RunOptions, ring=None):
    if options.matrix is None:
        raise ElemDivError("--matrix is required")
    data = read_json(options.matrix)
    a = matrix_from_json(data, ring)
    if ring is not None and RingSpec.from_json(data["ring"]).to_json() != RingSpec.from_json(
            options.ring).to_json():
        raise ElemDivError(f"--ring does not match the ring of {options.matrix}")
    return a


# --- verbs ---

def cmd_reduce(options: RunOptions, output: Optional[str], view: Optional[ReportView]) -> int:
    ring = _ring_from(options) if options.ring is not None else None
    a = _load_matrix(options, ring)
    form = options.form or "smith"
    try:
        if form == "hermite":
            cert = hermite_triangularize(a)
            report = None
            verified = verify_certificate(a, cert) and cert.D.is_upper_triangular()
        elif form == "dk2x2":
            cert, report = canonical_2x2(a, options.bound)
            verified = verify_certificate(a, cert)
        else:
            cert, report = diagonal_reduce(a, options.bound)
            verified = verify_certificate(a, cert)
    except ReductionFailed as e:
        partial = e.certificate if isinstance(e.certificate, EquivalenceCertificate) else None
        if partial is not None:
            data = reduction_report(partial, None, form, options.for_report(), False)
            _emit(data, output)
        raise
    data = reduction_report(cert, report, form, options.for_report(), verified)
    _emit(data, output)
    if view is not None:
        view.show_reduction(data)
    get_logger().info(f"{form} reduction of {a.rows}x{a.cols} over {a.ring.descriptor}: "
                      f"{'verified' if verified else 'NOT verified'}")
    return EXIT_OK if verified else EXIT_FAILED


def _run_probe(kind: str, ring, elems, options: RunOptions):
    """(witness, bound, status) for one probe."""
    config = get_config()
    bound = options.bound or config.search_bound()
    if kind == "unimodular":
        return {"unimodular": is_unimodular_row(list(elems))}, bound, "found"
    if kind == "sr1":
        witness = find_stable_range1_witness(*elems, bound=bound)
    elif kind == "sr2":
        witness = find_stable_range2_witness(*elems, bound=bound)
    elif kind == "simple2":
        witness = find_simple_range2_witness(*elems, bound=bound)
    elif kind == "nsimple":
        bound = options.bound or config.coeff_bound()
        result = simple_degree(elems[0], options.n_max, bound)
        witness = result if result.n is not None else None
    elif kind == "unit-product":
        holds = check_unit_ideal_product(*elems)
        return {"holds": holds}, bound, "found" if holds else "counterexample"
    elif kind == "construction":
        try:
            witness = construct_simple_range2_witness(*elems, bound=bound)
        except HypothesisFailed as e:
            get_logger().warning(str(e))
            return None, bound, "hypothesis_failed"
    elif kind == "from-reduction":
        witness = witness_from_reduction(*elems, bound=bound)
    else:
        witness = find_komarnytsky_violation(ring, bound)
    return witness, bound, "found" if witness is not None else "exhausted"


def cmd_probe(options: RunOptions, output: Optional[str], view: Optional[ReportView]) -> int:
    ring = _ring_from(options)
    kind = options.kind
    elems = parse_element_list(ring, options.elements) if options.elements else ()
    arity = PROBE_ARITY[kind]
    if (arity is None and not elems) or (arity is not None and len(elems) != arity):
        raise ElemDivError(f"probe {kind} takes {arity if arity is not None else 'one or more'} "
                           f"elements, got {len(elems)}")
    witness, bound, status = _run_probe(kind, ring, elems, options)
    data = probe_report(ring, kind, elems, witness, bound, status, options.for_report())
    _emit(data, output)
    if view is not None:
        view.show_probe(data)
    get_logger().info(f"probe {kind} over {ring.descriptor}: {status}")
    if status == "exhausted":
        raise SearchExhausted(f"no {kind} witness within bound {bound}")
    return EXIT_OK if status == "found" else EXIT_FAILED


def cmd_verify(options: RunOptions, output: Optional[str], view: Optional[ReportView]) -> int:
    if options.report is None:
        raise ElemDivError("--report is required")
    data = read_json(options.report)
    if "condition" in data:
        problems = verify_probe_report(data)
    else:
        matrix_path = options.matrix or data.get("options", {}).get("matrix")
        if matrix_path is None:
            raise ElemDivError("reduction report names no matrix file; pass --matrix")
        a = matrix_from_json(read_json(matrix_path))
        problems = verify_reduction_report(data, a)
    if view is not None:
        view.show_verification(options.report, problems)
    for problem in problems:
        get_logger().error(f"{options.report}: {problem}")
    if not problems:
        get_logger().info(f"{options.report}: verified")
    return EXIT_OK if not problems else EXIT_FAILED


def cmd_oracle(options: RunOptions, output: Optional[str], view: Optional[ReportView]) -> int:
    kind = options.kind or "minors"
    if kind == "minors":
        ring = _ring_from(options) if options.ring is not None else None
        a = _load_matrix(options, ring)
        factors = minor_gcd_factors(a)
        data = {"kind": kind, "factors": [str(e) for e in factors.factors],
                "minor_gcds": [str(e) for e in factors.minor_gcds]}
        if view is not None:
            view.show_oracle("Invariant factors from minors",
                             [[str(k + 1), g, f] for k, (g, f) in enumerate(zip(data["minor_gcds"], data["factors"]))],
                             ["k", "minor gcd", "factor"])
        _emit(data, output)
        return EXIT_OK
    ring = _ring_from(options)
    elems = parse_element_list(ring, options.elements) if options.elements else ()
    result = exhaustive_witness_oracle(ring, kind, elems)
    witness = {"exists": True} if result is True else witness_to_json(result)
    data = {"kind": kind, "inputs": [str(e) for e in elems], "witness": witness}
    if view is not None:
        view.show_oracle(f"Exhaustive {kind} oracle", [[k, str(v)] for k, v in sorted((witness or {}).items())],
                         ["field", "value"])
    _emit(data, output)
    return EXIT_OK if result is not None else EXIT_FAILED


def cmd_sweep(options: RunOptions, output: Optional[str], view: Optional[ReportView]) -> int:
    config = get_config()
    kind = options.kind
    spec_json = options.ring
    if kind in ("unit-product", "komarnytsky") and spec_json is None:
        spec_json = {"kind": "QuatPoly"}
    summary = run_sweep(
        kind, spec_json,
        seed=options.seed or 0,
        count=options.count or config.get_int(config.SWEEP_COUNT_KEY, config.SWEEP_COUNT_DEFAULT),
        bound=options.bound or config.search_bound(),
        workers=options.workers or config.get_int(config.SWEEP_WORKERS_KEY, config.SWEEP_WORKERS_DEFAULT),
        max_modulus=options.max_modulus or 30,
        show_progress=view is not None,
    )
    for example in summary["counterexamples"]:
        get_run_logger().log_run(f"sweep:{kind}", "counterexample", options.for_report(), {"case": example})
    if view is not None:
        view.show_sweep(summary)
    _emit(summary, output)
    return EXIT_OK if not summary["counterexamples"] else EXIT_FAILED


def cmd_stats(options: RunOptions, output: Optional[str], view: Optional[ReportView]) -> int:
    stats = get_run_logger().get_run_stats(options.days or 7)
    if view is not None:
        view.show_oracle("Runs", [[k, str(v)] for k, v in sorted(stats["commands"].items())], ["command", "runs"])
    _emit(stats, output)
    return EXIT_OK


COMMANDS = {
    "reduce": cmd_reduce,
    "hermite": cmd_reduce,
    "probe": cmd_probe,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
    "sweep": cmd_sweep,
    "stats": cmd_stats,
}


def _ring_arg(text: str) -> Dict[str, Any]:
    try:
        return RingSpec.from_json(text).to_json()
    except ElemDivError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="elemdiv",
                                     description="Certified elementary-divisor reductions over Bezout rings")
    parser.add_argument('--config', help='configuration file (default: elemdiv.conf if present)')
    parser.add_argument('--output', '-o', help='write the JSON result here instead of stdout')
    parser.add_argument('--table', action='store_true', help='also render the result as tables')
    sub = parser.add_subparsers(dest='verb', required=True)

    # accepted after the verb too; SUPPRESS keeps a value given before it
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument('--output', '-o', default=argparse.SUPPRESS,
                        help='write the JSON result here instead of stdout')
    shared.add_argument('--table', action='store_true', default=argparse.SUPPRESS,
                        help='also render the result as tables')

    def common(p, ring_required=False):
        p.add_argument('--ring', type=_ring_arg, required=ring_required,
                       help='ring spec as JSON, e.g. \'{"kind":"IntMod","params":{"n":12}}\'')
        p.add_argument('--bound', type=int, help='candidate bound for witness searches')

    p = sub.add_parser('reduce', parents=[shared], help='diagonal reduction with certificate')
    common(p)
    p.add_argument('--matrix', required=True, help='matrix file (JSON)')
    p.add_argument('--form', choices=FORMS, default='smith')

    p = sub.add_parser('hermite', parents=[shared], help='triangular form with certificate')
    common(p)
    p.add_argument('--matrix', required=True, help='matrix file (JSON)')

    p = sub.add_parser('probe', parents=[shared], help='range-condition witness probe')
    common(p, ring_required=True)
    p.add_argument('--kind', choices=PROBE_CONDITIONS, required=True)
    p.add_argument('--elements', help='comma-separated elements, e.g. "2,3,4"')
    p.add_argument('--n-max', type=int, help='largest n tried by the nsimple probe')

    p = sub.add_parser('verify', parents=[shared], help='re-check a reduction or probe report')
    p.add_argument('--report', required=True)
    p.add_argument('--matrix', help='original matrix file (defaults to the one named in the report)')

    p = sub.add_parser('oracle', parents=[shared], help='brute-force oracles')
    common(p)
    p.add_argument('--kind', choices=("minors",) + CONDITIONS, default='minors')
    p.add_argument('--matrix', help='matrix file for the minors oracle')
    p.add_argument('--elements', help='comma-separated elements')

    p = sub.add_parser('sweep', parents=[shared], help='bulk property sweep')
    common(p)
    p.add_argument('--kind', choices=SWEEP_KINDS, required=True)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--count', type=int)
    p.add_argument('--workers', type=int)
    p.add_argument('--max-modulus', type=int, help='largest n for the construction sweep over Z/n')

    p = sub.add_parser('stats', parents=[shared], help='summarize the run log')
    p.add_argument('--days', type=int, default=7)
    return parser


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_arguments(argv)
    if args.config:
        try:
            set_config_file(args.config)
        except FileNotFoundError as e:
            get_logger().error(str(e))
            return EXIT_USAGE

    values = {k: v for k, v in vars(args).items() if k not in ("config", "output", "table")}
    if args.verb == "hermite":
        values["form"] = "hermite"
    try:
        options = RunOptions(**values)
    except ValidationError as e:
        get_logger().error(f"invalid options: {e}")
        return EXIT_USAGE

    view = ReportView() if args.table else None
    if view is not None:
        get_logger().banner(f"elemdiv {args.verb}")
    try:
        status = COMMANDS[args.verb](options, args.output, view)
    except (ReductionFailed, HypothesisFailed, IdentityViolation, SearchExhausted,
            InvalidWitness, NotUnimodular, NotTwoSidedUnimodular) as e:
        get_logger().error(f"{args.verb}: {e}")
        log_run(args.verb, "failed", options.for_report(), {"error": str(e)})
        return EXIT_FAILED
    except (ElemDivError, FileNotFoundError, ValueError) as e:
        get_logger().error(f"{args.verb}: {e}")
        log_run(args.verb, "usage", options.for_report(), {"error": str(e)})
        return EXIT_USAGE
    log_run(args.verb, "ok" if status == EXIT_OK else "failed", options.for_report())
    return status


if __name__ == "__main__":
    sys.exit(main())
