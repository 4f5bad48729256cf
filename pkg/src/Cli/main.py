#!/usr/bin/env python3
"""
Command line interface for constructing the quantum algebras and running
their verifications.

Every subcommand writes one report to standard output (JSON by default, CSV
for Hilbert and weight tables on request, plain text for normal forms) and
logs to standard error. Exit codes: 0 when everything checked passes, 1 on
a verification failure or an unexpected error, 2 on usage or input errors.
"""

import argparse
import json
import logging
import os
import sys
from datetime import datetime
from math import comb
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from dotenv import load_dotenv
from json_repair import repair_json

from src.BraidedMatrices import check_central, check_coinvariant, phi_tau2_identity, rea_presentation, trace_power, verify_rea_coaction
from src.FreeAlgebra import AlgebraPresentation, complete, format_word, parse_polynomial
from src.Models.errors import (
    InvalidParameterError,
    InvalidScalarError,
    InvalidXiSpecError,
    NotInKError,
    OrientationError,
    PolynomialParseError,
    RelationViolationError,
)
from src.Models.report import CheckReport, CheckResult
from src.Models.tables import HilbertTable
from src.Models.xi_spec import XiSpec
from src.PodlesSphere import parameter_invariance_check, sphere_hilbert, sphere_quotient, symbolic_sphere
from src.QuantumMatrices import check_det_central, check_det_grouplike, frt_presentation, tau, tau_at_xi, verify_bialgebra
from src.QuantumSL import sl_presentation, verify_hopf
from src.Quotients import (
    CentralQuotient,
    check_two_sided,
    classical_oracle,
    compare_with_oracle,
    hilbert,
    nilcone,
    nilcone_phi,
    orbit_quotient_n2,
    weight_table,
)
from src.ReCharacters import jordan_obstruction_sweep, scan_family
from src.RMatrix import check_braid, check_hecke
from src.Scalars import format_scalar, to_scalar

load_dotenv()

INPUT_ERRORS = (InvalidScalarError, InvalidParameterError, InvalidXiSpecError, PolynomialParseError, NotInKError)
VERIFICATION_ERRORS = (OrientationError, RelationViolationError)

CHECKS = (
    "hecke",
    "braid",
    "pbw",
    "hopf",
    "bialgebra",
    "det",
    "central",
    "coinvariant",
    "coaction",
    "phi-tau2",
    "flatness",
    "two-sided",
)


def setupLogging(logLevel: str, outputDir: Optional[str] = None) -> logging.Logger:
    """
    Set up logging for every package under src.

    Args:
        logLevel (str): Logging level ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')
        outputDir (str, optional): Directory where log files should be saved

    Returns:
        logging.Logger: Configured logger instance
    """
    numericLevel = getattr(logging, logLevel.upper(), None)
    if not isinstance(numericLevel, int):
        raise InvalidParameterError(f"Invalid log level: {logLevel}")

    logger = logging.getLogger('src')
    logger.setLevel(numericLevel)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    consoleHandler = logging.StreamHandler(sys.stderr)
    consoleHandler.setLevel(numericLevel)
    consoleHandler.setFormatter(formatter)
    logger.addHandler(consoleHandler)

    if outputDir:
        outputPath = Path(outputDir)
        outputPath.mkdir(parents=True, exist_ok=True)

        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        logFile = outputPath / f"quantumorbits_{timestamp}.log"

        fileHandler = logging.FileHandler(logFile)
        fileHandler.setLevel(numericLevel)
        fileHandler.setFormatter(formatter)
        logger.addHandler(fileHandler)

        logger.info(f"Logging to file: {logFile}")

    return logger


def emitJson(payload: Any) -> None:
    print(json.dumps(payload, indent=2))


def emitReport(report: CheckReport) -> int:
    emitJson(report.to_dict())
    return 0 if report.passed else 1


def loadPresentation(algebra: str, n: int, atOne: bool = False) -> AlgebraPresentation:
    builders: Dict[str, Callable[..., AlgebraPresentation]] = {
        'frt': frt_presentation,
        'sl': sl_presentation,
        'rea': rea_presentation,
    }
    return builders[algebra](n, at_one=atOne)


def loadQuotient(args: argparse.Namespace) -> CentralQuotient:
    """
    Build the quotient named by --quotient.

    Raises:
        InvalidXiSpecError: If --quotient orbit is given without a valid --xi
    """
    if args.quotient == 'nilcone':
        return nilcone(args.n)
    if args.quotient == 'nilcone-phi':
        return nilcone_phi(args.n)
    if args.quotient == 'orbit':
        if not args.xi:
            raise InvalidXiSpecError("--quotient orbit needs --xi")
        return orbit_quotient_n2(XiSpec.from_json(args.xi))
    raise InvalidParameterError(f"Unknown quotient: {args.quotient}")


def parseJsonArgument(text: str, name: str) -> Any:
    try:
        return repair_json(text, return_objects=True)
    except Exception as e:
        raise InvalidParameterError(f"Cannot read {name} JSON: {text!r}") from e


def relationsCommand(args: argparse.Namespace, logger: logging.Logger) -> int:
    """Print the oriented defining relations of an algebra, optionally after completion."""
    a = loadPresentation(args.algebra, args.n, args.q_at_one)
    payload: Dict[str, Any] = {"algebra": a.name, "n": a.n, "at_one": a.at_one}
    if args.complete:
        a, report = complete(a, args.max_deg)
        payload["completion"] = report.to_dict()
    payload["rules"] = [{"lhs": format_word(rule.lhs), "rhs": a.format(rule.rhs)} for rule in a.rules]
    payload["relations"] = [f"{a.format(relation)} = 0" for relation in a.relations()]
    logger.info(f"{a.name} n={a.n}: {len(a.rules)} rules")
    emitJson(payload)
    return 0


def nfCommand(args: argparse.Namespace, logger: logging.Logger) -> int:
    """Reduce a polynomial to normal form."""
    a = loadPresentation(args.algebra, args.n, args.q_at_one)
    p = parse_polynomial(args.polynomial)
    unknown = p.generators() - set(a.generators)
    if unknown:
        names = ", ".join(sorted(str(g) for g in unknown))
        raise PolynomialParseError(f"Generators not in {a.name} (n={a.n}): {names}")
    result = a.normal_form(p)
    if args.json:
        emitJson({"input": args.polynomial, "normal_form": a.format(result), "terms": a.to_json(result)})
    else:
        print(a.format(result))
    return 0


def hilbertCommand(args: argparse.Namespace, logger: logging.Logger) -> int:
    """Hilbert table of a quotient, or of its classical counterpart with --q-at-one."""
    if args.quotient == 'sphere':
        sq = sphere_quotient(to_scalar(args.t), to_scalar(args.d))
        if args.q_at_one:
            sq = sq.specialize_at_one()
        table = sphere_hilbert(sq, args.max_deg)
    else:
        qt = loadQuotient(args)
        table = classical_oracle(qt, args.max_deg)[0] if args.q_at_one else hilbert(qt, args.max_deg)
    if args.csv:
        sys.stdout.write(table.to_csv())
    else:
        emitJson(HilbertTable(table.dims).to_dict())
    return 0


def weightsCommand(args: argparse.Namespace, logger: logging.Logger) -> int:
    """Weight tables of a quotient for degrees 0..max-deg."""
    qt = loadQuotient(args)
    if args.q_at_one:
        tables = classical_oracle(qt, args.max_deg)[1]
    else:
        tables = [weight_table(qt, d) for d in range(args.max_deg + 1)]
    if args.csv:
        sys.stdout.write("".join(table.to_csv(header=index == 0) for index, table in enumerate(tables)))
    else:
        emitJson({"tables": [{"degree": t.degree, "weights": t.to_dict()["weights"]} for t in tables]})
    return 0


def _residualReport(title: str, identity: str, outcome) -> CheckReport:
    holds, residual = outcome
    report = CheckReport(title)
    report.add(CheckResult.from_residual(identity, 0 if holds else json.dumps(residual.to_json())))
    return report


def _pbwReport(args: argparse.Namespace) -> CheckReport:
    if args.algebra not in ('frt', 'rea'):
        raise InvalidParameterError("The PBW check compares against the polynomial ring and needs --algebra frt or rea")
    a = loadPresentation(args.algebra, args.n, args.q_at_one)
    cap = max(args.max_deg, 3)
    _, completion = complete(a, cap)
    report = CheckReport(f"pbw {a.name} n={a.n}", details={"completion": completion.to_dict()})
    report.add(
        CheckResult.from_residual(
            f"overlaps up to degree {cap} resolve",
            0 if completion.confluent_as_given else f"{len(completion.added_rules)} rules added",
        )
    )
    size = a.n * a.n
    for d in range(args.max_deg + 1):
        count = a.irreducible_word_count(d)
        expected = comb(size + d - 1, d)
        report.add(
            CheckResult.from_residual(
                f"irreducible words of degree {d} = C({size + d - 1},{d})",
                0 if count == expected else f"{count} vs {expected}",
            )
        )
    return report


def _traceReports(args: argparse.Namespace, coinvariant: bool) -> CheckReport:
    a = rea_presentation(args.n)
    kind = "coinvariant" if coinvariant else "central"
    report = CheckReport(f"{kind} n={args.n}")
    for k in range(1, args.k + 1):
        element = trace_power(k, args.n, a)
        if coinvariant:
            holds, residual = check_coinvariant(element, args.n, a)
            text = str(residual)
        else:
            holds, residuals = check_central(element, args.n, a)
            text = "; ".join(f"[{g}]: {a.format(r)}" for g, r in residuals.items())
        report.add(CheckResult.from_residual(f"Tr_q(L^{k}) is {kind}", 0 if holds else text))
    return report


def checkCommand(args: argparse.Namespace, logger: logging.Logger) -> int:
    """Run one of the verification suites."""
    what = args.what
    if what == 'hecke':
        report = _residualReport(f"hecke n={args.n}", "(R-hat - q)(R-hat + q^-1) = 0", check_hecke(args.n))
    elif what == 'braid':
        report = _residualReport(f"braid n={args.n}", "R-hat_12 R-hat_23 R-hat_12 = R-hat_23 R-hat_12 R-hat_23", check_braid(args.n))
    elif what == 'pbw':
        report = _pbwReport(args)
    elif what == 'hopf':
        report = verify_hopf(args.n, args.progress)
    elif what == 'bialgebra':
        report = verify_bialgebra(args.n, args.progress)
    elif what == 'det':
        a = frt_presentation(args.n)
        report = check_det_central(a)
        report.extend(check_det_grouplike(a))
    elif what in ('central', 'coinvariant'):
        report = _traceReports(args, what == 'coinvariant')
    elif what == 'coaction':
        report = verify_rea_coaction(args.n)
    elif what == 'phi-tau2':
        report = phi_tau2_identity(args.n, to_scalar(args.c1), to_scalar(args.c2), args.max_deg)
    elif what == 'flatness':
        report = compare_with_oracle(loadQuotient(args), args.max_deg)
    else:
        report = check_two_sided(loadQuotient(args), args.max_deg)
    if not report.passed:
        logger.warning(f"Check {what} failed: {len(report.failures)} identities do not hold")
    return emitReport(report)


def reCheckCommand(args: argparse.Namespace, logger: logging.Logger) -> int:
    """Reflection equation check for a constant matrix or a parametric family."""
    if args.sweep:
        return emitReport(jordan_obstruction_sweep())
    if not args.matrix:
        raise InvalidParameterError("re-check needs --matrix or --sweep")
    matrix = parseJsonArgument(args.matrix, "--matrix")
    if not isinstance(matrix, list) or not all(isinstance(row, list) for row in matrix):
        raise InvalidParameterError("--matrix must be a JSON list of rows")
    matrix = [[v if isinstance(v, (int, str)) else str(v) for v in row] for row in matrix]
    residuals = scan_family(matrix)
    payload = {"solution": not residuals, "residuals": [r.to_dict() for r in residuals]}
    logger.info(f"re-check: {len(residuals)} nonzero residual entries")
    emitJson(payload)
    return 0


def podlesCommand(args: argparse.Namespace, logger: logging.Logger) -> int:
    """Sphere relations and Podles parameters, or the parameter invariance check with --pairs."""
    if args.pairs:
        pairs = parseJsonArgument(args.pairs, "--pairs")
        if not isinstance(pairs, list) or not all(isinstance(p, list) and len(p) == 2 for p in pairs):
            raise InvalidParameterError("--pairs must be a JSON list of [t, d] pairs")
        return emitReport(parameter_invariance_check([(str(t), str(d)) for t, d in pairs]))
    if args.symbolic:
        emitJson(symbolic_sphere().to_dict())
        return 0
    sq = sphere_quotient(to_scalar(args.t), to_scalar(args.d))
    if args.q_at_one:
        sq = sq.specialize_at_one()
    emitJson(sq.to_dict())
    return 0


def tauCommand(args: argparse.Namespace, logger: logging.Logger) -> int:
    """tau_d in F_q(M), or its value at J(xi) with --xi."""
    if args.xi:
        xi = XiSpec.from_json(args.xi)
        value = tau_at_xi(args.d, xi)
        emitJson({"d": args.d, "xi": xi.to_dict(), "value": format_scalar(value)})
    else:
        a = frt_presentation(args.n)
        emitJson({"d": args.d, "n": args.n, "tau": a.format(tau(args.d, a))})
    return 0


COMMANDS: Dict[str, Callable[[argparse.Namespace, logging.Logger], int]] = {
    'relations': relationsCommand,
    'nf': nfCommand,
    'hilbert': hilbertCommand,
    'weights': weightsCommand,
    'check': checkCommand,
    're-check': reCheckCommand,
    'podles': podlesCommand,
    'tau': tauCommand,
}


def buildParser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--log-level',
        default=os.environ.get('QORBITS_LOG_LEVEL', 'WARNING'),
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
        help='Set the logging level (default: QORBITS_LOG_LEVEL or WARNING)'
    )
    common.add_argument(
        '--logs-dir',
        default=os.environ.get('QORBITS_LOGS_DIR'),
        help='Directory where log files should be saved (optional)'
    )
    common.add_argument(
        '--progress',
        action='store_true',
        help='Show progress bars during long computations'
    )
    common.add_argument('--n', type=int, default=2, help='Matrix size (default: 2)')
    common.add_argument(
        '--q-at-one',
        action='store_true',
        help='Run the classical q=1 path'
    )
    formats = common.add_mutually_exclusive_group()
    formats.add_argument('--json', action='store_true', help='JSON output (default for reports)')
    formats.add_argument('--csv', action='store_true', help='CSV output (Hilbert and weight tables)')

    quotient = argparse.ArgumentParser(add_help=False)
    quotient.add_argument(
        '--quotient',
        default='nilcone',
        choices=['nilcone', 'nilcone-phi', 'orbit', 'sphere'],
        help='Quotient of L_q(M) (default: nilcone; sphere only for hilbert)'
    )
    quotient.add_argument('--xi', help="Jordan type for --quotient orbit, e.g. '{\"n\":2,\"r\":0,\"eigenvalues\":[\"2\",\"3\"]}'")

    parser = argparse.ArgumentParser(
        prog='quantumorbits',
        description='Quantum matrix algebras, reflection equation quotients and their flatness checks'
    )
    subparsers = parser.add_subparsers(dest='command', help='Command to run')

    relationsParser = subparsers.add_parser('relations', parents=[common], help='Print the defining relations of an algebra')
    relationsParser.add_argument('--algebra', default='rea', choices=['frt', 'sl', 'rea'], help='Algebra (default: rea)')
    relationsParser.add_argument('--complete', action='store_true', help='Run overlap completion first')
    relationsParser.add_argument('--max-deg', type=int, default=None, help='Completion degree cap')

    nfParser = subparsers.add_parser('nf', parents=[common], help='Reduce a polynomial to normal form')
    nfParser.add_argument('--algebra', default='frt', choices=['frt', 'sl', 'rea'], help='Algebra (default: frt)')
    nfParser.add_argument('polynomial', help='Polynomial text, e.g. "x[1,2]*x[1,1]"')

    hilbertParser = subparsers.add_parser('hilbert', parents=[common, quotient], help='Hilbert table of a quotient')
    hilbertParser.add_argument('--max-deg', type=int, default=4, help='Largest degree (default: 4)')
    hilbertParser.add_argument('--t', default='0', help='Trace value for the sphere quotient')
    hilbertParser.add_argument('--d', default='0', help='Phi(tau_2) value for the sphere quotient')

    weightsParser = subparsers.add_parser('weights', parents=[common, quotient], help='Weight tables of a quotient')
    weightsParser.add_argument('--max-deg', type=int, default=2, help='Largest degree (default: 2)')

    checkParser = subparsers.add_parser('check', parents=[common, quotient], help='Run a verification suite')
    checkParser.add_argument('--what', required=True, choices=CHECKS, help='What to verify')
    checkParser.add_argument('--algebra', default='frt', choices=['frt', 'sl', 'rea'], help='Algebra for --what pbw')
    checkParser.add_argument('--k', type=int, default=2, help='Largest trace power for central/coinvariant (default: 2)')
    checkParser.add_argument('--max-deg', type=int, default=4, help='Degree cap (default: 4)')
    checkParser.add_argument('--c1', default='0', help='Trace constant for phi-tau2')
    checkParser.add_argument('--c2', default='0', help='Phi(tau_2) constant for phi-tau2')

    reParser = subparsers.add_parser('re-check', parents=[common], help='Reflection equation check for a constant matrix')
    reParser.add_argument('--matrix', help="Matrix JSON, e.g. '[[0,1],[0,0]]'; symbols other than q are parameters")
    reParser.add_argument('--sweep', action='store_true', help='Run the n=3 Jordan obstruction sweep')

    podlesParser = subparsers.add_parser('podles', parents=[common], help='Podles sphere relations and parameters')
    podlesParser.add_argument('--t', default='0', help='Trace value t (default: 0)')
    podlesParser.add_argument('--d', default='0', help='Phi(tau_2) value d (default: 0)')
    podlesParser.add_argument('--pairs', help="Run the parameter invariance check on '[[t,d], ...]'")
    podlesParser.add_argument('--symbolic', action='store_true', help='Relations with free parameters alpha, beta')

    tauParser = subparsers.add_parser('tau', parents=[common], help='The coinvariant tau_d, or its value at J(xi)')
    tauParser.add_argument('--d', type=int, default=1, help='Degree d (default: 1)')
    tauParser.add_argument('--xi', help='Jordan type JSON')

    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, run one command and return its exit code.

    Args:
        argv: Arguments without the program name (default: sys.argv[1:])
    """
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    if not args.command:
        parser.print_help(sys.stderr)
        return 2

    try:
        logger = setupLogging(args.log_level, args.logs_dir)
    except InvalidParameterError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    if args.progress:
        os.environ['QORBITS_PROGRESS'] = '1'

    try:
        return COMMANDS[args.command](args, logger)
    except INPUT_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        return 2
    except VERIFICATION_ERRORS as e:
        logger.error(f"{args.command}: {e}")
        return 1
    except Exception as e:
        logger.error(f"Command {args.command} failed: {e}", exc_info=True)
        return 1


def main() -> int:
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
