# -*- coding: utf-8 -*-

# Copyright (C) 2026 The appellkit developers
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import sys, copy, logging, logging.handlers, optparse

from . import common, export, identities, reductions
from .common import AppellError, UsageError, APP_NAME, VERSION, LOG_FORMAT, MAX_LOG_SIZE, MAX_LOG_COUNT
from .configmanager import get_config_manager, RunConfig, OUTPUT_FORMAT, LOG_FILE, VERBOSE, MAX_INDEX, GRID_START
from .exactcore import parse_rational, parse_rational_list, format_rational
from .hyperappell import FamilySpec, HyperParams, appell_poly, generating_series, delta_array
from .polyfps import LaurentPoly

_logger = logging.getLogger("cli")

USAGE = """%prog COMMAND [TARGET] [options]

Commands:
  coeffs                 ascending coefficients of A_n^(k)(m,x)
  eval                   exact value A_n^(k)(m,x0)
  verify IDENTITY        check an identity over a range of n
  genfun                 coefficients of the generating series A(t)
  connect                connection coefficients (see --direction)
  reduce KIND            family parameters of a classical special case
  export                 re-emit a polynomial as json, latex, csv or plain

Identities: """ + ", ".join([
    "appell", "corollary1", "addition", "multiplication", "interchange", "convolution",
    "parity", "composed", "representations", "connection", "pfq-derivative"]) + """
Reductions: hermite, gould-hopper"""


def check_rational(option, opt, value):
    try:
        return parse_rational(value)
    except UsageError:
        raise optparse.OptionValueError("option %s: invalid rational value: %r" % (opt, value))


def check_rationals(option, opt, value):
    try:
        return parse_rational_list(value)
    except UsageError:
        raise optparse.OptionValueError("option %s: invalid rational list: %r" % (opt, value))


class RationalOption(optparse.Option):
    TYPES = optparse.Option.TYPES + ("rational", "rationals")
    TYPE_CHECKER = copy.copy(optparse.Option.TYPE_CHECKER)
    TYPE_CHECKER["rational"] = check_rational
    TYPE_CHECKER["rationals"] = check_rationals


class ParserExit(Exception):
    """
    Raised in place of sys.exit after --help or --version has been printed.
    """

    def __init__(self, status):
        Exception.__init__(self, status)
        self.status = status


class CommandParser(optparse.OptionParser):
    """
    Writes help and version text to the given stream and never exits the process.
    """

    def __init__(self, stdout=None, **kwargs):
        optparse.OptionParser.__init__(self, **kwargs)
        self.stdout = stdout

    def print_help(self, file=None):
        optparse.OptionParser.print_help(self, file if file is not None else self.stdout)

    def print_version(self, file=None):
        optparse.OptionParser.print_version(self, file if file is not None else self.stdout)

    def exit(self, status=0, msg=None):
        if msg:
            raise UsageError(msg.strip())
        raise ParserExit(status)

    def error(self, msg):
        raise UsageError(msg)


def build_parser(stdout=None):
    p = CommandParser(stdout, usage=USAGE, version="%prog " + VERSION, option_class=RationalOption, prog=APP_NAME)
    p.add_option("--a", dest="upper", type="rationals", default=[], help="Upper parameters, comma separated")
    p.add_option("--b", dest="lower", type="rationals", default=[], help="Lower parameters, comma separated")
    p.add_option("--k", dest="k", type="int", help="Order k >= 1")
    p.add_option("--m", dest="m", type="rational", help="Family parameter m")
    p.add_option("--n", dest="n", type="int", help="Polynomial index")
    p.add_option("--n-min", dest="nMin", type="int", help="First index of a verify sweep")
    p.add_option("--n-max", dest="nMax", type="int", help="Last index of a verify sweep")
    p.add_option("--k2", dest="k2", type="int", help="Second order for the interchange identity")
    p.add_option("--M", dest="M", type="rational", help="Scale factor for the multiplication identity")
    p.add_option("--x", dest="x0", type="rational", help="Evaluation point")
    p.add_option("--h", dest="h", type="rational", help="Gould-Hopper parameter h")
    p.add_option("--order", dest="order", type="int", help="Truncation order of a series")
    p.add_option("--direction", dest="direction", choices=list(identities.DIRECTIONS),
                 help="Connection direction: %s" % ", ".join(identities.DIRECTIONS))
    p.add_option("--f", dest="f", type="rationals", default=[],
                 help="Inner polynomial for the composed identity, ascending coefficients")
    p.add_option("--in", dest="inPath", help="Read a polynomial document (json) from a file, - for stdin")
    p.add_option("--format", dest="outputFormat", choices=list(export.FORMATS), help="Output format")
    p.add_option("--out", dest="outPath", help="Write output to a file instead of stdout")
    p.add_option("--config", dest="config", help="Settings file (json)")
    p.add_option("-l", "--verbose", help="Enable verbose logging", action="store_true", default=False)
    return p


_handler = None


def initialise_logging(verbose, logFile=None):
    global _handler
    rootLogger = logging.getLogger()
    if _handler is not None:
        rootLogger.removeHandler(_handler)

    if verbose:
        rootLogger.setLevel(logging.DEBUG)
        _handler = logging.StreamHandler(sys.stderr)
    elif logFile:
        rootLogger.setLevel(logging.INFO)
        _handler = logging.handlers.RotatingFileHandler(logFile, maxBytes=MAX_LOG_SIZE, backupCount=MAX_LOG_COUNT)
    else:
        rootLogger.setLevel(logging.WARNING)
        _handler = logging.StreamHandler(sys.stderr)

    _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    rootLogger.addHandler(_handler)


def make_run_config(options, args, configManager):
    if not args:
        raise UsageError("no command given")
    command = args[0]
    if command not in COMMANDS:
        raise UsageError("unknown command '%s' (expected one of %s)" % (command, ", ".join(sorted(COMMANDS))))
    target = None
    if command in ("verify", "reduce"):
        if len(args) != 2:
            raise UsageError("command '%s' needs exactly one target" % command)
        target = args[1]
    elif len(args) != 1:
        raise UsageError("unexpected arguments: %s" % " ".join(args[1:]))

    maxIndex = configManager[MAX_INDEX]
    for flag, value in (("--n", options.n), ("--n-min", options.nMin), ("--n-max", options.nMax),
                        ("--order", options.order)):
        if value is not None and (value < 0 or value > maxIndex):
            raise UsageError("option %s: %d is outside 0..%d" % (flag, value, maxIndex))

    return RunConfig(command=command, target=target, upper=tuple(options.upper), lower=tuple(options.lower),
                     k=options.k, m=options.m, n=options.n, nMin=options.nMin, nMax=options.nMax,
                     k2=options.k2, M=options.M, x0=options.x0, h=options.h, order=options.order,
                     direction=options.direction, f=tuple(options.f), inPath=options.inPath,
                     outputFormat=options.outputFormat or configManager[OUTPUT_FORMAT],
                     outPath=options.outPath)


def _require(config, *names):
    for name in names:
        if getattr(config, name) is None:
            flag = {"x0": "--x", "nMax": "--n-max"}.get(name, "--" + name)
            raise UsageError("option %s is required for '%s'" % (flag, config.command))


def family_from(config):
    _require(config, "k", "m")
    return FamilySpec(HyperParams(config.upper, config.lower), config.k, config.m)


def cmd_coeffs(config, configManager):
    spec = family_from(config)
    _require(config, "n")
    poly = appell_poly(spec, config.n)
    return export.render_poly(poly, config.outputFormat or export.FORMAT_JSON, spec, config.n), common.EXIT_OK


def cmd_eval(config, configManager):
    spec = family_from(config)
    _require(config, "n", "x0")
    value = appell_poly(spec, config.n).evaluate(config.x0)
    if config.outputFormat == export.FORMAT_JSON:
        return export.dump_json({"family": spec.to_dict(), "n": config.n, "x": format_rational(config.x0),
                                 "value": format_rational(value)}), common.EXIT_OK
    return format_rational(value), common.EXIT_OK


def _verify_interchange(config, spec, n, configManager):
    _require(config, "k2")
    return identities.check_index_interchange(spec.params, spec.m, spec.k, config.k2, n)


def _verify_multiplication(config, spec, n, configManager):
    _require(config, "M")
    return identities.check_multiplication(spec, n, config.M)


def _verify_composed(config, spec, n, configManager):
    if not config.f:
        raise UsageError("option --f is required for 'verify composed'")
    return identities.check_composed_derivative(spec, n, LaurentPoly(config.f))


def _verify_pfq_derivative(config, spec, n, configManager):
    return identities.check_pfq_derivative(spec.params, delta_array(spec.k, n).entries, n // spec.k)


# identity -> (smallest index, check)
VERIFIERS = {
    "appell": (1, lambda config, spec, n, cm: identities.check_appell_derivative(spec, n)),
    "corollary1": (1, lambda config, spec, n, cm: identities.check_corollary1(spec, n)),
    "addition": (0, lambda config, spec, n, cm: identities.check_addition(spec, n, cm[GRID_START])),
    "multiplication": (0, _verify_multiplication),
    "interchange": (0, _verify_interchange),
    "convolution": (0, lambda config, spec, n, cm: identities.check_convolution(spec, n)),
    "parity": (0, lambda config, spec, n, cm: identities.check_parity(spec, n)),
    "composed": (1, _verify_composed),
    "representations": (0, lambda config, spec, n, cm: identities.check_representations(spec, n)),
    "connection": (0, lambda config, spec, n, cm: identities.check_connection(
        spec, n, config.direction or identities.FAMILY_OVER_MONOMIALS)),
    "pfq-derivative": (0, _verify_pfq_derivative),
    }


def verify_range(config, smallest):
    if config.n is not None:
        return [config.n]
    _require(config, "nMax")
    start = config.nMin if config.nMin is not None else smallest
    return list(range(max(start, smallest), config.nMax + 1))


def cmd_verify(config, configManager):
    if config.target not in VERIFIERS:
        raise UsageError("unknown identity '%s' (expected one of %s)" % (config.target, ", ".join(VERIFIERS)))
    spec = family_from(config)
    smallest, check = VERIFIERS[config.target]
    indices = verify_range(config, smallest)
    _logger.debug("Verifying %s for n in %s", config.target, indices)

    reports = [(n, check(config, spec, n, configManager)) for n in indices]
    exitCode = common.EXIT_OK if all(r.holds for n, r in reports) else common.EXIT_IDENTITY_FAILED

    outputFormat = config.outputFormat or export.FORMAT_PLAIN
    if outputFormat == export.FORMAT_JSON:
        rows = [{"identity": config.target, "n": n, "holds": r.holds, "vs_oracle": r.vsOracle, "note": r.note}
                for n, r in reports]
        return export.dump_json(rows), exitCode
    lines = ["%s n=%d: %s" % (config.target, n, r.summary()) for n, r in reports]
    if not lines:
        return None, exitCode
    return "\n".join(lines), exitCode


def cmd_genfun(config, configManager):
    spec = family_from(config)
    _require(config, "order")
    values = generating_series(spec, config.order).scalar_coefficients()
    return export.render_scalars(values, config.outputFormat or export.FORMAT_JSON, "power"), common.EXIT_OK


def cmd_connect(config, configManager):
    spec = family_from(config)
    _require(config, "order")
    direction = config.direction or identities.FAMILY_OVER_MONOMIALS
    values = identities.connection_coefficients(spec, config.order, direction)
    return export.render_scalars(values, config.outputFormat or export.FORMAT_JSON, "power"), common.EXIT_OK


def cmd_reduce(config, configManager):
    kind = config.target.replace("-", "_")
    k = config.k if config.k is not None else 2
    spec = reductions.reduce_spec(kind, k, config.h)
    if (config.outputFormat or export.FORMAT_JSON) == export.FORMAT_JSON:
        data = spec.to_dict()
        ordered = {"k": data["k"], "m": data["m"], "a": data["a"], "b": data["b"]}
        return export.dump_json(ordered), common.EXIT_OK
    return str(spec), common.EXIT_OK


def cmd_export(config, configManager):
    if config.inPath is not None:
        if config.inPath == "-":
            text = sys.stdin.read()
        else:
            try:
                with open(config.inPath, "r") as inFile:
                    text = inFile.read()
            except (IOError, OSError) as e:
                raise UsageError("Cannot read '%s': %s" % (config.inPath, e))
        spec, n, poly = export.parse_json(text)
    else:
        spec = family_from(config)
        _require(config, "n")
        n = config.n
        poly = appell_poly(spec, n)
    return export.render_poly(poly, config.outputFormat or export.FORMAT_JSON, spec, n), common.EXIT_OK


COMMANDS = {
    "coeffs": cmd_coeffs,
    "eval": cmd_eval,
    "verify": cmd_verify,
    "genfun": cmd_genfun,
    "connect": cmd_connect,
    "reduce": cmd_reduce,
    "export": cmd_export,
    }


def write_output(text, outPath, stdout):
    if text is None:
        _logger.debug("Nothing to write")
        return
    if outPath is None:
        stdout.write(text + "\n")
        return
    try:
        with open(outPath, "w") as outFile:
            outFile.write(text + "\n")
    except (IOError, OSError) as e:
        raise UsageError("Cannot write '%s': %s" % (outPath, e))
    _logger.info("Output written to %s", outPath)


def main(argv=None, stdout=None, stderr=None):
    """
    Run one command; returns the process exit code.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    try:
        options, args = build_parser(stdout).parse_args(argv)
        configManager = get_config_manager(options.config)
        initialise_logging(options.verbose or configManager[VERBOSE], configManager[LOG_FILE])
        config = make_run_config(options, args, configManager)
        text, exitCode = COMMANDS[config.command](config, configManager)
        write_output(text, config.outPath, stdout)
        return exitCode
    except ParserExit as e:
        return e.status
    except AppellError as e:
        _logger.debug("Command failed", exc_info=True)
        stderr.write("%s: error: %s\n" % (APP_NAME, e))
        return e.exitCode
    except Exception as e:
        _logger.exception("Internal error running %s: %s", APP_NAME, e)
        stderr.write("%s: internal error: %s\n" % (APP_NAME, e))
        return common.EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
