"""``lcurve`` command line tool.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
exceeded.  Errors are reported on stdout as ``{"error": kind, "message": ...}``.
"""

from __future__ import annotations

import functools
import json
import sys
from pathlib import Path

import click

from lcurve.basis import verify_family, build_family
from lcurve.cache import LPolyCache
from lcurve.curve import curve_make
from lcurve.errors import InputError, LCurveError
from lcurve.expr import parse_poly
from lcurve.finite_field import field_make
from lcurve.linalg import rank_chain
from lcurve.mod2 import charpoly_from_pattern
from lcurve.polynomial import LexFirst, Seeded, factorization_pattern
from lcurve.serialize import curve_from_json, f2_to_json
from lcurve.zeta import DEFAULT_BUDGET, LPolynomial, l_polynomial_with_counts, point_count


class _Exit(Exception):
    def __init__(self, code: int):
        self.code = code


def _emit(obj, pretty: bool) -> None:
    click.echo(json.dumps(obj, indent=2 if pretty else None))


def _fail(exc: LCurveError, pretty: bool, extra: dict | None = None) -> None:
    _emit({"error": exc.kind, "message": str(exc), **(extra or {})}, pretty)
    raise _Exit(exc.exit_code)


def _parse_modulus(text: str | None):
    if not text:
        return None
    text = text.strip()
    try:
        if text.startswith("["):
            return [int(c) for c in json.loads(text)]
        return [int(c) for c in text.replace(",", " ").split()]
    except (ValueError, TypeError):
        raise InputError(f"cannot read field modulus {text!r}") from None


def field_options(fn):
    @click.option("--p", "p", type=int, required=True, help="Odd prime characteristic.")
    @click.option("--f", "f", type=int, default=1, show_default=True, help="Extension degree, q = p^f.")
    @click.option("--field-modulus", default=None, help="Little-endian coefficients of the F_p modulus.")
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        return fn(*args, **kwargs)

    return wrapper


def output_options(fn):
    @click.option("--pretty/--json", default=False, help="Indent JSON output.")
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        return fn(*args, **kwargs)

    return wrapper


def _run(body):
    """Run a subcommand body, mapping library errors to the exit-code contract."""

    @functools.wraps(body)
    def wrapper(*args, **kwargs):
        pretty = kwargs.get("pretty", False)
        try:
            body(*args, **kwargs)
        except _Exit as e:
            sys.exit(e.code)
        except LCurveError as exc:
            try:
                _fail(exc, pretty)
            except _Exit as e:
                sys.exit(e.code)

    return wrapper


def _curve(p, f, field_modulus, curve, curve_json):
    if curve_json:
        text = sys.stdin.read() if curve_json == "-" else Path(curve_json).read_text()
        try:
            return curve_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise InputError(f"curve JSON: {exc}") from None
    if p is None or curve is None:
        raise InputError("give --p and --curve, or --curve-json")
    spec = field_make(p, f, _parse_modulus(field_modulus))
    return curve_make(spec, parse_poly(spec, curve))


@click.group()
def main():
    """L-polynomials of odd-degree hyperelliptic curves over F_q, q odd."""


@main.command()
@click.option("--p", "p", type=int, default=None, help="Odd prime characteristic.")
@click.option("--f", "f", type=int, default=1, show_default=True)
@click.option("--field-modulus", default=None)
@click.option("--curve", default=None, help='Right-hand side, e.g. "x^3 - x + 1".')
@click.option("--curve-json", default=None, help="Curve JSON file ('-' for stdin).")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
@click.option("--cache-path", type=click.Path(dir_okay=False), default=None)
@output_options
@_run
def lpoly(p, f, field_modulus, curve, curve_json, budget, cache_path, pretty):
    """Compute the L-polynomial of y^2 = CURVE."""
    C = _curve(p, f, field_modulus, curve, curve_json)
    cache = LPolyCache(cache_path) if cache_path else None
    hit = cache.get(C) if cache else None
    if hit is None:
        lp, counts = l_polynomial_with_counts(C, budget)
        if cache:
            cache.put(C, lp, counts)
    else:
        lp = hit[0]
    _emit(lp.to_json(), pretty)


@main.command()
@field_options
@click.option("--poly", required=True, help="Polynomial over F_q.")
@output_options
@_run
def frob2(p, f, field_modulus, poly, pretty):
    """Factorization pattern of POLY and Frobenius charpoly on J[2] mod 2."""
    spec = field_make(p, f, _parse_modulus(field_modulus))
    fx = parse_poly(spec, poly)
    pattern = factorization_pattern(fx)
    agg = [[d, m] for d, m in pattern.aggregated()]
    n = fx.degree
    if n < 3 or n % 2 == 0:
        _fail(InputError(f"degree must be odd and >= 3 for the charpoly, got {n}"), pretty, {"pattern": agg})
    out = {
        "pattern": agg,
        "factors": [[d, m] for d, m in pattern.entries],
        "charpoly_mod2": f2_to_json(charpoly_from_pattern(pattern)),
    }
    _emit(out, pretty)


@main.command()
@field_options
@click.option("--genus", type=int, required=True)
@click.option("--seed", type=int, default=None, help="Random irreducibles (default: lex-first).")
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Certificate file.")
@output_options
@_run
def verify(p, f, field_modulus, genus, seed, budget, out, pretty):
    """Build the g+1 basis curves and certify the rank of their L-polynomials."""
    spec = field_make(p, f, _parse_modulus(field_modulus))
    strategy = LexFirst() if seed is None else Seeded(seed)
    cert = verify_family(build_family(spec, genus, strategy), budget, strict=False)
    if out:
        Path(out).write_text(cert.dumps())
        click.echo(cert.summary())
    else:
        _emit(cert.to_json(), pretty)
        click.echo(cert.summary(), err=True)
    if not (cert.theorem_ok and cert.all_congruences_ok):
        raise _Exit(1)


@main.command()
@click.argument("input", default="-")
@output_options
@_run
def rank(input, pretty):
    """Ranks of stacked L-polynomials from INPUT (JSON list, or a certificate)."""
    text = sys.stdin.read() if input == "-" else Path(input).read_text()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"input JSON: {exc}") from None
    if isinstance(data, dict) and "curves" in data:
        data = [c["lpoly"] for c in data["curves"]]
    if not isinstance(data, list) or not data:
        raise InputError("expected a non-empty list of L-polynomials")
    lps = [LPolynomial.from_json(obj) for obj in data]
    if len({(lp.q, lp.g) for lp in lps}) != 1:
        raise InputError("L-polynomials have mixed (q, g)")
    _emit(rank_chain([lp.coeffs for lp in lps]), pretty)


@main.command()
@click.option("--p", "p", type=int, default=None)
@click.option("--f", "f", type=int, default=1, show_default=True)
@click.option("--field-modulus", default=None)
@click.option("--curve", default=None)
@click.option("--curve-json", default=None)
@click.option("--m", "m", type=int, default=1, show_default=True)
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
@output_options
@_run
def count(p, f, field_modulus, curve, curve_json, m, budget, pretty):
    """Number of points of y^2 = CURVE over F_{q^m}."""
    C = _curve(p, f, field_modulus, curve, curve_json)
    _emit({"m": m, "count": point_count(C, m, budget)}, pretty)


if __name__ == "__main__":
    main()
