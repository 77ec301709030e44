"""Gale duality, rho-Lagrangians, EPW sextics and cubic fourfolds.

Values use the JSON interchange encoding: rationals as "num/den" strings,
prime-field elements as ints in [0, p), a + b*xi as [a, b]. An equation is a
dict with "sign", "M" (9 rows of 6) and "L" (3 rows of 6); a Lagrangian is a
list of 10 columns of length 20. Choices of L are 0-based here.
"""

import json

from . import _core
from ._core import InvalidInput

__all__ = [
    "InvalidInput",
    "gale_dual",
    "is_gale_pair",
    "cubic_polynomial",
    "lagrangian_from_gale",
    "check_lagrangian",
    "epw_contains",
    "harvest_epw_points",
    "epw_to_lines",
    "line_to_epw",
    "smooth_check",
    "lattice_count",
    "lattice_orbits",
    "a4_emit",
    "roundtrip_instance",
    "run_acceptance",
]


def _j(x):
    return json.dumps(x)


def gale_dual(field, eq):
    return json.loads(_core.gale_dual(field, _j(eq)))


def is_gale_pair(field, a, b):
    return _core.is_gale_pair(field, _j(a), _j(b))


def cubic_polynomial(field, eq):
    """List of [coefficient, exponents] terms."""
    return json.loads(_core.cubic_polynomial(field, _j(eq)))


def lagrangian_from_gale(field, eq, i=0):
    return json.loads(_core.lagrangian_from_gale(field, _j(eq), i))


def check_lagrangian(field, columns):
    return json.loads(_core.check_lagrangian(field, _j(columns)))


def epw_contains(field, columns, point):
    """(member, nullity)."""
    return _core.epw_contains(field, _j(columns), _j(point))


def harvest_epw_points(field, columns, count, seed=1):
    return json.loads(_core.harvest_epw_points(field, _j(columns), count, seed))


def epw_to_lines(field, eq, i, point):
    return json.loads(_core.epw_to_lines(field, _j(eq), i, _j(point)))


def line_to_epw(field, eq, i, line_points):
    """line_points: two points of P^5 spanning a line on the cubic."""
    return json.loads(_core.line_to_epw(field, _j(eq), i, _j(line_points)))


def smooth_check(field, eq):
    return _core.smooth_check(field, _j(eq))


def lattice_count():
    return _core.lattice_count()


def lattice_orbits():
    """(orbit sizes, partner count)."""
    return _core.lattice_orbits()


def a4_emit(field="prime:97", params=None):
    return json.loads(_core.a4_emit(field, [str(p) for p in (params or [])]))


def roundtrip_instance(instance):
    return json.loads(_core.roundtrip_instance(_j(instance)))


def run_acceptance(seed=20240601, ids=()):
    return _core.run_acceptance(seed, list(ids))
