"""Floer products on class-P affine bases and their mirrors.

Instances are named "cp2" or "dp6", or passed as instance JSON text.
"""

import json as _json

from . import _core
from ._core import (
    QuadratureError,
    RootFindingError,
    WindowTooSmall,
    brute_force_admissible,
    classP_partition_constant,
    continuation_image,
    coordinates,
    count_points,
    critical_cover,
    critical_points,
    dilation_center,
    e_element,
    enumerate_admissible,
    fractional_points,
    homotopy_count,
    k_value_cp2,
    localized_product,
    log_integral,
    mu2,
    q_product,
    rational_function,
    render_svg,
    syz_coordinates,
    triangle_word,
    tropical_structure_constant,
    validate,
    verify_iso,
    wrapped_product,
)


def instance(name="cp2"):
    return _json.loads(_core.instance_json(name))


def dp6(left=1, middle=1, right=1, height=1):
    return _json.loads(_core.dp6_json(left, middle, right, height))


def mu2_json(instance, n, m, a, i, b, j):
    return _json.loads(_core.mu2_json(instance, n, m, a, i, b, j))


def formal_sum_roundtrip(report):
    return _json.loads(_core.formal_sum_roundtrip(_json.dumps(report)))


def build_triangle(a, i, n, b, j, m, h):
    text = _core.build_triangle(a, i, n, b, j, m, h)
    return None if text is None else _json.loads(text)


def hessian_identity(x, y):
    return _json.loads(_core.hessian_identity(x, y))


def run_suite(name, max_degree=6, max_k=8, max=4, tol=1e-8):
    return _json.loads(_core.run_suite(name, max_degree, max_k, max, tol))
