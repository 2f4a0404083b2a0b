from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest

from lrbhopf import _kernels
from lrbhopf.setcomp import SetCompFamily


@pytest.mark.parametrize("n", range(6))
def test_numpy_and_default_product_tables_agree(n):
    fam = SetCompFamily(6)
    codes, lookup = fam.codes_array(n)
    a = _kernels.setcomp_product_table(codes, lookup, n)
    b = _kernels.setcomp_product_table_numpy(codes, lookup, n)
    assert np.array_equal(a, b)


def test_lrb_violation_backends_agree():
    fam = SetCompFamily(4)
    table = fam.table(4).copy()
    assert _kernels.lrb_violation(table) == _kernels.lrb_violation_numpy(table) == (-1, -1, -1)
    table[3, 7] = 0
    assert _kernels.lrb_violation(table) == _kernels.lrb_violation_numpy(table)
    table[5, 5] = 1
    assert _kernels.lrb_violation(table)[0] == _kernels.IDEMPOTENCY


def test_env_flag_forces_numpy():
    env = dict(os.environ, LRBHOPF_DISABLE_NUMBA="1")
    code = "from lrbhopf import _kernels, is_lrb, SetCompFamily; " \
           "print(_kernels.BACKEND, is_lrb(SetCompFamily(5), 5).passed)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["numpy", "True"]
