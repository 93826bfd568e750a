from enum import Enum
from typing import Dict, Sequence, Optional

import numpy as np
import pandas as pd

from .poly import askey_p, askey_q, jacobi_phat, recurrence_coeffs
from .quadrature import QuadratureSpec, DEFAULT_QUADRATURE, MatrixKind, orthogonality_matrix
from .repmod import ModuleVector, gevp_p_coeffs, gevp_q_coeffs, evp_j_coeffs, gevp_spectrum, DEFAULT_LMAX
from .scalar import Params


class CoeffKind(Enum):
    ASKEY_P = 'askey-p'
    ASKEY_Q = 'askey-q'
    JACOBI = 'jacobi'
    GEVP_P = 'gevp-p'
    GEVP_Q = 'gevp-q'
    EVP_J = 'evp-j'
    EVP_JTILDE = 'evp-jtilde'


def complex_columns(name: str, values: Sequence[complex]) -> Dict[str, np.ndarray]:
    """A single real column, or ``name_re``/``name_im`` when any imaginary part is nonzero."""
    values = np.asarray(values, dtype=complex)
    if np.all(values.imag == 0):
        return {name: values.real}
    return {f"{name}_re": values.real, f"{name}_im": values.imag}


def _vector_frame(v: ModuleVector) -> pd.DataFrame:
    keys = [k for k, _ in v.items()]
    return pd.DataFrame({'k': keys, **complex_columns('value', [c for _, c in v.items()])})


def coeffs_table(kind: CoeffKind, n: int, params: Params, lmax: int = DEFAULT_LMAX) -> pd.DataFrame:
    if kind in (CoeffKind.ASKEY_P, CoeffKind.ASKEY_Q, CoeffKind.JACOBI):
        build = {CoeffKind.ASKEY_P: askey_p, CoeffKind.ASKEY_Q: askey_q, CoeffKind.JACOBI: jacobi_phat}[kind]
        coeffs = build(n, params).coeffs
        return pd.DataFrame({'k': np.arange(len(coeffs)), **complex_columns('value', coeffs)})
    if kind is CoeffKind.GEVP_P:
        return _vector_frame(gevp_p_coeffs(n, params))
    if kind is CoeffKind.GEVP_Q:
        return _vector_frame(gevp_q_coeffs(n, params, lmax=lmax))
    return _vector_frame(evp_j_coeffs(n, params, dual=kind is CoeffKind.EVP_JTILDE, lmax=lmax))


def recurrence_table(nmax: int, params: Params) -> pd.DataFrame:
    rows = [(n, *recurrence_coeffs(n, params)) for n in range(nmax + 1)]
    return pd.DataFrame(rows, columns=['n', 'b', 'g'])


def spectrum_table(K: int, params: Params, pencil: bool = True) -> pd.DataFrame:
    return pd.DataFrame({'n': np.arange(K + 1), 'value': gevp_spectrum(K, params, pencil)})


def matrix_table(kind: MatrixKind, nmax: int, params: Params, spec: QuadratureSpec = DEFAULT_QUADRATURE,
                 parallelism: Optional[int] = None) -> pd.DataFrame:
    """One row per m; columns n0, n1, ... (split into _re/_im when complex)."""
    matrix = orthogonality_matrix(kind, nmax, params, spec, parallelism)
    columns = {'m': np.arange(nmax + 1)}
    for n in range(nmax + 1):
        columns.update(complex_columns(f"n{n}", matrix[:, n]))
    return pd.DataFrame(columns)


def value_table(value: complex) -> pd.DataFrame:
    return pd.DataFrame({'re': [complex(value).real], 'im': [complex(value).imag]})
