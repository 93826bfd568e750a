from .actions import ModuleTag, act, truncated_matrix, gevp_spectrum, TruncatedRelation, truncated_relation_residual
from .bases import (
    D0Rule, NegativeKind, GaugeChoice, DEFAULT_GAUGE, DEFAULT_LMAX, gevp_p_coeffs, gevp_q_coeffs, evp_j_coeffs,
    negative_index_coeffs, negative_index_norm, biorth_norm,
)
from .overlaps import (
    OverlapKind, SplitKind, overlap, overlap_closed_form, jacobi_overlap_normalization, transpose_consistency,
)
from .vector import ModuleVector, pairing, pairing_scale

__all__ = [
    'ModuleTag',
    'act',
    'truncated_matrix',
    'gevp_spectrum',
    'TruncatedRelation',
    'truncated_relation_residual',
    'D0Rule',
    'NegativeKind',
    'GaugeChoice',
    'DEFAULT_GAUGE',
    'DEFAULT_LMAX',
    'gevp_p_coeffs',
    'gevp_q_coeffs',
    'evp_j_coeffs',
    'negative_index_coeffs',
    'negative_index_norm',
    'biorth_norm',
    'OverlapKind',
    'SplitKind',
    'overlap',
    'overlap_closed_form',
    'jacobi_overlap_normalization',
    'transpose_consistency',
    'ModuleVector',
    'pairing',
    'pairing_scale',
]
