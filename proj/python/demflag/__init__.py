"""Graded multiplicities in Demazure flags of the twisted current algebra."""

from ._core import (
    Error,
    InvalidLevel,
    InvalidShape,
    ParseError,
    QPoly,
    char_product_D11,
    cf_1to2,
    cf_2to3,
    closed_A_1m,
    closed_A_m_m1,
    d_poly,
    dim_demazure,
    graded_character,
    mock_theta,
    mult,
    mult_parts,
    mult_step,
    q_binomial,
    series_A,
    series_A_q1,
    verify,
    weighted_mult,
)

__all__ = [
    "Error",
    "InvalidLevel",
    "InvalidShape",
    "ParseError",
    "QPoly",
    "char_product_D11",
    "cf_1to2",
    "cf_2to3",
    "closed_A_1m",
    "closed_A_m_m1",
    "d_poly",
    "dim_demazure",
    "graded_character",
    "mock_theta",
    "mult",
    "mult_parts",
    "mult_step",
    "q_binomial",
    "series_A",
    "series_A_q1",
    "verify",
    "weighted_mult",
]
