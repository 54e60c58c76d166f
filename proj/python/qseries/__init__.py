"""Exact q-series expansion and congruence checks for regular cubic partitions."""

import json

from ._qseries import (
    UNBOUNDED,
    BeyondValidity,
    BudgetExceeded,
    Error,
    EtaQuotient,
    InsufficientRows,
    NonIntegralOffset,
    NonUnitLead,
    OffStride,
    Overflow,
    ParseError,
    Series,
    ZeroPatternViolation,
    build_matrix,
    deflate,
    expand,
    expand_eta,
    extract_progression,
    family_spec,
    huff,
    oracle_count,
    parse,
    valuation,
    vector_chain,
    verify_huff_expansion,
)
from . import _qseries


def verify_claim(family, stride, offset, modulus_base, modulus_exponent, n_max, n_budget=200000):
    """Check family(stride*n + offset) == 0 mod base^exponent for n <= n_max."""
    return json.loads(
        _qseries.verify_claim_json(family, stride, offset, modulus_base, modulus_exponent, n_max, n_budget)
    )


def theorem_suite(alpha_t1=2, alpha_t2=3, n_max=None, n_budget=200000):
    return json.loads(_qseries.theorem_suite_json(alpha_t1, alpha_t2, n_max, n_budget))


def identity_suite(order=500):
    return json.loads(_qseries.identity_suite_json(order))
