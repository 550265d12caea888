"""Signatures of G-symmetric products of surfaces via the cycle index."""

from symprod.exactnum import BigRational, PowerSeries, binomial
from symprod.permgroups import (
    CycleType,
    Permutation,
    PermutationGroup,
    alternating_group,
    cyclic_group,
    enumerate_group,
    parse_permutation,
    symmetric_group,
    wreath_product,
)
from symprod.cyclepoly import CycleIndexPolynomial
from symprod.cycleindex import (
    cycle_index_cyclic,
    cycle_index_enumerated,
    cycle_index_symmetric,
    cycle_index_wreath,
    zsn_alternating_closed_form,
)
from symprod.sigformulas import (
    Surface,
    hirzebruch_wreath,
    sign_sym_power_punctured,
    sign_sym_prod_closed,
    sign_sym_prod_punctured,
    sign_wreath_punctured,
    sign_sym_prod,
    zagier_sign,
)
from symprod.homoracle import (
    g_signature,
    product_formula_check,
    quotient_signature_oracle,
)

__all__ = [
    "BigRational", "PowerSeries", "binomial",
    "CycleType", "Permutation", "PermutationGroup", "alternating_group", "cyclic_group",
    "enumerate_group", "parse_permutation", "symmetric_group", "wreath_product",
    "CycleIndexPolynomial",
    "cycle_index_cyclic", "cycle_index_enumerated", "cycle_index_symmetric",
    "cycle_index_wreath", "zsn_alternating_closed_form",
    "Surface", "hirzebruch_wreath", "sign_sym_power_punctured", "sign_sym_prod",
    "sign_sym_prod_closed", "sign_sym_prod_punctured", "sign_wreath_punctured", "zagier_sign",
    "g_signature", "product_formula_check", "quotient_signature_oracle",
]

__version__ = "0.1.0"
