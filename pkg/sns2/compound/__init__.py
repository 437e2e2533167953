from sns2.compound.compound import (
    IndexPair,
    compound_entry,
    compound_text,
    det2,
    index_pairs,
    pair_labels,
    second_additive_compound,
)
from sns2.compound.minor_sums import (
    MinorSums,
    SingularFactorization,
    minor_sums,
    qn_from_minor_sums,
    qn_symbolic,
    script_M,
    singular_factorization,
)
from sns2.compound.resultant import (
    BivariatePair,
    phat_qhat,
    resultant_sign,
    sylvester_matrix,
    sylvester_resultant_mu,
)

__all__ = (
    "BivariatePair",
    "IndexPair",
    "MinorSums",
    "SingularFactorization",
    "compound_entry",
    "compound_text",
    "det2",
    "index_pairs",
    "minor_sums",
    "pair_labels",
    "phat_qhat",
    "qn_from_minor_sums",
    "qn_symbolic",
    "resultant_sign",
    "script_M",
    "second_additive_compound",
    "singular_factorization",
    "sylvester_matrix",
    "sylvester_resultant_mu",
)
