from sns2.rules.abc import ABCRule, AndRule, FuncRule, NotRule, OrRule
from sns2.rules.bipartite import rule_bipartite
from sns2.rules.context import ContextLike, PatternContext, as_context
from sns2.rules.five_pattern import LEMMAS, FivePatternLemma, hypothesis_factors, rule_five_pattern_lemmas
from sns2.rules.four_pattern import (
    HasPropertyP,
    Stage,
    disjoint_pair_increment,
    rule_prop44,
    rule_q4_minor_signs,
    stage_matrix,
    staged_construction,
)
from sns2.rules.ladder import CLAIM_VERDICTS, VERDICT_CLAIMS, classify, classify_det2, is_indef2_case
from sns2.rules.obstructions import OBSTRUCTIONS, Obstruction, Side, excluded_sides, rule_cycle_obstructions
from sns2.rules.sign import sign_of_expression, sign_of_product
from sns2.rules.structure import ContainsDigraph, HasCycle, HasOrder, OrderResidue
from sns2.rules.three_pattern import (
    INDEFINITE_STRUCTURES,
    NONZERO_STRUCTURES,
    CycleStructure,
    direct_verdict,
    rule_prop33,
    three_pattern_vertex_terms,
)
from sns2.rules.verdict import Claim, Classification2, Evidence, SignClass3, Verdict, Witnesses, sort_evidence

__all__ = (
    "CLAIM_VERDICTS",
    "INDEFINITE_STRUCTURES",
    "LEMMAS",
    "NONZERO_STRUCTURES",
    "OBSTRUCTIONS",
    "VERDICT_CLAIMS",
    "ABCRule",
    "AndRule",
    "Claim",
    "Classification2",
    "ContainsDigraph",
    "ContextLike",
    "CycleStructure",
    "Evidence",
    "FivePatternLemma",
    "FuncRule",
    "HasCycle",
    "HasOrder",
    "HasPropertyP",
    "NotRule",
    "Obstruction",
    "OrRule",
    "OrderResidue",
    "PatternContext",
    "Side",
    "SignClass3",
    "Stage",
    "Verdict",
    "Witnesses",
    "as_context",
    "classify",
    "classify_det2",
    "direct_verdict",
    "disjoint_pair_increment",
    "excluded_sides",
    "hypothesis_factors",
    "is_indef2_case",
    "rule_bipartite",
    "rule_cycle_obstructions",
    "rule_five_pattern_lemmas",
    "rule_prop33",
    "rule_prop44",
    "rule_q4_minor_signs",
    "sign_of_expression",
    "sign_of_product",
    "sort_evidence",
    "stage_matrix",
    "staged_construction",
    "three_pattern_vertex_terms",
)
