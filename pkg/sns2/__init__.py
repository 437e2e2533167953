"""sns2

Exact sign analysis of the determinant of the second additive compound.

* Sparse integer polynomials, minor-sums and `q_n` without floating point
* Newton polytopes with exact vertex certificates
* Cycle-based rules for 3-, 4- and 5-patterns with evidence for every verdict
* Verification of cone certificates

Basic example:

```python
from sns2 import classify, parse_pattern

pattern = parse_pattern(
    '''
    + - -
    + + +
    + 0 +
    '''
)
result = classify(pattern)
result.verdict  #> <Verdict.POSITIVE: 'Positive'>
```
"""

from .certs import (
    BridgeScheme,
    CertificateClaim,
    ConeCertificate,
    load_bundled,
    substitution_bridge,
    verify_certificate,
)
from .compound import MinorSums, det2, minor_sums, qn_from_minor_sums, qn_symbolic, second_additive_compound
from .config import Settings
from .error import (
    ArityMismatchError,
    CertificateError,
    DimensionError,
    InconsistencyError,
    PatternParseError,
    ResultantUndefinedError,
    SNS2Error,
    UnsupportedSizeError,
    UsageError,
    ZeroPolynomialError,
)
from .modules import logger
from .poly import Monomial, MultiPoly, PolyMatrix
from .polytope import NewtonPolytope, indefiniteness_witness, mixed_vertices, newton_polytope
from .rules import Claim, Classification2, Evidence, PatternContext, Verdict, classify, classify_det2
from .signpat import SignedDigraph, SignPattern, parse_pattern, weakly_reversible_core

__version__ = "0.1.0"

__all__ = (
    "ArityMismatchError",
    "BridgeScheme",
    "CertificateClaim",
    "CertificateError",
    "Claim",
    "Classification2",
    "ConeCertificate",
    "DimensionError",
    "Evidence",
    "InconsistencyError",
    "MinorSums",
    "Monomial",
    "MultiPoly",
    "NewtonPolytope",
    "PatternContext",
    "PatternParseError",
    "PolyMatrix",
    "ResultantUndefinedError",
    "SNS2Error",
    "Settings",
    "SignPattern",
    "SignedDigraph",
    "UnsupportedSizeError",
    "UsageError",
    "Verdict",
    "ZeroPolynomialError",
    "classify",
    "classify_det2",
    "det2",
    "indefiniteness_witness",
    "load_bundled",
    "logger",
    "minor_sums",
    "mixed_vertices",
    "newton_polytope",
    "parse_pattern",
    "qn_from_minor_sums",
    "qn_symbolic",
    "second_additive_compound",
    "substitution_bridge",
    "verify_certificate",
    "weakly_reversible_core",
)
