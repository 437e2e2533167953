from sns2.certs.bridge import BridgeScheme, SubstitutionBridge, bridge_substitutions, substitution_bridge
from sns2.certs.certificate import (
    BUNDLED_CERTIFICATES,
    CertificateClaim,
    CertificateFile,
    ConeCertificate,
    ConeTerm,
    ConeTermFile,
    cone_scale,
    cone_sum,
    load_bundled,
)
from sns2.certs.verify import DEFAULT_SPOT_CHECKS, CertificateCheck, spot_check, verify_certificate

__all__ = (
    "BUNDLED_CERTIFICATES",
    "DEFAULT_SPOT_CHECKS",
    "BridgeScheme",
    "CertificateCheck",
    "CertificateClaim",
    "CertificateFile",
    "ConeCertificate",
    "ConeTerm",
    "ConeTermFile",
    "SubstitutionBridge",
    "bridge_substitutions",
    "cone_scale",
    "cone_sum",
    "load_bundled",
    "spot_check",
    "substitution_bridge",
)
