import pytest

from sns2.certs import CertificateClaim, CertificateFile, ConeCertificate, ConeTermFile


@pytest.fixture()
def square_certificate():
    """`(X1 - X2)^2 >= 0` with multiplier 1."""
    return ConeCertificate.from_file(
        CertificateFile(
            arity=2,
            claim=CertificateClaim.NONNEGATIVE,
            target=[(1, [2, 0]), (-2, [1, 1]), (1, [0, 2])],
            multiplier=[(1, [0, 0])],
            terms=[ConeTermFile(sqrt=[(1, [1, 0]), (-1, [0, 1])], monomial=[0, 0])],
            name="square",
        )
    )
