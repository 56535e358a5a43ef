class K3Error(Exception):
    """Base class for domain errors; ``code`` is the machine-readable tag."""

    code = "domain-error"


class ShapeError(K3Error, ValueError):
    code = "shape-error"


class NotUnimodularError(K3Error, ValueError):
    code = "not-unimodular"


class LatticeMismatchError(K3Error, ValueError):
    code = "lattice-mismatch"


class NotReflectionVectorError(K3Error, ValueError):
    code = "not-a-reflection-vector"


class NotIsometryError(K3Error, ValueError):
    code = "not-an-isometry"


class DegenerateBasisError(K3Error, ValueError):
    code = "degenerate-basis"


class NotPositiveError(K3Error, ValueError):
    code = "not-positive"


class PreconditionError(K3Error, ValueError):
    code = "precondition"


class ExactnessError(K3Error, ValueError):
    code = "exactness"


class ClassificationError(K3Error, ValueError):
    code = "classification"


class CertificateError(K3Error):
    code = "certificate"

    def __init__(self, msg, index=None):
        super().__init__(msg)
        self.index = index
