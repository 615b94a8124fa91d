"""
Storage package: reading and writing spadjor documents.
"""

import logging
import os
from typing import Optional

from ..exceptions import (
    DocumentParseError,
    MalformedCurveError,
    SpadjorValidationError,
)
from ..models.curve import OrientedJordanCurve
from ..models.geometry import Tolerance
from ..models.spadjor import RealizableSpadjor
from ..topology import build_spadjor, special, validate
from ..algebra.canonical import canonical_curves
from .document import SpadjorDocument

logger = logging.getLogger(__name__)


class SpadjorStore:
    def __init__(self, default_epsilon: float = 1e-9):
        self.default_epsilon = default_epsilon

    def read_document(self, path: str) -> SpadjorDocument:
        """Read and parse a document without building curves"""
        try:
            with open(path, "r") as f:
                text = f.read()
        except UnicodeDecodeError as e:
            logger.error(f"Error decoding spadjor file {path}: {e}")
            raise DocumentParseError(f"{path}: not a text file") from e
        try:
            return SpadjorDocument.loads(text)
        except DocumentParseError as e:
            logger.error(f"Error parsing spadjor file {path}: {e}")
            raise DocumentParseError(f"{path}: {e}") from e

    def tolerance_for(
        self, document: SpadjorDocument, tol: Optional[Tolerance] = None
    ) -> Tolerance:
        if tol is not None:
            return tol
        if document.epsilon is not None:
            return Tolerance(document.epsilon)
        return Tolerance(self.default_epsilon)

    def curves_of(self, document: SpadjorDocument, tol: Tolerance):
        """Curves of a document, in file order"""
        curves = []
        for i, raw in enumerate(document.curves):
            try:
                curves.append(OrientedJordanCurve.from_points(raw, tol))
            except MalformedCurveError as e:
                logger.error(f"Curve {i} is malformed: {e}")
                raise SpadjorValidationError(f"curve {i}: {e}") from e
        return curves

    def to_spadjor(
        self, document: SpadjorDocument, tol: Tolerance
    ) -> RealizableSpadjor:
        if document.special is not None:
            return special(document.special)
        curves = self.curves_of(document, tol)
        violations = validate(curves, tol)
        if violations:
            logger.error(f"Spadjor document has {len(violations)} violation(s)")
            details = "; ".join(str(v) for v in violations)
            raise SpadjorValidationError(
                f"Not a realizable spadjor: {details}", violations
            )
        return build_spadjor(curves, tol)

    def load(self, path: str, tol: Optional[Tolerance] = None) -> RealizableSpadjor:
        document = self.read_document(path)
        return self.to_spadjor(document, self.tolerance_for(document, tol))

    def document_for(self, j: RealizableSpadjor, tol: Tolerance) -> SpadjorDocument:
        if j.is_special:
            return SpadjorDocument(epsilon=tol.eps, special=j.kind.value)
        curves = [[p.as_list() for p in pts] for pts in canonical_curves(j, tol)]
        return SpadjorDocument(epsilon=tol.eps, curves=curves)

    def save(self, j: RealizableSpadjor, path: str, tol: Optional[Tolerance] = None):
        """Save atomically: write a temp file, then replace the target"""
        tol = tol or Tolerance(self.default_epsilon)
        text = self.document_for(j, tol).dumps()
        temp_file = f"{path}.tmp"
        try:
            with open(temp_file, "w") as f:
                f.write(text)
            os.replace(temp_file, path)
            logger.info(f"Saved {j.describe()} to {path}")
        except Exception as e:
            logger.error(f"Error saving spadjor to {path}: {e}")
            if os.path.exists(temp_file):
                try:
                    os.remove(temp_file)
                except OSError:
                    pass
            raise


_default_store = SpadjorStore()


def load(path: str, tol: Optional[Tolerance] = None) -> RealizableSpadjor:
    return _default_store.load(path, tol)


def save(j: RealizableSpadjor, path: str, tol: Optional[Tolerance] = None):
    _default_store.save(j, path, tol)
