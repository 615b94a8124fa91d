from .algebra.boolean_ops import OPERATIONS, operand_count
from .config import get_settings
from .exceptions import EpsilonMismatchError
from .models.geometry import Point, Tolerance
from .models.spadjor import RealizableSpadjor
from .storage import SpadjorStore
from .storage.document import SpadjorDocument
from .topology import betti, locate, validate
from typing import List, Optional, Sequence, Tuple
import logging
import time

logger = logging.getLogger(__name__)


class OperationsManager:
    def __init__(self, store: Optional[SpadjorStore] = None):
        self.settings = get_settings()
        self.store = store or SpadjorStore(self.settings.epsilon)

    def resolve_tolerance(
        self, documents: Sequence[SpadjorDocument], override: Optional[float] = None
    ) -> Tolerance:
        """--eps wins, then the epsilon the documents agree on, then the default"""
        if override is not None:
            return Tolerance(override)
        stated = sorted({d.epsilon for d in documents if d.epsilon is not None})
        if len(stated) > 1:
            logger.error(f"Input documents disagree on epsilon: {stated}")
            raise EpsilonMismatchError(
                f"Input documents use different epsilon values {stated}; pass --eps"
            )
        if stated:
            return Tolerance(stated[0])
        return Tolerance(self.settings.epsilon)

    def load_operands(
        self, paths: Sequence[str], override: Optional[float] = None
    ) -> Tuple[List[RealizableSpadjor], Tolerance]:
        documents = [self.store.read_document(p) for p in paths]
        tol = self.resolve_tolerance(documents, override)
        return [self.store.to_spadjor(d, tol) for d in documents], tol

    def run(
        self, name: str, *operands: RealizableSpadjor, tol: Tolerance
    ) -> RealizableSpadjor:
        """Run a named Boolean operation and log its size and timing"""
        if name not in OPERATIONS:
            raise ValueError(f"Unknown operation {name!r}")
        expected = operand_count(name)
        if len(operands) != expected:
            raise ValueError(f"{name} takes {expected} operand(s), got {len(operands)}")

        started = time.perf_counter()
        result = OPERATIONS[name](*operands, tol)
        elapsed = time.perf_counter() - started
        sizes = ", ".join(o.describe() for o in operands)
        logger.info(f"{name}({sizes}) -> {result.describe()} in {elapsed:.3f}s")
        return result

    def betti(self, path: str, override: Optional[float] = None):
        (j,), _ = self.load_operands([path], override)
        return betti(j)

    def locate(self, path: str, x: float, y: float, override: Optional[float] = None):
        (j,), tol = self.load_operands([path], override)
        return locate(j, Point(x, y), tol)

    def validate_file(self, path: str, override: Optional[float] = None):
        """Violations of a document's curves; empty when it is valid"""
        document = self.store.read_document(path)
        tol = self.resolve_tolerance([document], override)
        if document.special is not None:
            return []
        return validate(self.store.curves_of(document, tol), tol)
