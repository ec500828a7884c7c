from typing import Optional

import numpy as np

from core import Matroid


class ElementaryQuotientEvaluator:
    """Checks r_Q(X) <= r_M(X) <= r_Q(X) + 1 on every subset and a rank drop of exactly one"""

    def __init__(self, threshold: float = 1.0):
        self.threshold = threshold
        self.score = 0.0
        self.success = False
        self.reason: Optional[str] = None

    def measure(self, M: Matroid, Q: Matroid) -> float:
        if M.n != Q.n:
            self.reason = f"ground sets differ: {M.n} and {Q.n}"
            self.score = 0.0
        else:
            gap = M.signed() - Q.signed()
            bad = np.flatnonzero((gap < 0) | (gap > 1))
            if bad.size:
                self.reason = f"rank gap outside 0..1 at {int(bad[0]):#x}"
                self.score = 0.0
            elif M.rank - Q.rank != 1:
                self.reason = f"rank dropped by {M.rank - Q.rank}"
                self.score = 0.0
            else:
                self.reason = None
                self.score = 1.0
        self.success = self.score >= self.threshold
        return self.score
