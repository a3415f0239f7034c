"""Denominator bookkeeping.

The whole pipeline works over Z[1/d]; every division performed anywhere
registers the primes of its denominator here, together with the step that
introduced it.  The ledger starts from the bad primes of the algebra and
the primes dividing kappa(e, f).
"""

from __future__ import annotations

from .rational import prime_factors


class DenominatorLedger:
    def __init__(self):
        self._provenance: dict[int, list[str]] = {}

    def add_prime(self, p: int, step: str) -> None:
        steps = self._provenance.setdefault(p, [])
        if step not in steps:
            steps.append(step)

    def add_integer(self, n: int, step: str) -> None:
        for p in prime_factors(n):
            self.add_prime(p, step)

    def add_rational(self, q, step: str) -> None:
        self.add_integer(int(q.denominator), step)

    @property
    def primes(self) -> list[int]:
        return sorted(self._provenance)

    @property
    def d(self) -> int:
        out = 1
        for p in self.primes:
            out *= p
        return out

    def provenance(self) -> dict[int, list[str]]:
        return {p: list(v) for p, v in sorted(self._provenance.items())}
