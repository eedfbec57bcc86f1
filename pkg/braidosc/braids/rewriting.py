"""
Braid generators on O-monomials.

sigma_i O_k sigma_i^-1 is a linear form in O_(i-1), O_i, O_(i+1); since the
O_k commute, sigma_i on O_1^j1 ... O_(n-1)^j(n-1) v0 is the product of these
forms times the phase sigma_i picks up on the vacuum.
"""
from dataclasses import dataclass

from braidosc.algebra.exceptions import InvariantViolation

from .generators import swap


@dataclass(frozen=True)
class OMonomial:
    exponents: tuple
    coefficient: object
    sector: tuple

    @property
    def degree(self):
        return sum(self.exponents)

    @property
    def key(self):
        return self.exponents, self.sector


def _multiply(polynomial, form, backend):
    """Multiply {exponents: coeff} by the linear form {index: coeff} (1-based indices)."""
    product = {}
    for exponents, coefficient in polynomial.items():
        for index, factor in form.items():
            raised = list(exponents)
            raised[index - 1] += 1
            raised = tuple(raised)
            product[raised] = product.get(raised, backend.zero()) + coefficient * factor
    return {exponents: coefficient for exponents, coefficient in product.items() if coefficient}


def rewrite_sigma(generator, monomial, context):
    """sigma_i applied to ``monomial`` (with its sector), as a list of OMonomials."""
    n = context.n
    generator.validate(n)
    backend = context.backend
    i = generator.i
    before = context.slot_labels(monomial.sector)
    sector = swap(monomial.sector, i - 1, i)
    after = context.slot_labels(sector)

    polynomial = {(0,) * (n - 1): monomial.coefficient}
    for k, power in enumerate(monomial.exponents, start=1):
        if not power:
            continue
        form = backend.conjugate_ladder(after, i, k, inverse=generator.inverse)
        for _ in range(power):
            polynomial = _multiply(polynomial, form, backend)

    phase = backend.vacuum_phase(before[i - 1], before[i], inverse=generator.inverse)
    result = [OMonomial(exponents, coefficient * phase, sector)
              for exponents, coefficient in sorted(polynomial.items())]
    for term in result:
        if term.degree != monomial.degree:
            raise InvariantViolation('Rewriting changed the degree from {} to {}'.format(monomial.degree, term.degree))
    return result
