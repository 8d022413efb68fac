"""Drinfel'd polynomial of a Krawtchouk-type TD pair."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .constructions import ConstructionSpec, leonard_krawtchouk, parse_spec
from .core import TDPair, krawtchouk_type, split_sequence
from .errors import BadParameter, NotTDPair
from .linalg import Poly


@dataclass(frozen=True)
class DrinfeldPoly:
    P: Poly

    def __call__(self, x):
        return self.P(x)

    def __str__(self) -> str:
        return str(self.P)

    def to_strings(self) -> list[str]:
        return self.P.to_strings()


def drinfeld_poly(pair: TDPair) -> DrinfeldPoly:
    """P = sum_i (-1)^i zeta_i x^i / ((i!)^2 4^i), with zeta for orderings (d-2i), (2i-d)."""
    info = krawtchouk_type(pair)
    if not info:
        raise NotTDPair("Drinfel'd polynomial is defined for Krawtchouk-type pairs only")
    zeta = split_sequence(pair, info.theta, info.theta_star)
    return DrinfeldPoly(Poly((-1) ** i * z / (factorial(i) ** 2 * 4 ** i) for i, z in enumerate(zeta)))


def _factor_poly(d: int, a) -> Poly:
    return drinfeld_poly(leonard_krawtchouk(d, a)).P


def drinfeld_checks(pair: TDPair, spec: ConstructionSpec | str | None = None) -> dict:
    """P(0) = 1 and P(1) != 0; with a spec, compare P to the product over its factors.

    The product comparison is an empirical hypothesis, reported as a verdict.
    """
    P = drinfeld_poly(pair).P
    report = {
        "P": P.to_strings(),
        "P(0)": P(0),
        "P(1)": P(1),
        "constant_is_one": P(0) == 1,
        "nonzero_at_one": P(1) != 0,
    }
    if spec is None and pair.provenance:
        spec = pair.provenance
    if spec is not None:
        if isinstance(spec, str):
            try:
                spec = parse_spec(spec)
            except BadParameter:
                return report  # e.g. a diameter-0 label; nothing to compare
        prod = Poly([1])
        for d, a in spec.factors:
            prod = prod * _factor_poly(d, a)
        report["factor_product"] = prod.to_strings()
        report["multiplicative"] = "holds" if prod == P else "fails"
    return report
