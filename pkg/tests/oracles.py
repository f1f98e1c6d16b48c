"""Independent brute-force oracles used across the test suite.

These deliberately avoid the package's own formulas: posteriors come from
exact integer enumeration over a finite defendant population (counts then
a Fraction ratio), and the scalar Philox reference is a direct pure-int
port of the published algorithm, kept separate from the vectorized
implementation it checks.
"""

from fractions import Fraction


def enumeration_counts(prior, sensitivity, specificity, population=10**6):
    """Exact confusion counts over a finite population.

    Only faithful when prior/sensitivity/specificity are rationals whose
    counts come out integral over the population (e.g. 3-decimal values
    over 10**6); round() then just sheds float fuzz.
    """
    guilty = round(prior * population)
    innocent = population - guilty
    tp = round(sensitivity * guilty)
    fn = guilty - tp
    fp = round((1.0 - specificity) * innocent)
    tn = innocent - fp
    return tp, fp, tn, fn


def enumeration_p_positive(prior, sensitivity, specificity, population=10**6):
    tp, fp, _, _ = enumeration_counts(prior, sensitivity, specificity, population)
    return Fraction(tp + fp, population)


def enumeration_ppv(prior, sensitivity, specificity, population=10**6):
    """Exact PPV as a Fraction, or None when no positives exist."""
    tp, fp, _, _ = enumeration_counts(prior, sensitivity, specificity, population)
    if tp + fp == 0:
        return None
    return Fraction(tp, tp + fp)


def enumeration_npv(prior, sensitivity, specificity, population=10**6):
    """Exact NPV as a Fraction, or None when no negatives exist."""
    _, _, tn, fn = enumeration_counts(prior, sensitivity, specificity, population)
    if tn + fn == 0:
        return None
    return Fraction(tn, tn + fn)


_M0 = 0xD2511F53
_M1 = 0xCD9E8D57
_W0 = 0x9E3779B9
_W1 = 0xBB67AE85
_MASK = 0xFFFFFFFF


def philox4x32_reference(counter, key, rounds=10):
    """Scalar pure-int Philox4x32; the published round structure verbatim."""
    c = list(counter)
    k = list(key)
    for _ in range(rounds):
        prod0 = _M0 * c[0]
        prod1 = _M1 * c[2]
        hi0, lo0 = prod0 >> 32, prod0 & _MASK
        hi1, lo1 = prod1 >> 32, prod1 & _MASK
        c = [
            (hi1 ^ c[1] ^ k[0]) & _MASK,
            lo1,
            (hi0 ^ c[3] ^ k[1]) & _MASK,
            lo0,
        ]
        k = [(k[0] + _W0) & _MASK, (k[1] + _W1) & _MASK]
    return tuple(c)
