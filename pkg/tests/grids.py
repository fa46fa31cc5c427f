from fractions import Fraction

ALPHAS = [Fraction(v) for v in ("-1/2", "-1/4", "0", "1/2", "1", "3", "7/3")]
MS = [Fraction(v) for v in ("0", "1/2", "1", "3", "10")]
A01S = [Fraction(0), Fraction(1), Fraction(-2)]
