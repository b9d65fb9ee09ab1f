from fractions import Fraction

# the quadratic form Q(n) = 3 n1^2 - n2^2 as its Gram matrix A, Q(x) = x^T A x / 2
MAIN_GRAM = ((6, 0), (0, -2))

MAIN_A = (Fraction(1, 3), Fraction(0))
MAIN_B = (Fraction(1, 12), Fraction(-1, 4))
MAIN_C1 = (Fraction(1), Fraction(3))
MAIN_C2 = (Fraction(-1), Fraction(3))

# shift of b produced by tau -> tau + 1, lies in A^-1 Z^2
MAIN_T_SHIFT = (Fraction(5, 6), Fraction(1, 2))

# the orthogonal map exchanging c1 and c2
MAIN_REFLECTION = ((-1, 0), (0, 1))
