import math
import logging
from dataclasses import dataclass
from fractions import Fraction

from qmock.errors import InvalidCharacteristic, UnsupportedCharacteristic
from qmock.series_core import QSeries
from qmock.settings import SCALE, MAIN_GRAM, MAIN_A, MAIN_B, MAIN_C1, MAIN_C2
from qmock.verify.report import compare_series

logger = logging.getLogger(__name__)


def _vector(x):
    return tuple(Fraction(v) for v in x)


def sgn(x):
    return (x > 0) - (x < 0)


class QuadraticForm2():
    """Binary quadratic form Q(x) = x^T A x / 2 with integral symmetric A."""

    def __init__(self, matrix=MAIN_GRAM):
        (a, b), (c, d) = matrix
        if b != c:
            raise ValueError('Gram matrix must be symmetric, got %s' % (matrix,))
        if any(Fraction(v).denominator != 1 for v in (a, b, d)):
            raise ValueError('Gram matrix must be integral, got %s' % (matrix,))
        self.matrix = ((int(a), int(b)), (int(b), int(d)))
        if self.det >= 0:
            raise ValueError('form %s does not have signature (1,1)' % (matrix,))

    def __repr__(self):
        return 'QuadraticForm2(%s)' % (self.matrix,)

    def __eq__(self, other):
        return isinstance(other, QuadraticForm2) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    @property
    def det(self):
        (a, b), (_, d) = self.matrix
        return a * d - b * b

    @property
    def diagonal(self):
        """A*, the vector of diagonal entries."""
        return (self.matrix[0][0], self.matrix[1][1])

    def apply(self, x):
        """A x."""
        x = _vector(x)
        (a, b), (_, d) = self.matrix
        return (a * x[0] + b * x[1], b * x[0] + d * x[1])

    def solve(self, y):
        """A^-1 y."""
        y = _vector(y)
        (a, b), (_, d) = self.matrix
        det = Fraction(self.det)
        return ((d * y[0] - b * y[1]) / det, (a * y[1] - b * y[0]) / det)

    def Q(self, x):
        return self.B(x, x) / 2

    def B(self, x, y):
        ax = self.apply(x)
        y = _vector(y)
        return ax[0] * y[0] + ax[1] * y[1]

    def in_dual_lattice(self, mu):
        """Whether mu lies in A^-1 Z^2."""
        return all(v.denominator == 1 for v in self.apply(mu))

    def majorant(self, c):
        """Positive definite form B(c,n)^2 / (-Q(c)) + 2 Q(n) as a Gram matrix.

        It bounds the exponent of the non-holomorphic kernel for c in the
        negative cone: |beta-part| <= exp(-pi v n^T M n).
        """
        qc = self.Q(c)
        if qc >= 0:
            raise InvalidCharacteristic('majorant needs Q(c) < 0, got %s' % qc)
        ac = self.apply(c)
        return tuple(
            tuple(ac[i] * ac[j] / -qc + self.matrix[i][j] for j in range(2))
            for i in range(2)
        )


def Q_eval(form, x):
    return form.Q(x)


def B_eval(form, x, y):
    return form.B(x, y)


def sgn_factor(form, c, n):
    """sgn(B(c, n)) with sgn(0) = 0."""
    return sgn(form.B(c, n))


@dataclass(frozen=True)
class ThetaCharacteristic:
    a: tuple
    b: tuple
    c1: tuple
    c2: tuple

    def __post_init__(self):
        for name in ('a', 'b', 'c1', 'c2'):
            value = getattr(self, name)
            if len(value) != 2:
                raise ValueError('%s must be a 2-vector' % name)
            object.__setattr__(self, name, _vector(value))

    def replace(self, **changes):
        values = dict(a=self.a, b=self.b, c1=self.c1, c2=self.c2)
        values.update(changes)
        return ThetaCharacteristic(**values)

    def transformed(self, C):
        """Apply the matrix C to all four vectors."""
        def mv(x):
            return tuple(
                C[i][0] * x[0] + C[i][1] * x[1] for i in range(2)
            )
        return ThetaCharacteristic(
            mv(self.a), mv(self.b), mv(self.c1), mv(self.c2)
        )


def _is_isotropic_primitive(form, c):
    if form.Q(c) != 0 or any(v.denominator != 1 for v in c):
        return False
    return math.gcd(int(c[0]), int(c[1])) == 1


def validate_characteristic(form, chars, allow_isotropic=True):
    """Check c1, c2 lie in the closure of one negative cone component.

    Raises InvalidCharacteristic otherwise, or when a sits on a wall of an
    isotropic c (B(c, a) integral).
    """
    for name in ('c1', 'c2'):
        c = getattr(chars, name)
        qc = form.Q(c)
        if qc < 0:
            continue
        if qc == 0 and allow_isotropic and _is_isotropic_primitive(form, c):
            if form.B(c, chars.a).denominator == 1:
                raise InvalidCharacteristic(
                    'B(%s, a) is integral for isotropic %s' % (name, name)
                )
            continue
        raise InvalidCharacteristic('Q(%s) = %s is not negative' % (name, qc))
    if chars.c1 != chars.c2 and form.B(chars.c1, chars.c2) >= 0:
        raise InvalidCharacteristic(
            'c1 and c2 lie in different components, B(c1, c2) = %s'
            % form.B(chars.c1, chars.c2)
        )
    return chars


MAIN_FORM = QuadraticForm2(MAIN_GRAM)
MAIN_CHARACTERISTIC = ThetaCharacteristic(MAIN_A, MAIN_B, MAIN_C1, MAIN_C2)


def H_series(T):
    """H(q) = sum_n (-1)^n q^(3n^2+2n) (1 + q^(2n+1)) sum_{|j|<=n} (-1)^j q^(-j^2).

    The n-th outer term starts at q^(2n^2+2n).
    """
    coeffs = {}
    n = 0
    while (2 * n * n + 2 * n) * SCALE < T:
        sign = -1 if n % 2 else 1
        for j in range(-n, n + 1):
            term = sign * (-1 if j % 2 else 1)
            for e in (3 * n * n + 2 * n - j * j, 3 * n * n + 4 * n + 1 - j * j):
                coeffs[e * SCALE] = coeffs.get(e * SCALE, 0) + term
        n += 1
    return QSeries(coeffs, T)


def cone_sum_series(chars, T, form=MAIN_FORM):
    """H as the signed sum over the forward and backward cones

        (sum_{n+j>=0, n-j>=0} - sum_{n+j<0, n-j<0}) (-1)^(n+j) q^(3n^2-j^2+2n).

    Only the characteristic of the main chain has this exact rational form.
    """
    if chars != MAIN_CHARACTERISTIC or form != MAIN_FORM:
        raise UnsupportedCharacteristic(
            'exact cone sum only exists for %s' % (MAIN_CHARACTERISTIC,)
        )
    coeffs = {}

    def put(n, j, sign):
        e = (3 * n * n - j * j + 2 * n) * SCALE
        coeffs[e] = coeffs.get(e, 0) + sign * (-1 if (n + j) % 2 else 1)

    # forward cone n >= |j|, exponent >= 2n^2 + 2n
    n = 0
    while (2 * n * n + 2 * n) * SCALE < T:
        for j in range(-n, n + 1):
            put(n, j, 1)
        n += 1
    # backward cone n = -m with m > |j|, exponent >= 2m^2 - 1
    m = 1
    while (2 * m * m - 1) * SCALE < T:
        for j in range(-(m - 1), m):
            put(-m, j, -1)
        m += 1
    return QSeries(coeffs, T)


def check_prop31_exact(T):
    """The cone sum and the defining double sum of H agree to horizon T."""
    return compare_series(
        'prop3.1', cone_sum_series(MAIN_CHARACTERISTIC, T), H_series(T)
    )
