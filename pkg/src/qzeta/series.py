"""Exact truncated power series in one variable q over the integers.

Every series carries an explicit truncation order N: coefficients of
q^0 .. q^N are exact, nothing is claimed beyond q^N. Binary operations
return the minimum of the operand orders so a result never pretends to
more precision than its inputs; shift() is the only order-raising
operation (prepending zeros adds exactly known low coefficients).

Coefficients are plain Python ints, so all arithmetic is exact at any
size. Instances are immutable and safe to share between threads.
"""

from math import comb


class QSeries:
    """Dense truncated series c_0 + c_1 q + ... + c_N q^N + O(q^{N+1})."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        coeffs = tuple(int(c) for c in coeffs)
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        if len(coeffs) != order + 1:
            raise ValueError(
                f"order {order} needs {order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("QSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "QSeries":
        return cls((0,) * (order + 1), order)

    @classmethod
    def one(cls, order: int) -> "QSeries":
        return cls((1,) + (0,) * order, order)

    @classmethod
    def from_terms(cls, terms, order: int) -> "QSeries":
        """Build a series from an {exponent: coefficient} mapping.

        Exponents beyond the requested order are dropped (they live in the
        O(q^{order+1}) tail).
        """
        coeffs = [0] * (order + 1)
        for exponent, c in terms.items():
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            if exponent <= order:
                coeffs[exponent] += int(c)
        return cls(coeffs, order)

    def coeff(self, i: int) -> int:
        """Coefficient of q^i; asking beyond the truncation order is an error."""
        if not 0 <= i <= self.order:
            raise IndexError(f"coefficient {i} outside known range 0..{self.order}")
        return self.coeffs[i]

    __getitem__ = coeff

    def agrees_through(self, other: "QSeries", order: int) -> bool:
        """Equality of coefficients 0..order; order must not exceed either operand's."""
        if order > min(self.order, other.order):
            raise ValueError(
                f"cannot compare through order {order}: operands known to "
                f"{self.order} and {other.order}"
            )
        return self.coeffs[: order + 1] == other.coeffs[: order + 1]

    def truncate(self, order: int) -> "QSeries":
        """Forget coefficients above the given (smaller or equal) order."""
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return QSeries(self.coeffs[: order + 1], order)

    def shift(self, m: int) -> "QSeries":
        """Multiply by q^m. The result order rises to order + m."""
        if m < 0:
            raise ValueError(f"shift must be non-negative, got {m}")
        return QSeries((0,) * m + self.coeffs, self.order + m)

    def scale(self, c: int) -> "QSeries":
        c = int(c)
        return QSeries(tuple(c * a for a in self.coeffs), self.order)

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), n
        )

    def __sub__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        return QSeries(
            tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), n
        )

    def __neg__(self):
        return self.scale(-1)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        n = min(self.order, other.order)
        out = [0] * (n + 1)
        bc = other.coeffs
        for i, a in enumerate(self.coeffs[: n + 1]):
            if a:
                for j in range(min(n - i, other.order) + 1):
                    b = bc[j]
                    if b:
                        out[i + j] += a * b
        return QSeries(out, n)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        """Repeated squaring, truncated at this series' order."""
        if e < 0:
            raise ValueError(f"negative power {e}")
        result = QSeries.one(self.order)
        base = self
        while e > 0:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"QSeries([{head}{tail}], order={self.order})"


def geom_pow(m: int, r: int, order: int) -> QSeries:
    """Expansion of (1 - q^m)^(-r) = sum_j C(j+r-1, r-1) q^{j m}.

    The binomial coefficients are computed directly, no series inversion.
    """
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    if r < 1:
        raise ValueError(f"power must be positive, got {r}")
    coeffs = [0] * (order + 1)
    for j in range(order // m + 1):
        coeffs[j * m] = comb(j + r - 1, r - 1)
    return QSeries(coeffs, order)


def _mul_one_factor(coeffs, g, sign):
    # in-place multiply by (1 + sign*q^g), descending so c[i-g] is still old
    for i in range(len(coeffs) - 1, g - 1, -1):
        coeffs[i] += sign * coeffs[i - g]


def _div_one_factor(coeffs, g, sign):
    # in-place divide by (1 + sign*q^g): b[i] = c[i] - sign*b[i-g], ascending
    for i in range(g, len(coeffs)):
        coeffs[i] -= sign * coeffs[i - g]


def product_form(factors, order: int) -> QSeries:
    """Truncated product of factor families prod_{n>=0} (1 + sign*q^{first + n*step})^power.

    Each factor is a tuple (first, step, sign, power) with first >= 1,
    step >= 1, sign in {+1, -1} and power any integer (negative powers
    divide). A factor with first = 0 would have constant term 0 or 2 and
    the product would leave the monic integer series ring, so it is
    rejected. Exponents beyond the truncation order contribute nothing
    and are skipped.
    """
    coeffs = [0] * (order + 1)
    coeffs[0] = 1
    for first, step, sign, power in factors:
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        if step < 1:
            raise ValueError(f"step must be positive, got {step}")
        if first < 1:
            raise ValueError(
                f"first exponent must be >= 1 (constant term {1 + sign} is not a unit)"
            )
        if power == 0:
            continue
        apply = _mul_one_factor if power > 0 else _div_one_factor
        for g in range(first, order + 1, step):
            for _ in range(abs(power)):
                apply(coeffs, g, sign)
    return QSeries(coeffs, order)
