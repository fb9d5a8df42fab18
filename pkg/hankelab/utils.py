import math


class ConvergenceError(RuntimeError):
    """An iteration did not reach its own stopping criterion.

    ``iterations`` holds the number of steps that were taken before
    giving up.
    """
    def __init__(self, message, iterations=None):
        super(ConvergenceError, self).__init__(message)
        self.iterations = iterations


class InstabilityError(ArithmeticError):
    """A forward recurrence was asked for entries outside the range in
    which it can be trusted."""


class OpenInterval(object):
    """Some parameters are only defined on an open interval, such as the
    elliptic modulus living in (0, 1). We use a custom type to represent
    this so that membership reads naturally: ``k in MODULUS``.
    """
    def __init__(self, start, end, name='value'):
        self.start = start
        self.end = end
        self.name = name

    def __contains__(self, value):
        try:
            return self.start < value < self.end
        except TypeError:
            return False

    def __repr__(self):
        return 'OpenInterval(%r, %r)' % (self.start, self.end)

    def check(self, value):
        """Return ``value`` as a float or raise ``ValueError``."""
        if value not in self:
            raise ValueError('{} must lie in ({}, {}), got {!r}'.format(
                self.name, self.start, self.end, value))
        return float(value)


MODULUS = OpenInterval(0.0, 1.0, name='modulus k')


def is_nonpositive_integer(value):
    return value <= 0 and float(value).is_integer()


def richardson(partial_sums):
    """Extrapolate partial sums taken at N, 2N, 4N, ... terms.

    The sums are assumed to approach their limit with an error expansion
    in integer powers of 1/N, which is the case for series whose terms
    behave like n**-2 * (c0 + c1/n + ...). Returns the extrapolated value
    and the difference between the last two diagonal entries as an error
    estimate.
    """
    table = [list(map(float, partial_sums))]
    if not table[0]:
        raise ValueError('no partial sums given')
    power = 1
    while len(table[-1]) > 1:
        previous = table[-1]
        factor = 2.0 ** power - 1.0
        table.append([
            previous[i + 1] + (previous[i + 1] - previous[i]) / factor
            for i in range(len(previous) - 1)
        ])
        power += 1
    estimate = table[-1][0]
    if len(table) > 1:
        error = abs(estimate - table[-2][-1])
    else:
        error = math.inf
    return estimate, error


def format_number(value):
    """Shortest decimal string that round-trips to the same binary64."""
    return repr(float(value))
