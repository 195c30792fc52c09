"""Exception hierarchy.

Two roots matter to callers: ``InputError`` means the request itself was bad
(the CLI exits with 2), ``ConsistencyError`` means two independent
computations disagreed (the CLI exits with 3).
"""


class SsweilError(Exception):
    pass


class InputError(SsweilError, ValueError):
    pass


class ConsistencyError(SsweilError, AssertionError):
    pass


# finitefield
class UnsupportedField(InputError):
    pass


class NotPrime(InputError):
    pass


class ZeroInput(InputError):
    pass


class WrongCharacteristic(InputError):
    pass


# intpoly
class CountOutOfRange(InputError):
    pass


class NonIntegerCoefficient(ConsistencyError):
    pass


class NotSupersingular(InputError):
    pass


class OddMultiplicity(ConsistencyError):
    pass


class NonExactDivision(ConsistencyError):
    pass


# curves
class FieldTooLarge(InputError):
    pass


class UnsupportedFamily(InputError):
    pass


class SingularModel(InputError):
    pass


# weilclass
class Inconsistent(ConsistencyError):
    pass


class NotInTable(InputError):
    pass


class AmbiguousTableMatch(ConsistencyError):
    pass


class TableMismatch(ConsistencyError):
    pass


class ExcludedCase(InputError):
    pass


# twistlab
class NotAutomorphism(ConsistencyError):
    pass


class PreconditionFailed(InputError):
    pass


class NotMaximal(ConsistencyError):
    pass


class NoValidMatching(ConsistencyError):
    pass
