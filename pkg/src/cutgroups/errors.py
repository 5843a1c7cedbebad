"""Exception types shared across the package."""


class CutgroupsError(Exception):
    """Base class for all errors raised by this package."""


class MalformedCycle(CutgroupsError):
    """Cycle-notation text does not match the grammar."""


class PointOutOfRange(CutgroupsError):
    """A cycle mentions a point outside 1..degree."""


class RepeatedPoint(CutgroupsError):
    """A point occurs twice in a cycle-notation string."""


class DegreeMismatch(CutgroupsError):
    """Two permutations (or a group and a permutation) have different degrees."""


class EmptyGenerators(CutgroupsError):
    """A group was requested with no generators at all."""


class CapExceeded(CutgroupsError):
    """The group is larger than the element-enumeration cap.

    Signals that class-level analyses are unavailable for this group at
    this cap; callers either raise the cap or skip the group.
    """

    def __init__(self, order: int, cap: int):
        super().__init__(f"group order {order} exceeds enumeration cap {cap}")
        self.order = order
        self.cap = cap


class NotCoprime(CutgroupsError):
    """A power-map exponent is not coprime to the element order."""


class BoundExceeded(CutgroupsError):
    """An alternating-group degree is outside the supported range."""


class BadParam(CutgroupsError):
    """A family constructor received an invalid parameter."""


class DegreeTooLarge(CutgroupsError):
    """A construction would act on more points than the configured limit."""


class CorpusError(CutgroupsError):
    """Base class for corpus-file problems."""


class CorpusSyntaxError(CorpusError):
    """Malformed corpus file; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class DuplicateId(CorpusError):
    """Two corpus records share an id."""


class OrderMismatch(CorpusError):
    """A record's declared order disagrees with the computed group order."""

    def __init__(self, record_id: str, expected: int, actual: int):
        super().__init__(
            f"record {record_id!r}: declared order {expected}, computed {actual}"
        )
        self.record_id = record_id
