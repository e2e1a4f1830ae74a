"""Exception types shared by all modules."""


class DowncatError(Exception):
    """Base class for all library errors."""


class SizeLimitExceeded(DowncatError):
    """A search or materialization would exceed the configured bound."""


class ParseError(DowncatError):
    """Malformed input file (JSON category format)."""


class NotComposable(DowncatError):
    """Composition requested for a non-composable pair."""


class NotACongruence(NotComposable):
    """A hom-set partition is not closed under composition."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotFactorizable(DowncatError):
    """No (minus, plus) factorization found; the structure is invalid."""


class CycleDetected(DowncatError):
    """The <' relation has a cycle; carries the witness cycle."""

    def __init__(self, cycle):
        super().__init__(f"degree relation has a cycle: {cycle}")
        self.cycle = list(cycle)


class NotIdempotent(DowncatError):
    """split_idempotent called on a non-idempotent morphism."""


class NotSurjective(DowncatError):
    """largest_section called on a non-surjective simplex map."""


class NotParallel(DowncatError):
    """Order or equivalence queried for non-parallel morphisms."""


class NotNatural(DowncatError):
    """A component family fails a naturality square."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotWeqInverting(DowncatError):
    """Factorization requested for a functor that does not invert weq."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DoesNotRespectEquivalence(DowncatError):
    """A functor disagrees on an equivalent parallel pair; carries the pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InsufficientTruncation(DowncatError):
    """The input simplicial set is not materialized deep enough."""


class PairingFailure(DowncatError):
    """An outsider could not be matched into a horn pair."""

    def __init__(self, message, outsider=None):
        super().__init__(message)
        self.outsider = outsider


class ScheduleBroken(DowncatError):
    """A filling schedule step is not a valid inner horn pushout."""

    def __init__(self, message, step=None):
        super().__init__(message)
        self.step = step
