"""Exception types shared across the workbench."""


class PisError(Exception):
    """Base class for all workbench errors."""


class NotASemilattice(PisError):
    """A join-table axiom (idempotence, commutativity, associativity,
    neutrality of zero, absorption by the whole ring) is violated."""


class NotLocal(PisError):
    """Some proper ideal does not lie below the designated maximal ideal."""


class BadIndex(PisError):
    """A join-table entry or designated index is out of range."""


class BadParameter(PisError):
    """A builtin-family parameter is outside its allowed range."""


class EmptyProduct(PisError):
    """A ring product needs at least one factor."""


class ShapeMismatch(PisError):
    """An ideal tuple does not fit the ring it is used with."""


class LocalRing(PisError):
    """The prime ideal sum graph is only built for products of n >= 2 factors."""


class MalformedRotation(PisError):
    """A rotation system does not cover the graph's edge ends exactly once."""


class Disconnected(PisError):
    """The operation requires a connected graph."""


class OutOfRange(PisError):
    """A closed-form formula was queried outside its domain."""


class CorruptLedger(PisError):
    """A ledger line could not be parsed."""


class BudgetExhausted(PisError):
    """A search ran out of its node-expansion budget before concluding."""
