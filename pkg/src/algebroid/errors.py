"""Exception types shared by the checkers.

Every axiom failure carries a short name and a witness (basis indices or a
vector) so reports can say exactly where a law broke.
"""


class AxiomError(ValueError):
    def __init__(self, name, witness=None, detail=""):
        self.name = name
        self.witness = witness
        self.detail = detail
        msg = name
        if witness is not None:
            msg += " at %s" % (witness,)
        if detail:
            msg += ": " + detail
        super().__init__(msg)


class NotAssociative(AxiomError):
    def __init__(self, i, j, k):
        super().__init__("NotAssociative", (i, j, k))


class UnitLawFails(AxiomError):
    def __init__(self, i):
        super().__init__("UnitLawFails", i)


class NotMultiplicative(AxiomError):
    def __init__(self, i, j):
        super().__init__("NotMultiplicative", (i, j))


class UnitNotPreserved(AxiomError):
    def __init__(self):
        super().__init__("UnitNotPreserved")


class RangesDoNotCommute(AxiomError):
    def __init__(self, b, b2):
        super().__init__("RangesDoNotCommute", (b, b2))


class DoesNotDescend(AxiomError):
    def __init__(self, witness, detail=""):
        super().__init__("DoesNotDescend", witness, detail)


class NotAModule(AxiomError):
    def __init__(self, witness, detail=""):
        super().__init__("NotAModule", witness, detail)


class InternalCheckFailed(AssertionError):
    """A statement that the theory guarantees for verified input failed."""


class EquivalenceViolated(InternalCheckFailed):
    pass


class SchemaError(ValueError):
    pass
