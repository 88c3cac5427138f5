#!/usr/bin/env python3
"""
Exception hierarchy for the affine Weyl group toolkit.

DomainError covers mathematical precondition failures (exit code 2 on the
command line), UsageError covers malformed input (exit code 1).
InternalInconsistency marks a failed cross-check between two computations.
"""


class AffWeylError(Exception):
    """Base class for every error raised by affweyl"""


class DomainError(AffWeylError):
    """A mathematical precondition was not met"""


class UsageError(AffWeylError):
    """The input could not be understood"""


# Domain errors

class CenterNotConnected(DomainError):
    """X modulo the root lattice has torsion"""


class SigmaUnsolvable(DomainError):
    """No integral coweight pairs to 1 with every simple root"""


class NotFinitary(DomainError):
    """A subset of affine simple reflections generates an infinite group"""


class ParabolicTooLarge(DomainError):
    """A finite parabolic subgroup exceeds the configured enumeration cap"""


class NotMinimalInCoset(DomainError):
    """An element is not the minimal representative of its coset"""


class NotDominant(DomainError):
    """A coweight is not dominant"""


class NotInWS(DomainError):
    """An element is not minimal in its coset wW"""


class NotRestricted(DomainError):
    """An element is not restricted"""


class NotInAWS(DomainError):
    """An element does not satisfy the double-minimality conditions for A"""


class FlavorMismatch(DomainError):
    """Two orbit labels live in different spaces or have different flavors"""


class BoxExceeded(DomainError):
    """A verification box exceeds the configured maximum"""


class NotRank2(DomainError):
    """Plotting requires a datum of rank 2"""


# Internal errors

class InternalInconsistency(AffWeylError, ArithmeticError):
    """Two independent computations of the same quantity disagree"""


# Usage errors

class MalformedSpec(UsageError):
    """A datum description is inconsistent or incomplete"""


class ParseError(UsageError):
    """An element, coweight or parabolic literal could not be parsed"""


class UnknownVerb(UsageError):
    """The command-line verb is not known"""


class UnknownLemma(UsageError):
    """The verification identifier is not known"""
