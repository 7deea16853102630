"""Exception hierarchy.

Errors carry the offending data as attributes so callers (and the CLI) can
report precisely what failed instead of re-deriving it from the message.
"""

from __future__ import annotations


class SyzstabError(Exception):
    """Base class for all library errors."""


class DimensionMismatchError(SyzstabError):
    """A divisor class has the wrong number of coordinates for a surface."""

    def __init__(self, what: str, expected: int, got: int):
        self.what = what
        self.expected = expected
        self.got = got
        super().__init__(f"{what}: expected {expected} coordinates, got {got}")


class SurfaceValidationError(SyzstabError):
    """A surface description failed structural validation."""

    def __init__(self, surface_name: str, failed_checks: list[str]):
        self.surface_name = surface_name
        self.failed_checks = list(failed_checks)
        super().__init__(
            f"surface {surface_name!r} failed structural checks: {', '.join(failed_checks)}"
        )


class SlopeUndefinedError(SyzstabError):
    """The slope denominator h0 - rank is nonpositive for this bundle."""

    def __init__(self, bundle_label: str, denominator):
        self.bundle_label = bundle_label
        self.denominator = denominator
        super().__init__(
            f"slope undefined for {bundle_label}: h0 - rank = {denominator} <= 0 "
            "(the kernel of the evaluation map has no positive rank in this model)"
        )


class NefRayUnboundedError(SyzstabError):
    """No generator bounds the ray D - t*Cj; the cone data cannot be right."""

    def __init__(self, generator_index: int):
        self.generator_index = generator_index
        super().__init__(
            f"nef ray unbounded: no generator pairs positively with generator "
            f"#{generator_index}; the supplied effective-cone data violates the "
            "geometry this computation assumes"
        )


class PerturbationSearchError(SyzstabError):
    """The halving search for an ample perturbation ran out of candidates."""

    def __init__(self, last_epsilon, failed_condition: str):
        self.last_epsilon = last_epsilon
        self.failed_condition = failed_condition
        super().__init__(
            f"no epsilon in the halving sequence satisfied all conditions; "
            f"last tried {last_epsilon}, which failed: {failed_condition}"
        )


class HypothesisViolationError(SyzstabError):
    """Input violates a precondition of the destabilization pipeline."""

    def __init__(self, precondition: str, detail: str):
        self.precondition = precondition
        self.detail = detail
        super().__init__(f"hypothesis violated ({precondition}): {detail}")


class PipelineContradictionError(SyzstabError):
    """An inequality the pipeline guarantees under valid hypotheses failed.

    Reaching this means the surface data does not describe the geometry the
    guarantee assumes (or there is a bug); it is never swallowed.
    """

    def __init__(self, what: str, value):
        self.what = what
        self.value = value
        super().__init__(f"pipeline contradiction: {what} = {value}")


class DocumentError(SyzstabError):
    """A surface document failed to parse; carries the offending key path."""

    def __init__(self, path: str, key: str, detail: str):
        self.path = path
        self.key = key
        self.detail = detail
        super().__init__(f"{path}: key {key!r}: {detail}")
