"""Enumeration limits and the exception hierarchy shared by every module."""
from __future__ import annotations

import contextlib
import dataclasses
from dataclasses import dataclass


class AlgebraError(Exception):
    """Base class for everything this package raises on purpose."""


class ValidationError(AlgebraError, ValueError):
    """An object failed an axiom check.

    ``axiom`` names the law that broke and ``witness`` holds the elements
    exhibiting the failure.
    """

    def __init__(self, axiom: str, witness=None, detail: str = ""):
        self.axiom = axiom
        self.witness = witness
        self.detail = detail
        msg = f"{axiom} fails"
        if witness is not None:
            msg += f" at {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class CapExceeded(AlgebraError):
    """An enumeration would exceed the configured size limit."""


class InternalError(AlgebraError):
    """A consistency check that the theory guarantees has failed (a bug)."""


@dataclass
class Config:
    # largest group order for which automorphisms are enumerated
    cap: int = 64
    # largest raw search space (candidate tuples) for backtracking / brute force
    search_cap: int = 2**20
    # the test oracles only brute-force search spaces up to this size
    oracle_limit: int = 2**20
    # literal interchange-law quadruple scan up to this many quadruples;
    # above it the equivalent [Ker d0, Ker d1] = 0 scan is used
    interchange_limit: int = 4_000_000
    # full n^3 associativity scan up to this order; Light's test above it
    assoc_limit: int = 96


config = Config()


@contextlib.contextmanager
def using(**overrides):
    """Temporarily override fields of the global :data:`config`."""
    old = dataclasses.asdict(config)
    for k, v in overrides.items():
        if not hasattr(config, k):
            raise AttributeError(k)
        setattr(config, k, v)
    try:
        yield config
    finally:
        for k, v in old.items():
            setattr(config, k, v)


def check_cap(size: int, what: str, limit: int | None = None) -> None:
    limit = config.cap if limit is None else limit
    if size > limit:
        raise CapExceeded(f"{what}: size {size} exceeds cap {limit}")
