from . import moments, numeric, solvers, symbolic

__all__ = ["moments", "numeric", "solvers", "symbolic"]
