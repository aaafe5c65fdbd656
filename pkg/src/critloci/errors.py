class InternalCheckError(RuntimeError):
    """A structural invariant that should hold by construction failed.

    Raised when a computation contradicts something the library itself
    guarantees (e.g. gauge directions falling outside a Hessian kernel at a
    stable critical point).  Distinct from ValueError, which flags bad input.
    """
