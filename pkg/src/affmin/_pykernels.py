"""Pure-numpy reference versions of the compiled kernels."""
import numpy as np


def measured_overlap(s, basis, dim_a, dim_b):
    """Return ``Tr[S Pi(S)]`` for the local measurement in ``basis``.

    ``basis`` holds the measurement vectors of subsystem A as columns. The
    value equals the sum over outcomes of the squared Frobenius norm of the
    conditional block ``(<v_k| x 1) S (|v_k> x 1)``.
    """
    s4 = s.reshape(dim_a, dim_b, dim_a, dim_b)
    blocks = np.einsum("ak,aibj,bk->kij", basis.conj(), s4, basis, optimize=False)
    return float(np.sum(blocks.real ** 2 + blocks.imag ** 2))


def conditional_blocks(s, basis, dim_a, dim_b):
    s4 = s.reshape(dim_a, dim_b, dim_a, dim_b)
    return np.einsum("ak,aibj,bk->kij", basis.conj(), s4, basis, optimize=False)
