# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""
import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline double complex _conj(double complex z) nogil:
    return z.real - 1j * z.imag


def measured_overlap(s, basis, Py_ssize_t dim_a, Py_ssize_t dim_b):
    cdef double complex[:, ::1] S = np.ascontiguousarray(s, dtype=np.complex128)
    cdef double complex[:, ::1] V = np.ascontiguousarray(basis, dtype=np.complex128)
    cdef double complex[:, ::1] C = np.empty((dim_b, dim_b), dtype=np.complex128)
    cdef Py_ssize_t k, a, b, i, j
    cdef double complex w
    cdef double total = 0.0
    with nogil:
        for k in range(dim_a):
            for i in range(dim_b):
                for j in range(dim_b):
                    C[i, j] = 0
            for a in range(dim_a):
                for b in range(dim_a):
                    w = _conj(V[a, k]) * V[b, k]
                    if w.real == 0.0 and w.imag == 0.0:
                        continue
                    for i in range(dim_b):
                        for j in range(dim_b):
                            C[i, j] = C[i, j] + w * S[a * dim_b + i, b * dim_b + j]
            for i in range(dim_b):
                for j in range(dim_b):
                    total += C[i, j].real * C[i, j].real + C[i, j].imag * C[i, j].imag
    return total


def conditional_blocks(s, basis, Py_ssize_t dim_a, Py_ssize_t dim_b):
    cdef double complex[:, ::1] S = np.ascontiguousarray(s, dtype=np.complex128)
    cdef double complex[:, ::1] V = np.ascontiguousarray(basis, dtype=np.complex128)
    out = np.zeros((dim_a, dim_b, dim_b), dtype=np.complex128)
    cdef double complex[:, :, ::1] C = out
    cdef Py_ssize_t k, a, b, i, j
    cdef double complex w
    with nogil:
        for k in range(dim_a):
            for a in range(dim_a):
                for b in range(dim_a):
                    w = _conj(V[a, k]) * V[b, k]
                    for i in range(dim_b):
                        for j in range(dim_b):
                            C[k, i, j] = C[k, i, j] + w * S[a * dim_b + i, b * dim_b + j]
    return out
