"""Walsh spectra, BCT moment identities, and uniformity certificates.

The Walsh transform of f at (u, v) is the signed character sum

    W_f(u, v) = sum over x of (-1)^(u.x + v.f(x))

with u.x the GF(2) dot product of bit strings. Sums of BCT powers over
nonzero (a, b) can be evaluated two independent ways: directly from the
table, or from the spectrum via

    sum T(a,b)^j = 2^(2n-4nj) * S_j - 2^(nj) * (2^(n+1) - 1)

where S_j is the sum of products W(g_i,a_i) W(e_i,a_i) W(g_i,b_i) W(e_i,b_i)
over all 4j-tuples whose a/b and g/e halves each XOR to zero. The boundary
correction assumes a permutation (rows a=0 and b=0 all equal 2^n); for
non-permutations the two routes legitimately differ.

Everything here is exact integer or Fraction arithmetic; no floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .sbox import SBox
from .tables import KTable, bct_fast

__all__ = [
    "WalshSpectrum",
    "walsh_spectrum",
    "bct_moment_direct",
    "bct_moment_walsh",
    "two_uniform_certificate",
    "CertificatePolynomial",
    "delta_uniform_certificate",
]

_MAX_SPECTRUM_N = 12  # full spectrum is 4^n int64 cells
_PARITY16 = None


def _parity16():
    global _PARITY16
    if _PARITY16 is None:
        p = np.arange(1 << 16, dtype=np.uint32)
        p ^= p >> 8
        p ^= p >> 4
        p ^= p >> 2
        p ^= p >> 1
        _PARITY16 = (p & 1).astype(np.int64)
    return _PARITY16


def _fwht(a: np.ndarray, axis: int = -1) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along one power-of-two axis."""
    a = np.moveaxis(np.array(a, dtype=np.int64, copy=True), axis, -1)
    n = a.shape[-1]
    h = 1
    while h < n:
        shaped = a.reshape(a.shape[:-1] + (n // (2 * h), 2, h))
        top = shaped[..., 0, :] + shaped[..., 1, :]
        bot = shaped[..., 0, :] - shaped[..., 1, :]
        a = np.stack((top, bot), axis=-2).reshape(a.shape)
        h *= 2
    return np.moveaxis(a, -1, axis)


class WalshSpectrum:
    """Full table of Walsh coefficients, values[u, v], exact int64."""

    def __init__(self, spec, values):
        arr = np.asarray(values, dtype=np.int64)
        if arr.shape != (spec.size, spec.size):
            raise ValueError("spectrum must be a 2^n x 2^n matrix")
        arr.flags.writeable = False
        self.spec = spec
        self.values = arr

    def __repr__(self):
        return f"WalshSpectrum({self.spec.label()})"


def walsh_spectrum(f: SBox) -> WalshSpectrum:
    """All 4^n Walsh coefficients via one batched transform, O(n * 4^n)."""
    n = f.spec.n
    if n > _MAX_SPECTRUM_N:
        raise ValueError(
            f"full spectrum needs 4^{n} cells; capped at n <= {_MAX_SPECTRUM_N}"
        )
    N = f.spec.size
    par = _parity16()
    # signs[x, v] = (-1)^(v . f(x)); transform over x gives W[u, v]
    signs = 1 - 2 * par[np.bitwise_and.outer(f.table, np.arange(N))]
    return WalshSpectrum(f.spec, _fwht(signs, axis=0))


# -- moments ----------------------------------------------------------------------


def bct_moment_direct(f: SBox, j: int, table: KTable | None = None) -> int:
    """sum of T(a, b)^j over nonzero a, b, from the table itself."""
    if j < 0:
        raise ValueError("moment order must be non-negative")
    N = f.spec.size
    if j == 0:
        return (N - 1) ** 2
    if table is None:
        table = bct_fast(f)
    elif table.kind != "BCT":
        raise ValueError(f"moments need a BCT table, got {table.kind}")
    vals, counts = np.unique(table.counts[1:, 1:], return_counts=True)
    return sum(int(c) * int(v) ** j for v, c in zip(vals, counts))


def _fourth_power_sum(W: np.ndarray) -> int:
    # |W| <= 2^n, so W^4 summed over 4^n cells stays far below 2^63 for n <= 6;
    # guard with object arithmetic beyond that.
    if W.shape[0] <= 64:
        return int((W.astype(np.int64) ** 4).sum())
    return int((W.astype(object) ** 4).sum())


def _constrained_quad_sum(W: np.ndarray, n: int) -> int:
    """The 8-fold constrained spectrum sum S_2, exactly.

    Factorization: with V_t(g, a) = W(g, a) * W(g^t, a), the sum equals
    sum over (t, s) of Q(t, s)^2 where Q(t, .) is the XOR-autocorrelation
    over a of V_t summed over g. Each autocorrelation is two transforms;
    intermediates are bounded by 2^(8n) and stay in int64 for n <= 5.
    """
    N = 1 << n
    gidx = np.arange(N)
    total = 0
    for t in range(N):
        V = W * W[gidx ^ t, :]
        X = _fwht(V, axis=1)
        P = (X * X).sum(axis=0)
        Q = _fwht(P)
        # inverse transform leaves an exact factor of N
        qs = [int(q) // N for q in Q]
        total += sum(q * q for q in qs)
    return total


def bct_moment_walsh(f: SBox, j: int, spectrum: WalshSpectrum | None = None) -> int:
    """Spectrum-side evaluation of the j-th BCT moment; j in {1, 2}.

    Exact for permutations (the boundary correction presumes one). The
    j=2 sum costs O(n * 2^3n) after factorization and is capped at n <= 5.
    """
    n = f.spec.n
    if j not in (1, 2):
        raise ValueError("spectrum-side moments are implemented for j in {1, 2}")
    if j == 2 and n > 5:
        raise ValueError("j=2 moment is capped at n <= 5")
    if spectrum is None:
        spectrum = walsh_spectrum(f)
    W = spectrum.values
    if j == 1:
        s1 = _fourth_power_sum(W)
        num = s1  # 2^(2n-4n) * S_1
        den = 1 << (2 * n)
    else:
        num = _constrained_quad_sum(W, n)
        den = 1 << (6 * n)
    if num % den:
        raise AssertionError("constrained spectrum sum not divisible by 2^(4nj-2n)")
    return num // den - (1 << (n * j)) * ((1 << (n + 1)) - 1)


def two_uniform_certificate(
    f: SBox, spectrum: WalshSpectrum | None = None
) -> tuple[int, int, int]:
    """Spectrum-only test for boomerang uniformity 2.

    Returns (lhs, rhs, gap) with

        lhs = S_2,   rhs = 2^(4n+1) * sum W^4 + 2^(9n+1) - 5*2^(8n) + 2^(7n+1)

    gap = lhs - rhs is non-negative for permutations and zero exactly when
    every nonzero BCT entry is 0 or 2 (for a permutation: f is APN).
    """
    n = f.spec.n
    if n > 5:
        raise ValueError("certificate evaluation is capped at n <= 5")
    if spectrum is None:
        spectrum = walsh_spectrum(f)
    W = spectrum.values
    lhs = _constrained_quad_sum(W, n)
    rhs = (
        (1 << (4 * n + 1)) * _fourth_power_sum(W)
        + (1 << (9 * n + 1))
        - 5 * (1 << (8 * n))
        + (1 << (7 * n + 1))
    )
    return lhs, rhs, lhs - rhs


# -- certificate polynomials --------------------------------------------------------


class CertificatePolynomial:
    """A real polynomial vanishing on the even integers 0..delta.

    phi(x) = sum A_j x^j must satisfy phi(x) = 0 for even x <= delta and
    phi(x) > 0 for even x in (delta, 2^n]; the second half depends on the
    ambient field size and is checked exactly (Fraction arithmetic) when a
    dimension is available.
    """

    def __init__(self, coefficients: Sequence, delta: int, n: int | None = None):
        if delta <= 0 or delta % 2:
            raise ValueError("target delta must be a positive even integer")
        self.coefficients = tuple(Fraction(c) for c in coefficients)
        self.delta = delta
        for x in range(0, delta + 1, 2):
            if self.evaluate(x) != 0:
                raise ValueError(f"certificate polynomial must vanish at {x}")
        if n is not None:
            self.validate(n)

    @classmethod
    def for_delta(cls, delta: int, n: int | None = None) -> "CertificatePolynomial":
        """The canonical choice: the product of (x - 2k) for k = 0..delta/2."""
        coeffs = [1]
        for k in range(0, delta + 1, 2):
            coeffs = [0] + coeffs
            for i in range(len(coeffs) - 1):
                coeffs[i] -= k * coeffs[i + 1]
        return cls(coeffs, delta, n)

    def evaluate(self, x: int) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def validate(self, n: int) -> None:
        """Check strict positivity at every even point in (delta, 2^n]."""
        for x in range(self.delta + 2, (1 << n) + 1, 2):
            if self.evaluate(x) <= 0:
                raise ValueError(
                    f"certificate polynomial must be positive at {x} for n={n}"
                )

    def __repr__(self):
        return f"CertificatePolynomial(delta={self.delta}, degree={len(self.coefficients) - 1})"


def delta_uniform_certificate(
    f: SBox,
    delta: int,
    phi: CertificatePolynomial | None = None,
    table: KTable | None = None,
) -> tuple[Fraction, bool]:
    """Moment-weighted certificate that every BCT count is at most delta.

    value = (2^n - 1)^2 * A_0 + sum_j A_j * (direct j-th moment) is always
    non-negative, and zero exactly when every nonzero-entry count lies in
    {0, 2, ..., delta}, i.e. the boomerang uniformity is at most delta.
    """
    if phi is None:
        phi = CertificatePolynomial.for_delta(delta, f.spec.n)
    else:
        if phi.delta != delta:
            raise ValueError("polynomial was built for a different delta")
        phi.validate(f.spec.n)
    if table is None:
        table = bct_fast(f)
    value = Fraction(0)
    for j, a_j in enumerate(phi.coefficients):
        if a_j:
            value += a_j * bct_moment_direct(f, j, table=table)
    if value < 0:
        raise AssertionError("certificate value must be non-negative")
    return value, value == 0
