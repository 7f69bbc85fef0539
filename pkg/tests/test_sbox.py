"""S-box construction, composition, affine maps, and file format."""

import io
from math import gcd

import numpy as np
import pytest

from bctlab import (
    AffineMap,
    SBox,
    affine_apply,
    boomerang_uniformity,
    compose,
    derivative,
    from_monomial,
    from_polynomial,
    gold,
    identity_sbox,
    inverse_table,
    make_field,
    modified_inverse,
    random_affine_permutation,
    random_permutation,
    read_sbox,
    write_sbox,
)


def test_sbox_validation():
    spec = make_field(3)
    with pytest.raises(ValueError):
        SBox(spec, [0] * 7)
    with pytest.raises(ValueError):
        SBox(spec, list(range(7)) + [8])
    f = SBox(spec, range(8))
    with pytest.raises(ValueError):
        f.table[0] = 1  # tables are frozen


def test_monomial_basics():
    spec = make_field(5)
    assert from_monomial(spec, 1) == identity_sbox(spec)
    assert from_monomial(spec, 3).is_permutation()  # gcd(3, 31) = 1
    f = from_monomial(make_field(4), 3)  # gcd(3, 15) = 3
    assert not f.is_permutation()
    # 3-to-1 on nonzero inputs
    nonzero_images = set(int(v) for v in f.table[1:])
    assert len(nonzero_images) == 5
    counts = np.bincount(f.table, minlength=16)
    assert all(counts[v] == 3 for v in nonzero_images)


def test_monomial_permutation_iff_gcd():
    for n in range(2, 11):
        spec = make_field(n)
        for d in range(0, spec.size - 1):
            assert from_monomial(spec, d).is_permutation() == (
                gcd(d, spec.size - 1) == 1
            )


def test_from_polynomial():
    spec = make_field(4)
    assert from_polynomial(spec, []) == SBox(spec, [0] * 16)
    assert from_polynomial(spec, [(1, 1)]) == identity_sbox(spec)
    # binomial x^(q+2) + gamma*x over GF(q^2), against scalar evaluation
    spec = make_field(6)
    q, gamma = 8, 5
    f = from_polynomial(spec, [(q + 2, 1), (1, gamma)])
    for x in range(spec.size):
        assert f[x] == spec.pow(x, q + 2) ^ spec.mul(gamma, x)


def test_is_permutation_examples():
    spec = make_field(4)
    assert identity_sbox(spec).is_permutation()
    assert not SBox(spec, [0] * 16).is_permutation()
    for n in range(3, 9):
        assert modified_inverse(n).is_permutation()


def test_inverse_table(rng):
    spec = make_field(5)
    ident = identity_sbox(spec)
    assert inverse_table(ident) == ident
    for _ in range(10):
        f = random_permutation(spec, rng)
        g = inverse_table(f)
        assert compose(f, g) == ident
        assert compose(g, f) == ident
        assert inverse_table(g) == f
    with pytest.raises(ValueError):
        inverse_table(SBox(spec, [0] * 32))


def test_compose(rng):
    spec = make_field(4)
    ident = identity_sbox(spec)
    f = random_permutation(spec, rng)
    assert compose(f, ident) == f
    assert compose(ident, f) == f
    for _ in range(5):
        a = random_permutation(spec, rng)
        b = random_permutation(spec, rng)
        c = random_permutation(spec, rng)
        assert compose(compose(a, b), c) == compose(a, compose(b, c))
    with pytest.raises(ValueError):
        compose(f, identity_sbox(make_field(5)))


def test_derivative(rng):
    spec = make_field(5)
    f = random_permutation(spec, rng)
    assert derivative(f, 0) == SBox(spec, [0] * 32)
    for a in (1, 7, 19):
        d = derivative(f, a)
        for x in range(spec.size):
            assert d[x] == d[x ^ a]


@pytest.mark.parametrize("f", [gold(5, 1), gold(6, 2)])
def test_gold_derivative_is_affine(f):
    # derivatives of a quadratic map satisfy the affinity identity everywhere
    spec = f.spec
    for a in range(1, spec.size):
        d = derivative(f, a).table
        xs = np.arange(spec.size)
        X, Y = np.meshgrid(xs, xs, indexing="ij")
        assert (d[X] ^ d[Y] ^ d[X ^ Y] ^ d[0] == 0).all()


def test_affine_map_matches_scalar_evaluation(rng):
    for n in (3, 4, 5):
        spec = make_field(n)
        for _ in range(5):
            linear = [int(rng.integers(0, spec.size)) for _ in range(n)]
            const = int(rng.integers(0, spec.size))
            m = AffineMap(spec, linear, const)
            for x in range(spec.size):
                acc = const
                for i, a in enumerate(linear):
                    acc ^= spec.mul(a, spec.pow(x, 1 << i))
                assert m.table[x] == acc


def test_affine_map_validation():
    spec = make_field(4)
    with pytest.raises(ValueError):
        AffineMap(spec, [1, 2])  # wrong coefficient count


def test_affine_apply_basics(rng):
    spec = make_field(4)
    f = random_permutation(spec, rng)
    ident_map = AffineMap(spec, [1] + [0] * 3, 0)
    assert affine_apply(ident_map, f, "pre") == f
    assert affine_apply(ident_map, f, "post") == f
    const_map = AffineMap(spec, [1] + [0] * 3, 9)
    assert np.array_equal(affine_apply(const_map, f, "post").table, f.table ^ 9)
    with pytest.raises(ValueError):
        affine_apply(const_map, f, "sideways")


def test_affine_sandwich_preserves_uniformities(rng):
    spec = make_field(4)
    f = modified_inverse(4, spec)
    base = boomerang_uniformity(f)
    a1 = random_affine_permutation(spec, rng)
    a2 = random_affine_permutation(spec, rng)
    g = affine_apply(a1, affine_apply(a2, f, "pre"), "post")
    rep = boomerang_uniformity(g)
    assert rep.boomerang_uniformity == base.boomerang_uniformity
    assert rep.differential_uniformity == base.differential_uniformity


def test_affine_apply_preserves_permutation_status(rng):
    spec = make_field(5)
    f = random_permutation(spec, rng)
    m = random_affine_permutation(spec, rng)
    assert affine_apply(m, f, "pre").is_permutation()
    assert affine_apply(m, f, "post").is_permutation()


# -- file format -------------------------------------------------------------------


def test_file_round_trip(tmp_path, rng):
    f = random_permutation(make_field(6), rng)
    path = tmp_path / "box.sbx"
    write_sbox(f, str(path))
    g = read_sbox(str(path))
    assert g == f


def test_read_hex_and_decimal():
    text = "n=2\n0x3 2 0x1 0\n"
    f = read_sbox(io.StringIO(text))
    assert list(f.table) == [3, 2, 1, 0]


def test_read_errors():
    with pytest.raises(ValueError):
        read_sbox(io.StringIO("m=2\n0 1 2 3\n"))
    with pytest.raises(ValueError):
        read_sbox(io.StringIO("n=2\n0 1 2\n"))  # wrong count
    with pytest.raises(ValueError):
        read_sbox(io.StringIO("n=2\n0 1 2 9\n"))  # out of range
    with pytest.raises(ValueError):
        read_sbox(io.StringIO("n=2\n0 1 two 3\n"))
    with pytest.raises(ValueError):
        read_sbox(io.StringIO("n=2\n0 1 2 3\n"), field=make_field(3))


def test_read_with_field_override():
    alt = make_field(2)
    f = read_sbox(io.StringIO("n=2\n0 1 2 3\n"), field=alt)
    assert f.spec == alt
