import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qubitsep import InvalidParameterError, real_roots

coeff = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)


def _poly_magnitude(coeffs, x):
    return sum(abs(c) * abs(x) ** (len(coeffs) - 1 - i) for i, c in enumerate(coeffs))


def test_simple_quadratic():
    assert np.allclose(real_roots([1, 0, -1]), [-1, 1], atol=1e-14)


def test_quadratic_without_real_roots():
    assert real_roots([1, 0, 1]).size == 0


def test_double_root_is_clustered():
    out = real_roots([1, -2, 1])
    assert out.shape == (1,)
    assert abs(out[0] - 1.0) < 1e-7


def test_triple_root():
    out = real_roots([1, -6, 12, -8])
    assert out.shape == (1,)
    assert abs(out[0] - 2.0) < 1e-5


def test_reference_cubic():
    roots = real_roots([1, -13.65, 3.6, -0.2])
    assert roots.shape == (3,)
    smallest = roots[np.argmin(np.abs(roots))]
    assert abs(smallest - 0.0792) < 5e-5
    for r in roots:
        assert abs(np.polyval([1, -13.65, 3.6, -0.2], r)) < 1e-12 * _poly_magnitude(
            [1, -13.65, 3.6, -0.2], r
        )


def test_reference_quartic():
    coeffs = [1, -18.65, 18.05, -3.8, 0.2]
    roots = real_roots(coeffs)
    smallest = roots[np.argmin(np.abs(roots))]
    assert abs(smallest - 0.0816) < 5e-4
    for r in roots:
        assert abs(np.polyval(coeffs, r)) < 1e-12 * _poly_magnitude(coeffs, r)


def test_biquadratic():
    assert np.allclose(real_roots([1, 0, -5, 0, 4]), [-2, -1, 1, 2], atol=1e-10)


def test_quartic_without_real_roots():
    assert real_roots([1, 0, 0, 0, 1]).size == 0


def test_leading_zero_reduction():
    assert np.allclose(real_roots([0, 1.0, -1.0]), [1.0], atol=1e-14)
    assert np.allclose(real_roots([1e-20, 1.0, -1.0]), [1.0], atol=1e-12)


def test_invalid_inputs():
    with pytest.raises(InvalidParameterError):
        real_roots([])
    with pytest.raises(InvalidParameterError):
        real_roots([0.0, 0.0])
    with pytest.raises(InvalidParameterError):
        real_roots([1, 2, 3, 4, 5, 6])
    with pytest.raises(InvalidParameterError):
        real_roots([np.nan, 1.0])


@given(st.lists(coeff, min_size=3, max_size=5))
@settings(deadline=None, max_examples=300)
def test_matches_companion_matrix_solver(coeffs):
    # independent oracle: numpy's companion-matrix eigenvalues
    assume(abs(coeffs[0]) > 0.1)
    oracle = np.roots(coeffs)
    # skip ill-conditioned clusters where root identity is ambiguous
    if oracle.size > 1:
        gaps = [
            abs(x - y) for i, x in enumerate(oracle) for y in oracle[i + 1 :]
        ]
        assume(min(gaps) > 1e-3)
    real_oracle = sorted(r.real for r in oracle if abs(r.imag) < 1e-9)
    mine = real_roots(coeffs)
    assert len(mine) == len(real_oracle)
    for ours, theirs in zip(mine, real_oracle):
        assert abs(ours - theirs) < 1e-6 * (1.0 + abs(theirs))


def test_residual_postcondition_random():
    rng = np.random.default_rng(53)
    for _ in range(500):
        deg = int(rng.integers(2, 5))
        coeffs = rng.uniform(-20, 20, deg + 1)
        if abs(coeffs[0]) < 0.5:
            coeffs[0] = 0.5
        for r in real_roots(coeffs):
            mag = _poly_magnitude(coeffs, r)
            assert abs(np.polyval(coeffs, r)) < 1e-12 * max(mag, 1e-300)
