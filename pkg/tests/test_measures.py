import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_density_matrix, random_unitary
from qodimer import concurrence, eof, purity
from qodimer.errors import InvalidState
from qodimer.measures import eof_from_concurrence, eof_series, purity_series

BELL = np.zeros((4, 4), dtype=complex)
BELL[np.ix_([0, 3], [0, 3])] = 0.5  # |ee>+|gg> projector

MIXED = np.eye(4, dtype=complex) / 4


def werner(p):
    return p * BELL + (1 - p) * MIXED


class TestPurity:
    def test_pure_projector(self):
        assert purity(BELL) == pytest.approx(1.0, abs=1e-14)

    def test_maximally_mixed(self):
        assert purity(MIXED) == pytest.approx(0.25, abs=1e-14)

    def test_werner(self):
        # p^2 + 2 p (1-p)/4 + (1-p)^2/4, frozen by direct matrix arithmetic
        assert purity(werner(0.6)) == pytest.approx(0.52, abs=1e-14)

    def test_trace_check(self):
        with pytest.raises(InvalidState):
            purity(1.1 * MIXED)


class TestConcurrence:
    def test_bell(self):
        assert concurrence(BELL) == pytest.approx(1.0, abs=1e-12)

    def test_separable(self):
        assert concurrence(MIXED) == 0.0

    def test_werner(self):
        # closed form (3p-1)/2 at p=0.6
        assert concurrence(werner(0.6)) == pytest.approx(0.4, abs=1e-12)

    def test_werner_brute_force(self, rng):
        # independent spectral evaluation of the same quantity
        rho = werner(0.6)
        sy = np.array([[0, -1j], [1j, 0]])
        syy = np.kron(sy, sy)
        ev = np.sort(np.abs(np.linalg.eigvals(rho @ syy @ rho.conj() @ syy)))[::-1]
        ev = np.sqrt(ev)
        assert concurrence(rho) == pytest.approx(max(0.0, ev[0] - ev[1:].sum()), abs=1e-12)

    def test_product_states_unentangled(self, rng):
        for _ in range(20):
            ra = random_density_matrix(rng, 2)
            rb = random_density_matrix(rng, 2)
            assert concurrence(np.kron(ra, rb)) <= 1e-8

    def test_not_hermitian_rejected(self):
        bad = MIXED.copy()
        bad[0, 1] = 0.1
        with pytest.raises(InvalidState):
            concurrence(bad)


class TestEof:
    def test_extremes(self):
        assert eof(BELL) == pytest.approx(1.0, abs=1e-12)
        assert eof(MIXED) == 0.0

    def test_werner_value(self):
        # h((1+sqrt(1-0.16))/2), evaluated independently below
        x = (1 + np.sqrt(1 - 0.16)) / 2
        expected = -x * np.log2(x) - (1 - x) * np.log2(1 - x)
        assert expected == pytest.approx(0.25023, abs=1e-5)
        assert eof(werner(0.6)) == pytest.approx(expected, abs=1e-12)

    def test_monotone_in_concurrence(self):
        c = np.linspace(0, 1, 200)
        e = eof_from_concurrence(c)
        assert np.all(np.diff(e) >= 0)
        assert e[0] == 0.0 and e[-1] == 1.0

    def test_local_unitary_invariance(self, rng):
        rho = werner(0.7)
        for _ in range(25):
            u = np.kron(random_unitary(rng), random_unitary(rng))
            rot = u @ rho @ u.conj().T
            assert concurrence(rot) == pytest.approx(concurrence(rho), abs=1e-10)
            assert eof(rot) == pytest.approx(eof(rho), abs=1e-10)


def test_series_helpers_match_scalar(rng):
    rhos = np.array([random_density_matrix(rng) for _ in range(6)])
    assert purity_series(rhos) == pytest.approx([purity(r) for r in rhos])
    assert eof_series(rhos) == pytest.approx([eof(r) for r in rhos])


@given(st.integers(0, 2**32 - 1))
def test_random_state_ranges(seed):
    rng = np.random.default_rng(seed)
    rho = random_density_matrix(rng)
    assert 0.25 <= purity(rho) <= 1.0 + 1e-12
    c = concurrence(rho)
    assert 0.0 <= c <= 1.0
    assert 0.0 <= eof(rho) <= 1.0
