"""State construction: singlets, covering products, the full superposition."""

import dataclasses
import math

import numpy as np
import pytest

from rvb_ladder import (build_ladder, covering_state, dump_state,
                        enumerate_coverings, rvb_state, singlet_pair,
                        total_spin_squared)

import oracles

INV_SQRT2 = 1.0 / math.sqrt(2.0)


def test_singlet_pair_two_sites():
    psi = singlet_pair(0, 1, 2)
    # index = bit0 + 2*bit1, bit = 1 means down
    assert np.allclose(psi, [0.0, -INV_SQRT2, INV_SQRT2, 0.0])


def test_singlet_pair_direction_flip_negates():
    assert np.allclose(singlet_pair(1, 0, 2), -singlet_pair(0, 1, 2))


def test_singlet_pair_normalized_overlap():
    psi = singlet_pair(0, 1, 2)
    assert abs(np.dot(psi, psi) - 1.0) < 1e-12


def test_singlet_pair_rejects_equal_sites():
    with pytest.raises(ValueError):
        singlet_pair(1, 1, 2)


def test_covering_state_single_dimer():
    assert np.allclose(covering_state([(0, 1)], 2), singlet_pair(0, 1, 2))


def test_covering_state_product_structure():
    psi = covering_state([(0, 1), (2, 3)], 4)
    nonzero = np.flatnonzero(np.abs(psi) > 1e-15)
    assert len(nonzero) == 4
    assert np.allclose(np.abs(psi[nonzero]), 0.5)
    # product of the two independent singlets
    want = np.kron(singlet_pair(0, 1, 2), singlet_pair(0, 1, 2))
    assert np.allclose(psi, want)


def test_covering_state_order_independent():
    a = covering_state([(0, 1), (2, 3)], 4)
    b = covering_state([(2, 3), (0, 1)], 4)
    assert np.allclose(a, b)


def test_covering_state_matches_oracle_products():
    lat = build_ladder(3, "open")
    for covering in enumerate_coverings(lat):
        got = covering_state(covering, lat.n)
        want = oracles.oracle_state([covering], lat.n)
        assert np.allclose(got, want, atol=1e-12)


def test_covering_state_rejects_partial_cover():
    with pytest.raises(ValueError):
        covering_state([(0, 1)], 4)
    with pytest.raises(ValueError):
        covering_state([(0, 1), (1, 2)], 4)


def test_rvb_state_matches_oracle_small():
    for m, boundary in ((2, "open"), (3, "open"), (2, "periodic"),
                        (3, "periodic"), (4, "periodic")):
        lat = build_ladder(m, boundary)
        psi = rvb_state(lat)
        want = oracles.oracle_state(enumerate_coverings(lat), lat.n)
        assert np.allclose(psi, want, atol=1e-10), (m, boundary)


def test_rvb_state_matches_oracle_twist():
    lat = build_ladder(3, "periodic", "twist")
    psi = rvb_state(lat)
    want = oracles.oracle_state(enumerate_coverings(lat), lat.n)
    assert np.allclose(psi, want, atol=1e-10)


def test_rvb_state_real_and_normalized(ladder_state):
    for m, b, w in oracles.EXPECTED:
        lat, psi = ladder_state(m, b, w)
        assert np.all(np.isreal(psi))
        assert abs(np.linalg.norm(psi) - 1.0) < 1e-12


def test_rvb_state_is_total_singlet(ladder_state):
    for m, b, w in oracles.EXPECTED:
        _, psi = ladder_state(m, b, w)
        assert total_spin_squared(psi) < 1e-10, (m, b, w)


def test_total_spin_squared_detects_non_singlets():
    up_up = np.zeros(4)
    up_up[0] = 1.0  # S = 1, S(S+1) = 2
    assert abs(total_spin_squared(up_up) - 2.0) < 1e-12
    triplet = np.zeros(4)
    triplet[1] = triplet[2] = INV_SQRT2  # S = 1, m = 0
    assert abs(total_spin_squared(triplet) - 2.0) < 1e-12


def test_rvb_state_odd_periodic_forbid_equals_open(ladder_state):
    _, per = ladder_state(3, "periodic", "forbid")
    _, opn = ladder_state(3, "open", "forbid")
    assert np.allclose(per, opn, atol=1e-14)


def test_rvb_state_errors_when_no_covering():
    # forbid every edge: the covering sum is empty and must be rejected
    lat = build_ladder(3, "open")
    no_dimers = dataclasses.replace(
        lat, edges=tuple(dataclasses.replace(e, dimer_allowed=False)
                         for e in lat.edges))
    with pytest.raises(ValueError):
        rvb_state(no_dimers)


def test_dump_state_roundtrip(tmp_path):
    lat = build_ladder(2, "open")
    psi = rvb_state(lat)
    path = tmp_path / "state.txt"
    dump_state(psi, path, lat.m, lat.boundary)
    lines = path.read_text().splitlines()
    assert lines[0] == "rvb n=4 boundary=open m=2"
    values = [float(tok) for tok in lines[1:]]
    assert len(values) == 16
    assert np.allclose(values, psi, atol=1e-16)
