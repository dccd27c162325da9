import pytest

from stabsym.chern import (Stabilizer, SymplecticData, c1_orbit_fingerprint, c1_stabilize,
                           fibre_sum_signature, p1_number_product_with_surfaces,
                           rational_elliptic_surface, symplectic_from_json, torus4)
from stabsym.ring import RingError, s2xs2


def _s2xs2(a=2, b=2):
    r = s2xs2()
    return SymplecticData("S2xS2", 0, r, r.element("u1", a) + r.element("u2", b))


def test_stabilize_cp_and_surfaces():
    x = _s2xs2()
    assert str(c1_stabilize(x, Stabilizer.cp(1))) == "2*u1 + 2*u2 + 2*h"
    assert str(c1_stabilize(x, Stabilizer.cp(3))) == "2*u1 + 2*u2 + 4*h"
    assert str(c1_stabilize(x, Stabilizer.parse("T2"))) == "2*u1 + 2*u2"
    assert str(c1_stabilize(x, Stabilizer.parse("Sigma2^2"))) == "2*u1 + 2*u2 - 2*h1 - 2*h2"


def test_stabilize_is_additive_over_factors():
    x = _s2xs2(1, 4)
    two = c1_stabilize(x, Stabilizer.surfaces(2))
    ring = two.ring
    base = ring.include(x.c1, 0)
    assert two - base == ring.element("h1", 2) + ring.element("h2", 2)


def test_p1_numbers():
    z = SymplecticData("Z", -40)
    assert [p1_number_product_with_surfaces(z, k) for k in range(4)] == [-120] * 4
    assert p1_number_product_with_surfaces(rational_elliptic_surface(), 1) == -24
    assert p1_number_product_with_surfaces(torus4(), 2) == 0


def test_fibre_sum_signature():
    e1 = rational_elliptic_surface()
    assert fibre_sum_signature([torus4()] + [e1] * 5) == -40
    assert fibre_sum_signature([torus4()] + [e1] * 3) == -24
    assert fibre_sum_signature([e1]) == -8


def test_fingerprints():
    assert c1_orbit_fingerprint(_s2xs2()) == (2, 8, True)
    assert c1_orbit_fingerprint(_s2xs2(0, 0)) == (0, 0, True)
    assert c1_orbit_fingerprint(_s2xs2(1, 4)) == (1, 8, False)
    assert c1_orbit_fingerprint(_s2xs2(-2, -2)) == c1_orbit_fingerprint(_s2xs2(2, 2))


def test_hirzebruch_enforced():
    with pytest.raises(RingError):
        SymplecticData("bad", -8, p1_number=-20)
    with pytest.raises(RingError):
        SymplecticData("bad", 2, s2xs2())


def test_manifold_json():
    x = symplectic_from_json({"preset": "S2xS2", "c1": "2*u1+2*u2"})
    assert x.sigma == 0 and c1_orbit_fingerprint(x) == (2, 8, True)
    y = symplectic_from_json({"preset": "E1", "c1": [3, -1, -1, -1, -1, -1, -1, -1, -1, -1]})
    assert y.sigma == -8 and c1_orbit_fingerprint(y)[:2] == (1, 0)
