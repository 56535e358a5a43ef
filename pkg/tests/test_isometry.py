import numpy as np
import pytest

from k3period import (
    ComponentClass,
    Isometry,
    build_e8,
    certify_generators,
    classify_component,
    compose,
    fixed_plane,
    grassmann,
    inner,
    inverse,
    is_isometry,
    k3_e,
    k3_f,
    k3_lattice,
    orbit,
    reflection,
)
from k3period.errors import CertificateError, NotIsometryError, NotReflectionVectorError
from k3period.linalg import identity, int_kernel
from k3period.sampling import e8_roots, random_reflection_vector, random_reflection_word


def minus_id(L):
    return Isometry(-identity(L.rank), L)


class TestIsIsometry:
    def test_identity(self, K3):
        assert is_isometry(identity(22), K3)

    def test_reflection(self, K3):
        assert is_isometry(reflection(k3_e(1) - k3_f(1)).matrix, K3)

    def test_shear_breaks_form(self, K3):
        M = identity(22)
        M[0, 1] = 1
        assert not is_isometry(M, K3)
        with pytest.raises(NotIsometryError):
            Isometry(M, K3)


class TestReflection:
    def test_negative_root_swaps_e_and_f(self):
        s = reflection(k3_e(1) - k3_f(1))
        assert s(k3_e(1)) == k3_f(1)

    def test_positive_root(self):
        s = reflection(k3_e(1) + k3_f(1))
        assert s(k3_e(1)) == -k3_f(1)

    def test_isotropic_rejected(self):
        with pytest.raises(NotReflectionVectorError):
            reflection(k3_e(1))

    def test_norm_minus_two_matches_plus_formula(self, rng, K3):
        for _ in range(50):
            d = random_reflection_vector(rng, norm=-2)
            x = K3.vector(rng.integers(-4, 5, size=22))
            assert reflection(d)(x) == x + inner(x, d) * d

    def test_properties_on_samples(self, rng, K3):
        for _ in range(200):
            d = random_reflection_vector(rng)
            s = reflection(d)
            assert is_isometry(s.matrix, K3)
            assert compose(s, s) == Isometry.identity(K3)
            assert s.det == -1
            assert s(d) == -d
            perp = int_kernel(np.array(d.coords, dtype=object).dot(K3.gram).reshape(1, -1))
            for row in perp[:5]:
                v = K3.vector(row)
                assert s(v) == v


class TestGroup:
    def test_involution_inverse(self):
        s = reflection(k3_e(1) - k3_f(1))
        assert inverse(s) == s

    def test_words(self, rng, K3):
        for _ in range(10):
            g = random_reflection_word(rng, 4)
            assert compose(g, inverse(g)) == Isometry.identity(K3)
            assert is_isometry(g.matrix, K3)


class TestComponents:
    def test_minus_identity(self, K3):
        c = classify_component(minus_id(K3))
        assert c == ComponentClass(1, -1)
        assert c.special and not c.preserving

    def test_identity(self, K3):
        assert classify_component(Isometry.identity(K3)) == ComponentClass(1, 1)

    def test_negative_root_reflection(self):
        assert classify_component(reflection(k3_e(1) - k3_f(1))) == ComponentClass(-1, 1)

    def test_reflection_classes(self, rng):
        for _ in range(100):
            d = random_reflection_vector(rng)
            c = classify_component(reflection(d))
            assert c.det == -1
            assert c.preserving == (d.norm == -2)

    def test_homomorphism(self, rng):
        for _ in range(50):
            g = random_reflection_word(rng, int(rng.integers(1, 7)))
            h = random_reflection_word(rng, int(rng.integers(1, 7)))
            assert classify_component(compose(g, h)) == classify_component(g) * classify_component(h)


class TestFixedPlane:
    def test_u_root(self, P0):
        d = k3_e(1) - k3_f(1)
        cert = fixed_plane(d)
        assert cert.residual < 1e-9
        assert all(inner(d, d.lattice.vector(r)) == 0 for r in cert.plane.integral_rows())
        # P0 is another admissible answer: every spanning row is orthogonal to d
        assert grassmann.planes_equal(grassmann.apply(reflection(d), P0), P0)

    def test_positive_vector_plane_contains_it(self):
        d = k3_e(1) + k3_f(1)
        cert = fixed_plane(d)
        assert cert.residual < 1e-9
        assert list(cert.plane.basis[-1]) == list(d.coords)
        image = grassmann.apply(reflection(d), cert.plane)
        assert grassmann.planes_equal(image, cert.plane)
        assert not grassmann.oriented_equal(image, cert.plane)

    def test_e8_block_root(self, K3, P0):
        d = K3.basis_vector(0)
        cert = fixed_plane(d)
        assert cert.residual < 1e-9
        assert grassmann.oriented_equal(grassmann.apply(reflection(d), P0), P0)

    def test_pointwise_fixed_for_negative_norm(self, rng):
        for _ in range(20):
            d = random_reflection_vector(rng, norm=-2)
            cert = fixed_plane(d)
            s = reflection(d)
            for row in cert.plane.integral_rows():
                v = d.lattice.vector(row)
                assert s(v) == v

    def test_bad_norm(self):
        with pytest.raises(NotReflectionVectorError):
            fixed_plane(k3_e(1))


class TestCertify:
    def test_pair(self):
        certs = certify_generators([k3_e(1) - k3_f(1), k3_e(1) + k3_f(1)])
        assert len(certs) == 2
        assert all(c.residual < 1e-9 for c in certs)

    def test_empty(self):
        assert certify_generators([]) == []

    def test_bad_root_index(self):
        with pytest.raises(CertificateError) as info:
            certify_generators([k3_e(1)])
        assert info.value.index == 0
        with pytest.raises(CertificateError) as info:
            certify_generators([k3_e(1) - k3_f(1), 2 * k3_e(2)])
        assert info.value.index == 1


class TestOrbit:
    def test_swap(self):
        res = orbit(k3_e(1), [reflection(k3_e(1) - k3_f(1))])
        assert set(res.vectors) == {k3_e(1), k3_f(1)}
        assert not res.truncated

    def test_no_generators(self):
        assert orbit(k3_e(1), []).vectors == [k3_e(1)]

    def test_e8_weyl_orbit(self):
        E8 = build_e8()
        gens = [reflection(E8.basis_vector(i)) for i in range(8)]
        res = orbit(E8.basis_vector(0), gens, cap=1000)
        assert len(res.vectors) == 240
        assert not res.truncated
        assert {v.coords for v in res.vectors} == set(e8_roots())

    def test_truncation(self):
        E8 = build_e8()
        gens = [reflection(E8.basis_vector(i)) for i in range(8)]
        res = orbit(E8.basis_vector(0), gens, cap=50)
        assert len(res.vectors) == 50 and res.truncated

    def test_bad_cap(self):
        with pytest.raises(ValueError):
            orbit(k3_e(1), [], cap=0)


def test_k3_fixture_is_cached():
    assert k3_lattice() is k3_lattice()
