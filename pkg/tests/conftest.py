import random

import pytest

from projlink import EdgeSignedMap, MapError, PlanarMap, build_map

RANDOM_SEED = 20240601


def triangle_map() -> PlanarMap:
    return build_map([[0, 5], [2, 1], [4, 3]], [1, 0, 3, 2, 5, 4])


def digon_map() -> PlanarMap:
    return build_map([[0, 2], [1, 3]], [1, 0, 3, 2])


def k4_map() -> PlanarMap:
    return build_map(
        [[0, 2, 4], [6, 1, 8], [10, 3, 7], [9, 5, 11]],
        [1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10],
    )


def loop_map() -> PlanarMap:
    return build_map([[0, 1]], [1, 0])


@pytest.fixture
def triangle():
    return triangle_map()


@pytest.fixture
def digon():
    return digon_map()


@pytest.fixture
def k4():
    return k4_map()


@pytest.fixture
def hopf_signed(digon):
    return EdgeSignedMap(digon, (1, 1))


@pytest.fixture
def trefoil_signed(triangle):
    return EdgeSignedMap(triangle, (1, 1, 1))


@pytest.fixture
def borromean_signed(k4):
    return EdgeSignedMap(k4, (1,) * 6)


@pytest.fixture
def k4_mixed_signed(k4):
    return EdgeSignedMap(k4, (1, 1, 1, -1, -1, -1))


def random_sphere_maps(count: int, max_edges: int = 8, seed: int = RANDOM_SEED):
    """Rejection-sample connected sphere maps with a fixed RNG.

    Also returns a random edge signature per map so sign-dependent checks
    can share the corpus.
    """
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n_edges = rng.randint(1, max_edges)
        darts = list(range(2 * n_edges))
        rng.shuffle(darts)
        rotations = []
        i = 0
        while i < len(darts):
            k = rng.randint(1, min(4, len(darts) - i))
            rotations.append(darts[i : i + k])
            i += k
        pairing = []
        for e in range(n_edges):
            pairing.extend((2 * e + 1, 2 * e))
        try:
            m = PlanarMap(rotations, pairing)
        except MapError:
            continue
        signs = tuple(rng.choice((1, -1)) for _ in range(n_edges))
        out.append((m, signs))
    return out


@pytest.fixture(scope="session")
def random_corpus():
    return random_sphere_maps(200)
