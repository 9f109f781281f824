import numpy as np
import pytest

from src.core.errors import InvalidOrder, QuadrantLengthNotDivisibleBy4, UnbalancedClassVector
from src.core.squares import is_latin, validate_latin
from src.generators import KINDS, blowup, gen_cyclic, gen_jm, generate, parity_classes, quadrant_classes
from src.generators.jacobson_matthews import jm_walk


def test_cyclic_examples():
    assert gen_cyclic(1).cells == ((1,),)
    assert gen_cyclic(3).cells == ((1, 2, 3), (2, 3, 1), (3, 1, 2))


@pytest.mark.parametrize("n", [1, 2, 5, 16])
def test_cyclic_is_latin(n):
    assert is_latin(gen_cyclic(n).cells)


@pytest.mark.parametrize("n, seed", [(2, 0), (3, 1), (6, 2), (10, 3), (17, 4)])
def test_jm_is_latin(n, seed):
    sq = gen_jm(n, seed)
    assert sq.order == n
    assert is_latin(sq.cells)


def test_jm_is_reproducible():
    assert gen_jm(9, seed=42) == gen_jm(9, seed=42)
    assert gen_jm(9, seed=42, steps=100) == gen_jm(9, seed=42, steps=100)


def test_jm_seeds_differ():
    squares = {gen_jm(10, seed).cells for seed in range(5)}
    assert len(squares) > 1


def test_jm_walk_ends_proper():
    cube, moves = jm_walk(8, seed=3, steps=50)
    assert moves >= 50
    assert ((cube == 0) | (cube == 1)).all()
    assert (cube.sum(axis=2) == 1).all()


def test_jm_rejects_bad_arguments():
    with pytest.raises(InvalidOrder):
        gen_jm(1, seed=0)
    with pytest.raises(InvalidOrder):
        gen_jm(5, seed=0, steps=0)


def test_class_vectors():
    assert parity_classes(2) == (0, 1, 0, 1)
    assert quadrant_classes(2) == (0, 1, 1, 0)
    assert quadrant_classes(4) == (0, 0, 1, 1, 1, 1, 0, 0)
    with pytest.raises(QuadrantLengthNotDivisibleBy4):
        quadrant_classes(3)


def test_blowup_examples():
    one = validate_latin([[1]])
    assert blowup(one, (0, 1)).cells == ((1, 2), (2, 1))
    two = validate_latin([[1, 2], [2, 1]])
    assert blowup(two, (0, 1, 1, 0)).cells == (
        (1, 3, 4, 2),
        (3, 1, 2, 4),
        (4, 2, 1, 3),
        (2, 4, 3, 1),
    )


@pytest.mark.parametrize("classes", [(0, 0), (0, 1, 1), (0, 2), ()])
def test_blowup_rejects_unbalanced(classes):
    with pytest.raises(UnbalancedClassVector):
        blowup(validate_latin([[1]]), classes)


@pytest.mark.parametrize("seed", range(5))
def test_blowup_of_random_square(seed):
    rng = np.random.default_rng(seed)
    m = 6
    inner = gen_jm(m, seed)
    classes = tuple(int(c) for c in rng.permutation([0] * m + [1] * m))
    sq = blowup(inner, classes)
    assert is_latin(sq.cells)
    arr = sq.array
    same = np.equal.outer(np.array(classes), np.array(classes))
    assert ((arr <= m) == same).all()


@pytest.mark.parametrize("kind, order", [(k, 8) for k in KINDS])
def test_generate_every_kind(kind, order):
    sq = generate(kind, order, seed=1)
    assert sq.order == order
    assert is_latin(sq.cells)
    assert generate(kind, order, seed=1) == sq


def test_generate_with_inner_square():
    inner = validate_latin([[1]])
    assert generate("parity-blowup", 2, inner=inner).cells == ((1, 2), (2, 1))
    with pytest.raises(InvalidOrder):
        generate("parity-blowup", 4, inner=inner)


def test_generate_rejects_bad_orders():
    with pytest.raises(InvalidOrder):
        generate("parity-blowup", 7)
    with pytest.raises(InvalidOrder):
        generate("quadrant-blowup", 5)
    with pytest.raises(InvalidOrder):
        generate("cyclic", 0)
    with pytest.raises(QuadrantLengthNotDivisibleBy4):
        generate("quadrant-blowup", 6)
    with pytest.raises(InvalidOrder):
        generate("spiral", 4)
