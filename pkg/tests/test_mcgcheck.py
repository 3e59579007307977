import pytest
from hypothesis import given, settings, strategies as st

from palf_forge import artin
from palf_forge import freegroup as fg
from palf_forge import mcgcheck as mc
from palf_forge import openbook as ob
from palf_forge.openbook import ConvexTwist, TwistWord

import oracles


def lantern(k, j):
    lhs = TwistWord(k, (ob.alpha(j + 1), ob.alpha(j + 2), ob.gamma(j), ob.gamma(j + 2)))
    rhs = TwistWord(k, (ob.delta(j), ob.beta(j), ob.gamma(j + 1)))
    return lhs, rhs


LANTERNS = [(k, j) for k in range(3, 7) for j in range(1, k - 1)]


def twists_on(k):
    return st.builds(
        ConvexTwist,
        st.sets(st.integers(1, k), min_size=1).map(tuple),
        st.sampled_from((1, -1)),
    )


def words(k, max_len=10):
    return st.lists(twists_on(k), max_size=max_len).map(lambda ts: TwistWord(k, tuple(ts)))


def test_singleton_twist_conjugates_its_pair():
    img = mc.twist_image(ob.alpha(2), 3)
    # x -> (x3 x4)^-1 x (x3 x4) on the pair of hole 2.
    assert img.images[2] == (-4, 3, 4)
    assert img.images[3] == (-4, -3, 4, 3, 4)
    assert all(img.images[g - 1] == (g,) for g in (1, 2, 5, 6))
    assert img.counts == (0, 1, 0)


def test_consecutive_block_is_conjugation_by_product():
    img = mc.twist_image(ConvexTwist((2, 3)), 4)
    x = (3, 4, 5, 6)
    for g in x:
        assert img.images[g - 1] == fg.reduce_word(fg.invert(x) + (g,) + x)


@pytest.mark.parametrize("holes", [(1,), (2, 3), (1, 2, 4), (1, 3, 5), (2, 5), (1, 2, 3, 4, 5)])
@pytest.mark.parametrize("sign", [1, -1])
def test_twist_image_matches_letter_by_letter_composition(holes, sign):
    k = 5
    t = ConvexTwist(holes, sign)
    assert mc.twist_image(t, k).images == tuple(oracles.twist_word_images(k, [(holes, sign)]))


@pytest.mark.parametrize("k,j", LANTERNS)
def test_lantern_relation_certifies(k, j):
    lhs, rhs = lantern(k, j)
    assert mc.equal(lhs, rhs)
    # Independent check through explicit crossing words.
    a = oracles.twist_word_images(k, [(t.holes, t.sign) for t in lhs])
    b = oracles.twist_word_images(k, [(t.holes, t.sign) for t in rhs])
    assert a == b


@pytest.mark.parametrize("k,j", LANTERNS)
def test_lantern_with_a_twist_deleted_fails(k, j):
    lhs, rhs = lantern(k, j)
    for side, other in ((lhs, rhs), (rhs, lhs)):
        for i in range(len(side)):
            assert not mc.equal(side.replace(i, i + 1, ()), other)


@pytest.mark.parametrize("k,j", LANTERNS)
def test_lantern_interior_side_order_matters(k, j):
    _, rhs = lantern(k, j)
    lhs, _ = lantern(k, j)
    swapped = TwistWord(k, (ob.beta(j), ob.delta(j), ob.gamma(j + 1)))
    assert not mc.equal(lhs, swapped)
    # Cyclic rotations of the interior side are conjugate, hence also equal here.
    rot = TwistWord(k, rhs.twists[1:] + rhs.twists[:1])
    assert mc.equal(lhs, rot)


def test_empty_and_cancelling_words():
    assert mc.is_trivial(TwistWord(3))
    c = ConvexTwist((1, 3))
    assert mc.is_trivial(TwistWord(3, (c, c.inverse)))
    w = TwistWord(3, (ob.alpha(2), ob.beta(1)))
    assert mc.equal(w, TwistWord(3, (c, c.inverse)) + w + (c.inverse, c))


def test_count_layer_refutes_first():
    lhs, rhs = lantern(4, 1)
    assert mc.twist_counts(lhs) == mc.twist_counts(rhs)
    assert mc.twist_counts(lhs[1:]) != mc.twist_counts(rhs)


def test_page_size_mismatch():
    with pytest.raises(ValueError):
        mc.equal(TwistWord(2), TwistWord(3))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(lambda k: st.tuples(words(k), words(k))))
def test_homomorphism(pair):
    w1, w2 = pair
    whole = mc.word_image(w1 + w2)
    assert whole == mc.word_image(w1) @ mc.word_image(w2)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(lambda k: st.tuples(words(k, 6), words(k, 6), words(k, 6))))
def test_reassociation(triple):
    a, b, c = (mc.word_image(w) for w in triple)
    assert ((a @ b) @ c) == (a @ (b @ c))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(words))
def test_inverse_word_gives_identity(w):
    assert mc.is_trivial(w + w.inverse())


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6).flatmap(twists_on).flatmap(
    lambda t: st.integers(max(t.holes), 6).map(lambda k: (t, k))))
def test_boundary_word_goes_to_conjugate(tk):
    t, k = tk
    assert mc.twist_image(t, k).maps_boundary_to_conjugate()


@pytest.mark.parametrize("k", range(1, 6))
def test_outer_twist_is_central(k):
    g = mc.twist_image(ob.gamma(k), k)
    # Conjugation of every generator by the full boundary word.
    full = tuple(range(1, 2 * k + 1))
    assert g.images == tuple(fg.reduce_word(fg.invert(full) + (x,) + full) for x in full)
    import itertools
    for r in range(1, k + 1):
        for s in itertools.combinations(range(1, k + 1), r):
            for sign in (1, -1):
                c = mc.twist_image(ConvexTwist(s, sign), k)
                assert (g @ c).images == (c @ g).images


def test_strand_maps():
    assert mc.strands_of((1, 3)) == (1, 2, 5, 6)
    letters, a, b = artin.gather_letters((1, 2, 5, 6))
    assert (a, b) == (1, 4)
    assert letters == (4, 3, 5, 4)


def test_as_word_helper():
    w = mc.as_word(3, [((1, 2), -1), (3,), ConvexTwist((2,))])
    assert [str(t) for t in w] == ["{1,2}^-1", "{3}", "{2}"]
