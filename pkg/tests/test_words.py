import random

import pytest

from braidfloor.words import (
    BraidWord,
    Permutation,
    closure_component_count,
    compose,
    delta,
    exponent_sum,
    invert,
    parse_word,
    permutation_of,
    power,
)
from braidfloor.ordering import is_trivial

from tests._helpers import random_word


class TestParseWord:
    def test_transcribes_letters(self):
        assert parse_word("1 2 -1", 3).letters == (1, 2, -1)

    def test_empty_is_identity(self):
        assert parse_word("", 4).letters == ()

    def test_commas_and_spaces(self):
        assert parse_word("1, 2,-1", 3).letters == (1, 2, -1)

    def test_no_implicit_reduction(self):
        assert parse_word("1 -1", 3).letters == (1, -1)

    @pytest.mark.parametrize("bad", ["3", "0", "x", "1.5", "1 2 junk", "--1", "1_0"])
    def test_rejects_bad_tokens(self, bad):
        with pytest.raises(ValueError):
            parse_word(bad, 3)

    def test_rejects_small_strand_count(self):
        with pytest.raises(ValueError):
            parse_word("1", 1)


class TestCompose:
    def test_free_cancellation(self):
        assert compose(parse_word("1", 3), parse_word("-1", 3)).letters == ()

    def test_no_cancellation(self):
        assert compose(parse_word("1", 3), parse_word("2", 3)).letters == (1, 2)

    def test_nested_cancellation(self):
        assert compose(parse_word("1 2", 3), parse_word("-2 -1", 3)).letters == ()

    def test_strand_mismatch(self):
        with pytest.raises(ValueError):
            compose(parse_word("1", 3), parse_word("1", 4))


class TestInvert:
    def test_reverses_and_flips(self):
        assert invert(parse_word("1 -2", 3)).letters == (2, -1)

    def test_identity(self):
        assert invert(BraidWord(3)).letters == ()

    def test_double_letter(self):
        assert invert(parse_word("1 1", 3)).letters == (-1, -1)


class TestPower:
    def test_cube(self):
        assert power(parse_word("1", 3), 3).letters == (1, 1, 1)

    def test_zeroth_power(self):
        assert power(parse_word("1 2 -1", 3), 0).letters == ()

    def test_negative_power(self):
        assert power(parse_word("1 2", 3), -1).letters == (-2, -1)


class TestDelta:
    def test_two_strands(self):
        assert delta(2).letters == (1,)

    def test_three_strands(self):
        assert delta(3).letters == (1, 2, 1)

    def test_four_strands(self):
        word = delta(4)
        assert word.letters == (1, 2, 3, 1, 2, 1)
        assert len(word) == 4 * 3 // 2

    def test_rejects_one_strand(self):
        with pytest.raises(ValueError):
            delta(1)


class TestPermutations:
    def test_single_generator(self):
        assert permutation_of(parse_word("1", 3)).images == (2, 1, 3)

    def test_three_cycle(self):
        p = permutation_of(parse_word("1 2", 3))
        assert p.cycle_count() == 1 and not p.is_identity()

    def test_delta_squared_is_pure(self):
        assert permutation_of(power(delta(3), 2)).is_identity()

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation(3, (1, 1, 2))


class TestExponentSum:
    def test_cancelling_signs(self):
        assert exponent_sum(parse_word("1 -2", 3)) == 0

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_delta_is_positive_word(self, n):
        assert exponent_sum(delta(n)) == n * (n - 1) // 2

    def test_delta_squared_b3(self):
        assert exponent_sum(power(delta(3), 2)) == 6


class TestClosureComponents:
    def test_knot(self):
        assert closure_component_count(parse_word("1 2", 3)) == 1

    def test_identity_closure_is_unlink(self):
        assert closure_component_count(BraidWord(3)) == 3

    def test_delta_b3_gives_two_components(self):
        # permutation is the transposition (1 3): cycles {1,3} and {2}
        assert closure_component_count(parse_word("1 2 1", 3)) == 2


class TestAlgebraicProperties:
    def test_associativity_and_unit(self):
        rng = random.Random(101)
        e = BraidWord(4)
        for _ in range(300):
            a, b, c = (random_word(rng, 4, rng.randint(0, 30)) for _ in range(3))
            assert compose(compose(a, b), c).letters == compose(a, compose(b, c)).letters
            reduced = compose(a, e)
            assert reduced.letters == compose(e, a).letters

    def test_inverse_cancels(self):
        rng = random.Random(102)
        for _ in range(1000):
            n = rng.randint(2, 5)
            a = random_word(rng, n, rng.randint(0, 200))
            assert compose(a, invert(a)).letters == ()
            assert compose(invert(a), a).letters == ()

    def test_homomorphisms(self):
        rng = random.Random(103)
        for _ in range(500):
            n = rng.randint(2, 5)
            a = random_word(rng, n, rng.randint(0, 40))
            b = random_word(rng, n, rng.randint(0, 40))
            ab = compose(a, b)
            assert permutation_of(ab).images == permutation_of(a).compose(permutation_of(b)).images
            assert exponent_sum(ab) == exponent_sum(a) + exponent_sum(b)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_full_twist_is_central(self, n):
        twist = power(delta(n), 2)
        for i in range(1, n):
            generator = BraidWord(n, (i,))
            commutator = compose(
                compose(twist, generator), compose(invert(twist), invert(generator))
            )
            assert is_trivial(commutator)
