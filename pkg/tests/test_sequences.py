import random

import pytest

from chocbar import (
    BitTriple,
    FloorClass,
    SequenceKind,
    Step,
    StepSequence,
    apply_step,
    classify_position,
    classify_sequence,
    complete_yz,
    generate_sequence,
    inequality_class,
)

WINDOW_KS = (3, 7, 11, 15)


def test_apply_step_examples():
    assert apply_step(7, Step.FLAT, 2) == 4
    assert apply_step(7, Step.DOWN, 4) == 2
    assert apply_step(7, Step.UP, 2) == 6
    assert apply_step(7, Step.DOWN, 2) == -2
    assert apply_step(11, Step.FLAT, 0) == 0


def test_apply_step_ordering():
    for k in WINDOW_KS:
        for v in range(-40, 40):
            up = apply_step(k, Step.UP, v)
            flat = apply_step(k, Step.FLAT, v)
            down = apply_step(k, Step.DOWN, v)
            assert up > flat > down


def test_apply_step_guards():
    with pytest.raises(ValueError):
        apply_step(4, Step.UP, 2)
    with pytest.raises(ValueError):
        apply_step(-3, Step.UP, 2)
    with pytest.raises(OverflowError):
        apply_step(3, Step.UP, 1 << 61)


def test_step_sequence_validation():
    StepSequence(7, (2, 4, 2, 4, 2, 6))
    with pytest.raises(ValueError):
        StepSequence(7, ())
    with pytest.raises(ValueError):
        StepSequence(7, (4, 8))
    with pytest.raises(ValueError):
        StepSequence(7, (2, 3))
    with pytest.raises(ValueError):
        StepSequence(7, (2, 12))
    with pytest.raises(OverflowError):
        StepSequence(3, (2, 6, 14, 1 << 40))


def test_from_steps_matches_manual_recurrence():
    rng = random.Random(7)
    for k in WINDOW_KS:
        for _ in range(100):
            steps = [rng.choice(list(Step)) for _ in range(rng.randrange(1, 30))]
            seq = StepSequence.from_steps(k, steps)
            assert seq.terms[0] == 2
            assert len(seq) == len(steps) + 1
            for prev, cur, s in zip(seq.terms, seq.terms[1:], steps):
                assert cur == apply_step(k, s, prev)


def test_classify_examples():
    assert classify_sequence(StepSequence(7, (2, 4, 2, 4, 2, 6))) is SequenceKind.IN_WINDOW
    assert classify_sequence(StepSequence(7, (2, 4, 2, 4, 8, 18))) is SequenceKind.ABOVE_WINDOW
    assert (
        classify_sequence(StepSequence(7, (2, -2, -2, -4, -6, -18, -34)))
        is SequenceKind.BELOW_WINDOW
    )
    assert classify_sequence(StepSequence(3, (2,))) is SequenceKind.IN_WINDOW


def definitional_kind(seq):
    """Scan the whole sequence instead of trusting the final term."""
    if all(0 <= t < seq.k for t in seq.terms):
        return SequenceKind.IN_WINDOW
    if seq.final >= seq.k:
        return SequenceKind.ABOVE_WINDOW
    assert seq.final < 0
    return SequenceKind.BELOW_WINDOW


def test_trichotomy_by_final_term():
    rng = random.Random(41)
    counts = {kind: 0 for kind in SequenceKind}
    for k in (3, 7, 11):
        for _ in range(400):
            steps = [rng.choice(list(Step)) for _ in range(rng.randrange(0, 25))]
            seq = StepSequence.from_steps(k, steps)
            kind = classify_sequence(seq)
            assert kind is definitional_kind(seq)
            counts[kind] += 1
    # the random walk must actually visit all three classes
    assert all(counts.values()), counts


def test_absorption():
    rng = random.Random(55)
    for k in (3, 7, 11):
        for _ in range(400):
            t = 2
            escaped = None
            for _ in range(25):
                t = apply_step(k, rng.choice(list(Step)), t)
                if escaped == "high":
                    assert t >= k
                elif escaped == "low":
                    assert t < 0
                if t >= k:
                    escaped = "high"
                elif t < 0:
                    escaped = "low"


def test_window_step_facts():
    # below the gap the window is kept by UP and FLAT, above it by DOWN
    for k in WINDOW_KS:
        half = (k - 3) // 2
        for h in range(0, half + 1, 2):
            assert 0 <= apply_step(k, Step.FLAT, h) < apply_step(k, Step.UP, h) < k
            assert apply_step(k, Step.DOWN, h) < 0
        for h in range(half + 2, k, 2):
            assert 0 < apply_step(k, Step.DOWN, h) < k
            assert k < apply_step(k, Step.FLAT, h) < apply_step(k, Step.UP, h)


def test_in_window_sequences_extend_forever():
    rng = random.Random(23)
    for k in WINDOW_KS:
        half = (k - 3) // 2
        for _ in range(50):
            t = 2
            for _ in range(rng.randrange(1, 40)):
                if t <= half:
                    t = apply_step(k, rng.choice((Step.UP, Step.FLAT)), t)
                else:
                    t = apply_step(k, Step.DOWN, t)
                assert 0 <= t < k


def test_bit_triple_validation():
    BitTriple(5, 2, 7)
    BitTriple(1, 0, 1)
    with pytest.raises(ValueError, match="x"):
        BitTriple(0, 0, 0)
    with pytest.raises(ValueError, match="z"):
        BitTriple(5, 2, 3)
    with pytest.raises(ValueError, match="y"):
        BitTriple(5, 4, 7)
    with pytest.raises(ValueError, match="nim-sum"):
        BitTriple(5, 1, 7)


def test_bit_triple_accessors():
    bt = BitTriple(5, 2, 7)
    assert bt.top_bit == 2
    assert bt.bits(2) == (1, 0, 1)
    assert bt.bits(1) == (0, 1, 1)
    assert bt.bits(0) == (1, 0, 1)
    assert bt.steps() == [Step.DOWN, Step.UP]


def random_bit_triple(rng, max_top=16):
    n = rng.randrange(1, max_top)
    x = (1 << n) | rng.randrange(1 << n)
    y = rng.randrange(1 << n)
    return BitTriple(x, y, x ^ y)


def closed_form_terms(k, bt):
    n = bt.top_bit
    out = []
    for j in range(n + 1):
        s = 0
        for i in range(n - j, n + 1):
            xb, yb, zb = bt.bits(i)
            s += (xb + zb - k * yb) * (1 << (i + j - n))
        out.append(s)
    return out


def test_generate_sequence_examples():
    seq = generate_sequence(3, BitTriple(5, 2, 7))
    assert seq.terms == (2, 2, 6)
    assert seq.final == 5 + 7 - 3 * 2
    assert generate_sequence(7, BitTriple(1, 0, 1)).terms == (2,)


def test_generate_sequence_matches_closed_form():
    rng = random.Random(1234)
    for _ in range(400):
        k = rng.choice((3, 7, 11))
        bt = random_bit_triple(rng)
        seq = generate_sequence(k, bt)
        assert list(seq.terms) == closed_form_terms(k, bt)
        assert seq.terms[0] == 2
        assert seq.final == bt.x + bt.z - k * bt.y


def test_inequality_class_examples():
    assert inequality_class(3, 7, 4, 7) is FloorClass.AT_FLOOR
    assert inequality_class(3, 5, 2, 7) is FloorClass.BELOW_FLOOR
    assert inequality_class(3, 0, 1, 0) is FloorClass.ABOVE_FLOOR
    with pytest.raises(ValueError):
        inequality_class(0, 1, 1, 1)


def test_inequality_class_matches_floor_comparison():
    rng = random.Random(6)
    for _ in range(500):
        k = rng.randrange(1, 12)
        x, y, z = rng.randrange(60), rng.randrange(60), rng.randrange(60)
        got = inequality_class(k, x, y, z)
        floor = (x + z) // k
        if y == floor:
            assert got is FloorClass.AT_FLOOR
        elif y < floor:
            assert got is FloorClass.BELOW_FLOOR
        else:
            assert got is FloorClass.ABOVE_FLOOR


def test_classify_position_examples():
    assert classify_position(3, 5, 2, 7) is SequenceKind.ABOVE_WINDOW
    assert classify_position(3, 1, 0, 1) is SequenceKind.IN_WINDOW
    assert classify_position(7, 1, 0, 1) is SequenceKind.IN_WINDOW
    with pytest.raises(ValueError):
        classify_position(5, 1, 0, 1)
    with pytest.raises(ValueError):
        classify_position(3, 5, 1, 7)


PAIRED = {
    SequenceKind.IN_WINDOW: FloorClass.AT_FLOOR,
    SequenceKind.ABOVE_WINDOW: FloorClass.BELOW_FLOOR,
    SequenceKind.BELOW_WINDOW: FloorClass.ABOVE_FLOOR,
}


def test_classify_position_agrees_with_inequality_class():
    rng = random.Random(77)
    for _ in range(600):
        k = rng.choice((3, 7))
        bt = random_bit_triple(rng, max_top=12)
        kind = classify_position(k, bt.x, bt.y, bt.z)
        assert PAIRED[kind] is inequality_class(k, bt.x, bt.y, bt.z)


def completion_oracle(k, x):
    """Brute force over every z sharing x's top bit."""
    n = x.bit_length() - 1
    found = [
        (x ^ z, z)
        for z in range(1 << n, 2 << n)
        if (x ^ z) < (1 << n) and (x ^ z) == (x + z) // k
    ]
    assert len(found) == 1, (k, x, found)
    return found[0]


def test_complete_yz_examples():
    assert complete_yz(3, 1) == (0, 1)
    assert complete_yz(3, 2) == (1, 3)
    assert complete_yz(3, 5) == (3, 6)
    with pytest.raises(ValueError):
        complete_yz(5, 4)
    with pytest.raises(ValueError):
        complete_yz(3, 0)


def test_complete_yz_matches_oracle_small():
    for k in (3, 7):
        for x in range(1, 1 << 9):
            assert complete_yz(k, x) == completion_oracle(k, x), (k, x)


def test_complete_yz_output_is_at_floor_and_nim_zero():
    rng = random.Random(3)
    for _ in range(200):
        k = rng.choice((3, 7, 11))
        x = rng.randrange(1, 1 << 20)
        y, z = complete_yz(k, x)
        assert x ^ y ^ z == 0
        assert z.bit_length() == x.bit_length()
        assert y == (x + z) // k
        assert classify_position(k, x, y, z) is SequenceKind.IN_WINDOW


def test_completion_beats_every_below_floor_middle():
    # among same-frame nim-zero triples, any middle below the floor sits
    # strictly under the completed one
    for k in (3, 7):
        for x in range(1, 257):
            n = x.bit_length() - 1
            y, _ = complete_yz(k, x)
            for w in range(1 << n, 2 << n):
                v = x ^ w
                if v < (1 << n) and v < (x + w) // k:
                    assert y > v, (k, x, v, w)
