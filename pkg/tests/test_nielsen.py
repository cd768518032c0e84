from __future__ import annotations

import functools
import itertools
import time
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from common.errors import BudgetExceeded, CacheFormatError, HypothesisViolation, InadmissibleTuple
from nielsen import (
    ClassSet,
    Direction,
    NielsenTuple,
    build_group,
    canonicalize,
    enumerate_classes,
    hurwitz_move,
    load_or_enumerate,
    project_to_s3,
    read_cache,
    seed_tuple,
    thread_cap,
    write_cache,
)


def admissible_tuples(group, b):
    for entries in itertools.product(group.admissible, repeat=b):
        if group.is_admissible(entries):
            yield NielsenTuple(group, entries)


@pytest.mark.parametrize(
    "kind,modulus,order,admissible",
    [("sym3", None, 6, 3), ("sym4", None, 24, 6), ("xn", 5, 150, 15), ("xn", 2, 24, 6), ("xn", 3, 54, 9)],
)
def test_group_tables(kind, modulus, order, admissible):
    group = build_group(kind, modulus)
    assert group.order == order
    assert len(group.admissible) == admissible
    s3 = build_group("sym3")
    assert all(group.to_s3[a] in s3.admissible_set for a in group.admissible)
    # the quotient map is a homomorphism
    for a, b in itertools.product(range(0, group.order, 5), repeat=2):
        assert group.to_s3[group.mult[a][b]] == s3.mult[group.to_s3[a]][group.to_s3[b]]


def element_order(group, a):
    power, order = a, 1
    while power != 0:
        power = group.mult[power][a]
        order += 1
    return order


def test_x2_is_s4(sym4):
    # <s, t | s^2, t^4, (st)^3> presents S4, so any such generating pair of 24 elements is an isomorphism
    x2 = build_group("xn", 2)
    pairs = [
        (s, t)
        for s in x2.admissible
        for t in range(x2.order)
        if element_order(x2, t) == 4 and element_order(x2, x2.mult[s][t]) == 3
    ]
    assert pairs
    assert x2.generated_order(pairs[0]) == 24
    histogram = sorted(element_order(x2, a) for a in range(24))
    assert histogram == sorted(element_order(sym4, a) for a in range(24))


def test_build_group_names():
    assert build_group("xn5").kind == build_group("xn", 5).kind == "xn5"
    with pytest.raises(HypothesisViolation):
        build_group("xn")
    with pytest.raises(HypothesisViolation):
        build_group("alt5")


def test_multiplication_applies_left_first(sym3):
    a, b = sym3.admissible[0], sym3.admissible[1]
    assert sym3.product([a, b]) == sym3.mult[a][b]
    assert sym3.conjugate(a, b) == sym3.product([sym3.inv[b], a, b])
    assert sym3.labels[0] == "()"


def test_seed_tuples(sym3, sym4):
    assert seed_tuple(sym4, 6).check().entries
    assert str(seed_tuple(sym4, 6)) == "((1 2), (1 2), (2 3), (2 3), (1 4), (1 4))"
    assert str(seed_tuple(sym3, 6)) == "((1 2), (1 2), (2 3), (2 3), (2 3), (2 3))"
    assert str(seed_tuple(sym3, 4)) == "((1 2), (1 2), (2 3), (2 3))"
    assert seed_tuple(build_group("xn", 5), 6).is_admissible()


@pytest.mark.parametrize("b", [2, 5, 7])
def test_bad_branch_counts(sym3, b):
    with pytest.raises(HypothesisViolation):
        seed_tuple(sym3, b)
    with pytest.raises(HypothesisViolation):
        enumerate_classes(sym3, b)


def test_hurwitz_move_example(sym4):
    t = seed_tuple(sym4, 6)
    moved = hurwitz_move(t, 2)
    assert str(moved) == "((1 2), (2 3), (1 3), (2 3), (1 4), (1 4))"
    assert hurwitz_move(moved, 2, "inverse") == t
    assert hurwitz_move(t, 1) == t
    with pytest.raises(HypothesisViolation):
        hurwitz_move(t, 0)
    with pytest.raises(HypothesisViolation):
        hurwitz_move(t, 6)


def test_moves_preserve_admissibility_and_invert(sym4):
    t = seed_tuple(sym4, 6)
    for i in range(1, 6):
        forward = hurwitz_move(t, i, Direction.FORWARD)
        assert forward.is_admissible()
        assert hurwitz_move(forward, i, Direction.INVERSE) == t
        assert hurwitz_move(hurwitz_move(t, i, Direction.INVERSE), i, Direction.FORWARD) == t


@functools.cache
def classes_at_b6(kind):
    group = build_group(kind)
    return group, enumerate_classes(group, 6)


@settings(max_examples=40, deadline=None)
@given(
    st.sampled_from(["sym4", "xn5"]),
    st.integers(min_value=0),
    st.lists(st.tuples(st.integers(min_value=1, max_value=5), st.sampled_from(list(Direction))), max_size=30),
)
def test_random_move_sequences_stay_admissible(kind, conjugator, moves):
    group, classes = classes_at_b6(kind)
    t = seed_tuple(group, 6).conjugate(conjugator % group.order)
    for i, direction in moves:
        t = hurwitz_move(t, i, direction)
        assert all(a in group.admissible_set for a in t.entries)
        assert group.product(t.entries) == 0
        assert group.generates(t.entries)
    assert classes.tuple_at(classes.lookup(t.entries)) == canonicalize(t)


def test_moves_satisfy_the_braid_relations(sym3):
    def beta(i, t):
        return hurwitz_move(t, i)

    for t in admissible_tuples(sym3, 4):
        assert beta(1, beta(2, beta(1, t))) == beta(2, beta(1, beta(2, t)))
        assert beta(2, beta(3, beta(2, t))) == beta(3, beta(2, beta(3, t)))
        assert beta(1, beta(3, t)) == beta(3, beta(1, t))


def test_canonicalize(sym4):
    t = hurwitz_move(hurwitz_move(seed_tuple(sym4, 6), 3), 4)
    c = canonicalize(t)
    assert canonicalize(c) == c
    assert c.entries <= t.entries
    for x in range(sym4.order):
        assert canonicalize(t.conjugate(x)) == c
    with pytest.raises(InadmissibleTuple):
        canonicalize(NielsenTuple(sym4, (0,) * 6))
    with pytest.raises(InadmissibleTuple):
        # product is not the identity
        canonicalize(NielsenTuple(sym4, seed_tuple(sym4, 6).entries[:-1] + (sym4.admissible[0],)))


@pytest.mark.parametrize(
    "kind,modulus,b,count",
    [("sym3", None, 4, 4), ("sym3", None, 6, 40), ("sym4", None, 6, 120), ("xn", 5, 6, 240)],
)
def test_class_counts(kind, modulus, b, count):
    group = build_group(kind, modulus)
    by_bfs = enumerate_classes(group, b, "orbit-bfs")
    by_scan = enumerate_classes(group, b, "exhaustive", threads=2)
    assert len(by_bfs) == count
    assert by_bfs == by_scan
    assert by_bfs.representatives == by_scan.representatives


def test_scalar_automorphisms_identify_xn_tuples(sym4):
    xn5 = build_group("xn", 5)
    assert len(xn5.automorphisms) == 3
    assert build_group("xn", 2).automorphisms == sym4.automorphisms == ()
    t = hurwitz_move(hurwitz_move(seed_tuple(xn5, 6), 2), 4)
    c = canonicalize(t)
    for alpha in xn5.automorphisms:
        scaled = NielsenTuple(xn5, tuple(alpha[a] for a in t.entries))
        assert scaled.is_admissible()
        assert scaled != t
        assert canonicalize(scaled) == canonicalize(scaled.conjugate(7)) == c


def test_xn5_scalars_act_freely_on_conjugation_classes():
    # 960 classes up to conjugation alone, four to each class up to scalars
    xn5 = build_group("xn", 5)
    maps = [tuple(range(xn5.order)), *xn5.automorphisms]
    for t in enumerate_classes(xn5, 6):
        images = {xn5._least_conjugate(tuple(alpha[a] for a in t)) for alpha in maps}
        assert len(images) == 4


def test_exhaustive_scan_respects_the_deadline(sym4):
    with pytest.raises(BudgetExceeded) as info:
        enumerate_classes(sym4, 6, "exhaustive", threads=2, deadline=time.monotonic() - 1)
    assert info.value.partial["shards_done"] == 0
    assert info.value.partial["shards"] == len(sym4.admissible)


def test_sym3_b4_by_brute_force(sym3):
    classes = {canonicalize(t).entries for t in admissible_tuples(sym3, 4)}
    assert len(classes) == len(enumerate_classes(sym3, 4)) == 4


def test_class_set_lookup(sym4):
    cs = enumerate_classes(sym4, 6)
    t = hurwitz_move(seed_tuple(sym4, 6), 2).conjugate(5)
    index = cs.lookup(t.entries)
    assert cs.tuple_at(index) == canonicalize(t)
    assert list(cs) == sorted(cs.representatives)


@pytest.mark.parametrize("kind,modulus,fiber", [("sym4", None, 3), ("xn", 5, 6)])
def test_fibers_over_s3_classes(sym3, kind, modulus, fiber):
    omega = enumerate_classes(sym3, 6)
    cs = enumerate_classes(build_group(kind, modulus), 6)
    projection = project_to_s3(cs, omega)
    assert Counter(Counter(projection).values()) == {fiber: len(omega)}
    assert cs.fiber(projection, 0) == [i for i, w in enumerate(projection) if w == 0]
    with pytest.raises(HypothesisViolation):
        project_to_s3(cs, enumerate_classes(sym3, 4))


def test_cache_round_trip(tmp_path, sym3):
    cs = enumerate_classes(sym3, 6)
    path = tmp_path / "sym3-6.cache"
    write_cache(cs, path)
    assert path.read_text().splitlines()[0] == "nielsen-cache v1 sym3 6 40"
    loaded = read_cache(path, sym3, 6)
    assert loaded == cs
    assert loaded.method == "cache"


def test_cache_rejects_bad_files(tmp_path, sym3):
    cs = enumerate_classes(sym3, 4)
    path = tmp_path / "classes.cache"
    write_cache(cs, path)
    header, *body = path.read_text().splitlines()

    with pytest.raises(CacheFormatError):
        read_cache(path, sym3, 6)

    cases = {
        "empty": "",
        "count": "\n".join([header.rsplit(" ", 1)[0] + " 5", *body]),
        "garbage": "\n".join([header, *body[:-1], "1 x 2 3"]),
        "unsorted": "\n".join([header, *reversed(body)]),
        "not canonical": "\n".join([header, *body[:-1], " ".join(map(str, seed_tuple(sym3, 4).entries))]),
    }
    for name, text in cases.items():
        path.write_text(text)
        with pytest.raises(CacheFormatError):
            read_cache(path, sym3, 4)


def test_load_or_enumerate(tmp_path, sym3):
    path = tmp_path / "sym3.cache"
    first = load_or_enumerate(path, sym3, 6)
    assert first.method == "orbit-bfs"
    assert path.exists()
    second = load_or_enumerate(path, sym3, 6)
    assert second.method == "cache"
    assert second == first
    assert isinstance(load_or_enumerate(None, sym3, 4), ClassSet)


def test_thread_cap(monkeypatch):
    monkeypatch.delenv("HMLAB_THREADS", raising=False)
    assert thread_cap(3) == 3
    monkeypatch.setenv("HMLAB_THREADS", "2")
    assert thread_cap(8) == 2
    assert thread_cap(1) == 1
    monkeypatch.setenv("HMLAB_THREADS", "many")
    assert thread_cap(5) == 5
