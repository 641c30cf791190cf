# -*- coding: utf-8 -*-

from cyclac.meta import freeze, FrozenError, Var
import pytest


@freeze
class Point:
    x = Var()
    y = Var(0)

    def __init__(self):
        self.norm = abs(self.x) + abs(self.y)


@freeze
class Point3(Point):
    z = Var(0)


def test_fields():
    p = Point(3, -4)
    assert (p.x, p.y, p.norm) == (3, -4, 7)
    assert Point(3) == Point(3, 0) == Point(x=3)
    assert Point(1, 2) != Point(2, 1)
    assert hash(Point(1, 2)) == hash(Point(y=2, x=1))
    assert repr(Point(1, 2)) == "Point(x=1, y=2)"


def test_frozen():
    p = Point(1)
    with pytest.raises(FrozenError):
        p.x = 2
    with pytest.raises(FrozenError):
        p.anything = 2
    with pytest.raises(FrozenError):
        del p.y
    assert p.x == 1


def test_bad_arguments():
    with pytest.raises(TypeError):
        Point()
    with pytest.raises(TypeError):
        Point(1, x=2)
    with pytest.raises(TypeError):
        Point(1, 2, 3)


def test_inherited_fields():
    p = Point3(1, 2, 3)
    assert (p.x, p.y, p.z, p.norm) == (1, 2, 3, 3)
    assert Point3(1, 2, 3) != Point(1, 2)
    with pytest.raises(FrozenError):
        p.z = 0


@freeze
class Count:
    n = Var()

    def __init__(self):
        if self.n < 0:
            raise ValueError(f"negative count {self.n}")


@freeze
class LabelledCount(Count):
    label = Var("")


class Tagged(Count):
    def __init__(self, tag="?"):
        Count.__frozen_init__(self)
        self.tag = tag


@freeze
class TaggedPair(Tagged):
    m = Var(0)


def test_inherited_init():
    assert LabelledCount(2, "x").label == "x"
    with pytest.raises(ValueError):
        LabelledCount(-1)
    pair = TaggedPair(1, 2, tag="t")
    assert (pair.n, pair.m, pair.tag) == (1, 2, "t")
    assert TaggedPair(1).tag == "?"
    with pytest.raises(ValueError):
        TaggedPair(-1)
