"""Shipped instances and the emitter that writes them to disk."""

import functools
import logging
import os
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from ..errors import PreconditionError
from ..models.functions import FunctionTable, PinSet, ScalarLike
from ..models.instance import Instance
from ..models.space import PointSet, Space
from ..parsers import get_instance_parser
from ..utils.file_utils import prepare_directory

logger = logging.getLogger(__name__)

EX10_MAX_DEPTH = 6


def _instance(
    name: str,
    values: Sequence[Sequence[object]],
    points: Sequence[Sequence[object]],
    names: Optional[Sequence[str]] = None,
    f: Optional[Dict[int, ScalarLike]] = None,
    pins: Optional[Sequence[Tuple[int, object, ScalarLike]]] = None,
    uniform_measure: bool = False,
) -> Instance:
    space = Space.from_values(values, names)
    s = PointSet.from_tuples(space, points)
    function = None
    if f is not None:
        function = FunctionTable(s, {p: f.get(k, 0) for k, p in enumerate(s)})
    pin_set = None
    if pins is not None:
        pin_set = PinSet({space.coordinate(axis, label): value for axis, label, value in pins})
    measure = None
    if uniform_measure:
        measure = {k: Fraction(1, len(s)) for k in range(len(s))}
    return Instance(space, s, function, pin_set, measure, name)


def ex02() -> Instance:
    """Three points of {0,1}²; the decomposition is unique once u₁(0) is fixed."""
    return _instance(
        "ex02",
        [[0, 1], [0, 1]],
        [(0, 0), (1, 0), (0, 1)],
        f={0: 1, 1: 2, 2: 3},
        pins=[(0, 0, 0)],
    )


def ex04() -> Instance:
    """A staircase in {0,1,2}³, unique once u₁(0) and u₂(0) are fixed."""
    return _instance(
        "ex04",
        [[0, 1, 2]] * 3,
        [(0, 0, 0), (1, 0, 0), (1, 1, 0), (1, 1, 1), (2, 1, 1), (2, 2, 1), (2, 2, 2)],
        f={0: 1},
        pins=[(0, 0, 0), (1, 0, 0)],
    )


_E5 = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]


def ex05() -> Instance:
    """The origin and the three unit points of {0,1}³: a full set."""
    return _instance("ex05", [[0, 1]] * 3, _E5)


def e5plus() -> Instance:
    """ex05 with (1,1,1) added, which closes a five-point loop."""
    return _instance("e5plus", [[0, 1]] * 3, _E5 + [(1, 1, 1)], uniform_measure=True)


def t4() -> Instance:
    """Four points of {0,1}³, pairwise at geodesic distance four."""
    return _instance(
        "t4",
        [[0, 1]] * 3,
        [(1, 0, 1), (1, 1, 0), (0, 1, 1), (0, 0, 0)],
        f={3: 1},
        pins=[(0, 1, 0), (1, 1, 0)],
        uniform_measure=True,
    )


def ex07() -> Instance:
    return _instance(
        "ex07",
        [[1, 4, 7], [2, 5, 8], [3, 6, 9]],
        [(1, 2, 3), (4, 5, 6), (7, 8, 9), (1, 5, 9)],
    )


def ex08() -> Instance:
    """The cross X₁×{a}×{a} ∪ {a}×X₂×{a} ∪ {a}×{a}×X₃ with three values per axis."""
    labels = ["a", "b", "c"]
    points: List[Tuple[str, ...]] = [("a", "a", "a")]
    for axis in range(3):
        for label in labels[1:]:
            p = ["a", "a", "a"]
            p[axis] = label
            points.append(tuple(p))
    return _instance("ex08", [labels] * 3, points)


def ex10_points(depth: int) -> List[Tuple[str, str, str]]:
    """
    The depth-k prefix of the doubling chain.

    Starts at (x₀,y₀,z₀); step m adds (xₘ,y₀,zₘ₋₁), (x₀,yₘ,zₘ₋₁) and (xₘ,yₘ,zₘ).
    """
    points = [("x0", "y0", "z0")]
    for m in range(1, depth + 1):
        points += [
            (f"x{m}", "y0", f"z{m - 1}"),
            ("x0", f"y{m}", f"z{m - 1}"),
            (f"x{m}", f"y{m}", f"z{m}"),
        ]
    return points


def ex10(depth: int) -> Instance:
    """
    Doubling chain truncated at ``depth``; solving the indicator of (x₀,y₀,z₀) with
    u(x₀) = v(y₀) = 0 gives W(zₘ) = 2ᵐ and U(xₘ) = V(yₘ) = −2ᵐ⁻¹.

    The axes also declare the values the next step would introduce.
    """
    if not 1 <= depth <= EX10_MAX_DEPTH:
        raise PreconditionError(f"ex10 depth must be between 1 and {EX10_MAX_DEPTH}")
    return _instance(
        f"ex10_depth{depth}",
        [
            [f"x{m}" for m in range(depth + 2)],
            [f"y{m}" for m in range(depth + 2)],
            [f"z{m}" for m in range(depth + 1)],
        ],
        ex10_points(depth),
        names=["x", "y", "z"],
        f={0: 1},
        pins=[(0, "x0", 0), (1, "y0", 0)],
    )


def rectangle() -> Instance:
    """The four corners of a 2×2 grid: the smallest loop."""
    return _instance(
        "rectangle",
        [["a", "c"], ["b", "d"]],
        [("a", "b"), ("a", "d"), ("c", "b"), ("c", "d")],
        f={0: 1},
        uniform_measure=True,
    )


EXAMPLES: Dict[str, Callable[[], Instance]] = {
    "ex02": ex02,
    "ex04": ex04,
    "ex05": ex05,
    "e5plus": e5plus,
    "t4": t4,
    "ex07": ex07,
    "ex08": ex08,
    **{f"ex10_depth{k}": functools.partial(ex10, k) for k in range(1, EX10_MAX_DEPTH + 1)},
    "rectangle": rectangle,
}


def example(name: str) -> Instance:
    try:
        return EXAMPLES[name]()
    except KeyError:
        raise PreconditionError(f"Unknown example '{name}'") from None


def emit_examples(output_dir: str, extension: str = ".json") -> List[str]:
    """
    Write every shipped instance to ``output_dir``.

    Args:
        output_dir: Target directory, created if missing
        extension: ``.json`` or ``.yaml``

    Returns:
        The written paths, in catalog order
    """
    prepare_directory(output_dir)
    written = []
    for name, build in EXAMPLES.items():
        path = os.path.join(output_dir, name + extension)
        get_instance_parser(path).save(build(), path)
        written.append(path)
    logger.info(f"Wrote {len(written)} example instances to {output_dir}")
    return written
