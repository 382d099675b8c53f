from __future__ import annotations

from ..geometry.objects import Point1, RightRay
from ..geometry.representation import ClassTag, Representation, validate_representation
from ..utils.errors import InvalidInputError


def _mirror(obj):
    # point p ↦ ray (-inf, p], mirrored to [-p, +inf); ray [s, +inf) ↦ point s, mirrored to -s
    if obj.kind == "point1":
        return RightRay(-obj.x)
    return Point1(-obj.start_x)


def flip_chain_rep(rep: Representation) -> Representation:
    """Same labeled graph with the point and ray roles exchanged between U and V"""
    if rep.class_tag is not ClassTag.CHAIN:
        raise InvalidInputError(f"flip_chain_rep needs a chain representation, got {rep.class_tag.value}")
    violations = validate_representation(rep)
    if violations:
        raise InvalidInputError(f"Invalid chain representation: {violations[0]}", violations)
    return Representation(
        ClassTag.CHAIN,
        [_mirror(obj) for obj in rep.u_objects],
        [_mirror(obj) for obj in rep.v_objects],
    )


def points_on_u(rep: Representation) -> Representation:
    """The chain representation oriented with points on U"""
    if rep.orientation()[0] == "point1":
        return rep
    return flip_chain_rep(rep)
