from .objects import (
    Point1, RightRay, Interval, Point2, UpRay, HSegment, VSegment, BottomlessRect, Rect,
    GeomObject, OBJECT_TYPES, intersects, contains, x_range, y_range,
)
from .graph import BipartiteGraph
from .representation import ClassTag, Representation, Violation, validate_representation, build_graph
