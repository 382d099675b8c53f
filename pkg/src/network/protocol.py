"""
JSON codec for instance and certificate files.

Instances look like {"class": "gig", "u": [...], "v": [...]} with objects
such as {"kind": "hseg", "x": [lo, hi], "y": y}. Certificates carry the
instance digest so a certificate can be matched to the file it was made for.
"""

import json
import os
import tempfile
from dataclasses import dataclass
from typing import Annotated, List, Literal, Optional, Tuple, Union

from Crypto.Hash import SHA256
from pydantic import BaseModel, ConfigDict, Field, StrictInt, ValidationError

from ..certify.certificate import Biclique, WithinBound
from ..geometry.objects import (
    BottomlessRect, HSegment, Interval, Point1, Point2, Rect, RightRay, UpRay, VSegment,
)
from ..geometry.representation import ClassTag, Representation
from ..oracle.biclique import BicliqueWitness
from ..oracle.peeling import EliminationCertificate
from ..utils.errors import InvalidInputError

Span = Tuple[StrictInt, StrictInt]


class _Model(BaseModel):
    model_config = ConfigDict(extra="forbid")


class Point1Model(_Model):
    kind: Literal["point1"]
    x: StrictInt

    def build(self):
        return Point1(self.x)


class RightRayModel(_Model):
    kind: Literal["rray"]
    x: StrictInt

    def build(self):
        return RightRay(self.x)


class IntervalModel(_Model):
    kind: Literal["interval"]
    x: Span

    def build(self):
        return Interval(*self.x)


class Point2Model(_Model):
    kind: Literal["point2"]
    x: StrictInt
    y: StrictInt

    def build(self):
        return Point2(self.x, self.y)


class UpRayModel(_Model):
    kind: Literal["uray"]
    x: StrictInt
    y: StrictInt

    def build(self):
        return UpRay(self.x, self.y)


class HSegmentModel(_Model):
    kind: Literal["hseg"]
    x: Span
    y: StrictInt

    def build(self):
        return HSegment(*self.x, self.y)


class VSegmentModel(_Model):
    kind: Literal["vseg"]
    x: StrictInt
    y: Span

    def build(self):
        return VSegment(self.x, *self.y)


class BottomlessRectModel(_Model):
    kind: Literal["brect"]
    x: Span
    y: StrictInt

    def build(self):
        return BottomlessRect(*self.x, self.y)


class RectModel(_Model):
    kind: Literal["rect"]
    x: Span
    y: Span

    def build(self):
        return Rect(*self.x, *self.y)


ObjectModel = Annotated[
    Union[
        Point1Model, RightRayModel, IntervalModel, Point2Model, UpRayModel,
        HSegmentModel, VSegmentModel, BottomlessRectModel, RectModel,
    ],
    Field(discriminator="kind"),
]


class InstanceModel(_Model):
    klass: ClassTag = Field(alias="class")
    u: List[ObjectModel]
    v: List[ObjectModel]
    u_labels: Optional[List[str]] = None
    v_labels: Optional[List[str]] = None


class WitnessModel(_Model):
    u: List[StrictInt]
    v: List[StrictInt]


class CertificateModel(_Model):
    kind: Literal["within_bound", "biclique"]
    bound: StrictInt
    steps: Optional[List[Tuple[Tuple[Literal["u", "v"], StrictInt], StrictInt]]] = None
    claimed_degeneracy: Optional[StrictInt] = None
    witness: Optional[WitnessModel] = None
    extraction_stage: Optional[Literal[1, 2, 3]] = None
    klass: Optional[ClassTag] = Field(default=None, alias="class")
    k: Optional[StrictInt] = None
    edges: Optional[StrictInt] = None
    instance_sha256: Optional[str] = None
    tally: Optional[dict] = None


@dataclass(frozen=True)
class InstanceFile:
    rep: Representation
    u_labels: Optional[Tuple[str, ...]] = None
    v_labels: Optional[Tuple[str, ...]] = None


def _object_json(obj):
    kind = obj.kind
    if kind == "point1":
        return {"kind": kind, "x": obj.x}
    if kind == "rray":
        return {"kind": kind, "x": obj.start_x}
    if kind == "interval":
        return {"kind": kind, "x": [obj.lo, obj.hi]}
    if kind == "point2":
        return {"kind": kind, "x": obj.x, "y": obj.y}
    if kind == "uray":
        return {"kind": kind, "x": obj.x, "y": obj.start_y}
    if kind == "hseg":
        return {"kind": kind, "x": [obj.x_lo, obj.x_hi], "y": obj.y}
    if kind == "vseg":
        return {"kind": kind, "x": obj.x, "y": [obj.y_lo, obj.y_hi]}
    if kind == "brect":
        return {"kind": kind, "x": [obj.x_lo, obj.x_hi], "y": obj.y_top}
    if kind == "rect":
        return {"kind": kind, "x": [obj.x_lo, obj.x_hi], "y": [obj.y_lo, obj.y_hi]}
    raise InvalidInputError(f"Unknown object kind {kind!r}")


def _validation_message(error):
    first = error.errors()[0]
    where = ".".join(str(part) for part in first["loc"])
    return f"{where}: {first['msg']}"


class Protocol:
    @staticmethod
    def canonical_json(data):
        """Byte-stable JSON text: sorted keys, no spaces, trailing newline"""
        return json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"

    @staticmethod
    def digest(data):
        """SHA-256 of the canonical JSON text"""
        return SHA256.new(Protocol.canonical_json(data).encode()).hexdigest()

    @staticmethod
    def encode_instance(rep, u_labels=None, v_labels=None):
        data = {
            "class": rep.class_tag.value,
            "u": [_object_json(obj) for obj in rep.u_objects],
            "v": [_object_json(obj) for obj in rep.v_objects],
        }
        if u_labels is not None:
            data["u_labels"] = [str(label) for label in u_labels]
        if v_labels is not None:
            data["v_labels"] = [str(label) for label in v_labels]
        return data

    @staticmethod
    def decode_instance(data):
        try:
            model = InstanceModel.model_validate(data)
        except ValidationError as e:
            raise InvalidInputError(f"Malformed instance: {_validation_message(e)}") from None
        rep = Representation(
            model.klass,
            [obj.build() for obj in model.u],
            [obj.build() for obj in model.v],
        )
        u_labels = tuple(model.u_labels) if model.u_labels is not None else None
        v_labels = tuple(model.v_labels) if model.v_labels is not None else None
        if u_labels is not None and len(u_labels) != rep.u_count:
            raise InvalidInputError("u_labels length does not match u")
        if v_labels is not None and len(v_labels) != rep.v_count:
            raise InvalidInputError("v_labels length does not match v")
        return InstanceFile(rep, u_labels, v_labels)

    @staticmethod
    def encode_certificate(certificate, klass=None, k=None, edges=None, instance_sha256=None):
        data = {"kind": certificate.kind, "bound": certificate.bound_value}
        if isinstance(certificate, WithinBound):
            data["steps"] = [[list(vertex), degree] for vertex, degree in certificate.cert.steps]
            data["claimed_degeneracy"] = certificate.cert.claimed_degeneracy
            data["extraction_stage"] = None
            if certificate.tally is not None:
                data["tally"] = certificate.tally
        else:
            data["witness"] = {
                "u": list(certificate.w.u_vertices),
                "v": list(certificate.w.v_vertices),
            }
            data["extraction_stage"] = certificate.extraction_stage
        extras = {"class": klass, "k": k, "edges": edges, "instance_sha256": instance_sha256}
        for key, value in extras.items():
            if value is not None:
                data[key] = value.value if isinstance(value, ClassTag) else value
        return data

    @staticmethod
    def decode_certificate(data):
        """The certificate plus its parsed envelope (class, k, digest)"""
        try:
            model = CertificateModel.model_validate(data)
        except ValidationError as e:
            raise InvalidInputError(f"Malformed certificate: {_validation_message(e)}") from None
        if model.kind == "within_bound":
            if model.steps is None:
                raise InvalidInputError("within_bound certificate has no steps")
            steps = tuple((tuple(vertex), degree) for vertex, degree in model.steps)
            claimed = model.claimed_degeneracy
            if claimed is None:
                claimed = max((d for _, d in steps), default=0)
            certificate = WithinBound(EliminationCertificate(steps, claimed), model.bound, model.tally)
        else:
            if model.witness is None:
                raise InvalidInputError("biclique certificate has no witness")
            witness = BicliqueWitness(tuple(model.witness.u), tuple(model.witness.v))
            certificate = Biclique(witness, model.bound, model.extraction_stage)
        return certificate, model

    @staticmethod
    def read_json(path):
        try:
            with open(path, "r", encoding="utf-8") as f:
                return json.load(f)
        except json.JSONDecodeError as e:
            raise InvalidInputError(f"{path}: not valid JSON ({e.msg} at line {e.lineno})") from None
        except OSError as e:
            raise InvalidInputError(f"{path}: {e.strerror}") from None

    @staticmethod
    def write_json(path, data):
        """Write canonical JSON atomically: temp file in the target directory, then os.replace"""
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                f.write(Protocol.canonical_json(data))
            os.replace(tmp_path, path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise

    @staticmethod
    def load_instance(path):
        return Protocol.decode_instance(Protocol.read_json(path))

    @staticmethod
    def save_instance(path, rep, u_labels=None, v_labels=None):
        """Write an instance file and return its digest"""
        data = Protocol.encode_instance(rep, u_labels, v_labels)
        Protocol.write_json(path, data)
        return Protocol.digest(data)
