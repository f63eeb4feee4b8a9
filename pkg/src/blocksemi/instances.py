"""Reading and writing instance documents.

An instance is one partition plus any number of named transformations.
The on-disk form is a JSON object with a fixed vocabulary:

    {
      "n": 4,
      "blocks": [[0, 1], [2, 3]],
      "f": [0, 0, 2, 2],
      "g": [1, 1, 3, 3]
    }

"n" is the ground-set size, "blocks" lists disjoint integer blocks
covering 0..n-1, and every other key names a transformation given as its
length-n image list.  Names must be identifiers and keep their document
order, so parse(render(doc)) == doc.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass

from .core import BlocksemiError, Partition, Transformation

RESERVED_KEYS = ("n", "blocks")
_NAME_RE = re.compile(r"[A-Za-z_]\w*\Z")


class InvalidInstance(BlocksemiError):
    """The document does not follow the instance vocabulary."""


class UnknownName(BlocksemiError):
    """A requested transformation name is absent from the instance."""


@dataclass(frozen=True)
class InstanceFile:
    partition: Partition
    maps: tuple[tuple[str, Transformation], ...]

    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.maps)

    def get(self, name: str) -> Transformation:
        for key, t in self.maps:
            if key == name:
                return t
        raise UnknownName(f"no transformation named {name!r} in the instance")


def parse_instance(text: str) -> InstanceFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInstance(f"not valid JSON: {exc}") from exc
    return instance_from_document(doc)


def instance_from_document(doc) -> InstanceFile:
    if not isinstance(doc, dict):
        raise InvalidInstance("instance must be a JSON object")
    if "blocks" not in doc:
        raise InvalidInstance('missing "blocks"')
    try:
        partition = Partition(tuple(tuple(b) for b in doc["blocks"]))
    except (TypeError, ValueError) as exc:
        raise InvalidInstance(f"bad blocks: {exc}") from exc
    if "n" in doc and doc["n"] != partition.n:
        raise InvalidInstance(
            f'"n" is {doc["n"]} but the blocks cover {partition.n} points'
        )

    maps = []
    for key, value in doc.items():
        if key in RESERVED_KEYS:
            continue
        if not _NAME_RE.match(key):
            raise InvalidInstance(f"bad transformation name {key!r}")
        try:
            t = Transformation(tuple(value))
        except (TypeError, ValueError) as exc:
            raise InvalidInstance(f"bad transformation {key!r}: {exc}") from exc
        if t.n != partition.n:
            raise InvalidInstance(
                f"transformation {key!r} has length {t.n}, expected {partition.n}"
            )
        maps.append((key, t))
    return InstanceFile(partition, tuple(maps))


def render_instance(instance: InstanceFile) -> str:
    doc: dict = {"n": instance.partition.n}
    doc["blocks"] = [list(b) for b in instance.partition.blocks]
    for name, t in instance.maps:
        doc[name] = list(t.image)
    return json.dumps(doc, indent=2) + "\n"
