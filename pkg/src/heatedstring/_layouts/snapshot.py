"""Byte layouts for spectral state snapshots."""

from enum import IntEnum

from construct import (
    Array,
    Const,
    Float64l,
    Int32ul,
    Switch,  # type: ignore
    this,
)
from construct import Struct as cStruct

SNAPSHOT_MAGIC = b"HSTR"
"""File signature written at the start of every snapshot."""


class SnapshotVersion(IntEnum):
    """Snapshot format versions."""

    V1 = 1


_SNAPSHOT_V1_LAYOUT = cStruct(
    "n_modes" / Int32ul,
    "mu" / Float64l,
    "a" / Float64l,
    "t" / Float64l,
    "theta0" / Float64l,
    "u" / Array(this.n_modes, Float64l),
    "v" / Array(this.n_modes, Float64l),
    "theta" / Array(this.n_modes, Float64l),
)

SNAPSHOT_LAYOUT = cStruct(
    "magic" / Const(SNAPSHOT_MAGIC),
    "version" / Int32ul,
    "body"
    / Switch(
        lambda this: this.version,
        {
            SnapshotVersion.V1: _SNAPSHOT_V1_LAYOUT,
        },
    ),
)
