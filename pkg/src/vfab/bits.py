"""Two-state bit-vector helpers.

Values are plain non-negative ints, always kept masked to their declared
width.  Memories are lists of such ints.
"""


def mask(width: int) -> int:
    return (1 << width) - 1


def truncate(value: int, width: int) -> int:
    """Truncate/zero-extend to width (assignment semantics)."""
    return value & mask(width)


def to_bytes_le(value: int, width: int) -> bytes:
    return value.to_bytes((width + 7) // 8, "little")


def from_bytes_le(data: bytes) -> int:
    return int.from_bytes(data, "little")


def pack_mem(elems, width: int) -> int:
    """Concatenate memory elements into one int, element i at bits [i*W, (i+1)*W)."""
    out = 0
    for i, v in enumerate(elems):
        out |= (v & mask(width)) << (i * width)
    return out


def unpack_mem(value: int, width: int, depth: int):
    return [(value >> (i * width)) & mask(width) for i in range(depth)]


def edge_fires(kind: str, old: int, new: int) -> bool:
    """Edge predicates, matching the lowered guard-wire formulas.

    pos: !prev & x   -> prev whole value 0 and LSB of x is 1
    neg: prev & !x   -> x whole value 0 and LSB of prev is 1
    any: prev != x
    """
    if kind == "pos":
        return old == 0 and (new & 1) == 1
    if kind == "neg":
        return new == 0 and (old & 1) == 1
    if kind == "any":
        return old != new
    raise ValueError(f"unknown edge kind {kind!r}")
