"""8-bit image files <-> float sRGB buffers.

Reads PNG (8-bit gray/RGB/palette, alpha dropped), binary PPM/PGM and JPEG;
writes PNG and PPM only.
"""

from __future__ import annotations

import struct
from pathlib import Path

import numpy as np
from PIL import Image, UnidentifiedImageError

from .errors import CorruptImageError, UnsupportedFormatError

READ_FORMATS = {".png": "PNG", ".ppm": "PPM", ".pgm": "PPM", ".jpg": "JPEG", ".jpeg": "JPEG"}
WRITE_FORMATS = {"png": "PNG", "ppm": "PPM"}
PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"


def _png_bit_depth(path: Path) -> int | None:
    with open(path, "rb") as fh:
        head = fh.read(26)
    if len(head) < 26 or not head.startswith(PNG_SIGNATURE) or head[12:16] != b"IHDR":
        return None
    return head[24]


def _ppm_maxval(path: Path) -> int | None:
    with open(path, "rb") as fh:
        head = fh.read(64)
    parts = head.split()
    if len(parts) < 4 or parts[0] not in (b"P5", b"P6"):
        return None
    try:
        return int(parts[3])
    except ValueError:
        return None


def load(path) -> np.ndarray:
    """Decode an image file to an (H, W, 3) float array in [0, 1].

    Raises FileNotFoundError, UnsupportedFormatError (unknown container or
    more than 8 bits per sample) or CorruptImageError.
    """
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(path)
    fmt = READ_FORMATS.get(path.suffix.lower())
    if fmt is None:
        raise UnsupportedFormatError(f"{path.name}: unsupported extension")
    if fmt == "PNG":
        depth = _png_bit_depth(path)
        if depth is None:
            raise CorruptImageError(f"{path.name}: not a PNG file")
        if depth > 8:
            raise UnsupportedFormatError(f"{path.name}: {depth}-bit PNG not supported")
    elif fmt == "PPM":
        maxval = _ppm_maxval(path)
        if maxval is not None and maxval > 255:
            raise UnsupportedFormatError(f"{path.name}: 16-bit PPM not supported")
    try:
        with Image.open(path) as im:
            if im.format not in ("PNG", "PPM", "JPEG"):
                raise UnsupportedFormatError(f"{path.name}: {im.format} data")
            if im.mode not in ("L", "LA", "P", "PA", "RGB", "RGBA", "1"):
                raise UnsupportedFormatError(f"{path.name}: pixel mode {im.mode}")
            data = np.asarray(im.convert("RGB"), dtype=np.uint8)
    except UnidentifiedImageError as exc:
        raise CorruptImageError(f"{path.name}: {exc}") from None
    except (OSError, SyntaxError, struct.error) as exc:
        raise CorruptImageError(f"{path.name}: {exc}") from None
    return data.astype(float) / 255.0


def quantize(img) -> np.ndarray:
    """Round-half-up quantisation of [0, 1] floats to uint8."""
    return np.floor(np.asarray(img, dtype=float) * 255.0 + 0.5).astype(np.uint8)


def save(img, path, format: str | None = None) -> Path:
    """Write ``img`` losslessly as PNG or binary PPM (P6).

    ``format`` defaults to the file extension.
    """
    path = Path(path)
    fmt = (format or path.suffix.lstrip(".")).lower()
    if fmt not in WRITE_FORMATS:
        raise UnsupportedFormatError(f"cannot write {fmt!r}; use png or ppm")
    data = quantize(img)
    if data.ndim != 3 or data.shape[2] != 3:
        raise ValueError(f"expected an (H, W, 3) image, got shape {data.shape}")
    if fmt == "ppm":
        h, w, _ = data.shape
        path.write_bytes(b"P6\n%d %d\n255\n" % (w, h) + data.tobytes())
    else:
        Image.fromarray(data, "RGB").save(path, format="PNG", optimize=False)
    return path
