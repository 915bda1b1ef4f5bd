"""MatrixMarket and plain-text vector I/O.

Only what the CLI needs: ``array`` and ``coordinate`` layouts with ``real``
or ``complex`` fields and ``general`` symmetry. Values are written with 17
significant digits so a write/read round trip is exact.
"""
import numpy as np

from .errors import ParseError, UnsupportedFormat

_FIELDS = {"real", "complex"}


def _fmt(x):
    return format(float(x), ".17g")


def _numbers(tokens, lineno):
    try:
        return [float(t) for t in tokens]
    except ValueError:
        raise ParseError(f"not a number in {' '.join(tokens)!r}", lineno) from None


def parse_matrix_market(text):
    """Parse MatrixMarket text into a dense complex128 array."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty input", 1)
    header = lines[0].split()
    if len(header) != 5 or header[0].lower() != "%%matrixmarket":
        raise ParseError("missing '%%MatrixMarket' banner", 1)
    obj, layout, fld, symmetry = (h.lower() for h in header[1:])
    if obj != "matrix":
        raise UnsupportedFormat(f"object {obj!r} is not supported")
    if layout not in ("array", "coordinate"):
        raise UnsupportedFormat(f"layout {layout!r} is not supported")
    if fld not in _FIELDS:
        raise UnsupportedFormat(f"field {fld!r} is not supported (real or complex only)")
    if symmetry != "general":
        raise UnsupportedFormat(f"symmetry {symmetry!r} is not supported (general only)")
    width = 2 if fld == "complex" else 1

    body = [
        (i + 1, ln.split())
        for i, ln in enumerate(lines)
        if i > 0 and ln.strip() and not ln.lstrip().startswith("%")
    ]
    if not body:
        raise ParseError("missing size line", len(lines))
    size_line, size_tokens = body[0]
    try:
        size = [int(t) for t in size_tokens]
    except ValueError:
        raise ParseError("size line must hold integers", size_line) from None
    expected = 2 if layout == "array" else 3
    if len(size) != expected or size[0] < 1 or size[1] < 1 or min(size) < 0:
        raise ParseError(f"bad size line {' '.join(size_tokens)!r}", size_line)
    rows, cols = size[0], size[1]
    out = np.zeros((rows, cols), dtype=np.complex128)
    entries = body[1:]

    if layout == "array":
        if len(entries) != rows * cols:
            where = entries[-1][0] if entries else size_line
            raise ParseError(f"expected {rows * cols} values, found {len(entries)}", where)
        flat = np.empty(rows * cols, dtype=np.complex128)
        for k, (lineno, tok) in enumerate(entries):
            if len(tok) != width:
                raise ParseError(f"expected {width} value(s) per line", lineno)
            v = _numbers(tok, lineno)
            flat[k] = complex(v[0], v[1]) if width == 2 else v[0]
        out[:] = flat.reshape((cols, rows)).T  # column-major
    else:
        nnz = size[2]
        if len(entries) != nnz:
            where = entries[-1][0] if entries else size_line
            raise ParseError(f"expected {nnz} entries, found {len(entries)}", where)
        for lineno, tok in entries:
            if len(tok) != 2 + width:
                raise ParseError(f"expected {2 + width} fields per entry", lineno)
            try:
                i, j = int(tok[0]), int(tok[1])
            except ValueError:
                raise ParseError("entry indices must be integers", lineno) from None
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise ParseError(f"index ({i}, {j}) outside {rows}x{cols}", lineno)
            v = _numbers(tok[2:], lineno)
            out[i - 1, j - 1] += complex(v[0], v[1]) if width == 2 else v[0]
    if not np.all(np.isfinite(out)):
        raise ParseError("non-finite value")
    return out


def _field(a):
    return "complex" if np.iscomplexobj(a) and np.any(np.imag(a) != 0) else "real"


def _value(z, fld):
    if fld == "complex":
        return f"{_fmt(z.real)} {_fmt(z.imag)}"
    return _fmt(np.real(z))


def format_matrix_market(a, coordinate=False, comment=None):
    """Serialise a dense matrix; ``coordinate=True`` lists only nonzeros."""
    a = np.asarray(a)
    if a.ndim != 2:
        raise ValueError("need a 2-D array")
    fld = _field(a)
    layout = "coordinate" if coordinate else "array"
    out = [f"%%MatrixMarket matrix {layout} {fld} general"]
    if comment:
        out.extend(f"% {c}" for c in comment.splitlines())
    rows, cols = a.shape
    if coordinate:
        nz = [(i, j) for j in range(cols) for i in range(rows) if a[i, j] != 0]
        out.append(f"{rows} {cols} {len(nz)}")
        out.extend(f"{i + 1} {j + 1} {_value(a[i, j], fld)}" for i, j in nz)
    else:
        out.append(f"{rows} {cols}")
        out.extend(_value(a[i, j], fld) for j in range(cols) for i in range(rows))
    return "\n".join(out) + "\n"


def read_matrix_market(path):
    with open(path, encoding="utf-8") as fh:
        return parse_matrix_market(fh.read())


def write_matrix_market(path, a, coordinate=False, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix_market(a, coordinate, comment))


def parse_vector(text):
    """One value per line: ``re`` or ``re im``. Blank lines and ``#`` comments are skipped."""
    vals = []
    for lineno, ln in enumerate(text.splitlines(), 1):
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        tok = ln.split()
        if len(tok) > 2:
            raise ParseError("expected 're' or 're im'", lineno)
        v = _numbers(tok, lineno)
        vals.append(complex(v[0], v[1] if len(v) == 2 else 0.0))
    if not vals:
        raise ParseError("no values found")
    out = np.array(vals, dtype=np.complex128)
    if not np.all(np.isfinite(out)):
        raise ParseError("non-finite value")
    return out


def format_vector(v):
    v = np.asarray(v)
    fld = _field(v)
    return "".join(_value(z, fld) + "\n" for z in v)


def read_vector(path):
    with open(path, encoding="utf-8") as fh:
        return parse_vector(fh.read())


def write_vector(path, v):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_vector(v))
