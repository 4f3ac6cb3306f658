"""JSON file formats.

Algebra files carry sparse structure constants as index tuples with a rational
string value:

    {"name": "...", "dim": 4, "basis": ["e1", ...],
     "binary":  [[i, j, k, "p/q"], ...],      # coefficient of e_k in [e_i, e_j]
     "ternary": [[i, j, k, l, "p/q"], ...]}   # coefficient of e_l in <e_i,e_j,e_k>

Indices are 0-based.  Tensors antisymmetric by definition (binary; ternary in
its first two slots; a post-algebra's dot and angle) may list either
orientation; the missing one is filled in, and listing both with inconsistent
values is an error.  Representation files are

    {"acting": <inline algebra or file path>, "carrier": ...,
     "rho": [matrix, ...], "mu": [[matrix, ...], ...]}

with matrices as row-major arrays of rational strings; operator files are
{"action": ..., "T": matrix}; post-algebra files replace binary/ternary with
the four keys dot/star/angle/brace.  File references resolve relative to the
referencing file's directory.
"""

import json
import os

from .core import LYAlgebra
from .errors import FormatError
from .linalg import format_frac, frac, is_zero_vec, vzero
from .postlya import PostLYAlgebra
from .reps import RepAction
from .rrb import RRBOperator


def _load_doc(source, base_dir):
    """Return (dict, directory for nested references)."""
    if isinstance(source, dict):
        return source, base_dir
    if isinstance(source, str):
        path = source if os.path.isabs(source) else os.path.join(base_dir or ".", source)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
        except OSError as e:
            raise FormatError("cannot read %s: %s" % (path, e)) from e
        except json.JSONDecodeError as e:
            raise FormatError("%s: invalid JSON: %s" % (path, e)) from e
        if not isinstance(doc, dict):
            raise FormatError("%s: top level must be an object" % path)
        return doc, os.path.dirname(os.path.abspath(path))
    raise FormatError("expected an object or a file path, got %r" % type(source).__name__)


def _field(doc, key, where):
    if key not in doc:
        raise FormatError("%s: missing field %r" % (where, key))
    return doc[key]


def _frac_str(v, where):
    try:
        return frac(v if not isinstance(v, float) else str(v))
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError("%s: bad rational %r" % (where, v)) from e


def _read_sparse2(entries, dim, where, antisym):
    tensor = [[list(vzero(dim)) for _ in range(dim)] for _ in range(dim)]
    seen = set()
    for ent in entries or []:
        if not isinstance(ent, list) or len(ent) != 4:
            raise FormatError("%s: entries must be [i, j, k, value]" % where)
        i, j, k, v = ent
        _check_idx(where, dim, i, j, k)
        tensor[i][j][k] += _frac_str(v, where)
        seen.add((i, j))
    if antisym:
        _complete2(tensor, dim, seen, where)
    return tensor


def _read_sparse3(entries, dim, where, antisym):
    tensor = [[[list(vzero(dim)) for _ in range(dim)] for _ in range(dim)]
              for _ in range(dim)]
    seen = set()
    for ent in entries or []:
        if not isinstance(ent, list) or len(ent) != 5:
            raise FormatError("%s: entries must be [i, j, k, l, value]" % where)
        i, j, k, l, v = ent
        _check_idx(where, dim, i, j, k, l)
        tensor[i][j][k][l] += _frac_str(v, where)
        seen.add((i, j, k))
    if antisym:
        for i in range(dim):
            for j in range(i, dim):
                for k in range(dim):
                    _fill_antisym(tensor[i][j][k], tensor[j][i][k], i == j,
                                  (i, j, k) in seen, (j, i, k) in seen,
                                  where, (i, j, k))
    return tensor


def _complete2(tensor, dim, seen, where):
    for i in range(dim):
        for j in range(i, dim):
            _fill_antisym(tensor[i][j], tensor[j][i], i == j,
                          (i, j) in seen, (j, i) in seen, where, (i, j))


def _fill_antisym(a, b, diag, fwd, bwd, where, label):
    neg_b = [-x for x in b]
    if diag:
        if any(x != 0 for x in a):
            raise FormatError("%s: diagonal entry %s must vanish" % (where, label))
        return
    if fwd and bwd:
        if a != neg_b:
            raise FormatError("%s: entries at %s break antisymmetry" % (where, label))
    elif fwd:
        b[:] = [-x for x in a]
    elif bwd:
        a[:] = neg_b


def _check_idx(where, dim, *idx):
    for i in idx:
        if not isinstance(i, int) or not 0 <= i < dim:
            raise FormatError("%s: index %r out of range 0..%d" % (where, i, dim - 1))


def _read_matrix(rows, where, nr=None, nc=None):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise FormatError("%s: matrix must be a non-empty array of rows" % where)
    width = len(rows[0])
    out = []
    for r in rows:
        if len(r) != width:
            raise FormatError("%s: ragged matrix" % where)
        out.append(tuple(_frac_str(v, where) for v in r))
    if nr is not None and len(out) != nr or nc is not None and width != nc:
        raise FormatError("%s: matrix must be %sx%s" % (where, nr, nc))
    return tuple(out)


def load_algebra(source, base_dir=None):
    doc, here = _load_doc(source, base_dir)
    name = doc.get("name", "algebra")
    dim = _field(doc, "dim", name)
    if not isinstance(dim, int) or dim < 0:
        raise FormatError("%s: dim must be a non-negative integer" % name)
    binary = _read_sparse2(doc.get("binary"), dim, name + ".binary", antisym=True)
    ternary = _read_sparse3(doc.get("ternary"), dim, name + ".ternary", antisym=True)
    return LYAlgebra(dim, binary, ternary, basis=doc.get("basis"), name=name)


def load_action(source, base_dir=None, certify=True):
    doc, here = _load_doc(source, base_dir)
    acting = load_algebra(_field(doc, "acting", "action"), here)
    carrier = load_algebra(_field(doc, "carrier", "action"), here)
    n, m = acting.dim, carrier.dim
    rho_doc = _field(doc, "rho", "action")
    mu_doc = _field(doc, "mu", "action")
    if not isinstance(rho_doc, list) or len(rho_doc) != n:
        raise FormatError("action.rho: need %d matrices" % n)
    if not isinstance(mu_doc, list) or len(mu_doc) != n \
            or any(not isinstance(row, list) or len(row) != n for row in mu_doc):
        raise FormatError("action.mu: need a %dx%d array of matrices" % (n, n))
    rho = [_read_matrix(mx, "action.rho[%d]" % i, m, m) for i, mx in enumerate(rho_doc)]
    mu = [[_read_matrix(mu_doc[i][j], "action.mu[%d][%d]" % (i, j), m, m)
           for j in range(n)] for i in range(n)]
    acting.ensure_verified()
    carrier.ensure_verified()
    r = RepAction(acting, carrier, rho, mu)
    if certify:
        r.ensure_action()
    return r


def load_operator(source, base_dir=None):
    doc, here = _load_doc(source, base_dir)
    action = load_action(_field(doc, "action", "operator"), here)
    T = _read_matrix(_field(doc, "T", "operator"), "operator.T",
                     action.acting.dim, action.carrier.dim)
    return RRBOperator(action, T)


def load_post(source, base_dir=None):
    doc, here = _load_doc(source, base_dir)
    name = doc.get("name", "post-algebra")
    dim = _field(doc, "dim", name)
    if not isinstance(dim, int) or dim < 0:
        raise FormatError("%s: dim must be a non-negative integer" % name)
    dot = _read_sparse2(doc.get("dot"), dim, name + ".dot", antisym=True)
    star = _read_sparse2(doc.get("star"), dim, name + ".star", antisym=False)
    angle = _read_sparse3(doc.get("angle"), dim, name + ".angle", antisym=True)
    brace = _read_sparse3(doc.get("brace"), dim, name + ".brace", antisym=False)
    return PostLYAlgebra(dim, dot, star, angle, brace, basis=doc.get("basis"), name=name)


def load_matrix(source, base_dir=None, key="matrix"):
    doc, here = _load_doc(source, base_dir)
    return _read_matrix(_field(doc, key, "matrix file"), key)


def load_homomorphism(source, base_dir=None):
    doc, here = _load_doc(source, base_dir)
    src = load_algebra(_field(doc, "from", "homomorphism"), here)
    dst = load_algebra(_field(doc, "to", "homomorphism"), here)
    mx = _read_matrix(_field(doc, "matrix", "homomorphism"), "homomorphism.matrix",
                      dst.dim, src.dim)
    return src, dst, mx


def load_nijenhuis(source, base_dir=None):
    doc, here = _load_doc(source, base_dir)
    A = load_algebra(_field(doc, "algebra", "nijenhuis file"), here)
    N = _read_matrix(_field(doc, "N", "nijenhuis file"), "N", A.dim, A.dim)
    return A, N


def load_wedges(source, base_dir=None):
    """{"wedges": [[vector, vector], ...]} with rational-string vectors."""
    doc, here = _load_doc(source, base_dir)
    out = []
    for i, pair in enumerate(_field(doc, "wedges", "wedge file")):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError("wedges[%d]: expected a pair of vectors" % i)
        x = tuple(_frac_str(v, "wedges[%d]" % i) for v in pair[0])
        y = tuple(_frac_str(v, "wedges[%d]" % i) for v in pair[1])
        if len(x) != len(y):
            raise FormatError("wedges[%d]: vectors of unequal length" % i)
        out.append((x, y))
    return out


# ---------------------------------------------------------------------------
# writers

def dump_algebra(A):
    binary = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            for k, v in enumerate(A.binary[i][j]):
                if v != 0:
                    binary.append([i, j, k, format_frac(v)])
    ternary = []
    for i in range(A.dim):
        for j in range(i + 1, A.dim):
            for k in range(A.dim):
                for l, v in enumerate(A.ternary[i][j][k]):
                    if v != 0:
                        ternary.append([i, j, k, l, format_frac(v)])
    return {"name": A.name, "dim": A.dim, "basis": list(A.basis),
            "binary": binary, "ternary": ternary}


def _dump_sparse2(t, dim, antisym):
    out = []
    for i in range(dim):
        for j in range(i + 1 if antisym else 0, dim):
            for k, v in enumerate(t[i][j]):
                if v != 0:
                    out.append([i, j, k, format_frac(v)])
    return out


def _dump_sparse3(t, dim, antisym):
    out = []
    for i in range(dim):
        for j in range(i + 1 if antisym else 0, dim):
            for k in range(dim):
                for l, v in enumerate(t[i][j][k]):
                    if v != 0:
                        out.append([i, j, k, l, format_frac(v)])
    return out


def dump_post(P):
    return {"name": P.name, "dim": P.dim, "basis": list(P.basis),
            "dot": _dump_sparse2(P.dot, P.dim, True),
            "star": _dump_sparse2(P.star, P.dim, False),
            "angle": _dump_sparse3(P.angle, P.dim, True),
            "brace": _dump_sparse3(P.brace, P.dim, False)}


def dump_matrix(mx):
    return [[format_frac(v) for v in row] for row in mx]


def canonical_json(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
