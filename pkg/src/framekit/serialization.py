"""JSON frame documents and CSV matrix interchange.

JSON is the primary format because frames need field metadata; CSV only
carries bare matrices (row-major, complex split into re/im column
pairs).  Floats round-trip bit-identically through both paths via
shortest-round-trip decimal formatting.
"""

import csv
import io
import json

import numpy as np

from .errors import BadParam
from .frame import COMPLEX, REAL, Frame

SCHEMA_VERSION = "framekit/1"


def frame_to_doc(f: Frame, name=None, construction=None, seed=None) -> dict:
    if f.field == COMPLEX:
        vectors = [[[float(z.real), float(z.imag)] for z in row] for row in f.vectors]
    else:
        vectors = [[float(x) for x in row] for row in f.vectors]
    doc = {"schema": SCHEMA_VERSION, "field": f.field, "n": f.n, "vectors": vectors}
    if name is not None:
        doc["name"] = name
    if seed is not None:
        doc["seed"] = seed
    if construction is not None:
        doc["construction"] = construction
    return doc


def doc_to_frame(doc: dict) -> Frame:
    try:
        field = doc["field"]
        n = int(doc["n"])
        raw = doc["vectors"]
    except (KeyError, TypeError) as exc:
        raise BadParam(f"malformed frame document: {exc}") from exc
    if field not in (REAL, COMPLEX):
        raise BadParam(f"unknown field {field!r}")
    rows = []
    for row in raw:
        if len(row) != n:
            raise BadParam(f"vector of length {len(row)} in a dimension-{n} document")
        if field == COMPLEX:
            rows.append([complex(re, im) for re, im in row])
        else:
            rows.append([float(x) for x in row])
    return Frame(field=field, vectors=np.array(rows))


def write_frame(f: Frame, fp, **meta) -> None:
    json.dump(frame_to_doc(f, **meta), fp, indent=2)
    fp.write("\n")


def read_frame(fp) -> Frame:
    return doc_to_frame(json.load(fp))


def frame_to_json(f: Frame, **meta) -> str:
    out = io.StringIO()
    write_frame(f, out, **meta)
    return out.getvalue()


def frame_from_json(text: str) -> Frame:
    return doc_to_frame(json.loads(text))


def write_matrix_csv(matrix, fp) -> None:
    """Row-major CSV; complex matrices get paired c{j}_re, c{j}_im columns."""
    m = np.asarray(matrix)
    writer = csv.writer(fp)
    if np.iscomplexobj(m):
        header = []
        for j in range(m.shape[1]):
            header += [f"c{j}_re", f"c{j}_im"]
        writer.writerow(header)
        for row in m:
            flat = []
            for z in row:
                flat += [repr(float(z.real)), repr(float(z.imag))]
            writer.writerow(flat)
    else:
        writer.writerow([f"c{j}" for j in range(m.shape[1])])
        for row in m:
            writer.writerow([repr(float(x)) for x in row])


def read_matrix_csv(fp) -> np.ndarray:
    reader = csv.reader(fp)
    header = next(reader)
    complex_cols = any(name.endswith("_re") for name in header)
    rows = []
    for line in reader:
        if not line:
            continue
        vals = [float(x) for x in line]
        if complex_cols:
            rows.append([complex(vals[k], vals[k + 1]) for k in range(0, len(vals), 2)])
        else:
            rows.append(vals)
    return np.array(rows)
