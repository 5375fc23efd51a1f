"""Text formats: Seifert matrix files, knot tables, certificate documents."""

import csv
import io
import json
from importlib import resources

from .errors import InconsistentRecord, InvalidCertificate, ParseError
from .group_ring import GroupRingElement
from .knot_algebra import IntLaurentPolynomial, KnotRecord, SeifertMatrix
from .metabolizer import MetabolizerCertificate

TABLE_HEADER = ["name", "crossings", "alexander", "determinant"]
BUNDLED_TABLE = "order4_knots.csv"


def _content_lines(text):
    """Yield ``(line_number, stripped_content)`` for lines with content."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body


def _ints(lineno, body):
    try:
        return [int(tok) for tok in body.split()]
    except ValueError:
        raise ParseError(lineno, f"expected integers, got {body!r}") from None


def parse_seifert_file(text):
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty Seifert matrix file")
    lineno, body = lines[0]
    head = _ints(lineno, body)
    if len(head) != 1 or head[0] < 0:
        raise ParseError(lineno, "first line must be a single nonnegative dimension")
    n = head[0]
    rows = []
    for lineno, body in lines[1:n + 1]:
        row = _ints(lineno, body)
        if len(row) != n:
            raise ParseError(lineno, f"expected {n} entries, got {len(row)}")
        rows.append(tuple(row))
    if len(rows) < n:
        last = lines[-1][0] if lines else 1
        raise ParseError(last + 1, f"expected {n} matrix rows, got {len(rows)}")
    if len(lines) > n + 1:
        raise ParseError(lines[n + 1][0], "trailing content after the matrix")
    return SeifertMatrix(tuple(rows))


def emit_seifert_file(V):
    out = [str(V.dim)]
    out += [" ".join(str(x) for x in row) for row in V.entries]
    return "\n".join(out) + "\n"


def parse_knot_table(text):
    reader = csv.reader(io.StringIO(text))
    records = []
    header_seen = False
    for row in reader:
        lineno = reader.line_num
        if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
            continue
        row = [cell.strip() for cell in row]
        if not header_seen:
            if row != TABLE_HEADER:
                raise ParseError(lineno, f"expected header {','.join(TABLE_HEADER)}")
            header_seen = True
            continue
        if len(row) != 4:
            raise ParseError(lineno, f"expected 4 fields, got {len(row)}")
        name, crossings, alexander, determinant = row
        try:
            coeffs = tuple(int(c) for c in alexander.split(";"))
            crossings = int(crossings)
            determinant = int(determinant)
        except ValueError as exc:
            raise ParseError(lineno, str(exc)) from None
        poly = IntLaurentPolynomial(coeffs)
        if poly.normalize() != poly:
            raise InconsistentRecord(lineno, "Alexander coefficients are not normalized")
        rec = KnotRecord(name, crossings, poly, determinant)
        problems = rec.consistency_problems()
        if problems:
            raise InconsistentRecord(lineno, "; ".join(problems))
        records.append(rec)
    return records


def emit_knot_table(records):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TABLE_HEADER)
    for r in records:
        w.writerow([r.name, r.crossings, ";".join(map(str, r.alexander.coeffs)), r.determinant])
    return buf.getvalue()


def bundled_table_text():
    return resources.files("knotorder.data").joinpath(BUNDLED_TABLE).read_text()


def certificate_to_dict(cert):
    return {
        "prime": cert.p,
        "copies": cert.d,
        "generator": cert.g,
        "self_linking": cert.c,
        "permutation": list(cert.permutation),
        "basis": [list(r) for r in cert.basis],
        "summed_vector": list(cert.summed_vector),
        "relation_coeffs": list(cert.relation.coeffs),
        "cofactor_coeffs": list(cert.cofactor.coeffs),
        "integer_n": cert.n,
        "verdict": f"{cert.n}*tau(K,chi_1) = 0",
    }


def certificate_from_dict(doc):
    """Rebuild and re-verify a certificate; nothing in ``doc`` is trusted."""
    try:
        rel = tuple(doc["relation_coeffs"])
        q = len(rel)
        cert = MetabolizerCertificate(
            p=int(doc["prime"]),
            d=int(doc["copies"]),
            g=int(doc["generator"]),
            basis=tuple(tuple(int(x) for x in r) for r in doc["basis"]),
            permutation=tuple(int(x) for x in doc["permutation"]),
            summed_vector=tuple(int(x) for x in doc["summed_vector"]),
            relation=GroupRingElement(q, rel),
            cofactor=GroupRingElement(q, tuple(doc["cofactor_coeffs"])),
            n=int(doc["integer_n"]),
            c=int(doc.get("self_linking", 1)),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidCertificate(f"malformed certificate document: {exc}") from None
    cert.verify()
    return cert


def dump_certificates(certs):
    return json.dumps([certificate_to_dict(c) for c in certs], indent=2) + "\n"


def load_certificates(text):
    return [certificate_from_dict(doc) for doc in json.loads(text)]
