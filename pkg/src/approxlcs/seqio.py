"""Reading and writing string sets: line-delimited text, FASTA, IUPAC codes, cost tables."""

from __future__ import annotations

import re
from pathlib import Path

from .errors import EmptySequence, ParseError, UnknownIUPACCode
from .strings import DistanceMetric, IndeterminateString, StringSet, validate_string_set

IUPAC = {
    "A": "A", "C": "C", "G": "G", "T": "T", "U": "T",
    "R": "AG", "Y": "CT", "S": "CG", "W": "AT", "K": "GT", "M": "AC",
    "B": "CGT", "D": "AGT", "H": "ACT", "V": "ACG", "N": "ACGT",
}

_NUCLEOTIDE = set("ACGTUNacgtun")
_TOKEN = re.compile(r"\[([^\]]*)\]|(.)")


def read_records(text: str, fmt: str = "lines"):
    """(name, sequence, line number) triples; blank lines are skipped."""
    if fmt == "lines":
        out = []
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if line:
                out.append((f"s{len(out) + 1}", line, lineno))
        return out
    if fmt != "fasta":
        raise ValueError(f"unknown format {fmt!r}")
    out = []
    name = None
    chunks, start = [], 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith(";"):
            continue
        if line.startswith(">"):
            if name is not None:
                out.append((name, "".join(chunks), start))
            name, chunks, start = line[1:].strip(), [], lineno
        elif name is None:
            raise ParseError("sequence data before the first '>' header", lineno)
        else:
            chunks.append(line)
    if name is not None:
        out.append((name, "".join(chunks), start))
    for rec_name, seq, lineno in out:
        if not seq:
            raise EmptySequence(f"record {rec_name!r} has no sequence", lineno)
    return out


def expand_iupac(seq: str, lineno=None) -> IndeterminateString:
    """Expand IUPAC codes (case-insensitive); ``[..]`` groups are taken literally."""
    positions = []
    for group, code in _TOKEN.findall(seq):
        if code:
            if code.isspace():
                continue
            letters = IUPAC.get(code.upper())
            if letters is None:
                raise UnknownIUPACCode(f"unknown IUPAC code {code!r}", lineno)
            positions.append(letters)
        else:
            letters = group.replace(",", "").replace(" ", "")
            if not letters:
                raise ParseError("empty letter group []", lineno)
            positions.append(letters)
    if not positions:
        raise EmptySequence("empty sequence", lineno)
    return IndeterminateString(tuple(positions))


def parse(text: str, fmt: str = "lines", indeterminate: bool = False, normalize: bool = True, alphabet=None):
    records = read_records(text, fmt)
    if indeterminate:
        return [expand_iupac(seq, lineno) for _, seq, lineno in records], [r[0] for r in records]
    seqs = [seq for _, seq, _ in records]
    if fmt == "fasta" and normalize and all(set(s) <= _NUCLEOTIDE for s in seqs):
        seqs = [s.lower() for s in seqs]
    names = [r[0] for r in records] if fmt == "fasta" else None
    return validate_string_set(seqs, alphabet, names), [r[0] for r in records]


def ingest(path, fmt: str = "lines", indeterminate: bool = False, normalize: bool = True, alphabet=None):
    """Read a string set (or a list of indeterminate strings) from a file."""
    text = Path(path).read_text(encoding="latin-1")
    result, _ = parse(text, fmt, indeterminate, normalize, alphabet)
    return result


def emit(S, fmt: str = "lines") -> str:
    """Serialize a StringSet (or indeterminate strings) so that ingest reads it back."""
    seqs = [s.decode("latin-1") if isinstance(s, bytes) else str(s) for s in S]
    if fmt == "lines":
        return "".join(s + "\n" for s in seqs)
    if fmt == "fasta":
        names = getattr(S, "names", None) or [f"s{j + 1}" for j in range(len(seqs))]
        return "".join(f">{name}\n{s}\n" for name, s in zip(names, seqs))
    raise ValueError(f"unknown format {fmt!r}")


def parse_cost_table(text: str) -> DistanceMetric:
    """``op<TAB>from<TAB>to<TAB>cost`` rows; op is sub, ins or del and ``-`` marks the empty side.

    Unlisted operations cost 1. Lines starting with ``#`` are comments.
    """
    sub, ins, dele = {}, {}, {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 4:
            raise ParseError("expected 4 tab-separated fields", lineno)
        op, src, dst, cost = parts
        try:
            value = int(cost)
        except ValueError:
            raise ParseError(f"cost {cost!r} is not an integer", lineno) from None
        if op == "sub":
            if len(src) != 1 or len(dst) != 1:
                raise ParseError("substitution needs two single letters", lineno)
            sub[src, dst] = value
        elif op == "ins":
            if src != "-" or len(dst) != 1:
                raise ParseError("insertion rows look like ins<TAB>-<TAB>x<TAB>cost", lineno)
            ins[dst] = value
        elif op == "del":
            if dst != "-" or len(src) != 1:
                raise ParseError("deletion rows look like del<TAB>x<TAB>-<TAB>cost", lineno)
            dele[src] = value
        else:
            raise ParseError(f"unknown operation {op!r}", lineno)
    try:
        return DistanceMetric.weighted(sub, ins, dele)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
