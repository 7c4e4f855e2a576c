"""
Text formats

Parsers and printers for the values the command line reads and writes.
Tableaux are one row per line with space-separated entries; a set-valued
cell is its members comma-joined in descending order. A pair file holds P,
a blank line, then Q. Compositions and permutations are comma-separated;
a permutation of support at most 9 may also be a single digit string.
Every parser accepts exactly what the matching printer emits.
"""

import json
from typing import Dict, List, Sequence, Tuple

from lascoux.combi_core import Cell, WeakComposition
from lascoux.errors import LascouxError, UsageError
from lascoux.heckewords import CompatiblePair, Permutation, Word
from lascoux.insertion import TableauPair
from lascoux.polynomials import ExpansionResult
from lascoux.tableaux import RSVT, IncreasingTableau


def _integers(text: str, what: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(",")] if text.strip() else []
    except ValueError:
        raise UsageError(f"malformed {what}: {text!r}", details={"text": text}) from None


def parse_composition(text: str) -> WeakComposition:
    try:
        return WeakComposition(tuple(_integers(text, "composition")))
    except LascouxError as exc:
        raise UsageError(exc.message, details=exc.details) from exc


def format_composition(alpha: WeakComposition) -> str:
    return ",".join(str(v) for v in alpha.entries)


def parse_permutation(text: str) -> Permutation:
    """One-line notation: '3,2,1', '321', or '1' for the identity."""
    text = text.strip()
    if "," not in text and text.isdigit():
        values = [int(ch) for ch in text]
    else:
        values = _integers(text, "permutation")
    try:
        return Permutation(values)
    except LascouxError as exc:
        raise UsageError(exc.message, details=exc.details) from exc


def format_permutation(w: Permutation) -> str:
    if w.size == 0:
        return "1"
    return ",".join(str(v) for v in w.one_line())


def parse_cell(text: str) -> Cell:
    values = _integers(text, "cell")
    if len(values) != 2:
        raise UsageError("a cell is 'row,column'", details={"text": text})
    return values[0], values[1]


# ========== Tableaux ==========


def _blocks(text: str) -> List[List[str]]:
    blocks: List[List[str]] = [[]]
    for line in text.splitlines():
        if line.strip():
            blocks[-1].append(line.strip())
        elif blocks[-1]:
            blocks.append([])
    return [block for block in blocks if block]


def _increasing_from_lines(lines: Sequence[str]) -> IncreasingTableau:
    try:
        return IncreasingTableau([[int(tok) for tok in line.split()] for line in lines])
    except ValueError:
        raise UsageError("tableau entries must be integers", details={"lines": list(lines)}) from None
    except LascouxError as exc:
        raise UsageError(exc.message, details=exc.details) from exc


def _rsvt_from_lines(lines: Sequence[str]) -> RSVT:
    try:
        return RSVT([[tuple(int(v) for v in tok.split(",")) for tok in line.split()] for line in lines])
    except ValueError:
        raise UsageError("set-valued cells must be comma-joined integers", details={"lines": list(lines)}) from None
    except LascouxError as exc:
        raise UsageError(exc.message, details=exc.details) from exc


def parse_tableau(text: str) -> IncreasingTableau:
    blocks = _blocks(text)
    if len(blocks) > 1:
        raise UsageError("expected a single tableau", details={"blocks": len(blocks)})
    return _increasing_from_lines(blocks[0] if blocks else [])


def format_tableau(p: IncreasingTableau) -> str:
    return "\n".join(" ".join(str(v) for v in row) for row in p.rows)


def format_rsvt(q: RSVT) -> str:
    return "\n".join(" ".join(",".join(str(v) for v in cell) for cell in row) for row in q.rows)


def parse_pair(text: str) -> TableauPair:
    blocks = _blocks(text)
    if len(blocks) != 2:
        raise UsageError("a pair file holds P, a blank line, then Q", details={"blocks": len(blocks)})
    p, q = _increasing_from_lines(blocks[0]), _rsvt_from_lines(blocks[1])
    try:
        return TableauPair(p, q)
    except LascouxError as exc:
        raise UsageError(exc.message, details=exc.details) from exc


def format_pair(pair: TableauPair) -> str:
    return format_tableau(pair.p) + "\n\n" + format_rsvt(pair.q)


def _word(text: str) -> Word:
    text = text.strip()
    if "," not in text and text.isdigit():
        return Word(tuple(int(ch) for ch in text))
    return Word(tuple(_integers(text, "word")))


def parse_compatible_pair(text: str) -> CompatiblePair:
    """Parse '(a, i)' as printed by str(CompatiblePair)."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise UsageError("a compatible pair reads '(a, i)'", details={"text": text})
    inner = body[1:-1]
    if ", " not in inner:
        raise UsageError("a compatible pair reads '(a, i)'", details={"text": text})
    a_text, i_text = inner.split(", ", 1)
    try:
        return CompatiblePair(_word(a_text), _word(i_text))
    except LascouxError as exc:
        raise UsageError(exc.message, details=exc.details) from exc


# ========== Expansions ==========


def format_expansion(result: ExpansionResult) -> str:
    return "\n".join(result.lines()) if len(result) else "0"


def expansion_to_json(result: ExpansionResult) -> str:
    return json.dumps(result.to_json_dict(), sort_keys=True)


def expansion_from_json(text: str) -> ExpansionResult:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError("malformed expansion JSON", details={"error": str(exc)}) from exc
    if not isinstance(data, dict):
        raise UsageError("expansion JSON must be an object")
    return ExpansionResult.from_json_dict(data)


def parse_expansion_lines(text: str) -> ExpansionResult:
    """Inverse of format_expansion."""
    counts: Dict[Tuple[WeakComposition, int], int] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line == "0":
            continue
        try:
            label, coeff = line.rsplit(" : ", 1)
            power, _, gamma_text = label.rpartition("L_")
            power = power.strip()
            k = 0 if not power else (1 if power == "b" else int(power[2:]))
            gamma = WeakComposition(tuple(_integers(gamma_text.strip("()"), "composition")))
            counts[(gamma, k)] = counts.get((gamma, k), 0) + int(coeff)
        except (ValueError, LascouxError):
            raise UsageError(f"malformed expansion line: {line!r}") from None
    return ExpansionResult.from_counts(counts)


def format_trace(trace: Sequence[object]) -> str:
    return ", ".join(getattr(case, "value", str(case)) for case in trace)
