import json
import os
from typing import Any, Dict, Optional

from ed_config import get_config
from ed_errors import DimensionMismatch, ElemDivError
from ed_logger import get_logger

TOOL_NAME = "elemdiv"
VERSION = "1.0.0"


def tool_info() -> Dict[str, str]:
    return {"name": TOOL_NAME, "version": VERSION}


def dumps_canonical(data: Any, indent: Optional[int] = None) -> str:
    """Sorted keys, fixed indent, trailing newline: identical inputs give identical bytes."""
    if indent is None:
        indent = get_config().report_indent()
    return json.dumps(data, indent=indent, sort_keys=True, ensure_ascii=False) + "\n"


def read_json(filename: str) -> Any:
    try:
        with open(filename, 'r', encoding='utf-8') as f:
            return json.load(f)
    except FileNotFoundError:
        get_logger().error(f"Error: file '{filename}' not found.")
        raise
    except json.JSONDecodeError as e:
        get_logger().error(f"Error: '{filename}' is not valid JSON: {e}")
        raise


def write_json(filename: str, data: Any) -> str:
    directory = os.path.dirname(filename)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(filename, 'w', encoding='utf-8', newline='\n') as f:
        f.write(dumps_canonical(data))
    get_logger().debug(f"wrote {filename}")
    return filename


def truncate_filepath(filepath: str, width: int = 60) -> str:
    if len(filepath) <= width:
        return filepath
    chunks = []
    for i in range(0, len(filepath), width):
        chunk = filepath[i:i + width]
        if i + width < len(filepath):
            chunk += "-"
        chunks.append(chunk)
    return "\n".join(chunks)


# --- matrices as JSON ---

def matrix_to_json(m) -> Dict[str, Any]:
    from ring_instances import ring_spec_of
    return {
        "ring": ring_spec_of(m.ring).to_json(),
        "rows": m.rows,
        "cols": m.cols,
        "entries": m.to_strings(),
    }


def matrix_from_json(data: Dict[str, Any], ring=None):
    """Matrix file payload -> Matrix. The ring is built from data['ring'] unless given."""
    from report_schema import matrix_file_schema, validate_json_output
    from ring_instances import RingSpec, make_ring
    from ring_matrix import Matrix

    if not validate_json_output(data, matrix_file_schema()):
        raise ElemDivError("matrix file does not match the matrix file schema")
    if ring is None:
        ring = make_ring(RingSpec.from_json(data["ring"]))
    entries = data["entries"]
    if len(entries) != data["rows"] or any(len(row) != data["cols"] for row in entries):
        raise DimensionMismatch(f"entries do not form a {data['rows']}x{data['cols']} grid")
    return Matrix.from_strings(ring, entries)