"""
报告输出 — JSON（排序键、稳定）或缩进文本

多行字符串（R-tree 大纲、游戏文件）在文本模式下原样输出成块。
"""

import json
from typing import Any, List


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=False)


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, (list, tuple)) and all(isinstance(v, str) for v in value):
        return "[" + ",".join(value) + "]"
    return str(value)


def _is_flat(value: Any) -> bool:
    if isinstance(value, (list, tuple)):
        return all(isinstance(v, str) for v in value) or not value
    return not isinstance(value, dict)


def _lines(value: Any, indent: int) -> List[str]:
    pad = "  " * indent
    out: List[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, str) and "\n" in item:
                out.append(f"{pad}{key}:")
                out.extend(pad + "  " + line for line in item.rstrip("\n").split("\n"))
            elif _is_flat(item):
                out.append(f"{pad}{key}: {_scalar(item)}")
            else:
                out.append(f"{pad}{key}:")
                out.extend(_lines(item, indent + 1))
    elif isinstance(value, (list, tuple)):
        for item in value:
            if _is_flat(item):
                out.append(f"{pad}- {_scalar(item)}")
            else:
                out.append(f"{pad}-")
                out.extend(_lines(item, indent + 1))
    else:
        out.append(pad + _scalar(value))
    return out


def render_text(document: dict) -> str:
    lines = [f"command: {document.get('command', '')}"]
    if "input" in document:
        lines.extend(_lines({"input": document["input"]}, 0))
    if document.get("error"):
        err = document["error"]
        where = f" (line {err['line']}, column {err['column']})" if err.get("line") else ""
        lines.append(f"error: {err['type']}: {err['message']}{where}")
    if document.get("result") is not None:
        lines.extend(_lines(document["result"], 0))
    if "timing" in document:
        lines.append(f"timing: {document['timing']}s")
    return "\n".join(lines)


def render(document: dict, output_format: str) -> str:
    return render_json(document) if output_format == "json" else render_text(document)
