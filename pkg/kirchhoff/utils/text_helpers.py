"""
Text processing utilities.
"""
import hashlib
from typing import List


def strip_comment(line: str) -> str:
    """Remove a '#' comment and surrounding whitespace"""
    return line.split("#", 1)[0].strip()


def split_tokens(line: str) -> List[str]:
    """Split a directive line into whitespace-separated tokens"""
    return line.split()


def is_valid_name(name: str) -> bool:
    """A node name is a non-empty token without whitespace or '#'"""
    return bool(name) and not any(ch.isspace() for ch in name) and "#" not in name


def dot_quote(text: str) -> str:
    """Quote a string as a DOT ID"""
    escaped = str(text).replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def text_digest(text: str) -> str:
    """SHA-256 hex digest of UTF-8 text"""
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
