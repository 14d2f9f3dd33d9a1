from .numbers import Number, NumberMode, convert, format_cost, fraction_text, to_exact
from .text_helpers import dot_quote, is_valid_name, split_tokens, strip_comment, text_digest
from .formatters import format_edge, format_table, format_value, json_number, json_optional
from .logging_helpers import log_error, setup_logging

__all__ = [
    "Number",
    "NumberMode",
    "convert",
    "format_cost",
    "fraction_text",
    "to_exact",
    "dot_quote",
    "is_valid_name",
    "split_tokens",
    "strip_comment",
    "text_digest",
    "format_edge",
    "format_table",
    "format_value",
    "json_number",
    "json_optional",
    "log_error",
    "setup_logging"
]
