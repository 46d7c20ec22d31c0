"""Instance and report serialization."""

from gspcover.utils.serialization.json_codec import (
    KIND_GSP,
    KIND_UFP,
    SCHEMA_VERSION,
    decode_function,
    decode_rational,
    dumps_canonical,
    dumps_instance,
    encode_function,
    encode_rational,
    instance_from_dict,
    instance_to_dict,
    load_instance,
    loads_instance,
    save_instance,
)
from gspcover.utils.serialization.csv_report import (
    REPORT_COLUMNS,
    ReportRow,
    format_report,
    read_report,
    write_report,
)

__all__ = [
    'KIND_GSP',
    'KIND_UFP',
    'SCHEMA_VERSION',
    'decode_function',
    'decode_rational',
    'dumps_canonical',
    'dumps_instance',
    'encode_function',
    'encode_rational',
    'instance_from_dict',
    'instance_to_dict',
    'load_instance',
    'loads_instance',
    'save_instance',
    'REPORT_COLUMNS',
    'ReportRow',
    'format_report',
    'read_report',
    'write_report',
]
