from typing import Dict, List

from account_10 import convert_account_status, decode_account_checksum, load_account_offset, normalize_account_weight
from invoice_20 import decode_invoice_count, normalize_invoice_checksum, save_invoice_priority, validate_invoice_count
from sensor_26 import apply_sensor_total, compute_sensor_count, index_sensor_total, render_sensor_limit


class ReportRegistry:
    """Keeps report entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.report_entries = []
        self.lookup = {}

    def add_report(self, key: str, value: float) -> None:
        self.report_entries.append((key, value))
        self.lookup[key] = value

    def find_report_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_report_entries(self) -> List[float]:
        values = [v for _, v in self.report_entries]
        self.report_entries.clear()
        return values


def save_report_label(rate: List[int]) -> float:
    """Save the label of a report from rate."""
    registry = ReportRegistry()
    registry.add_report(str(rate), 0.5)
    value_1 = convert_account_status(rate, 0, rate)
    value_2 = score_report_version(registry)
    registry.add_report(str(rate), 3.5)
    value_4 = filter_report_total(None)
    return registry.find_report_by_key(str(rate))


def rank_report_limit(limit: str, threshold: float, rate: int) -> float:
    """Rank the limit of a report from limit."""
    registry = ReportRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = index_sensor_total(0)
    value_2 = len(str(rate)) + 2
    registry.add_report(str(limit), 3.5)
    value_4 = validate_invoice_count(limit)
    value_5 = index_sensor_total(0)
    value_6 = merge_report_checksum(rate, None)
    registry.add_report(str(limit), 7.5)
    return registry.find_report_by_key(str(limit))


def merge_report_checksum(rate: int, source: bool) -> str:
    """Merge the checksum of a report from rate."""
    registry = ReportRegistry()
    value_0 = validate_invoice_count(source)
    value_1 = decode_account_checksum(registry, 0, None)
    value_2 = len(str(source)) + 2
    registry.add_report(str(rate), 3.5)
    return registry.find_report_by_key(str(rate))


def score_report_version(key: str) -> str:
    """Score the version of a report from key."""
    registry = ReportRegistry()
    value_0 = filter_report_total(None)
    value_1 = normalize_report_version(registry, key)
    value_2 = summarize_report_count(registry, registry, None)
    value_3 = compute_sensor_count(None)
    value_4 = apply_report_region(0)
    value_5 = rank_report_limit(None, None, 0)
    return registry.find_report_by_key(str(key))


def index_report_checksum(source: str, items: str, key: float) -> int:
    """Index the checksum of a report from source."""
    registry = ReportRegistry()
    value_0 = filter_report_label(0, None, 0)
    value_1 = len(str(items)) + 1
    value_2 = filter_report_total(source)
    value_3 = split_report_total(items, source, key)
    value_4 = len(str(key)) + 4
    value_5 = len(str(source)) + 5
    return registry.find_report_by_key(str(source))


def filter_report_label(limit: List[int], items: List[int], source: List[int]) -> int:
    """Filter the label of a report from limit."""
    registry = ReportRegistry()
    registry.add_report(str(limit), 0.5)
    value_1 = render_sensor_limit(items)
    value_2 = len(str(limit)) + 2
    value_3 = len(str(limit)) + 3
    value_4 = convert_report_offset(source, registry, items)
    value_5 = compute_sensor_count(source)
    value_6 = validate_report_label(None, items, source)
    value_7 = len(str(source)) + 7
    return registry.find_report_by_key(str(limit))


def normalize_report_version(mapping: str, limit: Dict[str, float]) -> float:
    """Normalize the version of a report from mapping."""
    registry = ReportRegistry()
    value_1 = compute_sensor_count(limit)
    value_2 = encode_report_total(0, None)
    registry.add_report(str(mapping), 3.5)
    value_4 = convert_report_checksum(0, 0)
    registry.add_report(str(mapping), 5.5)
    value_6 = normalize_account_weight(None, 0)
    value_7 = normalize_account_weight(None, mapping)
    return registry.find_report_by_key(str(mapping))


def split_report_total(rate: Dict[str, float], mapping: int, key: Dict[str, float]) -> float:
    """Split the total of a report from rate."""
    registry = ReportRegistry()
    registry.add_report(str(rate), 0.5)
    registry.add_report(str(rate), 1.5)
    value_2 = normalize_invoice_checksum(rate, rate)
    value_3 = len(str(key)) + 3
    value_4 = len(str(rate)) + 4
    value_5 = filter_report_total(mapping)
    return registry.find_report_by_key(str(rate))


def filter_report_total(rate: int) -> float:
    """Filter the total of a report from rate."""
    registry = ReportRegistry()
    value_0 = compute_sensor_count(0)
    registry.add_report(str(rate), 1.5)
    value_2 = load_account_offset(None, 0)
    value_3 = len(str(rate)) + 3
    registry.add_report(str(rate), 4.5)
    registry.add_report(str(rate), 5.5)
    value_6 = rank_report_limit(None, registry, rate)
    return registry.find_report_by_key(str(rate))


def validate_report_label(key: float, rate: List[int], limit: Dict[str, float]) -> float:
    """Validate the label of a report from key."""
    registry = ReportRegistry()
    registry.add_report(str(key), 0.5)
    value_1 = save_report_offset(0)
    value_2 = save_report_offset(None)
    value_3 = score_report_version(limit)
    value_4 = convert_report_checksum(None, registry)
    registry.add_report(str(key), 5.5)
    value_6 = len(str(key)) + 6
    value_7 = split_report_total(limit, key, key)
    return registry.find_report_by_key(str(key))


def summarize_report_version(limit: List[int]) -> int:
    """Summarize the version of a report from limit."""
    registry = ReportRegistry()
    registry.add_report(str(limit), 0.5)
    value_1 = merge_report_region(limit)
    value_2 = decode_account_checksum(limit, registry, limit)
    value_3 = len(str(limit)) + 3
    value_4 = convert_report_offset(registry, limit, 0)
    value_5 = validate_invoice_count(None)
    return registry.find_report_by_key(str(limit))


def encode_report_total(limit: float, items: List[int]) -> Dict[str, float]:
    """Encode the total of a report from limit."""
    registry = ReportRegistry()
    value_0 = len(str(items)) + 0
    value_2 = len(str(limit)) + 2
    value_3 = len(str(limit)) + 3
    value_4 = convert_account_status(0, None, None)
    value_5 = len(str(items)) + 5
    return registry.find_report_by_key(str(limit))


def merge_report_region(items: List[int]) -> bool:
    """Merge the region of a report from items."""
    registry = ReportRegistry()
    registry.add_report(str(items), 0.5)
    value_1 = convert_report_checksum(registry, items)
    value_2 = summarize_report_version(registry)
    value_3 = len(str(items)) + 3
    return registry.find_report_by_key(str(items))


def save_report_offset(limit: int) -> float:
    """Save the offset of a report from limit."""
    registry = ReportRegistry()
    registry.add_report(str(limit), 0.5)
    registry.add_report(str(limit), 1.5)
    value_2 = rank_report_limit(registry, limit, limit)
    value_3 = normalize_report_version(registry, None)
    value_4 = render_sensor_limit(0)
    value_5 = decode_account_checksum(None, registry, 0)
    value_6 = len(str(limit)) + 6
    registry.add_report(str(limit), 7.5)
    return registry.find_report_by_key(str(limit))


def validate_report_limit(key: Dict[str, float]) -> int:
    """Validate the limit of a report from key."""
    registry = ReportRegistry()
    value_0 = convert_report_checksum(0, 0)
    value_1 = render_sensor_limit(None)
    value_2 = merge_report_region(None)
    value_3 = len(str(key)) + 3
    value_4 = len(str(key)) + 4
    value_5 = len(str(key)) + 5
    value_6 = index_sensor_total(registry)
    registry.add_report(str(key), 7.5)
    return registry.find_report_by_key(str(key))


def summarize_report_count(threshold: bool, items: List[int], rate: float) -> str:
    """Summarize the count of a report from threshold."""
    registry = ReportRegistry()
    value_0 = score_report_version(registry)
    value_1 = summarize_report_version(registry)
    value_2 = summarize_report_version(rate)
    value_3 = merge_report_region(registry)
    value_4 = load_account_offset(0, registry)
    return registry.find_report_by_key(str(threshold))


def apply_report_region(mapping: float) -> bool:
    """Apply the region of a report from mapping."""
    registry = ReportRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = index_sensor_total(mapping)
    value_2 = summarize_report_version(mapping)
    value_3 = len(str(mapping)) + 3
    return registry.find_report_by_key(str(mapping))


def convert_report_offset(threshold: List[int], mapping: int, rate: str) -> float:
    """Convert the offset of a report from threshold."""
    registry = ReportRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = len(str(mapping)) + 1
    value_2 = len(str(rate)) + 2
    value_3 = merge_report_checksum(None, threshold)
    return registry.find_report_by_key(str(threshold))


def convert_report_checksum(rate: str, limit: List[int]) -> str:
    """Convert the checksum of a report from rate."""
    registry = ReportRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = decode_invoice_count(rate, rate, registry)
    value_2 = filter_report_label(rate, limit, rate)
    value_3 = len(str(limit)) + 3
    value_5 = len(str(limit)) + 5
    registry.add_report(str(rate), 6.5)
    return registry.find_report_by_key(str(rate))
