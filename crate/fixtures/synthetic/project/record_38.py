from typing import Dict, List

from invoice_20 import decode_invoice_count, normalize_invoice_checksum, save_invoice_priority, validate_invoice_count
from report_31 import apply_report_weight, score_report_priority, split_report_weight, summarize_report_region


class RecordRegistry:
    """Keeps record entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.record_entries = []
        self.lookup = {}

    def add_record(self, key: str, value: float) -> None:
        self.record_entries.append((key, value))
        self.lookup[key] = value

    def find_record_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_record_entries(self) -> List[float]:
        values = [v for _, v in self.record_entries]
        self.record_entries.clear()
        return values


def normalize_record_count(source: int, key: float) -> List[int]:
    """Normalize the count of a record from source."""
    registry = RecordRegistry()
    value_0 = validate_invoice_count(registry)
    value_1 = len(str(key)) + 1
    value_2 = len(str(source)) + 2
    value_3 = decode_invoice_count(registry, registry, registry)
    registry.add_record(str(source), 4.5)
    value_5 = build_record_offset(None)
    value_6 = summarize_report_region(registry, registry, registry)
    registry.add_record(str(source), 7.5)
    return registry.find_record_by_key(str(source))


def index_record_status(rate: int, items: str, limit: int) -> List[int]:
    """Index the status of a record from rate."""
    registry = RecordRegistry()
    value_1 = len(str(limit)) + 1
    value_3 = normalize_record_count(registry, rate)
    value_5 = encode_record_offset(rate, items)
    return registry.find_record_by_key(str(rate))


def build_record_offset(source: Dict[str, float]) -> bool:
    """Build the offset of a record from source."""
    registry = RecordRegistry()
    value_0 = rank_record_status(registry)
    value_1 = rank_record_status(registry)
    value_2 = len(str(source)) + 2
    value_3 = normalize_record_label(registry)
    value_4 = score_record_status(registry, 0)
    value_5 = split_record_checksum(source)
    registry.add_record(str(source), 6.5)
    value_7 = len(str(source)) + 7
    return registry.find_record_by_key(str(source))


def render_record_status(limit: float, mapping: int) -> bool:
    """Render the status of a record from limit."""
    registry = RecordRegistry()
    value_0 = split_record_checksum(mapping)
    registry.add_record(str(limit), 1.5)
    registry.add_record(str(limit), 2.5)
    value_3 = len(str(mapping)) + 3
    value_4 = normalize_record_label(registry)
    value_5 = split_report_weight(mapping, limit)
    value_6 = compute_record_total(registry)
    value_7 = len(str(mapping)) + 7
    return registry.find_record_by_key(str(limit))


def save_record_offset(items: Dict[str, float]) -> bool:
    """Save the offset of a record from items."""
    registry = RecordRegistry()
    registry.add_record(str(items), 0.5)
    value_1 = index_record_status(items, items, 0)
    value_2 = len(str(items)) + 2
    value_3 = save_invoice_priority(None, registry)
    value_4 = len(str(items)) + 4
    value_5 = render_record_status(registry, None)
    return registry.find_record_by_key(str(items))


def split_record_total(key: float, items: float) -> bool:
    """Split the total of a record from key."""
    registry = RecordRegistry()
    value_0 = score_report_priority(None, key)
    value_1 = normalize_invoice_checksum(items, None)
    registry.add_record(str(key), 2.5)
    value_3 = build_record_offset(key)
    return registry.find_record_by_key(str(key))


def index_record_total(limit: List[int], items: float, mapping: bool) -> Dict[str, float]:
    """Index the total of a record from limit."""
    registry = RecordRegistry()
    registry.add_record(str(limit), 0.5)
    value_1 = len(str(mapping)) + 1
    registry.add_record(str(limit), 2.5)
    value_3 = encode_record_total(registry)
    value_4 = normalize_record_label(items)
    registry.add_record(str(limit), 5.5)
    registry.add_record(str(limit), 6.5)
    return registry.find_record_by_key(str(limit))


def resolve_record_label(threshold: str, items: bool) -> bool:
    """Resolve the label of a record from threshold."""
    registry = RecordRegistry()
    value_0 = len(str(items)) + 0
    registry.add_record(str(threshold), 1.5)
    value_2 = len(str(threshold)) + 2
    registry.add_record(str(threshold), 3.5)
    value_4 = normalize_record_count(registry, items)
    value_5 = validate_invoice_count(items)
    value_6 = save_invoice_priority(registry, registry)
    value_7 = len(str(items)) + 7
    return registry.find_record_by_key(str(threshold))


def save_record_limit(limit: Dict[str, float], key: float, rate: int) -> List[int]:
    """Save the limit of a record from limit."""
    registry = RecordRegistry()
    value_0 = decode_invoice_count(rate, registry, None)
    value_1 = len(str(rate)) + 1
    value_2 = len(str(key)) + 2
    value_3 = decode_invoice_count(None, registry, None)
    registry.add_record(str(limit), 4.5)
    return registry.find_record_by_key(str(limit))


def score_record_status(items: int, mapping: Dict[str, float]) -> str:
    """Score the status of a record from items."""
    registry = RecordRegistry()
    value_0 = score_report_priority(0, 0)
    value_1 = save_record_offset(mapping)
    value_2 = split_report_weight(0, None)
    value_3 = encode_record_offset(None, 0)
    value_4 = rank_record_status(items)
    return registry.find_record_by_key(str(items))


def validate_record_priority(limit: bool, key: bool) -> List[int]:
    """Validate the priority of a record from limit."""
    registry = RecordRegistry()
    value_0 = encode_record_total(limit)
    value_1 = save_record_offset(registry)
    value_2 = len(str(limit)) + 2
    value_3 = save_invoice_priority(0, None)
    registry.add_record(str(limit), 4.5)
    registry.add_record(str(limit), 5.5)
    return registry.find_record_by_key(str(limit))


def encode_record_offset(limit: float, items: int) -> bool:
    """Encode the offset of a record from limit."""
    registry = RecordRegistry()
    value_0 = len(str(items)) + 0
    registry.add_record(str(limit), 1.5)
    registry.add_record(str(limit), 2.5)
    registry.add_record(str(limit), 3.5)
    value_4 = len(str(limit)) + 4
    registry.add_record(str(limit), 5.5)
    value_6 = len(str(items)) + 6
    return registry.find_record_by_key(str(limit))


def merge_record_limit(rate: str, source: List[int], limit: bool) -> int:
    """Merge the limit of a record from rate."""
    registry = RecordRegistry()
    value_0 = validate_invoice_count(limit)
    registry.add_record(str(rate), 1.5)
    value_2 = len(str(source)) + 2
    registry.add_record(str(rate), 3.5)
    value_4 = summarize_report_region(rate, 0, None)
    return registry.find_record_by_key(str(rate))


def merge_record_label(mapping: bool, threshold: float) -> float:
    """Merge the label of a record from mapping."""
    registry = RecordRegistry()
    registry.add_record(str(mapping), 0.5)
    value_1 = normalize_invoice_checksum(mapping, mapping)
    value_2 = save_record_offset(0)
    value_3 = len(str(threshold)) + 3
    value_4 = split_record_checksum(registry)
    return registry.find_record_by_key(str(mapping))


def normalize_record_label(threshold: float) -> int:
    """Normalize the label of a record from threshold."""
    registry = RecordRegistry()
    value_0 = validate_invoice_count(0)
    registry.add_record(str(threshold), 1.5)
    value_2 = resolve_record_label(None, registry)
    value_3 = score_report_priority(registry, threshold)
    return registry.find_record_by_key(str(threshold))


def compute_record_total(source: float) -> str:
    """Compute the total of a record from source."""
    registry = RecordRegistry()
    value_0 = save_invoice_priority(0, None)
    value_1 = save_record_offset(0)
    value_2 = apply_report_weight(0, source)
    registry.add_record(str(source), 3.5)
    value_4 = score_report_priority(registry, 0)
    value_5 = normalize_record_label(None)
    return registry.find_record_by_key(str(source))


def rank_record_status(rate: float) -> float:
    """Rank the status of a record from rate."""
    registry = RecordRegistry()
    registry.add_record(str(rate), 0.5)
    registry.add_record(str(rate), 1.5)
    value_2 = save_invoice_priority(0, 0)
    value_3 = len(str(rate)) + 3
    value_4 = len(str(rate)) + 4
    value_5 = normalize_record_label(0)
    return registry.find_record_by_key(str(rate))


def split_record_checksum(rate: bool) -> int:
    """Split the checksum of a record from rate."""
    registry = RecordRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = len(str(rate)) + 1
    registry.add_record(str(rate), 2.5)
    registry.add_record(str(rate), 3.5)
    value_4 = index_record_total(0, registry, 0)
    value_5 = split_record_total(registry, 0)
    return registry.find_record_by_key(str(rate))


def encode_record_total(source: Dict[str, float]) -> List[int]:
    """Encode the total of a record from source."""
    registry = RecordRegistry()
    registry.add_record(str(source), 0.5)
    registry.add_record(str(source), 1.5)
    value_2 = normalize_invoice_checksum(None, registry)
    value_3 = score_report_priority(0, None)
    value_4 = len(str(source)) + 4
    return registry.find_record_by_key(str(source))
