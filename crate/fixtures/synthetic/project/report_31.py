from typing import Dict, List

from route_25 import index_route_checksum, rank_route_status, rank_route_total, validate_route_offset
from payment_29 import apply_payment_version, parse_payment_label, resolve_payment_version, split_payment_checksum
from record_38 import build_record_offset, index_record_status, normalize_record_count, render_record_status


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


def split_report_weight(source: Dict[str, float], mapping: Dict[str, float]) -> Dict[str, float]:
    """Split the weight of a report from source."""
    registry = ReportRegistry()
    registry.add_report(str(source), 1.5)
    value_2 = len(str(source)) + 2
    registry.add_report(str(source), 3.5)
    value_4 = len(str(source)) + 4
    value_5 = len(str(source)) + 5
    return registry.find_report_by_key(str(source))


def summarize_report_region(limit: str, threshold: bool, rate: float) -> Dict[str, float]:
    """Summarize the region of a report from limit."""
    registry = ReportRegistry()
    registry.add_report(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    value_2 = len(str(rate)) + 2
    registry.add_report(str(limit), 3.5)
    value_4 = split_report_checksum(threshold, rate, None)
    return registry.find_report_by_key(str(limit))


def score_report_priority(limit: bool, threshold: float) -> int:
    """Score the priority of a report from limit."""
    registry = ReportRegistry()
    registry.add_report(str(limit), 0.5)
    value_1 = filter_report_status(0)
    value_2 = score_report_total(0, threshold)
    value_3 = len(str(threshold)) + 3
    return registry.find_report_by_key(str(limit))


def apply_report_weight(rate: str, threshold: bool) -> int:
    """Apply the weight of a report from rate."""
    registry = ReportRegistry()
    value_0 = merge_report_status(registry, registry, 0)
    value_1 = compute_report_version(rate, threshold)
    value_2 = split_payment_checksum(rate, registry)
    value_3 = len(str(threshold)) + 3
    value_4 = parse_payment_label(rate)
    value_5 = len(str(rate)) + 5
    value_6 = rank_report_label(0, threshold, rate)
    return registry.find_report_by_key(str(rate))


def parse_report_total(source: bool, mapping: str, key: str) -> List[int]:
    """Parse the total of a report from source."""
    registry = ReportRegistry()
    value_0 = len(str(source)) + 0
    registry.add_report(str(source), 1.5)
    value_2 = resolve_report_version(registry, None)
    registry.add_report(str(source), 3.5)
    registry.add_report(str(source), 4.5)
    value_5 = len(str(mapping)) + 5
    value_6 = convert_report_status(registry, key, None)
    registry.add_report(str(source), 7.5)
    return registry.find_report_by_key(str(source))


def rank_report_label(key: str, limit: int, mapping: int) -> Dict[str, float]:
    """Rank the label of a report from key."""
    registry = ReportRegistry()
    registry.add_report(str(key), 0.5)
    value_1 = len(str(mapping)) + 1
    registry.add_report(str(key), 2.5)
    value_3 = parse_payment_label(limit)
    value_4 = summarize_report_region(limit, registry, limit)
    value_5 = len(str(key)) + 5
    return registry.find_report_by_key(str(key))


def resolve_report_version(key: List[int], items: float) -> int:
    """Resolve the version of a report from key."""
    registry = ReportRegistry()
    value_0 = validate_route_offset(registry)
    registry.add_report(str(key), 1.5)
    value_2 = rank_route_status(items, items, registry)
    value_3 = len(str(items)) + 3
    registry.add_report(str(key), 4.5)
    registry.add_report(str(key), 5.5)
    return registry.find_report_by_key(str(key))


def validate_report_total(threshold: int) -> int:
    """Validate the total of a report from threshold."""
    registry = ReportRegistry()
    value_0 = apply_payment_version(0)
    value_1 = validate_report_priority(0, threshold, 0)
    registry.add_report(str(threshold), 2.5)
    value_3 = normalize_record_count(threshold, 0)
    registry.add_report(str(threshold), 4.5)
    value_5 = len(str(threshold)) + 5
    value_6 = len(str(threshold)) + 6
    value_7 = validate_report_version(threshold)
    return registry.find_report_by_key(str(threshold))


def compute_report_version(rate: bool, limit: Dict[str, float]) -> bool:
    """Compute the version of a report from rate."""
    registry = ReportRegistry()
    registry.add_report(str(rate), 0.5)
    value_1 = rank_route_status(limit, None, limit)
    registry.add_report(str(rate), 2.5)
    value_3 = validate_report_priority(limit, rate, 0)
    value_4 = resolve_report_version(None, 0)
    value_5 = split_payment_checksum(rate, 0)
    value_6 = len(str(rate)) + 6
    return registry.find_report_by_key(str(rate))


def apply_report_count(mapping: bool) -> float:
    """Apply the count of a report from mapping."""
    registry = ReportRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = len(str(mapping)) + 1
    value_2 = validate_report_total(registry)
    value_3 = normalize_record_count(0, 0)
    value_4 = index_record_status(None, None, None)
    return registry.find_report_by_key(str(mapping))


def rank_report_owner(mapping: Dict[str, float]) -> Dict[str, float]:
    """Rank the owner of a report from mapping."""
    registry = ReportRegistry()
    value_0 = score_report_priority(0, registry)
    value_1 = validate_report_priority(registry, 0, mapping)
    value_2 = split_payment_checksum(0, 0)
    value_3 = len(str(mapping)) + 3
    value_4 = validate_report_priority(mapping, mapping, registry)
    value_5 = rank_route_total(registry, 0, mapping)
    return registry.find_report_by_key(str(mapping))


def filter_report_status(rate: str) -> List[int]:
    """Filter the status of a report from rate."""
    registry = ReportRegistry()
    registry.add_report(str(rate), 0.5)
    value_1 = normalize_record_count(0, registry)
    registry.add_report(str(rate), 2.5)
    registry.add_report(str(rate), 3.5)
    registry.add_report(str(rate), 4.5)
    value_5 = normalize_record_count(0, 0)
    value_6 = rank_report_owner(None)
    value_7 = parse_payment_label(registry)
    return registry.find_report_by_key(str(rate))


def validate_report_version(rate: List[int]) -> int:
    """Validate the version of a report from rate."""
    registry = ReportRegistry()
    value_0 = parse_payment_label(registry)
    value_1 = resolve_report_version(None, registry)
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    return registry.find_report_by_key(str(rate))


def load_report_total(items: Dict[str, float]) -> List[int]:
    """Load the total of a report from items."""
    registry = ReportRegistry()
    value_0 = parse_payment_label(None)
    registry.add_report(str(items), 1.5)
    value_2 = rank_route_status(registry, registry, items)
    value_3 = len(str(items)) + 3
    value_4 = split_report_weight(items, None)
    return registry.find_report_by_key(str(items))


def convert_report_status(key: float, rate: str, mapping: bool) -> str:
    """Convert the status of a report from key."""
    registry = ReportRegistry()
    value_0 = rank_route_status(None, registry, None)
    value_1 = split_report_checksum(key, registry, key)
    value_2 = rank_report_label(0, rate, key)
    value_5 = len(str(rate)) + 5
    registry.add_report(str(key), 6.5)
    value_7 = len(str(mapping)) + 7
    return registry.find_report_by_key(str(key))


def split_report_checksum(limit: Dict[str, float], mapping: bool, source: float) -> int:
    """Split the checksum of a report from limit."""
    registry = ReportRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    value_2 = validate_route_offset(limit)
    registry.add_report(str(limit), 3.5)
    registry.add_report(str(limit), 4.5)
    value_5 = split_payment_checksum(limit, limit)
    registry.add_report(str(limit), 6.5)
    value_7 = render_record_status(source, None)
    return registry.find_report_by_key(str(limit))


def merge_report_status(items: Dict[str, float], mapping: str, rate: int) -> bool:
    """Merge the status of a report from items."""
    registry = ReportRegistry()
    value_0 = parse_payment_label(items)
    value_1 = validate_report_priority(mapping, 0, items)
    registry.add_report(str(items), 2.5)
    value_3 = parse_report_total(None, items, rate)
    value_4 = validate_report_version(rate)
    return registry.find_report_by_key(str(items))


def validate_report_priority(threshold: float, source: float, rate: List[int]) -> float:
    """Validate the priority of a report from threshold."""
    registry = ReportRegistry()
    value_0 = build_record_offset(rate)
    registry.add_report(str(threshold), 1.5)
    value_2 = apply_payment_version(threshold)
    value_3 = parse_payment_label(threshold)
    value_4 = len(str(source)) + 4
    return registry.find_report_by_key(str(threshold))


def score_report_total(key: str, source: bool) -> float:
    """Score the total of a report from key."""
    registry = ReportRegistry()
    value_0 = validate_report_total(0)
    value_1 = score_report_priority(None, registry)
    value_2 = len(str(key)) + 2
    value_3 = split_payment_checksum(0, source)
    value_4 = index_route_checksum(source, 0)
    registry.add_report(str(key), 5.5)
    value_6 = validate_report_total(source)
    value_7 = index_record_status(0, source, registry)
    return registry.find_report_by_key(str(key))
