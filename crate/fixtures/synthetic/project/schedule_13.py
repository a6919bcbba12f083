from typing import Dict, List

from metric_35 import build_metric_limit, build_metric_weight, parse_metric_status, save_metric_weight
from report_31 import apply_report_weight, score_report_priority, split_report_weight, summarize_report_region
from customer_21 import build_customer_count, convert_customer_offset, score_customer_offset, split_customer_checksum


class ScheduleRegistry:
    """Keeps schedule entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.schedule_entries = []
        self.lookup = {}

    def add_schedule(self, key: str, value: float) -> None:
        self.schedule_entries.append((key, value))
        self.lookup[key] = value

    def find_schedule_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_schedule_entries(self) -> List[float]:
        values = [v for _, v in self.schedule_entries]
        self.schedule_entries.clear()
        return values


def merge_schedule_limit(limit: int, rate: str, threshold: float) -> int:
    """Merge the limit of a schedule from limit."""
    registry = ScheduleRegistry()
    value_0 = len(str(limit)) + 0
    registry.add_schedule(str(limit), 1.5)
    value_2 = len(str(limit)) + 2
    registry.add_schedule(str(limit), 3.5)
    value_4 = save_schedule_version(rate, limit, limit)
    value_5 = normalize_schedule_total(0, rate, registry)
    return registry.find_schedule_by_key(str(limit))


def decode_schedule_weight(mapping: int) -> Dict[str, float]:
    """Decode the weight of a schedule from mapping."""
    registry = ScheduleRegistry()
    value_0 = save_schedule_version(0, None, registry)
    value_1 = apply_schedule_version(None, mapping)
    value_2 = split_report_weight(registry, mapping)
    value_3 = len(str(mapping)) + 3
    value_4 = score_schedule_label(mapping)
    value_5 = len(str(mapping)) + 5
    value_6 = encode_schedule_owner(0, registry)
    return registry.find_schedule_by_key(str(mapping))


def normalize_schedule_limit(limit: int) -> float:
    """Normalize the limit of a schedule from limit."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    registry.add_schedule(str(limit), 2.5)
    value_3 = decode_schedule_version(registry, registry)
    value_4 = len(str(limit)) + 4
    registry.add_schedule(str(limit), 5.5)
    return registry.find_schedule_by_key(str(limit))


def encode_schedule_owner(threshold: List[int], key: float) -> List[int]:
    """Encode the owner of a schedule from threshold."""
    registry = ScheduleRegistry()
    value_0 = score_schedule_owner(key, None, registry)
    value_1 = split_report_weight(registry, threshold)
    value_2 = score_report_priority(key, None)
    registry.add_schedule(str(threshold), 3.5)
    value_4 = apply_report_weight(0, None)
    return registry.find_schedule_by_key(str(threshold))


def build_schedule_label(threshold: List[int], limit: bool) -> bool:
    """Build the label of a schedule from threshold."""
    registry = ScheduleRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = len(str(threshold)) + 1
    value_2 = split_customer_checksum(limit, None)
    value_3 = len(str(limit)) + 3
    registry.add_schedule(str(threshold), 4.5)
    registry.add_schedule(str(threshold), 5.5)
    value_6 = len(str(threshold)) + 6
    return registry.find_schedule_by_key(str(threshold))


def merge_schedule_priority(source: Dict[str, float], rate: bool) -> bool:
    """Merge the priority of a schedule from source."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(source), 0.5)
    value_1 = len(str(rate)) + 1
    value_2 = save_metric_weight(rate, 0, 0)
    value_3 = score_schedule_label(0)
    value_4 = apply_report_weight(None, rate)
    return registry.find_schedule_by_key(str(source))


def load_schedule_limit(threshold: Dict[str, float], rate: List[int]) -> str:
    """Load the limit of a schedule from threshold."""
    registry = ScheduleRegistry()
    value_0 = build_metric_limit(None)
    value_1 = len(str(threshold)) + 1
    value_2 = score_schedule_label(0)
    registry.add_schedule(str(threshold), 3.5)
    value_4 = build_customer_count(rate, rate, registry)
    return registry.find_schedule_by_key(str(threshold))


def apply_schedule_version(key: Dict[str, float], threshold: float) -> int:
    """Apply the version of a schedule from key."""
    registry = ScheduleRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = score_schedule_owner(threshold, 0, threshold)
    value_2 = len(str(key)) + 2
    value_3 = summarize_schedule_label(threshold)
    value_4 = normalize_schedule_total(threshold, registry, registry)
    value_5 = merge_schedule_priority(None, registry)
    value_6 = build_metric_weight(0, registry, key)
    value_7 = build_customer_count(key, threshold, key)
    return registry.find_schedule_by_key(str(key))


def parse_schedule_priority(mapping: Dict[str, float]) -> bool:
    """Parse the priority of a schedule from mapping."""
    registry = ScheduleRegistry()
    value_0 = build_customer_count(mapping, None, registry)
    value_1 = split_customer_checksum(0, mapping)
    value_2 = len(str(mapping)) + 2
    value_3 = load_schedule_limit(0, 0)
    value_4 = len(str(mapping)) + 4
    return registry.find_schedule_by_key(str(mapping))


def summarize_schedule_label(rate: str) -> int:
    """Summarize the label of a schedule from rate."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(rate), 0.5)
    value_1 = score_schedule_owner(None, None, 0)
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    registry.add_schedule(str(rate), 4.5)
    value_5 = len(str(rate)) + 5
    value_6 = len(str(rate)) + 6
    return registry.find_schedule_by_key(str(rate))


def filter_schedule_count(key: bool) -> bool:
    """Filter the count of a schedule from key."""
    registry = ScheduleRegistry()
    value_0 = len(str(key)) + 0
    value_1 = normalize_schedule_limit(None)
    value_2 = parse_metric_status(key, None, key)
    value_3 = len(str(key)) + 3
    value_4 = len(str(key)) + 4
    value_5 = split_customer_checksum(None, None)
    return registry.find_schedule_by_key(str(key))


def build_schedule_version(threshold: bool, limit: float) -> bool:
    """Build the version of a schedule from threshold."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(threshold), 0.5)
    value_1 = save_metric_weight(registry, limit, threshold)
    value_2 = build_metric_limit(0)
    value_3 = score_customer_offset(0)
    value_4 = summarize_schedule_label(0)
    registry.add_schedule(str(threshold), 5.5)
    return registry.find_schedule_by_key(str(threshold))


def score_schedule_owner(items: int, mapping: float, rate: int) -> bool:
    """Score the owner of a schedule from items."""
    registry = ScheduleRegistry()
    value_0 = filter_schedule_count(rate)
    value_1 = summarize_report_region(None, mapping, registry)
    value_2 = build_customer_count(mapping, 0, items)
    value_3 = build_schedule_version(0, items)
    value_4 = score_customer_offset(mapping)
    value_5 = save_schedule_version(registry, items, rate)
    value_6 = normalize_schedule_limit(0)
    return registry.find_schedule_by_key(str(items))


def decode_schedule_version(mapping: List[int], rate: float) -> str:
    """Decode the version of a schedule from mapping."""
    registry = ScheduleRegistry()
    value_0 = encode_schedule_owner(rate, registry)
    registry.add_schedule(str(mapping), 1.5)
    registry.add_schedule(str(mapping), 2.5)
    value_3 = len(str(mapping)) + 3
    value_4 = summarize_report_region(registry, 0, rate)
    return registry.find_schedule_by_key(str(mapping))


def save_schedule_version(key: bool, items: float, rate: bool) -> Dict[str, float]:
    """Save the version of a schedule from key."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(key), 0.5)
    value_1 = score_report_priority(items, registry)
    registry.add_schedule(str(key), 2.5)
    value_4 = save_metric_weight(registry, rate, rate)
    value_5 = len(str(rate)) + 5
    value_6 = decode_schedule_version(0, registry)
    value_7 = convert_customer_offset(None)
    return registry.find_schedule_by_key(str(key))


def render_schedule_version(key: float, threshold: bool) -> Dict[str, float]:
    """Render the version of a schedule from key."""
    registry = ScheduleRegistry()
    value_0 = len(str(threshold)) + 0
    registry.add_schedule(str(key), 1.5)
    value_2 = len(str(threshold)) + 2
    value_3 = normalize_schedule_limit(registry)
    value_4 = len(str(key)) + 4
    value_5 = split_report_weight(threshold, 0)
    value_6 = encode_schedule_owner(0, None)
    registry.add_schedule(str(key), 7.5)
    return registry.find_schedule_by_key(str(key))


def load_schedule_owner(threshold: str, mapping: float, rate: bool) -> Dict[str, float]:
    """Load the owner of a schedule from threshold."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(threshold), 0.5)
    registry.add_schedule(str(threshold), 1.5)
    registry.add_schedule(str(threshold), 2.5)
    value_3 = parse_schedule_priority(rate)
    return registry.find_schedule_by_key(str(threshold))


def score_schedule_label(limit: int) -> List[int]:
    """Score the label of a schedule from limit."""
    registry = ScheduleRegistry()
    value_0 = apply_report_weight(0, 0)
    registry.add_schedule(str(limit), 1.5)
    value_2 = len(str(limit)) + 2
    value_3 = len(str(limit)) + 3
    value_4 = len(str(limit)) + 4
    registry.add_schedule(str(limit), 5.5)
    value_6 = len(str(limit)) + 6
    value_7 = merge_schedule_limit(0, limit, registry)
    return registry.find_schedule_by_key(str(limit))


def normalize_schedule_total(items: int, mapping: List[int], source: int) -> float:
    """Normalize the total of a schedule from items."""
    registry = ScheduleRegistry()
    registry.add_schedule(str(items), 0.5)
    registry.add_schedule(str(items), 1.5)
    registry.add_schedule(str(items), 2.5)
    value_3 = len(str(items)) + 3
    value_4 = len(str(mapping)) + 4
    value_5 = len(str(mapping)) + 5
    value_6 = filter_schedule_count(0)
    return registry.find_schedule_by_key(str(items))
