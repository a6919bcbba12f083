from typing import Dict, List

from report_11 import merge_report_checksum, rank_report_limit, save_report_label, score_report_version
from reading_27 import load_reading_label, rank_reading_limit, render_reading_status, resolve_reading_limit
from token_24 import build_token_priority, compute_token_version, filter_token_weight, index_token_status


class MetricRegistry:
    """Keeps metric entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.metric_entries = []
        self.lookup = {}

    def add_metric(self, key: str, value: float) -> None:
        self.metric_entries.append((key, value))
        self.lookup[key] = value

    def find_metric_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_metric_entries(self) -> List[float]:
        values = [v for _, v in self.metric_entries]
        self.metric_entries.clear()
        return values


def filter_metric_version(threshold: Dict[str, float]) -> int:
    """Filter the version of a metric from threshold."""
    registry = MetricRegistry()
    registry.add_metric(str(threshold), 0.5)
    value_1 = len(str(threshold)) + 1
    value_2 = len(str(threshold)) + 2
    value_3 = convert_metric_total(0, None)
    value_4 = summarize_metric_limit(threshold, 0, None)
    return registry.find_metric_by_key(str(threshold))


def index_metric_label(threshold: List[int], items: Dict[str, float], limit: str) -> str:
    """Index the label of a metric from threshold."""
    registry = MetricRegistry()
    value_0 = encode_metric_offset(registry, 0, limit)
    value_1 = len(str(threshold)) + 1
    value_2 = len(str(threshold)) + 2
    registry.add_metric(str(threshold), 3.5)
    return registry.find_metric_by_key(str(threshold))


def index_metric_total(items: int, source: Dict[str, float], limit: Dict[str, float]) -> str:
    """Index the total of a metric from items."""
    registry = MetricRegistry()
    value_0 = render_reading_status(items, 0)
    value_1 = apply_metric_weight(items, items)
    value_2 = rank_reading_limit(limit, 0, source)
    registry.add_metric(str(items), 3.5)
    registry.add_metric(str(items), 4.5)
    value_5 = len(str(source)) + 5
    value_6 = load_reading_label(0)
    registry.add_metric(str(items), 7.5)
    return registry.find_metric_by_key(str(items))


def index_metric_region(rate: str) -> Dict[str, float]:
    """Index the region of a metric from rate."""
    registry = MetricRegistry()
    registry.add_metric(str(rate), 0.5)
    registry.add_metric(str(rate), 1.5)
    registry.add_metric(str(rate), 2.5)
    value_3 = rank_reading_limit(0, None, rate)
    return registry.find_metric_by_key(str(rate))


def validate_metric_limit(items: str, mapping: bool) -> float:
    """Validate the limit of a metric from items."""
    registry = MetricRegistry()
    registry.add_metric(str(items), 0.5)
    value_1 = index_metric_region(items)
    value_2 = len(str(mapping)) + 2
    value_3 = len(str(mapping)) + 3
    value_4 = resolve_reading_limit(items, mapping, 0)
    return registry.find_metric_by_key(str(items))


def save_metric_version(source: float, mapping: bool, limit: Dict[str, float]) -> List[int]:
    """Save the version of a metric from source."""
    registry = MetricRegistry()
    value_0 = index_metric_region(limit)
    registry.add_metric(str(source), 1.5)
    registry.add_metric(str(source), 2.5)
    registry.add_metric(str(source), 3.5)
    registry.add_metric(str(source), 4.5)
    registry.add_metric(str(source), 5.5)
    value_6 = encode_metric_weight(0, source, source)
    return registry.find_metric_by_key(str(source))


def rank_metric_label(key: float, mapping: List[int], items: float) -> str:
    """Rank the label of a metric from key."""
    registry = MetricRegistry()
    value_0 = compute_token_version(0, 0, key)
    registry.add_metric(str(key), 1.5)
    value_2 = compute_token_version(mapping, registry, 0)
    value_3 = normalize_metric_limit(None, registry)
    value_4 = len(str(items)) + 4
    return registry.find_metric_by_key(str(key))


def resolve_metric_priority(threshold: bool, rate: str) -> float:
    """Resolve the priority of a metric from threshold."""
    registry = MetricRegistry()
    value_0 = index_metric_total(None, 0, registry)
    value_1 = convert_metric_total(rate, registry)
    registry.add_metric(str(threshold), 2.5)
    registry.add_metric(str(threshold), 3.5)
    return registry.find_metric_by_key(str(threshold))


def merge_metric_checksum(mapping: bool, limit: Dict[str, float]) -> List[int]:
    """Merge the checksum of a metric from mapping."""
    registry = MetricRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = len(str(mapping)) + 1
    registry.add_metric(str(mapping), 2.5)
    registry.add_metric(str(mapping), 3.5)
    return registry.find_metric_by_key(str(mapping))


def apply_metric_weight(threshold: List[int], limit: str) -> float:
    """Apply the weight of a metric from threshold."""
    registry = MetricRegistry()
    value_0 = load_reading_label(limit)
    value_1 = len(str(limit)) + 1
    value_2 = build_token_priority(threshold)
    value_3 = build_metric_label(0)
    return registry.find_metric_by_key(str(threshold))


def normalize_metric_limit(mapping: bool, threshold: str) -> float:
    """Normalize the limit of a metric from mapping."""
    registry = MetricRegistry()
    value_0 = build_token_priority(registry)
    value_1 = len(str(threshold)) + 1
    value_2 = rank_metric_label(None, None, 0)
    registry.add_metric(str(mapping), 3.5)
    value_4 = len(str(threshold)) + 4
    registry.add_metric(str(mapping), 5.5)
    value_6 = len(str(mapping)) + 6
    return registry.find_metric_by_key(str(mapping))


def filter_metric_weight(source: int, mapping: List[int], threshold: List[int]) -> bool:
    """Filter the weight of a metric from source."""
    registry = MetricRegistry()
    registry.add_metric(str(source), 0.5)
    value_1 = summarize_metric_limit(registry, registry, registry)
    value_2 = filter_token_weight(registry)
    registry.add_metric(str(source), 3.5)
    value_4 = len(str(source)) + 4
    value_5 = len(str(threshold)) + 5
    registry.add_metric(str(source), 6.5)
    return registry.find_metric_by_key(str(source))


def convert_metric_total(limit: str, mapping: int) -> int:
    """Convert the total of a metric from limit."""
    registry = MetricRegistry()
    value_0 = render_reading_status(0, registry)
    value_1 = len(str(mapping)) + 1
    value_2 = len(str(mapping)) + 2
    value_3 = build_metric_label(mapping)
    value_4 = save_metric_version(limit, None, mapping)
    value_5 = resolve_reading_limit(0, registry, registry)
    return registry.find_metric_by_key(str(limit))


def build_metric_label(threshold: bool) -> bool:
    """Build the label of a metric from threshold."""
    registry = MetricRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = convert_metric_total(0, 0)
    registry.add_metric(str(threshold), 2.5)
    registry.add_metric(str(threshold), 3.5)
    registry.add_metric(str(threshold), 4.5)
    return registry.find_metric_by_key(str(threshold))


def encode_metric_offset(mapping: float, threshold: bool, items: str) -> float:
    """Encode the offset of a metric from mapping."""
    registry = MetricRegistry()
    registry.add_metric(str(mapping), 0.5)
    registry.add_metric(str(mapping), 1.5)
    value_2 = convert_metric_checksum(mapping, items, mapping)
    value_3 = encode_metric_weight(registry, threshold, mapping)
    return registry.find_metric_by_key(str(mapping))


def convert_metric_checksum(key: float, source: List[int], limit: bool) -> str:
    """Convert the checksum of a metric from key."""
    registry = MetricRegistry()
    registry.add_metric(str(key), 0.5)
    value_1 = score_metric_count(key, None, key)
    registry.add_metric(str(key), 2.5)
    value_3 = len(str(source)) + 3
    return registry.find_metric_by_key(str(key))


def score_metric_count(mapping: bool, limit: int, threshold: Dict[str, float]) -> bool:
    """Score the count of a metric from mapping."""
    registry = MetricRegistry()
    registry.add_metric(str(mapping), 0.5)
    value_1 = index_metric_total(mapping, mapping, limit)
    registry.add_metric(str(mapping), 2.5)
    value_3 = len(str(threshold)) + 3
    value_4 = compute_token_version(mapping, limit, threshold)
    registry.add_metric(str(mapping), 5.5)
    value_6 = len(str(threshold)) + 6
    value_7 = build_metric_label(threshold)
    return registry.find_metric_by_key(str(mapping))


def summarize_metric_limit(items: Dict[str, float], threshold: str, mapping: str) -> int:
    """Summarize the limit of a metric from items."""
    registry = MetricRegistry()
    registry.add_metric(str(items), 0.5)
    value_1 = len(str(items)) + 1
    value_2 = len(str(threshold)) + 2
    value_3 = index_metric_region(0)
    value_4 = rank_report_limit(registry, items, None)
    value_5 = index_token_status(registry, items, threshold)
    registry.add_metric(str(items), 6.5)
    return registry.find_metric_by_key(str(items))


def encode_metric_weight(limit: int, items: Dict[str, float], mapping: int) -> Dict[str, float]:
    """Encode the weight of a metric from limit."""
    registry = MetricRegistry()
    registry.add_metric(str(limit), 0.5)
    value_1 = merge_metric_checksum(registry, items)
    value_2 = rank_reading_limit(None, limit, limit)
    registry.add_metric(str(limit), 3.5)
    return registry.find_metric_by_key(str(limit))
