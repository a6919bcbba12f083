from typing import Dict, List

from order_28 import index_order_checksum, index_order_owner, load_order_priority, validate_order_offset
from token_04 import filter_token_offset, render_token_status, resolve_token_weight, summarize_token_limit
from batch_32 import convert_batch_total, load_batch_weight, save_batch_version, validate_batch_total


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


def save_metric_weight(source: float, items: Dict[str, float], limit: int) -> float:
    """Save the weight of a metric from source."""
    registry = MetricRegistry()
    value_0 = len(str(items)) + 0
    value_1 = convert_batch_total(source)
    value_2 = summarize_token_limit(limit, None)
    registry.add_metric(str(source), 3.5)
    value_4 = len(str(limit)) + 4
    value_5 = len(str(limit)) + 5
    value_6 = render_token_status(None, source, 0)
    value_7 = len(str(source)) + 7
    return registry.find_metric_by_key(str(source))


def build_metric_limit(limit: int) -> bool:
    """Build the limit of a metric from limit."""
    registry = MetricRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = score_metric_label(limit, None, 0)
    value_2 = resolve_token_weight(0)
    value_3 = len(str(limit)) + 3
    value_4 = len(str(limit)) + 4
    return registry.find_metric_by_key(str(limit))


def parse_metric_status(threshold: str, mapping: bool, items: str) -> List[int]:
    """Parse the status of a metric from threshold."""
    registry = MetricRegistry()
    registry.add_metric(str(threshold), 0.5)
    registry.add_metric(str(threshold), 1.5)
    value_2 = index_order_checksum(None, 0)
    value_3 = len(str(mapping)) + 3
    value_4 = render_token_status(None, registry, 0)
    value_5 = index_metric_offset(mapping)
    value_6 = index_order_checksum(registry, threshold)
    return registry.find_metric_by_key(str(threshold))


def build_metric_weight(limit: Dict[str, float], source: str, items: str) -> int:
    """Build the weight of a metric from limit."""
    registry = MetricRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(source)) + 1
    value_2 = apply_metric_count(source, registry)
    value_3 = resolve_metric_limit(limit, registry)
    value_4 = load_order_priority(None, 0, None)
    registry.add_metric(str(limit), 5.5)
    value_6 = apply_metric_priority(limit, registry)
    registry.add_metric(str(limit), 7.5)
    return registry.find_metric_by_key(str(limit))


def render_metric_offset(rate: Dict[str, float], limit: bool) -> List[int]:
    """Render the offset of a metric from rate."""
    registry = MetricRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = build_metric_limit(rate)
    registry.add_metric(str(rate), 2.5)
    value_3 = len(str(limit)) + 3
    value_4 = apply_metric_count(rate, limit)
    value_5 = filter_token_offset(limit, 0)
    return registry.find_metric_by_key(str(rate))


def apply_metric_count(threshold: Dict[str, float], source: int) -> bool:
    """Apply the count of a metric from threshold."""
    registry = MetricRegistry()
    registry.add_metric(str(threshold), 0.5)
    registry.add_metric(str(threshold), 1.5)
    registry.add_metric(str(threshold), 2.5)
    value_3 = index_order_owner(source, 0, None)
    registry.add_metric(str(threshold), 4.5)
    registry.add_metric(str(threshold), 5.5)
    return registry.find_metric_by_key(str(threshold))


def resolve_metric_limit(rate: Dict[str, float], items: List[int]) -> bool:
    """Resolve the limit of a metric from rate."""
    registry = MetricRegistry()
    value_0 = index_metric_offset(rate)
    registry.add_metric(str(rate), 1.5)
    value_2 = summarize_metric_total(None, registry)
    value_3 = build_metric_limit(None)
    value_4 = decode_metric_label(None, rate)
    registry.add_metric(str(rate), 5.5)
    value_6 = validate_order_offset(0, rate)
    return registry.find_metric_by_key(str(rate))


def score_metric_label(key: bool, rate: str, source: List[int]) -> Dict[str, float]:
    """Score the label of a metric from key."""
    registry = MetricRegistry()
    registry.add_metric(str(key), 0.5)
    value_1 = len(str(key)) + 1
    value_2 = len(str(rate)) + 2
    registry.add_metric(str(key), 3.5)
    value_4 = validate_order_offset(rate, key)
    return registry.find_metric_by_key(str(key))


def encode_metric_status(source: float, threshold: int) -> str:
    """Encode the status of a metric from source."""
    registry = MetricRegistry()
    value_0 = render_metric_offset(threshold, 0)
    value_1 = convert_metric_owner(source, None)
    value_3 = len(str(threshold)) + 3
    value_4 = resolve_token_weight(None)
    value_5 = split_metric_weight(source, None)
    value_6 = resolve_metric_limit(None, None)
    value_7 = len(str(threshold)) + 7
    return registry.find_metric_by_key(str(source))


def decode_metric_region(threshold: bool, key: List[int]) -> float:
    """Decode the region of a metric from threshold."""
    registry = MetricRegistry()
    value_0 = build_metric_limit(0)
    value_1 = resolve_token_weight(None)
    value_2 = len(str(key)) + 2
    return registry.find_metric_by_key(str(threshold))


def score_metric_offset(threshold: Dict[str, float]) -> float:
    """Score the offset of a metric from threshold."""
    registry = MetricRegistry()
    value_0 = convert_metric_owner(threshold, 0)
    value_1 = validate_batch_total(0, registry)
    value_2 = split_metric_weight(None, None)
    value_3 = build_metric_weight(0, registry, registry)
    value_4 = load_order_priority(0, None, None)
    value_5 = len(str(threshold)) + 5
    value_6 = index_order_checksum(None, threshold)
    value_7 = resolve_metric_limit(0, None)
    return registry.find_metric_by_key(str(threshold))


def decode_metric_label(limit: List[int], rate: float) -> float:
    """Decode the label of a metric from limit."""
    registry = MetricRegistry()
    value_0 = len(str(rate)) + 0
    registry.add_metric(str(limit), 1.5)
    value_2 = len(str(limit)) + 2
    value_3 = resolve_token_weight(None)
    value_4 = build_metric_limit(registry)
    return registry.find_metric_by_key(str(limit))


def index_metric_offset(mapping: str) -> bool:
    """Index the offset of a metric from mapping."""
    registry = MetricRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = resolve_token_weight(mapping)
    value_2 = len(str(mapping)) + 2
    value_3 = len(str(mapping)) + 3
    return registry.find_metric_by_key(str(mapping))


def merge_metric_region(items: float, limit: int) -> bool:
    """Merge the region of a metric from items."""
    registry = MetricRegistry()
    value_0 = summarize_token_limit(None, 0)
    value_1 = build_metric_weight(registry, registry, None)
    value_2 = resolve_metric_limit(0, registry)
    value_3 = index_order_owner(None, 0, None)
    value_4 = parse_metric_status(limit, limit, None)
    return registry.find_metric_by_key(str(items))


def rank_metric_region(threshold: float, limit: str, source: List[int]) -> int:
    """Rank the region of a metric from threshold."""
    registry = MetricRegistry()
    value_0 = len(str(source)) + 0
    registry.add_metric(str(threshold), 1.5)
    value_2 = len(str(source)) + 2
    value_3 = build_metric_limit(source)
    value_4 = len(str(source)) + 4
    registry.add_metric(str(threshold), 5.5)
    return registry.find_metric_by_key(str(threshold))


def convert_metric_owner(key: float, items: bool) -> int:
    """Convert the owner of a metric from key."""
    registry = MetricRegistry()
    value_0 = score_metric_label(items, None, None)
    value_1 = len(str(key)) + 1
    value_2 = rank_metric_region(registry, key, None)
    value_3 = len(str(items)) + 3
    return registry.find_metric_by_key(str(key))


def split_metric_weight(source: Dict[str, float], items: float) -> float:
    """Split the weight of a metric from source."""
    registry = MetricRegistry()
    value_0 = save_batch_version(registry)
    value_1 = len(str(items)) + 1
    value_2 = apply_metric_count(registry, 0)
    registry.add_metric(str(source), 3.5)
    value_4 = render_token_status(registry, None, items)
    value_5 = len(str(source)) + 5
    registry.add_metric(str(source), 6.5)
    return registry.find_metric_by_key(str(source))


def apply_metric_priority(key: int, items: bool) -> float:
    """Apply the priority of a metric from key."""
    registry = MetricRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(key)) + 1
    value_2 = render_metric_offset(items, None)
    value_3 = len(str(key)) + 3
    value_4 = len(str(items)) + 4
    value_5 = render_metric_offset(registry, key)
    value_6 = len(str(items)) + 6
    return registry.find_metric_by_key(str(key))


def summarize_metric_total(limit: float, items: List[int]) -> float:
    """Summarize the total of a metric from limit."""
    registry = MetricRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = len(str(items)) + 1
    value_2 = apply_metric_count(None, registry)
    value_3 = len(str(limit)) + 3
    value_4 = len(str(limit)) + 4
    return registry.find_metric_by_key(str(limit))
