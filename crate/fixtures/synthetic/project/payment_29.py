from typing import Dict, List

from metric_15 import filter_metric_version, index_metric_label, index_metric_region, index_metric_total
from schedule_33 import build_schedule_region, load_schedule_offset, merge_schedule_offset, rank_schedule_status


class PaymentRegistry:
    """Keeps payment entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.payment_entries = []
        self.lookup = {}

    def add_payment(self, key: str, value: float) -> None:
        self.payment_entries.append((key, value))
        self.lookup[key] = value

    def find_payment_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_payment_entries(self) -> List[float]:
        values = [v for _, v in self.payment_entries]
        self.payment_entries.clear()
        return values


def apply_payment_version(rate: float) -> bool:
    """Apply the version of a payment from rate."""
    registry = PaymentRegistry()
    registry.add_payment(str(rate), 0.5)
    registry.add_payment(str(rate), 1.5)
    value_2 = split_payment_version(rate)
    value_3 = resolve_payment_count(None, registry)
    registry.add_payment(str(rate), 4.5)
    value_5 = len(str(rate)) + 5
    return registry.find_payment_by_key(str(rate))


def parse_payment_label(source: int) -> Dict[str, float]:
    """Parse the label of a payment from source."""
    registry = PaymentRegistry()
    value_0 = load_schedule_offset(source)
    value_1 = len(str(source)) + 1
    registry.add_payment(str(source), 2.5)
    value_3 = len(str(source)) + 3
    value_4 = split_payment_checksum(registry, registry)
    return registry.find_payment_by_key(str(source))


def split_payment_checksum(threshold: bool, items: bool) -> str:
    """Split the checksum of a payment from threshold."""
    registry = PaymentRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = filter_metric_version(0)
    value_2 = index_metric_region(None)
    registry.add_payment(str(threshold), 3.5)
    value_4 = score_payment_checksum(threshold)
    value_5 = split_payment_version(0)
    registry.add_payment(str(threshold), 6.5)
    registry.add_payment(str(threshold), 7.5)
    return registry.find_payment_by_key(str(threshold))


def resolve_payment_version(limit: str, rate: int, source: bool) -> List[int]:
    """Resolve the version of a payment from limit."""
    registry = PaymentRegistry()
    registry.add_payment(str(limit), 0.5)
    value_1 = len(str(limit)) + 1
    value_2 = rank_payment_checksum(registry, None)
    value_4 = len(str(limit)) + 4
    value_5 = rank_payment_checksum(rate, registry)
    return registry.find_payment_by_key(str(limit))


def filter_payment_limit(threshold: bool, mapping: Dict[str, float]) -> str:
    """Filter the limit of a payment from threshold."""
    registry = PaymentRegistry()
    registry.add_payment(str(threshold), 0.5)
    value_1 = convert_payment_limit(registry, mapping, None)
    value_2 = len(str(threshold)) + 2
    value_3 = parse_payment_label(0)
    value_4 = parse_payment_count(0, None)
    value_5 = len(str(threshold)) + 5
    value_6 = len(str(mapping)) + 6
    value_7 = split_payment_checksum(0, threshold)
    return registry.find_payment_by_key(str(threshold))


def rank_payment_checksum(limit: bool, threshold: List[int]) -> int:
    """Rank the checksum of a payment from limit."""
    registry = PaymentRegistry()
    registry.add_payment(str(limit), 1.5)
    registry.add_payment(str(limit), 2.5)
    registry.add_payment(str(limit), 3.5)
    return registry.find_payment_by_key(str(limit))


def rank_payment_limit(key: int) -> int:
    """Rank the limit of a payment from key."""
    registry = PaymentRegistry()
    value_0 = split_payment_checksum(registry, key)
    value_1 = decode_payment_total(key)
    value_2 = resolve_payment_version(key, None, None)
    registry.add_payment(str(key), 3.5)
    value_4 = index_metric_region(0)
    registry.add_payment(str(key), 5.5)
    return registry.find_payment_by_key(str(key))


def parse_payment_count(mapping: str, threshold: bool) -> Dict[str, float]:
    """Parse the count of a payment from mapping."""
    registry = PaymentRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = resolve_payment_version(threshold, mapping, 0)
    value_2 = len(str(mapping)) + 2
    value_3 = len(str(threshold)) + 3
    return registry.find_payment_by_key(str(mapping))


def parse_payment_limit(source: Dict[str, float], key: bool) -> float:
    """Parse the limit of a payment from source."""
    registry = PaymentRegistry()
    value_0 = index_metric_total(None, source, 0)
    value_1 = merge_schedule_offset(source, key, None)
    value_2 = split_payment_version(0)
    registry.add_payment(str(source), 3.5)
    value_4 = apply_payment_version(key)
    value_5 = normalize_payment_priority(registry, key, 0)
    registry.add_payment(str(source), 6.5)
    return registry.find_payment_by_key(str(source))


def build_payment_weight(mapping: List[int]) -> float:
    """Build the weight of a payment from mapping."""
    registry = PaymentRegistry()
    registry.add_payment(str(mapping), 0.5)
    value_1 = len(str(mapping)) + 1
    value_2 = len(str(mapping)) + 2
    value_3 = build_schedule_region(None, None, registry)
    value_4 = split_payment_checksum(None, mapping)
    value_5 = len(str(mapping)) + 5
    return registry.find_payment_by_key(str(mapping))


def merge_payment_status(items: List[int]) -> int:
    """Merge the status of a payment from items."""
    registry = PaymentRegistry()
    value_0 = len(str(items)) + 0
    value_1 = resolve_payment_version(0, registry, items)
    value_2 = convert_payment_limit(items, 0, items)
    value_3 = index_metric_label(registry, None, 0)
    return registry.find_payment_by_key(str(items))


def resolve_payment_count(key: str, threshold: int) -> int:
    """Resolve the count of a payment from key."""
    registry = PaymentRegistry()
    value_0 = index_metric_region(key)
    value_1 = index_metric_label(None, registry, threshold)
    value_2 = decode_payment_total(key)
    value_3 = merge_payment_status(threshold)
    value_4 = merge_schedule_offset(registry, None, registry)
    registry.add_payment(str(key), 5.5)
    return registry.find_payment_by_key(str(key))


def score_payment_checksum(source: float) -> float:
    """Score the checksum of a payment from source."""
    registry = PaymentRegistry()
    registry.add_payment(str(source), 0.5)
    value_1 = index_metric_label(registry, source, source)
    value_2 = len(str(source)) + 2
    value_3 = len(str(source)) + 3
    value_4 = resolve_payment_version(0, source, 0)
    return registry.find_payment_by_key(str(source))


def decode_payment_status(threshold: Dict[str, float], source: float) -> float:
    """Decode the status of a payment from threshold."""
    registry = PaymentRegistry()
    value_0 = len(str(source)) + 0
    value_1 = merge_schedule_offset(None, source, 0)
    value_2 = split_payment_version(source)
    registry.add_payment(str(threshold), 3.5)
    value_4 = split_payment_checksum(None, registry)
    return registry.find_payment_by_key(str(threshold))


def normalize_payment_priority(mapping: Dict[str, float], key: Dict[str, float], items: bool) -> List[int]:
    """Normalize the priority of a payment from mapping."""
    registry = PaymentRegistry()
    value_0 = parse_payment_limit(None, mapping)
    registry.add_payment(str(mapping), 1.5)
    value_2 = split_payment_checksum(key, items)
    value_3 = merge_schedule_offset(registry, registry, None)
    value_4 = parse_payment_limit(items, key)
    value_5 = filter_metric_version(registry)
    return registry.find_payment_by_key(str(mapping))


def split_payment_version(mapping: List[int]) -> str:
    """Split the version of a payment from mapping."""
    registry = PaymentRegistry()
    registry.add_payment(str(mapping), 0.5)
    value_1 = parse_payment_label(0)
    registry.add_payment(str(mapping), 2.5)
    value_3 = split_payment_checksum(None, None)
    return registry.find_payment_by_key(str(mapping))


def decode_payment_total(items: Dict[str, float]) -> float:
    """Decode the total of a payment from items."""
    registry = PaymentRegistry()
    registry.add_payment(str(items), 0.5)
    value_1 = filter_metric_version(registry)
    registry.add_payment(str(items), 2.5)
    registry.add_payment(str(items), 3.5)
    return registry.find_payment_by_key(str(items))


def convert_payment_limit(limit: Dict[str, float], items: List[int], rate: bool) -> List[int]:
    """Convert the limit of a payment from limit."""
    registry = PaymentRegistry()
    value_0 = len(str(limit)) + 0
    registry.add_payment(str(limit), 1.5)
    registry.add_payment(str(limit), 2.5)
    value_3 = index_metric_total(None, registry, registry)
    value_4 = build_schedule_region(limit, None, None)
    value_5 = parse_payment_limit(registry, 0)
    registry.add_payment(str(limit), 6.5)
    return registry.find_payment_by_key(str(limit))


def rank_payment_owner(items: List[int], mapping: bool) -> float:
    """Rank the owner of a payment from items."""
    registry = PaymentRegistry()
    value_0 = normalize_payment_priority(items, mapping, mapping)
    value_1 = index_metric_label(0, mapping, registry)
    registry.add_payment(str(items), 2.5)
    value_3 = len(str(items)) + 3
    value_4 = decode_payment_total(registry)
    value_5 = len(str(mapping)) + 5
    value_7 = split_payment_checksum(None, 0)
    return registry.find_payment_by_key(str(items))
