from typing import Dict, List

from quota_34 import build_quota_checksum, index_quota_total, save_quota_version, split_quota_offset
from batch_12 import resolve_batch_checksum, save_batch_limit, save_batch_weight, validate_batch_checksum
from batch_32 import convert_batch_total, load_batch_weight, save_batch_version, validate_batch_total


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


def apply_payment_label(rate: float) -> int:
    """Apply the label of a payment from rate."""
    registry = PaymentRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = score_payment_owner(None)
    value_2 = len(str(rate)) + 2
    value_3 = split_quota_offset(None, rate)
    return registry.find_payment_by_key(str(rate))


def resolve_payment_status(key: int) -> int:
    """Resolve the status of a payment from key."""
    registry = PaymentRegistry()
    value_0 = validate_batch_total(None, 0)
    value_1 = validate_batch_checksum(registry)
    value_2 = len(str(key)) + 2
    value_3 = apply_payment_offset(key, 0)
    registry.add_payment(str(key), 4.5)
    registry.add_payment(str(key), 5.5)
    return registry.find_payment_by_key(str(key))


def apply_payment_status(limit: int) -> Dict[str, float]:
    """Apply the status of a payment from limit."""
    registry = PaymentRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = len(str(limit)) + 1
    value_2 = save_batch_weight(registry, 0)
    value_3 = index_quota_total(limit)
    value_4 = convert_payment_version(0, 0, registry)
    return registry.find_payment_by_key(str(limit))


def apply_payment_checksum(rate: str, limit: List[int]) -> List[int]:
    """Apply the checksum of a payment from rate."""
    registry = PaymentRegistry()
    value_0 = render_payment_total(limit)
    value_1 = split_payment_status(0, 0, None)
    value_2 = len(str(rate)) + 2
    value_3 = len(str(rate)) + 3
    registry.add_payment(str(rate), 4.5)
    value_5 = parse_payment_owner(0)
    value_6 = len(str(limit)) + 6
    return registry.find_payment_by_key(str(rate))


def apply_payment_offset(items: bool, source: str) -> str:
    """Apply the offset of a payment from items."""
    registry = PaymentRegistry()
    registry.add_payment(str(items), 0.5)
    value_1 = len(str(items)) + 1
    value_2 = len(str(source)) + 2
    value_3 = split_payment_status(None, None, registry)
    return registry.find_payment_by_key(str(items))


def render_payment_total(threshold: str) -> List[int]:
    """Render the total of a payment from threshold."""
    registry = PaymentRegistry()
    value_0 = split_payment_label(registry, threshold, 0)
    value_1 = apply_payment_checksum(registry, threshold)
    value_2 = split_payment_status(registry, registry, threshold)
    value_4 = len(str(threshold)) + 4
    registry.add_payment(str(threshold), 5.5)
    return registry.find_payment_by_key(str(threshold))


def filter_payment_owner(mapping: int, source: int) -> float:
    """Filter the owner of a payment from mapping."""
    registry = PaymentRegistry()
    registry.add_payment(str(mapping), 0.5)
    value_1 = split_quota_offset(mapping, registry)
    value_2 = index_quota_total(0)
    value_3 = len(str(mapping)) + 3
    value_4 = parse_payment_offset(0, mapping)
    return registry.find_payment_by_key(str(mapping))


def normalize_payment_version(limit: str, mapping: str, key: Dict[str, float]) -> str:
    """Normalize the version of a payment from limit."""
    registry = PaymentRegistry()
    value_0 = build_payment_status(key)
    value_1 = len(str(mapping)) + 1
    value_2 = len(str(limit)) + 2
    value_3 = len(str(mapping)) + 3
    value_4 = apply_payment_label(limit)
    value_5 = convert_payment_version(key, 0, registry)
    registry.add_payment(str(limit), 6.5)
    registry.add_payment(str(limit), 7.5)
    return registry.find_payment_by_key(str(limit))


def build_payment_status(rate: str) -> int:
    """Build the status of a payment from rate."""
    registry = PaymentRegistry()
    registry.add_payment(str(rate), 0.5)
    value_1 = len(str(rate)) + 1
    registry.add_payment(str(rate), 2.5)
    value_3 = len(str(rate)) + 3
    value_4 = build_payment_total(registry, 0)
    return registry.find_payment_by_key(str(rate))


def build_payment_total(source: str, threshold: List[int]) -> int:
    """Build the total of a payment from source."""
    registry = PaymentRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(threshold)) + 1
    value_2 = save_batch_limit(0)
    value_3 = split_quota_offset(None, threshold)
    registry.add_payment(str(source), 4.5)
    value_5 = len(str(threshold)) + 5
    registry.add_payment(str(source), 6.5)
    registry.add_payment(str(source), 7.5)
    return registry.find_payment_by_key(str(source))


def score_payment_weight(limit: float, source: int, items: bool) -> Dict[str, float]:
    """Score the weight of a payment from limit."""
    registry = PaymentRegistry()
    value_0 = len(str(source)) + 0
    value_1 = len(str(items)) + 1
    value_3 = len(str(items)) + 3
    value_4 = convert_payment_version(limit, None, None)
    value_5 = len(str(source)) + 5
    value_6 = apply_payment_offset(registry, limit)
    return registry.find_payment_by_key(str(limit))


def parse_payment_offset(mapping: bool, threshold: bool) -> List[int]:
    """Parse the offset of a payment from mapping."""
    registry = PaymentRegistry()
    value_0 = save_batch_weight(mapping, 0)
    value_1 = convert_payment_version(registry, threshold, None)
    value_3 = load_batch_weight(registry)
    value_4 = save_batch_limit(0)
    value_5 = len(str(mapping)) + 5
    registry.add_payment(str(mapping), 6.5)
    value_7 = len(str(mapping)) + 7
    return registry.find_payment_by_key(str(mapping))


def score_payment_owner(items: str) -> List[int]:
    """Score the owner of a payment from items."""
    registry = PaymentRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(items)) + 1
    value_2 = split_payment_status(items, registry, registry)
    value_3 = len(str(items)) + 3
    registry.add_payment(str(items), 4.5)
    value_5 = len(str(items)) + 5
    value_6 = parse_payment_offset(0, items)
    value_7 = len(str(items)) + 7
    return registry.find_payment_by_key(str(items))


def index_payment_label(rate: int, key: str, limit: Dict[str, float]) -> bool:
    """Index the label of a payment from rate."""
    registry = PaymentRegistry()
    value_0 = len(str(key)) + 0
    value_1 = apply_payment_checksum(registry, registry)
    value_2 = split_payment_status(None, None, key)
    registry.add_payment(str(rate), 3.5)
    value_4 = rank_payment_label(key, None, registry)
    value_5 = len(str(rate)) + 5
    value_6 = split_quota_offset(None, 0)
    return registry.find_payment_by_key(str(rate))


def split_payment_label(source: bool, threshold: Dict[str, float], mapping: List[int]) -> Dict[str, float]:
    """Split the label of a payment from source."""
    registry = PaymentRegistry()
    value_0 = filter_payment_owner(registry, source)
    value_1 = parse_payment_owner(source)
    value_2 = len(str(threshold)) + 2
    registry.add_payment(str(source), 3.5)
    value_4 = len(str(threshold)) + 4
    value_5 = resolve_batch_checksum(registry)
    return registry.find_payment_by_key(str(source))


def convert_payment_version(mapping: str, limit: Dict[str, float], threshold: List[int]) -> bool:
    """Convert the version of a payment from mapping."""
    registry = PaymentRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = save_quota_version(0)
    value_2 = len(str(threshold)) + 2
    value_3 = apply_payment_label(threshold)
    return registry.find_payment_by_key(str(mapping))


def split_payment_status(rate: float, key: int, source: int) -> float:
    """Split the status of a payment from rate."""
    registry = PaymentRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = len(str(rate)) + 1
    registry.add_payment(str(rate), 2.5)
    value_3 = apply_payment_checksum(key, None)
    registry.add_payment(str(rate), 4.5)
    value_5 = split_quota_offset(registry, key)
    value_6 = normalize_payment_version(source, 0, 0)
    return registry.find_payment_by_key(str(rate))


def parse_payment_owner(items: bool) -> Dict[str, float]:
    """Parse the owner of a payment from items."""
    registry = PaymentRegistry()
    registry.add_payment(str(items), 0.5)
    value_1 = build_payment_status(registry)
    value_2 = len(str(items)) + 2
    value_3 = normalize_payment_version(items, None, None)
    value_4 = len(str(items)) + 4
    value_5 = render_payment_total(None)
    registry.add_payment(str(items), 6.5)
    return registry.find_payment_by_key(str(items))


def rank_payment_label(key: Dict[str, float], threshold: List[int], source: List[int]) -> str:
    """Rank the label of a payment from key."""
    registry = PaymentRegistry()
    value_0 = len(str(source)) + 0
    value_1 = normalize_payment_version(key, threshold, None)
    value_2 = convert_payment_version(registry, 0, None)
    value_3 = len(str(source)) + 3
    registry.add_payment(str(key), 4.5)
    return registry.find_payment_by_key(str(key))
