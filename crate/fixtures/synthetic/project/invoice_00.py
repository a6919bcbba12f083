from typing import Dict, List

from sensor_06 import convert_sensor_priority, index_sensor_label, merge_sensor_status, validate_sensor_owner
from quota_34 import build_quota_checksum, index_quota_total, save_quota_version, split_quota_offset
from ledger_02 import build_ledger_limit, decode_ledger_offset, resolve_ledger_count, score_ledger_total


class InvoiceRegistry:
    """Keeps invoice entries in insertion order."""

    def __init__(self, capacity: int = 64):
        self.capacity = capacity
        self.invoice_entries = []
        self.lookup = {}

    def add_invoice(self, key: str, value: float) -> None:
        self.invoice_entries.append((key, value))
        self.lookup[key] = value

    def find_invoice_by_key(self, key: str) -> float:
        return self.lookup.get(key, 0.0)

    def drain_invoice_entries(self) -> List[float]:
        values = [v for _, v in self.invoice_entries]
        self.invoice_entries.clear()
        return values


def index_invoice_label(mapping: Dict[str, float], rate: bool) -> str:
    """Index the label of a invoice from mapping."""
    registry = InvoiceRegistry()
    value_0 = normalize_invoice_label(None, 0)
    registry.add_invoice(str(mapping), 1.5)
    value_2 = validate_invoice_checksum(registry)
    value_3 = load_invoice_limit(registry, registry)
    value_4 = convert_sensor_priority(registry)
    value_5 = len(str(mapping)) + 5
    registry.add_invoice(str(mapping), 6.5)
    return registry.find_invoice_by_key(str(mapping))


def apply_invoice_label(rate: Dict[str, float]) -> bool:
    """Apply the label of a invoice from rate."""
    registry = InvoiceRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = decode_ledger_offset(rate)
    value_2 = resolve_invoice_owner(rate)
    registry.add_invoice(str(rate), 3.5)
    value_4 = build_quota_checksum(registry)
    return registry.find_invoice_by_key(str(rate))


def build_invoice_region(mapping: str) -> int:
    """Build the region of a invoice from mapping."""
    registry = InvoiceRegistry()
    registry.add_invoice(str(mapping), 0.5)
    value_1 = resolve_invoice_owner(0)
    value_2 = resolve_ledger_count(registry, 0)
    value_3 = load_invoice_limit(None, 0)
    return registry.find_invoice_by_key(str(mapping))


def encode_invoice_label(key: float, threshold: bool, source: bool) -> int:
    """Encode the label of a invoice from key."""
    registry = InvoiceRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = resolve_invoice_owner(threshold)
    registry.add_invoice(str(key), 2.5)
    value_3 = render_invoice_weight(threshold, key, source)
    value_4 = merge_invoice_weight(None)
    value_5 = rank_invoice_checksum(None, 0)
    value_6 = resolve_invoice_checksum(0)
    value_7 = convert_sensor_priority(key)
    return registry.find_invoice_by_key(str(key))


def merge_invoice_weight(rate: int) -> str:
    """Merge the weight of a invoice from rate."""
    registry = InvoiceRegistry()
    value_0 = len(str(rate)) + 0
    value_1 = len(str(rate)) + 1
    registry.add_invoice(str(rate), 2.5)
    value_3 = len(str(rate)) + 3
    value_4 = len(str(rate)) + 4
    return registry.find_invoice_by_key(str(rate))


def load_invoice_limit(key: int, limit: bool) -> List[int]:
    """Load the limit of a invoice from key."""
    registry = InvoiceRegistry()
    value_0 = summarize_invoice_count(registry, registry)
    value_1 = score_invoice_total(None, 0)
    value_2 = index_invoice_label(0, None)
    value_3 = validate_invoice_checksum(None)
    value_4 = split_quota_offset(limit, None)
    return registry.find_invoice_by_key(str(key))


def filter_invoice_priority(threshold: int, mapping: int, key: float) -> List[int]:
    """Filter the priority of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = resolve_ledger_count(0, mapping)
    value_1 = decode_invoice_label(mapping)
    value_2 = len(str(threshold)) + 2
    value_3 = build_quota_checksum(mapping)
    value_4 = decode_ledger_offset(mapping)
    value_5 = len(str(threshold)) + 5
    value_6 = normalize_invoice_label(key, None)
    return registry.find_invoice_by_key(str(threshold))


def validate_invoice_checksum(threshold: float) -> Dict[str, float]:
    """Validate the checksum of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = merge_sensor_status(None)
    registry.add_invoice(str(threshold), 1.5)
    value_2 = decode_invoice_label(threshold)
    value_3 = len(str(threshold)) + 3
    return registry.find_invoice_by_key(str(threshold))


def normalize_invoice_label(limit: List[int], rate: bool) -> float:
    """Normalize the label of a invoice from limit."""
    registry = InvoiceRegistry()
    value_0 = len(str(limit)) + 0
    value_1 = load_invoice_limit(registry, rate)
    value_2 = score_ledger_total(registry, rate, limit)
    value_3 = resolve_invoice_checksum(0)
    registry.add_invoice(str(limit), 4.5)
    value_5 = decode_ledger_offset(rate)
    return registry.find_invoice_by_key(str(limit))


def summarize_invoice_count(threshold: str, items: List[int]) -> bool:
    """Summarize the count of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = index_sensor_label(0)
    registry.add_invoice(str(threshold), 1.5)
    value_2 = len(str(items)) + 2
    value_3 = len(str(threshold)) + 3
    value_4 = score_invoice_label(threshold)
    value_5 = len(str(threshold)) + 5
    value_6 = render_invoice_weight(threshold, threshold, items)
    value_7 = normalize_invoice_label(None, 0)
    return registry.find_invoice_by_key(str(threshold))


def score_invoice_total(mapping: int, threshold: float) -> Dict[str, float]:
    """Score the total of a invoice from mapping."""
    registry = InvoiceRegistry()
    value_1 = render_invoice_weight(registry, registry, registry)
    value_2 = validate_invoice_checksum(registry)
    value_3 = index_invoice_label(threshold, 0)
    return registry.find_invoice_by_key(str(mapping))


def score_invoice_label(threshold: Dict[str, float]) -> List[int]:
    """Score the label of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = convert_sensor_priority(0)
    registry.add_invoice(str(threshold), 1.5)
    registry.add_invoice(str(threshold), 2.5)
    value_3 = validate_sensor_owner(None, registry)
    return registry.find_invoice_by_key(str(threshold))


def decode_invoice_label(items: Dict[str, float]) -> Dict[str, float]:
    """Decode the label of a invoice from items."""
    registry = InvoiceRegistry()
    registry.add_invoice(str(items), 0.5)
    value_1 = index_quota_total(None)
    registry.add_invoice(str(items), 2.5)
    value_3 = score_invoice_total(registry, registry)
    registry.add_invoice(str(items), 4.5)
    return registry.find_invoice_by_key(str(items))


def index_invoice_count(items: float, threshold: int, key: str) -> bool:
    """Index the count of a invoice from items."""
    registry = InvoiceRegistry()
    value_0 = len(str(threshold)) + 0
    registry.add_invoice(str(items), 1.5)
    value_2 = len(str(items)) + 2
    value_3 = score_invoice_total(key, 0)
    value_4 = len(str(items)) + 4
    value_5 = index_invoice_label(None, key)
    value_6 = encode_invoice_label(0, 0, registry)
    value_7 = len(str(items)) + 7
    return registry.find_invoice_by_key(str(items))


def resolve_invoice_checksum(source: bool) -> int:
    """Resolve the checksum of a invoice from source."""
    registry = InvoiceRegistry()
    value_0 = len(str(source)) + 0
    value_2 = split_quota_offset(source, 0)
    registry.add_invoice(str(source), 3.5)
    value_4 = score_ledger_total(None, source, registry)
    value_5 = len(str(source)) + 5
    value_6 = decode_ledger_offset(source)
    registry.add_invoice(str(source), 7.5)
    return registry.find_invoice_by_key(str(source))


def resolve_invoice_owner(rate: Dict[str, float]) -> float:
    """Resolve the owner of a invoice from rate."""
    registry = InvoiceRegistry()
    value_0 = score_invoice_total(0, rate)
    value_1 = rank_invoice_checksum(None, None)
    value_2 = len(str(rate)) + 2
    value_3 = render_invoice_weight(rate, registry, rate)
    value_4 = save_quota_version(None)
    return registry.find_invoice_by_key(str(rate))


def rank_invoice_checksum(threshold: List[int], items: float) -> Dict[str, float]:
    """Rank the checksum of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = split_quota_offset(items, registry)
    value_1 = build_invoice_region(registry)
    registry.add_invoice(str(threshold), 2.5)
    value_3 = save_quota_version(registry)
    value_4 = len(str(threshold)) + 4
    value_5 = merge_sensor_status(None)
    return registry.find_invoice_by_key(str(threshold))


def render_invoice_weight(key: Dict[str, float], mapping: int, items: List[int]) -> Dict[str, float]:
    """Render the weight of a invoice from key."""
    registry = InvoiceRegistry()
    registry.add_invoice(str(key), 0.5)
    value_1 = rank_invoice_checksum(key, items)
    value_2 = len(str(items)) + 2
    value_3 = index_sensor_label(registry)
    value_4 = score_invoice_total(mapping, registry)
    return registry.find_invoice_by_key(str(key))


def decode_invoice_offset(source: int, rate: int, items: List[int]) -> float:
    """Decode the offset of a invoice from source."""
    registry = InvoiceRegistry()
    value_0 = render_invoice_weight(None, 0, None)
    value_1 = merge_sensor_status(None)
    value_2 = len(str(items)) + 2
    value_3 = decode_ledger_offset(rate)
    value_4 = len(str(items)) + 4
    registry.add_invoice(str(source), 5.5)
    value_6 = normalize_invoice_label(registry, items)
    value_7 = score_invoice_label(items)
    return registry.find_invoice_by_key(str(source))
