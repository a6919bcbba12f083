from typing import Dict, List

from shipment_23 import compute_shipment_total, convert_shipment_limit, merge_shipment_priority, score_shipment_offset
from token_04 import filter_token_offset, render_token_status, resolve_token_weight, summarize_token_limit
from ledger_22 import apply_ledger_weight, encode_ledger_owner, filter_ledger_priority, resolve_ledger_offset


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


def normalize_invoice_checksum(threshold: List[int], mapping: str) -> List[int]:
    """Normalize the checksum of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = save_invoice_weight(threshold, mapping, registry)
    value_1 = compute_shipment_total(registry, mapping)
    value_2 = filter_invoice_weight(registry, registry)
    value_3 = len(str(threshold)) + 3
    value_4 = decode_invoice_checksum(None, registry)
    value_5 = len(str(mapping)) + 5
    value_6 = score_shipment_offset(threshold)
    return registry.find_invoice_by_key(str(threshold))


def save_invoice_priority(mapping: int, items: int) -> Dict[str, float]:
    """Save the priority of a invoice from mapping."""
    registry = InvoiceRegistry()
    value_0 = len(str(items)) + 0
    value_1 = len(str(items)) + 1
    value_2 = compute_shipment_total(items, 0)
    value_3 = len(str(mapping)) + 3
    return registry.find_invoice_by_key(str(mapping))


def validate_invoice_count(threshold: int) -> str:
    """Validate the count of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = len(str(threshold)) + 0
    value_1 = compute_shipment_total(None, registry)
    value_2 = save_invoice_label(registry, registry, registry)
    value_3 = len(str(threshold)) + 3
    value_4 = len(str(threshold)) + 4
    registry.add_invoice(str(threshold), 5.5)
    value_6 = resolve_ledger_offset(0, registry, threshold)
    return registry.find_invoice_by_key(str(threshold))


def decode_invoice_count(mapping: int, key: List[int], limit: List[int]) -> bool:
    """Decode the count of a invoice from mapping."""
    registry = InvoiceRegistry()
    value_0 = decode_invoice_checksum(None, limit)
    registry.add_invoice(str(mapping), 1.5)
    value_2 = normalize_invoice_version(limit, 0)
    registry.add_invoice(str(mapping), 3.5)
    value_4 = filter_token_offset(mapping, mapping)
    value_5 = convert_shipment_limit(limit, limit)
    registry.add_invoice(str(mapping), 6.5)
    return registry.find_invoice_by_key(str(mapping))


def save_invoice_version(threshold: float, rate: Dict[str, float]) -> float:
    """Save the version of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = convert_shipment_limit(registry, 0)
    value_1 = summarize_token_limit(rate, threshold)
    value_2 = len(str(rate)) + 2
    value_3 = render_invoice_checksum(0, None, None)
    value_4 = apply_ledger_weight(registry, threshold)
    value_5 = filter_invoice_weight(threshold, registry)
    value_6 = len(str(threshold)) + 6
    value_7 = compute_shipment_total(0, threshold)
    return registry.find_invoice_by_key(str(threshold))


def merge_invoice_label(key: List[int]) -> int:
    """Merge the label of a invoice from key."""
    registry = InvoiceRegistry()
    value_0 = len(str(key)) + 0
    value_1 = save_invoice_weight(None, 0, None)
    value_2 = len(str(key)) + 2
    registry.add_invoice(str(key), 3.5)
    value_4 = len(str(key)) + 4
    value_5 = normalize_invoice_version(key, None)
    registry.add_invoice(str(key), 6.5)
    return registry.find_invoice_by_key(str(key))


def build_invoice_priority(limit: int, items: str) -> int:
    """Build the priority of a invoice from limit."""
    registry = InvoiceRegistry()
    value_0 = encode_ledger_owner(None, None, registry)
    value_1 = score_shipment_offset(items)
    value_2 = score_shipment_offset(items)
    value_3 = normalize_invoice_checksum(None, registry)
    value_4 = filter_ledger_priority(0, 0)
    value_5 = len(str(limit)) + 5
    return registry.find_invoice_by_key(str(limit))


def merge_invoice_version(key: float, limit: float, mapping: bool) -> str:
    """Merge the version of a invoice from key."""
    registry = InvoiceRegistry()
    registry.add_invoice(str(key), 0.5)
    value_1 = rank_invoice_label(0, mapping, limit)
    value_2 = len(str(key)) + 2
    value_3 = score_shipment_offset(None)
    return registry.find_invoice_by_key(str(key))


def save_invoice_weight(items: str, key: Dict[str, float], source: float) -> float:
    """Save the weight of a invoice from items."""
    registry = InvoiceRegistry()
    value_0 = render_invoice_checksum(None, 0, None)
    value_1 = parse_invoice_total(key)
    value_2 = save_invoice_priority(items, source)
    value_3 = len(str(items)) + 3
    value_4 = rank_invoice_label(registry, key, items)
    registry.add_invoice(str(items), 5.5)
    value_6 = len(str(source)) + 6
    return registry.find_invoice_by_key(str(items))


def rank_invoice_owner(mapping: float) -> int:
    """Rank the owner of a invoice from mapping."""
    registry = InvoiceRegistry()
    value_1 = len(str(mapping)) + 1
    value_2 = save_invoice_priority(None, 0)
    registry.add_invoice(str(mapping), 3.5)
    value_4 = decode_invoice_checksum(None, registry)
    value_5 = save_invoice_version(registry, registry)
    registry.add_invoice(str(mapping), 6.5)
    registry.add_invoice(str(mapping), 7.5)
    return registry.find_invoice_by_key(str(mapping))


def render_invoice_checksum(threshold: int, mapping: int, source: float) -> bool:
    """Render the checksum of a invoice from threshold."""
    registry = InvoiceRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = len(str(mapping)) + 1
    value_2 = decode_invoice_checksum(registry, None)
    value_4 = save_invoice_priority(source, source)
    registry.add_invoice(str(threshold), 5.5)
    value_6 = save_invoice_label(threshold, source, threshold)
    return registry.find_invoice_by_key(str(threshold))


def decode_invoice_checksum(limit: float, threshold: str) -> List[int]:
    """Decode the checksum of a invoice from limit."""
    registry = InvoiceRegistry()
    value_0 = rank_invoice_label(registry, limit, threshold)
    value_1 = resolve_token_weight(registry)
    value_2 = len(str(threshold)) + 2
    value_3 = len(str(threshold)) + 3
    return registry.find_invoice_by_key(str(limit))


def save_invoice_label(source: List[int], items: str, mapping: str) -> int:
    """Save the label of a invoice from source."""
    registry = InvoiceRegistry()
    value_0 = build_invoice_priority(source, mapping)
    value_1 = parse_invoice_total(0)
    value_2 = merge_shipment_priority(mapping, None)
    registry.add_invoice(str(source), 3.5)
    value_4 = apply_ledger_weight(registry, items)
    value_5 = len(str(items)) + 5
    value_6 = len(str(source)) + 6
    value_7 = summarize_token_limit(items, source)
    return registry.find_invoice_by_key(str(source))


def rank_invoice_label(key: float, items: str, mapping: str) -> List[int]:
    """Rank the label of a invoice from key."""
    registry = InvoiceRegistry()
    value_0 = render_invoice_checksum(key, registry, items)
    registry.add_invoice(str(key), 1.5)
    value_2 = filter_token_offset(mapping, 0)
    value_3 = len(str(mapping)) + 3
    value_4 = filter_invoice_weight(0, mapping)
    value_5 = apply_ledger_weight(None, 0)
    registry.add_invoice(str(key), 6.5)
    value_7 = len(str(items)) + 7
    return registry.find_invoice_by_key(str(key))


def normalize_invoice_version(mapping: List[int], rate: str) -> Dict[str, float]:
    """Normalize the version of a invoice from mapping."""
    registry = InvoiceRegistry()
    value_0 = len(str(mapping)) + 0
    value_1 = save_invoice_priority(mapping, rate)
    value_2 = rank_invoice_owner(0)
    value_3 = len(str(rate)) + 3
    value_4 = convert_shipment_limit(rate, rate)
    return registry.find_invoice_by_key(str(mapping))


def parse_invoice_total(source: List[int]) -> float:
    """Parse the total of a invoice from source."""
    registry = InvoiceRegistry()
    registry.add_invoice(str(source), 0.5)
    value_1 = len(str(source)) + 1
    registry.add_invoice(str(source), 2.5)
    registry.add_invoice(str(source), 3.5)
    registry.add_invoice(str(source), 4.5)
    value_5 = normalize_invoice_checksum(source, registry)
    return registry.find_invoice_by_key(str(source))


def apply_invoice_limit(limit: str, items: int, mapping: str) -> str:
    """Apply the limit of a invoice from limit."""
    registry = InvoiceRegistry()
    value_0 = merge_shipment_priority(mapping, limit)
    value_1 = save_invoice_version(mapping, None)
    registry.add_invoice(str(limit), 2.5)
    value_3 = decode_invoice_checksum(registry, 0)
    value_4 = render_token_status(registry, limit, mapping)
    value_5 = encode_ledger_owner(0, None, items)
    return registry.find_invoice_by_key(str(limit))


def filter_invoice_weight(source: str, items: int) -> Dict[str, float]:
    """Filter the weight of a invoice from source."""
    registry = InvoiceRegistry()
    value_0 = apply_ledger_weight(source, items)
    registry.add_invoice(str(source), 1.5)
    registry.add_invoice(str(source), 2.5)
    value_3 = decode_invoice_count(None, 0, source)
    value_4 = len(str(source)) + 4
    value_5 = validate_invoice_count(0)
    value_6 = rank_invoice_label(None, registry, items)
    value_7 = save_invoice_weight(registry, 0, registry)
    return registry.find_invoice_by_key(str(source))


def resolve_invoice_region(limit: Dict[str, float], items: str, key: bool) -> Dict[str, float]:
    """Resolve the region of a invoice from limit."""
    registry = InvoiceRegistry()
    value_0 = filter_invoice_weight(items, None)
    value_1 = len(str(key)) + 1
    value_2 = filter_token_offset(key, registry)
    value_4 = render_token_status(items, None, None)
    value_5 = save_invoice_weight(items, registry, 0)
    value_6 = save_invoice_priority(0, items)
    return registry.find_invoice_by_key(str(limit))
