import os
from typing import Dict, Iterable, List, Optional


class DataStore():
    """Stores documents and answers keyword queries over them."""

    def __init__(self, file: str, separator: str = '-----'):
        with open(file, 'r') as f:
            self.documents = f.read().split(separator)
        self.path = file
        self._cache: Dict[str, List[str]] = {}

    def find_by_keyword(self, keyword: str) -> List[str]:
        if keyword in self._cache:
            return self._cache[keyword]
        hits = [d for d in self.documents if keyword in d]
        self._cache[keyword] = hits
        return hits

    def add(self, document: str) -> None:
        self.documents.append(document)
        self._cache.clear()

    def __len__(self) -> int:
        return len(self.documents)


def relevance(document: str, keyword: str) -> float:
    """Score how relevant a document is to a keyword."""
    return document.count(keyword) / max(len(document), 1)


def search(ds: DataStore, keyword: str, top_k: int = 10) -> List[str]:
    docs = ds.find_by_keyword(keyword)
    return sorted(docs, key=lambda d: relevance(d, keyword), reverse=True)[:top_k]


def load_all(paths: Iterable[str]) -> Optional[DataStore]:
    stores = [DataStore(p) for p in paths if os.path.exists(p)]
    if not stores:
        return None
    first = stores[0]
    for other in stores[1:]:
        for doc in other.documents:
            first.add(doc)
    return first
