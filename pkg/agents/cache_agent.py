"""
Cache Agent - memo of exact values already computed in this process
Exact values never expire, so entries live until cleared
"""
import logging
from threading import Lock
from typing import Dict, Optional

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class CacheAgent(dict):
    """Thread-safe mapping of cell keys to serialized exact values"""

    def __init__(self):
        super().__init__()
        self._lock = Lock()
        self.hits = 0

    def __contains__(self, key) -> bool:
        with self._lock:
            found = dict.__contains__(self, key)
            self.hits += 1 if found else 0
        if found:
            logger.debug(f"Cache hit for key: {key}")
        return found

    def __setitem__(self, key, value: Dict) -> None:
        with self._lock:
            dict.__setitem__(self, key, value)

    def get_value(self, key) -> Optional[Dict]:
        with self._lock:
            return dict.get(self, key)

    def clear(self) -> None:
        with self._lock:
            dict.clear(self)
            self.hits = 0
        logger.info("Cache cleared")
