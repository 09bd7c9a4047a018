# built-in
import json
import os
from hashlib import md5
from pathlib import Path
from time import time
from typing import Any, Dict, Mapping, Optional


CACHE_PATH = Path(
    os.environ.get('ACTIVENAV_CACHE', Path.home() / '.cache/activenav'),
)

THRESHOLD = int(os.getenv('ACTIVENAV_CACHE_TIMEOUT', 3600 * 24))  # default is 1 day


def prepare_cache(path=CACHE_PATH):
    if not path.exists():
        path.mkdir(parents=True, exist_ok=True)
        return
    for fpath in path.iterdir():
        try:
            if time() - fpath.stat().st_atime <= THRESHOLD:
                continue
            fpath.unlink()
        except FileNotFoundError:
            pass


class Snapshot:
    """Cached result of one curriculum stage.

    The file name is derived from the stage config, the digest stored inside
    is the digest of the parameters the stage started from. A stage is only
    reused when both match.
    """
    _exists: Optional[bool] = None
    _results = None

    def __init__(self, *, cache_path: Path, digest: str):
        self.cache_path = cache_path
        self.digest = digest

    @classmethod
    def create(
        cls, *, config: Mapping[str, Any], stage: int, params_digest: str,
        cache_dir: Path = None,
    ) -> 'Snapshot':
        hasher = md5()

        # stage config
        hasher.update(json.dumps(dict(config), sort_keys=True, default=str).encode())
        hasher.update(str(stage).encode())

        return cls(
            cache_path=(cache_dir or CACHE_PATH) / (hasher.hexdigest() + '.json'),
            digest=params_digest,
        )

    def exists(self) -> bool:
        """Returns True if cache file exists and was made from the same parameters."""
        if self._exists is not None:
            return self._exists

        if not self.cache_path.exists():
            self._exists = False
            return self._exists

        try:
            cache = json.loads(self.cache_path.read_text())
        except (FileNotFoundError, ValueError):
            self._exists = False
            return self._exists
        self._exists = self.digest == cache.get('digest')
        if self._exists:
            self._results = cache['results']
        return self._exists

    def dump(self, results: Dict[str, Any]) -> None:
        self.cache_path.parent.mkdir(parents=True, exist_ok=True)
        self.cache_path.write_text(self.dumps(results=results))

    def dumps(self, results: Dict[str, Any]) -> str:
        return json.dumps(
            dict(results=results, digest=self.digest),
        )

    @property
    def results(self) -> Dict[str, Any]:
        """returns cached stage results"""
        if self._results is not None:
            return self._results
        return json.loads(self.cache_path.read_text())['results']
