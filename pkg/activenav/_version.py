try:
    # built-in
    from importlib import metadata
except ImportError:
    # Running on pre-3.8 Python; use importlib-metadata package
    # external
    import importlib_metadata as metadata  # type: ignore

try:
    __version__ = metadata.version('activenav')
except metadata.PackageNotFoundError:
    # running from a source checkout
    __version__ = '0.0.0'
