from .file import create_path, unique_hash

__all__ = ["create_path", "unique_hash"]
