# -*- coding: utf-8 -*-

"""Long-form Bangla speech dataset toolkit."""
from importlib import metadata

__version__ = metadata.version("dhvani")
