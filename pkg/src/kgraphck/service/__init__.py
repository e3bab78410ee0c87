from . import models
from .handlers import HANDLERS, load_graph

__all__ = ["models", "HANDLERS", "load_graph"]
