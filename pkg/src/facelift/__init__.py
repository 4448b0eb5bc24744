"""Toy-scale blind face restoration built on a distilled latent consistency sampler."""

__version__ = "0.1.0"
