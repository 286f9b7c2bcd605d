# utils/__init__.py

from .input_fetcher import InputFetcher
from .parameter_sampler import ParameterSampler, SamplingExhausted

__all__ = ['InputFetcher', 'ParameterSampler', 'SamplingExhausted']
