"""
softguess - Soft guessing under log-loss with errors allowed.

Modules:
    core: Probability mass functions, file input and report export
    entropy: Renyi, smooth Renyi and conditional entropies
    guessing: Optimal soft-guessing strategies and moment bounds
    coding: Optimal variable-length lossy codes and cumulant bounds
    asymptotics: Block-length expansions of the moments and cumulants
    cli: Command-line interface and selftest
    i18n: Internationalization
"""

__version__ = "1.0.0"
__author__ = "softguess contributors"
__license__ = "MIT"
