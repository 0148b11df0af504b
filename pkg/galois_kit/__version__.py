__title__ = "galois_kit"
__description__ = "Exhaustive checks for fuzzy relations, Galois connections, closure operators " \
                  "and concept lattices over finite residuated lattices."
__url__ = "https://pypi.org/project/galois-kit/"
__version__ = "0.1.0"
__author__ = "The galois-kit developers"
__author_email__ = ""
__license__ = "MIT"
__copyright__ = "Copyright 2026 The galois-kit developers"
