from ._egr import Ring, default_corpus, threshold_n_for_t, verify, __version__

__all__ = ["Ring", "default_corpus", "threshold_n_for_t", "verify", "__version__"]
