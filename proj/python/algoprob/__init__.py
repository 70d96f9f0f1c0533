"""Output distributions of small computational models and their rank agreement."""

from algoprob._core import (
    Distribution,
    baseline_rankings,
    ca_distribution,
    ca_evolve,
    cfg_distribution,
    compare,
    consolidate,
    ctm_distribution,
    ctm_distributions,
    fsa_complexity,
    fsa_distribution,
    fsa_distribution_range,
    fsa_pair_count,
    lzw_compressed_length,
    missed_strings,
    nonhalting_tm_distribution,
    pairing,
    pairing_inverse,
    rank_correlation,
    scheme_ids,
    shannon_entropy,
    tm_space_size,
)

__all__ = [
    "Distribution",
    "baseline_rankings",
    "ca_distribution",
    "ca_evolve",
    "cfg_distribution",
    "compare",
    "consolidate",
    "ctm_distribution",
    "ctm_distributions",
    "fsa_complexity",
    "fsa_distribution",
    "fsa_distribution_range",
    "fsa_pair_count",
    "lzw_compressed_length",
    "missed_strings",
    "nonhalting_tm_distribution",
    "pairing",
    "pairing_inverse",
    "rank_correlation",
    "scheme_ids",
    "shannon_entropy",
    "tm_space_size",
]
