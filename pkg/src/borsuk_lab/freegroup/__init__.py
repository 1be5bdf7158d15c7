from .group_algebra import GroupAlgebraElement, convolve, homogeneous_components, support_classes
from .norms import (CompressedOperator, NormEstimate, NormInequalityReport, WordBall, check_norm_inequality,
                    truncated_norm, word_ball)
from .quotient import (PARITY, PartitionSpec, Permutation, QuotientMap, build_cover_automaton, build_s3_partition,
                       check_partition_axiom, evaluate_quotient, parity_partition, partition_by_name)
from .words import IDENTITY, Word, commutator_b, count_reduced_words, multiply, reduce, reduced_words

__all__ = [
    "CompressedOperator", "GroupAlgebraElement", "IDENTITY", "NormEstimate", "NormInequalityReport", "PARITY",
    "PartitionSpec", "Permutation", "QuotientMap", "Word", "WordBall", "build_cover_automaton",
    "build_s3_partition", "check_norm_inequality", "check_partition_axiom", "commutator_b", "convolve", "count_reduced_words",
    "evaluate_quotient", "homogeneous_components", "multiply", "parity_partition", "partition_by_name", "reduce",
    "reduced_words", "support_classes", "truncated_norm", "word_ball",
]
