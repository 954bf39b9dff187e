"""
Two-element descent sets
========================

For ``{a, b}`` the coefficients rise, drop once at index ``b - a``, and
rise again. Only a few of them are unimodal, and only four are log-concave.
"""

from nnlab.analysis import doubleton_survey, expected_doubleton_relations, observed_relations
from nnlab.naruse import nn_coefficients

for pair in [(1, 4), (2, 5), (3, 4), (3, 7)]:
    C = nn_coefficients(pair).values
    print(pair, C, " ".join(observed_relations(C)))
    assert observed_relations(C) == expected_doubleton_relations(*pair)

for n in range(4, 11):
    s = doubleton_survey(n)
    print(f"n={n}: {len(s.unimodal_sets)} unimodal, probability {s.unimodal_probability}")

print("log-concave:", doubleton_survey(10).log_concave_sets)
