"""Values printed in the source publication, kept verbatim for comparison."""

# first eight terms of the rank-12 sequence at alpha = 3, as printed
RANK12_ALPHA3_TERMS = (
    "1",
    "-948480",
    "-53329136320512000",
    "-27346122891266847865307136000000",
    "17500141386070121786711926566237801283584",
    "-33194455793953046570787963710047756557989077368249771884544000000000000000",
    "-45938242279866642503910032848229055906321342735599872737079387205334329698182758400000000000000000000",
    "-1884349228191035614337748210439911423091325289948428115149858178594972260987766071615439393817547813525913600000000000000000000000000",
)

# rank-6 period table; None marks the printed dashes
PERIOD_PRIMES = (5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_ROWS = {
    -5: "- 36 60 72 96 108 132 84 180 72 120",
    -4: "12 12 60 36 12 108 132 84 180 36 12",
    -3: "24 36 60 12 96 36 12 168 180 108 240",
    -2: "24 36 12 72 48 108 132 168 12 216 24",
    1: "12 36 60 36 12 108 132 84 60 108 60",
    2: "24 36 60 24 48 36 132 168 180 216 24",
    3: "24 12 60 36 96 108 132 168 180 36 240",
    4: "- 36 60 36 12 108 132 12 36 36 60",
    5: "- 36 60 72 96 108 132 84 36 216 120",
}
RANK6_PERIODS = {
    (a, p): (None if cell == "-" else int(cell))
    for a, row in _ROWS.items()
    for p, cell in zip(PERIOD_PRIMES, row.split())
}

# the curve of the worked rank-8 example and its rescaled twin
RANK8_EXAMPLE_CURVE = (17, -60, -120)      # a1, a2, a3
RANK8_EXAMPLE_VALUES = (-120, -864000, -186624000000)
RANK8_SCALED_VALUES = (-960, -221184000, -6115295232000000)
