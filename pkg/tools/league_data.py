"""Data blocks for the bundled league fixtures.

Each league is described by the final standings snapshot of its
interrupted 2019/20 season (played, wins, draws, losses, goals for,
goals against) together with the pairing structure of the schedule:
which opponent pairs had already met twice when play stopped.

The pairing structure is given in whichever form is best evidenced:

* ``twice_rounds``: leagues whose second half mirrored the first half
  round for round. The listed early-round pairings met again before the
  stop, except for the pairs in ``once_overrides`` whose second meeting
  was called off.
* ``remaining``: leagues where the schedule of the never-played rest of
  the season is known. Every remaining pairing had met exactly once, and
  every other pair twice.
* ``hard_twice`` / ``hard_once`` plus completion: leagues where only part
  of the pairing structure is securely known. The builder completes the
  twice-met graph to the exact per-team degrees implied by the match
  counts, honouring the known pairs and known exclusions.

Individual scorelines, venues and dates in the generated fixtures are
synthetic. Per-team aggregates and the pairing structure above are the
faithful part; checks in ``build_fixtures.py`` hold them to the frozen
totals below.
"""

# ---------------------------------------------------------------------------
# Germany, 2019/20, stopped after round 25 (one round-24 match unplayed)

GERMANY_TEAMS = {
    "FCB": "Bayern Munich",
    "BVB": "Borussia Dortmund",
    "RBL": "RB Leipzig",
    "BMG": "Borussia Mönchengladbach",
    "B04": "Bayer Leverkusen",
    "S04": "Schalke 04",
    "WOB": "VfL Wolfsburg",
    "SCF": "SC Freiburg",
    "TSG": "1899 Hoffenheim",
    "KOE": "1. FC Köln",
    "FCU": "Union Berlin",
    "SGE": "Eintracht Frankfurt",
    "BSC": "Hertha BSC",
    "FCA": "FC Augsburg",
    "M05": "Mainz 05",
    "F95": "Fortuna Düsseldorf",
    "SVW": "Werder Bremen",
    "SCP": "SC Paderborn",
}

# alias: (played, wins, draws, losses, goals for, goals against)
GERMANY_ROWS = [
    ("FCB", 25, 17, 4, 4, 73, 26),
    ("BVB", 25, 15, 6, 4, 68, 33),
    ("RBL", 25, 14, 8, 3, 62, 26),
    ("BMG", 25, 15, 4, 6, 49, 30),
    ("B04", 25, 14, 5, 6, 45, 30),
    ("S04", 25, 9, 10, 6, 33, 36),
    ("WOB", 25, 9, 9, 7, 34, 30),
    ("SCF", 25, 10, 6, 9, 34, 33),
    ("TSG", 25, 10, 5, 10, 35, 43),
    ("KOE", 25, 10, 2, 13, 39, 45),
    ("FCU", 25, 9, 3, 13, 32, 41),
    ("SGE", 24, 8, 4, 12, 38, 41),
    ("BSC", 25, 7, 7, 11, 32, 48),
    ("FCA", 25, 7, 6, 12, 36, 52),
    ("M05", 25, 8, 2, 15, 34, 53),
    ("F95", 25, 5, 7, 13, 27, 50),
    ("SVW", 24, 4, 6, 14, 27, 55),
    ("SCP", 25, 4, 4, 17, 30, 56),
]

# First-half rounds 1..8; the mirrored second meetings all fell before the
# stop, except Frankfurt vs Bremen whose return match was never played.
GERMANY_TWICE_ROUNDS = [
    [("FCB", "BSC"), ("BVB", "FCA"), ("B04", "SCP"), ("WOB", "KOE"), ("SVW", "F95"),
     ("SCF", "M05"), ("BMG", "S04"), ("SGE", "TSG"), ("FCU", "RBL")],
    [("KOE", "BVB"), ("S04", "FCB"), ("BSC", "WOB"), ("SCP", "SCF"), ("M05", "BMG"),
     ("TSG", "SVW"), ("RBL", "SGE"), ("F95", "B04"), ("FCA", "FCU")],
    [("FCU", "BVB"), ("FCB", "M05"), ("BMG", "RBL"), ("S04", "BSC"), ("SVW", "FCA"),
     ("SGE", "F95"), ("B04", "TSG"), ("SCP", "WOB"), ("SCF", "KOE")],
    [("RBL", "FCB"), ("BVB", "B04"), ("KOE", "BMG"), ("SCP", "S04"), ("BSC", "M05"),
     ("WOB", "F95"), ("FCA", "SGE"), ("FCU", "SVW"), ("SCF", "TSG")],
    [("SGE", "BVB"), ("SVW", "RBL"), ("FCB", "KOE"), ("BMG", "F95"), ("TSG", "WOB"),
     ("FCU", "B04"), ("S04", "M05"), ("BSC", "SCP"), ("SCF", "FCA")],
    [("BVB", "SVW"), ("RBL", "S04"), ("SCP", "FCB"), ("KOE", "BSC"), ("M05", "WOB"),
     ("FCU", "SGE"), ("FCA", "B04"), ("BMG", "TSG"), ("SCF", "F95")],
    [("SCF", "BVB"), ("B04", "RBL"), ("FCB", "TSG"), ("BMG", "FCA"), ("SGE", "SVW"),
     ("BSC", "F95"), ("FCU", "WOB"), ("S04", "KOE"), ("M05", "SCP")],
    [("BVB", "BMG"), ("RBL", "WOB"), ("FCA", "FCB"), ("FCU", "SCF"), ("SGE", "B04"),
     ("SVW", "BSC"), ("KOE", "SCP"), ("S04", "TSG"), ("M05", "F95")],
]

GERMANY_ONCE_OVERRIDES = [("SGE", "SVW")]

# Frozen cross-checks: points still to be earned against each club's
# future (met-once) opponents, for the two title rivals.
GERMANY_FUTURE_POINTS = {"BVB": 305, "RBL": 273}

# ---------------------------------------------------------------------------
# Italy, 2019/20, stopped after round 26 (four round-25 matches unplayed)

ITALY_TEAMS = {
    "JUV": "Juventus",
    "LAZ": "Lazio",
    "INT": "Inter",
    "ATA": "Atalanta",
    "ROM": "Roma",
    "NAP": "Napoli",
    "MIL": "Milan",
    "VER": "Hellas Verona",
    "PAR": "Parma",
    "BOL": "Bologna",
    "SAS": "Sassuolo",
    "CAG": "Cagliari",
    "FIO": "Fiorentina",
    "UDI": "Udinese",
    "TOR": "Torino",
    "SAM": "Sampdoria",
    "GEN": "Genoa",
    "LEC": "Lecce",
    "SPA": "SPAL",
    "BRE": "Brescia",
}

ITALY_ROWS = [
    ("JUV", 26, 20, 3, 3, 50, 24),
    ("LAZ", 26, 19, 5, 2, 60, 23),
    ("INT", 25, 16, 6, 3, 49, 24),
    ("ATA", 25, 14, 6, 5, 70, 34),
    ("ROM", 26, 13, 6, 7, 51, 35),
    ("NAP", 26, 11, 6, 9, 41, 36),
    ("MIL", 26, 10, 6, 10, 28, 34),
    ("VER", 25, 8, 11, 6, 29, 26),
    ("PAR", 25, 10, 5, 10, 32, 31),
    ("BOL", 26, 9, 7, 10, 38, 42),
    ("SAS", 25, 9, 5, 11, 41, 39),
    ("CAG", 25, 8, 8, 9, 41, 42),
    ("FIO", 26, 7, 9, 10, 32, 36),
    ("UDI", 26, 7, 7, 12, 27, 37),
    ("TOR", 25, 8, 3, 14, 28, 45),
    ("SAM", 25, 7, 5, 13, 28, 44),
    ("GEN", 26, 6, 7, 13, 31, 47),
    ("LEC", 26, 7, 4, 15, 34, 60),
    ("SPA", 26, 5, 3, 18, 20, 44),
    ("BRE", 26, 4, 4, 18, 22, 49),
]

ITALY_TWICE_ROUNDS = [
    [("PAR", "JUV"), ("INT", "LEC"), ("FIO", "NAP"), ("UDI", "MIL"), ("CAG", "BRE"),
     ("VER", "BOL"), ("TOR", "SAS"), ("SPA", "ATA"), ("SAM", "LAZ"), ("ROM", "GEN")],
    [("JUV", "NAP"), ("CAG", "INT"), ("LAZ", "ROM"), ("MIL", "BRE"), ("BOL", "SPA"),
     ("ATA", "TOR"), ("GEN", "FIO"), ("PAR", "UDI"), ("LEC", "VER"), ("SAS", "SAM")],
    [("FIO", "JUV"), ("INT", "UDI"), ("NAP", "SAM"), ("SPA", "LAZ"), ("VER", "MIL"),
     ("ROM", "SAS"), ("BRE", "BOL"), ("GEN", "ATA"), ("TOR", "LEC"), ("CAG", "PAR")],
    [("MIL", "INT"), ("JUV", "VER"), ("LEC", "NAP"), ("LAZ", "PAR"), ("ATA", "FIO"),
     ("BOL", "ROM"), ("SAS", "SPA"), ("UDI", "BRE"), ("TOR", "SAM"), ("CAG", "GEN")],
    [("BRE", "JUV"), ("INT", "LAZ"), ("NAP", "CAG"), ("ROM", "ATA"), ("TOR", "MIL"),
     ("VER", "UDI"), ("FIO", "SAM"), ("GEN", "BOL"), ("LEC", "SAS"), ("SPA", "PAR")],
    [("SAM", "INT"), ("SAS", "ATA"), ("CAG", "VER"), ("PAR", "TOR"), ("JUV", "SPA"),
     ("LAZ", "GEN"), ("MIL", "FIO"), ("NAP", "BRE"), ("LEC", "ROM"), ("UDI", "BOL")],
    [("INT", "JUV"), ("BOL", "LAZ"), ("TOR", "NAP"), ("GEN", "MIL"), ("FIO", "UDI"),
     ("ROM", "CAG"), ("ATA", "LEC"), ("VER", "SAM"), ("SPA", "BRE"), ("SAS", "PAR")],
]

ITALY_ONCE_OVERRIDES = [("INT", "SAM"), ("ATA", "SAS"), ("VER", "CAG"), ("TOR", "PAR")]

# ---------------------------------------------------------------------------
# England, 2019/20, stopped after round 29 (four clubs one match behind)

ENGLAND_TEAMS = {
    "LIV": "Liverpool",
    "MCI": "Manchester City",
    "LEI": "Leicester City",
    "CHE": "Chelsea",
    "MUN": "Manchester United",
    "SHU": "Sheffield United",
    "WOL": "Wolverhampton",
    "TOT": "Tottenham Hotspur",
    "ARS": "Arsenal",
    "BUR": "Burnley",
    "CRY": "Crystal Palace",
    "EVE": "Everton",
    "NEW": "Newcastle United",
    "SOU": "Southampton",
    "BHA": "Brighton & Hove Albion",
    "WHU": "West Ham United",
    "WAT": "Watford",
    "BOU": "Bournemouth",
    "AVL": "Aston Villa",
    "NOR": "Norwich City",
}

ENGLAND_ROWS = [
    ("LIV", 29, 27, 1, 1, 66, 21),
    ("MCI", 28, 18, 3, 7, 68, 31),
    ("LEI", 29, 16, 5, 8, 58, 28),
    ("CHE", 29, 14, 6, 9, 51, 39),
    ("MUN", 29, 12, 9, 8, 44, 30),
    ("SHU", 28, 11, 10, 7, 30, 25),
    ("WOL", 29, 10, 13, 6, 41, 34),
    ("TOT", 29, 11, 8, 10, 47, 40),
    ("ARS", 28, 9, 13, 6, 40, 36),
    ("BUR", 29, 11, 6, 12, 34, 40),
    ("CRY", 29, 10, 9, 10, 26, 32),
    ("EVE", 29, 10, 7, 12, 37, 46),
    ("NEW", 29, 9, 8, 12, 25, 41),
    ("SOU", 29, 10, 4, 15, 35, 52),
    ("BHA", 29, 6, 11, 12, 32, 40),
    ("WHU", 29, 7, 6, 16, 35, 50),
    ("WAT", 29, 6, 9, 14, 27, 44),
    ("BOU", 29, 7, 6, 16, 29, 47),
    ("AVL", 28, 7, 4, 17, 34, 56),
    ("NOR", 29, 5, 6, 18, 25, 52),
]

# The never-played rest of the schedule; each listed pair had met once.
ENGLAND_REMAINING = {
    "LIV": ["EVE", "CRY", "MCI", "AVL", "BHA", "BUR", "ARS", "CHE", "NEW"],
    "MCI": ["ARS", "BUR", "CHE", "LIV", "SOU", "NEW", "BHA", "BOU", "WAT", "NOR"],
    "LEI": ["WAT", "BHA", "EVE", "CRY", "ARS", "BOU", "SHU", "TOT", "MUN"],
    "CHE": ["AVL", "MCI", "WHU", "WAT", "CRY", "SHU", "NOR", "LIV", "WOL"],
    "MUN": ["TOT", "SHU", "BHA", "BOU", "AVL", "SOU", "CRY", "WHU", "LEI"],
    "SHU": ["AVL", "NEW", "MUN", "TOT", "BUR", "WOL", "CHE", "LEI", "EVE", "SOU"],
    "WOL": ["WHU", "BOU", "AVL", "ARS", "SHU", "EVE", "BUR", "CRY", "CHE"],
    "TOT": ["MUN", "WHU", "SHU", "EVE", "BOU", "ARS", "NEW", "LEI", "CRY"],
    "ARS": ["MCI", "BHA", "SOU", "NOR", "WOL", "LEI", "TOT", "LIV", "AVL", "WAT"],
    "BUR": ["MCI", "WAT", "CRY", "SHU", "WHU", "LIV", "WOL", "NOR", "BHA"],
    "CRY": ["BOU", "LIV", "BUR", "LEI", "CHE", "AVL", "MUN", "WOL", "TOT"],
    "EVE": ["LIV", "NOR", "LEI", "TOT", "SOU", "WOL", "AVL", "SHU", "BOU"],
    "NEW": ["SHU", "AVL", "BOU", "WHU", "MCI", "WAT", "TOT", "BHA", "LIV"],
    "SOU": ["NOR", "ARS", "WAT", "MCI", "EVE", "MUN", "BHA", "BOU", "SHU"],
    "BHA": ["ARS", "LEI", "MUN", "NOR", "LIV", "MCI", "SOU", "NEW", "BUR"],
    "WHU": ["WOL", "TOT", "CHE", "NEW", "BUR", "NOR", "WAT", "MUN", "AVL"],
    "WAT": ["LEI", "BUR", "SOU", "CHE", "NOR", "NEW", "MCI", "WHU", "ARS"],
    "BOU": ["CRY", "WOL", "NEW", "MUN", "TOT", "LEI", "MCI", "SOU", "EVE"],
    "AVL": ["SHU", "CHE", "NEW", "WOL", "LIV", "MUN", "CRY", "EVE", "ARS", "WHU"],
    "NOR": ["SOU", "EVE", "ARS", "BHA", "WAT", "WHU", "CHE", "BUR", "MCI"],
}

# ---------------------------------------------------------------------------
# Spain, 2019/20, stopped after round 27 (complete)

SPAIN_TEAMS = {
    "BAR": "Barcelona",
    "RMA": "Real Madrid",
    "SEV": "Sevilla",
    "RSO": "Real Sociedad",
    "GET": "Getafe",
    "ATM": "Atlético Madrid",
    "VAL": "Valencia",
    "VIL": "Villarreal",
    "GRA": "Granada",
    "ATH": "Athletic Bilbao",
    "OSA": "Osasuna",
    "BET": "Real Betis",
    "LEV": "Levante",
    "ALA": "Alavés",
    "VLL": "Valladolid",
    "EIB": "Eibar",
    "CEL": "Celta Vigo",
    "MLL": "Mallorca",
    "LEG": "Leganés",
    "ESP": "Espanyol",
}

SPAIN_ROWS = [
    ("BAR", 27, 18, 4, 5, 63, 31),
    ("RMA", 27, 16, 8, 3, 49, 19),
    ("SEV", 27, 13, 8, 6, 39, 29),
    ("RSO", 27, 14, 4, 9, 47, 34),
    ("GET", 27, 13, 7, 7, 39, 26),
    ("ATM", 27, 11, 12, 4, 31, 19),
    ("VAL", 27, 11, 9, 7, 40, 40),
    ("VIL", 27, 11, 5, 11, 44, 40),
    ("GRA", 27, 11, 5, 11, 33, 35),
    ("ATH", 27, 9, 10, 8, 31, 26),
    ("OSA", 27, 8, 10, 9, 33, 39),
    ("BET", 27, 8, 9, 10, 40, 44),
    ("LEV", 27, 9, 6, 12, 36, 42),
    ("ALA", 27, 8, 8, 11, 31, 42),
    ("VLL", 27, 6, 11, 10, 23, 33),
    ("EIB", 27, 7, 6, 14, 28, 42),
    ("CEL", 27, 5, 11, 11, 27, 37),
    ("MLL", 27, 7, 4, 16, 34, 49),
    ("LEG", 27, 5, 8, 14, 22, 41),
    ("ESP", 27, 5, 5, 17, 24, 46),
]

# Pairs whose second meeting is securely placed before the stop.
SPAIN_HARD_TWICE = [
    ("RMA", "SEV"), ("RMA", "VLL"), ("RMA", "ATM"), ("RMA", "OSA"), ("RMA", "CEL"),
    ("RMA", "LEV"), ("RMA", "BAR"), ("RMA", "BET"),
    ("BAR", "GRA"), ("BAR", "VAL"), ("BAR", "LEV"), ("BAR", "BET"), ("BAR", "GET"),
    ("BAR", "EIB"), ("BAR", "RSO"),
    ("ATM", "EIB"), ("ATM", "LEG"), ("ATM", "GRA"), ("ATM", "VIL"), ("ATM", "VAL"),
    ("ATM", "SEV"), ("ATM", "ESP"),
    ("SEV", "GRA"),
    ("GET", "BET"), ("GET", "VAL"), ("GET", "LEG"),
    ("VAL", "MLL"),
    ("EIB", "RSO"),
    ("RSO", "ATH"),
    ("ATH", "ESP"),
]

# Pairs whose second meeting is securely placed after the stop.
SPAIN_HARD_ONCE = [
    # final pre-stop weekend left these first-meeting-only pairs; the
    # resumption opened with them
    ("SEV", "BET"), ("GRA", "GET"), ("VAL", "LEV"), ("ESP", "ALA"), ("CEL", "VIL"),
    ("LEG", "VLL"), ("MLL", "BAR"), ("ATH", "ATM"), ("RMA", "EIB"), ("RSO", "OSA"),
    ("BAR", "LEG"), ("RMA", "VAL"), ("LEV", "SEV"), ("GET", "ESP"), ("VIL", "MLL"),
    ("CEL", "ALA"), ("BET", "GRA"), ("OSA", "ATM"), ("RSO", "VLL"), ("EIB", "ATH"),
    ("BAR", "SEV"), ("BAR", "ATH"), ("BAR", "CEL"), ("BAR", "ATM"), ("BAR", "VLL"),
    ("BAR", "ESP"), ("BAR", "OSA"), ("BAR", "ALA"), ("BAR", "VIL"),
    ("RMA", "RSO"), ("RMA", "MLL"), ("RMA", "ESP"), ("RMA", "GET"), ("RMA", "ATH"),
    ("RMA", "ALA"), ("RMA", "GRA"), ("RMA", "VIL"), ("RMA", "LEG"),
    ("ATM", "OSA"), ("ATM", "VLL"), ("ATM", "ALA"), ("ATM", "MLL"), ("ATM", "CEL"),
    ("ATM", "BET"), ("ATM", "GET"), ("ATM", "RSO"), ("ATM", "LEV"),
    ("SEV", "VLL"), ("SEV", "ESP"), ("SEV", "EIB"), ("SEV", "ATH"), ("SEV", "MLL"),
    ("SEV", "VAL"),
    ("GRA", "ATH"), ("GET", "LEV"), ("OSA", "MLL"),
]

# ---------------------------------------------------------------------------
# France, 2019/20, stopped after round 28 (one round-28 match unplayed)

FRANCE_TEAMS = {
    "PSG": "Paris Saint-Germain",
    "OM": "Marseille",
    "REN": "Rennes",
    "LIL": "Lille",
    "REI": "Reims",
    "NIC": "Nice",
    "LYO": "Lyon",
    "MTP": "Montpellier",
    "MON": "Monaco",
    "ANG": "Angers",
    "STR": "Strasbourg",
    "BOR": "Bordeaux",
    "NAN": "Nantes",
    "BRE": "Brest",
    "MET": "Metz",
    "DIJ": "Dijon",
    "STE": "Saint-Étienne",
    "NIM": "Nîmes",
    "AMI": "Amiens",
    "TOU": "Toulouse",
}

FRANCE_ROWS = [
    ("PSG", 27, 22, 2, 3, 75, 24),
    ("OM", 28, 16, 8, 4, 41, 29),
    ("REN", 28, 15, 5, 8, 38, 24),
    ("LIL", 28, 15, 4, 9, 35, 27),
    ("REI", 28, 10, 11, 7, 26, 21),
    ("NIC", 28, 11, 8, 9, 41, 38),
    ("LYO", 28, 11, 7, 10, 42, 27),
    ("MTP", 28, 11, 7, 10, 35, 34),
    ("MON", 28, 11, 7, 10, 44, 44),
    ("ANG", 28, 11, 6, 11, 28, 33),
    ("STR", 27, 11, 5, 11, 32, 32),
    ("BOR", 28, 9, 10, 9, 40, 34),
    ("NAN", 28, 11, 4, 13, 28, 31),
    ("BRE", 28, 8, 10, 10, 34, 37),
    ("MET", 28, 8, 10, 10, 27, 35),
    ("DIJ", 28, 7, 9, 12, 26, 37),
    ("STE", 28, 8, 6, 14, 28, 45),
    ("NIM", 28, 7, 6, 15, 29, 44),
    ("AMI", 28, 4, 11, 13, 33, 50),
    ("TOU", 28, 3, 4, 21, 22, 58),
]

FRANCE_HARD_TWICE = [
    ("PSG", "MON"), ("PSG", "LIL"), ("PSG", "MTP"), ("PSG", "LYO"), ("PSG", "AMI"),
    ("PSG", "BOR"), ("PSG", "DIJ"), ("PSG", "NAN"),
    ("LIL", "OM"), ("LIL", "STR"), ("LIL", "LYO"), ("LIL", "REN"), ("LIL", "MON"),
    ("LIL", "ANG"), ("LIL", "NIM"), ("LIL", "TOU"),
    ("REN", "OM"), ("REN", "NAN"), ("REN", "BRE"), ("REN", "REI"), ("REN", "NIC"),
    ("REN", "STE"), ("REN", "NIM"), ("REN", "AMI"),
    ("LYO", "STE"), ("LYO", "MET"),
    ("OM", "STE"), ("OM", "NIM"), ("OM", "TOU"), ("OM", "AMI"),
    ("MTP", "OM"),
]

FRANCE_HARD_ONCE = [
    # the championship pairing was scheduled again only for the spring
    ("OM", "PSG"),
    ("PSG", "REN"), ("PSG", "STR"),
]

# Frozen cross-checks: points already scored by the future (met-once)
# opponents of the two clubs fighting for the final continental slot.
FRANCE_FUTURE_POINTS = {"LIL": 347, "REN": 379}

# ---------------------------------------------------------------------------
# Netherlands, 2019/20, stopped after round 26 (two matches unplayed)

NETHERLANDS_TEAMS = {
    "AJA": "Ajax",
    "AZ": "AZ Alkmaar",
    "FEY": "Feyenoord",
    "PSV": "PSV Eindhoven",
    "WIL": "Willem II",
    "UTR": "FC Utrecht",
    "VIT": "Vitesse",
    "HER": "Heracles Almelo",
    "GRO": "FC Groningen",
    "SPR": "Sparta Rotterdam",
    "HEE": "Heerenveen",
    "EMM": "FC Emmen",
    "VVV": "VVV-Venlo",
    "TWE": "FC Twente",
    "PEC": "PEC Zwolle",
    "FOR": "Fortuna Sittard",
    "ADO": "ADO Den Haag",
    "RKC": "RKC Waalwijk",
}

NETHERLANDS_ROWS = [
    ("AJA", 25, 18, 2, 5, 68, 23),
    ("AZ", 25, 17, 5, 3, 59, 21),
    ("FEY", 25, 15, 5, 5, 51, 33),
    ("PSV", 26, 14, 7, 5, 54, 29),
    ("WIL", 26, 13, 5, 8, 44, 34),
    ("UTR", 25, 12, 5, 8, 45, 33),
    ("VIT", 26, 11, 8, 7, 43, 34),
    ("HER", 26, 10, 6, 10, 41, 41),
    ("GRO", 26, 9, 8, 9, 32, 26),
    ("HEE", 26, 9, 6, 11, 33, 38),
    ("SPR", 26, 9, 6, 11, 35, 42),
    ("EMM", 26, 8, 8, 10, 38, 57),
    ("VVV", 26, 8, 4, 14, 28, 46),
    ("TWE", 26, 7, 6, 13, 32, 48),
    ("PEC", 26, 7, 5, 14, 30, 45),
    ("FOR", 26, 7, 5, 14, 31, 50),
    ("ADO", 26, 5, 4, 17, 27, 56),
    ("RKC", 26, 4, 3, 19, 21, 56),
]

NETHERLANDS_HARD_TWICE = [
    ("AJA", "AZ"), ("AJA", "PSV"), ("AZ", "PSV"),
]

NETHERLANDS_HARD_ONCE = [
    # the two storm-hit catch-up matches were never replayed
    ("UTR", "AJA"), ("AZ", "FEY"),
    ("AJA", "FEY"),
]
