"""Published reference decimals for the mod-p census densities, 7 <= p < 150.

Used by the table commands to cross-check freshly computed densities: the
ordinary table holds #{good ordinary non-anomalous pairs}/p^2 and the
anomalous table #{anomalous pairs}/p^2, both quoted to 15 digits.  Stored as
strings and parsed exactly; agreement tolerance is 10^-12.
"""

from fractions import Fraction

ORDINARY_DENSITY = {
    7: "0.653061224489796",
    11: "0.702479338842975",
    13: "0.781065088757396",
    17: "0.802768166089965",
    19: "0.789473684210526",
    23: "0.790170132325142",
    29: "0.832342449464923",
    31: "0.842872008324662",
    37: "0.915997078159240",
    41: "0.868530636525877",
    43: "0.874526771227691",
    47: "0.853779990946129",
    53: "0.897828408686365",
    59: "0.866417696064349",
    61: "0.900295619457135",
    67: "0.940966807752283",
    71: "0.867883356476890",
    73: "0.932257459185588",
    79: "0.887357795225124",
    83: "0.898679053563652",
    89: "0.899886377982578",
    97: "0.943777234562653",
    101: "0.911675325948436",
    103: "0.913375435950608",
    107: "0.925845051969604",
    109: "0.945374968437000",
    113: "0.929751742501370",
    127: "0.936139872279745",
    131: "0.897674960666628",
    137: "0.952847780915339",
    139: "0.935665855804565",
    149: "0.933291293184992",
}

ANOMALOUS_DENSITY = {
    7: "0.0816326530612245",
    11: "0.0413223140495868",
    13: "0.0710059171597633",
    17: "0.0276816608996540",
    19: "0.0581717451523546",
    23: "0.0415879017013233",
    29: "0.0332936979785969",
    31: "0.0312174817898023",
    37: "0.0306793279766253",
    41: "0.0118976799524093",
    43: "0.0567874526771228",
    47: "0.0208239022181983",
    53: "0.0277678889284443",
    59: "0.0166618787704683",
    61: "0.0349368449341575",
    67: "0.0147026063711294",
    71: "0.0208292005554453",
    73: "0.0270219553387127",
    79: "0.0374939913475405",
    83: "0.0178545507330527",
    89: "0.0222194167403106",
    97: "0.0255074928260176",
    101: "0.00980296049406921",
    103: "0.0288434348194929",
    107: "0.00925845051969604",
    109: "0.0181802878545577",
    113: "0.0263137285613595",
    127: "0.0169260338520677",
    131: "0.0189382903094225",
    137: "0.0108689860940913",
    139: "0.0142849748977796",
    149: "0.0133327327597856",
}

REFERENCE_PRIMES = tuple(sorted(ORDINARY_DENSITY))
COMPARISON_TOLERANCE = Fraction(1, 10**12)


def reference_row(p: int) -> tuple[Fraction, Fraction]:
    """Exact parses of the quoted (ordinary, anomalous) densities at p."""
    return Fraction(ORDINARY_DENSITY[p]), Fraction(ANOMALOUS_DENSITY[p])
