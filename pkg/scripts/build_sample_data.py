#!/usr/bin/env python3
"""Regenerate the bundled sample series under data/.

The CSVs mimic FRED observation exports: effective federal funds rate
(monthly), two year-over-year inflation measures (quarterly, percent;
one CPI-flavored, one GDP-deflator-flavored), and real plus potential
GDP (quarterly, billions of 2012 dollars).  Values are approximate
reconstructions of the published US history from quarterly anchor
tables, NOT a verbatim download: close enough for realistic estimation
behavior, but any coefficient comparison against published estimates
needs a vintage tolerance.

Real GDP is constructed as potential * (1 + gap/100) from a smooth
potential-output trend and a CBO-flavored output-gap table, so the
panel's derived gap matches the anchor table up to rounding.

Usage: python scripts/build_sample_data.py [outdir]
"""

import sys
from pathlib import Path

# Effective federal funds rate, quarterly averages (percent).
# The CSV is emitted monthly (constant within the quarter) to exercise
# monthly-to-quarterly mean aggregation at ingest.
FEDFUNDS = {
    1954: (None, None, 1.00, 1.00),
    1955: (1.35, 1.50, 1.90, 2.35),
    1956: (2.50, 2.70, 2.80, 2.90),
    1957: (2.95, 3.00, 3.20, 3.30),
    1958: (2.20, 0.90, 1.20, 2.00),
    1959: (2.60, 3.20, 3.50, 4.00),
    1960: (3.90, 3.70, 2.90, 2.30),
    1961: (2.00, 1.75, 1.70, 2.40),
    1962: (2.45, 2.60, 2.85, 2.90),
    1963: (3.00, 3.00, 3.30, 3.40),
    1964: (3.45, 3.50, 3.50, 3.60),
    1965: (3.95, 4.05, 4.10, 4.20),
    1966: (4.60, 4.90, 5.40, 5.55),
    1967: (4.60, 4.00, 3.90, 4.20),
    1968: (5.00, 5.80, 6.00, 5.90),
    1969: (6.60, 8.20, 9.00, 9.00),
    1970: (8.60, 7.90, 6.70, 5.40),
    1971: (3.90, 4.60, 5.50, 4.70),
    1972: (3.50, 4.30, 4.70, 5.10),
    1973: (6.50, 7.80, 10.50, 10.00),
    1974: (9.30, 11.30, 12.10, 9.40),
    1975: (6.30, 5.40, 6.20, 5.40),
    1976: (4.80, 5.20, 5.30, 4.90),
    1977: (4.70, 5.20, 5.80, 6.50),
    1978: (6.80, 7.30, 8.10, 9.60),
    1979: (10.10, 10.20, 10.90, 13.60),
    1980: (15.00, 12.70, 9.80, 15.90),
    1981: (16.60, 17.80, 17.60, 13.60),
    1982: (14.20, 14.50, 11.00, 9.30),
    1983: (8.65, 8.80, 9.45, 9.45),
    1984: (9.70, 10.60, 11.40, 9.30),
    1985: (8.50, 7.90, 7.90, 8.10),
    1986: (7.85, 6.90, 6.20, 6.30),
    1987: (6.20, 6.65, 6.85, 6.90),
    1988: (6.65, 7.15, 8.00, 8.45),
    1989: (9.15, 9.70, 9.10, 8.60),
    1990: (8.25, 8.25, 8.15, 7.75),
    1991: (6.40, 5.85, 5.60, 4.80),
    1992: (4.00, 3.75, 3.25, 3.00),
    1993: (3.00, 3.00, 3.00, 3.00),
    1994: (3.20, 4.00, 4.50, 5.20),
    1995: (5.95, 6.00, 5.80, 5.70),
    1996: (5.40, 5.25, 5.30, 5.30),
    1997: (5.30, 5.50, 5.50, 5.50),
    1998: (5.50, 5.50, 5.50, 4.90),
    1999: (4.75, 4.75, 5.10, 5.30),
    2000: (5.70, 6.25, 6.50, 6.50),
    2001: (5.60, 4.30, 3.50, 2.10),
    2002: (1.75, 1.75, 1.75, 1.40),
    2003: (1.25, 1.25, 1.00, 1.00),
    2004: (1.00, 1.00, 1.45, 1.95),
    2005: (2.45, 2.95, 3.45, 3.95),
    2006: (4.45, 4.90, 5.25, 5.25),
    2007: (5.25, 5.25, 5.05, 4.50),
    2008: (3.20, 2.10, 1.95, 0.50),
    2009: (0.18, 0.18, 0.16, 0.12),
    2010: (0.13, 0.19, 0.19, 0.19),
    2011: (0.15, 0.09, 0.08, 0.07),
    2012: (0.10, 0.15, 0.14, 0.16),
    2013: (0.14, 0.12, 0.08, 0.09),
    2014: (0.07, 0.09, 0.09, 0.10),
    2015: (0.11, 0.13, 0.14, 0.16),
    2016: (0.36, 0.37, 0.40, 0.45),
    2017: (0.70, 0.95, 1.15, 1.20),
    2018: (1.45, 1.74, 1.92, 2.22),
    2019: (2.40, None, None, None),
}

# Year-over-year CPI inflation, quarterly averages (percent).
INFLATION_CPI = {
    1953: (0.9, 1.1, 0.9, 0.6),
    1954: (1.1, 0.4, -0.2, -0.6),
    1955: (-0.7, -0.7, -0.3, 0.3),
    1956: (0.4, 0.9, 1.9, 2.9),
    1957: (3.3, 3.6, 3.5, 3.0),
    1958: (3.4, 3.2, 2.4, 1.8),
    1959: (0.7, 0.4, 0.7, 1.4),
    1960: (1.4, 1.7, 1.4, 1.4),
    1961: (1.4, 0.9, 1.2, 0.7),
    1962: (0.9, 1.3, 1.2, 1.3),
    1963: (1.3, 1.1, 1.3, 1.5),
    1964: (1.5, 1.3, 1.3, 1.2),
    1965: (1.1, 1.5, 1.7, 1.9),
    1966: (2.4, 2.8, 3.2, 3.5),
    1967: (3.1, 2.7, 2.7, 3.0),
    1968: (3.7, 4.0, 4.4, 4.6),
    1969: (4.9, 5.4, 5.6, 5.9),
    1970: (6.1, 6.0, 5.7, 5.5),
    1971: (4.8, 4.4, 4.3, 3.5),
    1972: (3.4, 3.1, 3.1, 3.4),
    1973: (3.9, 5.4, 6.8, 8.5),
    1974: (10.0, 10.7, 11.5, 12.1),
    1975: (11.0, 9.5, 8.8, 7.3),
    1976: (6.3, 6.0, 5.5, 5.0),
    1977: (5.9, 6.8, 6.7, 6.6),
    1978: (6.4, 7.0, 7.9, 8.9),
    1979: (9.9, 10.8, 11.8, 12.8),
    1980: (14.1, 14.4, 12.9, 12.6),
    1981: (11.3, 9.8, 10.8, 9.4),
    1982: (7.6, 6.8, 5.9, 4.5),
    1983: (3.6, 3.3, 2.6, 3.3),
    1984: (4.6, 4.3, 4.3, 4.1),
    1985: (3.5, 3.7, 3.3, 3.8),
    1986: (3.1, 1.6, 1.6, 1.3),
    1987: (2.2, 3.8, 4.3, 4.5),
    1988: (4.0, 4.1, 4.1, 4.3),
    1989: (4.8, 5.2, 4.7, 4.6),
    1990: (5.2, 4.6, 5.6, 6.2),
    1991: (5.3, 4.9, 3.8, 3.0),
    1992: (2.9, 3.1, 3.1, 3.0),
    1993: (3.2, 3.1, 2.8, 2.7),
    1994: (2.5, 2.4, 2.9, 2.7),
    1995: (2.9, 3.1, 2.6, 2.6),
    1996: (2.8, 2.9, 2.9, 3.2),
    1997: (2.9, 2.3, 2.2, 1.9),
    1998: (1.5, 1.6, 1.6, 1.5),
    1999: (1.7, 2.1, 2.3, 2.6),
    2000: (3.2, 3.3, 3.5, 3.4),
    2001: (3.4, 3.4, 2.7, 1.9),
    2002: (1.3, 1.3, 1.6, 2.2),
    2003: (2.9, 2.1, 2.2, 1.9),
    2004: (1.8, 2.9, 2.7, 3.3),
    2005: (3.0, 2.9, 3.8, 3.7),
    2006: (3.6, 4.0, 3.3, 1.9),
    2007: (2.4, 2.6, 2.4, 4.0),
    2008: (4.1, 4.4, 5.3, 1.6),
    2009: (0.0, -1.2, -1.6, 1.5),
    2010: (2.4, 1.8, 1.2, 1.2),
    2011: (2.1, 3.4, 3.8, 3.3),
    2012: (2.8, 1.9, 1.7, 1.9),
    2013: (1.7, 1.4, 1.6, 1.2),
    2014: (1.4, 2.1, 1.8, 1.2),
    2015: (-0.1, 0.0, 0.1, 0.5),
    2016: (1.1, 1.1, 1.1, 1.8),
    2017: (2.5, 1.9, 2.0, 2.1),
    2018: (2.2, 2.7, 2.6, 2.2),
    2019: (1.6, None, None, None),
}

# Year-over-year GDP-deflator inflation, quarterly averages (percent).
# Smoother than CPI, with a flatter 1979-81 peak and no 2009 deflation.
INFLATION_DEFLATOR = {
    1953: (1.2, 1.3, 1.5, 1.5),
    1954: (1.6, 1.4, 1.1, 0.9),
    1955: (1.2, 1.4, 1.7, 2.0),
    1956: (2.4, 2.8, 3.2, 3.5),
    1957: (3.6, 3.5, 3.4, 3.2),
    1958: (2.7, 2.4, 2.1, 1.9),
    1959: (1.6, 1.5, 1.5, 1.4),
    1960: (1.4, 1.4, 1.4, 1.3),
    1961: (1.2, 1.1, 1.1, 1.2),
    1962: (1.3, 1.3, 1.3, 1.3),
    1963: (1.1, 1.1, 1.1, 1.2),
    1964: (1.4, 1.5, 1.5, 1.6),
    1965: (1.7, 1.8, 1.9, 2.0),
    1966: (2.4, 2.7, 2.9, 3.1),
    1967: (3.0, 3.0, 3.1, 3.2),
    1968: (3.9, 4.2, 4.4, 4.6),
    1969: (4.7, 4.9, 5.0, 5.1),
    1970: (5.3, 5.3, 5.2, 5.2),
    1971: (5.2, 5.1, 4.9, 4.7),
    1972: (4.5, 4.3, 4.2, 4.2),
    1973: (4.7, 5.2, 5.7, 6.3),
    1974: (7.3, 8.5, 9.4, 10.2),
    1975: (10.5, 9.9, 9.1, 8.0),
    1976: (6.6, 6.1, 5.8, 5.6),
    1977: (5.9, 6.2, 6.3, 6.4),
    1978: (6.5, 7.0, 7.3, 7.7),
    1979: (8.0, 8.3, 8.5, 8.7),
    1980: (8.9, 9.1, 9.3, 9.6),
    1981: (9.7, 9.6, 9.4, 9.0),
    1982: (7.6, 6.9, 6.1, 5.3),
    1983: (4.6, 4.1, 3.9, 3.8),
    1984: (3.9, 3.8, 3.7, 3.6),
    1985: (3.4, 3.3, 3.1, 3.0),
    1986: (2.6, 2.3, 2.2, 2.1),
    1987: (2.4, 2.6, 2.8, 3.0),
    1988: (3.2, 3.4, 3.5, 3.6),
    1989: (3.8, 3.9, 3.9, 3.8),
    1990: (3.9, 3.9, 3.9, 3.9),
    1991: (3.8, 3.6, 3.4, 3.2),
    1992: (2.8, 2.5, 2.3, 2.2),
    1993: (2.3, 2.3, 2.2, 2.2),
    1994: (2.1, 2.1, 2.1, 2.1),
    1995: (2.2, 2.1, 2.1, 2.0),
    1996: (1.9, 1.8, 1.8, 1.8),
    1997: (1.8, 1.7, 1.7, 1.6),
    1998: (1.2, 1.1, 1.0, 1.0),
    1999: (1.3, 1.4, 1.5, 1.6),
    2000: (2.1, 2.3, 2.3, 2.4),
    2001: (2.4, 2.4, 2.3, 2.2),
    2002: (1.6, 1.5, 1.5, 1.6),
    2003: (1.9, 2.0, 2.0, 2.1),
    2004: (2.5, 2.7, 2.8, 2.9),
    2005: (3.1, 3.2, 3.3, 3.3),
    2006: (3.3, 3.2, 3.1, 2.9),
    2007: (2.8, 2.7, 2.6, 2.6),
    2008: (2.2, 2.0, 1.9, 1.7),
    2009: (1.2, 0.9, 0.7, 0.6),
    2010: (1.0, 1.1, 1.2, 1.3),
    2011: (1.9, 2.0, 2.1, 2.1),
    2012: (2.0, 1.9, 1.9, 1.8),
    2013: (1.7, 1.7, 1.7, 1.7),
    2014: (1.7, 1.8, 1.8, 1.8),
    2015: (1.2, 1.1, 1.0, 1.0),
    2016: (0.9, 1.0, 1.1, 1.3),
    2017: (1.9, 1.9, 1.9, 2.0),
    2018: (2.3, 2.4, 2.4, 2.4),
    2019: (1.9, None, None, None),
}

# Output gap, quarterly (percent of potential GDP), late-vintage flavor.
OUTPUT_GAP = {
    1953: (1.5, 1.0, 0.0, -1.5),
    1954: (-2.8, -3.0, -2.8, -2.0),
    1955: (-0.5, 0.3, 0.6, 0.7),
    1956: (0.4, 0.2, 0.2, 0.5),
    1957: (0.5, 0.2, 0.1, -1.2),
    1958: (-4.0, -4.0, -3.0, -2.0),
    1959: (-1.3, -0.4, -1.0, -0.8),
    1960: (-0.3, -1.0, -1.4, -2.5),
    1961: (-3.3, -2.8, -2.3, -1.5),
    1962: (-1.0, -0.9, -0.8, -0.9),
    1963: (-1.1, -0.9, -0.5, -0.5),
    1964: (0.0, 0.1, 0.3, 0.3),
    1965: (1.0, 1.2, 1.5, 2.5),
    1966: (3.3, 3.2, 3.2, 3.3),
    1967: (3.0, 2.5, 2.6, 2.6),
    1968: (3.2, 3.8, 3.7, 3.5),
    1969: (3.7, 3.5, 3.4, 2.7),
    1970: (1.8, 1.2, 0.9, -0.8),
    1971: (0.0, -0.2, -0.3, -0.5),
    1972: (0.0, 0.8, 1.0, 1.8),
    1973: (2.8, 2.7, 2.3, 2.4),
    1974: (1.2, 0.9, 0.0, -1.5),
    1975: (-5.3, -5.0, -4.2, -3.8),
    1976: (-3.2, -3.0, -2.8, -2.6),
    1977: (-2.2, -1.6, -1.0, -0.8),
    1978: (-0.8, 0.3, 0.4, 0.8),
    1979: (0.7, 0.2, 0.3, 0.1),
    1980: (0.0, -2.4, -2.8, -1.8),
    1981: (-0.8, -1.2, -0.9, -2.5),
    1982: (-4.5, -4.8, -5.5, -6.5),
    1983: (-6.0, -5.2, -4.3, -3.5),
    1984: (-1.8, -1.5, -1.4, -1.5),
    1985: (-1.8, -1.9, -1.9, -1.8),
    1986: (-1.9, -2.1, -2.2, -2.1),
    1987: (-2.0, -1.6, -1.1, -0.6),
    1988: (-0.4, -0.1, 0.1, 0.3),
    1989: (0.6, 0.6, 0.5, 0.3),
    1990: (0.5, 0.4, 0.0, -1.2),
    1991: (-1.9, -1.7, -1.6, -1.6),
    1992: (-1.7, -1.5, -1.3, -1.1),
    1993: (-1.4, -1.3, -1.2, -0.8),
    1994: (-0.7, -0.2, -0.1, 0.3),
    1995: (0.0, -0.3, -0.2, -0.1),
    1996: (-0.1, 0.5, 0.4, 0.6),
    1997: (0.5, 0.7, 1.0, 1.2),
    1998: (1.3, 1.2, 1.4, 1.7),
    1999: (1.6, 1.6, 1.8, 2.2),
    2000: (2.2, 2.6, 2.3, 2.1),
    2001: (1.5, 0.9, 0.1, -0.4),
    2002: (-0.8, -1.0, -1.2, -1.5),
    2003: (-1.9, -2.0, -1.5, -1.3),
    2004: (-1.1, -0.9, -0.8, -0.6),
    2005: (-0.4, -0.4, -0.2, -0.3),
    2006: (0.3, 0.2, 0.0, 0.2),
    2007: (0.2, 0.4, 0.4, 0.5),
    2008: (-0.1, -0.3, -1.3, -3.6),
    2009: (-4.9, -5.6, -5.5, -5.2),
    2010: (-4.6, -4.2, -4.0, -3.9),
    2011: (-3.9, -3.7, -3.5, -3.4),
    2012: (-3.1, -2.9, -2.8, -2.7),
    2013: (-2.5, -2.3, -2.1, -1.9),
    2014: (-1.6, -1.3, -1.1, -1.0),
    2015: (-0.8, -0.7, -0.6, -0.7),
    2016: (-0.8, -0.8, -0.7, -0.6),
    2017: (-0.5, -0.3, -0.2, 0.0),
    2018: (0.3, 0.5, 0.7, 0.8),
    2019: (0.9, None, None, None),
}

# Potential output trend: level at 1953Q1 and annual growth per segment.
POTENTIAL_START = 2700.0
POTENTIAL_SEGMENTS = [
    # (from year, annual growth percent)
    (1953, 3.7),
    (1965, 3.9),
    (1974, 3.1),
    (1982, 3.0),
    (1991, 3.1),
    (2002, 2.4),
    (2008, 1.5),
]


def quarters():
    for year in range(1953, 2020):
        for q in range(1, 5):
            if year == 2019 and q > 1:
                return
            yield year, q


def quarter_date(year, q):
    return f"{year}-{(q - 1) * 3 + 1:02d}-01"


def growth_rate(year):
    rate = POTENTIAL_SEGMENTS[0][1]
    for start, r in POTENTIAL_SEGMENTS:
        if year >= start:
            rate = r
    return rate


def potential_series():
    level = POTENTIAL_START
    out = {}
    for year, q in quarters():
        out[(year, q)] = level
        level *= (1.0 + growth_rate(year) / 100.0) ** 0.25
    return out


def write_quarterly(path, series_id, table, head_rows=()):
    lines = [f"DATE,{series_id}", *head_rows]
    for year, q in quarters():
        v = table.get(year, (None,) * 4)[q - 1]
        if v is not None:
            lines.append(f"{quarter_date(year, q)},{v:.1f}")
    Path(path).write_text("\n".join(lines) + "\n")


def main(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    potential = potential_series()

    ff_lines = ["DATE,FEDFUNDS"]
    for year, q in quarters():
        v = FEDFUNDS.get(year, (None,) * 4)[q - 1]
        if v is None:
            continue
        for m in range((q - 1) * 3 + 1, (q - 1) * 3 + 4):
            ff_lines.append(f"{year}-{m:02d}-01,{v:.2f}")
    (outdir / "fedfunds.csv").write_text("\n".join(ff_lines) + "\n")

    write_quarterly(outdir / "cpi_inflation.csv", "CPIINFL", INFLATION_CPI,
                    head_rows=["1952-10-01,."])
    write_quarterly(outdir / "gdpdef_inflation.csv", "DEFLINFL",
                    INFLATION_DEFLATOR)

    gdp_lines = ["DATE,GDPC1"]
    pot_lines = ["DATE,GDPPOT", "1952-10-01,."]
    for year, q in quarters():
        gap = OUTPUT_GAP.get(year, (None,) * 4)[q - 1]
        if gap is None:
            continue
        pot = potential[(year, q)]
        gdp = pot * (1.0 + gap / 100.0)
        gdp_lines.append(f"{quarter_date(year, q)},{gdp:.1f}")
        pot_lines.append(f"{quarter_date(year, q)},{pot:.1f}")
    (outdir / "real_gdp.csv").write_text("\n".join(gdp_lines) + "\n")
    (outdir / "potential_gdp.csv").write_text("\n".join(pot_lines) + "\n")

    (outdir / "replication.cfg").write_text(
        "# sample configuration for the bundled series (paths relative to\n"
        "# the directory fedrule runs from); the deflator-flavored measure\n"
        "# tracks the reference estimates more closely than the CPI one\n"
        "fedfunds_series_path = data/fedfunds.csv\n"
        "inflation_series_path = data/gdpdef_inflation.csv\n"
        "gdp_series_path = data/real_gdp.csv\n"
        "potential_gdp_series_path = data/potential_gdp.csv\n"
        "r_star = 2\n"
        "pi_star = 2\n"
    )
    print(f"wrote sample series to {outdir}/")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).parent.parent / "data")
